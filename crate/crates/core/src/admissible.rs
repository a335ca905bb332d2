//! Admissible symmetry centers.
//!
//! `O` is an admissible center of `X` when `X ∪ (2O − X)` is in (weak) convex
//! position. For a triangle the admissible set is the union of four closed
//! convex cells cut out by the three midlines: the medial triangle and the
//! three vertical angles at the side midpoints. For a larger set in convex
//! position the admissible set is the intersection of the triangle sets,
//! either over all triples or only over the tallest triangles.

use itertools::Itertools;

use crate::geom::{convex_hull, in_strict_convex_position, in_weak_convex_position, orientation};
use crate::region::{Cell, HalfPlane, Region};
use crate::{Error, Point, PointSet, Rat};

/// The four labeled parts of a triangle's admissible set. `parts[i]` sits at
/// the midpoint of the side opposite vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleAdmissible {
    pub vertices: [Point; 3],
    pub center_part: Cell,
    pub parts: [Cell; 3],
}

impl TriangleAdmissible {
    pub fn to_region(&self) -> Region {
        let mut cells = vec![self.center_part.clone()];
        cells.extend(self.parts.iter().cloned());
        Region::from_cells(cells)
    }
}

pub fn triangle_admissible(a: &Point, b: &Point, c: &Point) -> Result<TriangleAdmissible, Error> {
    if orientation(a, b, c) == 0 {
        return Err(Error::CollinearInput);
    }
    let v = [a.clone(), b.clone(), c.clone()];
    // mid[i]: midpoint of the side opposite v[i].
    let mid: Vec<Point> = (0..3).map(|i| v[(i + 1) % 3].midpoint(&v[(i + 2) % 3])).collect();
    let centroid = a.add(b).add(c).scale(&Rat::new(1, 3));
    // Midline parallel to the side opposite v[i] passes through mid[i+1], mid[i+2];
    // inward[i] is its closed side holding the centroid.
    let inward: Vec<HalfPlane> = (0..3)
        .map(|i| HalfPlane::bounded_by(&mid[(i + 1) % 3], &mid[(i + 2) % 3], &centroid))
        .collect();
    let center_part = Cell::new(inward.clone());
    let parts = [0, 1, 2].map(|i| {
        // The two midlines through mid[i] are those not indexed by i.
        Cell::new(vec![inward[(i + 1) % 3].flipped(), inward[(i + 2) % 3].flipped()])
    });
    Ok(TriangleAdmissible {
        vertices: v,
        center_part,
        parts,
    })
}

/// Direct check: reflect through `center`, merge, and test for weak convex
/// position.
pub fn is_admissible_center(set: &PointSet, center: &Point) -> bool {
    is_admissible_center_pts(set.points(), center)
}

pub(crate) fn is_admissible_center_pts(points: &[Point], center: &Point) -> bool {
    let mut all: Vec<Point> = points.to_vec();
    all.extend(points.iter().map(|p| p.reflect(center)));
    all.sort();
    all.dedup();
    in_weak_convex_position(&all)
}

fn require_strictly_convex(set: &PointSet) -> Result<(), Error> {
    if set.len() < 3 {
        return Err(Error::TooFewPoints(set.len()));
    }
    if !in_strict_convex_position(set.points()) {
        return Err(Error::NotStrictlyConvex);
    }
    Ok(())
}

fn intersect_triangles<'a>(triangles: impl Iterator<Item = [&'a Point; 3]>) -> Result<Region, Error> {
    let mut region = Region::whole_plane();
    for [a, b, c] in triangles {
        region = region.intersect(&triangle_admissible(a, b, c)?.to_region());
        if region.is_empty() {
            break;
        }
    }
    Ok(region)
}

/// Intersection over every 3-subset.
pub fn admissible_region_all_triples(set: &PointSet) -> Result<Region, Error> {
    require_strictly_convex(set)?;
    let pts = set.points();
    intersect_triangles(
        (0..pts.len())
            .combinations(3)
            .map(|t| [&pts[t[0]], &pts[t[1]], &pts[t[2]]]),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TallestTriangle {
    /// Hull edge in CCW order.
    pub edge: (Point, Point),
    pub apex: Point,
}

/// For every CCW hull edge, one entry per point farthest from the edge's
/// line, ties included. Edges follow the canonical hull order and apexes
/// follow it from the edge onward.
pub fn tallest_triangles(set: &PointSet) -> Result<Vec<TallestTriangle>, Error> {
    require_strictly_convex(set)?;
    let hull = convex_hull(set.points()).hull;
    let n = hull.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (a, b) = (&hull[i], &hull[(i + 1) % n]);
        let dir = b.sub(a);
        let others: Vec<(&Point, Rat)> = (2..n)
            .map(|k| {
                let c = &hull[(i + k) % n];
                (c, dir.cross(&c.sub(a)))
            })
            .collect();
        let best = others.iter().map(|(_, h)| h).max().cloned().expect("at least one apex");
        for (c, h) in &others {
            if *h == best {
                out.push(TallestTriangle {
                    edge: (a.clone(), b.clone()),
                    apex: (*c).clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Intersection over the tallest triangles only.
pub fn admissible_region_tallest(set: &PointSet) -> Result<Region, Error> {
    let tall = tallest_triangles(set)?;
    intersect_triangles(tall.iter().map(|t| [&t.edge.0, &t.edge.1, &t.apex]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn hp(a: i64, b: i64, c: i64) -> HalfPlane {
        HalfPlane::from_ints(a, b, c).unwrap()
    }

    fn same_semantics(x: &Cell, y: &Cell) -> bool {
        x.is_subset_of(y) && y.is_subset_of(x)
    }

    #[test]
    fn right_triangle_parts() {
        let (a, b, c) = (p(0, 0), p(2, 0), p(0, 2));
        let t = triangle_admissible(&a, &b, &c).unwrap();
        // center: x ≤ 1, y ≤ 1, x + y ≥ 1
        let center = Cell::new(vec![hp(1, 0, 1), hp(0, 1, 1), hp(-1, -1, -1)]);
        assert!(same_semantics(&t.center_part, &center));
        assert!(t.center_part.contains(&Point::frac(2, 3, 2, 3)));
        // a-part: x ≥ 1, y ≥ 1; b-part: y ≥ 1, x + y ≤ 1; c-part: x ≥ 1, x + y ≤ 1
        assert!(same_semantics(&t.parts[0], &Cell::new(vec![hp(-1, 0, -1), hp(0, -1, -1)])));
        assert!(same_semantics(&t.parts[1], &Cell::new(vec![hp(0, -1, -1), hp(1, 1, 1)])));
        assert!(same_semantics(&t.parts[2], &Cell::new(vec![hp(-1, 0, -1), hp(1, 1, 1)])));
        let set = PointSet::new(vec![a, b.clone(), c]).unwrap();
        for cell in std::iter::once(&t.center_part).chain(&t.parts) {
            let w = cell.feasible_point().unwrap();
            assert!(is_admissible_center(&set, &w), "{w}");
        }
        assert!(!t.to_region().contains(&b));
        assert!(!is_admissible_center(&set, &b));
    }

    #[test]
    fn midpoint_of_ac_is_in_b_part() {
        let (a, b, c) = (p(0, 0), p(5, 1), p(2, 4));
        let t = triangle_admissible(&a, &b, &c).unwrap();
        assert!(t.parts[1].contains(&a.midpoint(&c)));
    }

    #[test]
    fn collinear_triangle_rejected() {
        assert_eq!(triangle_admissible(&p(0, 0), &p(1, 1), &p(2, 2)), Err(Error::CollinearInput));
    }

    #[test]
    fn oracle_examples() {
        let t = PointSet::new(vec![p(0, 0), p(1, 0), p(0, 1)]).unwrap();
        assert!(is_admissible_center(&t, &Point::frac(1, 3, 1, 3)));
        assert!(!is_admissible_center(&t, &p(0, 0)));
        let para = PointSet::new(vec![p(0, 0), p(2, 0), p(3, 1), p(1, 1)]).unwrap();
        assert!(is_admissible_center(&para, &Point::frac(3, 2, 1, 2)));
    }

    #[test]
    fn tallest_counts() {
        let tri = PointSet::new(vec![p(0, 0), p(1, 0), p(0, 1)]).unwrap();
        let t = tallest_triangles(&tri).unwrap();
        assert_eq!(t.len(), 3);
        for tt in &t {
            let mut v = vec![tt.edge.0.clone(), tt.edge.1.clone(), tt.apex.clone()];
            v.sort();
            assert_eq!(v, vec![p(0, 0), p(0, 1), p(1, 0)]);
        }
        let sq = PointSet::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let t = tallest_triangles(&sq).unwrap();
        assert_eq!(t.len(), 8);
        assert_eq!(t[0].edge, (p(0, 0), p(1, 0)));
        assert_eq!(t[0].apex, p(1, 1));
        assert_eq!(t[1].apex, p(0, 1));
    }

    #[test]
    fn region_algorithms_reject_bad_input() {
        let weak = PointSet::new(vec![p(0, 0), p(1, 0), p(2, 0), p(1, 1)]).unwrap();
        assert_eq!(admissible_region_all_triples(&weak), Err(Error::NotStrictlyConvex));
        assert_eq!(admissible_region_tallest(&weak), Err(Error::NotStrictlyConvex));
        let two = PointSet::new(vec![p(0, 0), p(1, 0)]).unwrap();
        assert_eq!(tallest_triangles(&two), Err(Error::TooFewPoints(2)));
    }

    #[test]
    fn square_region_is_two_lines() {
        let sq = PointSet::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let half = Rat::new(1, 2);
        for r in [admissible_region_all_triples(&sq).unwrap(), admissible_region_tallest(&sq).unwrap()] {
            assert!(!r.is_empty());
            for c in r.cells() {
                assert!(c.is_degenerate());
            }
            for k in -5..=5 {
                let t = Rat::new(k, 3);
                assert!(r.contains(&Point::new(half.clone(), t.clone())));
                assert!(r.contains(&Point::new(t.clone(), half.clone())));
                if k != 0 {
                    let off = &half + Rat::new(1, 7);
                    assert!(!r.contains(&Point::new(off, &t + Rat::new(1, 11))));
                }
            }
        }
    }
}
