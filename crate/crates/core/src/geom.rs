//! Exact planar points, orientation, hulls and convex-position tests.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Rat};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: impl Into<Rat>, y: impl Into<Rat>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Small-integer convenience constructor, `(xn/xd, yn/yd)`.
    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point::new(Rat::new(xn, xd), Rat::new(yn, yd))
    }

    pub fn origin() -> Self {
        Point::new(Rat::zero(), Rat::zero())
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, s: &Rat) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let half = Rat::new(1, 2);
        self.add(o).scale(&half)
    }

    /// `2·center − self`.
    pub fn reflect(&self, center: &Point) -> Point {
        let two = Rat::from_int(2);
        center.scale(&two).sub(self)
    }

    pub fn cross(&self, o: &Point) -> Rat {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Point) -> Rat {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm2(&self) -> Rat {
        self.dot(self)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sign of `(q − p) × (r − p)`: +1 for a left turn, −1 for a right turn.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i32 {
    q.sub(p).cross(&r.sub(p)).signum()
}

/// A finite set of distinct points with optional distinct labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    labels: Option<Vec<String>>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, Error> {
        Self::build(points, None)
    }

    pub fn with_labels(points: Vec<Point>, labels: Vec<String>) -> Result<Self, Error> {
        Self::build(points, Some(labels))
    }

    fn build(points: Vec<Point>, labels: Option<Vec<String>>) -> Result<Self, Error> {
        let mut sorted: Vec<&Point> = points.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
        if let Some(ls) = &labels {
            if ls.len() != points.len() {
                return Err(Error::Invalid(format!(
                    "{} labels for {} points",
                    ls.len(),
                    points.len()
                )));
            }
            let mut s: Vec<&String> = ls.iter().collect();
            s.sort();
            if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::Invalid(format!("duplicate label {:?}", w[0])));
            }
        }
        Ok(PointSet { points, labels })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Subset by indices, keeping labels. Indices must be distinct.
    pub fn subset(&self, idx: &[usize]) -> PointSet {
        PointSet {
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
            labels: self
                .labels
                .as_ref()
                .map(|l| idx.iter().map(|&i| l[i].clone()).collect()),
        }
    }

    pub fn without(&self, skip: usize) -> PointSet {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| i != skip).collect();
        self.subset(&idx)
    }

    /// Display name of point `i`: its label, or its index.
    pub fn name(&self, i: usize) -> String {
        self.label(i).map_or_else(|| format!("#{i}"), str::to_owned)
    }

    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<PointSet, Error> {
        Self::build(self.points.iter().map(f).collect(), self.labels.clone())
    }
}

/// `{2O − x : x ∈ X}` in input order. Reflection is injective, so the result
/// is again a valid point set; labels are kept.
pub fn reflect_set(set: &PointSet, center: &Point) -> PointSet {
    PointSet {
        points: set.points.iter().map(|p| p.reflect(center)).collect(),
        labels: set.labels.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullStatus {
    Vertex,
    OnEdge,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullClassification {
    /// Strictly convex hull in CCW order, starting at the lexicographically
    /// smallest vertex.
    pub hull: Vec<Point>,
    pub status: Vec<HullStatus>,
}

/// Monotone chain hull plus a status for every input point. Duplicate input
/// points are tolerated and share a status.
pub fn convex_hull(points: &[Point]) -> HullClassification {
    let mut pts: Vec<&Point> = points.iter().collect();
    pts.sort();
    pts.dedup();

    let hull: Vec<Point> = if pts.len() <= 2 {
        pts.iter().map(|&p| p.clone()).collect()
    } else {
        let mut lower: Vec<&Point> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && orientation(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<&Point> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && orientation(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.into_iter().chain(upper).cloned().collect()
    };

    let status = points.iter().map(|p| classify(&hull, p)).collect();
    HullClassification { hull, status }
}

// Only valid for points known to lie in conv(hull).
fn classify(hull: &[Point], p: &Point) -> HullStatus {
    if hull.iter().any(|h| h == p) {
        return HullStatus::Vertex;
    }
    if hull.len() <= 2 {
        return HullStatus::OnEdge;
    }
    let n = hull.len();
    let on_edge = (0..n).any(|i| orientation(&hull[i], &hull[(i + 1) % n], p) == 0);
    if on_edge {
        HullStatus::OnEdge
    } else {
        HullStatus::Interior
    }
}

/// Every point is a hull vertex.
pub fn in_strict_convex_position(points: &[Point]) -> bool {
    convex_hull(points)
        .status
        .iter()
        .all(|&s| s == HullStatus::Vertex)
}

/// No point lies strictly inside the hull.
pub fn in_weak_convex_position(points: &[Point]) -> bool {
    convex_hull(points)
        .status
        .iter()
        .all(|&s| s != HullStatus::Interior)
}

/// Orders direction vectors by polar angle in `[0, 2π)`.
pub fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let half = |p: &Point| -> u8 {
        if p.y.signum() > 0 || (p.y.is_zero() && p.x.signum() > 0) {
            0
        } else {
            1
        }
    };
    half(u)
        .cmp(&half(v))
        .then_with(|| 0.cmp(&u.cross(v).signum()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn square() -> Vec<Point> {
        vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), -1);
    }

    #[test]
    fn hull_square_with_center() {
        let mut pts = square();
        pts.push(Point::frac(1, 2, 1, 2));
        let h = convex_hull(&pts);
        assert_eq!(h.hull, square());
        assert_eq!(&h.status[..4], &[HullStatus::Vertex; 4]);
        assert_eq!(h.status[4], HullStatus::Interior);
        assert!(!in_weak_convex_position(&pts));
    }

    #[test]
    fn hull_square_with_edge_midpoint() {
        let mut pts = square();
        pts.push(Point::frac(1, 2, 0, 1));
        let h = convex_hull(&pts);
        assert_eq!(h.hull.len(), 4);
        assert_eq!(h.status[4], HullStatus::OnEdge);
        assert!(!in_strict_convex_position(&pts));
        assert!(in_weak_convex_position(&pts));
    }

    #[test]
    fn hull_starts_at_lexicographic_minimum() {
        let pts = vec![p(3, 1), p(0, 2), p(1, -1), p(2, 3), p(0, 0)];
        let h = convex_hull(&pts);
        assert_eq!(h.hull[0], p(0, 0));
        assert_eq!(h.hull, vec![p(0, 0), p(1, -1), p(3, 1), p(2, 3), p(0, 2)]);
    }

    #[test]
    fn collinear_input_gives_segment_hull() {
        let pts = vec![p(2, 2), p(0, 0), p(1, 1), p(3, 3)];
        let h = convex_hull(&pts);
        assert_eq!(h.hull, vec![p(0, 0), p(3, 3)]);
        assert_eq!(
            h.status,
            vec![HullStatus::OnEdge, HullStatus::Vertex, HullStatus::OnEdge, HullStatus::Vertex]
        );
    }

    #[test]
    fn tiny_inputs() {
        assert_eq!(convex_hull(&[p(1, 1)]).status, vec![HullStatus::Vertex]);
        assert!(in_strict_convex_position(&[p(0, 0), p(1, 0), p(0, 1)]));
    }

    #[test]
    fn two_collinear_triples_are_weakly_convex() {
        let pts = vec![p(0, 0), p(1, 0), p(2, 0), p(0, 1), p(1, 1), p(2, 1)];
        assert!(in_weak_convex_position(&pts));
        assert!(!in_strict_convex_position(&pts));
    }

    #[test]
    fn reflection() {
        let x = PointSet::new(vec![p(0, 0), p(1, 0)]).unwrap();
        assert_eq!(reflect_set(&x, &p(0, 0)).points(), &[p(0, 0), p(-1, 0)]);
        let sq = PointSet::new(square()).unwrap();
        let mut r = reflect_set(&sq, &Point::frac(1, 2, 1, 2)).points().to_vec();
        r.sort();
        let mut s = square();
        s.sort();
        assert_eq!(r, s);
    }

    #[test]
    fn point_set_validation() {
        assert!(matches!(PointSet::new(vec![p(0, 0), p(0, 0)]), Err(Error::DuplicatePoint(_))));
        assert!(PointSet::with_labels(vec![p(0, 0)], vec![]).is_err());
        assert!(PointSet::with_labels(vec![p(0, 0), p(1, 0)], vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn angle_order() {
        let mut v = vec![p(0, -1), p(-1, 0), p(1, 1), p(1, 0), p(-1, -1), p(0, 1)];
        v.sort_by(angle_cmp);
        assert_eq!(v, vec![p(1, 0), p(1, 1), p(0, 1), p(-1, 0), p(-1, -1), p(0, -1)]);
    }
}
