//! Closed half-planes, convex cells and finite unions of cells.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::fm::{self, Ineq};
use crate::{Error, Point, Rat};

/// `{(x, y) : a·x + b·y ≤ c}` stored as a primitive integer triple, so that
/// positive multiples share one representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfPlane {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl HalfPlane {
    pub fn new(a: &Rat, b: &Rat, c: &Rat) -> Result<Self, Error> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Invalid("half-plane with zero normal".into()));
        }
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: &Rat| r.numer() * (&l / r.denom());
        Ok(Self::primitive(scale(a), scale(b), scale(c)))
    }

    pub fn from_ints(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self, Error> {
        let (a, b, c) = (a.into(), b.into(), c.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::Invalid("half-plane with zero normal".into()));
        }
        Ok(Self::primitive(a, b, c))
    }

    fn primitive(a: BigInt, b: BigInt, c: BigInt) -> Self {
        let g = a.gcd(&b).gcd(&c);
        if g.is_one() {
            HalfPlane { a, b, c }
        } else {
            HalfPlane {
                a: a / &g,
                b: b / &g,
                c: c / &g,
            }
        }
    }

    /// Closed side of the line through `p` and `q` that contains `keep`.
    /// `keep` must not lie on the line.
    pub fn bounded_by(p: &Point, q: &Point, keep: &Point) -> Self {
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = &a * &p.x + &b * &p.y;
        let h = HalfPlane::new(&a, &b, &c).expect("distinct points");
        match h.eval(keep).signum() {
            s if s < 0 => h,
            s if s > 0 => h.flipped(),
            _ => panic!("reference point {keep} lies on the line"),
        }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `a·x + b·y − c`; non-positive exactly on the half-plane.
    pub fn eval(&self, p: &Point) -> Rat {
        Rat::from_int(self.a.clone()) * &p.x + Rat::from_int(self.b.clone()) * &p.y - Rat::from_int(self.c.clone())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).signum() <= 0
    }

    /// The opposite closed half-plane, sharing the boundary line.
    pub fn flipped(&self) -> Self {
        HalfPlane {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
        }
    }

    fn closed(&self) -> Ineq {
        Ineq {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            strict: false,
        }
    }

    /// `a·x + b·y > c`, the open complement.
    fn violated(&self) -> Ineq {
        Ineq {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            strict: true,
        }
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y <= {}", self.a, self.b, self.c)
    }
}

impl fmt::Debug for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Intersection of finitely many closed half-planes. The empty list is the
/// whole plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cell {
    constraints: Vec<HalfPlane>,
}

impl Cell {
    pub fn new(mut constraints: Vec<HalfPlane>) -> Self {
        constraints.sort();
        constraints.dedup();
        Cell { constraints }
    }

    pub fn whole_plane() -> Self {
        Cell::default()
    }

    pub fn constraints(&self) -> &[HalfPlane] {
        &self.constraints
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|h| h.contains(p))
    }

    fn system(&self) -> Vec<Ineq> {
        self.constraints.iter().map(HalfPlane::closed).collect()
    }

    pub fn is_empty(&self) -> bool {
        !fm::feasible(&self.system())
    }

    /// An exact member of the cell, interior when the cell has interior.
    pub fn feasible_point(&self) -> Option<Point> {
        let p = fm::solve(&self.system());
        if let Some(p) = &p {
            debug_assert!(self.contains(p), "witness {p} escapes {self:?}");
        }
        p
    }

    /// Whether every point of the cell satisfies `h`.
    pub fn within(&self, h: &HalfPlane) -> bool {
        let mut sys = self.system();
        sys.push(h.violated());
        !fm::feasible(&sys)
    }

    pub fn is_subset_of(&self, other: &Cell) -> bool {
        other.constraints.iter().all(|h| self.within(h))
    }

    /// Drops every constraint implied by the ones that remain.
    pub fn prune(&self) -> Cell {
        let mut kept = self.constraints.clone();
        let mut i = 0;
        while i < kept.len() {
            let mut sys: Vec<Ineq> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.closed())
                .collect();
            sys.push(kept[i].violated());
            if fm::feasible(&sys) {
                i += 1;
            } else {
                kept.remove(i);
            }
        }
        Cell { constraints: kept }
    }

    pub fn intersect(&self, other: &Cell) -> Cell {
        let all = self
            .constraints
            .iter()
            .chain(&other.constraints)
            .cloned()
            .collect();
        Cell::new(all).prune()
    }

    /// No interior: the cell is empty, a segment, a ray, a line or a point.
    pub fn is_degenerate(&self) -> bool {
        let strict: Vec<Ineq> = self
            .constraints
            .iter()
            .map(|h| Ineq {
                strict: true,
                ..h.closed()
            })
            .collect();
        !fm::feasible(&strict)
    }
}

pub fn cell_is_empty(c: &Cell) -> bool {
    c.is_empty()
}

pub fn cell_feasible_point(c: &Cell) -> Option<Point> {
    c.feasible_point()
}

pub fn cell_intersect(c1: &Cell, c2: &Cell) -> Cell {
    c1.intersect(c2)
}

/// Finite union of nonempty cells, kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Region {
    cells: Vec<Cell>,
}

impl Region {
    pub fn empty() -> Self {
        Region::default()
    }

    pub fn whole_plane() -> Self {
        Region {
            cells: vec![Cell::whole_plane()],
        }
    }

    /// Drops empty cells and sorts the rest.
    pub fn from_cells(cells: Vec<Cell>) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().filter(|c| !c.is_empty()).collect();
        cells.sort();
        cells.dedup();
        Region { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.cells.iter().any(|c| c.contains(p))
    }

    pub fn witness(&self) -> Option<Point> {
        self.cells.first().and_then(Cell::feasible_point)
    }

    /// Pairwise cell intersections. Cells contained in another cell of the
    /// result are dropped, which leaves the union unchanged.
    pub fn intersect(&self, other: &Region) -> Region {
        let pairs: Vec<(&Cell, &Cell)> = self
            .cells
            .iter()
            .flat_map(|a| other.cells.iter().map(move |b| (a, b)))
            .collect();
        let mut cells: Vec<(Cell, Point)> = pairs
            .par_iter()
            .filter_map(|(a, b)| {
                let c = a.intersect(b);
                c.feasible_point().map(|w| (c, w))
            })
            .collect();
        cells.sort_by(|x, y| x.0.cmp(&y.0));
        cells.dedup_by(|x, y| x.0 == y.0);
        Region {
            cells: drop_subsumed(cells),
        }
    }
}

fn drop_subsumed(cells: Vec<(Cell, Point)>) -> Vec<Cell> {
    let n = cells.len();
    let keep: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|i| {
            let (ci, wi) = &cells[i];
            !(0..n).any(|j| {
                let (cj, wj) = &cells[j];
                if i == j || !cj.contains(wi) || !ci.is_subset_of(cj) {
                    return false;
                }
                // Equal cells: keep the first.
                j < i || !ci.contains(wj) || !cj.is_subset_of(ci)
            })
        })
        .collect();
    cells
        .into_iter()
        .zip(keep)
        .filter_map(|((c, _), k)| k.then_some(c))
        .collect()
}

pub fn region_intersect(r1: &Region, r2: &Region) -> Region {
    r1.intersect(r2)
}

pub fn region_contains(r: &Region, p: &Point) -> bool {
    r.contains(p)
}

pub fn region_witness(r: &Region) -> Option<Point> {
    r.witness()
}

/// Normal vector `(a, b)` of a half-plane's boundary as a point.
pub fn normal(h: &HalfPlane) -> Point {
    Point::new(Rat::from_int(h.a().clone()), Rat::from_int(h.b().clone()))
}

/// Intersection of the boundary lines of two half-planes, if not parallel.
pub fn boundary_crossing(h: &HalfPlane, g: &HalfPlane) -> Option<Point> {
    let det = h.a() * g.b() - h.b() * g.a();
    if det.is_zero() {
        return None;
    }
    let x = h.c() * g.b() - h.b() * g.c();
    let y = h.a() * g.c() - h.c() * g.a();
    Some(Point::new(Rat::new(x, det.clone()), Rat::new(y, det)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(a: i64, b: i64, c: i64) -> HalfPlane {
        HalfPlane::from_ints(a, b, c).unwrap()
    }

    fn simplex() -> Cell {
        Cell::new(vec![hp(-1, 0, 0), hp(0, -1, 0), hp(1, 1, 1)])
    }

    #[test]
    fn normalization_positive_multiples() {
        assert_eq!(hp(2, 4, 6), hp(1, 2, 3));
        assert_ne!(hp(-2, -4, -6), hp(1, 2, 3));
        let h = HalfPlane::new(&Rat::new(1, 2), &Rat::new(1, 3), &Rat::new(5, 6)).unwrap();
        assert_eq!(h, hp(3, 2, 5));
        assert!(HalfPlane::from_ints(0, 0, 1).is_err());
    }

    #[test]
    fn emptiness_examples() {
        assert!(Cell::new(vec![hp(1, 0, 1), hp(-1, 0, -2)]).is_empty());
        assert!(!simplex().is_empty());
    }

    #[test]
    fn witness_examples() {
        let p = simplex().feasible_point().unwrap();
        assert!(p.x.signum() > 0 && p.y.signum() > 0 && &p.x + &p.y < Rat::one());
        assert!(Cell::new(vec![hp(1, 0, 1), hp(-1, 0, -2)]).feasible_point().is_none());
        let line = Cell::new(vec![hp(1, 0, 0), hp(-1, 0, 0), hp(0, 1, 5)]);
        let p = line.feasible_point().unwrap();
        assert!(p.x.is_zero() && p.y <= Rat::from_int(5));
        assert!(line.is_degenerate());
        assert!(!simplex().is_degenerate());
    }

    #[test]
    fn intersect_examples() {
        let c = simplex();
        assert_eq!(c.intersect(&Cell::whole_plane()), c.prune());
        let r = Cell::new(vec![hp(1, 0, 1)]).intersect(&Cell::new(vec![hp(1, 0, 3)]));
        assert_eq!(r.constraints(), &[hp(1, 0, 1)]);
        let strips = Cell::new(vec![hp(1, 0, 1), hp(-1, 0, 0)]).intersect(&Cell::new(vec![hp(1, 0, 5), hp(-1, 0, -4)]));
        assert!(strips.is_empty());
    }

    #[test]
    fn region_basics() {
        let r = Region::from_cells(vec![simplex()]);
        assert!(r.intersect(&Region::empty()).is_empty());
        assert!(!Region::empty().contains(&Point::origin()));
        assert!(Region::whole_plane().contains(&Point::new(17, -3)));
        assert!(Region::empty().witness().is_none());
        assert_eq!(Region::whole_plane().witness(), Region::whole_plane().witness());
        let same = r.intersect(&Region::whole_plane());
        for (x, y) in [(0, 0), (1, 0), (1, 1), (-1, 0)] {
            assert_eq!(same.contains(&Point::new(x, y)), r.contains(&Point::new(x, y)));
        }
    }

    #[test]
    fn subsumed_cells_are_dropped() {
        let big = Region::from_cells(vec![Cell::new(vec![hp(1, 0, 10)]), Cell::new(vec![hp(1, 0, 2)])]);
        let r = big.intersect(&Region::whole_plane());
        assert_eq!(r.cells().len(), 1);
        let twins = Region::from_cells(vec![Cell::new(vec![hp(1, 0, 0)]), Cell::new(vec![hp(-1, 0, 0)])])
            .intersect(&Region::from_cells(vec![Cell::new(vec![hp(1, 0, 0), hp(-1, 0, 0)])]));
        assert_eq!(twins.cells().len(), 1);
    }

    #[test]
    fn crossing() {
        assert_eq!(boundary_crossing(&hp(1, 0, 2), &hp(0, 1, 3)), Some(Point::new(2, 3)));
        assert_eq!(boundary_crossing(&hp(1, 0, 2), &hp(2, 0, 3)), None);
    }
}
