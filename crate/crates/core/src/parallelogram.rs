//! The admissible set of a parallelogram's vertices is the pair of lines
//! through its center parallel to its sides. This module checks that claim
//! exactly for a concrete parallelogram.

use crate::admissible::admissible_region_all_triples;
use crate::geom::orientation;
use crate::region::{Cell, HalfPlane, Region};
use crate::{Error, Point, PointSet, Rat};

/// A line `{center + t·dir}`.
#[derive(Clone, Debug)]
pub struct Line {
    pub center: Point,
    pub dir: Point,
}

impl Line {
    pub fn at(&self, t: &Rat) -> Point {
        self.center.add(&self.dir.scale(t))
    }

    /// The two closed half-planes whose intersection is the line.
    fn sides(&self) -> [HalfPlane; 2] {
        let n = Point::new(-&self.dir.y, self.dir.x.clone());
        let c = n.dot(&self.center);
        let h = HalfPlane::new(&n.x, &n.y, &c).expect("nonzero direction");
        [h.flipped(), h]
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.dir.cross(&p.sub(&self.center)).is_zero()
    }

    pub fn contains_cell(&self, cell: &Cell) -> bool {
        self.sides().iter().all(|h| cell.within(h))
    }

    /// Parameter range `{t : center + t·dir ∈ cell}` as closed bounds, `None`
    /// meaning unbounded; `None` overall when the trace is empty.
    fn trace(&self, cell: &Cell) -> Option<(Option<Rat>, Option<Rat>)> {
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for h in cell.constraints() {
            let a = Rat::from_int(h.a().clone());
            let b = Rat::from_int(h.b().clone());
            let coef = &a * &self.dir.x + &b * &self.dir.y;
            let rhs = Rat::from_int(h.c().clone()) - (&a * &self.center.x + &b * &self.center.y);
            match coef.signum() {
                0 if rhs.signum() < 0 => return None,
                0 => {}
                s => {
                    let t = rhs / coef;
                    if s > 0 {
                        hi = Some(hi.map_or(t.clone(), |v| v.min(t)));
                    } else {
                        lo = Some(lo.map_or(t.clone(), |v| v.max(t)));
                    }
                }
            }
        }
        match (&lo, &hi) {
            (Some(l), Some(h)) if l > h => None,
            _ => Some((lo, hi)),
        }
    }

    /// Whether the traces of `cells` cover the entire line.
    fn covered_by(&self, cells: &[Cell]) -> bool {
        let mut spans: Vec<(Option<Rat>, Option<Rat>)> = cells.iter().filter_map(|c| self.trace(c)).collect();
        // None lower bounds (−∞) sort first.
        spans.sort_by(|x, y| x.0.cmp(&y.0));
        let mut reach: Option<Option<Rat>> = None; // None: nothing covered yet; Some(None): +∞
        for (lo, hi) in spans {
            match (&reach, &lo) {
                (None, Some(_)) => return false,
                (None, None) => reach = Some(hi),
                (Some(None), _) => return true,
                (Some(Some(r)), Some(l)) if l > r => return false,
                (Some(Some(r)), _) => {
                    let r = r.clone();
                    reach = Some(hi.map(|h| h.max(r)));
                }
            }
        }
        matches!(reach, Some(None))
    }
}

/// The two lines through the center of `abcd` parallel to its sides.
pub fn parallelogram_lines(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<[Line; 2], Error> {
    if a.add(c) != b.add(d) || orientation(a, b, c) == 0 {
        return Err(Error::NotParallelogram);
    }
    let center = a.midpoint(c);
    Ok([
        Line {
            center: center.clone(),
            dir: b.sub(a),
        },
        Line { center, dir: d.sub(a) },
    ])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelogramCheck {
    pub cells_on_lines: bool,
    pub lines_covered: bool,
    pub samples_agree: bool,
}

impl ParallelogramCheck {
    pub fn holds(&self) -> bool {
        self.cells_on_lines && self.lines_covered && self.samples_agree
    }
}

pub fn check_parallelogram_lemma(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<ParallelogramCheck, Error> {
    let lines = parallelogram_lines(a, b, c, d)?;
    let set = PointSet::new(vec![a.clone(), b.clone(), c.clone(), d.clone()])?;
    let region = admissible_region_all_triples(&set)?;

    let cells_on_lines = !region.is_empty()
        && region.cells().iter().all(|cell| {
            cell.is_degenerate()
                && lines.iter().any(|l| l.contains_cell(cell))
                && cell.feasible_point().is_some_and(|w| lines.iter().any(|l| l.contains(&w)))
        });
    let lines_covered = lines.iter().all(|l| l.covered_by(region.cells()));
    let samples_agree = sample_agreement(&region, &lines);

    Ok(ParallelogramCheck {
        cells_on_lines,
        lines_covered,
        samples_agree,
    })
}

pub fn verify_parallelogram_lemma(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<bool, Error> {
    Ok(check_parallelogram_lemma(a, b, c, d)?.holds())
}

// 50 points on the lines and 50 off them, at fixed rational parameters.
fn sample_agreement(region: &Region, lines: &[Line; 2]) -> bool {
    let param = |i: i64| Rat::new(7 * (i - 25), 3) + Rat::new(1, i + 2);
    let on = (0..50).all(|i| region.contains(&lines[(i % 2) as usize].at(&param(i))));
    let off = (0..50).all(|i| {
        let s = param(i);
        let t = param(49 - i) + Rat::new(1, 97);
        let p = lines[0].at(&s).add(&lines[1].dir.scale(&t));
        if s.is_zero() || t.is_zero() {
            return true;
        }
        !region.contains(&p)
    });
    on && off
}
