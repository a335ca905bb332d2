//! Two-variable Fourier–Motzkin elimination over integer coefficients.
//!
//! Constraints are `a·x + b·y ≤ c` or `a·x + b·y < c`. Eliminating `x`
//! yields the exact projection onto `y`, so feasibility is decided without
//! rounding and a witness is recovered by back-substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Point, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Ineq {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub strict: bool,
}

#[derive(Clone, Debug)]
struct Bound {
    value: Rat,
    strict: bool,
}

#[derive(Default)]
struct Interval {
    lower: Option<Bound>,
    upper: Option<Bound>,
    void: bool,
}

impl Interval {
    /// Adds `coef·t (<|≤) rhs`.
    fn add(&mut self, coef: &Rat, rhs: &Rat, strict: bool) {
        match coef.signum() {
            0 => {
                let s = rhs.signum();
                if s < 0 || (s == 0 && strict) {
                    self.void = true;
                }
            }
            sign => {
                let value = rhs / coef;
                let slot = if sign > 0 { &mut self.upper } else { &mut self.lower };
                let tighter = match slot {
                    None => true,
                    Some(cur) => {
                        let ord = value.cmp(&cur.value);
                        let ord = if sign > 0 { ord.reverse() } else { ord };
                        ord.is_gt() || (ord.is_eq() && strict && !cur.strict)
                    }
                };
                if tighter {
                    *slot = Some(Bound { value, strict });
                }
            }
        }
    }

    /// Midpoint of a bounded interval, the bound itself for a single point,
    /// and one unit past the bound for rays.
    fn pick(&self) -> Option<Rat> {
        if self.void {
            return None;
        }
        match (&self.lower, &self.upper) {
            (None, None) => Some(Rat::zero()),
            (Some(lo), None) => Some(&lo.value + Rat::one()),
            (None, Some(hi)) => Some(&hi.value - Rat::one()),
            (Some(lo), Some(hi)) => match lo.value.cmp(&hi.value) {
                std::cmp::Ordering::Less => Some((&lo.value + &hi.value) / Rat::from_int(2)),
                std::cmp::Ordering::Equal if !lo.strict && !hi.strict => Some(lo.value.clone()),
                _ => None,
            },
        }
    }
}

fn reduce(a: BigInt, b: BigInt, c: BigInt, strict: bool) -> Ineq {
    let g = a.gcd(&b).gcd(&c);
    if g.is_zero() || g == BigInt::from(1) {
        Ineq { a, b, c, strict }
    } else {
        Ineq {
            a: a / &g,
            b: b / &g,
            c: c / &g,
            strict,
        }
    }
}

/// Eliminates `x`, returning constraints on `y` alone (`a = 0` in each).
fn eliminate_x(system: &[Ineq]) -> Vec<Ineq> {
    let mut out = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for q in system {
        if q.a.is_zero() {
            out.push(q.clone());
        } else if q.a.is_positive() {
            upper.push(q);
        } else {
            lower.push(q);
        }
    }
    for u in &upper {
        for l in &lower {
            let mu = -&l.a;
            let ml = &u.a;
            let b = &mu * &u.b + ml * &l.b;
            let c = &mu * &u.c + ml * &l.c;
            out.push(reduce(BigInt::zero(), b, c, u.strict || l.strict));
        }
    }
    out.sort_by(|p, q| (&p.b, &p.c, p.strict).cmp(&(&q.b, &q.c, q.strict)));
    out.dedup();
    out
}

/// A point satisfying every constraint, or `None` if there is none.
pub(crate) fn solve(system: &[Ineq]) -> Option<Point> {
    let projected = eliminate_x(system);
    let mut ys = Interval::default();
    for q in &projected {
        ys.add(&Rat::from_int(q.b.clone()), &Rat::from_int(q.c.clone()), q.strict);
    }
    let y = ys.pick()?;
    let mut xs = Interval::default();
    for q in system {
        let rhs = Rat::from_int(q.c.clone()) - Rat::from_int(q.b.clone()) * &y;
        xs.add(&Rat::from_int(q.a.clone()), &rhs, q.strict);
    }
    let x = xs.pick()?;
    Some(Point::new(x, y))
}

pub(crate) fn feasible(system: &[Ineq]) -> bool {
    solve(system).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, strict: bool) -> Ineq {
        Ineq {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            strict,
        }
    }

    fn holds(s: &[Ineq], p: &Point) -> bool {
        s.iter().all(|q| {
            let lhs = Rat::from_int(q.a.clone()) * &p.x + Rat::from_int(q.b.clone()) * &p.y;
            let c = Rat::from_int(q.c.clone());
            if q.strict {
                lhs < c
            } else {
                lhs <= c
            }
        })
    }

    #[test]
    fn infeasible_slab() {
        assert!(!feasible(&[q(1, 0, 1, false), q(-1, 0, -2, false)]));
    }

    #[test]
    fn closed_point_vs_open() {
        // x ≤ 0, −x ≤ 0 pins x = 0; strictness on either side kills it.
        assert!(feasible(&[q(1, 0, 0, false), q(-1, 0, 0, false)]));
        assert!(!feasible(&[q(1, 0, 0, true), q(-1, 0, 0, false)]));
    }

    #[test]
    fn triangle_witness_is_interior() {
        let s = [q(-1, 0, 0, false), q(0, -1, 0, false), q(1, 1, 1, false)];
        let p = solve(&s).unwrap();
        let strict: Vec<Ineq> = s.iter().map(|i| Ineq { strict: true, ..i.clone() }).collect();
        assert!(holds(&strict, &p));
    }

    #[test]
    fn empty_system_is_whole_plane() {
        assert_eq!(solve(&[]), Some(Point::origin()));
    }

    #[test]
    fn constant_constraints() {
        assert!(feasible(&[q(0, 0, 0, false)]));
        assert!(!feasible(&[q(0, 0, 0, true)]));
        assert!(!feasible(&[q(0, 0, -1, false)]));
    }

    #[test]
    fn small_grid_oracle() {
        // One-sided check: any integer grid solution implies feasibility, and
        // every returned witness satisfies the system.
        let coeffs = [-2i64, -1, 0, 1, 2];
        let mut count = 0;
        for &a1 in &coeffs {
            for &b1 in &coeffs {
                for &a2 in &coeffs {
                    for &b2 in &[-1i64, 1] {
                        for &c1 in &[-2i64, 0, 3] {
                            for &c2 in &[-3i64, 1] {
                                let s = [q(a1, b1, c1, false), q(a2, b2, c2, false), q(1, 1, 2, false)];
                                let grid = (-6..=6).any(|x| {
                                    (-6..=6).any(|y| holds(&s, &Point::new(x, y)))
                                });
                                match solve(&s) {
                                    Some(p) => assert!(holds(&s, &p)),
                                    None => assert!(!grid, "{s:?}"),
                                }
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(count > 0);
    }
}
