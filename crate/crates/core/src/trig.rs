//! Correctly rounded decimal coordinates of regular polygon vertices.
//!
//! Everything is integer fixed-point arithmetic, so results are identical
//! on every platform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Point, Rat};

const PI_DIGITS: &str = "314159265358979323846264338327950288419716939937510582097494459230781640628620899";

/// Working precision beyond the requested number of decimals.
const GUARD: u32 = 25;

pub const MAX_DIGITS: u32 = 50;

fn pi_scaled(prec: u32) -> BigInt {
    PI_DIGITS[..=prec as usize].parse().expect("digit string")
}

/// `(cos θ, sin θ)` scaled by `10^prec` for `θ = 2π·num/den`, with `|θ| ≤ π`
/// after reduction. Error is a few hundred units in the last place.
fn cos_sin_scaled(num: i64, den: i64, prec: u32) -> (BigInt, BigInt) {
    let k = num.rem_euclid(den);
    let k = if 2 * k > den { k - den } else { k };
    let one = BigInt::from(10u32).pow(prec);
    if k == 0 {
        return (one, BigInt::zero());
    }
    let theta = pi_scaled(prec) * BigInt::from(2 * k) / BigInt::from(den);
    let theta2 = &theta * &theta / &one;

    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    // cos: 1 − θ²/2! + …   sin: θ − θ³/3! + …
    let mut term = one.clone();
    let mut j: u64 = 0;
    while !term.is_zero() {
        cos += &term;
        term = -(&term * &theta2 / &one) / BigInt::from((2 * j + 1) * (2 * j + 2));
        j += 1;
    }
    let mut term = theta;
    let mut j: u64 = 1;
    while !term.is_zero() {
        sin += &term;
        term = -(&term * &theta2 / &one) / BigInt::from((2 * j) * (2 * j + 1));
        j += 1;
    }
    (cos, sin)
}

fn round_scaled(v: &BigInt, prec: u32, digits: u32) -> Rat {
    let q = BigInt::from(10u32).pow(prec - digits);
    let (_, frac) = v.abs().div_rem(&q);
    let half: BigInt = &q / 2;
    let margin = BigInt::from(100_000u32);
    assert!(
        (&frac - &half).abs() > margin,
        "value too close to a rounding boundary at {digits} digits"
    );
    Rat::new(v.clone(), BigInt::from(10u32).pow(prec)).round_decimal(digits)
}

/// Vertex `k` of the regular `n`-gon on the unit circle starting at `(1, 0)`,
/// each coordinate rounded to `digits` decimals.
pub fn unit_circle_vertex(k: i64, n: i64, digits: u32) -> Point {
    assert!(n > 0 && digits <= MAX_DIGITS);
    let prec = digits + GUARD;
    let (c, s) = cos_sin_scaled(k, n, prec);
    Point::new(round_scaled(&c, prec, digits), round_scaled(&s, prec, digits))
}
