//! Seeded generators of strictly convex rational point sets.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{angle_cmp, in_strict_convex_position};
use crate::{Point, PointSet, Rat};

/// Counter-based stream: the same `(seed, stream)` always yields the same
/// sequence, independent of any other stream.
pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn small_rational(rng: &mut impl Rng, span: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// Edge vectors sorted by angle, summed: `n − 1` random vectors plus the one
/// closing the loop. Returns `None` when the polygon is not strictly convex.
fn try_convex(rng: &mut impl Rng, n: usize) -> Option<PointSet> {
    let mut edges: Vec<Point> = (0..n - 1)
        .map(|_| Point::new(small_rational(rng, 60, 4), small_rational(rng, 60, 4)))
        .collect();
    let sum = edges.iter().fold(Point::origin(), |acc, e| acc.add(e));
    edges.push(Point::new(-&sum.x, -&sum.y));
    if edges.iter().any(|e| e.x.is_zero() && e.y.is_zero()) {
        return None;
    }
    edges.sort_by(angle_cmp);
    let mut cur = Point::new(small_rational(rng, 20, 3), small_rational(rng, 20, 3));
    let mut pts = Vec::with_capacity(n);
    for e in &edges {
        pts.push(cur.clone());
        cur = cur.add(e);
    }
    if !in_strict_convex_position(&pts) {
        return None;
    }
    PointSet::new(pts).ok()
}

/// A strictly convex `n`-point set, deterministic in `seed`. Failed attempts
/// move on to the next stream.
pub fn random_convex_set(n: usize, seed: u64) -> PointSet {
    assert!(n >= 3, "need at least 3 points");
    (0u64..)
        .find_map(|attempt| try_convex(&mut stream(seed, attempt), n))
        .expect("unbounded retries")
}
