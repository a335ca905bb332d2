#![allow(dead_code)]

use csc_core::random::stream;
use csc_core::{orientation, Point, Rat, Region};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, s: u64) -> ChaCha8Rng {
    stream(seed, s)
}

pub fn small_rat(rng: &mut ChaCha8Rng, span: i64, denom: i64) -> Rat {
    Rat::new(rng.gen_range(-span * denom..=span * denom), denom)
}

pub fn random_point(rng: &mut ChaCha8Rng, span: i64, denom: i64) -> Point {
    Point::new(small_rat(rng, span, denom), small_rat(rng, span, denom))
}

pub fn random_triangle(rng: &mut ChaCha8Rng) -> [Point; 3] {
    loop {
        let t = [random_point(rng, 6, 2), random_point(rng, 6, 2), random_point(rng, 6, 2)];
        if orientation(&t[0], &t[1], &t[2]) != 0 {
            return t;
        }
    }
}

/// Bounding box of `pts`, widened by its own size on every side.
pub fn widened_box(pts: &[Point]) -> (Point, Point) {
    let mut lo = pts[0].clone();
    let mut hi = pts[0].clone();
    for p in pts {
        lo.x = lo.x.clone().min(p.x.clone());
        lo.y = lo.y.clone().min(p.y.clone());
        hi.x = hi.x.clone().max(p.x.clone());
        hi.y = hi.y.clone().max(p.y.clone());
    }
    let w = &hi.x - &lo.x;
    let h = &hi.y - &lo.y;
    (
        Point::new(&lo.x - &w, &lo.y - &h),
        Point::new(&hi.x + &w, &hi.y + &h),
    )
}

/// `(steps+1)^2` grid points spanning the box, corners included.
pub fn grid(lo: &Point, hi: &Point, steps: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..=steps {
        for j in 0..=steps {
            let x = &lo.x + (&hi.x - &lo.x) * Rat::new(i, steps);
            let y = &lo.y + (&hi.y - &lo.y) * Rat::new(j, steps);
            out.push(Point::new(x, y));
        }
    }
    out
}

pub fn point_in_box(rng: &mut ChaCha8Rng, lo: &Point, hi: &Point) -> Point {
    let d = 1000;
    let tx = Rat::new(rng.gen_range(0..=d), d);
    let ty = Rat::new(rng.gen_range(0..=d), d);
    Point::new(&lo.x + (&hi.x - &lo.x) * tx, &lo.y + (&hi.y - &lo.y) * ty)
}

/// Sample points concentrated around the regions' witnesses, plus box samples.
pub fn samples_near(rng: &mut ChaCha8Rng, regions: &[&Region], lo: &Point, hi: &Point, count: usize) -> Vec<Point> {
    let anchors: Vec<Point> = regions
        .iter()
        .flat_map(|r| r.cells().iter().filter_map(|c| c.feasible_point()))
        .collect();
    let scale = (&hi.x - &lo.x).max(&hi.y - &lo.y);
    (0..count)
        .map(|i| {
            if anchors.is_empty() || i % 2 == 0 {
                point_in_box(rng, lo, hi)
            } else {
                let a = &anchors[rng.gen_range(0..anchors.len())];
                let r = &scale * Rat::new(1, rng.gen_range(10..=1000));
                let dx = &r * Rat::new(rng.gen_range(-100..=100), 100);
                let dy = &r * Rat::new(rng.gen_range(-100..=100), 100);
                Point::new(&a.x + dx, &a.y + dy)
            }
        })
        .collect()
}

/// Random nondegenerate parallelogram in counter-clockwise order, rational
/// corners, arbitrary orientation.
pub fn random_parallelogram(rng: &mut ChaCha8Rng) -> [Point; 4] {
    loop {
        let a = random_point(rng, 5, 3);
        let mut u = random_point(rng, 4, 2);
        let mut v = random_point(rng, 4, 2);
        let turn = u.cross(&v).signum();
        if turn == 0 {
            continue;
        }
        if turn < 0 {
            std::mem::swap(&mut u, &mut v);
        }
        let b = a.add(&u);
        let c = b.add(&v);
        let d = a.add(&v);
        return [a, b, c, d];
    }
}
