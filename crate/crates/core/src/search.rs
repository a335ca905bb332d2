//! Randomized search for point sets that are not in c.s.c. position while
//! every set obtained by deleting one point is.
//!
//! Trials are keyed by `(seed, trial index)` so that results do not depend on
//! the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::is_admissible_center;
use crate::decision::{all_k_subsets_csc, is_csc_position, Algorithm, Verdict};
use crate::geom::in_strict_convex_position;
use crate::ninegon::scaled_ngon;
use crate::random::{random_convex_set, stream};
use crate::trig::unit_circle_vertex;
use crate::{Error, Point, PointSet, Rat};

/// Denominator of random perturbations and radii.
pub const PERTURBATION_DENOM: i64 = 1_000_000;

const COORD_DIGITS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    /// The shrunken-triangle nine-gon template, generalized to `n` vertices
    /// (every third vertex scaled by 0.93), then perturbed.
    PerturbedNinegon,
    /// Rotationally symmetric polygons: vertex radius depends only on the
    /// vertex index modulo a proper divisor pattern of `n`.
    SymmetricNgon,
    /// [`random_convex_set`] candidates.
    RandomConvex,
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "perturbed-ninegon" => Ok(Generator::PerturbedNinegon),
            "symmetric-ngon" => Ok(Generator::SymmetricNgon),
            "random-convex" => Ok(Generator::RandomConvex),
            _ => Err(Error::Invalid(format!("unknown generator {s:?}"))),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::PerturbedNinegon => "perturbed-ninegon",
            Generator::SymmetricNgon => "symmetric-ngon",
            Generator::RandomConvex => "random-convex",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub generator: Generator,
    /// Each coordinate moves by at most this much.
    pub magnitude: Rat,
    pub parallelism: usize,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n < 9 {
            return Err(Error::Invalid(format!("search size must be at least 9, got {}", self.n)));
        }
        if self.trials == 0 {
            return Err(Error::Invalid("trials must be positive".into()));
        }
        if self.magnitude.signum() < 0 {
            return Err(Error::Invalid("perturbation magnitude must be non-negative".into()));
        }
        if self.parallelism == 0 {
            return Err(Error::Invalid("parallelism must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchFinding {
    pub trial: u64,
    #[serde(serialize_with = "crate::io::serialize_point_set")]
    pub points: PointSet,
    /// `deletion_witnesses[i]` is an admissible center of the set without
    /// point `i`.
    pub deletion_witnesses: Vec<Point>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub trials: u64,
    pub found: u64,
    pub not_strictly_convex: u64,
    pub full_set_csc: u64,
    pub subset_not_csc: u64,
    pub failed_reverification: u64,
}

impl SearchStats {
    pub fn rejected(&self) -> u64 {
        self.not_strictly_convex + self.full_set_csc + self.subset_not_csc + self.failed_reverification
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub findings: Vec<SearchFinding>,
    pub stats: SearchStats,
}

enum TrialResult {
    NotStrictlyConvex,
    FullSetCsc,
    SubsetNotCsc,
    Candidate(PointSet),
}

fn perturb(rng: &mut impl Rng, p: &Point, magnitude: &Rat) -> Point {
    if magnitude.is_zero() {
        return p.clone();
    }
    let mut off = || magnitude * Rat::new(rng.gen_range(-PERTURBATION_DENOM..=PERTURBATION_DENOM), PERTURBATION_DENOM);
    Point::new(&p.x + off(), &p.y + off())
}

fn symmetric_ngon(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    let orders: Vec<usize> = (2..n).filter(|d| n.is_multiple_of(*d)).collect();
    let order = if orders.is_empty() {
        1
    } else {
        orders[rng.gen_range(0..orders.len())]
    };
    let period = n / order;
    let lo = PERTURBATION_DENOM * 85 / 100;
    let radii: Vec<Rat> = (0..period)
        .map(|_| Rat::new(rng.gen_range(lo..=PERTURBATION_DENOM), PERTURBATION_DENOM))
        .collect();
    (0..n)
        .map(|i| unit_circle_vertex(i as i64, n as i64, COORD_DIGITS).scale(&radii[i % period]))
        .collect()
}

/// The candidate examined by trial `trial`.
pub fn candidate(cfg: &SearchConfig, trial: u64) -> Option<PointSet> {
    let mut rng = stream(cfg.seed, trial);
    let base: Vec<Point> = match cfg.generator {
        Generator::PerturbedNinegon => scaled_ngon(cfg.n, &Rat::new(93, 100), COORD_DIGITS).points().to_vec(),
        Generator::SymmetricNgon => symmetric_ngon(&mut rng, cfg.n),
        Generator::RandomConvex => random_convex_set(cfg.n, rng.gen()).points().to_vec(),
    };
    let pts: Vec<Point> = base.iter().map(|p| perturb(&mut rng, p, &cfg.magnitude)).collect();
    let set = PointSet::new(pts).ok()?;
    Some(match (cfg.generator, cfg.n) {
        (Generator::PerturbedNinegon, 9) => {
            PointSet::with_labels(set.points().to_vec(), crate::ninegon::LABELS.map(String::from).to_vec())
                .expect("nine labels")
        }
        _ => set,
    })
}

fn evaluate(cfg: &SearchConfig, trial: u64) -> Result<TrialResult, Error> {
    let Some(set) = candidate(cfg, trial) else {
        return Ok(TrialResult::NotStrictlyConvex);
    };
    if !in_strict_convex_position(set.points()) {
        return Ok(TrialResult::NotStrictlyConvex);
    }
    if is_csc_position(&set, Algorithm::Tallest)?.is_yes() {
        return Ok(TrialResult::FullSetCsc);
    }
    if !all_k_subsets_csc(&set, set.len() - 1, Algorithm::Tallest)?.all_yes {
        return Ok(TrialResult::SubsetNotCsc);
    }
    Ok(TrialResult::Candidate(set))
}

/// Checks a candidate from scratch with the all-triples algorithm: strictly
/// convex, not c.s.c., and every one-point deletion c.s.c. Returns the
/// deletion witnesses on success.
pub fn verify_candidate(set: &PointSet) -> Result<Option<Vec<Point>>, Error> {
    if set.len() < 4 || !in_strict_convex_position(set.points()) {
        return Ok(None);
    }
    if is_csc_position(set, Algorithm::AllTriples)?.verdict != Verdict::No {
        return Ok(None);
    }
    let mut witnesses = Vec::with_capacity(set.len());
    for i in 0..set.len() {
        let sub = set.without(i);
        match is_csc_position(&sub, Algorithm::AllTriples)?.verdict {
            Verdict::Yes(w) if is_admissible_center(&sub, &w) => witnesses.push(w),
            _ => return Ok(None),
        }
    }
    Ok(Some(witnesses))
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool")
        .install(f)
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome, Error> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::Invalid(e.to_string()))?;
    let results: Vec<Result<TrialResult, Error>> =
        pool.install(|| (0..cfg.trials).into_par_iter().map(|t| evaluate(cfg, t)).collect());

    let mut stats = SearchStats {
        trials: cfg.trials,
        ..Default::default()
    };
    let mut findings = Vec::new();
    for (trial, r) in (0..cfg.trials).zip(results) {
        match r? {
            TrialResult::NotStrictlyConvex => stats.not_strictly_convex += 1,
            TrialResult::FullSetCsc => stats.full_set_csc += 1,
            TrialResult::SubsetNotCsc => stats.subset_not_csc += 1,
            TrialResult::Candidate(set) => match single_threaded(|| verify_candidate(&set))? {
                Some(deletion_witnesses) => {
                    stats.found += 1;
                    findings.push(SearchFinding {
                        trial,
                        points: set,
                        deletion_witnesses,
                    });
                }
                None => stats.failed_reverification += 1,
            },
        }
    }
    Ok(SearchOutcome { findings, stats })
}

/// Greedily rounds coordinates to fewer decimals while the set stays a
/// verified finding, repeating until no coordinate can be simplified.
pub fn shrink_finding(f: &SearchFinding) -> Result<SearchFinding, Error> {
    let Some(mut witnesses) = verify_candidate(&f.points)? else {
        return Err(Error::Invalid("finding does not verify".into()));
    };
    let mut pts = f.points.points().to_vec();
    let labels = f.points.labels().map(<[String]>::to_vec);
    let rebuild = |pts: Vec<Point>| match &labels {
        Some(l) => PointSet::with_labels(pts, l.clone()),
        None => PointSet::new(pts),
    };
    loop {
        let mut changed = false;
        for i in 0..pts.len() {
            for coord in 0..2 {
                let current = if coord == 0 { &pts[i].x } else { &pts[i].y }.clone();
                for digits in 0.. {
                    let rounded = current.round_decimal(digits);
                    if rounded == current {
                        break;
                    }
                    let mut trial = pts.clone();
                    if coord == 0 {
                        trial[i].x = rounded;
                    } else {
                        trial[i].y = rounded;
                    }
                    let Ok(set) = rebuild(trial.clone()) else { continue };
                    if let Some(w) = verify_candidate(&set)? {
                        pts = trial;
                        witnesses = w;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(SearchFinding {
        trial: f.trial,
        points: rebuild(pts)?,
        deletion_witnesses: witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(generator: Generator, n: usize, trials: u64) -> SearchConfig {
        SearchConfig {
            n,
            trials,
            seed: 7,
            generator,
            magnitude: Rat::new(1, 100),
            parallelism: 2,
        }
    }

    #[test]
    fn config_validation() {
        let mut c = cfg(Generator::RandomConvex, 8, 1);
        assert!(c.validate().is_err());
        c.n = 10;
        c.trials = 0;
        assert!(c.validate().is_err());
        c.trials = 1;
        c.magnitude = Rat::new(-1, 2);
        assert!(c.validate().is_err());
    }

    #[test]
    fn generator_names_round_trip() {
        for g in [Generator::PerturbedNinegon, Generator::SymmetricNgon, Generator::RandomConvex] {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("spiral".parse::<Generator>().is_err());
    }

    #[test]
    fn candidates_are_deterministic() {
        for g in [Generator::PerturbedNinegon, Generator::SymmetricNgon, Generator::RandomConvex] {
            let c = cfg(g, 10, 1);
            assert_eq!(candidate(&c, 3), candidate(&c, 3));
        }
    }

    #[test]
    fn accounting_adds_up() {
        let out = run_search(&cfg(Generator::RandomConvex, 10, 12)).unwrap();
        assert_eq!(out.stats.rejected() + out.stats.found, 12);
        assert_eq!(out.stats.found as usize, out.findings.len());
    }
}
