//! Deciding centrally symmetric convex position.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::admissible::{admissible_region_all_triples, admissible_region_tallest, is_admissible_center};
use crate::geom::{convex_hull, HullStatus};
use crate::{Error, Point, PointSet, Region};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Intersect over every triple.
    AllTriples,
    /// Intersect over the tallest triangles only.
    Tallest,
}

impl Algorithm {
    pub fn region(self, set: &PointSet) -> Result<Region, Error> {
        match self {
            Algorithm::AllTriples => admissible_region_all_triples(set),
            Algorithm::Tallest => admissible_region_tallest(set),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::AllTriples => "all_triples",
            Algorithm::Tallest => "tallest",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes(Point),
    No,
    Rejected(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CscVerdict {
    pub verdict: Verdict,
    pub algorithm: Algorithm,
}

impl CscVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self.verdict, Verdict::Yes(_))
    }

    pub fn witness(&self) -> Option<&Point> {
        match &self.verdict {
            Verdict::Yes(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for CscVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Yes(w) => write!(f, "YES witness={w}"),
            Verdict::No => f.write_str("NO"),
            Verdict::Rejected(why) => write!(f, "REJECTED {why}"),
        }
    }
}

/// Decides whether `set` lies on the boundary of some centrally symmetric
/// convex body. A `Yes` witness has always passed the direct reflection check.
pub fn is_csc_position(set: &PointSet, algorithm: Algorithm) -> Result<CscVerdict, Error> {
    if set.len() < 3 {
        return Err(Error::TooFewPoints(set.len()));
    }
    let status = convex_hull(set.points()).status;
    let verdict = if status.contains(&HullStatus::Interior) {
        Verdict::No
    } else if status.contains(&HullStatus::OnEdge) {
        Verdict::Rejected("points on hull edges; not in strict convex position".into())
    } else {
        match algorithm.region(set)?.witness() {
            Some(w) => {
                assert!(
                    is_admissible_center(set, &w),
                    "region witness {w} failed the reflection check"
                );
                Verdict::Yes(w)
            }
            None => Verdict::No,
        }
    };
    Ok(CscVerdict { verdict, algorithm })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetReport {
    pub all_yes: bool,
    pub checked: usize,
    /// Indices into the input set, ascending.
    pub first_failure: Option<Vec<usize>>,
}

/// Checks every `k`-subset in lexicographic index order, stopping at the
/// first one that is not in c.s.c. position.
pub fn all_k_subsets_csc(set: &PointSet, k: usize, algorithm: Algorithm) -> Result<SubsetReport, Error> {
    if k < 3 || k > set.len() {
        return Err(Error::Invalid(format!("subset size {k} outside 3..={}", set.len())));
    }
    let mut checked = 0;
    for idx in (0..set.len()).combinations(k) {
        let v = is_csc_position(&set.subset(&idx), algorithm)?;
        checked += 1;
        match v.verdict {
            Verdict::Yes(_) => {}
            Verdict::No => {
                return Ok(SubsetReport {
                    all_yes: false,
                    checked,
                    first_failure: Some(idx),
                })
            }
            Verdict::Rejected(why) => return Err(Error::Rejected(why)),
        }
    }
    Ok(SubsetReport {
        all_yes: true,
        checked,
        first_failure: None,
    })
}
