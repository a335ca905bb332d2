//! Exact computation of admissible symmetry centers for planar point sets.
//!
//! A finite set `X` lies on the boundary of a centrally symmetric convex body
//! exactly when some point `O` makes `X ∪ (2O − X)` convexly positioned.
//! This crate builds the set of all such `O` as a finite union of closed
//! convex cells, using rational arithmetic throughout, and uses it to decide
//! c.s.c. position, reproduce the nine-point example, and search for larger
//! ones.

pub mod admissible;
pub mod cli;
pub mod decision;
mod fm;
pub mod geom;
pub mod io;
pub mod ninegon;
pub mod parallelogram;
pub mod random;
mod rat;
pub mod region;
pub mod search;
pub mod svg;
pub mod trig;

pub use admissible::{
    admissible_region_all_triples, admissible_region_tallest, is_admissible_center, tallest_triangles,
    triangle_admissible, TallestTriangle, TriangleAdmissible,
};
pub use decision::{all_k_subsets_csc, is_csc_position, Algorithm, CscVerdict, SubsetReport, Verdict};
pub use geom::{
    convex_hull, in_strict_convex_position, in_weak_convex_position, orientation, reflect_set, HullClassification,
    HullStatus, Point, PointSet,
};
pub use rat::Rat;
pub use region::{Cell, HalfPlane, Region};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("triangle vertices are collinear")]
    CollinearInput,
    #[error("point set is not in strict convex position")]
    NotStrictlyConvex,
    #[error("missing label {0:?}")]
    MissingLabels(String),
    #[error("points do not form a nondegenerate parallelogram")]
    NotParallelogram,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("rejected input: {0}")]
    Rejected(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}
