//! Exact-arithmetic classifying differential invariants and signatures of
//! rational plane curves, affine/projective group-equivalence decisions,
//! and central/parallel camera-projection decisions with explicit rational
//! camera certificates.

pub mod algebra;
pub mod cli;
pub mod curvefile;
pub mod elimination;
pub mod equivalence;
pub mod invariants;
pub mod matrix;
pub mod projection;
pub mod report;
pub mod schedule;
pub mod signature;
pub mod vars;
