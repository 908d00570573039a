//! Resultants, implicitization, zero-dimensional system solving and real
//! root isolation: the computational substitute for quantifier elimination.

pub mod implicitize;
pub mod realroots;
pub mod resultant;
pub mod solve;

pub use implicitize::{implicitize, ElimError, ImplicitCurve};
pub use realroots::{count_real_roots, isolate_real_roots, RealRootIsolation};
pub use resultant::resultant;
pub use solve::{solve_system, Coord, Dimension, SolutionPoint, SolutionSet};
