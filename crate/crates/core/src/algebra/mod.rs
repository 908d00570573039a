//! Exact polynomial and rational-function kernel.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be shared freely across threads.

pub mod gcd;
pub mod parser;
pub mod poly;
pub mod ratfunc;

pub use gcd::{multiplicity_split, poly_gcd, squarefree_part};
pub use parser::parse_expression;
pub use poly::{rat, rat_i, Mono, Poly, Rat};
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol '{name}' at position {pos}")]
    UnknownSymbol { name: String, pos: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("substitution produces an identically zero denominator")]
    SubstitutionZeroDenominator,
}
