use thiserror::Error;

use crate::coeffring::{TruncationContext, Var};

/// Errors raised by the algebraic routines in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation context mismatch: {left} vs {right}")]
    ContextMismatch {
        left: TruncationContext,
        right: TruncationContext,
    },

    #[error("variable {var} is outside the truncation context {ctx}")]
    VariableOutOfRange { var: Var, ctx: TruncationContext },

    #[error("series has a term of xab-degree 0; 1/(1+s) does not terminate")]
    NotInvertible,

    #[error("expected a series in b-variables only, found {0}")]
    NotBOnly(Var),

    #[error("cannot project from max degree {from} up to {to}")]
    DegreeIncrease { from: u32, to: u32 },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("not {k}-Grassmannian: {reason} (position {position})")]
    NotGrassmannian {
        k: u32,
        position: usize,
        reason: &'static str,
    },

    #[error("invalid {k}-strict partition {parts:?}: {reason}")]
    InvalidPartition {
        k: u32,
        parts: Vec<u32>,
        reason: String,
    },

    #[error("partition {partition} is not in SP^{k}({n})")]
    OutsideRectangle { partition: String, k: u32, n: u32 },

    #[error("Pfaffian of odd-size matrix ({0})")]
    OddPfaffian(usize),

    #[error("exact division left a nonzero remainder dividing by {0}")]
    NonzeroRemainder(String),

    #[error("ell = {ell} needs b_1..b_{need} but context has numB = {have}")]
    EllOutOfRange { ell: i64, need: u32, have: u32 },

    #[error("{what} requires {need} but context has {have}")]
    ContextTooSmall {
        what: &'static str,
        need: String,
        have: String,
    },

    #[error("ell must be nonnegative here, got {0}")]
    NegativeEll(i64),

    #[error("input is not in the GP span at this truncation: {0}")]
    NotInSpan(String),

    #[error("localization table is missing an entry for {0}")]
    MissingEntry(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
