//! Exact computer algebra for the covariant identities satisfied by the
//! Kleinian ℘-functions of hyperelliptic curves of genus 1, 2 and 3.
//!
//! The crate is layered:
//!
//! * [`rational`], [`symbol`], [`poly`], [`matrix`], [`linalg`]: exact sparse
//!   polynomial arithmetic and fraction-free determinants.
//! * [`sl2`]: the generators `e`, `f`, `h` as derivations, weights and
//!   multiplets.
//! * [`curve`]: the curve family, Klein matrices and covariant polar forms.
//! * [`catalog`]: every identity set, generated or transcribed.
//! * [`oracle`]: exact evaluation of identities in the function field of a
//!   concrete rational curve.
//! * [`emit`], [`suite`], [`cli`]: output formats, check suites and the
//!   `wpid` command line.

pub mod rational;
pub mod symbol;
pub mod poly;
pub mod matrix;
pub mod linalg;
pub mod sl2;
pub mod curve;
pub mod catalog;
pub mod emit;
pub mod suite;
pub mod cli;
pub mod oracle;

pub use poly::{p, Monomial, Poly};
pub use rational::Rational;
pub use symbol::{Symbol, SymbolKind};

/// Errors shared by every layer of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("matrix is not square ({0}x{1})")]
    NonSquare(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unsupported genus {0} (expected 1..=3)")]
    UnsupportedGenus(u8),
    #[error("not a highest weight: e(p) = {0}")]
    NotHighestWeight(String),
    #[error("f-chain did not terminate within {0} steps")]
    DimensionExceeded(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("top coefficient {0} is not a nonzero rational square")]
    NotASquare(String),
    #[error("curve polynomial is not squarefree")]
    DegenerateCurve,
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("no value for symbol {0}")]
    MissingSymbol(String),
    #[error("unknown identity set {0:?}")]
    UnknownSet(String),
    #[error("unknown highest weight {0:?}")]
    UnknownHighestWeight(String),
    #[error("bad curve: {0}")]
    BadCurve(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
