//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Everything that can go wrong short of an internal inconsistency.
///
/// Internal inconsistencies (a self-test failing during construction)
/// panic instead: they indicate a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rank outside the allowed range for the family.
    InvalidRank { family: char, rank: usize },
    /// Family letter outside A..G.
    UnknownFamily(char),
    /// Coefficient vector is not a root of the system.
    NotARoot { coeffs: Vec<i64> },
    /// Coefficient or coordinate vector has the wrong length.
    RankMismatch { expected: usize, got: usize },
    /// A subset operation was given a mask sized for a different system.
    SystemMismatch,
    /// Subset is not closed; carries a violating pair and its sum.
    NotClosed {
        a: Vec<i64>,
        b: Vec<i64>,
        sum: Vec<i64>,
    },
    /// Weight has a negative fundamental coordinate where dominance is required.
    NotDominant { coords: Vec<i64> },
    /// A non-trivial module was required but the zero weight was supplied.
    ZeroWeight,
    /// Exhaustive subset enumeration refused: 2^|Φ| too large.
    EnumerationCapExceeded { roots: usize, cap: usize },
    /// Weyl orbit walk exceeded its budget.
    OrbitBudgetExceeded { budget: usize },
    /// Module dimension exceeds the configured cap.
    DimCapExceeded { dim: String, cap: u64 },
    /// A narrow witness was requested for a wide subalgebra.
    WideSubsetHasNoWitness,
    /// Escape path search started from an unblocked vertex (wrong case).
    EscapeStartUnblocked { index: usize },
    /// Escape path search found no unblocked simple root.
    AllSimpleRootsBlocked,
    /// A sequence of simple roots violates the path invariants.
    InvalidPath(&'static str),
    /// Vector/matrix dimension mismatch in module arithmetic.
    DimensionMismatch { expected: usize, got: usize },
    /// Fewer than two component types for the non-simple construction.
    TooFewComponents,
    /// Literal could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank { family, rank } => {
                write!(f, "invalid rank {rank} for family {family}")
            }
            Error::UnknownFamily(c) => write!(f, "unknown family letter '{c}'"),
            Error::NotARoot { coeffs } => write!(f, "{coeffs:?} is not a root of this system"),
            Error::RankMismatch { expected, got } => {
                write!(f, "expected a vector of length {expected}, got {got}")
            }
            Error::SystemMismatch => write!(f, "subset belongs to a different root system"),
            Error::NotClosed { a, b, sum } => write!(
                f,
                "subset is not closed: {a:?} + {b:?} = {sum:?} is a root outside the subset"
            ),
            Error::NotDominant { coords } => write!(f, "weight {coords:?} is not dominant"),
            Error::ZeroWeight => write!(f, "the zero weight is not allowed here"),
            Error::EnumerationCapExceeded { roots, cap } => write!(
                f,
                "refusing to enumerate 2^{roots} subsets (cap {cap}); \
                 use conjugacy-reduced or sampled mode"
            ),
            Error::OrbitBudgetExceeded { budget } => {
                write!(f, "Weyl orbit exceeded budget of {budget} elements")
            }
            Error::DimCapExceeded { dim, cap } => {
                write!(f, "module dimension {dim} exceeds cap {cap}")
            }
            Error::WideSubsetHasNoWitness => {
                write!(f, "subalgebra is wide: no narrow witness exists")
            }
            Error::EscapeStartUnblocked { index } => write!(
                f,
                "escape path start α_{} is not blocked (direct witness applies)",
                index + 1
            ),
            Error::AllSimpleRootsBlocked => {
                write!(f, "all simple roots are blocked; the subalgebra is wide")
            }
            Error::InvalidPath(reason) => write!(f, "invalid simple root path: {reason}"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::TooFewComponents => {
                write!(f, "need at least two component types")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
