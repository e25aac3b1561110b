//! Error type shared by the fallible operations of the crate.

use core::fmt;

/// Failure modes of the calculus.
///
/// Parsing reports the byte offset of the offending token so the CLI can
/// point at it; budget guards carry both the requested and the allowed size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed character or Weyl-element text.
    Parse {
        offset: usize,
        message: &'static str,
    },
    /// The text parsed, but with the wrong number of components.
    WrongArity { expected: usize, found: usize },
    /// Weyl enumeration refused: 6^g elements exceed the enumeration guard.
    EnumerationBudget { g: usize, max_g: usize },
    /// Oracle refused: binomial(6gr, p) basis subsets exceed the budget.
    SubsetBudget { required: u128, budget: u128 },
    /// A Weyl element was applied to a character with a different number of
    /// factors.
    FactorMismatch { sigma_g: usize, lambda_g: usize },
    /// An operation defined only for dominant characters was handed a
    /// non-dominant one.
    NotDominant,
    /// A cohomological degree argument fell outside its admissible interval.
    DegreeOutOfRange { k: i64, max: i64 },
    /// The character-peeling oracle reached an impossible state (a weight
    /// multiplicity went negative, or a maximal weight was not dominant).
    /// This signals an internal inconsistency and aborts the decomposition.
    OracleInconsistency(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::WrongArity { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            Error::EnumerationBudget { g, max_g } => {
                write!(
                    f,
                    "refusing to enumerate 6^{g} Weyl elements (guard: g <= {max_g})"
                )
            }
            Error::SubsetBudget { required, budget } => {
                write!(
                    f,
                    "oracle needs {required} basis subsets, budget is {budget}"
                )
            }
            Error::FactorMismatch { sigma_g, lambda_g } => {
                write!(
                    f,
                    "Weyl element has {sigma_g} factors but character has {lambda_g} triples"
                )
            }
            Error::NotDominant => write!(f, "character is not dominant"),
            Error::DegreeOutOfRange { k, max } => {
                write!(f, "degree {k} outside [0, {max}]")
            }
            Error::OracleInconsistency(what) => write!(f, "oracle inconsistency: {what}"),
        }
    }
}

impl core::error::Error for Error {}
