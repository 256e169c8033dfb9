use thiserror::Error;

use crate::rootsystem::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no simple Lie algebra of type {family}{rank}")]
    IllegalType { family: char, rank: usize },
    #[error("cannot parse Cartan type from {0:?}")]
    ParseType(String),
    #[error("cannot parse word from {0:?}")]
    ParseWord(String),
    #[error("unknown output format {0:?}")]
    ParseFormat(String),
    #[error("index {index} is outside [1, {bound}]")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("word has length {got}, but the longest element has length {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("word is not a reduced word of the longest element (fails at position {position})")]
    NotReducedOrNotLongest { position: usize },
    #[error("reduced word enumeration exceeded the cap of {0} words")]
    LimitExceeded(usize),
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("position {0} has no later occurrence of its letter")]
    NoNextOccurrence(usize),
    #[error("initial b-vector {recursive:?} disagrees with the closed form {closed:?}")]
    ClosedFormMismatch {
        recursive: Vec<i64>,
        closed: Vec<i64>,
    },
    #[error("b-update along label {label} gives {updated:?}, recursion gives {recomputed:?}")]
    BUpdateMismatch {
        label: usize,
        updated: Vec<i64>,
        recomputed: Vec<i64>,
    },
    #[error("vertex {monomial} reached with b-vector {incoming:?}, stored {stored:?}")]
    MergeMismatch {
        monomial: String,
        stored: Vec<i64>,
        incoming: Vec<i64>,
    },
    #[error("index {i} of {ty} is outside the proven range; pass force to build anyway")]
    UnsupportedIndex { ty: CartanType, i: usize },
    #[error("V(Lambda_{i}) of {ty} is not minuscule")]
    NotMinuscule { ty: CartanType, i: usize },
    #[error("minor expansion has coefficients of both signs")]
    MixedSigns,
    #[error("{0} is not of type A")]
    NotTypeA(CartanType),
}

impl Error {
    /// Internal consistency failures, as opposed to bad input.
    pub fn is_assertion(&self) -> bool {
        matches!(
            self,
            Error::ClosedFormMismatch { .. }
                | Error::BUpdateMismatch { .. }
                | Error::MergeMismatch { .. }
                | Error::MixedSigns
        )
    }
}
