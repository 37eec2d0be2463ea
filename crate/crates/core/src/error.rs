use thiserror::Error;

use crate::coxeter::CoxeterType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("letter {letter} out of range 1..={rank} for {ty}")]
    LetterOutOfRange { ty: CoxeterType, letter: u8, rank: u8 },

    #[error("word {0:?} is not reduced")]
    NotReduced(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unknown Coxeter type {0:?}")]
    UnknownType(String),

    #[error("resource cap exceeded: {0}")]
    ResourceLimit(String),

    #[error("no move of width {width} at position {position} in {word}")]
    IllegalMove {
        word: String,
        position: usize,
        width: usize,
    },

    #[error("{ty} has no operator attached to the relation between letters {a} and {b}")]
    Unassigned { ty: CoxeterType, a: u8, b: u8 },

    #[error("invalid trace: {0}")]
    InvalidTrace(String),

    #[error("derivation convention error: {0}")]
    Convention(String),

    #[error("invalid operator expression: {0}")]
    InvalidExpression(String),

    #[error("duplicate factor signature {0}")]
    DuplicateFactor(String),

    #[error("operator {0} has no registered set-level map")]
    UnsupportedOperator(String),

    #[error("state has length {got}, expected {expected}")]
    StateLength { expected: usize, got: usize },

    #[error("domain too large for exhaustive mode: {0}")]
    DomainTooLarge(String),

    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),

    #[error("proof script error at stage {stage}: {reason}")]
    ProofScript { stage: usize, reason: String },

    #[error("malformed fixture: {0}")]
    Fixture(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
