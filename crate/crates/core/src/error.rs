//! Error types for every layer of the crate.

use num_rational::BigRational;
use thiserror::Error;

use crate::events::{Event, Label};

/// Malformed event text or an event that violates the sign constraint.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EventError {
    #[error("invalid label `{0}`: labels must match [A-Za-z_][A-Za-z0-9_]*")]
    InvalidLabel(String),
    #[error("label `{0}` occurs with both signs; an event cannot hold an atom and its antievent")]
    ConflictingAtoms(Label),
    #[error("empty entry in event text `{0}`")]
    EmptyEntry(String),
}

/// Precondition violations of the set-structure predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("member {0} mixes positive and negative atoms")]
    MixedSign(Event),
    #[error("member {member} is not a subset of the universe {universe}")]
    NotInUniverse { member: Event, universe: Event },
    #[error("member {0} of the positive algebra holds an antievent")]
    NotPositive(Event),
    #[error(
        "closure over a universe of {atoms} atoms exceeds the materialization ceiling of {ceiling}"
    )]
    TooLarge { atoms: usize, ceiling: usize },
}

/// Errors raised while building or evaluating an extended probability space.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpaceError {
    #[error("atom weights sum to {sum}, expected exactly 1")]
    Normalization { sum: BigRational },
    #[error("weight of `{label}` is {weight}; atom weights must be non-negative")]
    NonNegativity { label: Label, weight: BigRational },
    #[error("positive family is not a set algebra containing the whole positive ground set: {0}")]
    Algebra(String),
    #[error("schema mismatch: {0}")]
    Schema(String),
    #[error("event {0} is not a member of the event family")]
    NotMeasurable(Event),
    #[error("ground set must hold at least one label")]
    EmptyGround,
    #[error("duplicate ground label `{0}`")]
    DuplicateLabel(Label),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Errors raised by the file/CLI harness.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid rational literal `{0}`")]
    Literal(String),
    #[error("{atoms} atoms exceeds the enumeration ceiling of {ceiling}; use sampled mode")]
    CeilingExceeded { atoms: usize, ceiling: usize },
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Event(#[from] EventError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
