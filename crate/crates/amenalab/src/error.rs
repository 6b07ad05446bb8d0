use thiserror::Error;

/// Errors shared across the library.
///
/// Anything that reaches a user as a failed precondition lives here; internal
/// invariant breaches panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family mismatch: expected element of {expected}, got element of {got}")]
    FamilyMismatch { expected: String, got: String },

    #[error("{family} has no involution")]
    NoInvolution { family: String },

    #[error("{family} is not finite")]
    NotFinite { family: String },

    #[error("table is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("table entry out of range: row {row}, column {col} holds {value}, order is {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("involution is invalid: {reason}")]
    BadInvolution { reason: String },

    #[error("masses must be non-negative: {element} has mass {mass}")]
    NegativeMass { element: String, mass: String },

    #[error("masses must sum to 1, got {total}")]
    NotProbability { total: String },

    #[error("weight vector assigns mass to {element}, which is outside the carrier")]
    MassOffCarrier { element: String },

    #[error("window at n = {n} is empty")]
    EmptyWindow { n: usize },

    #[error("range is empty or not increasing")]
    BadRange,

    #[error("{family} supports no membership oracle for {set}")]
    NoMembershipOracle { family: String, set: String },

    #[error("subset {subset} is not closed under multiplication: {a}*{b} = {c} escapes")]
    NotClosed {
        subset: String,
        a: String,
        b: String,
        c: String,
    },

    #[error("restriction carrier has zero total mass")]
    ZeroMassCarrier,

    #[error("partition is not a congruence: {a} ~ {b} but {a}*{c} and {b}*{c} fall in different classes")]
    NotCongruence { a: usize, b: usize, c: usize },

    #[error("invalid element for {family}: {reason}")]
    InvalidPayload { family: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow in {op}; inputs exceed the supported desk scale")]
    Overflow { op: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
