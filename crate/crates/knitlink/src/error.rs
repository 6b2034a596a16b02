use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),

    #[error("inexact division: remainder is nonzero")]
    InexactDivision,

    #[error("zero polynomial has no canonical unit form")]
    ZeroPolynomial,

    #[error("unmapped generator `{0}`")]
    UnmappedGenerator(String),

    #[error("unknown crossing id {0}")]
    UnknownCrossing(usize),

    #[error("component index {0} out of range (diagram has {1})")]
    ComponentOutOfRange(usize, usize),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("move does not apply at the given location: {0}")]
    MoveNotApplicable(String),

    #[error("incompatible band: {0}")]
    IncompatibleBand(String),

    #[error("open component {0}: operation requires closed components")]
    OpenComponent(usize),

    #[error("seam profile mismatch: {0}")]
    ProfileMismatch(String),

    #[error("unknown primitive `{0}`")]
    UnknownPrimitive(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("knitting position violated: {0}")]
    KnittingPosition(String),

    #[error("forbidden move: {0}")]
    ForbiddenMove(String),

    #[error("export not applicable: {0}")]
    ExportInapplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
