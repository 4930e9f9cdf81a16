use thiserror::Error;

/// Errors for structure construction and evaluation.
///
/// Failed *checks* are not errors: checkers return a report with a witness.
/// Errors mean the input is malformed (empty cell, index out of range, bad
/// rational) or an internal consistency guarantee broke (quotient operation
/// not well defined), which indicates a bug rather than a refuted property.
#[derive(Debug, Error)]
pub enum HvError {
    #[error("invalid rational {0}: expected a value in [0,1]")]
    RationalRange(String),
    #[error("cannot parse rational from {0:?}: expected \"p/q\", \"0\" or \"1\"")]
    RationalSyntax(String),
    #[error("invalid interval [{lo}, {hi}]: lower endpoint exceeds upper")]
    IntervalOrder { lo: String, hi: String },
    #[error("invalid threshold [{t}, {s}]: t must not exceed s")]
    ThresholdOrder { t: String, s: String },
    #[error("carrier size {0} exceeds the configured cap {1} (override with HVLAB_MAX_CARRIER, hard ceiling 64)")]
    CarrierTooLarge(usize, usize),
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("duplicate carrier label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("empty hyperoperation cell at {0}")]
    EmptyCell(String),
    #[error("cell at {context} contains element index {index} outside carrier of size {size}")]
    CellOutOfRange {
        context: String,
        index: usize,
        size: usize,
    },
    #[error("table at {context} has {got} rows/cells, expected {want}")]
    TableShape {
        context: String,
        got: usize,
        want: usize,
    },
    #[error("subset operand is empty in {0}")]
    EmptySubsetOperand(&'static str),
    #[error("norm table has no entry for ({0}, {1})")]
    NormDomain(String, String),
    #[error("norm pair mismatch: {0}")]
    NormKind(String),
    #[error("fuzzy set over carrier of size {got}, structure expects {want}")]
    FuzzyShape { got: usize, want: usize },
    #[error("map image {index} outside target carrier of size {size}")]
    MapOutOfRange { index: usize, size: usize },
    #[error("source and target must share an identical ring structure")]
    RingMismatch,
    #[error("{0} requires an ordinary (singleton-celled) structure")]
    NotOrdinary(&'static str),
    #[error("structure is not a valid {kind}: {detail}")]
    InvalidStructure { kind: &'static str, detail: String },
    #[error("internal consistency violation: {0}")]
    Consistency(String),
    #[error("parse error at {path}: {detail}")]
    Parse { path: String, detail: String },
    #[error("usage: {0}")]
    Usage(String),
    #[error("hypothesis ({variant}) fails: {detail}")]
    Hypothesis { variant: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, HvError>;
