use thiserror::Error;

/// Errors raised by the series, partition, SIP and identity layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {left} vs {right}")]
    VarSetMismatch { left: String, right: String },

    #[error("invalid variable set: {0}")]
    InvalidVarSet(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("leading coefficient {0} is not a unit monomial")]
    NonUnitLeading(String),

    #[error("cannot invert the zero series")]
    InverseOfZero,

    #[error("an exact polynomial has no finite inverse; truncate it first")]
    ExactInverse,

    #[error("substitution rejected: {0}")]
    InvalidSubstitution(String),

    #[error("infinite Pochhammer symbol needs positive q-powers in base and step")]
    DivergentProduct,

    #[error("weight {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: u64, cap: u64 },

    #[error("unknown partition class `{0}`")]
    UnknownClass(String),

    #[error("class `{0}` has no registered SIP basis")]
    NoBasis(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{id}` has no side {side}")]
    UnknownSide { id: String, side: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{0}")]
    NotMember(String),

    #[error("invalid Ferrers decomposition: {0}")]
    InvalidFerrers(String),

    #[error("SIP decomposition failure: {0}")]
    Decomposition(String),

    #[error("builder for `{id}` is only reliable to q^{got}, requested q^{want}")]
    ShortOrder { id: String, got: i64, want: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
