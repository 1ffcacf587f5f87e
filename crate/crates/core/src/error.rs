use thiserror::Error;

use crate::partition::Partition;

/// Everything that can go wrong in this crate.
///
/// The variants split into input problems (bad partition text, violated
/// preconditions) and resource problems (a request above a configured cap).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("partition {0} does not have distinct parts")]
    NonDistinctParts(Partition),

    #[error("partition size {0} is odd, an even size 2n is required")]
    OddSize(usize),

    #[error("{name} = {value} is outside the allowed range {min}..={max}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),

    #[error("{what} requested for n = {requested}, above the cap {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("the two alternating-sum forms disagree ({prefix} vs {suffix})")]
    FormMismatch { prefix: i64, suffix: i64 },

    #[error("negative value {0} where a multiplicity was expected")]
    NegativeMultiplicity(i64),

    #[error("invalid character table: {0}")]
    InvalidTable(String),
}

impl Error {
    /// True for errors caused by exceeding a size cap rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    /// True for malformed textual input.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
