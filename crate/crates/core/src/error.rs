use thiserror::Error;

/// Errors raised by the library.
///
/// Everything except [`Error::Internal`] describes bad input. `Internal`
/// means two independent computations disagreed, which is a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("partition {parts:?} has more than {n} parts")]
    TooManyParts { parts: Vec<u32>, n: usize },
    #[error("invalid vertex S^{{{l1},{l2}}}Q({t}): need l1 >= l2 >= 0")]
    InvalidVertex { l1: i64, l2: i64, t: i64 },
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("empty support has no slope")]
    EmptySupport,
    #[error("support has a vertex of multiplicity {0}; only multiplicity-1 supports are handled")]
    MultiplicityNotOne(u32),
    #[error("not a valid cylinder staircase: {0}")]
    NotACylinderStaircase(String),
    #[error("hypotenuse leaves the quiver at S^{{{l1},{l2}}}")]
    InvalidHypotenuse { l1: i64, l2: i64 },
    #[error("translated shape leaves the quiver")]
    InvalidTranslate,
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
