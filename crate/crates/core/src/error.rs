use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid modulus {0}: at least two colors are required")]
    InvalidModulus(i64),

    #[error("residue {c} outside the admissible range [{lo}, {hi}]")]
    ResidueOutOfRange { c: i64, lo: i64, hi: i64 },

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("partition rows must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid rank vector: {0}")]
    InvalidRanks(String),

    #[error("invalid occupation vector: {0}")]
    InvalidOccupation(String),

    #[error("invalid block data: {0}")]
    InvalidBlocks(String),

    #[error("invalid variable space: {0}")]
    InvalidSpace(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("series are not compatible: {0}")]
    Incompatible(String),

    /// A product factor (or geometric ratio) whose grading degree is not
    /// positive. In the closed-form products this is always an internal bug.
    #[error("factor `{factor}` has grading degree {degree}; a positive degree is required")]
    NonPositiveDegree { factor: String, degree: i64 },

    #[error("term `{term}` has negative grading degree {degree}")]
    NegativeDegree { term: String, degree: i64 },

    #[error("cannot restrict graded variable `{0}`")]
    GradedRestriction(String),

    #[error("malformed series json: {0}")]
    Json(String),
}

impl Error {
    /// True for errors that signal a bug in the product bookkeeping rather
    /// than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonPositiveDegree { .. } | Error::NegativeDegree { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
