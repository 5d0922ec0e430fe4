use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("default characterisation {0} is not the least element (must be empty)")]
    DefaultNotLeast(String),

    #[error("duplicate case id `{0}`")]
    DuplicateId(String),

    #[error("the two outcome labels must differ, got `{0}` twice")]
    SameLabels(String),

    #[error("casebase is incoherent: {0}")]
    IncoherentCasebase(String),

    #[error("graph is not well-founded (cyclic attacks); cannot extend it incrementally")]
    IncoherentSource,

    #[error("an argument with characterisation {0} already exists with a different outcome")]
    DuplicateCharacterisation(String),

    #[error("cannot add {added}: existing argument {existing} is strictly more specific")]
    OutOfOrder { added: String, existing: String },

    #[error("enumeration over {size} items exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("feature universe of size {universe} cannot hold {cases} distinct cases")]
    UniverseTooSmall { universe: usize, cases: usize },

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}
