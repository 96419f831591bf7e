use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("grading error: {0}")]
    Grading(String),

    #[error("no image given for generator `{0}`")]
    MissingImage(String),

    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("not a Cartan pair: {0}")]
    NotCartanPair(String),

    #[error("reduction error: {0}")]
    Reduction(String),

    #[error("arity mismatch: word of length {word} paired with {args} arguments")]
    Arity { word: usize, args: usize },

    #[error("invalid Lie algebra: {0}")]
    InvalidLie(String),

    #[error("rule `{0}` does not decrease the word order")]
    Orientation(String),

    #[error("rewriting system is not confluent at `{0}`")]
    NotConfluent(String),

    #[error("division by {divisor} is not integral")]
    NonIntegralDivision { divisor: i64 },

    #[error("unknown catalog case `{0}`")]
    UnknownCase(String),

    #[error("{0}")]
    OutOfFamily(String),

    #[error("invalid parameters for {case}: {reason}")]
    Parameter { case: String, reason: String },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },

    #[error("expression error at column {column}: {message}")]
    Expression { column: usize, message: String },
}
