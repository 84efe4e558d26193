use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least one part")]
    EmptyComposition,
    #[error("composition parts must be positive (got 0 at position {0})")]
    ZeroPart(usize),
    #[error("repetition count must be at least 1")]
    ZeroRepetition,
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("connection set over Z_{0} must contain 0")]
    MissingZero(usize),
    #[error("connection set {0} is not symmetric (it differs from its inverse)")]
    NotSymmetric(String),
    #[error("connection set {0} does not generate Z_n (gcd with the modulus is {1})")]
    NotGenerating(String, usize),
    #[error("composition {0} is not a palindrome")]
    NotPalindrome(String),
    #[error("composition {0} is periodic")]
    Periodic(String),
    #[error("composition {0} has gcd 1; the rescaling is only defined for gcd > 1")]
    CoprimeParts(String),
    #[error("{what} requires n >= {min} (got {n})")]
    OutOfDomain {
        what: &'static str,
        min: usize,
        n: usize,
    },
    #[error("part count k = {k} must lie in [1, {n}]")]
    PartCountOutOfRange { n: usize, k: usize },
    #[error("exhaustive enumeration is limited to n <= {max} (got {n})")]
    TooLarge { n: usize, max: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
