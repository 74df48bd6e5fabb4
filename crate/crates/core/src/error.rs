use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient index {index} is beyond the truncation order {order}")]
    IndexBeyondOrder { index: usize, order: usize },

    #[error("divisor has valuation {divisor} but dividend only has valuation {dividend}")]
    HigherValuationDivisor { dividend: usize, divisor: usize },

    #[error("divisor is identically zero to its order")]
    ZeroDivisor,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantInner,

    #[error("series must have constant term 1")]
    ConstantTermNotOne,

    #[error("series must have constant term 0")]
    NonzeroConstant,

    #[error("a truncation order of at least {needed} is required, have {available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("index ({n}, {k}) is outside the triangle 0 <= k <= n")]
    OutOfRange { n: usize, k: usize },

    #[error("unknown {kind} `{tag}`")]
    UnknownTag { kind: &'static str, tag: String },

    #[error("{what} disagree at n = {n}: {left} != {right}")]
    RouteMismatch {
        what: &'static str,
        n: usize,
        left: String,
        right: String,
    },
}

impl Error {
    pub(crate) fn unknown(kind: &'static str, tag: &str) -> Self {
        Error::UnknownTag {
            kind,
            tag: tag.to_string(),
        }
    }
}
