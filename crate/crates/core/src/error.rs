use thiserror::Error;

use crate::lattice::{AlgebraShape, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid algebra shape gl({m}|{n}): need 1 <= m, n <= 3")]
    InvalidShape { m: usize, n: usize },

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch {
        left: AlgebraShape,
        right: AlgebraShape,
    },

    #[error("odd root {0} is isotropic and has no coroot")]
    OddRoot(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("weight {0} is atypical")]
    Atypical(Weight),

    #[error("weight {0} is typical")]
    Typical(Weight),

    #[error("weight {weight} does not occur in the flag")]
    NotInFlag { weight: Weight },

    #[error("no projective cover known for {0}")]
    Unavailable(Weight),

    #[error("recursion depth exceeded while deducing {0}")]
    DepthExceeded(Weight),

    #[error("no table branch covers {0}")]
    NoBranch(Weight),

    #[error("malformed table term {term:?} in {case}")]
    MalformedTerm { case: String, term: String },

    #[error("composition series of {weight} is not stable at window {window}")]
    Unstable { weight: Weight, window: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
