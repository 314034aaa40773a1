use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A precondition on the arguments does not hold.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A character handed to the Schur expansion is not symmetric, or the
    /// expansion produced a negative multiplicity.
    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),

    /// `end0(E)` needs exactly one trivial summand in `E ⊗ E∨`.
    #[error("end0 needs exactly one trivial summand in E ⊗ E∨, found {found}")]
    End0Multiplicity { found: u64 },

    /// Two routes that must agree did not.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    /// The class does not lie in the span of the requested basis on the
    /// zero locus. `residual` holds the unexplained pairings.
    #[error("class of degree {degree} is not expressible in the requested basis (residual pairings: {})", residual.join(", "))]
    NotExpressible { degree: usize, residual: Vec<String> },

    /// The input carries no information for the requested computation.
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
