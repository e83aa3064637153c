use thiserror::Error;

/// Errors raised while building or transforming words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed token `{token}`: {reason}")]
    Syntax { token: String, reason: &'static str },
    #[error("letter `{token}` does not exist on {n} strands")]
    OutOfRange { token: String, n: usize },
    #[error("strand count {0} is not supported (expected 2..={max})", max = crate::words::MAX_STRANDS)]
    StrandCount(usize),
    #[error("letter `{letter}` has no image under this power of the rotation on {n} strands")]
    NotRotatable { letter: String, n: usize },
    #[error("expected a word on {expected} strands, got one on {found}")]
    StrandMismatch { expected: usize, found: usize },
}

/// Errors raised by the normal form machinery.
///
/// Apart from [`Error::Word`] and [`Error::Precondition`], every variant means an
/// internal invariant was breached and points at a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no ladder decomposition: {0}")]
    Ladder(String),
    #[error("not a wall: {0}")]
    Wall(String),
    #[error("reversing did not terminate within {budget} steps")]
    ReversingBudget { budget: usize },
    #[error("invariant breached: {0}")]
    Invariant(String),
}

impl Error {
    /// True when the error signals a bug rather than bad input.
    pub fn is_invariant_breach(&self) -> bool {
        !matches!(self, Error::Word(_) | Error::Precondition(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
