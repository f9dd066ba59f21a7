use thiserror::Error;

/// Errors surfaced by the library. Domain violations (bad inputs) are kept
/// distinct from search-budget exhaustion and from internal verification
/// failures, since callers react differently to each.
#[derive(Debug, Error)]
pub enum Error {
    #[error("root {0:?} is not a root of this system")]
    NotARoot(String),
    #[error("expected a positive root, got {0}")]
    NegativeRoot(String),
    #[error("expected a positive affine root, got {0}")]
    NonPositiveAffineRoot(String),
    #[error("word is not reduced: letter {at} sends an accumulated root negative")]
    NotReduced { at: usize },
    #[error("subsets are not orthogonal: ({0}, {1})")]
    NotOrthogonal(String, String),
    #[error("set is not biclosed: {0}")]
    NotBiclosed(String),
    #[error("biclosed set is not finitely generated")]
    NotFinitelyGenerated,
    #[error("elements are not pairwise comparable")]
    NotComparable,
    #[error("family has no common upper bound")]
    Unbounded,
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("set is not in the expected canonical family: {0}")]
    Unrecognized(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
