//! Shared error type for all weylham operations.

use thiserror::Error;

/// Every fallible operation in this crate returns this error type.
///
/// The variants mirror the failure modes of the individual pipeline stages;
/// `Internal` marks invariant violations that indicate a bug rather than bad
/// input.
#[derive(Debug, Error)]
pub enum Error {
    // input parsing
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("duplicate root: {0}")]
    DuplicateRoot(String),

    // base handling
    #[error("not a base: {0}")]
    NotABase(String),
    #[error("root string unbounded: {0}")]
    Unbounded(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("mixed signs: {0}")]
    MixedSigns(String),
    #[error("index out of range: {0}")]
    IndexError(String),

    // caps and generation
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("direction not i-good: {0}")]
    NotIGood(String),
    #[error("bad family specifier: {0}")]
    SpecError(String),
    #[error("non-integral coordinate: {0}")]
    NonIntegralCoordinate(String),

    // graph construction and quotients
    #[error("bipartiteness violated: {0}")]
    BipartiteViolation(String),
    #[error("incompatible partition: {0}")]
    IncompatiblePartition(String),

    // hamiltonian search
    #[error("rank unsupported by this construction: {0}")]
    RankError(String),
    #[error("system is not reducible: {0}")]
    NotReducible(String),
    #[error("component mismatch: {0}")]
    ComponentMismatch(String),
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error("no Hamiltonian cycle found (search space exhausted)")]
    NoCycleFound,

    // spectra
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("spectrum order too small (n < 3)")]
    DegenerateOrder,

    // permutation groups
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("generator set is not inverse-closed: {0}")]
    NotInverseClosed(String),
    #[error("identity element used as a generator")]
    IdentityGenerator,
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),

    /// Invariant violation inside the library: always a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
