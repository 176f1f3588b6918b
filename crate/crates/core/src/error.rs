use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime dimension")]
    NotPrime(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operation is only defined for odd prime dimensions")]
    EvenDim,
    #[error("dimension {0} is not supported by this operation")]
    UnsupportedDim(u32),
    #[error("matrix dimension {dim} exceeds the cap of {cap}")]
    DimensionOverflow { dim: usize, cap: usize },
    #[error("operands have mismatched shapes")]
    ShapeMismatch,
    #[error("the identity Pauli has no nontrivial eigenprojector")]
    IdentityPauli,
    #[error("rank-1 decomposition needs both tensor factors to be non-identity")]
    IdentityFactor,
    #[error("Pauli phase is not a power of omega, so it is not an observable with spectrum omega^k")]
    NonObservablePhase,
    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),
    #[error("invalid stabilizer generators: {0}")]
    InvalidStabilizer(&'static str),
    #[error("matrix is not in SL(2, Z_d)")]
    NotSl2,
    #[error("connection set must exclude the identity and be closed under inverses")]
    BadConnectionSet,
    #[error("hint is not a cover of the vertex set by cliques: {0}")]
    InvalidHint(&'static str),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("solver did not converge: bracket [{lower}, {upper}]")]
    NoConvergence { lower: f64, upper: f64 },
    #[error("decomposition does not reproduce the Bell operator (max deviation {0:e})")]
    DecompositionMismatch(f64),
    #[error("no projector subset satisfies the required identity")]
    SearchFailed,
    #[error("parse error: {0}")]
    Parse(String),
}
