use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid Hilbert layout: {0}")]
    InvalidLayout(String),

    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),

    #[error("partial trace must keep a nonempty proper subset of the factors")]
    TrivialTrace,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("eigenvalue {0:e} is below the clipping tolerance")]
    NegativeEigenvalue(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Fock cutoff {cutoff} is too small: {reason}")]
    Cutoff { cutoff: usize, reason: String },

    #[error("state has support in block {block}, which lacks two phonons of headroom below the cutoff {cutoff}")]
    SupportExceedsCutoff { block: i64, cutoff: usize },

    #[error(
        "intrinsic decoherence is only solvable for a time-independent coupling; \
         the closed-form channel does not apply to a modulated coupling (use gamma = 0 or constant modulation)"
    )]
    TimeDependentDecoherence,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("measure `{measure}` is not defined here: {reason}")]
    IncompatibleMeasure { measure: String, reason: String },

    #[error("invalid time grid: {0}")]
    InvalidGrid(String),

    #[error("need at least 3 grid points for event detection, got {0}")]
    GridTooCoarse(usize),
}
