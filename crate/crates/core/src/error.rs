use thiserror::Error;

/// Errors produced by grid construction, weight assembly and the solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("grid needs at least {min} nodes, got {got}")]
    GridTooSmall { min: usize, got: usize },

    #[error("invalid domain: endpoints must be finite with a < b, got [{a}, {b}]")]
    InvalidDomain { a: f64, b: f64 },

    #[error("spacing {h} does not partition [{a}, {b}] into whole intervals")]
    SpacingMismatch { a: f64, b: f64, h: f64 },

    #[error("derivative order must be 0, 1 or 2, got {0}")]
    InvalidOrder(usize),

    #[error("coordinate must be finite, got {0}")]
    NonFiniteCoordinate(f64),

    #[error("basis index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: isize, lo: isize, hi: isize },

    #[error("zero pivot in row {row}: tridiagonal matrix is singular")]
    SingularMatrix { row: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("kink wave speed must satisfy |c| < 1, got {0}")]
    InvalidKinkSpeed(f64),

    #[error("breather wave speed must be nonzero")]
    InvalidBreatherSpeed,

    #[error("unknown example id {0}, expected 1, 2 or 3")]
    UnknownExample(u8),

    #[error("problem has no exact solution")]
    MissingExactSolution,

    #[error("grid [{grid_a}, {grid_b}] does not match problem domain [{a}, {b}]")]
    DomainMismatch {
        grid_a: f64,
        grid_b: f64,
        a: f64,
        b: f64,
    },

    #[error("step size must be positive and finite, got {0}")]
    InvalidStepSize(f64),

    #[error("time window must satisfy t_end >= t0, got t0 = {t0}, t_end = {t_end}")]
    InvalidTimeWindow { t0: f64, t_end: f64 },

    #[error("solution diverged at t = {t} (stage {stage})")]
    Diverged { t: f64, stage: usize },

    #[error("need at least {min} spacings for a convergence study, got {got}")]
    TooFewSpacings { min: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
