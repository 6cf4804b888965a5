//! Index at infinity of the gradient of a real bivariate polynomial.

pub mod exact_algebra;
pub mod gauss_winding;
pub mod infinity_analysis;
pub mod input_output;
pub mod milnor_arcs;
pub mod cluster_index;
pub mod bound_suite;
pub mod pipeline;

pub use exact_algebra::{Rational, Sign};

/// Univariate polynomial over the rationals.
pub type QPoly = exact_algebra::UniPoly<Rational>;
/// Bivariate polynomial over the rationals.
pub type QBiPoly = exact_algebra::BivariatePoly<Rational>;
/// Univariate polynomial with floating point coefficients.
pub type FPoly = exact_algebra::UniPoly<f64>;
/// Bivariate polynomial with floating point coefficients.
pub type FBiPoly = exact_algebra::BivariatePoly<f64>;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can stop an analysis. Messages are stable; the report
/// writer echoes them verbatim.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("degenerate resultant")]
    DegenerateResultant,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("undecided sign")]
    UndecidedSign,
    #[error("degenerate center")]
    DegenerateCenter,
    #[error("center rejected: {0}")]
    CenterRejected(String),
    #[error("non-isolated exceptional set")]
    NonIsolatedExceptionalSet,
    #[error("non-isolated singularities")]
    NonIsolatedSingularities,
    #[error("singular point on circle")]
    SingularPointOnCircle,
    #[error("non-transverse circle")]
    NonTransverseCircle,
    #[error("index-0 arc: center not generic")]
    IndexZeroArc,
    #[error("limit undecided; surviving candidates: {candidates:?}")]
    LimitUndecided { candidates: Vec<String> },
    #[error("L^inf is a component")]
    LineAtInfinityComponent,
    #[error("cluster index contradiction")]
    ClusterIndexContradiction,
    #[error("parity violation")]
    ParityViolation,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("{0}")]
    Other(String),
}
