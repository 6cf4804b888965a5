//! Exact arithmetic substrate: rationals, polynomials, resultants, real roots.

pub mod algebraic;
pub mod bipoly;
pub mod elimination;
pub mod interval;
pub mod resultant;
pub mod scalar;
pub mod sturm;
pub mod unipoly;

pub use algebraic::{refine_to_sign, DEFAULT_SIGN_BUDGET, AlgebraicPoint, IsolatingInterval, RealRoot};
pub use bipoly::{Axis, BivariatePoly};
pub use interval::{Interval, IntervalBox};
pub use resultant::{resultant, subresultant};
pub use scalar::{Field, Rational, Ring, Sign};
pub use sturm::{cauchy_root_bound, isolate_real_roots};
pub use unipoly::UniPoly;
