//! Behaviour of the Milnor set near the line at infinity.

pub mod critical;
pub mod fibres;
pub mod germ;
pub mod limits;
pub mod profile;
pub mod projective;

use std::fmt;

use crate::exact_algebra::RealRoot;

pub use critical::critical_values;
pub use fibres::{fibres_at_infinity, FibreTest, FibresAtInfinity};
pub use germ::{classify_line, milnor_germ, mult_at_linf, tangent_cone, BranchSummary, ConeLine, TangentCone};
pub use limits::{analysis_radius, annotate_arcs, arc_limit, limit_candidates, milnor_sectors, LimitCandidates};
pub use profile::{profile_at, ConeLineReport, InfinityProfile};
pub use projective::{binary_form_roots, multiplicity_at, points_at_infinity, ProjectivePoint, Sector, SectorSet, Side};

/// Short text for a real algebraic number: the value when rational,
/// otherwise an approximation with its isolating interval.
pub fn describe_root(r: &RealRoot) -> String {
    match r.to_rational() {
        Some(q) => q.to_string(),
        None => format!("~{:.6} in ({}, {})", r.approx(), r.lo, r.hi),
    }
}

/// Limit of `f` along an arc of the Milnor set as it runs off to infinity.
#[derive(Clone, Debug)]
pub enum LimitValue {
    Finite(RealRoot),
    PlusInfinity,
    MinusInfinity,
}

impl LimitValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, LimitValue::Finite(_))
    }

    pub fn approx(&self) -> f64 {
        match self {
            LimitValue::Finite(r) => r.approx(),
            LimitValue::PlusInfinity => f64::INFINITY,
            LimitValue::MinusInfinity => f64::NEG_INFINITY,
        }
    }
}

impl PartialEq for LimitValue {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (LimitValue::Finite(a), LimitValue::Finite(b)) => a.cmp_root(b).is_eq(),
            (LimitValue::PlusInfinity, LimitValue::PlusInfinity) => true,
            (LimitValue::MinusInfinity, LimitValue::MinusInfinity) => true,
            _ => false,
        }
    }
}

impl fmt::Display for LimitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitValue::Finite(r) => write!(f, "{}", describe_root(r)),
            LimitValue::PlusInfinity => write!(f, "+inf"),
            LimitValue::MinusInfinity => write!(f, "-inf"),
        }
    }
}
