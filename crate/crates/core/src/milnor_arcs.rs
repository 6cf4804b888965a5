//! Milnor set of `f` relative to a center, its arcs at infinity and their
//! indices.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::exact_algebra::elimination::{enclosing_radius, singular_point_bounds, solution_bounds};
use crate::exact_algebra::{isolate_real_roots, AlgebraicPoint, Axis, Rational, RealRoot, Sign};
use crate::gauss_winding::Circle;
use crate::infinity_analysis::{LimitValue, ProjectivePoint, Side};
use crate::{Error, QBiPoly, Result};

fn shifted(a: &(Rational, Rational)) -> (QBiPoly, QBiPoly) {
    (
        QBiPoly::x() - QBiPoly::constant(a.0.clone()),
        QBiPoly::y() - QBiPoly::constant(a.1.clone()),
    )
}

/// `h_a = (y - a2) f_x - (x - a1) f_y`, content removed.
pub fn milnor_polynomial(f: &QBiPoly, a: &(Rational, Rational)) -> Result<QBiPoly> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let (dx, dy) = shifted(a);
    let h = dy * f.differentiate(Axis::X) - dx * f.differentiate(Axis::Y);
    if h.is_zero() {
        return Err(Error::DegenerateCenter);
    }
    Ok(h.primitive())
}

/// Half the second derivative of `|z - a|^2` along the fibre direction
/// `(-f_y, f_x)`.
pub fn w_polynomial(f: &QBiPoly, a: &(Rational, Rational)) -> QBiPoly {
    let (dx, dy) = shifted(a);
    let fx = f.differentiate(Axis::X);
    let fy = f.differentiate(Axis::Y);
    let fxx = fx.differentiate(Axis::X);
    let fxy = fx.differentiate(Axis::Y);
    let fyy = fy.differentiate(Axis::Y);
    let grad2 = fx.clone() * fx.clone() + fy.clone() * fy.clone();
    let u = dy.clone() * fxx - dx.clone() * fxy.clone();
    let v = dy * fxy - dx * fyy;
    grad2 - fy * u + fx * v
}

/// Tangency of `{h = 0}` with the circles around `a`.
pub fn transversality_polynomial(h: &QBiPoly, a: &(Rational, Rational)) -> QBiPoly {
    let (dx, dy) = shifted(a);
    dy * h.differentiate(Axis::X) - dx * h.differentiate(Axis::Y)
}

/// Radial derivative `(z - a) . grad f`.
pub fn radial_derivative(f: &QBiPoly, a: &(Rational, Rational)) -> QBiPoly {
    let (dx, dy) = shifted(a);
    dx * f.differentiate(Axis::X) + dy * f.differentiate(Axis::Y)
}

/// Evidence that a center is generic enough for every later step, with the
/// radius beyond which the Milnor set is a disjoint union of monotone arcs.
#[derive(Clone, Debug)]
pub struct CenterCertificate {
    pub center: (Rational, Rational),
    pub h: QBiPoly,
    pub w: QBiPoly,
    pub radial: QBiPoly,
    /// Exceeds every exceptional point found by the certificate.
    pub radius_bound: Rational,
}

/// Accept `a` when `h_a` is a nonzero squarefree polynomial and the sets
/// `{h = W = 0}`, `{h = 0, (y-a2) h_x = (x-a1) h_y}` and the singular points
/// of `h` and `f` are finite; the common bound on all of them is recorded.
pub fn is_generic_center(f: &QBiPoly, a: &(Rational, Rational)) -> Result<CenterCertificate> {
    if !f.has_isolated_singularities() {
        return Err(Error::NonIsolatedSingularities);
    }
    let h = milnor_polynomial(f, a)?;
    if !h.is_squarefree() {
        return Err(Error::CenterRejected("Milnor polynomial is not squarefree".into()));
    }
    let west = (-Rational::one(), Rational::zero());
    if h.restrict_to_line((&a.0, &a.1), (&west.0, &west.1)).is_zero() {
        return Err(Error::CenterRejected("M contains the horizontal line through the center".into()));
    }
    fn reject(what: &'static str) -> impl Fn(Error) -> Error {
        move |_| Error::CenterRejected(what.to_string())
    }
    let w = w_polynomial(f, a);
    let mut boxes = Vec::new();
    if !h.is_constant() {
        boxes.push(solution_bounds(&h, &w).map_err(reject("W vanishes on a component of M"))?);
        let t = transversality_polynomial(&h, a);
        boxes.push(solution_bounds(&h, &t).map_err(reject("M is tangent to circles along a component"))?);
        boxes.push(singular_point_bounds(&h).map_err(reject("singular points of M are not isolated"))?);
    }
    let fx = f.differentiate(Axis::X);
    let fy = f.differentiate(Axis::Y);
    if !fx.is_zero() && !fy.is_zero() && !fx.is_constant() && !fy.is_constant() {
        boxes.push(solution_bounds(&fx, &fy)?);
    }
    let radius_bound = boxes
        .iter()
        .map(|b| enclosing_radius(b, a))
        .max()
        .unwrap_or_else(|| enclosing_radius(&(Rational::zero(), Rational::zero()), a));
    Ok(CenterCertificate {
        center: a.clone(),
        radial: radial_derivative(f, a),
        h,
        w,
        radius_bound,
    })
}

/// The fixed retry order for centers.
pub fn center_sequence() -> impl Iterator<Item = (Rational, Rational)> {
    let head = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)];
    let tail = (3i64..).flat_map(|s| (0..=s).map(move |i| (i, s - i)));
    head.into_iter()
        .chain(tail.filter(move |p| !head.contains(p)))
        .take(30)
        .map(|(i, j)| (Rational::from_integer(i.into()), Rational::from_integer(j.into())))
}

/// An integer radius beyond the certificate bound whose circle avoids `M` at
/// the parameter point `t = ±∞`.
pub fn choose_radius(cert: &CenterCertificate) -> Rational {
    let mut r = cert.radius_bound.ceil();
    if r < Rational::one() {
        r = Rational::one();
    }
    bump_radius(cert, r)
}

/// Smallest integer `>= r` whose circle meets `M` away from `t = ±∞`.
pub fn bump_radius(cert: &CenterCertificate, r: Rational) -> Rational {
    let mut r = r.ceil();
    while cert.h.eval(&(&cert.center.0 - &r), &cert.center.1).is_zero() {
        r += Rational::one();
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ArcIndex {
    #[serde(rename = "+1/2")]
    PlusHalf,
    #[serde(rename = "-1/2")]
    MinusHalf,
}

impl ArcIndex {
    /// The index in units of one half.
    pub fn halves(self) -> i64 {
        match self {
            ArcIndex::PlusHalf => 1,
            ArcIndex::MinusHalf => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// One Milnor arc, identified by the point where it crosses the circle.
#[derive(Clone, Debug)]
pub struct ArcRecord {
    /// Counterclockwise position, starting from the direction of the positive x-axis.
    pub position: usize,
    /// Circle parameter of the anchor.
    pub param: RealRoot,
    pub anchor: AlgebraicPoint,
    pub angle: f64,
    pub index: ArcIndex,
    pub direction: Direction,
    pub limit: Option<LimitValue>,
    pub endpoint: Option<ProjectivePoint>,
    pub side: Option<Side>,
}

/// Anchors of the Milnor arcs on the circle of radius `r`, counterclockwise
/// from angle 0, with index and monotonicity filled in.
pub fn enumerate_arcs(cert: &CenterCertificate, r: &Rational, budget: usize) -> Result<Vec<ArcRecord>> {
    let circle = Circle::new(cert.center.clone(), r.clone());
    let at_inf = circle.point_at_infinity();
    if cert.h.eval(&at_inf.0, &at_inf.1).is_zero() {
        return Err(Error::NonTransverseCircle);
    }
    if cert.h.is_constant() {
        return Ok(Vec::new());
    }
    let pulled = circle.pullback(&cert.h);
    if pulled.is_zero() {
        return Err(Error::NonTransverseCircle);
    }
    let mut roots = isolate_real_roots(&pulled)?;
    if roots.iter().any(|t| t.multiplicity > 1) {
        return Err(Error::NonTransverseCircle);
    }
    let zero = Rational::zero();
    let (mut front, mut back): (Vec<RealRoot>, Vec<RealRoot>) = (Vec::new(), Vec::new());
    for t in roots.drain(..) {
        if t.cmp_rational(&zero) == Ordering::Less {
            back.push(t);
        } else {
            front.push(t);
        }
    }
    front.extend(back);
    front
        .into_iter()
        .enumerate()
        .map(|(position, param)| {
            let anchor = circle.algebraic_point(&param);
            let index = arc_index(cert, &anchor, budget)?;
            let direction = match anchor.sign_of(&cert.radial, budget)? {
                Sign::Positive => Direction::Increasing,
                Sign::Negative => Direction::Decreasing,
                Sign::Zero => return Err(Error::Other("critical point of f on a Milnor arc".into())),
            };
            let angle = Circle::angle_of(param.approx());
            Ok(ArcRecord {
                position,
                angle: if angle < 0.0 { angle + std::f64::consts::TAU } else { angle },
                param,
                anchor,
                index,
                direction,
                limit: None,
                endpoint: None,
                side: None,
            })
        })
        .collect()
}

/// `+1/2` when the fibre through the anchor stays locally inside the disk
/// (`W < 0`), `-1/2` when it bends outside (`W > 0`).
pub fn arc_index(cert: &CenterCertificate, anchor: &AlgebraicPoint, budget: usize) -> Result<ArcIndex> {
    match anchor.sign_of(&cert.w, budget)? {
        Sign::Negative => Ok(ArcIndex::PlusHalf),
        Sign::Positive => Ok(ArcIndex::MinusHalf),
        Sign::Zero => Err(Error::IndexZeroArc),
    }
}

/// `1 + Σ i(γ)` as an integer; fails on an odd total of halves.
pub fn index_from_arcs(arcs: &[ArcRecord]) -> Result<i64> {
    let halves: i64 = arcs.iter().map(|a| a.index.halves()).sum();
    if halves % 2 != 0 {
        return Err(Error::ParityViolation);
    }
    Ok(1 + halves / 2)
}
