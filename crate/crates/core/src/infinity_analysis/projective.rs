//! Real points of the line at infinity and angular sectors around them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_algebra::sturm::{cauchy_root_bound, dyadic_root_bound};
use crate::exact_algebra::{isolate_real_roots, Rational, RealRoot, Sign, UniPoly};
use crate::{QBiPoly, QPoly, Result};

/// A real point `[a:b:0]` of the line at infinity.
#[derive(Clone, Debug)]
pub enum ProjectivePoint {
    /// Coprime integers with `b > 0`, or `b = 0` and `a = 1`.
    Rational { a: BigInt, b: BigInt },
    /// `[1:m:0]` for an irrational slope `m`.
    Algebraic { slope: RealRoot },
}

impl ProjectivePoint {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "[0:0:0] is not a point");
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if b.is_negative() || (b.is_zero() && a.is_negative()) {
            a = -a;
            b = -b;
        }
        ProjectivePoint::Rational { a, b }
    }

    pub fn from_slope(m: &RealRoot) -> Self {
        match m.to_rational() {
            Some(q) => ProjectivePoint::new(q.denom().clone(), q.numer().clone()),
            None => ProjectivePoint::Algebraic { slope: m.clone() },
        }
    }

    pub fn vertical() -> Self {
        ProjectivePoint::new(BigInt::zero(), BigInt::one())
    }

    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        match self {
            ProjectivePoint::Rational { a, b } => Some((a.clone(), b.clone())),
            ProjectivePoint::Algebraic { .. } => None,
        }
    }

    /// Sort key for the angle in `[0, π)`: slopes `m >= 0`, then the
    /// vertical point, then slopes `m < 0`.
    pub(crate) fn angle_cmp(&self, other: &Self) -> Ordering {
        let bucket = |p: &Self| -> u8 {
            match p {
                ProjectivePoint::Rational { a, .. } if a.is_zero() => 1,
                _ if p.normal_agrees_with_slope_ray() => 0,
                _ => 2,
            }
        };
        let (ba, bb) = (bucket(self), bucket(other));
        if ba != bb || ba == 1 {
            return ba.cmp(&bb);
        }
        self.slope_cmp(other)
    }

    fn slope_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjectivePoint::Rational { a, b }, ProjectivePoint::Rational { a: c, b: d }) => {
                Rational::new(b.clone(), a.clone()).cmp(&Rational::new(d.clone(), c.clone()))
            }
            (ProjectivePoint::Rational { a, b }, ProjectivePoint::Algebraic { slope }) => {
                slope.cmp_rational(&Rational::new(b.clone(), a.clone())).reverse()
            }
            (ProjectivePoint::Algebraic { slope }, ProjectivePoint::Rational { a, b }) => {
                slope.cmp_rational(&Rational::new(b.clone(), a.clone()))
            }
            (ProjectivePoint::Algebraic { slope }, ProjectivePoint::Algebraic { slope: s2 }) => slope.cmp_root(s2),
        }
    }

    /// Approximate normalized direction `(a, b)`.
    pub fn approx_direction(&self) -> (f64, f64) {
        match self {
            ProjectivePoint::Rational { a, b } => {
                let (x, y) = (
                    crate::exact_algebra::scalar::rational_to_f64(&Rational::from_integer(a.clone())),
                    crate::exact_algebra::scalar::rational_to_f64(&Rational::from_integer(b.clone())),
                );
                let n = x.hypot(y);
                (x / n, y / n)
            }
            ProjectivePoint::Algebraic { slope } => {
                let m = slope.approx();
                let s = if m < 0.0 { -1.0 } else { 1.0 };
                let n = 1f64.hypot(m);
                (s / n, s * m / n)
            }
        }
    }

    /// Whether the normalized direction is the positive ray `+(1, m)` of the
    /// slope chart (false only for negative slopes).
    fn normal_agrees_with_slope_ray(&self) -> bool {
        match self {
            ProjectivePoint::Rational { a, b } => !(a * b).is_negative(),
            ProjectivePoint::Algebraic { slope } => slope.cmp_rational(&Rational::zero()) != Ordering::Less,
        }
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ProjectivePoint::Rational { a, b }, ProjectivePoint::Rational { a: c, b: d }) => a == c && b == d,
            (ProjectivePoint::Algebraic { slope }, ProjectivePoint::Algebraic { slope: s2 }) => {
                slope.cmp_root(s2) == Ordering::Equal
            }
            _ => false,
        }
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Rational { a, b } => write!(f, "[{}:{}:0]", a, b),
            ProjectivePoint::Algebraic { slope } => write!(f, "[1:{}:0]", super::describe_root(slope)),
        }
    }
}

/// Side of the line at infinity from which an arc approaches `p`: the sign
/// of `v . (z - a)` for the normalized direction `v` of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Positive,
    Negative,
}

/// Real roots of a binary form with multiplicities, ordered by angle.
pub fn binary_form_roots(form: &QBiPoly) -> Result<Vec<(ProjectivePoint, usize)>> {
    let e = match form.degree() {
        Some(e) => e as usize,
        None => return Ok(Vec::new()),
    };
    let g = slope_polynomial(form);
    let mut out = Vec::new();
    if !g.is_constant() {
        for mut r in isolate_real_roots(&g)? {
            r.exactify();
            out.push((ProjectivePoint::from_slope(&r), r.multiplicity));
        }
    }
    let vertical = e - g.degree().unwrap_or(0);
    if vertical > 0 {
        out.push((ProjectivePoint::vertical(), vertical));
    }
    out.sort_by(|a, b| a.0.angle_cmp(&b.0));
    Ok(out)
}

/// `F(1, m)` for a binary form `F(x, y)`.
pub fn slope_polynomial(form: &QBiPoly) -> QPoly {
    let mut c = Vec::new();
    for (&(_, j), v) in form.terms() {
        let j = j as usize;
        if c.len() <= j {
            c.resize(j + 1, Rational::zero());
        }
        c[j] += v;
    }
    UniPoly::new(c)
}

/// Points of `{f_d = 0}` on the line at infinity with their orders `d_p`,
/// and the real degree `d_Re = Σ d_p`.
pub fn points_at_infinity(f: &QBiPoly) -> Result<(Vec<(ProjectivePoint, usize)>, usize)> {
    let pts = binary_form_roots(&f.top_form())?;
    let d_re = pts.iter().map(|(_, k)| *k).sum();
    Ok((pts, d_re))
}

/// Multiplicity of `p` as a root of the binary form `F`.
pub fn multiplicity_at(form: &QBiPoly, p: &ProjectivePoint) -> usize {
    let e = form.degree().unwrap_or(0) as usize;
    let g = slope_polynomial(form);
    match p {
        ProjectivePoint::Rational { a, .. } if a.is_zero() => e - g.degree().unwrap_or(0),
        ProjectivePoint::Rational { a, b } => {
            let m = Rational::new(b.clone(), a.clone());
            let mut k = 0;
            let mut d = g;
            while !d.is_zero() && d.eval(&m).is_zero() {
                k += 1;
                d = d.derivative();
            }
            k
        }
        ProjectivePoint::Algebraic { slope } => {
            let mut k = 0;
            let mut d = g;
            while !d.is_zero() && slope.is_root_of(&d) {
                k += 1;
                d = d.derivative();
            }
            k
        }
    }
}

/// An open convex cone `{w : left × w > 0, w × right > 0}` around the
/// direction of one real root of a binary form, together with its opposite.
#[derive(Clone, Debug)]
pub struct Sector {
    pub point: ProjectivePoint,
    pub left: (Rational, Rational),
    pub right: (Rational, Rational),
    /// Whether the cone (not its opposite) holds the normalized direction.
    cone_is_positive: bool,
}

/// Disjoint sectors, one per real root of a binary form.
#[derive(Clone, Debug)]
pub struct SectorSet {
    pub sectors: Vec<Sector>,
}

impl SectorSet {
    pub fn new(form: &QBiPoly) -> Result<Self> {
        let mut sectors = Vec::new();
        let e = form.degree().unwrap_or(0) as usize;
        let g = slope_polynomial(form);
        let mut k = Rational::one();
        if !g.is_constant() {
            k = dyadic_root_bound(&g)? * Rational::from_integer(2.into());
            for r in isolate_real_roots(&g)? {
                let mut r = r;
                r.exactify();
                r.refine_to_width(&Rational::new(BigInt::one(), BigInt::from(2)));
                let point = ProjectivePoint::from_slope(&r);
                sectors.push(Sector {
                    cone_is_positive: point.normal_agrees_with_slope_ray(),
                    point,
                    left: (Rational::one(), r.lo.clone()),
                    right: (Rational::one(), r.hi.clone()),
                });
            }
        }
        if e > g.degree().unwrap_or(0) {
            sectors.push(Sector {
                point: ProjectivePoint::vertical(),
                left: (Rational::one(), k.clone()),
                right: (-Rational::one(), k),
                cone_is_positive: true,
            });
        }
        Ok(SectorSet { sectors })
    }

    /// Beyond this distance from `a`, `{p = c}` never meets a sector
    /// boundary for any constant `|c| <= slack`. The top form of `p` must be
    /// the form the sectors were built from.
    pub fn crossing_radius(&self, p: &QBiPoly, a: &(Rational, Rational), slack: &Rational) -> Result<Rational> {
        let mut best = Rational::zero();
        for s in &self.sectors {
            for u in [&s.left, &s.right] {
                let line = p.restrict_to_line((&a.0, &a.1), (&u.0, &u.1));
                let widened = widen_constant(&line, slack);
                let b = cauchy_root_bound(&widened)?;
                let r = b * (u.0.abs() + u.1.abs());
                if r > best {
                    best = r;
                }
            }
        }
        Ok(best)
    }

    /// Sector and side holding the circle point with parameter `t`, if any.
    pub fn locate(&self, t: &RealRoot, budget: usize) -> Result<Option<(usize, Side)>> {
        for (i, s) in self.sectors.iter().enumerate() {
            let s1 = t.sign_at(&cross_poly(&s.left, true), budget)?;
            let s2 = t.sign_at(&cross_poly(&s.right, false), budget)?;
            let ray = match (s1, s2) {
                (Sign::Positive, Sign::Positive) => true,
                (Sign::Negative, Sign::Negative) => false,
                _ => continue,
            };
            let side = if ray == s.cone_is_positive { Side::Positive } else { Side::Negative };
            return Ok(Some((i, side)));
        }
        Ok(None)
    }

    /// Same as [`SectorSet::locate`] for the circle point at `t = ±∞`,
    /// which lies in direction `(-1, 0)` from the center.
    pub fn locate_direction(&self, w: &(Rational, Rational)) -> Option<(usize, Side)> {
        for (i, s) in self.sectors.iter().enumerate() {
            let s1 = Sign::of(&cross(&s.left, w));
            let s2 = Sign::of(&cross(w, &s.right));
            let ray = match (s1, s2) {
                (Sign::Positive, Sign::Positive) => true,
                (Sign::Negative, Sign::Negative) => false,
                _ => continue,
            };
            let side = if ray == s.cone_is_positive { Side::Positive } else { Side::Negative };
            return Some((i, side));
        }
        None
    }
}

fn cross(u: &(Rational, Rational), w: &(Rational, Rational)) -> Rational {
    &u.0 * &w.1 - &u.1 * &w.0
}

/// Sign polynomial in the circle parameter `t` of `u × w(t)` (if
/// `u_first`) or `w(t) × u`, where `w(t) ∝ (1 - t^2, 2t)`.
fn cross_poly(u: &(Rational, Rational), u_first: bool) -> QPoly {
    // u × w = u0 * 2t - u1 * (1 - t^2)
    let p = UniPoly::new(vec![-u.1.clone(), &u.0 * Rational::from_integer(2.into()), u.1.clone()]);
    if u_first {
        p
    } else {
        -p
    }
}

fn widen_constant(p: &QPoly, slack: &Rational) -> QPoly {
    let mut c = p.coeffs().to_vec();
    if c.is_empty() {
        return p.clone();
    }
    c[0] = c[0].abs() + slack;
    UniPoly::new(c)
}
