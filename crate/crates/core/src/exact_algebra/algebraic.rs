//! Real algebraic numbers and points on rational curves.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bipoly::BivariatePoly;
use super::interval::{Interval, IntervalBox};
use super::scalar::{rational_to_f64, Rational, Sign};
use super::sturm::split_point;
use super::unipoly::UniPoly;
use crate::{Error, Result};

/// Default number of bisections spent deciding a sign before giving up.
pub const DEFAULT_SIGN_BUDGET: usize = 4096;

/// A real root of `poly` isolated in the open interval `(lo, hi)`.
///
/// `poly` is squarefree with coprime integer coefficients and a positive
/// leading coefficient; it has exactly one root in `(lo, hi)` and none at the
/// endpoints. `multiplicity` records the root's multiplicity in the
/// polynomial it was isolated from.
#[derive(Clone, Debug)]
pub struct RealRoot {
    pub poly: UniPoly<BigInt>,
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

pub type IsolatingInterval = RealRoot;

impl RealRoot {
    pub(crate) fn new_unchecked(poly: UniPoly<BigInt>, lo: Rational, hi: Rational, multiplicity: usize) -> Self {
        RealRoot {
            poly,
            lo,
            hi,
            multiplicity,
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        let poly = UniPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        RealRoot {
            poly,
            lo: r - Rational::one(),
            hi: r + Rational::one(),
            multiplicity: 1,
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.poly.degree() == Some(1) {
            Some(Rational::new(-self.poly.coeff(0), self.poly.coeff(1)))
        } else {
            None
        }
    }

    pub fn defining_poly(&self) -> UniPoly<Rational> {
        self.poly.to_rational()
    }

    pub fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn sign_at_rational(&self, x: &Rational) -> Sign {
        self.poly.sign_at(x.numer(), x.denom())
    }

    /// Halve the isolating interval. A midpoint that is itself the root turns
    /// the descriptor into an exact rational.
    pub fn refine(&mut self) {
        let two = Rational::from_integer(2.into());
        if let Some(r) = self.to_rational() {
            let w = self.width() / Rational::from_integer(4.into());
            self.lo = &r - &w;
            self.hi = &r + &w;
            return;
        }
        let mid = (&self.lo + &self.hi) / &two;
        let s_mid = self.sign_at_rational(&mid);
        if s_mid == Sign::Zero {
            let exact = RealRoot::from_rational(&mid);
            self.poly = exact.poly;
            let w = self.width() / Rational::from_integer(4.into());
            self.lo = &mid - &w;
            self.hi = &mid + &w;
            return;
        }
        if s_mid == self.sign_at_rational(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Switch to an exact linear descriptor if the root is rational. A
    /// rational root `p/q` of the integer polynomial has `q | lc`, so once the
    /// interval is narrower than `1/|lc|` at most one candidate `k/lc` remains.
    pub fn exactify(&mut self) {
        if self.to_rational().is_some() {
            return;
        }
        let lc = self.poly.lc();
        let lcq = Rational::from_integer(lc.clone());
        let target = Rational::new(BigInt::one(), lc.clone() * 2);
        self.refine_to_width(&target.abs());
        if self.to_rational().is_some() {
            return;
        }
        let k = (&self.lo * &lcq).floor();
        for c in [k.clone(), k + Rational::one()] {
            let cand = c / &lcq;
            if cand > self.lo && cand < self.hi && self.sign_at_rational(&cand) == Sign::Zero {
                let exact = RealRoot::from_rational(&cand);
                self.poly = exact.poly;
                return;
            }
        }
    }

    pub fn refine_to_width(&mut self, w: &Rational) {
        while &self.width() > w {
            self.refine();
        }
    }

    /// Midpoint approximation, exact for rational roots.
    pub fn approx(&self) -> f64 {
        if let Some(r) = self.to_rational() {
            return rational_to_f64(&r);
        }
        let mut me = self.clone();
        me.refine_to_width(&Rational::new(BigInt::one(), BigInt::one() << 64usize));
        rational_to_f64(&((&me.lo + &me.hi) / Rational::from_integer(2.into())))
    }

    /// Whether `g` (any polynomial) vanishes at this root, decided exactly via
    /// `gcd(poly, g)`.
    pub fn is_root_of(&self, g: &UniPoly<Rational>) -> bool {
        if g.is_zero() {
            return true;
        }
        if let Some(r) = self.to_rational() {
            return g.eval(&r).is_zero();
        }
        let c = self.poly.poly_gcd(&g.primitive_integer());
        if c.degree().unwrap_or(0) == 0 {
            return false;
        }
        c.sign_at(self.lo.numer(), self.lo.denom()) != c.sign_at(self.hi.numer(), self.hi.denom())
    }

    /// Exact sign of `q` at the root: zero only when certified by a common
    /// factor, otherwise decided by interval refinement within `budget` steps.
    pub fn sign_at(&self, q: &UniPoly<Rational>, budget: usize) -> Result<Sign> {
        if q.is_zero() {
            return Ok(Sign::Zero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Sign::of(&q.eval(&r)));
        }
        if self.is_root_of(q) {
            return Ok(Sign::Zero);
        }
        let mut me = self.clone();
        let dq = q.derivative();
        let two = Rational::from_integer(2.into());
        for _ in 0..=budget {
            // mean value form: q(I) ⊆ q(m) + q'(I) (I - m)
            let mid = (&me.lo + &me.hi) / &two;
            let v = q.eval(&mid);
            let d = dq.eval_interval(&me.interval());
            let slope = d.lo.abs().max(d.hi.abs());
            if v.abs() > slope * (me.width() / &two) {
                return Ok(Sign::of(&v));
            }
            me.refine();
            if let Some(r) = me.to_rational() {
                return Ok(Sign::of(&q.eval(&r)));
            }
        }
        Err(Error::UndecidedSign)
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(v) = self.to_rational() {
            return v.cmp(r);
        }
        let mut me = self.clone();
        loop {
            if r <= &me.lo {
                return Ordering::Greater;
            }
            if r >= &me.hi {
                return Ordering::Less;
            }
            if me.sign_at_rational(r) == Sign::Zero {
                return Ordering::Equal;
            }
            me.refine();
            if let Some(v) = me.to_rational() {
                return v.cmp(r);
            }
        }
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_root(&self, other: &RealRoot) -> Ordering {
        if let Some(r) = other.to_rational() {
            return self.cmp_rational(&r);
        }
        if let Some(r) = self.to_rational() {
            return other.cmp_rational(&r).reverse();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let lo = a.lo.clone().max(b.lo.clone());
        let hi = a.hi.clone().min(b.hi.clone());
        if lo < hi {
            let g = a.defining_poly().poly_gcd(&b.defining_poly());
            if g.degree().unwrap_or(0) > 0 {
                let g = g.primitive_integer();
                if g.sign_at(lo.numer(), lo.denom()) != g.sign_at(hi.numer(), hi.denom()) {
                    return Ordering::Equal;
                }
            }
        }
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if a.width() >= b.width() {
                a.refine();
            } else {
                b.refine();
            }
            if a.to_rational().is_some() || b.to_rational().is_some() {
                return a.cmp_root(&b);
            }
        }
    }

    /// A rational strictly between this root and `other` (which must differ).
    pub fn separator(&self, other: &RealRoot) -> Rational {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.cmp_root(&b) == Ordering::Greater {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if let (Some(x), Some(y)) = (a.to_rational(), b.to_rational()) {
                return (x + y) / Rational::from_integer(2.into());
            }
            if a.hi <= b.lo {
                let mid = (&a.hi + &b.lo) / Rational::from_integer(2.into());
                if a.cmp_rational(&mid) == Ordering::Less && b.cmp_rational(&mid) == Ordering::Greater {
                    return mid;
                }
            }
            if a.width() >= b.width() {
                a.refine();
            } else {
                b.refine();
            }
        }
    }
}

/// A rational strictly between `lo` and `hi` avoiding the roots of `p`.
pub fn rational_between_avoiding(p: &UniPoly<BigInt>, lo: &Rational, hi: &Rational) -> Rational {
    split_point(p, lo, hi)
}

/// A point `(xn(t)/den(t), yn(t)/den(t))` at a real root `t` of the parameter.
#[derive(Clone, Debug)]
pub struct AlgebraicPoint {
    pub param: RealRoot,
    pub xn: UniPoly<Rational>,
    pub yn: UniPoly<Rational>,
    pub den: UniPoly<Rational>,
}

impl AlgebraicPoint {
    pub fn rational(x: Rational, y: Rational) -> Self {
        AlgebraicPoint {
            param: RealRoot::from_rational(&Rational::zero()),
            xn: UniPoly::constant(x),
            yn: UniPoly::constant(y),
            den: UniPoly::one(),
        }
    }

    /// Exact coordinates when the parameter is rational.
    pub fn to_rational(&self) -> Option<(Rational, Rational)> {
        let t = self.param.to_rational()?;
        let d = self.den.eval(&t);
        Some((self.xn.eval(&t) / &d, self.yn.eval(&t) / &d))
    }

    pub fn approx(&self) -> (f64, f64) {
        if let Some((x, y)) = self.to_rational() {
            return (rational_to_f64(&x), rational_to_f64(&y));
        }
        let mut r = self.param.clone();
        r.refine_to_width(&Rational::new(BigInt::one(), BigInt::one() << 80usize));
        let t = (&r.lo + &r.hi) / Rational::from_integer(2.into());
        let d = self.den.eval(&t);
        (
            rational_to_f64(&(self.xn.eval(&t) / &d)),
            rational_to_f64(&(self.yn.eval(&t) / &d)),
        )
    }

    /// Box enclosing the point after refining the parameter to `width`.
    pub fn enclosure(&self, width: &Rational) -> IntervalBox {
        let mut r = self.param.clone();
        loop {
            r.refine_to_width(width);
            let iv = r.interval();
            let d = self.den.eval_interval(&iv);
            if d.sign().is_some() {
                let inv = Interval::new(d.hi.recip().min(d.lo.recip()), d.hi.recip().max(d.lo.recip()));
                return IntervalBox {
                    x: self.xn.eval_interval(&iv) * inv.clone(),
                    y: self.yn.eval_interval(&iv) * inv,
                };
            }
            r.refine();
        }
    }

    /// Exact sign of `p` at the point.
    pub fn sign_of(&self, p: &BivariatePoly<Rational>, budget: usize) -> Result<Sign> {
        refine_to_sign(p, self, budget)
    }
}

/// Exact sign of `p` at an algebraic point: the numerator of the pullback
/// along the point's curve is tested for a common factor with the parameter's
/// defining polynomial (zero certificate) and otherwise evaluated on shrinking
/// intervals until its sign is fixed.
pub fn refine_to_sign(p: &BivariatePoly<Rational>, pt: &AlgebraicPoint, budget: usize) -> Result<Sign> {
    if p.is_zero() {
        return Ok(Sign::Zero);
    }
    let n = p.pullback(&pt.xn, &pt.yn, &pt.den);
    let s = pt.param.sign_at(&n, budget)?;
    let deg = p.degree().unwrap_or(0);
    if deg % 2 == 1 {
        let sd = pt.param.sign_at(&pt.den, budget)?;
        if sd == Sign::Zero {
            return Err(Error::Other("point at a pole of its parametrization".into()));
        }
        return Ok(s * sd);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::{int, rat};
    use crate::exact_algebra::sturm::isolate_real_roots;

    fn q(v: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(v.iter().map(|&c| int(c)).collect())
    }

    fn bp(terms: &[((u32, u32), i64)]) -> BivariatePoly<Rational> {
        BivariatePoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn sign_on_the_unit_circle_is_zero() {
        let p = bp(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -1)]);
        let pt = AlgebraicPoint::rational(int(1), int(0));
        assert_eq!(refine_to_sign(&p, &pt, 10).unwrap(), Sign::Zero);
    }

    #[test]
    fn sign_of_x_at_sqrt_two() {
        let roots = isolate_real_roots(&q(&[-2, 0, 1])).unwrap();
        let pt = AlgebraicPoint {
            param: roots[1].clone(),
            xn: UniPoly::var(),
            yn: UniPoly::zero(),
            den: UniPoly::one(),
        };
        let x = bp(&[((1, 0), 1)]);
        assert_eq!(refine_to_sign(&x, &pt, 100).unwrap(), Sign::Positive);
        // x^2 - 2 vanishes exactly there
        let c = bp(&[((2, 0), 1), ((0, 0), -2)]);
        assert_eq!(refine_to_sign(&c, &pt, 100).unwrap(), Sign::Zero);
    }

    #[test]
    fn tiny_budget_reports_undecided() {
        // sqrt(2) - 1414213/1000000 is positive but tiny
        let roots = isolate_real_roots(&q(&[-2, 0, 1])).unwrap();
        let g = UniPoly::new(vec![rat(-1414213, 1000000), int(1)]);
        assert!(matches!(roots[1].sign_at(&g, 2), Err(Error::UndecidedSign)));
        assert_eq!(roots[1].sign_at(&g, 200).unwrap(), Sign::Positive);
    }

    #[test]
    fn rational_roots_are_detected() {
        let p = q(&[-1, 1]) * q(&[-2, 0, 1]) * q(&[3, 2]);
        let mut roots = isolate_real_roots(&p).unwrap();
        for r in roots.iter_mut() {
            r.exactify();
        }
        let exact: Vec<_> = roots.iter().filter_map(|r| r.to_rational()).collect();
        assert_eq!(exact, vec![rat(-3, 2), int(1)]);
    }

    #[test]
    fn comparisons_are_exact() {
        let a = isolate_real_roots(&q(&[-2, 0, 1])).unwrap()[1].clone();
        let b = isolate_real_roots(&(q(&[-2, 0, 1]) * q(&[-3, 1]))).unwrap();
        assert_eq!(a.cmp_root(&b[1]), Ordering::Equal);
        assert_eq!(a.cmp_root(&b[2]), Ordering::Less);
        assert_eq!(a.cmp_rational(&rat(7, 5)), Ordering::Greater);
        let s = a.separator(&b[2]);
        assert!(a.cmp_rational(&s) == Ordering::Less && s < int(3));
    }
}
