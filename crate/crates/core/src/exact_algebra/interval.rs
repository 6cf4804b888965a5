//! Closed intervals with exact rational endpoints.
//!
//! Endpoints produced by bisection of integer or dyadic starting intervals stay
//! dyadic, so widths halve exactly on each refinement step.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::bipoly::{Axis, BivariatePoly};
use super::scalar::{rational_to_f64, Rational, Sign};
use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every member, if they all agree and are nonzero.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.is_positive() {
            Some(Sign::Positive)
        } else if self.hi.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn abs_max(&self) -> Rational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational_to_f64(&self.lo), rational_to_f64(&self.hi))
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval::new(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval::new(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let c = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }
}

/// Axis-aligned box in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBox {
    pub x: Interval,
    pub y: Interval,
}

impl IntervalBox {
    pub fn to_f64(&self) -> [f64; 4] {
        let (a, b) = self.x.to_f64();
        let (c, d) = self.y.to_f64();
        [a, b, c, d]
    }
}

impl UniPoly<Rational> {
    /// Enclosure of the range over `iv` by the Taylor form at the midpoint.
    pub fn eval_interval(&self, iv: &Interval) -> Interval {
        if self.is_zero() {
            return Interval::point(Rational::zero());
        }
        let m = iv.mid();
        let w = &iv.hi - &m;
        let shifted = self.compose(&UniPoly::new(vec![m, Rational::from_integer(1.into())]));
        let c0 = shifted.coeff(0);
        let mut spread = Rational::zero();
        let mut wp = Rational::from_integer(1.into());
        for c in shifted.coeffs().iter().skip(1) {
            wp = &wp * &w;
            spread += c.abs() * &wp;
        }
        Interval::new(&c0 - &spread, &c0 + &spread)
    }
}

impl BivariatePoly<Rational> {
    /// Natural interval extension by nested Horner evaluation.
    pub fn eval_box(&self, b: &IntervalBox) -> Interval {
        let rec = self.to_recursive(Axis::Y);
        let mut acc = Interval::point(Rational::zero());
        for row in rec.coeffs().iter().rev() {
            let mut inner = Interval::point(Rational::zero());
            for c in row.coeffs().iter().rev() {
                inner = inner * b.x.clone() + Interval::point(c.clone());
            }
            acc = acc * b.y.clone() + inner;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::{int, rat};

    #[test]
    fn taylor_enclosure_contains_samples() {
        let p = UniPoly::new(vec![int(1), int(-3), int(0), int(2)]);
        let iv = Interval::new(rat(-1, 2), rat(3, 4));
        let e = p.eval_interval(&iv);
        for k in 0..=20 {
            let t = &iv.lo + iv.width() * rat(k, 20);
            let v = p.eval(&t);
            assert!(e.lo <= v && v <= e.hi);
        }
    }

    #[test]
    fn box_evaluation_encloses_value() {
        let f = BivariatePoly::from_terms([((2, 1), int(1)), ((1, 0), int(1))]);
        let b = IntervalBox {
            x: Interval::new(int(1), int(2)),
            y: Interval::new(int(-1), int(1)),
        };
        let e = f.eval_box(&b);
        assert!(e.contains_zero());
        assert!(e.lo <= int(-3) && e.hi >= int(6));
    }
}
