//! Dense univariate polynomials over any [`Ring`].
//!
//! `UniPoly<UniPoly<R>>` is the recursive representation used for
//! elimination: the outer variable is the one being eliminated.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{bigint_sign, denominator_lcm, Field, Rational, Ring, Sign};

/// Coefficients lowest degree first; no trailing zeros (the zero polynomial
/// is the empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^k`
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        UniPoly { coeffs: v }
    }

    /// The polynomial `var`.
    pub fn var() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `var^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_int(k as i64))
                .collect(),
        )
    }

    /// `self(q(var))`
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q.clone() + Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    /// `self(-var)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Reverse the coefficient list relative to degree `n` (`var^n p(1/var)`).
    pub fn reversed(&self, n: usize) -> Self {
        let mut v = vec![T::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[n - k] = c.clone();
        }
        Self::new(v)
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let mut r = self.clone();
        let lcd = d.lc();
        let Some(mut dr) = r.degree() else {
            return r;
        };
        if dr < dd {
            return r;
        }
        let mut steps = dr - dd + 1;
        while let Some(k) = r.degree() {
            if k < dd {
                break;
            }
            dr = k;
            let lr = r.lc();
            let sub = d.scale(&lr).shift(dr - dd);
            r = r.scale(&lcd) - sub;
            steps -= 1;
        }
        let _ = dr;
        let mut fac = T::one();
        for _ in 0..steps {
            fac = fac * lcd.clone();
        }
        r.scale(&fac)
    }

    /// Exact long division; `None` unless `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lcd = d.lc();
        let mut r = self.clone();
        let n = r.degree().unwrap();
        if n < dd {
            return None;
        }
        let mut q = vec![T::zero(); n - dd + 1];
        while let Some(k) = r.degree() {
            if k < dd {
                return None;
            }
            let c = r.lc().exact_div(&lcd)?;
            r = r - d.scale(&c).shift(k - dd);
            q[k - dd] = c;
        }
        Some(Self::new(q))
    }

    /// Gcd of the coefficients.
    pub fn content(&self) -> T {
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if T::is_field() && !g.is_zero() {
                return T::one();
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.map(|a| a.exact_div(&c).expect("content divides coefficients"))
    }

    /// Gcd, normalized to be monic over fields and primitive otherwise.
    pub fn poly_gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        if T::is_field() {
            let (mut a, mut b) = (self.clone(), other.clone());
            while !b.is_zero() {
                let r = a.field_rem(&b);
                a = b;
                b = r;
            }
            return a.normalize();
        }
        let ca = self.content();
        let cb = other.content();
        let c = ca.gcd(&cb);
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&c).normalize()
    }

    // remainder over a field, via exact division of leading coefficients
    fn field_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lcd = d.lc();
        let mut r = self.clone();
        while let Some(k) = r.degree() {
            if k < dd {
                break;
            }
            let c = r.lc().exact_div(&lcd).expect("field division");
            r = r - d.scale(&c).shift(k - dd);
        }
        r
    }

    /// Monic over fields; otherwise a canonical associate with "positive"
    /// leading coefficient where the ring allows it (left as is).
    pub fn normalize(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if T::is_field() {
            let lc = self.lc();
            return self.map(|a| a.exact_div(&lc).unwrap());
        }
        self.clone()
    }
}

impl<T: Field> UniPoly<T> {
    /// Division with remainder over a field.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lcd_inv = d.lc().inv();
        let mut r = self.clone();
        let mut q = vec![T::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(k) = r.degree() {
            if k < dd {
                break;
            }
            let c = r.lc() * lcd_inv.clone();
            r = r - d.scale(&c).shift(k - dd);
            q[k - dd] = c;
        }
        (Self::new(q), r)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    /// `p / gcd(p, p')`
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.poly_gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's algorithm: `[(factor, multiplicity)]` with monic, squarefree,
    /// pairwise coprime factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a = f.poly_gcd(&fp);
        let mut b = f.div_rem(&a).0;
        let c = fp.div_rem(&a).0;
        let mut d = c - b.derivative();
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            let g = b.poly_gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), k));
            }
            b = b.div_rem(&g).0;
            let c = d.div_rem(&g).0;
            d = c - b.derivative();
            k += 1;
        }
        out
    }
}

impl UniPoly<Rational> {
    /// Integer associate with coprime coefficients and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> UniPoly<BigInt> {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let l = denominator_lcm(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| Integer::gcd(&acc, v));
        let g = if ints.last().unwrap().is_negative() { -g } else { g };
        UniPoly::new(ints.into_iter().map(|v| v / &g).collect())
    }

    /// Same polynomial scaled to primitive integer coefficients, kept over Q.
    pub fn primitive_rational(&self) -> Self {
        self.primitive_integer().to_rational()
    }

    pub fn eval_sign(&self, x: &Rational) -> Sign {
        Sign::of(&self.eval(x))
    }
}

impl UniPoly<BigInt> {
    pub fn to_rational(&self) -> UniPoly<Rational> {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Sign at `num/den` with `den > 0`, evaluated without fractions.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        // Horner in num, the k-th coefficient from the top carries den^k
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                dpow *= den;
            }
            acc = acc * num + c * &dpow;
        }
        bigint_sign(&acc)
    }
}

impl<T: Ring> Zero for UniPoly<T> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for UniPoly<T> {
    fn one() -> Self {
        UniPoly {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Ring> Add for UniPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<T: Ring> Sub for UniPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for UniPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Mul for UniPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Ring> Ring for UniPoly<T> {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }

    fn gcd(&self, other: &Self) -> Self {
        self.poly_gcd(other)
    }

    fn from_int(v: i64) -> Self {
        Self::constant(T::from_int(v))
    }
}

impl<T: Ring> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({:?})", c)?,
                1 => write!(f, "({:?})*t", c)?,
                _ => write!(f, "({:?})*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;

    fn q(v: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(v.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn gcd_over_rationals_is_monic() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = q(&[-2, 1, 1]);
        let b = q(&[3, -4, 1]);
        assert_eq!(a.poly_gcd(&b), q(&[-1, 1]));
    }

    #[test]
    fn squarefree_decomposition_of_factored_input() {
        // (t-1)^2 (t+3)
        let p = q(&[-1, 1]).pow(2) * q(&[3, 1]);
        let dec = p.squarefree_decomposition();
        assert_eq!(dec, vec![(q(&[3, 1]), 1), (q(&[-1, 1]), 2)]);
        assert_eq!(p.squarefree_part(), q(&[-1, 1]) * q(&[3, 1]));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = q(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&q(&[1, 1])), Some(q(&[-1, 1])));
        assert_eq!(a.div_exact(&q(&[2, 1])), None);
    }

    #[test]
    fn integer_sign_evaluation_matches_rational() {
        let p = q(&[3, -7, 0, 2]);
        let pi = p.primitive_integer();
        for (n, d) in [(1, 2), (-5, 3), (7, 1), (0, 1)] {
            let x = Rational::new(BigInt::from(n), BigInt::from(d));
            assert_eq!(pi.sign_at(&BigInt::from(n), &BigInt::from(d)), p.eval_sign(&x));
        }
    }

    #[test]
    fn bivariate_gcd_via_recursion() {
        // over Q[x][y]: (y - x)(y + 1) and (y - x)(y - 2)
        let x = UniPoly::<Rational>::var();
        let yx = UniPoly::new(vec![-x.clone(), UniPoly::one()]);
        let a = yx.clone() * UniPoly::new(vec![UniPoly::constant(int(1)), UniPoly::one()]);
        let b = yx.clone() * UniPoly::new(vec![UniPoly::constant(int(-2)), UniPoly::one()]);
        let g = a.poly_gcd(&b);
        assert_eq!(g.degree(), Some(1));
        assert!(a.div_exact(&g).is_some());
    }
}
