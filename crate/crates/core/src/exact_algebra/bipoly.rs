//! Sparse bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{denominator_lcm, Rational, Ring};
use super::unipoly::UniPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// Map from exponent pair `(i, j)` (meaning `x^i y^j`) to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Ring> BivariatePoly<T> {
    pub fn from_terms(it: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn term(c: T, i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn constant(c: T) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::term(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(T::one(), 0, 1)
    }

    fn add_term(&mut self, e: (u32, u32), c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_in(&self, axis: Axis) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| if axis == Axis::X { i } else { j })
            .max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> BivariatePoly<U> {
        BivariatePoly::from_terms(self.terms.iter().map(|(e, a)| (*e, f(a))))
    }

    pub fn differentiate(&self, axis: Axis) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| match axis {
            Axis::X if i > 0 => Some(((i - 1, j), c.clone() * T::from_int(i as i64))),
            Axis::Y if j > 0 => Some(((i, j - 1), c.clone() * T::from_int(j as i64))),
            _ => None,
        }))
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.to_recursive(Axis::Y)
            .eval(&UniPoly::constant(y.clone()))
            .eval(x)
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|((i, j), _)| i + j == k)
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    /// Homogeneous component of top degree.
    pub fn top_form(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => Self::zero(),
        }
    }

    /// Lowest-degree homogeneous component.
    pub fn lowest_form(&self) -> Self {
        match self.order() {
            Some(d) => self.homogeneous_part(d),
            None => Self::zero(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// `self(px, py)` for bivariate substitutions.
    pub fn compose(&self, px: &Self, py: &Self) -> Self {
        let rec = self.to_recursive(Axis::Y);
        let mut acc = Self::zero();
        for c in rec.coeffs().iter().rev() {
            let mut inner = Self::zero();
            for a in c.coeffs().iter().rev() {
                inner = inner * px.clone() + Self::constant(a.clone());
            }
            acc = acc * py.clone() + inner;
        }
        acc
    }

    /// Recursive dense form with `outer` as main variable; the coefficients
    /// are polynomials in the other variable.
    pub fn to_recursive(&self, outer: Axis) -> UniPoly<UniPoly<T>> {
        let n = self.degree_in(outer).map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); n];
        for (&(i, j), c) in &self.terms {
            let (o, inner) = if outer == Axis::Y { (j, i) } else { (i, j) };
            let row = &mut rows[o as usize];
            if row.len() <= inner as usize {
                row.resize(inner as usize + 1, T::zero());
            }
            row[inner as usize] = c.clone();
        }
        UniPoly::new(rows.into_iter().map(UniPoly::new).collect())
    }

    pub fn from_recursive(p: &UniPoly<UniPoly<T>>, outer: Axis) -> Self {
        let mut terms = Vec::new();
        for (o, row) in p.coeffs().iter().enumerate() {
            for (inner, c) in row.coeffs().iter().enumerate() {
                let e = if outer == Axis::Y {
                    (inner as u32, o as u32)
                } else {
                    (o as u32, inner as u32)
                };
                terms.push((e, c.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Embed a univariate polynomial in the given variable.
    pub fn from_univariate(p: &UniPoly<T>, axis: Axis) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let e = if axis == Axis::X { (k as u32, 0) } else { (0, k as u32) };
            (e, c.clone())
        }))
    }

    /// `Σ c_ij xn^i yn^j den^(deg - i - j)` with `deg` the total degree: the
    /// numerator of `self(xn/den, yn/den)` on a rational curve.
    pub fn pullback(&self, xn: &UniPoly<T>, yn: &UniPoly<T>, den: &UniPoly<T>) -> UniPoly<T> {
        let d = self.degree().unwrap_or(0);
        let mut xp = vec![UniPoly::one()];
        let mut yp = vec![UniPoly::one()];
        let mut dp = vec![UniPoly::one()];
        for k in 1..=d as usize {
            xp.push(xp[k - 1].clone() * xn.clone());
            yp.push(yp[k - 1].clone() * yn.clone());
            dp.push(dp[k - 1].clone() * den.clone());
        }
        let mut acc = UniPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = xp[i as usize].clone() * yp[j as usize].clone() * dp[(d - i - j) as usize].clone();
            acc = acc + t.scale(c);
        }
        acc
    }

    /// Substitute `x = p0 + s*v0`, `y = p1 + s*v1` (a parametrized line).
    pub fn restrict_to_line(&self, p: (&T, &T), v: (&T, &T)) -> UniPoly<T> {
        let xs = UniPoly::new(vec![p.0.clone(), v.0.clone()]);
        let ys = UniPoly::new(vec![p.1.clone(), v.1.clone()]);
        let rec = self.to_recursive(Axis::Y);
        let mut acc = UniPoly::zero();
        for c in rec.coeffs().iter().rev() {
            acc = acc * ys.clone() + c.compose(&xs);
        }
        acc
    }

    /// Gcd computed on the recursive form in `y`.
    pub fn poly_gcd(&self, other: &Self) -> Self {
        let g = self.to_recursive(Axis::Y).poly_gcd(&other.to_recursive(Axis::Y));
        Self::from_recursive(&g, Axis::Y)
    }

    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let q = self
            .to_recursive(Axis::Y)
            .div_exact(&other.to_recursive(Axis::Y))?;
        Some(Self::from_recursive(&q, Axis::Y))
    }
}

impl BivariatePoly<Rational> {
    /// Scale to coprime integer coefficients with positive leading term
    /// (largest exponent pair in graded order).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = denominator_lcm(self.terms.values());
        let lq = Rational::from_integer(l);
        let g = self.terms.values().fold(num_bigint::BigInt::zero(), |acc, c| {
            num_integer::Integer::gcd(&acc, &(c * &lq).to_integer())
        });
        let mut s = lq / Rational::from_integer(g);
        if self.leading_graded().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    fn leading_graded(&self) -> Rational {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn to_f64(&self) -> BivariatePoly<f64> {
        self.map(super::scalar::rational_to_f64)
    }

    /// Whether `gcd(p_x, p_y)` is constant, i.e. the singular points are isolated.
    pub fn has_isolated_singularities(&self) -> bool {
        let fx = self.differentiate(Axis::X);
        let fy = self.differentiate(Axis::Y);
        if fx.is_zero() || fy.is_zero() {
            // f depends on one variable only: singular lines unless the
            // derivative is a nonzero constant
            let g = if fx.is_zero() { &fy } else { &fx };
            return !g.is_zero() && g.is_constant();
        }
        fx.poly_gcd(&fy).is_constant()
    }

    /// Whether `self` has a repeated factor (gcd with both partials).
    pub fn is_squarefree(&self) -> bool {
        let px = self.differentiate(Axis::X);
        let py = self.differentiate(Axis::Y);
        let g = self.poly_gcd(&px);
        if g.is_constant() {
            return true;
        }
        g.poly_gcd(&py).is_constant()
    }
}

impl<T: Ring> Zero for BivariatePoly<T> {
    fn zero() -> Self {
        BivariatePoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for BivariatePoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for BivariatePoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<T: Ring> Sub for BivariatePoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for BivariatePoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        BivariatePoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<T: Ring> Mul for BivariatePoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term((i + k, j + l), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Ring> fmt::Debug for BivariatePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| format!("({:?})*x^{}*y^{}", c, i, j))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Human-readable form that the expression parser reads back, e.g.
/// `x^2*y - 3/2*x + 1`.
impl fmt::Display for BivariatePoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        for (k, (&(i, j), c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !a.is_one() || (i == 0 && j == 0) {
                factors.push(a.to_string());
            }
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{}^{}", v, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
