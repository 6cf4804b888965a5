//! Coefficient rings.
//!
//! Every polynomial type in the crate is generic over a [`Ring`]. The exact
//! pipeline instantiates it with [`Rational`] (and with polynomial rings over
//! it for elimination); numeric oracles and plotting use `f64`.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Commutative ring with exact division where the quotient exists.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `self / other` when `other` divides `self` exactly, `None` otherwise.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// Greatest common divisor up to units. Fields return one (or zero).
    fn gcd(&self, other: &Self) -> Self;

    fn from_int(v: i64) -> Self;

    /// Whether every nonzero element is invertible.
    fn is_field() -> bool {
        false
    }
}

/// A ring that is also an ordered field.
pub trait Field: Ring + PartialOrd {
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Ring for Rational {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            Rational::zero()
        } else {
            Rational::one()
        }
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn is_field() -> bool {
        true
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

impl Ring for f64 {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if *other == 0.0 {
            None
        } else {
            Some(self / other)
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        if *self == 0.0 && *other == 0.0 {
            0.0
        } else {
            1.0
        }
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn is_field() -> bool {
        true
    }
}

impl Field for f64 {
    fn inv(&self) -> Self {
        1.0 / self
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Ring for BigInt {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Signed>(v: &T) -> Sign {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_f64(v: f64) -> Sign {
        if v > 0.0 {
            Sign::Positive
        } else if v < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match self.to_i32() * rhs.to_i32() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest double, robust for huge numerators and denominators.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift >= 0 {
        q.numer() / (q.denom() << (shift as usize))
    } else {
        (q.numer() << ((-shift) as usize)) / q.denom()
    };
    scaled.to_f64().unwrap_or(0.0) * (2f64).powi(shift as i32)
}

/// Exact rational from a finite double.
pub fn rational_from_f64(v: f64) -> Rational {
    Rational::from_float(v).unwrap_or_else(Rational::zero)
}

/// Absolute value as a rational.
pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

/// Smallest power of two that is `>= q` (for `q > 0`), used to keep radii dyadic.
pub fn dyadic_ceil(q: &Rational) -> Rational {
    let mut p = Rational::one();
    if q <= &p {
        return p;
    }
    let two = int(2);
    while &p < q {
        p = &p * &two;
    }
    p
}

/// Simplest rational strictly between `lo` and `hi` (Stern-Brocot walk on the
/// continued fraction), preferring small denominators.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rational::zero();
    }
    if !lo.is_negative() {
        simplest_between_pos(lo, hi)
    } else {
        -simplest_between_pos(&-hi, &-lo)
    }
}

fn simplest_between_pos(lo: &Rational, hi: &Rational) -> Rational {
    // open interval (lo, hi) with 0 <= lo < hi
    let fl = lo.floor();
    let candidate = &fl + Rational::one();
    if &candidate < hi {
        return candidate;
    }
    if fl.is_zero() && lo.is_zero() {
        return unit_fraction_below(hi);
    }
    // both in [fl, fl+1)
    let a = lo - &fl;
    let b = hi - &fl;
    if a.is_zero() {
        return fl + unit_fraction_below(&b);
    }
    // 1/b < 1/a
    let inner = simplest_between_pos(&b.recip(), &a.recip());
    fl + inner.recip()
}

// largest 1/n strictly below hi, for 0 < hi <= 1
fn unit_fraction_below(hi: &Rational) -> Rational {
    let n = hi.recip().floor().to_integer() + BigInt::one();
    Rational::new(BigInt::one(), n)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn bigint_sign(v: &BigInt) -> Sign {
    match v.sign() {
        BigSign::Minus => Sign::Negative,
        BigSign::NoSign => Sign::Zero,
        BigSign::Plus => Sign::Positive,
    }
}

/// `lcm` of the denominators of a list of rationals.
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
