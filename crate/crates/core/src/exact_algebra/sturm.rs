//! Sturm sequences and real root isolation.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebraic::RealRoot;
use super::scalar::{bigint_sign, Rational, Sign};
use super::unipoly::UniPoly;
use crate::{Error, Result};

/// Sturm sequence of a squarefree integer polynomial, built from
/// pseudo-remainders with the content removed at each step.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<UniPoly<BigInt>>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly<BigInt>) -> Self {
        let mut seq = vec![p.clone()];
        let dp = p.derivative();
        if !dp.is_zero() {
            seq.push(dp.primitive_part());
        }
        while seq.len() >= 2 {
            let a = &seq[seq.len() - 2];
            let b = &seq[seq.len() - 1];
            if b.degree() == Some(0) {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(delta+1) * rem; keep the sign of -rem
            let lc_neg = b.lc().is_negative();
            let flip = !(lc_neg && (delta + 1) % 2 == 1);
            let r = r.primitive_part();
            seq.push(if flip { -r } else { r });
        }
        SturmSequence { seq }
    }

    fn variations(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::Zero;
        let mut v = 0;
        for s in signs {
            if s == Sign::Zero {
                continue;
            }
            if last != Sign::Zero && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x.numer(), x.denom())))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| {
            let s = bigint_sign(&p.lc());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                s.flip()
            } else {
                s
            }
        }))
    }

    /// Number of distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// All real roots lie strictly inside `[-B, B]` with `B = 1 + max |c_i / c_n|`.
pub fn cauchy_root_bound(p: &UniPoly<Rational>) -> Result<Rational> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let lc = p.lc();
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + m)
}

/// Smallest power of two strictly above the Cauchy bound.
pub(crate) fn dyadic_root_bound(p: &UniPoly<Rational>) -> Result<Rational> {
    let b = cauchy_root_bound(p)?;
    let mut r = Rational::one();
    while r <= b {
        r = r * Rational::from_integer(2.into());
    }
    Ok(r)
}

/// A split point near the midpoint of `(lo, hi)` that is not a root of `p`.
pub(crate) fn split_point(p: &UniPoly<BigInt>, lo: &Rational, hi: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mid = (lo + hi) / &two;
    if p.sign_at(mid.numer(), mid.denom()) != Sign::Zero {
        return mid;
    }
    let mut step = (hi - lo) / Rational::from_integer(8.into());
    loop {
        for cand in [&mid + &step, &mid - &step] {
            if p.sign_at(cand.numer(), cand.denom()) != Sign::Zero {
                return cand;
            }
        }
        step = step / &two;
    }
}

/// Isolate every distinct real root of `p`, in increasing order. Each root
/// carries the squarefree factor it belongs to and its multiplicity in `p`.
pub fn isolate_real_roots(p: &UniPoly<Rational>) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let factors: Vec<(UniPoly<BigInt>, usize)> = p
        .squarefree_decomposition()
        .into_iter()
        .map(|(f, k)| (f.primitive_integer(), k))
        .collect();
    let sq = factors
        .iter()
        .fold(UniPoly::<Rational>::one(), |acc, (f, _)| acc * f.to_rational())
        .primitive_integer();
    let sturm = SturmSequence::new(&sq);
    let b = dyadic_root_bound(&sq.to_rational())?;
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            let (f, k) = factors
                .iter()
                .find(|(f, _)| {
                    f.sign_at(lo.numer(), lo.denom()) != f.sign_at(hi.numer(), hi.denom())
                })
                .expect("isolated root belongs to a factor");
            out.push(RealRoot::new_unchecked(f.clone(), lo, hi, *k));
            continue;
        }
        let m = split_point(&sq, &lo, &hi);
        stack.push((lo, m.clone()));
        stack.push((m, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn count_real_roots(p: &UniPoly<Rational>) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    SturmSequence::new(&p.squarefree_part().primitive_integer()).count_all()
}

/// Number of distinct real roots in the open interval `(lo, hi)`.
pub fn count_roots_between(p: &UniPoly<Rational>, lo: &Rational, hi: &Rational) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let sq = p.squarefree_part().primitive_integer();
    let s = SturmSequence::new(&sq);
    let at_hi = if sq.sign_at(hi.numer(), hi.denom()) == Sign::Zero {
        1
    } else {
        0
    };
    s.count(lo, hi) - at_hi
}
