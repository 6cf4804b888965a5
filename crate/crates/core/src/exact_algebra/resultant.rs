//! Resultants and subresultants over an arbitrary coefficient ring.
//!
//! The sign convention is the Sylvester determinant with the rows of the
//! first argument on top.

use num_traits::Zero;

use super::scalar::Ring;
use super::unipoly::UniPoly;
use crate::{Error, Result};

/// Fraction-free determinant (Bareiss elimination with row pivoting).
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rows of shifted coefficient vectors (highest degree first), `count` rows
/// of width `width`.
fn shifted_rows<R: Ring>(p: &UniPoly<R>, count: usize, width: usize) -> Vec<Vec<R>> {
    let m = p.degree().unwrap_or(0);
    (0..count)
        .map(|r| {
            let mut row = vec![R::zero(); width];
            for k in 0..=m {
                row[r + (m - k)] = p.coeff(k);
            }
            row
        })
        .collect()
}

pub fn sylvester_matrix<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Vec<Vec<R>> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let mut rows = shifted_rows(p, n, m + n);
    rows.extend(shifted_rows(q, m, m + n));
    rows
}

/// Resultant as the Bareiss determinant of the Sylvester matrix.
pub fn sylvester_resultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<R> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    if p.is_zero() || q.is_zero() {
        return Ok(R::zero());
    }
    Ok(bareiss_det(sylvester_matrix(p, q)))
}

fn ring_pow<R: Ring>(a: &R, k: usize) -> R {
    let mut acc = R::one();
    for _ in 0..k {
        acc = acc * a.clone();
    }
    acc
}

/// Resultant by the subresultant pseudo-remainder sequence; equal to
/// [`sylvester_resultant`] but much cheaper over polynomial rings.
pub fn resultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<R> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::DegenerateResultant);
    }
    if p.is_zero() || q.is_zero() {
        return Ok(R::zero());
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    if m < n {
        std::mem::swap(&mut a, &mut b);
        if m % 2 == 1 && n % 2 == 1 {
            negate = !negate;
        }
    }
    let finish = |r: R, negate: bool| if negate { -r } else { r };
    if b.degree() == Some(0) {
        return Ok(finish(ring_pow(&b.lc(), a.degree().unwrap()), negate));
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(R::zero());
        }
        a = b;
        let divisor = g.clone() * ring_pow(&h, delta);
        b = r.map(|c| c.exact_div(&divisor).expect("subresultant division is exact"));
        g = a.lc();
        if delta > 0 {
            h = ring_pow(&g, delta)
                .exact_div(&ring_pow(&h, delta - 1))
                .expect("subresultant division is exact");
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let res = ring_pow(&b.lc(), da)
                .exact_div(&ring_pow(&h, da - 1))
                .expect("subresultant division is exact");
            return Ok(finish(res, negate));
        }
    }
}

/// The `j`-th subresultant polynomial `S_j(p, q)`, built from minors of the
/// Sylvester matrix. For `j >= min(deg p, deg q)` the lower-degree input is
/// returned, which is proportional to `S_j` whenever that is nonzero.
pub fn subresultant<R: Ring>(p: &UniPoly<R>, q: &UniPoly<R>, j: usize) -> UniPoly<R> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    if j >= m.min(n) {
        return if m <= n { p.clone() } else { q.clone() };
    }
    let width = m + n - j;
    let mut rows = shifted_rows(p, n - j, width);
    rows.extend(shifted_rows(q, m - j, width));
    let size = m + n - 2 * j;
    let mut coeffs = Vec::with_capacity(j + 1);
    for i in 0..=j {
        // leading size-1 columns plus the column holding the y^i coefficient
        let col = width - 1 - i;
        let minor: Vec<Vec<R>> = rows
            .iter()
            .map(|row| {
                let mut r: Vec<R> = row[..size - 1].to_vec();
                r.push(row[col].clone());
                r
            })
            .collect();
        coeffs.push(bareiss_det(minor));
    }
    UniPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::exact_algebra::scalar::{int, Rational};

    type Q = UniPoly<Rational>;
    type QQ = UniPoly<Q>;

    fn q(v: &[i64]) -> Q {
        Q::new(v.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn resultant_of_quadratic_and_linear() {
        // Res_y(y^2 - x, y) = -x
        let x = Q::var();
        let p = QQ::new(vec![-x.clone(), Q::zero(), Q::one()]);
        let l = QQ::new(vec![Q::zero(), Q::one()]);
        assert_eq!(resultant(&p, &l).unwrap(), -x.clone());
        assert_eq!(sylvester_resultant(&p, &l).unwrap(), -x);
    }

    #[test]
    fn resultant_of_two_lines() {
        // Res_y(y - x, y + x) = 2x
        let x = Q::var();
        let a = QQ::new(vec![-x.clone(), Q::one()]);
        let b = QQ::new(vec![x.clone(), Q::one()]);
        assert_eq!(resultant(&a, &b).unwrap(), x.scale(&int(2)));
    }

    #[test]
    fn prs_matches_sylvester_determinant() {
        let cases = [
            (q(&[1, -3, 0, 2, 5]), q(&[-2, 1, 1])),
            (q(&[4, 0, 0, 1]), q(&[1, 1, 1, 1, 1, 1])),
            (q(&[2, 7]), q(&[3, 0, -1, 2])),
            (q(&[-1, 1]).pow(2), q(&[-1, 1]) * q(&[2, 1])),
        ];
        for (a, b) in cases {
            assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b).unwrap());
            assert_eq!(resultant(&b, &a).unwrap(), sylvester_resultant(&b, &a).unwrap());
        }
    }

    #[test]
    fn degenerate_input_is_an_error() {
        assert!(matches!(
            resultant(&Q::zero(), &Q::zero()),
            Err(Error::DegenerateResultant)
        ));
        assert!(resultant(&Q::zero(), &q(&[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn first_subresultant_vanishes_on_common_factor() {
        // (y-1)(y-2) and (y-1)(y+3): S_1 is proportional to y-1
        let a = q(&[2, -3, 1]);
        let b = q(&[-3, 2, 1]);
        let s1 = subresultant(&a, &b, 1);
        assert_eq!(s1.monic(), q(&[-1, 1]));
    }
}
