//! Elimination of one variable from a pair of bivariate polynomials.

use num_traits::{Signed, Zero};

use super::bipoly::{Axis, BivariatePoly};
use super::resultant::resultant;
use super::scalar::Rational;
use super::sturm::cauchy_root_bound;
use super::unipoly::UniPoly;
use crate::{Error, Result};

type QPoly = UniPoly<Rational>;
type QBiPoly = BivariatePoly<Rational>;

/// `Res_var(p, q)`, a polynomial in the remaining variable.
pub fn eliminate(p: &QBiPoly, q: &QBiPoly, var: Axis) -> Result<QPoly> {
    let r = resultant(&p.to_recursive(var), &q.to_recursive(var))?;
    Ok(r)
}

/// Bounds `(bx, by)` with `|x| < bx`, `|y| < by` at every complex common
/// zero of `p` and `q`. Fails when the common zero set is not finite.
pub fn solution_bounds(p: &QBiPoly, q: &QBiPoly) -> Result<(Rational, Rational)> {
    let rx = eliminate(p, q, Axis::Y)?;
    let ry = eliminate(p, q, Axis::X)?;
    if rx.is_zero() || ry.is_zero() {
        return Err(Error::NonIsolatedExceptionalSet);
    }
    Ok((cauchy_root_bound(&rx)?, cauchy_root_bound(&ry)?))
}

/// Bounds for the singular points `{p = p_x = p_y = 0}` of a squarefree `p`,
/// using `p_x + c p_y` for the first `c` that shares no factor with `p`.
pub fn singular_point_bounds(p: &QBiPoly) -> Result<(Rational, Rational)> {
    let px = p.differentiate(Axis::X);
    let py = p.differentiate(Axis::Y);
    for c in [0i64, 1, -1, 2, -2, 3, -3, 5, 7] {
        let comb = px.clone() + py.scale(&Rational::from_integer(c.into()));
        if comb.is_zero() {
            continue;
        }
        if let Ok(b) = solution_bounds(p, &comb) {
            return Ok(b);
        }
    }
    Err(Error::NonIsolatedExceptionalSet)
}

/// `1 + bx + by + |a1| + |a2|`, a radius around `a` enclosing the box.
pub fn enclosing_radius(b: &(Rational, Rational), a: &(Rational, Rational)) -> Rational {
    Rational::from_integer(1.into()) + &b.0 + &b.1 + a.0.abs() + a.1.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;

    fn bp(terms: &[((u32, u32), i64)]) -> QBiPoly {
        QBiPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn eliminating_y_from_circle_and_line() {
        // x^2 + y^2 - 2 and y - x meet at x = ±1
        let c = bp(&[((2, 0), 1), ((0, 2), 1), ((0, 0), -2)]);
        let l = bp(&[((0, 1), 1), ((1, 0), -1)]);
        let r = eliminate(&c, &l, Axis::Y).unwrap();
        assert_eq!(r.monic(), UniPoly::new(vec![int(-1), int(0), int(1)]));
        let (bx, by) = solution_bounds(&c, &l).unwrap();
        assert!(bx > int(1) && by > int(1));
    }

    #[test]
    fn common_component_is_rejected() {
        let a = bp(&[((1, 0), 1), ((0, 1), -1)]);
        let b = a.clone() * bp(&[((1, 0), 1), ((0, 0), 1)]);
        assert!(solution_bounds(&a, &b).is_err());
    }
}
