//! Points at infinity reached by fibres of `f`.

use num_traits::{One, Signed, Zero};

use super::describe_root;
use super::limits::LimitCandidates;
use super::projective::{ProjectivePoint, SectorSet};
use crate::exact_algebra::elimination::{enclosing_radius, solution_bounds};
use crate::exact_algebra::scalar::simplest_between;
use crate::exact_algebra::{isolate_real_roots, resultant, Axis, BivariatePoly, Rational, RealRoot, UniPoly};
use crate::gauss_winding::Circle;
use crate::milnor_arcs::{bump_radius, CenterCertificate};
use crate::{Error, QBiPoly, QPoly, Result};

/// One value of `f` whose fibre was followed out to infinity.
#[derive(Clone, Debug)]
pub struct FibreTest {
    pub value: String,
    pub candidate: bool,
    pub points: Vec<ProjectivePoint>,
}

#[derive(Clone, Debug)]
pub struct FibresAtInfinity {
    /// Points at infinity of some fibre, in angular order.
    pub points: Vec<ProjectivePoint>,
    pub tests: Vec<FibreTest>,
}

enum TestValue {
    Candidate(RealRoot),
    /// Several rationals from one gap, tried in order.
    Gap(Vec<Rational>),
}

fn gap_samples(lo: Option<&Rational>, hi: Option<&Rational>) -> Vec<Rational> {
    match (lo, hi) {
        (None, None) => (0..6).map(|k| Rational::from_integer(k.into())).collect(),
        (Some(l), None) => (1..7).map(|k| l + Rational::from_integer(k.into())).collect(),
        (None, Some(h)) => (1..7).map(|k| h - Rational::from_integer(k.into())).collect(),
        (Some(l), Some(h)) => {
            let mut v = vec![simplest_between(l, h)];
            let step = (h - l) / Rational::from_integer(7.into());
            v.extend((1..7).map(|k| l + &step * Rational::from_integer(k.into())));
            v
        }
    }
}

fn test_values(cands: &LimitCandidates) -> Vec<TestValue> {
    let vals = &cands.values;
    if vals.is_empty() {
        return vec![TestValue::Gap(gap_samples(None, None))];
    }
    let mut out = vec![TestValue::Gap(gap_samples(None, Some(&vals[0].lo)))];
    for (i, c) in vals.iter().enumerate() {
        out.push(TestValue::Candidate(c.clone()));
        if i + 1 < vals.len() {
            let mut a = c.clone();
            let mut b = vals[i + 1].clone();
            while a.hi > b.lo {
                a.refine();
                b.refine();
            }
            out.push(TestValue::Gap(gap_samples(Some(&a.hi), Some(&b.lo))));
        }
    }
    out.push(TestValue::Gap(gap_samples(Some(&vals[vals.len() - 1].hi), None)));
    out
}

fn abs_bound(tests: &[TestValue]) -> Rational {
    let mut t = Rational::zero();
    for v in tests {
        match v {
            TestValue::Candidate(c) => t = t.max(c.lo.abs()).max(c.hi.abs()),
            TestValue::Gap(s) => {
                for q in s {
                    t = t.max(q.abs());
                }
            }
        }
    }
    t
}

/// Points at infinity of `{f = t}` for a rational `t`, or `None` when the
/// fibre shares a component with `M`.
fn rational_fibre(
    f: &QBiPoly,
    t: &Rational,
    cert: &CenterCertificate,
    sectors: &SectorSet,
    base: &Rational,
    budget: usize,
) -> Result<Option<Vec<usize>>> {
    let g = f.clone() - QBiPoly::constant(t.clone());
    let mut rho = base.clone();
    if !cert.h.is_constant() {
        match solution_bounds(&cert.h, &g) {
            Ok(b) => rho = rho.max(enclosing_radius(&b, &cert.center)),
            Err(_) => return Ok(None),
        }
    }
    let rho = bump_radius(cert, rho);
    let circle = Circle::new(cert.center.clone(), rho);
    let pulled = circle.pullback(&g);
    let mut hits = Vec::new();
    if pulled.is_zero() {
        return Ok(None);
    }
    let (ix, iy) = circle.point_at_infinity();
    if g.eval(&ix, &iy).is_zero() {
        let west = (-Rational::one(), Rational::zero());
        if let Some((i, _)) = sectors.locate_direction(&west) {
            hits.push(i);
        }
    }
    for s in isolate_real_roots(&pulled)? {
        if let Some((i, _)) = sectors.locate(&s, budget)? {
            hits.push(i);
        }
    }
    Ok(Some(hits))
}

/// Points at infinity of `{f = c}` for a candidate root `c` with a
/// nonlinear defining polynomial.
fn algebraic_fibre(
    f: &QBiPoly,
    c: &RealRoot,
    cert: &CenterCertificate,
    sectors: &SectorSet,
    base: &Rational,
    budget: usize,
) -> Result<Vec<usize>> {
    let rho = bump_radius(cert, base.clone());
    let circle = Circle::new(cert.center.clone(), rho);
    let d = f.degree().unwrap_or(0) as usize;
    let (_, _, den) = circle.parametrization();
    let p = circle.pullback(f);
    // P(s) - t D(s)^d with coefficients in Q[t], then eliminate t
    let dd = den.pow(d);
    let n = p.degree().unwrap_or(0).max(dd.degree().unwrap_or(0));
    let in_t: UniPoly<QPoly> = UniPoly::new(
        (0..=n)
            .map(|k| UniPoly::new(vec![p.coeff(k), -dd.coeff(k)]))
            .collect(),
    );
    // swap to a polynomial in t over Q[s]
    let by_t = BivariatePoly::from_recursive(&in_t, Axis::X).to_recursive(Axis::Y);
    let m = c.defining_poly();
    let g = resultant(&by_t, &m.map(|q| QPoly::constant(q.clone())))?;
    if g.is_zero() {
        return Err(Error::CenterRejected("a candidate fibre meets the circle in an arc".into()));
    }
    let mut hits = Vec::new();
    for s in isolate_real_roots(&g)? {
        let pt = circle.algebraic_point(&s);
        let mut cc = c.clone();
        let mut width = Rational::new(1.into(), 16.into());
        let mut decided = None;
        for _ in 0..=budget {
            let iv = f.eval_box(&pt.enclosure(&width));
            if iv.lo > cc.lo && iv.hi < cc.hi {
                decided = Some(true);
                break;
            }
            if iv.hi < cc.lo || iv.lo > cc.hi {
                decided = Some(false);
                break;
            }
            width /= Rational::from_integer(2.into());
            cc.refine();
            if cc.to_rational().is_some() {
                return Err(Error::Other("candidate became rational".into()));
            }
        }
        match decided {
            Some(true) => {
                if let Some((i, _)) = sectors.locate(&s, budget)? {
                    hits.push(i);
                }
            }
            Some(false) => {}
            None => return Err(Error::UndecidedSign),
        }
    }
    Ok(hits)
}

/// `ℒ_f` from one test value per candidate and per gap between candidates.
pub fn fibres_at_infinity(
    f: &QBiPoly,
    cert: &CenterCertificate,
    cands: &LimitCandidates,
    budget: usize,
) -> Result<FibresAtInfinity> {
    let sectors = SectorSet::new(&f.top_form())?;
    let tests = test_values(cands);
    let slack = abs_bound(&tests);
    let crossing = sectors.crossing_radius(f, &cert.center, &slack)?;
    let base = crossing.max(cands.radius.clone()).max(cert.radius_bound.clone()) + Rational::one();
    let mut seen = vec![false; sectors.sectors.len()];
    let mut records = Vec::new();
    for tv in tests {
        let (value, candidate, hits) = match tv {
            TestValue::Candidate(c) => match c.to_rational() {
                Some(q) => {
                    let hits = rational_fibre(f, &q, cert, &sectors, &base, budget)?
                        .ok_or_else(|| Error::CenterRejected("a fibre component lies in the Milnor set".into()))?;
                    (describe_root(&c), true, hits)
                }
                None => (describe_root(&c), true, algebraic_fibre(f, &c, cert, &sectors, &base, budget)?),
            },
            TestValue::Gap(samples) => {
                let mut found = None;
                for q in samples {
                    if let Some(h) = rational_fibre(f, &q, cert, &sectors, &base, budget)? {
                        found = Some((q.to_string(), false, h));
                        break;
                    }
                }
                found.ok_or_else(|| Error::Other("no usable sample between candidates".into()))?
            }
        };
        let mut pts: Vec<usize> = hits;
        pts.sort_unstable();
        pts.dedup();
        for &i in &pts {
            seen[i] = true;
        }
        records.push(FibreTest {
            value,
            candidate,
            points: pts.iter().map(|&i| sectors.sectors[i].point.clone()).collect(),
        });
    }
    let mut points: Vec<ProjectivePoint> = sectors
        .sectors
        .iter()
        .zip(&seen)
        .filter(|(_, &s)| s)
        .map(|(s, _)| s.point.clone())
        .collect();
    points.sort_by(|a, b| a.angle_cmp(b));
    Ok(FibresAtInfinity { points, tests: records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;
    use crate::exact_algebra::DEFAULT_SIGN_BUDGET;
    use crate::infinity_analysis::limit_candidates;
    use crate::input_output::parse_poly;
    use crate::milnor_arcs::is_generic_center;

    fn lf(src: &str, a: (i64, i64)) -> Vec<String> {
        let f = parse_poly(src).unwrap();
        let cert = is_generic_center(&f, &(int(a.0), int(a.1))).unwrap();
        let cands = limit_candidates(&f, &cert).unwrap();
        let r = fibres_at_infinity(&f, &cert, &cands, DEFAULT_SIGN_BUDGET).unwrap();
        r.points.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn compact_fibres_have_no_points_at_infinity() {
        assert!(lf("x^4 + y^2", (0, 1)).is_empty());
        assert!(lf("x^2 + y^2", (0, 1)).is_empty());
    }

    #[test]
    fn bounded_x_keeps_fibres_off_the_horizontal_point() {
        // f >= x^2 bounds x on every fibre
        assert_eq!(lf("x^2 + (x*y - 1)^2", (0, 0)), vec!["[0:1:0]"]);
    }

    #[test]
    fn vertical_only_for_xy2_plus_x() {
        assert_eq!(lf("x*y^2 + x", (1, 1)), vec!["[0:1:0]"]);
    }
}
