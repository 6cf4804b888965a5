//! Limits of `f` along Milnor arcs and the points at infinity they reach.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::projective::SectorSet;
use super::{describe_root, LimitValue};
use crate::exact_algebra::elimination::enclosing_radius;
use crate::exact_algebra::{
    cauchy_root_bound, isolate_real_roots, resultant, AlgebraicPoint, Axis, BivariatePoly, Rational, RealRoot,
    UniPoly,
};
use crate::milnor_arcs::{bump_radius, choose_radius, ArcRecord, CenterCertificate, Direction};
use crate::{Error, QBiPoly, QPoly, Result};

/// Polynomials in the remaining plane variable over `Q[t]`.
type LevelPoly = UniPoly<QPoly>;

/// The finite values an arc can tend to, and a radius beyond which `M`
/// meets none of their fibres.
#[derive(Clone, Debug)]
pub struct LimitCandidates {
    /// Squarefree polynomial whose real roots are the candidates.
    pub poly: QPoly,
    pub values: Vec<RealRoot>,
    pub radius: Rational,
}

/// `Res_var(f - t, h)` as a polynomial in the other plane variable with
/// coefficients in `Q[t]`.
fn level_resultant(f: &QBiPoly, h: &QBiPoly, var: Axis) -> Result<LevelPoly> {
    let lift = |p: &QBiPoly| -> UniPoly<LevelPoly> { p.to_recursive(var).map(|c| c.map(|q| QPoly::constant(q.clone()))) };
    let mut rows = lift(f).into_coeffs();
    if rows.is_empty() {
        rows.push(LevelPoly::zero());
    }
    rows[0] = rows[0].clone() - LevelPoly::constant(QPoly::var());
    resultant(&UniPoly::new(rows), &lift(h))
}

/// Bound on `|z|` over the zeros of `r(z, t)` with `m(t) = 0`.
fn coordinate_bound(r: &LevelPoly, m: &QPoly) -> Result<Rational> {
    let by_t = BivariatePoly::from_recursive(r, Axis::X).to_recursive(Axis::Y);
    let lifted = m.map(|q| QPoly::constant(q.clone()));
    let e = resultant(&by_t, &lifted)?;
    if e.is_zero() {
        return Err(Error::CenterRejected("a fibre component lies in the Milnor set".into()));
    }
    if e.is_constant() {
        return Ok(Rational::zero());
    }
    cauchy_root_bound(&e)
}

/// Every finite limit of `f` along an unbounded branch of `M` is a root of
/// the leading coefficients of `Res_y(f - t, h)` in `x` and of
/// `Res_x(f - t, h)` in `y`.
pub fn limit_candidates(f: &QBiPoly, cert: &CenterCertificate) -> Result<LimitCandidates> {
    let rx = level_resultant(f, &cert.h, Axis::Y)?;
    let ry = level_resultant(f, &cert.h, Axis::X)?;
    if rx.is_zero() || ry.is_zero() {
        return Err(Error::CenterRejected("a fibre component lies in the Milnor set".into()));
    }
    let m = (rx.lc() * ry.lc()).squarefree_part().monic();
    let values = if m.is_constant() {
        Vec::new()
    } else {
        let mut v = isolate_real_roots(&m)?;
        v.iter_mut().for_each(RealRoot::exactify);
        v
    };
    let radius = if values.is_empty() {
        Rational::zero()
    } else {
        let b = (coordinate_bound(&rx, &m)?, coordinate_bound(&ry, &m)?);
        enclosing_radius(&b, &cert.center)
    };
    Ok(LimitCandidates { poly: m, values, radius })
}

/// Where `f(anchor)` sits among the candidates.
enum Placement {
    /// Number of candidates below.
    Exact(usize),
    Partial { below: Vec<usize>, above: Vec<usize>, open: Vec<usize> },
}

fn place(f: &QBiPoly, anchor: &AlgebraicPoint, cands: &[RealRoot], budget: usize) -> Result<Placement> {
    if let Some((x, y)) = anchor.to_rational() {
        let v = f.eval(&x, &y);
        let mut below = 0;
        for c in cands {
            match c.cmp_rational(&v) {
                Ordering::Less => below += 1,
                Ordering::Greater => {}
                Ordering::Equal => return Err(Error::Other("arc anchor lies on a candidate fibre".into())),
            }
        }
        return Ok(Placement::Exact(below));
    }
    let mut cands: Vec<RealRoot> = cands.to_vec();
    let mut width = Rational::new(BigInt::one(), BigInt::from(16));
    let (mut below, mut above): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    let mut open: Vec<usize> = (0..cands.len()).collect();
    for _ in 0..=budget {
        let iv = f.eval_box(&anchor.enclosure(&width));
        open.retain(|&i| {
            if cands[i].hi < iv.lo {
                below.push(i);
                false
            } else if cands[i].lo > iv.hi {
                above.push(i);
                false
            } else {
                true
            }
        });
        if open.is_empty() {
            return Ok(Placement::Exact(below.len()));
        }
        width /= Rational::from_integer(2.into());
        for &i in &open {
            cands[i].refine();
        }
    }
    Ok(Placement::Partial { below, above, open })
}

/// `lim f` along the arc: the next candidate beyond `f(anchor)` in the
/// direction in which `f` moves, or an infinity.
pub fn arc_limit(f: &QBiPoly, cands: &LimitCandidates, arc: &ArcRecord, budget: usize) -> Result<LimitValue> {
    let vals = &cands.values;
    match place(f, &arc.anchor, vals, budget)? {
        Placement::Exact(k) => Ok(match arc.direction {
            Direction::Increasing if k < vals.len() => LimitValue::Finite(vals[k].clone()),
            Direction::Increasing => LimitValue::PlusInfinity,
            Direction::Decreasing if k > 0 => LimitValue::Finite(vals[k - 1].clone()),
            Direction::Decreasing => LimitValue::MinusInfinity,
        }),
        Placement::Partial { below, above, open } => {
            let mut candidates: Vec<String> = open.iter().map(|&i| describe_root(&vals[i])).collect();
            let beyond = match arc.direction {
                Direction::Increasing => above.iter().min().map(|&i| describe_root(&vals[i])),
                Direction::Decreasing => below.iter().max().map(|&i| describe_root(&vals[i])),
            };
            candidates.push(beyond.unwrap_or_else(|| {
                match arc.direction {
                    Direction::Increasing => "+inf",
                    Direction::Decreasing => "-inf",
                }
                .to_string()
            }));
            Err(Error::LimitUndecided { candidates })
        }
    }
}

/// Sectors around the points at infinity of `M`.
pub fn milnor_sectors(cert: &CenterCertificate) -> Result<SectorSet> {
    SectorSet::new(&cert.h.top_form())
}

/// A radius beyond which every arc has a decidable limit and stays inside
/// its sector: past the certificate bound, past the candidate radius and
/// past the sector crossings of `M`.
pub fn analysis_radius(cert: &CenterCertificate, cands: &LimitCandidates, sectors: &SectorSet) -> Result<Rational> {
    let mut r = choose_radius(cert);
    if !cert.h.is_constant() {
        let c = sectors.crossing_radius(&cert.h, &cert.center, &Rational::zero())?;
        r = r.max(c);
    }
    r = r.max(cands.radius.clone());
    Ok(bump_radius(cert, r + Rational::one()))
}

/// Fill in limit, endpoint and side of every arc.
pub fn annotate_arcs(
    f: &QBiPoly,
    cands: &LimitCandidates,
    sectors: &SectorSet,
    arcs: &mut [ArcRecord],
    budget: usize,
    limit_budget: usize,
) -> Result<()> {
    for arc in arcs.iter_mut() {
        arc.limit = Some(arc_limit(f, cands, arc, limit_budget)?);
        let (i, side) = sectors
            .locate(&arc.param, budget)?
            .ok_or_else(|| Error::Other("arc anchor outside every sector".into()))?;
        arc.endpoint = Some(sectors.sectors[i].point.clone());
        arc.side = Some(side);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;
    use crate::exact_algebra::DEFAULT_SIGN_BUDGET;
    use crate::input_output::parse_poly;
    use crate::milnor_arcs::{enumerate_arcs, is_generic_center};

    fn run(src: &str, a: (i64, i64)) -> (Vec<ArcRecord>, LimitCandidates) {
        let f = parse_poly(src).unwrap();
        let cert = is_generic_center(&f, &(int(a.0), int(a.1))).unwrap();
        let cands = limit_candidates(&f, &cert).unwrap();
        let sectors = milnor_sectors(&cert).unwrap();
        let r = analysis_radius(&cert, &cands, &sectors).unwrap();
        let mut arcs = enumerate_arcs(&cert, &r, DEFAULT_SIGN_BUDGET).unwrap();
        annotate_arcs(&f, &cands, &sectors, &mut arcs, DEFAULT_SIGN_BUDGET, DEFAULT_SIGN_BUDGET).unwrap();
        (arcs, cands)
    }

    #[test]
    fn proper_map_has_infinite_limits_only() {
        let (arcs, cands) = run("x^2 + y^2", (0, 1));
        assert!(cands.values.is_empty());
        assert_eq!(arcs.len(), 2);
        assert!(arcs.iter().all(|a| a.limit == Some(LimitValue::PlusInfinity)));
    }

    #[test]
    fn asymptotic_value_zero_is_reached() {
        let (arcs, cands) = run("x^2 + (x*y - 1)^2", (0, 0));
        assert!(cands.values.iter().any(|c| c.to_rational() == Some(int(0))));
        let finite: Vec<_> = arcs.iter().filter(|a| a.limit.as_ref().unwrap().is_finite()).collect();
        assert!(!finite.is_empty());
        for a in finite {
            assert_eq!(a.limit, Some(LimitValue::Finite(RealRoot::from_rational(&int(0)))));
            assert_eq!(a.direction, Direction::Decreasing);
        }
    }

    #[test]
    fn starved_budget_reports_candidates() {
        let f = parse_poly("x^2 + (x*y - 1)^2").unwrap();
        let cert = is_generic_center(&f, &(int(0), int(0))).unwrap();
        let cands = limit_candidates(&f, &cert).unwrap();
        let sectors = milnor_sectors(&cert).unwrap();
        let r = analysis_radius(&cert, &cands, &sectors).unwrap();
        let arcs = enumerate_arcs(&cert, &r, DEFAULT_SIGN_BUDGET).unwrap();
        let undecided = arcs
            .iter()
            .filter(|a| a.anchor.to_rational().is_none())
            .map(|a| arc_limit(&f, &cands, a, 0))
            .find(|r| r.is_err());
        match undecided {
            Some(Err(Error::LimitUndecided { candidates })) => assert!(!candidates.is_empty()),
            other => panic!("expected an undecided limit, got {:?}", other),
        }
    }
}
