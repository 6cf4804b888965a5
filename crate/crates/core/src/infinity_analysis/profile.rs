//! Per-point summary of the Milnor set at a point at infinity.

use num_traits::Zero;

use super::germ::{classify_line, milnor_germ, mult_at_linf, tangent_cone, ConeLine};
use super::describe_root;
use super::projective::{multiplicity_at, ProjectivePoint, Side};
use crate::milnor_arcs::ArcRecord;
use crate::{QBiPoly, Result};

/// A real line of the tangent cone, for reporting.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConeLineReport {
    /// `"w=0"` for the line at infinity, otherwise `"u=c*w"` with `c` shown.
    pub line: String,
    pub multiplicity: usize,
    pub real_branch: bool,
    pub singular_branch: bool,
    pub nonreal_branch: bool,
}

#[derive(Clone, Debug)]
pub struct InfinityProfile {
    pub point: ProjectivePoint,
    pub d_p: usize,
    /// Germ in the chart `(u, w)` at the point, when the point is rational.
    pub germ: Option<QBiPoly>,
    pub cone_degree: usize,
    pub cone_lines: Vec<ConeLineReport>,
    /// Degree of the part of the cone made of non-real lines.
    pub cone_complex_degree: usize,
    pub deg_r_red: usize,
    pub deg_s: usize,
    pub deg_k: usize,
    /// Cone degree with real lines counted once.
    pub delta: usize,
    /// Arcs reaching the point from the positive and the negative side.
    pub r_p: usize,
    pub s_p: usize,
    pub mult_linf: usize,
    pub in_lf: bool,
    /// False when some branch data came from a fallback.
    pub exact: bool,
}

impl InfinityProfile {
    /// Whether the intersection multiplicity with `L^∞` equals `d_p - 1`.
    pub fn mult_identity_holds(&self) -> bool {
        self.mult_linf + 1 == self.d_p
    }
}

/// Profile of `M = {h = 0}` at `p`, a point of `{f_d = 0}` of order `d_p`.
pub fn profile_at(
    h: &QBiPoly,
    p: &ProjectivePoint,
    d_p: usize,
    arcs: &[ArcRecord],
    in_lf: bool,
) -> Result<InfinityProfile> {
    let mut r_p = 0;
    let mut s_p = 0;
    for a in arcs {
        if a.endpoint.as_ref() == Some(p) {
            match a.side {
                Some(Side::Positive) => r_p += 1,
                Some(Side::Negative) => s_p += 1,
                None => {}
            }
        }
    }
    let mut prof = InfinityProfile {
        point: p.clone(),
        d_p,
        germ: None,
        cone_degree: 0,
        cone_lines: Vec::new(),
        cone_complex_degree: 0,
        deg_r_red: 0,
        deg_s: 0,
        deg_k: 0,
        delta: 0,
        r_p,
        s_p,
        mult_linf: 0,
        in_lf,
        exact: true,
    };
    if p.as_rational().is_none() {
        prof.mult_linf = multiplicity_at(&h.top_form(), p);
        prof.exact = prof.mult_linf == 0;
        return Ok(prof);
    }
    let germ = milnor_germ(h, p)?;
    prof.mult_linf = mult_at_linf(&germ)?;
    if !germ.coeff(0, 0).is_zero() {
        prof.germ = Some(germ);
        return Ok(prof);
    }
    let cone = tangent_cone(&germ)?;
    prof.cone_degree = cone.degree;
    prof.cone_complex_degree = cone.complex_degree;
    prof.deg_k = cone.complex_degree;
    prof.delta = cone.lines.len() + cone.complex_degree;
    for (line, k) in &cone.lines {
        let b = classify_line(&germ, line, *k);
        prof.exact &= b.exact;
        let at_infinity = matches!(line, ConeLine::Infinity);
        if b.real {
            prof.deg_r_red += 1;
            if b.real_singular || at_infinity {
                prof.deg_s += k;
            }
        }
        if b.nonreal {
            prof.deg_k += k;
        }
        prof.cone_lines.push(ConeLineReport {
            line: match line {
                ConeLine::Infinity => "w=0".to_string(),
                ConeLine::Slope(c) => format!("u={}*w", describe_root(c)),
            },
            multiplicity: *k,
            real_branch: b.real,
            singular_branch: b.real_singular,
            nonreal_branch: b.nonreal,
        });
    }
    prof.germ = Some(germ);
    Ok(prof)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;
    use crate::input_output::parse_poly;
    use crate::milnor_arcs::milnor_polynomial;

    fn prof(src: &str, a: (i64, i64), p: (i64, i64), d_p: usize) -> InfinityProfile {
        let f = parse_poly(src).unwrap();
        let h = milnor_polynomial(&f, &(int(a.0), int(a.1))).unwrap();
        profile_at(&h, &ProjectivePoint::new(p.0.into(), p.1.into()), d_p, &[], false).unwrap()
    }

    #[test]
    fn single_double_line() {
        let p = prof("y^5 + x^2*y^3 - y", (0, 0), (1, 0), 3);
        assert_eq!(p.mult_linf, 2);
        assert!(p.mult_identity_holds());
        assert_eq!(p.cone_degree, 2);
        assert_eq!((p.deg_r_red, p.deg_s, p.deg_k), (1, 0, 0));
        assert!(p.exact);
    }

    #[test]
    fn line_at_infinity_in_the_cone() {
        let p = prof("(x - y^2)*((x - y^2)*(y^2 + 1) - 1)", (0, 0), (1, 0), 6);
        assert_eq!(p.mult_linf, 5);
        assert_eq!(p.deg_s, 2);
        assert_eq!(p.deg_k, 0);
        assert_eq!(p.deg_r_red, 2);
        assert!(p.cone_lines.iter().any(|l| l.line == "w=0" && l.multiplicity == 2));
    }

    #[test]
    fn non_real_cone() {
        let p = prof("-5/3*y^3 + y^2 - 2*y + 4*x^2 + x", (0, 0), (1, 0), 3);
        assert!(p.deg_k > 0);
        assert_eq!(p.deg_r_red, 0);
    }

    #[test]
    fn simple_point_is_off_the_closure() {
        let p = prof("x*y^2 + x", (1, 1), (0, 1), 1);
        assert_eq!(p.mult_linf, 0);
        assert_eq!(p.cone_degree, 0);
    }
}
