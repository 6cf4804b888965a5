//! Local germ of the closure of the Milnor set at a point at infinity, its
//! tangent cone and the branches tangent to each cone line.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::projective::ProjectivePoint;
use crate::exact_algebra::{isolate_real_roots, Rational, RealRoot, UniPoly};
use crate::{Error, QBiPoly, QPoly, Result};

/// Chart at `p = [a:b:0]` with rotated coordinates `X = a x + b y`,
/// `Y = -b x + a y`; the germ lives in `(u, w) = (Y/X, 1/X)` and is stored
/// with `u` as the first variable.
pub fn milnor_germ(h: &QBiPoly, p: &ProjectivePoint) -> Result<QBiPoly> {
    let (a, b) = p
        .as_rational()
        .ok_or_else(|| Error::Other("germ at an irrational point".into()))?;
    let rotated = rotate_to(h, &a, &b);
    let e = rotated.degree().unwrap_or(0);
    Ok(QBiPoly::from_terms(
        rotated.terms().map(|(&(i, j), c)| ((j, e - i - j), c.clone())),
    ))
}

/// `g(X, Y) = h(x, y)` under the rotation that sends `[a:b]` to `[1:0]`.
pub fn rotate_to(h: &QBiPoly, a: &BigInt, b: &BigInt) -> QBiPoly {
    let n = Rational::from_integer(a * a + b * b);
    let aq = Rational::from_integer(a.clone()) / &n;
    let bq = Rational::from_integer(b.clone()) / &n;
    let xs = QBiPoly::term(aq.clone(), 1, 0) - QBiPoly::term(bq.clone(), 0, 1);
    let ys = QBiPoly::term(bq, 1, 0) + QBiPoly::term(aq, 0, 1);
    h.compose(&xs, &ys)
}

/// Order in `u` of `germ(u, 0)`: the intersection multiplicity with `L^∞`.
pub fn mult_at_linf(germ: &QBiPoly) -> Result<usize> {
    germ.terms()
        .filter(|(&(_, j), _)| j == 0)
        .map(|(&(i, _), _)| i as usize)
        .min()
        .ok_or(Error::LineAtInfinityComponent)
}

/// A real line of a tangent cone.
#[derive(Clone, Debug)]
pub enum ConeLine {
    /// `u = c w`.
    Slope(RealRoot),
    /// `w = 0`, the line at infinity.
    Infinity,
}

#[derive(Clone, Debug)]
pub struct TangentCone {
    pub degree: usize,
    /// Real lines with their multiplicities.
    pub lines: Vec<(ConeLine, usize)>,
    /// Degree of the part made of non-real lines.
    pub complex_degree: usize,
    pub form: QBiPoly,
}

/// Factor the lowest form of the germ over the reals.
pub fn tangent_cone(germ: &QBiPoly) -> Result<TangentCone> {
    let form = germ.lowest_form();
    let m = form.order().ok_or(Error::ZeroPolynomial)? as usize;
    // L(c, 1) = Σ l_j c^j with l_j the coefficient of u^j w^(m-j)
    let mut c = vec![Rational::zero(); m + 1];
    for (&(i, _), v) in form.terms() {
        c[i as usize] = v.clone();
    }
    let g = UniPoly::new(c);
    let mut lines = Vec::new();
    let mut real = 0;
    if !g.is_constant() {
        for mut r in isolate_real_roots(&g)? {
            r.exactify();
            real += r.multiplicity;
            let k = r.multiplicity;
            lines.push((ConeLine::Slope(r), k));
        }
    }
    let gdeg = g.degree().unwrap_or(0);
    if gdeg < m {
        lines.push((ConeLine::Infinity, m - gdeg));
    }
    Ok(TangentCone {
        degree: m,
        lines,
        complex_degree: gdeg - real,
        form,
    })
}

/// What is known about the branches tangent to one line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchSummary {
    pub real: bool,
    pub real_singular: bool,
    pub nonreal: bool,
    /// False when the expansion could not be completed exactly.
    pub exact: bool,
}

impl BranchSummary {
    fn merge(&mut self, o: BranchSummary) {
        self.real |= o.real;
        self.real_singular |= o.real_singular;
        self.nonreal |= o.nonreal;
        self.exact &= o.exact;
    }
}

const PUISEUX_DEPTH: usize = 24;

/// Branches of the germ tangent to a line of its cone with multiplicity `k`.
pub fn classify_line(germ: &QBiPoly, line: &ConeLine, k: usize) -> BranchSummary {
    if k == 1 {
        // a simple tangent carries one smooth branch, real with its line
        return BranchSummary {
            real: true,
            real_singular: false,
            nonreal: false,
            exact: true,
        };
    }
    // move the line to `s = 0` with parameter `t`
    let g = match line {
        ConeLine::Infinity => germ.transpose(),
        ConeLine::Slope(c) => match c.to_rational() {
            Some(c) => {
                let s = QBiPoly::x() + QBiPoly::term(c, 0, 1);
                germ.compose(&s, &QBiPoly::y())
            }
            None => return BranchSummary { exact: false, ..Default::default() },
        },
    };
    let vertex = g
        .terms()
        .filter(|(&(i, _), _)| i as usize == k)
        .map(|(&(_, j), _)| j)
        .min();
    match vertex {
        Some(_) => branches_below(&g, k, true, PUISEUX_DEPTH),
        None => BranchSummary { exact: false, ..Default::default() },
    }
}

/// Branches `s = ζ t^γ + …` of `g(s, t)` with `γ > 1` (first step) or
/// `γ > 0` (later steps), read off the Newton polygon left of the vertex
/// on the column `s^k`.
fn branches_below(g: &QBiPoly, k: usize, first: bool, depth: usize) -> BranchSummary {
    let mut out = BranchSummary {
        exact: true,
        ..Default::default()
    };
    if depth == 0 {
        out.exact = false;
        return out;
    }
    // lowest t-exponent in each column i <= k
    let mut column: Vec<Option<u32>> = vec![None; k + 1];
    for (&(i, j), _) in g.terms() {
        let i = i as usize;
        if i <= k {
            column[i] = Some(column[i].map_or(j, |v: u32| v.min(j)));
        }
    }
    let mut pts: Vec<(i64, i64)> = column
        .iter()
        .enumerate()
        .filter_map(|(i, j)| j.map(|j| (i as i64, j as i64)))
        .collect();
    if pts.is_empty() || pts.last().unwrap().0 != k as i64 {
        out.exact = false;
        return out;
    }
    if pts[0].0 > 0 {
        // `s = 0` is itself a smooth real branch
        out.real = true;
        if pts[0].0 > 1 {
            out.exact = false;
        }
    }
    let hull = lower_hull(&mut pts);
    for w in hull.windows(2) {
        let ((i1, j1), (i2, j2)) = (w[0], w[1]);
        let num = j1 - j2;
        let den = i2 - i1;
        if num <= 0 || (first && num <= den) {
            continue;
        }
        let gcd = num_integer::gcd(num, den);
        let (p, q) = (num / gcd, den / gcd);
        // Ψ(η) = Σ c_ij η^((i - i1)/q) over the edge
        let level = p * i1 + q * j1;
        let mut psi = vec![Rational::zero(); ((i2 - i1) / q + 1) as usize];
        for (&(i, j), c) in g.terms() {
            let (i, j) = (i as i64, j as i64);
            if i >= i1 && i <= i2 && p * i + q * j == level {
                psi[((i - i1) / q) as usize] = c.clone();
            }
        }
        let psi = UniPoly::new(psi);
        out.merge(edge_branches(g, &psi, p, q, level, depth));
    }
    out
}

fn edge_branches(g: &QBiPoly, psi: &QPoly, p: i64, q: i64, level: i64, depth: usize) -> BranchSummary {
    let mut out = BranchSummary {
        exact: true,
        ..Default::default()
    };
    let n = psi.degree().unwrap_or(0);
    let roots = match isolate_real_roots(psi) {
        Ok(r) => r,
        Err(_) => {
            out.exact = false;
            return out;
        }
    };
    let real_count: usize = roots.iter().map(|r| r.multiplicity).sum();
    if real_count < n {
        out.nonreal = true;
    }
    for mut r in roots {
        if r.multiplicity == 1 {
            out.real = true;
            out.real_singular |= q >= 2;
            continue;
        }
        r.exactify();
        match (q, r.to_rational()) {
            (1, Some(eta)) => {
                // s = t^p (η + s'')
                let tp = QBiPoly::term(Rational::one(), 0, p as u32);
                let sub = tp.clone() * (QBiPoly::constant(eta) + QBiPoly::x());
                let composed = g.compose(&sub, &QBiPoly::y());
                let shifted = QBiPoly::from_terms(
                    composed
                        .terms()
                        .map(|(&(i, j), c)| ((i, j - level as u32), c.clone())),
                );
                out.merge(branches_below(&shifted, r.multiplicity, false, depth - 1));
            }
            _ => {
                out.real = true;
                out.real_singular |= q >= 2;
                out.exact = false;
            }
        }
    }
    out
}

/// Lower convex hull of points sorted by first coordinate.
fn lower_hull(pts: &mut [(i64, i64)]) -> Vec<(i64, i64)> {
    pts.sort();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in pts.iter() {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (pt.1 - o.1) - (a.1 - o.1) * (pt.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::int;
    use crate::input_output::parse_poly;

    fn q(s: &str) -> QBiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn rotation_moves_point_to_first_axis() {
        let h = q("x");
        let g = rotate_to(&h, &0.into(), &1.into());
        // x = -Y when [0:1] goes to [1:0]
        assert_eq!(g, -q("y"));
    }

    #[test]
    fn cone_of_a_cusp_and_a_node() {
        let c = tangent_cone(&q("x^2 - y^3")).unwrap();
        assert_eq!(c.degree, 2);
        assert_eq!(c.lines.len(), 1);
        assert_eq!(c.lines[0].1, 2);
        let c = tangent_cone(&q("x^2 + y^2 + x^3")).unwrap();
        assert_eq!(c.complex_degree, 2);
        assert!(c.lines.is_empty());
        let c = tangent_cone(&q("x*y^2 + x^4")).unwrap();
        assert!(matches!(c.lines.last().unwrap(), (ConeLine::Infinity, 2)));
    }

    #[test]
    fn branch_types() {
        // u^2 = w^3: one singular real branch
        let s = classify_line(&q("x^2 - y^3"), &ConeLine::Slope(RealRoot::from_rational(&int(0))), 2);
        assert!(s.real && s.real_singular && !s.nonreal && s.exact);
        // u^2 = w^4: two smooth real branches
        let s = classify_line(&q("x^2 - y^4"), &ConeLine::Slope(RealRoot::from_rational(&int(0))), 2);
        assert!(s.real && !s.real_singular && !s.nonreal && s.exact);
        // u^2 + w^4 = 0: two non-real branches
        let s = classify_line(&q("x^2 + y^4"), &ConeLine::Slope(RealRoot::from_rational(&int(0))), 2);
        assert!(!s.real && s.nonreal && s.exact);
        // (u - w^2)^2 = w^5: tangent to a double root, then a cusp-like term
        let s = classify_line(&q("(x - y^2)^2 - y^5"), &ConeLine::Slope(RealRoot::from_rational(&int(0))), 2);
        assert!(s.real && s.real_singular && s.exact);
        // (u - w^2)^2 = w^6: two smooth branches sharing a second-order term
        let s = classify_line(&q("(x - y^2)^2 - y^6"), &ConeLine::Slope(RealRoot::from_rational(&int(0))), 2);
        assert!(s.real && !s.real_singular && s.exact);
    }

    #[test]
    fn branches_tangent_to_the_line_at_infinity() {
        let g = q("2*x*(y - x^2)*(y - 3*x^2)");
        let c = tangent_cone(&g).unwrap();
        assert_eq!(c.degree, 3);
        let (line, k) = c.lines.iter().find(|(l, _)| matches!(l, ConeLine::Infinity)).unwrap();
        assert_eq!(*k, 2);
        let s = classify_line(&g, line, *k);
        assert!(s.real && !s.real_singular && !s.nonreal && s.exact);
        assert_eq!(mult_at_linf(&g).unwrap(), 5);
    }
}
