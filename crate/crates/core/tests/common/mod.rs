//! Helpers shared by the integration tests.

#![allow(dead_code)]

use milnor_core::exact_algebra::Axis;
use milnor_core::milnor_arcs::w_polynomial;
use milnor_core::pipeline::Analysis;
use milnor_core::exact_algebra::scalar::{rational_from_f64, rational_to_f64};
use milnor_core::{FBiPoly, QBiPoly, Rational, Sign};

/// Second derivative of `|z - a|^2` along the fibre of `f` through an
/// anchor `z`, by central differences with Newton projection back onto the
/// fibre. The polynomial is first shifted exactly to `z`, so the floating
/// point work only ever sees small local coordinates.
pub struct FibreOracle {
    f: FBiPoly,
    fx: FBiPoly,
    fy: FBiPoly,
    fxx: FBiPoly,
    fxy: FBiPoly,
    fyy: FBiPoly,
    /// `z - a`.
    r: (f64, f64),
}

impl FibreOracle {
    pub fn at(f: &QBiPoly, a: &(Rational, Rational), z: (f64, f64)) -> Self {
        let z0 = (rational_from_f64(z.0), rational_from_f64(z.1));
        let shifted = f.compose(
            &(QBiPoly::x() + QBiPoly::constant(z0.0.clone())),
            &(QBiPoly::y() + QBiPoly::constant(z0.1.clone())),
        );
        // the fibre through z0 is {local = 0}
        let local = shifted.clone() - QBiPoly::constant(shifted.coeff(0, 0));
        let fx = local.differentiate(Axis::X);
        let fy = local.differentiate(Axis::Y);
        FibreOracle {
            f: local.to_f64(),
            fxx: fx.differentiate(Axis::X).to_f64(),
            fxy: fx.differentiate(Axis::Y).to_f64(),
            fyy: fy.differentiate(Axis::Y).to_f64(),
            fx: fx.to_f64(),
            fy: fy.to_f64(),
            r: (rational_to_f64(&(&z0.0 - &a.0)), rational_to_f64(&(&z0.1 - &a.1))),
        }
    }

    fn grad(&self, d: (f64, f64)) -> (f64, f64) {
        (self.fx.eval(&d.0, &d.1), self.fy.eval(&d.0, &d.1))
    }

    /// Curvature of the level curve through the anchor, used only to pick steps.
    fn curvature(&self) -> f64 {
        let (gx, gy) = self.grad((0.0, 0.0));
        let (xx, xy, yy) = (self.fxx.coeff(0, 0), self.fxy.coeff(0, 0), self.fyy.coeff(0, 0));
        (xx * gy * gy - 2.0 * xy * gx * gy + yy * gx * gx).abs() / gx.hypot(gy).powi(3)
    }

    /// Newton steps from `d` back onto the fibre; `None` if the point runs
    /// further than `limit` from the start.
    fn project(&self, start: (f64, f64), limit: f64) -> Option<(f64, f64)> {
        let mut d = start;
        for _ in 0..16 {
            let v = self.f.eval(&d.0, &d.1);
            let (gx, gy) = self.grad(d);
            let n2 = gx * gx + gy * gy;
            d = (d.0 - v * gx / n2, d.1 - v * gy / n2);
        }
        ((d.0 - start.0).hypot(d.1 - start.1) <= limit).then_some(d)
    }

    fn second_difference(&self, s: f64) -> Option<f64> {
        let (gx, gy) = self.grad((0.0, 0.0));
        let n = gx.hypot(gy);
        let t = (-gy / n, gx / n);
        let r = self.r;
        let drho = |d: (f64, f64)| 2.0 * (d.0 * r.0 + d.1 * r.1) + d.0 * d.0 + d.1 * d.1;
        let dp = self.project((s * t.0, s * t.1), s)?;
        let dm = self.project((-s * t.0, -s * t.1), s)?;
        Some((drho(dp) + drho(dm)) / (s * s))
    }

    /// Sign of the second derivative, or `None` when no step size gives a
    /// value that dominates its error estimate.
    pub fn certified_sign(&self) -> Option<Sign> {
        let r = self.r.0.hypot(self.r.1).max(1.0);
        let feature = r.min(1.0 / self.curvature().max(1e-300));
        for k in 1..10 {
            let s = feature * 2f64.powi(-2 * k);
            let (Some(d1), Some(d2)) = (self.second_difference(s), self.second_difference(s / 2.0))
            else {
                continue;
            };
            let rounding = 1e3 * f64::EPSILON * (r / s + 1.0) * 4.0;
            let err = (d1 - d2).abs() + rounding;
            if d2.abs() > 4.0 * err {
                return Some(if d2 > 0.0 { Sign::Positive } else { Sign::Negative });
            }
        }
        None
    }
}

/// For every arc anchor: (exact sign of W, oracle sign).
pub fn w_sign_pairs(a: &Analysis) -> Vec<(Sign, Option<Sign>)> {
    let w = w_polynomial(&a.poly, &a.center);
    a.arcs
        .iter()
        .map(|arc| {
            let exact = arc.anchor.sign_of(&w, 4096).unwrap();
            (exact, FibreOracle::at(&a.poly, &a.center, arc.anchor.approx()).certified_sign())
        })
        .collect()
}

pub const GOLDEN: [(&str, i64); 4] = [
    ("x^2*y + x", 0),
    ("y^5 + x^2*y^3 - y", 2),
    ("(x - y^2)*((x - y^2)*(y^2 + 1) - 1)", 1),
    ("x^2 + (x*y - 1)^2", -1),
];
