//! Schematic disk picture of the Milnor arcs.
//!
//! Anchors sit at their true angles on the dashed circle; the curve from an
//! anchor to the outer circle is decoration that bends toward the arc's
//! point at infinity.

use std::f64::consts::PI;
use std::fmt::Write;

use super::report::ReportBody;
use crate::cluster_index::ClusterKind;
use crate::milnor_arcs::ArcIndex;

const SIZE: f64 = 520.0;
const C: f64 = SIZE / 2.0;
const OUTER: f64 = 210.0;
const INNER: f64 = 120.0;

fn polar(r: f64, a: f64) -> (f64, f64) {
    (C + r * a.cos(), C - r * a.sin())
}

/// Wrap `b` to within `π` of `a`.
fn near(a: f64, b: f64) -> f64 {
    let mut d = b - a;
    while d > PI {
        d -= 2.0 * PI;
    }
    while d < -PI {
        d += 2.0 * PI;
    }
    a + d
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn tag(kind: ClusterKind) -> Option<&'static str> {
    match kind {
        ClusterKind::Splitting => Some("Sp"),
        ClusterKind::Vanishing => Some("Va"),
        ClusterKind::VanishingAtInfinity => Some("Va\u{221e}"),
        ClusterKind::Even => None,
    }
}

pub fn emit_svg(body: &ReportBody) -> String {
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="serif" font-size="11">"#
    );
    let _ = writeln!(s, "<title>{}</title>", esc(&body.polynomial));
    let _ = writeln!(s, r#"<circle cx="{C}" cy="{C}" r="{OUTER}" fill="none" stroke="black" stroke-width="1.5"/>"#);
    let _ = writeln!(
        s,
        r#"<circle cx="{C}" cy="{C}" r="{INNER}" fill="none" stroke="gray" stroke-dasharray="5,4"/>"#
    );
    for arc in &body.arcs {
        let a = arc.angle;
        let target = near(a, arc.point_angle.unwrap_or(a));
        let (x0, y0) = polar(INNER, a);
        let (cx, cy) = polar((INNER + OUTER) / 2.0, a);
        let (x1, y1) = polar(OUTER, target);
        let colour = match arc.index {
            ArcIndex::PlusHalf => "#1f5fbf",
            ArcIndex::MinusHalf => "#bf3f1f",
        };
        let _ = writeln!(
            s,
            r#"<path d="M {x0:.2} {y0:.2} Q {cx:.2} {cy:.2} {x1:.2} {y1:.2}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#
        );
        let _ = writeln!(s, r#"<circle cx="{x0:.2}" cy="{y0:.2}" r="2.5" fill="black"/>"#);
        let (lx, ly) = polar(INNER - 22.0, a);
        let index = match arc.index {
            ArcIndex::PlusHalf => "+\u{bd}",
            ArcIndex::MinusHalf => "\u{2212}\u{bd}",
        };
        let _ = writeln!(
            s,
            r#"<text x="{lx:.2}" y="{ly:.2}" text-anchor="middle">{}: {}</text>"#,
            index,
            esc(&arc.limit)
        );
        if let Some(p) = &arc.point {
            let (px, py) = polar(OUTER + 14.0, target);
            let _ = writeln!(
                s,
                r#"<text x="{px:.2}" y="{py:.2}" text-anchor="middle" fill="gray">{}</text>"#,
                esc(p)
            );
        }
    }
    for cl in &body.clusters {
        let angles: Vec<f64> = cl
            .members
            .iter()
            .filter_map(|id| body.arcs.iter().find(|a| a.id == *id))
            .map(|a| a.angle)
            .collect();
        if angles.is_empty() {
            continue;
        }
        let first = angles[0];
        let last = angles[angles.len() - 1];
        let mut span = last - first;
        if span < 0.0 {
            span += 2.0 * PI;
        }
        if angles.len() > 1 {
            let (x0, y0) = polar(INNER, first);
            let (x1, y1) = polar(INNER, first + span);
            let large = if span > PI { 1 } else { 0 };
            let _ = writeln!(
                s,
                r#"<path d="M {x0:.2} {y0:.2} A {INNER} {INNER} 0 {large} 0 {x1:.2} {y1:.2}" fill="none" stroke="black" stroke-width="4" stroke-opacity="0.6"/>"#
            );
        }
        if let Some(t) = tag(cl.kind) {
            let (tx, ty) = polar(INNER - 44.0, first + span / 2.0);
            let _ = writeln!(
                s,
                r#"<text x="{tx:.2}" y="{ty:.2}" text-anchor="middle" font-weight="bold">{t}</text>"#
            );
        }
    }
    let _ = writeln!(
        s,
        r#"<text x="10" y="{}" >index {}</text>"#,
        SIZE - 10.0,
        body.index_winding
    );
    s.push_str("</svg>\n");
    s
}
