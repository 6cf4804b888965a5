//! The JSON report, schema `milnor-index/1`.

use serde::Serialize;

use crate::cluster_index::ClusterKind;
use crate::exact_algebra::RealRoot;
use crate::infinity_analysis::{describe_root, ConeLineReport, ProjectivePoint, Side};
use crate::milnor_arcs::{ArcIndex, Direction};
use crate::pipeline::{Analysis, StageError};
use crate::{Error, Rational};

pub const SCHEMA: &str = "milnor-index/1";

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<usize>,
    pub input: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorEntry>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub body: Option<ReportBody>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorEntry {
    pub stage: &'static str,
    pub message: String,
    /// Limits still possible when a limit could not be decided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportBody {
    pub polynomial: String,
    pub degree: usize,
    pub d_re: usize,
    pub center: [String; 2],
    pub radius: String,
    pub rejected_centers: Vec<RejectedCenter>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub swapped_axes: bool,
    #[serde(rename = "L_f")]
    pub l_f: Vec<String>,
    #[serde(rename = "L_f_tests")]
    pub l_f_tests: Vec<FibreEntry>,
    pub points_at_infinity: Vec<ProfileEntry>,
    pub arcs: Vec<ArcEntry>,
    pub clusters: Vec<ClusterEntry>,
    pub splitting: Vec<TallyEntry>,
    pub vanishing: Vec<TallyEntry>,
    pub vanishing_at_infinity: usize,
    pub atypical_at_infinity: Vec<String>,
    pub critical_values: Vec<String>,
    pub index_winding: i64,
    pub index_arcs: i64,
    pub index_clusters: i64,
    pub bounds: Vec<BoundEntry>,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_probe: Option<ProbeEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedCenter {
    pub center: [String; 2],
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FibreEntry {
    pub value: String,
    pub candidate: bool,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileEntry {
    pub point: String,
    pub d_p: usize,
    pub mult_linf: usize,
    pub in_l_f: bool,
    pub exact: bool,
    pub cone_degree: usize,
    pub cone_complex_degree: usize,
    pub cone_lines: Vec<ConeLineReport>,
    pub deg_r_red: usize,
    pub deg_s: usize,
    pub deg_k: usize,
    pub delta: usize,
    pub r_p: usize,
    pub s_p: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArcEntry {
    pub id: usize,
    /// Isolating interval of the circle parameter `t`, angle `2 atan t`.
    pub param_interval: [String; 2],
    pub angle: f64,
    pub index: ArcIndex,
    pub direction: Direction,
    pub limit: String,
    pub point: Option<String>,
    /// Angle of the ray toward `point` along which the arc leaves.
    pub point_angle: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterEntry {
    /// Arc ids, counterclockwise.
    pub members: Vec<usize>,
    pub lambda: String,
    pub direction: Direction,
    pub kind: ClusterKind,
    pub total_index: String,
    pub attached_point: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TallyEntry {
    pub point: Option<String>,
    pub lambda: String,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub value: String,
    pub satisfied: bool,
    pub hard: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeEntry {
    pub point: String,
    pub holds: bool,
}

fn q(r: &Rational) -> String {
    r.to_string()
}

fn pt(p: &ProjectivePoint) -> String {
    p.to_string()
}

fn root(r: &RealRoot) -> String {
    describe_root(r)
}

/// Angles rounded so the text does not depend on the last float bits.
fn round_angle(a: f64) -> f64 {
    (a * 1e9).round() / 1e9
}

fn tally_entries(v: &[(Option<ProjectivePoint>, RealRoot, usize)]) -> Vec<TallyEntry> {
    v.iter()
        .map(|(p, l, n)| TallyEntry {
            point: p.as_ref().map(pt),
            lambda: root(l),
            count: *n,
        })
        .collect()
}

impl ReportBody {
    pub fn from_analysis(a: &Analysis) -> Self {
        ReportBody {
            polynomial: a.poly.to_string(),
            degree: a.degree,
            d_re: a.d_re,
            center: [q(&a.center.0), q(&a.center.1)],
            radius: q(&a.radius),
            rejected_centers: a
                .rejected_centers
                .iter()
                .map(|(c, r)| RejectedCenter {
                    center: [q(&c.0), q(&c.1)],
                    reason: r.clone(),
                })
                .collect(),
            swapped_axes: a.swapped_axes,
            l_f: a.fibres.points.iter().map(pt).collect(),
            l_f_tests: a
                .fibres
                .tests
                .iter()
                .map(|t| FibreEntry {
                    value: t.value.clone(),
                    candidate: t.candidate,
                    points: t.points.iter().map(pt).collect(),
                })
                .collect(),
            points_at_infinity: a
                .profiles
                .iter()
                .map(|p| ProfileEntry {
                    point: pt(&p.point),
                    d_p: p.d_p,
                    mult_linf: p.mult_linf,
                    in_l_f: p.in_lf,
                    exact: p.exact,
                    cone_degree: p.cone_degree,
                    cone_complex_degree: p.cone_complex_degree,
                    cone_lines: p.cone_lines.clone(),
                    deg_r_red: p.deg_r_red,
                    deg_s: p.deg_s,
                    deg_k: p.deg_k,
                    delta: p.delta,
                    r_p: p.r_p,
                    s_p: p.s_p,
                })
                .collect(),
            arcs: a
                .arcs
                .iter()
                .map(|r| ArcEntry {
                    id: r.position + 1,
                    param_interval: [q(&r.param.lo), q(&r.param.hi)],
                    angle: round_angle(r.angle),
                    index: r.index,
                    direction: r.direction,
                    limit: r.limit.as_ref().map(|l| l.to_string()).unwrap_or_default(),
                    point: r.endpoint.as_ref().map(pt),
                    point_angle: r.endpoint.as_ref().zip(r.side).map(|(p, side)| {
                        let (x, y) = p.approx_direction();
                        let s = if side == Side::Negative { -1.0 } else { 1.0 };
                        round_angle((s * y).atan2(s * x))
                    }),
                })
                .collect(),
            clusters: a
                .clusters
                .iter()
                .map(|c| ClusterEntry {
                    members: c.members.iter().map(|i| i + 1).collect(),
                    lambda: c.lambda.to_string(),
                    direction: c.direction,
                    kind: c.kind,
                    total_index: q(&Rational::new(c.total_halves.into(), 2.into())),
                    attached_point: c.attached_point.as_ref().map(pt),
                })
                .collect(),
            splitting: tally_entries(&a.tally.splitting),
            vanishing: tally_entries(&a.tally.vanishing),
            vanishing_at_infinity: a.tally.vanishing_at_infinity,
            atypical_at_infinity: a.atypical.at_infinity.iter().map(root).collect(),
            critical_values: a.atypical.critical.iter().map(root).collect(),
            index_winding: a.index_winding,
            index_arcs: a.index_arcs,
            index_clusters: a.index_clusters,
            bounds: a
                .bounds
                .all()
                .iter()
                .map(|b| BoundEntry {
                    name: b.name,
                    value: q(&b.value),
                    satisfied: b.satisfied,
                    hard: b.hard,
                })
                .collect(),
            checks: a
                .checks
                .iter()
                .map(|c| CheckEntry {
                    name: c.name,
                    holds: c.holds,
                })
                .collect(),
            conjecture_probe: a.probe.as_ref().map(|p| ProbeEntry {
                point: pt(&p.point),
                holds: p.holds,
            }),
        }
    }
}

impl ReportDocument {
    pub fn new(id: Option<usize>, input: &str, result: &Result<Analysis, StageError>) -> Self {
        match result {
            Ok(a) => ReportDocument {
                schema: SCHEMA,
                id,
                input: input.to_string(),
                status: if a.consistent() { "ok" } else { "inconsistent" },
                error: None,
                body: Some(ReportBody::from_analysis(a)),
            },
            Err(e) => Self::failure(id, input, e),
        }
    }

    pub fn failure(id: Option<usize>, input: &str, e: &StageError) -> Self {
        let candidates = match &e.error {
            Error::LimitUndecided { candidates } => Some(candidates.clone()),
            _ => None,
        };
        ReportDocument {
            schema: SCHEMA,
            id,
            input: input.to_string(),
            status: "error",
            error: Some(ErrorEntry {
                stage: e.stage,
                message: e.error.to_string(),
                candidates,
            }),
            body: None,
        }
    }
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn emit_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

/// Several documents as one JSON array.
pub fn emit_json_batch(docs: &[ReportDocument]) -> String {
    let mut s = serde_json::to_string_pretty(docs).expect("report serializes");
    s.push('\n');
    s
}
