//! Full analysis of one polynomial, with center retry, and the fuzz driver.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bound_suite::{evaluate_bounds, BoundReport};
use crate::cluster_index::{
    atypical_values, build_clusters, index_via_arcs, index_via_clusters, tally, AtypicalValues, Cluster, Tally,
};
use crate::exact_algebra::{Axis, DEFAULT_SIGN_BUDGET};
use crate::gauss_winding::{winding_index, Circle};
use crate::infinity_analysis::{
    analysis_radius, annotate_arcs, fibres_at_infinity, limit_candidates, milnor_sectors, points_at_infinity,
    profile_at, FibresAtInfinity, InfinityProfile, LimitCandidates, ProjectivePoint,
};
use crate::milnor_arcs::{bump_radius, center_sequence, enumerate_arcs, is_generic_center, ArcRecord, CenterCertificate};
use crate::{Error, QBiPoly, Rational};

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub center: Option<(Rational, Rational)>,
    pub radius: Option<Rational>,
    /// Refinement rounds allowed for each sign or limit decision.
    pub budget: usize,
    /// Budget for placing `f` at an arc anchor among the limit candidates;
    /// `None` uses `budget`.
    pub limit_budget: Option<usize>,
    /// Fail instead of reporting branch data that is not exact.
    pub strict: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            center: None,
            radius: None,
            budget: DEFAULT_SIGN_BUDGET,
            limit_budget: None,
            strict: false,
        }
    }
}

/// An error together with the step that raised it.
#[derive(Clone, Debug, PartialEq)]
pub struct StageError {
    pub stage: &'static str,
    pub error: Error,
}

impl fmt::Display for StageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.error)
    }
}

impl std::error::Error for StageError {}

fn at(stage: &'static str) -> impl Fn(Error) -> StageError {
    move |error| StageError { stage, error }
}

/// A named property that every correct run satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
}

/// The open statement about `d_p = d_Re - 1 > 0`, evaluated on one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureProbe {
    pub point: ProjectivePoint,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub poly: QBiPoly,
    pub degree: usize,
    pub d_re: usize,
    pub center: (Rational, Rational),
    /// Centers tried before the accepted one, with the reason each failed.
    pub rejected_centers: Vec<((Rational, Rational), String)>,
    /// `f` does not involve `y` and was analyzed as `f(y, x)`; the index is
    /// unchanged by the swap, all geometry refers to the swapped plane.
    pub swapped_axes: bool,
    pub radius: Rational,
    pub candidates: LimitCandidates,
    pub arcs: Vec<ArcRecord>,
    pub clusters: Vec<Cluster>,
    pub tally: Tally,
    pub index_winding: i64,
    pub index_arcs: i64,
    pub index_clusters: i64,
    pub fibres: FibresAtInfinity,
    pub profiles: Vec<InfinityProfile>,
    pub atypical: AtypicalValues,
    pub bounds: BoundReport,
    pub checks: Vec<Check>,
    pub probe: Option<ConjectureProbe>,
}

impl Analysis {
    pub fn index(&self) -> i64 {
        self.index_winding
    }

    pub fn three_way_equal(&self) -> bool {
        self.index_winding == self.index_arcs && self.index_arcs == self.index_clusters
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name).collect()
    }

    /// No failed check and no hard bound broken.
    pub fn consistent(&self) -> bool {
        self.failed_checks().is_empty() && self.bounds.violations().is_empty()
    }
}

fn retryable(e: &Error) -> bool {
    matches!(
        e,
        Error::CenterRejected(_) | Error::DegenerateCenter | Error::IndexZeroArc | Error::NonTransverseCircle
    )
}

/// Analyze `f`, trying centers in the fixed order unless one is given.
pub fn analyze(f: &QBiPoly, cfg: &AnalysisConfig) -> Result<Analysis, StageError> {
    if f.is_constant() {
        return Err(StageError {
            stage: "input",
            error: Error::ConstantPolynomial,
        });
    }
    if !f.has_isolated_singularities() {
        return Err(StageError {
            stage: "input",
            error: Error::NonIsolatedSingularities,
        });
    }
    if f.degree_in(Axis::Y).unwrap_or(0) == 0 {
        // every Milnor set then contains the horizontal line through the center
        let cfg = AnalysisConfig {
            center: cfg.center.as_ref().map(|(a, b)| (b.clone(), a.clone())),
            ..cfg.clone()
        };
        let mut res = search(&f.transpose(), &cfg)?;
        res.swapped_axes = true;
        return Ok(res);
    }
    search(f, cfg)
}

fn search(f: &QBiPoly, cfg: &AnalysisConfig) -> Result<Analysis, StageError> {
    if let Some(a) = &cfg.center {
        return attempt(f, a, cfg);
    }
    let mut rejected = Vec::new();
    let mut last = None;
    for a in center_sequence() {
        match attempt(f, &a, cfg) {
            Ok(mut res) => {
                res.rejected_centers = rejected;
                return Ok(res);
            }
            Err(e) if retryable(&e.error) => {
                rejected.push((a, e.to_string()));
                last = Some(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or(StageError {
        stage: "certificate",
        error: Error::DegenerateCenter,
    }))
}

/// Per-arc data compared when the circle is enlarged.
fn arc_signature(arcs: &[ArcRecord]) -> Vec<String> {
    arcs.iter()
        .map(|a| {
            format!(
                "{}|{:?}|{}|{}",
                a.index.halves(),
                a.direction,
                a.limit.as_ref().map(|l| l.to_string()).unwrap_or_default(),
                a.endpoint.as_ref().map(|p| p.to_string()).unwrap_or_default()
            )
        })
        .collect()
}

fn same_up_to_rotation(a: &[String], b: &[String]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    a.is_empty() || (0..a.len()).any(|k| (0..a.len()).all(|i| a[i] == b[(i + k) % a.len()]))
}

fn arcs_at(
    f: &QBiPoly,
    cert: &CenterCertificate,
    cands: &LimitCandidates,
    r: &Rational,
    cfg: &AnalysisConfig,
) -> Result<Vec<ArcRecord>, StageError> {
    let sectors = milnor_sectors(cert).map_err(at("arcs"))?;
    let mut arcs = enumerate_arcs(cert, r, cfg.budget).map_err(at("arcs"))?;
    let limit_budget = cfg.limit_budget.unwrap_or(cfg.budget);
    annotate_arcs(f, cands, &sectors, &mut arcs, cfg.budget, limit_budget).map_err(at("limits"))?;
    Ok(arcs)
}

fn attempt(f: &QBiPoly, a: &(Rational, Rational), cfg: &AnalysisConfig) -> Result<Analysis, StageError> {
    let budget = cfg.budget;
    let cert = is_generic_center(f, a).map_err(at("certificate"))?;
    let cands = limit_candidates(f, &cert).map_err(at("limits"))?;
    let sectors = milnor_sectors(&cert).map_err(at("arcs"))?;
    let certified = analysis_radius(&cert, &cands, &sectors).map_err(at("radius"))?;
    let radius = match &cfg.radius {
        Some(r) if *r < certified => {
            return Err(StageError {
                stage: "radius",
                error: Error::Other(format!("radius {} is below the certified radius {}", r, certified)),
            })
        }
        Some(r) => r.clone(),
        None => certified,
    };
    let arcs = arcs_at(f, &cert, &cands, &radius, cfg)?;
    let doubled = bump_radius(&cert, &radius * Rational::from_integer(2.into()));
    let stable = same_up_to_rotation(
        &arc_signature(&arcs),
        &arc_signature(&arcs_at(f, &cert, &cands, &doubled, cfg)?),
    );

    let index_winding = winding_index(f, &Circle::new(a.clone(), radius.clone())).map_err(at("winding"))?;
    let index_arcs = index_via_arcs(&arcs).map_err(at("arcs"))?;
    let clusters = build_clusters(&arcs).map_err(at("clusters"))?;
    let tl = tally(&clusters);
    let index_clusters = index_via_clusters(&tl).map_err(at("clusters"))?;

    let fibres = fibres_at_infinity(f, &cert, &cands, budget).map_err(at("fibres"))?;
    let (points, d_re) = points_at_infinity(f).map_err(at("profiles"))?;
    let mut profiles = Vec::new();
    for (p, d_p) in &points {
        let in_lf = fibres.points.contains(p);
        let prof = profile_at(&cert.h, p, *d_p, &arcs, in_lf).map_err(at("profiles"))?;
        if cfg.strict && !prof.exact {
            return Err(StageError {
                stage: "profiles",
                error: Error::Other(format!("branch data at {} is not exact", p)),
            });
        }
        profiles.push(prof);
    }
    let atypical = atypical_values(f, &clusters).map_err(at("atypical"))?;
    let degree = f.degree().unwrap_or(0) as usize;
    let lf = fibres.points.len();
    let bounds = evaluate_bounds(index_winding, &profiles, lf, degree, d_re);

    let endpoints_ok = arcs
        .iter()
        .filter(|arc| arc.limit.as_ref().is_some_and(|l| l.is_finite()))
        .all(|arc| arc.endpoint.as_ref().is_some_and(|e| points.iter().any(|(p, _)| p == e)));
    let checks = vec![
        Check {
            name: "three_way_equality",
            holds: index_winding == index_arcs && index_arcs == index_clusters,
        },
        Check {
            name: "mult_identity",
            holds: profiles.iter().all(|p| p.mult_identity_holds()),
        },
        Check {
            name: "finite_limits_end_on_top_form",
            holds: endpoints_ok,
        },
        Check {
            name: "odd_clusters_attached",
            holds: clusters
                .iter()
                .filter(|c| c.is_odd() && c.lambda.is_finite())
                .all(|c| c.attached_point.is_some()),
        },
        Check {
            name: "vanishing_at_infinity_covers_lf",
            holds: tl.vanishing_at_infinity >= 2 * lf,
        },
        Check {
            name: "empty_lf_gives_one",
            holds: lf > 0 || index_winding == 1,
        },
        Check {
            name: "radius_stability",
            holds: stable,
        },
        Check {
            name: "degree_bound",
            holds: index_winding.unsigned_abs() as usize <= degree.saturating_sub(1),
        },
    ];
    let probe = points
        .iter()
        .find(|(_, d_p)| *d_p > 0 && *d_p + 1 == d_re)
        .map(|(p, _)| ConjectureProbe {
            point: p.clone(),
            holds: lf > 0 && (!fibres.points.contains(p) || lf == 2),
        });

    Ok(Analysis {
        poly: f.clone(),
        degree,
        d_re,
        center: a.clone(),
        rejected_centers: Vec::new(),
        swapped_axes: false,
        radius,
        candidates: cands,
        arcs,
        clusters,
        tally: tl,
        index_winding,
        index_arcs,
        index_clusters,
        fibres,
        profiles,
        atypical,
        bounds,
        checks,
        probe,
    })
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub count: usize,
    pub max_degree: u32,
    pub coeff_bound: i64,
    pub seed: u64,
}

/// One generated polynomial and how many draws were discarded before it.
#[derive(Clone, Debug)]
pub struct FuzzInstance {
    pub id: usize,
    pub poly: QBiPoly,
    pub rejected_draws: usize,
}

fn draw(rng: &mut ChaCha8Rng, max_degree: u32, bound: i64) -> QBiPoly {
    let d = rng.gen_range(2..=max_degree.max(2));
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            if rng.gen_bool(0.35) {
                terms.push(((i, j), rng.gen_range(-bound..=bound)));
            }
        }
    }
    let k = rng.gen_range(0..=d);
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-bound..=bound);
    }
    terms.push(((k, d - k), c));
    QBiPoly::from_terms(
        terms
            .into_iter()
            .map(|(e, c)| (e, Rational::from_integer(c.into()))),
    )
}

/// Polynomials with isolated singularities, deterministic in the seed.
pub fn fuzz_instances(cfg: &FuzzConfig) -> Vec<FuzzInstance> {
    let bound = cfg.coeff_bound.max(1);
    (0..cfg.count)
        .map(|id| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9).wrapping_add(id as u64));
            let mut rejected_draws = 0;
            loop {
                let f = draw(&mut rng, cfg.max_degree, bound);
                if f.degree().unwrap_or(0) >= 1 && !f.is_zero() && f.has_isolated_singularities() {
                    return FuzzInstance {
                        id,
                        poly: f,
                        rejected_draws,
                    };
                }
                rejected_draws += 1;
            }
        })
        .collect()
}

/// Analyze many polynomials concurrently; results keep the input order.
pub fn analyze_batch(polys: &[QBiPoly], cfg: &AnalysisConfig) -> Vec<Result<Analysis, StageError>> {
    polys.par_iter().map(|f| analyze(f, cfg)).collect()
}
