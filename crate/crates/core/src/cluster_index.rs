//! Clusters of consecutive Milnor arcs and the index formulas built on them.

use std::cmp::Ordering;

use crate::exact_algebra::RealRoot;
use crate::infinity_analysis::{critical_values, LimitValue, ProjectivePoint};
use crate::milnor_arcs::{ArcRecord, Direction};
use crate::{Error, QBiPoly, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterKind {
    Splitting,
    Vanishing,
    VanishingAtInfinity,
    Even,
}

#[derive(Clone, Debug)]
pub struct Cluster {
    /// Arc positions in counterclockwise order, possibly wrapping past 0.
    pub members: Vec<usize>,
    pub lambda: LimitValue,
    pub direction: Direction,
    /// Sum of member indices in halves.
    pub total_halves: i64,
    pub kind: ClusterKind,
    /// Common endpoint of the members, if they share one.
    pub attached_point: Option<ProjectivePoint>,
}

impl Cluster {
    pub fn is_odd(&self) -> bool {
        self.members.len() % 2 == 1
    }
}

fn same_key(a: &ArcRecord, b: &ArcRecord) -> bool {
    a.direction == b.direction && a.limit == b.limit
}

/// Maximal cyclic runs of arcs sharing limit and direction.
pub fn build_clusters(arcs: &[ArcRecord]) -> Result<Vec<Cluster>> {
    let n = arcs.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if arcs.iter().any(|a| a.limit.is_none()) {
        return Err(Error::Other("arc without a limit".into()));
    }
    let start = (0..n).find(|&i| !same_key(&arcs[i], &arcs[(i + n - 1) % n])).unwrap_or(0);
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for k in 0..n {
        let i = (start + k) % n;
        match runs.last_mut() {
            Some(run) if same_key(&arcs[*run.last().unwrap()], &arcs[i]) => run.push(i),
            _ => runs.push(vec![i]),
        }
    }
    runs.into_iter().map(|m| classify(arcs, m)).collect()
}

/// Total index, kind and shared endpoint of one run.
fn classify(arcs: &[ArcRecord], members: Vec<usize>) -> Result<Cluster> {
    let first = &arcs[members[0]];
    let lambda = first.limit.clone().unwrap();
    let total_halves: i64 = members.iter().map(|&i| arcs[i].index.halves()).sum();
    let odd = members.len() % 2 == 1;
    let kind = match (odd, &lambda, total_halves) {
        (false, _, 0) => ClusterKind::Even,
        (true, LimitValue::Finite(_), 1) => ClusterKind::Splitting,
        (true, LimitValue::Finite(_), -1) => ClusterKind::Vanishing,
        (true, LimitValue::PlusInfinity | LimitValue::MinusInfinity, -1) => ClusterKind::VanishingAtInfinity,
        _ => return Err(Error::ClusterIndexContradiction),
    };
    let attached_point = first.endpoint.clone().filter(|p| {
        members
            .iter()
            .all(|&i| arcs[i].endpoint.as_ref() == Some(p))
    });
    Ok(Cluster {
        direction: first.direction,
        members,
        lambda,
        total_halves,
        kind,
        attached_point,
    })
}

/// Counts of splitting and vanishing clusters.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    /// `Sp(p, λ)` for finite `λ`.
    pub splitting: Vec<(Option<ProjectivePoint>, RealRoot, usize)>,
    /// `Va(p, λ)` for finite `λ`.
    pub vanishing: Vec<(Option<ProjectivePoint>, RealRoot, usize)>,
    /// `Va(±∞)`.
    pub vanishing_at_infinity: usize,
}

fn bump(v: &mut Vec<(Option<ProjectivePoint>, RealRoot, usize)>, p: &Option<ProjectivePoint>, l: &RealRoot) {
    match v
        .iter_mut()
        .find(|(q, m, _)| q == p && m.cmp_root(l) == Ordering::Equal)
    {
        Some(e) => e.2 += 1,
        None => v.push((p.clone(), l.clone(), 1)),
    }
}

pub fn tally(clusters: &[Cluster]) -> Tally {
    let mut t = Tally::default();
    for c in clusters {
        match (&c.kind, &c.lambda) {
            (ClusterKind::Splitting, LimitValue::Finite(l)) => bump(&mut t.splitting, &c.attached_point, l),
            (ClusterKind::Vanishing, LimitValue::Finite(l)) => bump(&mut t.vanishing, &c.attached_point, l),
            (ClusterKind::VanishingAtInfinity, _) => t.vanishing_at_infinity += 1,
            _ => {}
        }
    }
    t
}

impl Tally {
    pub fn sp_total(&self) -> usize {
        self.splitting.iter().map(|e| e.2).sum()
    }

    pub fn va_total(&self) -> usize {
        self.vanishing.iter().map(|e| e.2).sum()
    }

    pub fn sp(&self, p: &ProjectivePoint, l: &RealRoot) -> usize {
        lookup(&self.splitting, p, l)
    }

    pub fn va(&self, p: &ProjectivePoint, l: &RealRoot) -> usize {
        lookup(&self.vanishing, p, l)
    }
}

fn lookup(v: &[(Option<ProjectivePoint>, RealRoot, usize)], p: &ProjectivePoint, l: &RealRoot) -> usize {
    v.iter()
        .filter(|(q, m, _)| q.as_ref() == Some(p) && m.cmp_root(l) == Ordering::Equal)
        .map(|e| e.2)
        .sum()
}

/// `1 + ½ ΣSp − ½ ΣVa − ½ Va(±∞)`.
pub fn index_via_clusters(t: &Tally) -> Result<i64> {
    let halves = t.sp_total() as i64 - t.va_total() as i64 - t.vanishing_at_infinity as i64;
    if halves % 2 != 0 {
        return Err(Error::ParityViolation);
    }
    Ok(1 + halves / 2)
}

/// `1 + Σ i(γ)`.
pub fn index_via_arcs(arcs: &[ArcRecord]) -> Result<i64> {
    crate::milnor_arcs::index_from_arcs(arcs)
}

/// Atypical values at infinity and critical values, each ascending.
#[derive(Clone, Debug)]
pub struct AtypicalValues {
    pub at_infinity: Vec<RealRoot>,
    pub critical: Vec<RealRoot>,
}

pub fn atypical_values(f: &QBiPoly, clusters: &[Cluster]) -> Result<AtypicalValues> {
    let mut at_infinity: Vec<RealRoot> = Vec::new();
    for c in clusters.iter().filter(|c| c.is_odd()) {
        if let LimitValue::Finite(l) = &c.lambda {
            if !at_infinity.iter().any(|m| m.cmp_root(l) == Ordering::Equal) {
                at_infinity.push(l.clone());
            }
        }
    }
    at_infinity.sort_by(|a, b| a.cmp_root(b));
    Ok(AtypicalValues {
        at_infinity,
        critical: critical_values(f)?,
    })
}
