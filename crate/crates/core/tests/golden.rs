use milnor_core::cluster_index::ClusterKind;
use milnor_core::infinity_analysis::{InfinityProfile, LimitValue};
use milnor_core::input_output::{emit_json, parse_poly, ReportDocument};
use milnor_core::pipeline::{analyze, Analysis, AnalysisConfig};
use milnor_core::Rational;

fn run(src: &str) -> Analysis {
    analyze(&parse_poly(src).unwrap(), &AnalysisConfig::default()).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn profile<'a>(a: &'a Analysis, p: &str) -> &'a InfinityProfile {
    a.profiles.iter().find(|x| x.point.to_string() == p).unwrap()
}

fn lf(a: &Analysis) -> Vec<String> {
    a.fibres.points.iter().map(|p| p.to_string()).collect()
}

/// (size, kind) of every cluster, sorted.
fn shape(a: &Analysis) -> Vec<(usize, ClusterKind)> {
    let mut v: Vec<_> = a.clusters.iter().map(|c| (c.members.len(), c.kind)).collect();
    v.sort_by_key(|(n, k)| (*n, format!("{k:?}")));
    v
}

fn assert_three_way(a: &Analysis, expected: i64) {
    assert_eq!(a.index_winding, expected);
    assert_eq!(a.index_arcs, expected);
    assert_eq!(a.index_clusters, expected);
    assert!(a.consistent(), "failed {:?} violated {:?}", a.failed_checks(), a.bounds.violations());
}

#[test]
fn cubic_x2y_plus_x() {
    let a = run("x^2*y + x");
    assert_three_way(&a, 0);
    assert_eq!(a.arcs.len(), 6);
    assert_eq!(
        shape(&a),
        vec![
            (1, ClusterKind::Splitting),
            (1, ClusterKind::Splitting),
            (1, ClusterKind::VanishingAtInfinity),
            (1, ClusterKind::VanishingAtInfinity),
            (1, ClusterKind::VanishingAtInfinity),
            (1, ClusterKind::VanishingAtInfinity),
        ]
    );
    assert_eq!(a.tally.sp_total(), 2);
    assert_eq!(a.tally.vanishing_at_infinity, 4);
    let p = profile(&a, "[0:1:0]");
    assert_eq!(p.d_p, 2);
    assert_eq!(a.atypical.at_infinity.len(), 1);
    assert_eq!(a.atypical.at_infinity[0].to_rational(), Some(q(0)));
    // the bound is attained
    assert_eq!(a.bounds.refined.value, q(0));
}

#[test]
fn cubic_report_has_equal_indices() {
    let a = run("x^2*y + x");
    let doc = ReportDocument::new(None, "x^2*y + x", &Ok(a));
    let text = emit_json(&doc).replace([' ', '\n'], "");
    assert!(text.contains(r#""index_winding":0,"index_arcs":0,"index_clusters":0"#));
    assert!(text.contains(r#""schema":"milnor-index/1""#));
}

#[test]
fn quintic_with_four_splitting_arcs() {
    let a = run("y^5 + x^2*y^3 - y");
    assert_three_way(&a, 2);
    assert_eq!(a.arcs.len(), 6);
    assert_eq!(lf(&a), vec!["[1:0:0]"]);
    assert_eq!(a.d_re, 3);
    let p = profile(&a, "[1:0:0]");
    assert_eq!(p.d_p, 3);
    assert_eq!(p.cone_lines.len(), 1);
    assert_eq!(p.cone_lines[0].multiplicity, 2);
    assert_eq!((p.deg_r_red, p.deg_s, p.deg_k), (1, 0, 0));
    assert_eq!(p.mult_linf, 2);
    let zero = a.arcs.iter().filter(|r| r.limit == Some(LimitValue::Finite(milnor_core::exact_algebra::RealRoot::from_rational(&q(0)))));
    assert_eq!(zero.count(), 4);
    assert_eq!(a.tally.sp_total(), 4);
    assert_eq!(a.tally.vanishing_at_infinity, 2);
    assert!(a.clusters.iter().all(|c| c.members.len() == 1));
    assert_eq!(a.bounds.linear.value, q(2));
    assert_eq!(a.bounds.refined.value, q(2));
    assert_eq!(a.bounds.refined2.value, q(2));
    assert_eq!(a.bounds.delta.value, q(2));
}

#[test]
fn sextic_with_line_at_infinity_in_the_cone() {
    let a = run("(x - y^2)*((x - y^2)*(y^2 + 1) - 1)");
    assert_three_way(&a, 1);
    assert_eq!(a.arcs.len(), 8);
    assert_eq!(
        shape(&a),
        vec![
            (1, ClusterKind::Splitting),
            (1, ClusterKind::Splitting),
            (3, ClusterKind::VanishingAtInfinity),
            (3, ClusterKind::VanishingAtInfinity),
        ]
    );
    assert_eq!(lf(&a), vec!["[1:0:0]"]);
    assert_eq!((a.degree, a.d_re), (6, 6));
    let p = profile(&a, "[1:0:0]");
    assert_eq!(p.d_p, 6);
    assert_eq!(p.mult_linf, 5);
    assert_eq!((p.deg_r_red, p.deg_s, p.deg_k), (2, 2, 0));
    assert_eq!((p.r_p, p.s_p), (5, 1));
    assert!(p.cone_lines.iter().any(|l| l.line == "w=0"));
    assert_eq!(a.atypical.critical.len(), 1);
    assert_eq!(a.atypical.critical[0].to_rational(), Some(Rational::new((-1).into(), 4.into())));
    assert_eq!(a.bounds.refined.value, q(3));
    assert_eq!(a.bounds.signgap.value, q(2));
    assert!(a.bounds.durfee.satisfied);
}

#[test]
fn quartic_with_vanishing_at_zero() {
    let a = run("x^2 + (x*y - 1)^2");
    assert_three_way(&a, -1);
    assert_eq!(a.arcs.len(), 8);
    assert_eq!(
        shape(&a),
        vec![
            (1, ClusterKind::Vanishing),
            (1, ClusterKind::Vanishing),
            (3, ClusterKind::VanishingAtInfinity),
            (3, ClusterKind::VanishingAtInfinity),
        ]
    );
    let qpt = milnor_core::infinity_analysis::ProjectivePoint::vertical();
    let zero = milnor_core::exact_algebra::RealRoot::from_rational(&q(0));
    assert_eq!(a.tally.va(&qpt, &zero), 2);
    assert_eq!(a.tally.vanishing_at_infinity, 2);
    assert_eq!(a.d_re, 4);
    for (pt, line) in [("[1:0:0]", "u=0*w"), ("[0:1:0]", "u=0*w")] {
        let p = profile(&a, pt);
        assert_eq!(p.d_p, 2);
        assert_eq!((p.deg_r_red, p.deg_s, p.deg_k), (1, 0, 0));
        assert_eq!(p.cone_lines.len(), 1);
        assert_eq!(p.cone_lines[0].line, line);
        assert_eq!(p.cone_lines[0].multiplicity, 1);
    }
    // f >= x^2 keeps every fibre away from [1:0:0]
    assert_eq!(lf(&a), vec!["[0:1:0]"]);
}

#[test]
fn compact_fibres() {
    let a = run("x^2 + y^2");
    assert_three_way(&a, 1);
    assert!(a.fibres.points.is_empty());
    assert!(a.atypical.at_infinity.is_empty());
    assert_eq!(a.arcs.len(), 2);
    assert!(a.bounds.l1_case.satisfied);
}

#[test]
fn lines_through_a_common_direction() {
    // x y^2 + x = x (y^2 + 1): no critical points, M has the line x = 0
    let a = run("x*y^2 + x");
    assert_three_way(&a, a.index_winding);
    assert_eq!(lf(&a), vec!["[0:1:0]"]);
    assert!(a.atypical.critical.is_empty());
}

#[test]
fn non_real_cone_lines() {
    let a = run("-5/3*y^3 + y^2 - 2*y + 4*x^2 + x");
    assert_three_way(&a, a.index_winding);
    assert!(a.profiles.iter().any(|p| p.deg_k > 0));
}

#[test]
fn json_is_deterministic() {
    let src = "y^5 + x^2*y^3 - y";
    let f = parse_poly(src).unwrap();
    let a = emit_json(&ReportDocument::new(None, src, &analyze(&f, &AnalysisConfig::default())));
    let b = emit_json(&ReportDocument::new(None, src, &analyze(&f, &AnalysisConfig::default())));
    assert_eq!(a, b);
}
