use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use milnor_core::exact_algebra::DEFAULT_SIGN_BUDGET;
use milnor_core::input_output::{
    emit_json, emit_json_batch, emit_svg, parse_poly, parse_rational, parse_rational_pair, ReportDocument,
};
use milnor_core::pipeline::{analyze, fuzz_instances, Analysis, AnalysisConfig, FuzzConfig, StageError};
use milnor_core::QBiPoly;

/// Index at infinity of the gradient of a real polynomial in x and y.
#[derive(Parser, Debug)]
#[command(name = "milnor-index", version)]
struct Cli {
    /// Polynomial expression, e.g. "x^2*y + x".
    #[arg(long, conflicts_with_all = ["file", "fuzz"])]
    poly: Option<String>,
    /// File with one expression per line.
    #[arg(long, conflicts_with = "fuzz")]
    file: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write the disk figure (single polynomial only).
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Center as "A1,A2".
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    #[arg(long)]
    radius: Option<String>,
    /// Number of random polynomials to analyze.
    #[arg(long)]
    fuzz: Option<usize>,
    #[arg(long, default_value_t = 5)]
    degree: u32,
    #[arg(long, default_value_t = 5)]
    coeff_bound: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail when branch data at infinity is not exact.
    #[arg(long)]
    strict: bool,
    /// Refinement rounds per sign or limit decision.
    #[arg(long, default_value_t = DEFAULT_SIGN_BUDGET)]
    budget: usize,
    /// Refinement rounds when deciding an arc's limit (defaults to --budget).
    #[arg(long)]
    limit_budget: Option<usize>,
    /// Print a line for fuzz instances where the d_p = d_Re - 1 statement fails.
    #[arg(long)]
    probe_conjecture: bool,
}

const USAGE: u8 = 1;
const ANALYSIS: u8 = 2;
const BOUND: u8 = 3;

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("milnor-index: {msg}");
    ExitCode::from(USAGE)
}

fn status(results: &[Result<Analysis, StageError>]) -> u8 {
    if results.iter().any(|r| r.is_err()) {
        ANALYSIS
    } else if results.iter().any(|r| r.as_ref().is_ok_and(|a| !a.consistent())) {
        BOUND
    } else {
        0
    }
}

fn write_out(path: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(USAGE);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let mut cfg = AnalysisConfig {
        budget: cli.budget,
        limit_budget: cli.limit_budget,
        strict: cli.strict,
        ..AnalysisConfig::default()
    };
    if let Some(c) = &cli.center {
        match parse_rational_pair(c) {
            Ok(a) => cfg.center = Some(a),
            Err(e) => return usage(format!("--center: {e}")),
        }
    }
    if let Some(r) = &cli.radius {
        match parse_rational(r) {
            Ok(r) => cfg.radius = Some(r),
            Err(e) => return usage(format!("--radius: {e}")),
        }
    }

    let inputs: Vec<(String, QBiPoly)> = if let Some(n) = cli.fuzz {
        let fz = FuzzConfig {
            count: n,
            max_degree: cli.degree,
            coeff_bound: cli.coeff_bound,
            seed: cli.seed,
        };
        let inst = fuzz_instances(&fz);
        let rejected: usize = inst.iter().map(|i| i.rejected_draws).sum();
        eprintln!("fuzz: {n} instances, {rejected} draws rejected for non-isolated singularities");
        inst.into_iter().map(|i| (i.poly.to_string(), i.poly)).collect()
    } else {
        let lines: Vec<String> = match (&cli.poly, &cli.file) {
            (Some(p), None) => vec![p.clone()],
            (None, Some(path)) => match fs::read_to_string(path) {
                Ok(t) => t
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(String::from)
                    .collect(),
                Err(e) => return usage(format!("{}: {e}", path.display())),
            },
            _ => return usage("one of --poly, --file or --fuzz is required"),
        };
        let mut v = Vec::new();
        for l in lines {
            match parse_poly(&l) {
                Ok(f) => v.push((l, f)),
                Err(e) => return usage(format!("{l:?}: {e}")),
            }
        }
        v
    };
    if cli.svg.is_some() && inputs.len() != 1 {
        return usage("--svg needs exactly one polynomial");
    }

    let polys: Vec<QBiPoly> = inputs.iter().map(|(_, f)| f.clone()).collect();
    let results = if polys.len() == 1 {
        vec![analyze(&polys[0], &cfg)]
    } else {
        milnor_core::pipeline::analyze_batch(&polys, &cfg)
    };

    let single = inputs.len() == 1 && cli.fuzz.is_none();
    let docs: Vec<ReportDocument> = inputs
        .iter()
        .zip(&results)
        .enumerate()
        .map(|(i, ((src, _), r))| ReportDocument::new(if single { None } else { Some(i) }, src, r))
        .collect();
    for (d, r) in docs.iter().zip(&results) {
        match r {
            Err(e) => eprintln!("instance {}: {e}", d.id.unwrap_or(0)),
            Ok(a) if !a.consistent() => eprintln!(
                "instance {}: failed {:?}, violated {:?}",
                d.id.unwrap_or(0),
                a.failed_checks(),
                a.bounds.violations()
            ),
            Ok(a) => {
                if cli.probe_conjecture {
                    if let Some(p) = a.probe.as_ref().filter(|p| !p.holds) {
                        eprintln!("instance {}: candidate counterexample at {} for {}", d.id.unwrap_or(0), p.point, a.poly);
                    }
                }
            }
        }
    }
    let text = if single { emit_json(&docs[0]) } else { emit_json_batch(&docs) };
    if let Err(e) = write_out(&cli.json, &text) {
        eprintln!("milnor-index: {e}");
        return ExitCode::from(ANALYSIS);
    }
    if let (Some(path), Some(body)) = (&cli.svg, docs[0].body.as_ref()) {
        if let Err(e) = fs::write(path, emit_svg(body)) {
            eprintln!("milnor-index: {e}");
            return ExitCode::from(ANALYSIS);
        }
    }
    ExitCode::from(status(&results))
}
