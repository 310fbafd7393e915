use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sgeo_core::constructions::{
    build_certificate, cylinder_anchors, cylinder_threshold, grid_anchors, grid_threshold,
    AnchorSet,
};
use sgeo_core::{
    build_cycle, build_path, ceil_two_sqrt, covering_lower_bound, diameter,
    find_strong_geodetic_set, product_lower_bound, strong_geodetic_number, verify_certificate,
    Certificate, Error, Graph, SolverConfig,
};

use crate::json::CertificateJson;
use crate::spec::{Family, GraphSpec};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "sgeo", version, about = "Strong geodetic sets of graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact strong geodetic number with a certificate.
    Solve(SolveArgs),
    /// Check a certificate file against a graph.
    Verify {
        spec: GraphSpec,
        certificate: PathBuf,
    },
    /// Explicit certificate for a thin grid or cylinder.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        r: usize,
        n: usize,
    },
    /// Lower and upper bounds that apply to a graph.
    Bounds { spec: GraphSpec },
    /// Recompute the headline numbers for grids and cylinders.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Grid,
    Cylinder,
}

/// Seconds, or `none` for no limit.
#[derive(Debug, Clone, Copy)]
struct Budget(Option<Duration>);

impl FromStr for Budget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "none" {
            return Ok(Budget(None));
        }
        let secs: f64 = s.parse().map_err(|_| format!("invalid budget {s:?}"))?;
        Duration::try_from_secs_f64(secs)
            .map(|d| Budget(Some(d)))
            .map_err(|_| format!("budget must be a non-negative number of seconds, got {s}"))
    }
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    spec: GraphSpec,
    /// Wall-clock limit in seconds, or `none`.
    #[arg(long, default_value = "60")]
    budget: Budget,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Report the same witness regardless of the worker count.
    #[arg(long)]
    deterministic: bool,
    /// Try the grid/cylinder construction as a candidate set first.
    #[arg(long)]
    hint_construction: bool,
    /// Maximum number of geodesics enumerated per pair.
    #[arg(long, default_value_t = sgeo_core::geodesics::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
}

#[derive(Debug, clap::Args)]
struct ReproduceArgs {
    /// Wall-clock limit in seconds for each exact search, or `none`.
    #[arg(long, default_value = "1800")]
    budget: Budget,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Serialize)]
struct SolveOutput {
    sg: usize,
    certificate: CertificateJson,
}

#[derive(Serialize)]
struct PartialOutput {
    status: &'static str,
    /// Every smaller size is excluded.
    lower: usize,
    upper: usize,
}

#[derive(Serialize)]
struct VerifyOutput {
    valid: bool,
    uncovered: Vec<usize>,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct ProductBound {
    u: usize,
    value: Option<usize>,
}

#[derive(Serialize)]
struct BoundsOutput {
    graph: String,
    vertices: usize,
    diameter: usize,
    covering_lower_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thin_regime: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    product_lower_bound: Option<ProductBound>,
    lower: usize,
}

#[derive(Serialize)]
struct ReproduceRow {
    claim: String,
    graph: String,
    expected: String,
    observed: String,
    seconds: f64,
    ok: bool,
}

#[derive(Serialize)]
struct ReproduceOutput {
    rows: Vec<ReproduceRow>,
    all_ok: bool,
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    writeln!(out, "{text}").map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

/// Anchor layout of a family when the lemma ranges allow one.
fn family_anchors(family: Family) -> Option<AnchorSet> {
    match family {
        Family::Grid { r, n } => grid_anchors(r, n).ok(),
        Family::Cylinder { r, n } => cylinder_anchors(r, n).ok(),
    }
}

fn family_threshold(family: Family) -> Option<(usize, usize)> {
    match family {
        Family::Grid { r, n } => Some((r, grid_threshold(n))),
        Family::Cylinder { r, n } if n >= 3 => Some((r, cylinder_threshold(n))),
        Family::Cylinder { .. } => None,
    }
}

fn short_factor(family: Family) -> Result<Graph, CliError> {
    Ok(match family {
        Family::Grid { n, .. } => build_path(n)?,
        Family::Cylinder { n, .. } => build_cycle(n)?,
    })
}

impl Cli {
    pub fn execute(self, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
        match self.command {
            Command::Solve(args) => solve(args, out, err),
            Command::Verify { spec, certificate } => verify(&spec, &certificate, out, err),
            Command::Construct { family, r, n } => construct(family, r, n, out, err),
            Command::Bounds { spec } => bounds(&spec, out),
            Command::Reproduce(args) => reproduce(args, out),
        }
    }
}

fn solve(args: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let built = args.spec.build()?;
    let g = &built.graph;
    g.ensure_connected()?;
    let mut cfg = SolverConfig {
        cap: args.cap,
        budget: args.budget.0,
        workers: args.workers,
        deterministic: args.deterministic,
        hints: Vec::new(),
    };
    let mut upper = g.vertex_count();
    if args.hint_construction {
        match built.family.and_then(family_anchors) {
            Some(anchors) => {
                let cert = build_certificate(&anchors)?;
                upper = cert.size();
                cfg.hints.push(cert.vertices);
            }
            None => {
                let _ = writeln!(err, "note: no construction applies to {}", args.spec);
            }
        }
    }
    match strong_geodetic_number(g, &cfg) {
        Ok((sg, cert)) => {
            let certificate =
                CertificateJson::new(&args.spec.to_string(), &cert, built.labeling.as_ref());
            print_json(out, &SolveOutput { sg, certificate })?;
            Ok(0)
        }
        Err(e @ (Error::BudgetExhausted { size } | Error::TruncationInconclusive { size })) => {
            let status = match e {
                Error::BudgetExhausted { .. } => "budget-exhausted",
                _ => "inconclusive",
            };
            let partial = PartialOutput {
                status,
                lower: size,
                upper: upper.max(size),
            };
            Err(CliError::Inconclusive {
                message: e.to_string(),
                partial: serde_json::to_value(partial).expect("serializes"),
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(
    spec: &GraphSpec,
    path: &PathBuf,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let json = CertificateJson::parse(&text)?;
    let built = spec.build()?;
    if json.graph != spec.to_string() {
        let _ = writeln!(
            err,
            "note: certificate was written for {:?}, checking against {spec}",
            json.graph
        );
    }
    let report = verify_certificate(&built.graph, &json.to_certificate());
    let mut violations = report.violations;
    if let Some(coords) = &json.coords {
        match &built.labeling {
            None => violations.push("coords given for a graph that is not a product".into()),
            Some(lab) => {
                for c in coords {
                    if !json.vertices.contains(&c.id) {
                        violations.push(format!("coords list vertex {} outside the set", c.id));
                    } else if lab.decode(c.id).ok() != Some((c.i, c.j)) {
                        violations.push(format!(
                            "coords ({}, {}) do not match vertex {}",
                            c.i, c.j, c.id
                        ));
                    }
                }
            }
        }
    }
    let valid = report.uncovered.is_empty() && violations.is_empty();
    print_json(
        out,
        &VerifyOutput {
            valid,
            uncovered: report.uncovered,
            violations,
        },
    )?;
    Ok(if valid { 0 } else { 1 })
}

fn construct(
    family: FamilyArg,
    r: usize,
    n: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let (anchors, spec) = match family {
        FamilyArg::Grid => (grid_anchors(r, n)?, GraphSpec::Grid { r, n }),
        FamilyArg::Cylinder => (cylinder_anchors(r, n)?, GraphSpec::Cylinder { r, n }),
    };
    let cert = build_certificate(&anchors)?;
    let (_, labeling) = anchors.product()?;
    print_json(
        out,
        &CertificateJson::new(&spec.to_string(), &cert, Some(&labeling)),
    )?;
    let _ = writeln!(err, "size={}", cert.size());
    Ok(0)
}

fn bounds(spec: &GraphSpec, out: &mut dyn Write) -> Result<i32, CliError> {
    let built = spec.build()?;
    let g = &built.graph;
    let covering = covering_lower_bound(g)?;
    let mut report = BoundsOutput {
        graph: spec.to_string(),
        vertices: g.vertex_count(),
        diameter: diameter(g)?,
        covering_lower_bound: covering,
        upper: None,
        threshold: None,
        thin_regime: None,
        product_lower_bound: None,
        lower: covering,
    };
    if let Some(family) = built.family {
        if let Some(anchors) = family_anchors(family) {
            report.upper = Some(build_certificate(&anchors)?.size());
        }
        if let Some((r, threshold)) = family_threshold(family) {
            report.threshold = Some(threshold);
            report.thin_regime = Some(r > threshold);
        }
        if let (Some(u), Family::Grid { r, .. } | Family::Cylinder { r, .. }) =
            (report.upper, family)
        {
            if u >= 2 && r >= 2 {
                let value = product_lower_bound(r, &short_factor(family)?, u)?;
                report.lower = report.lower.max(value.unwrap_or(0));
                report.product_lower_bound = Some(ProductBound { u, value });
            }
        }
    }
    print_json(out, &report)?;
    Ok(0)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64())
}

fn certificate_checks(g: &Graph, cert: &Certificate) -> bool {
    verify_certificate(g, cert).valid
}

fn reproduce(args: ReproduceArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = SolverConfig {
        budget: args.budget.0,
        workers: args.workers,
        ..SolverConfig::default()
    };
    cfg.validate()?;
    let mut rows = Vec::new();

    for (r, n) in [(7, 2), (17, 3)] {
        let spec = GraphSpec::Grid { r, n };
        let built = spec.build()?;
        let expected = ceil_two_sqrt(n);
        let anchors = grid_anchors(r, n)?;
        let mut cfg = cfg.clone();
        cfg.hints.push(build_certificate(&anchors)?.vertices);
        let (res, seconds) = timed(|| strong_geodetic_number(&built.graph, &cfg));
        let (observed, ok) = match res {
            Ok((k, cert)) => (
                format!("sg={k}"),
                k == expected && certificate_checks(&built.graph, &cert),
            ),
            Err(e) => (e.to_string(), false),
        };
        rows.push(ReproduceRow {
            claim: "thin grid attains ceil(2 sqrt n)".into(),
            graph: spec.to_string(),
            expected: format!("sg={expected}"),
            observed,
            seconds,
            ok,
        });
    }

    let grids = [(7, 4), (16, 16), (25, 25), (10, 5), (12, 7), (20, 12)];
    let cylinders = [(25, 25), (9, 9), (10, 7), (16, 4)];
    let cases = grids
        .iter()
        .map(|&(r, n)| (GraphSpec::Grid { r, n }, grid_anchors(r, n)))
        .chain(
            cylinders
                .iter()
                .map(|&(r, n)| (GraphSpec::Cylinder { r, n }, cylinder_anchors(r, n))),
        );
    for (spec, anchors) in cases {
        let n = match spec {
            GraphSpec::Grid { n, .. } | GraphSpec::Cylinder { n, .. } => n,
            _ => unreachable!(),
        };
        let expected = ceil_two_sqrt(n);
        let (res, seconds) = timed(|| {
            let anchors = anchors?;
            let cert = build_certificate(&anchors)?;
            let (g, _) = anchors.product()?;
            Ok::<_, Error>((cert.size(), certificate_checks(&g, &cert)))
        });
        let (observed, ok) = match res {
            Ok((size, valid)) => (
                format!("size={size} valid={valid}"),
                valid && size == expected,
            ),
            Err(e) => (e.to_string(), false),
        };
        rows.push(ReproduceRow {
            claim: "construction is a strong geodetic set".into(),
            graph: spec.to_string(),
            expected: format!("size={expected} valid=true"),
            observed,
            seconds,
            ok,
        });
    }

    let spec = GraphSpec::Grid { r: 7, n: 7 };
    let g = spec.build()?.graph;
    let (five, seconds) = timed(|| find_strong_geodetic_set(&g, 5, &cfg));
    let (observed, ok) = match five {
        Ok(Some(cert)) => (
            format!("size-5 set {:?}", cert.vertices),
            certificate_checks(&g, &cert),
        ),
        Ok(None) => ("no size-5 set".into(), false),
        Err(e) => (e.to_string(), false),
    };
    rows.push(ReproduceRow {
        claim: "square grid 7x7 needs fewer than ceil(2 sqrt 7) = 6".into(),
        graph: spec.to_string(),
        expected: "sg<=5".into(),
        observed,
        seconds,
        ok,
    });
    let (four, seconds) = timed(|| find_strong_geodetic_set(&g, 4, &cfg));
    let (observed, ok) = match four {
        Ok(None) => ("no size-4 set".into(), true),
        Ok(Some(cert)) => (format!("size-4 set {:?}", cert.vertices), true),
        Err(e) => (e.to_string(), false),
    };
    rows.push(ReproduceRow {
        claim: "exact value of sg for the 7x7 grid (covering bound is 4)".into(),
        graph: spec.to_string(),
        expected: "decided".into(),
        observed,
        seconds,
        ok,
    });

    let all_ok = rows.iter().all(|r| r.ok);
    print_json(out, &ReproduceOutput { rows, all_ok })?;
    Ok(if all_ok { 0 } else { 1 })
}
