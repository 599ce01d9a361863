//! Command-line front end: construct double joins, compute spectra by
//! closed form and/or oracle, verify agreement over the builtin test
//! matrix, and run the spanning-tree / Kirchhoff / cospectrality analytics.
//!
//! Exit codes: 0 ok, 1 usage or precondition failure, 2 numerical mismatch.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use lapjoin::analytics;
use lapjoin::closed_form::{self, ClosedFormInstance};
use lapjoin::eigen;
use lapjoin::families;
use lapjoin::ops;
use lapjoin::report::{AnalyticsReport, RunReport, Status};
use lapjoin::{DoubleJoinVariant, Error, Graph};

#[derive(Parser)]
#[command(
    name = "lapjoin",
    about = "Laplacian spectra of double join graph operations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a double join and write it in edge-list format.
    Construct {
        variant: DoubleJoinVariant,
        g: String,
        g1: String,
        g2: String,
        /// Output file; without it the edge list goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the Laplacian spectrum of a double join.
    Spectrum {
        variant: DoubleJoinVariant,
        g: String,
        g1: String,
        g2: String,
        /// closed, oracle, or both (cross-validated).
        #[arg(long, default_value = "both")]
        method: Method,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Cross-validate closed form against the oracle over a builtin suite.
    Verify {
        /// default (16 general cases), reduced (8 null-factor cases), or all.
        #[arg(long, default_value = "default")]
        suite: Suite,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Spanning trees and Kirchhoff index of a graph or double join.
    Analyze {
        /// Graph spec (family string or edge-list path).
        #[arg(required_unless_present = "join")]
        spec: Option<String>,
        /// Analyze a double join instead: VARIANT G G1 G2.
        #[arg(long, num_args = 4, value_names = ["VARIANT", "G", "G1", "G2"])]
        join: Option<Vec<String>>,
    },
    /// Search for Laplacian-cospectral mates and build the swap construction.
    Cospectral {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value = "S")]
        variant: DoubleJoinVariant,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Suite {
    Default,
    Reduced,
    All,
}

/// Resolves a graph spec: builtin family first, then edge-list file path.
fn resolve(spec: &str) -> Result<Graph, Error> {
    match families::family(spec) {
        Ok(g) => Ok(g),
        Err(family_err) => {
            if std::path::Path::new(spec).exists() {
                Graph::from_edge_list(&std::fs::read_to_string(spec)?)
            } else {
                Err(family_err)
            }
        }
    }
}

fn describe(g: &Graph) -> String {
    format!("{} vertices, {} edges", g.vertex_count(), g.edge_count())
}

fn join_inputs(
    variant: DoubleJoinVariant,
    specs: [&str; 3],
    graphs: [&Graph; 3],
) -> BTreeMap<String, String> {
    let mut inputs = BTreeMap::new();
    inputs.insert("variant".into(), variant.to_string());
    for (key, (spec, g)) in ["g", "g1", "g2"].iter().zip(specs.iter().zip(graphs)) {
        inputs.insert((*key).into(), format!("{spec} ({})", describe(g)));
    }
    inputs
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Status, Error> {
    match command {
        Command::Construct { variant, g, g1, g2, out } => cmd_construct(variant, &g, &g1, &g2, out),
        Command::Spectrum { variant, g, g1, g2, method, tol } => {
            cmd_spectrum(variant, &g, &g1, &g2, method, tol)
        }
        Command::Verify { suite, tol } => cmd_verify(suite, tol),
        Command::Analyze { spec, join } => cmd_analyze(spec.as_deref(), join.as_deref()),
        Command::Cospectral { max_vertices, variant } => cmd_cospectral(max_vertices, variant),
    }
}

fn cmd_construct(
    variant: DoubleJoinVariant,
    g_spec: &str,
    g1_spec: &str,
    g2_spec: &str,
    out: Option<PathBuf>,
) -> Result<Status, Error> {
    let started = Instant::now();
    let (g, g1, g2) = (resolve(g_spec)?, resolve(g1_spec)?, resolve(g2_spec)?);
    let join = ops::double_join(variant, &g, &g1, &g2)?;
    eprintln!("{}^{variant} double join: {}", g_spec, describe(&join));
    match out {
        Some(path) => {
            std::fs::write(&path, join.to_edge_list())?;
            let mut report = RunReport::new("construct");
            report.inputs = join_inputs(variant, [g_spec, g1_spec, g2_spec], [&g, &g1, &g2]);
            report.inputs.insert("out".into(), path.display().to_string());
            report.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            println!("{}", report.to_json());
        }
        None => print!("{}", join.to_edge_list()),
    }
    Ok(Status::Ok)
}

fn spectrum_report(
    command: &str,
    variant: DoubleJoinVariant,
    specs: [&str; 3],
    method: Method,
    tol: f64,
) -> Result<RunReport, Error> {
    let started = Instant::now();
    let (g, g1, g2) = (resolve(specs[0])?, resolve(specs[1])?, resolve(specs[2])?);
    let mut report = RunReport::new(command);
    report.inputs = join_inputs(variant, specs, [&g, &g1, &g2]);

    if method != Method::Oracle {
        let inst = ClosedFormInstance::from_graphs(variant, &g, &g1, &g2)?;
        report.spectrum_closed_form =
            Some(closed_form::laplacian_spectrum(&inst)?.values().to_vec());
    }
    if method != Method::Closed {
        let join = ops::double_join(variant, &g, &g1, &g2)?;
        report.spectrum_oracle = Some(eigen::laplacian_spectrum(&join)?.values().to_vec());
    }
    if method == Method::Both {
        let closed = eigen::SpectralMultiset::from_values(
            report.spectrum_closed_form.clone().unwrap(),
        );
        let oracle =
            eigen::SpectralMultiset::from_values(report.spectrum_oracle.clone().unwrap());
        report.compare(&closed, &oracle, tol);
    }
    report.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn cmd_spectrum(
    variant: DoubleJoinVariant,
    g: &str,
    g1: &str,
    g2: &str,
    method: Method,
    tol: f64,
) -> Result<Status, Error> {
    match spectrum_report("spectrum", variant, [g, g1, g2], method, tol) {
        Ok(report) => {
            println!("{}", report.to_json());
            Ok(report.status)
        }
        Err(Error::Precondition(msg)) => {
            let mut report = RunReport::new("spectrum");
            report.status = Status::PreconditionFailed;
            report.inputs.insert("variant".into(), variant.to_string());
            println!("{}", report.to_json());
            eprintln!("precondition failed: {msg}");
            Ok(Status::PreconditionFailed)
        }
        Err(err) => Err(err),
    }
}

/// The sweep of general cases: every variant over the builtin factor
/// triples.
const GENERAL_CASES: [(&str, &str, &str); 4] = [
    ("K3", "P2", "P3"),
    ("C4", "K2", "P3"),
    ("K4", "P2", "K2"),
    ("petersen", "P2", "C4"),
];

/// Null-factor reductions: vertex joins and edge joins.
const REDUCED_CASES: [(&str, &str, &str); 2] = [("K3", "P2", "null0"), ("K4", "null0", "P3")];

fn cmd_verify(suite: Suite, tol: f64) -> Result<Status, Error> {
    let mut cases: Vec<(DoubleJoinVariant, (&str, &str, &str))> = Vec::new();
    if suite != Suite::Reduced {
        for variant in DoubleJoinVariant::ALL {
            cases.extend(GENERAL_CASES.iter().map(|&c| (variant, c)));
        }
    }
    if suite != Suite::Default {
        for variant in DoubleJoinVariant::ALL {
            cases.extend(REDUCED_CASES.iter().map(|&c| (variant, c)));
        }
    }

    let mut passed = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for (variant, (g, g1, g2)) in &cases {
        let report = spectrum_report("verify", *variant, [g, g1, g2], Method::Both, tol)?;
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
        let label = format!("{variant} {g} {g1} {g2}");
        if report.status == Status::Ok {
            passed += 1;
            eprintln!("ok   {label} (max diff {:e})", report.max_abs_difference.unwrap());
        } else {
            eprintln!("FAIL {label} (max diff {:e})", report.max_abs_difference.unwrap());
            failures.push(label);
        }
    }
    if failures.is_empty() {
        println!("PASS {passed}/{}", cases.len());
        Ok(Status::Ok)
    } else {
        println!("FAIL {passed}/{}: {}", cases.len(), failures.join("; "));
        Ok(Status::Mismatch)
    }
}

fn cmd_analyze(spec: Option<&str>, join: Option<&[String]>) -> Result<Status, Error> {
    let started = Instant::now();
    let mut report = RunReport::new("analyze");
    let graph = match join {
        Some(args) => {
            let variant: DoubleJoinVariant = args[0].parse()?;
            let (g, g1, g2) = (resolve(&args[1])?, resolve(&args[2])?, resolve(&args[3])?);
            report.inputs =
                join_inputs(variant, [&args[1], &args[2], &args[3]], [&g, &g1, &g2]);
            ops::double_join(variant, &g, &g1, &g2)?
        }
        None => {
            let spec = spec.expect("clap enforces spec or --join");
            let g = resolve(spec)?;
            report.inputs.insert("g".into(), format!("{spec} ({})", describe(&g)));
            g
        }
    };
    let trees = analytics::spanning_trees(&graph)?;
    let kirchhoff = analytics::kirchhoff_index(&graph)?;
    report.analytics = Some(AnalyticsReport::new(&trees, kirchhoff));
    report.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    println!("{}", report.to_json());
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct CertificateReport {
    command: String,
    variant: String,
    factor_pair: [String; 2],
    graph_a: String,
    graph_b: String,
    shared_spectrum: Vec<f64>,
    isomorphic: bool,
    tolerance: f64,
    elapsed_ms: f64,
}

fn cmd_cospectral(max_vertices: usize, variant: DoubleJoinVariant) -> Result<Status, Error> {
    let started = Instant::now();
    let pairs = analytics::cospectral_mate_search(max_vertices)?;
    let Some((a, b)) = pairs.first() else {
        println!(
            "{{\"command\":\"cospectral\",\"pairs_found\":0,\"max_vertices\":{max_vertices}}}"
        );
        eprintln!("no cospectral pairs found up to {max_vertices} vertices");
        return Ok(Status::Ok);
    };
    eprintln!(
        "{} cospectral pair(s) found; smallest on {} vertices",
        pairs.len(),
        a.vertex_count()
    );
    let base = families::complete(4);
    let spacer = families::path(2);
    let cert = analytics::cospectral_double_join(variant, &base, &base, a, b, &spacer, &spacer)?;
    let report = CertificateReport {
        command: "cospectral".into(),
        variant: variant.to_string(),
        factor_pair: [a.to_edge_list().replace('\n', "; "), b.to_edge_list().replace('\n', "; ")],
        graph_a: cert.graph_a.to_edge_list().replace('\n', "; "),
        graph_b: cert.graph_b.to_edge_list().replace('\n', "; "),
        shared_spectrum: cert.shared_spectrum.values().to_vec(),
        isomorphic: cert.isomorphic,
        tolerance: cert.tolerance,
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(Status::Ok)
}
