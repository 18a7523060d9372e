use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use epgdom::formulas::{
    component_count_prediction, domination_formula, strong_domination_formula, total_dom_existence,
};
use epgdom::graph::{build_epg, export_dot, export_json, graph_dominating_vertices, GraphMode};
use epgdom::group::{construct_group_with, nilpotent_profile, parse_group_spec, GroupOptions};
use epgdom::harness::{
    default_catalog, parse_catalog, parse_catalog_line, run_verify, solver_selftest, write_csv,
    write_json, Budgets, ReportFormat,
};
use epgdom::solver::{solve_minimum_with, DominationKind, SolverOptions, Status};
use epgdom::{Error, Result};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "epgdom", version, about = "Domination in enhanced power graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, element orders, nilpotent profile and dominating vertices.
    Info { spec: String },
    /// Build an enhanced power graph and optionally export it.
    Graph {
        spec: String,
        #[arg(long, default_value = "full")]
        mode: GraphMode,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exact minimum (total) dominating set.
    Dominate {
        spec: String,
        #[arg(long, default_value = "dom")]
        kind: DominationKind,
        #[arg(long, default_value = "proper")]
        mode: GraphMode,
        /// Search node budget; defaults to EPGDOM_BUDGET or 1e8.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compare formulas against exact values over a catalog.
    Verify {
        /// Catalog file; one spec per line with optional `#tags: a, b`.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Extra catalog lines; replaces the default catalog when given.
        #[arg(long = "spec")]
        specs: Vec<String>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Cross-check the solver against subset enumeration on random graphs.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 18)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn solver_options(budget: Option<u64>) -> Result<SolverOptions> {
    match budget {
        Some(node_budget) => Ok(SolverOptions { node_budget }),
        None => SolverOptions::from_env().map_err(|reason| Error::MalformedSpec {
            text: epgdom::solver::BUDGET_ENV.into(),
            reason,
        }),
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn run(command: Command) -> Result<u8> {
    let opts = GroupOptions::default();
    match command {
        Command::Info { spec } => {
            let g = construct_group_with(&parse_group_spec(&spec)?, &opts)?;
            let full = build_epg(&g, GraphMode::Full);
            println!("group: {}", g.provenance());
            println!("order: {}", g.order());
            println!("abelian: {}", g.is_abelian());
            println!("element orders: {:?}", g.elem_orders());
            println!("maximal cyclic subgroups: {}", g.maximal_cyclic_subgroups().len());
            println!("dominating vertices: {:?}", graph_dominating_vertices(&full)?.to_vec());
            match nilpotent_profile(&g) {
                Ok(p) => {
                    let exists = total_dom_existence(&p, &g);
                    println!("profile: {p}");
                    println!("components (predicted): {}", component_count_prediction(&p));
                    println!("gamma (formula): {}", domination_formula(&p));
                    println!("gamma_strong (formula): {}", strong_domination_formula(&p, exists));
                }
                Err(e) => println!("profile: {e}"),
            }
            Ok(0)
        }
        Command::Graph {
            spec,
            mode,
            dot,
            json,
        } => {
            let g = construct_group_with(&parse_group_spec(&spec)?, &opts)?;
            let epg = build_epg(&g, mode);
            println!(
                "{} mode={} vertices={} edges={} components={}",
                epg.source(),
                mode.as_str(),
                epg.len(),
                epg.edge_count(),
                epg.connected_components().len()
            );
            if let Some(path) = dot {
                fs::write(&path, export_dot(&epg)).map_err(io_error(&path))?;
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&export_json(&epg)).expect("graph json");
                fs::write(&path, text + "\n").map_err(io_error(&path))?;
            }
            Ok(0)
        }
        Command::Dominate {
            spec,
            kind,
            mode,
            budget,
        } => {
            let g = construct_group_with(&parse_group_spec(&spec)?, &opts)?;
            let epg = build_epg(&g, mode);
            let cert = solve_minimum_with(&epg, kind, &solver_options(budget)?)?;
            let text = serde_json::to_string_pretty(&cert).expect("certificate json");
            println!("{text}");
            if let Status::Optimal { .. } = cert.status {
                debug_assert!(cert.revalidate(&epg));
            }
            Ok(0)
        }
        Command::Verify {
            catalog,
            specs,
            out,
            format,
            workers,
            budget,
            seed,
            timing,
        } => {
            let mut entries = Vec::new();
            if let Some(path) = &catalog {
                let text = fs::read_to_string(path).map_err(io_error(path))?;
                entries.extend(parse_catalog(&text)?);
            }
            for s in &specs {
                entries.extend(parse_catalog_line(s)?);
            }
            if catalog.is_none() && specs.is_empty() {
                entries = default_catalog();
            }
            let budgets = Budgets {
                solver: solver_options(budget)?,
                group: GroupOptions { seed, ..opts },
                workers,
                record_timing: timing,
            };
            let report = run_verify(&entries, &budgets)?;
            let file = File::create(&out).map_err(io_error(&out))?;
            let mut w = BufWriter::new(file);
            match format {
                ReportFormat::Json => write_json(&report, &mut w)?,
                ReportFormat::Csv => write_csv(&report, &mut w)?,
            }
            w.flush().map_err(io_error(&out))?;
            for row in &report.rows {
                eprintln!(
                    "{:<14} {:<12}{}",
                    row.spec,
                    row.verdict.as_str(),
                    if row.unexpected { " (unexpected)" } else { "" }
                );
            }
            Ok(match report.exit_code() {
                1 => EXIT_MISMATCH,
                3 => EXIT_RESOURCE,
                _ => 0,
            })
        }
        Command::Selftest {
            seed,
            trials,
            max_n,
        } => {
            if max_n > epgdom::solver::DEFAULT_BRUTE_FORCE_MAX {
                return Err(Error::TooLarge {
                    vertices: max_n,
                    max: epgdom::solver::DEFAULT_BRUTE_FORCE_MAX,
                });
            }
            let report = solver_selftest(seed, trials, max_n);
            println!("{}", serde_json::to_string_pretty(&report).expect("selftest json"));
            Ok(if report.passed() { 0 } else { EXIT_MISMATCH })
        }
    }
}
