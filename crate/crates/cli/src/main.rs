mod config;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use slicelab::exactnum::format_rational;
use slicelab::liecore::LieAlgebra;
use slicelab::slices::compactified_fibre_pgl2;
use slicelab::slodowy::{conjugate_to_slice, parse_partition, SlodowySlice};
use slicelab::suites::{run_suite, SUITES};
use slicelab::wonderful::{parse_curve, CurveSubspace};
use slicelab::{QMatrix, Rational};

use config::{parse_samples, parse_seed, Partial, SEED_ENV};
use parse::parse_element;

/// Exact checks for Slodowy slices, moment maps and the wonderful
/// compactification of PGL_n.
#[derive(Parser, Debug)]
#[command(name = "slicelab", version)]
struct Cli {
    /// a1 (sl2) or a2 (sl3).
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Partition of n, e.g. `2,1`.
    #[arg(long, global = true)]
    partition: Option<String>,
    #[arg(long, global = true, value_parser = |s: &str| parse_seed(s).map_err(|e| e.to_string()))]
    seed: Option<u64>,
    #[arg(long, global = true, value_parser = |s: &str| parse_samples(s).map_err(|e| e.to_string()))]
    samples: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// key=value configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(value_parser = SUITES)]
        suite: String,
    },
    /// Limit at t = 0 of the graph of a curve in G, e.g. `diag(t,1)`.
    Limit {
        #[arg(long)]
        curve: String,
    },
    /// Fibre of the compactified universal centralizer over a point (pgl2).
    Fibre {
        #[arg(long)]
        point: String,
    },
    /// Write y in xi + p_tau as Ad(u, s) with s in the slice.
    SliceProject {
        #[arg(long)]
        element: String,
    },
}

/// `println!` that stops quietly when stdout is closed.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            return Err(e.into());
        }
    }};
}

fn fmt_row(row: &[Rational]) -> String {
    let parts: Vec<String> = row.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix_json(m: &QMatrix) -> serde_json::Value {
    json!(m.row_vectors().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn algebra_of(config: &slicelab::suites::Config) -> Result<LieAlgebra> {
    Ok(config.algebras()?.remove(0))
}

fn slice_of(alg: &LieAlgebra, partition: &Option<Vec<usize>>) -> Result<SlodowySlice> {
    Ok(match partition {
        Some(p) => SlodowySlice::standard(alg, p)?,
        None => SlodowySlice::principal(alg)?,
    })
}

fn run(cli: Cli) -> Result<bool> {
    let partition = cli.partition.as_deref().map(parse_partition).transpose()?;
    let flags = Partial { algebra: cli.algebra, partition, seed: cli.seed, samples: cli.samples };
    let env_seed = std::env::var(SEED_ENV).ok();
    let config = config::resolve(flags, env_seed.as_deref(), cli.config.as_deref())?;

    match cli.command {
        Command::Verify { suite } => {
            let report = run_suite(&suite, &config)?;
            out!("{}", report.to_json());
            if !cli.json {
                let failed = report.failures().count();
                eprintln!("{suite}: {} checks, {failed} failed", report.checks.len());
            }
            Ok(report.passed())
        }
        Command::Limit { curve } => {
            let alg = algebra_of(&config)?;
            let matrix = parse_curve(&curve, alg.n())?;
            let limit = CurveSubspace::graph(&alg, &matrix)?.limit()?;
            let plucker = limit.plucker();
            if cli.json {
                let out = json!({
                    "curve": curve,
                    "algebra": alg.name(),
                    "basis": limit.format(&alg),
                    "rows": matrix_json(limit.basis()),
                    "plucker": plucker.iter().map(format_rational).collect::<Vec<_>>(),
                    "boundary": limit.is_boundary(),
                });
                out!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                out!("basis:");
                for pair in limit.format(&alg) {
                    out!("  {pair}");
                }
                out!("plucker: {}", fmt_row(&plucker));
                out!("boundary: {}", limit.is_boundary());
            }
            Ok(true)
        }
        Command::Fibre { point } => {
            let alg = algebra_of(&config)?;
            let slice = slice_of(&alg, &config.partition)?;
            let x = parse_element(&alg, &point)?;
            let fibre = compactified_fibre_pgl2(&alg, &x, &slice)?;
            if cli.json {
                let out = json!({
                    "x": alg.format_element(&fibre.x),
                    "x_tau": alg.format_element(&fibre.x_tau),
                    "basis": fibre.basis.iter().map(matrix_json).collect::<Vec<_>>(),
                    "projective_dim": fibre.projective_dim(),
                    "boundary": fibre.boundary.as_ref().map(|b| b.iter().map(matrix_json).collect::<Vec<_>>()),
                });
                out!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                out!("x: {}", alg.format_element(&fibre.x));
                out!("x_tau: {}", alg.format_element(&fibre.x_tau));
                out!("basis:");
                for b in &fibre.basis {
                    out!("  {b}");
                }
                out!("projective dim: {}", fibre.projective_dim());
                match &fibre.boundary {
                    Some(points) => {
                        out!("boundary:");
                        for b in points {
                            out!("  {b}");
                        }
                    }
                    None => out!("boundary: not rational"),
                }
            }
            Ok(true)
        }
        Command::SliceProject { element } => {
            let alg = algebra_of(&config)?;
            let slice = slice_of(&alg, &config.partition)?;
            let y = parse_element(&alg, &element)?;
            let c = conjugate_to_slice(&slice, &y)?;
            let log_u = alg.log_unipotent(&c.u).context("u is not unipotent")?;
            if cli.json {
                let out = json!({
                    "y": alg.format_element(&y),
                    "u": matrix_json(c.u.matrix()),
                    "log_u": alg.format_element(&log_u),
                    "s": alg.format_element(&c.s),
                });
                out!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                out!("u = exp({}) = {}", alg.format_element(&log_u), c.u.matrix());
                out!("s = {}", alg.format_element(&c.s));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
