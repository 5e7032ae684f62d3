use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};

use axial_core::export::{export_graph, GraphFormat};
use axial_core::report::{analyze_range, run_range, validate_range, RunOptions, GOLDEN_MAX_N};
use axial_core::verify::verify_range;

/// Partition graph axial morphology: reports, graph exports and verification.
#[derive(Parser, Debug)]
#[command(name = "axial", version)]
struct Cli {
    /// Worker threads for per-n and per-vertex work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write basic_axial.csv, extremal_location.csv, shells.csv and manifest.json.
    Report {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Write one colored graph file per n.
    Export {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
        /// dot or graphml
        #[arg(long, default_value = "dot", value_parser = parse_format)]
        format: GraphFormat,
    },
    /// Check every structural property over the range; exit 0 iff all pass.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
    },
}

/// Range given either positionally (`report 1 30`) or with `--n-min/--n-max`.
#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(value_name = "N_MIN", conflicts_with = "n_min")]
    pos_min: Option<u32>,
    #[arg(value_name = "N_MAX", conflicts_with = "n_max")]
    pos_max: Option<u32>,
    #[arg(long)]
    n_min: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
}

impl RangeArgs {
    fn resolve(&self) -> (u32, u32) {
        let n_min = self.n_min.or(self.pos_min).unwrap_or(1);
        let n_max =
            self.n_max
                .or(self.pos_max)
                .unwrap_or(if self.n_min.or(self.pos_min).is_some() {
                    n_min.max(GOLDEN_MAX_N)
                } else {
                    GOLDEN_MAX_N
                });
        (n_min, n_max)
    }
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: axial_core::Error| e.to_string())
}

fn checked_range(range: &RangeArgs) -> (u32, u32) {
    let (n_min, n_max) = range.resolve();
    if let Err(e) = validate_range(n_min, n_max) {
        Cli::command()
            .error(ErrorKind::ValueValidation, e.to_string())
            .exit();
    }
    (n_min, n_max)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring thread pool")?;
    }
    match cli.command {
        Command::Report { range, out_dir } => {
            let (n_min, n_max) = checked_range(&range);
            if n_max > GOLDEN_MAX_N {
                eprintln!("warning: no reference data exists beyond n = {GOLDEN_MAX_N}");
            }
            let manifest = run_range(&RunOptions {
                n_min,
                n_max,
                out_dir: out_dir.clone(),
            })
            .with_context(|| format!("writing report to {}", out_dir.display()))?;
            for f in &manifest.files {
                println!("{}  {}", f.sha256, out_dir.join(&f.name).display());
            }
            Ok(true)
        }
        Command::Export {
            range,
            out_dir,
            format,
        } => {
            let (n_min, n_max) = checked_range(&range);
            std::fs::create_dir_all(&out_dir)
                .with_context(|| format!("creating {}", out_dir.display()))?;
            for (analysis, _) in analyze_range(n_min, n_max)? {
                let path = out_dir.join(format!("G_{}.{}", analysis.n(), format.extension()));
                export_graph(&analysis, format, &path)
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
            Ok(true)
        }
        Command::Verify { range } => {
            let (n_min, n_max) = checked_range(&range);
            let outcomes = verify_range(n_min, n_max)?;
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| o.failed()).count();
            println!("{} checks, {failed} failed", outcomes.len());
            Ok(failed == 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
