use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fibstab::cli::{analyze_tc, oracle_dump, parse, render, render_oracle, render_tc, run, Format, RunOptions, TcSpec};
use fibstab::invariants::Summary;

#[derive(Parser)]
#[command(name = "fibstab", version, about = "Exact stability invariants of projectivised split bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Largest k used when enumerating sections.
    #[arg(long, default_value_t = 24)]
    max_k: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a JSON problem description.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Verify every dual-route identity.
        #[arg(long)]
        oracle_check: bool,
        /// Exit with status 2 when an instability certificate is found.
        #[arg(long)]
        fail_on_unstable: bool,
    },
    /// Donaldson-Futaki invariant of a single test configuration.
    Df {
        /// Product configuration on P^{r-1}, one weight per coordinate.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "normal_cone")]
        weights: Option<Vec<i64>>,
        /// Degree of O(a) for the product configuration.
        #[arg(long, default_value_t = 1)]
        a: i64,
        /// Deformation to the normal cone of a point in (P^1, O(A)) with aL - cE.
        #[arg(long, num_args = 2, value_names = ["A", "C"])]
        normal_cone: Option<Vec<i64>>,
        #[command(flatten)]
        common: Common,
    },
    /// Dump the fitted Hilbert and weight polynomials.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn read_spec(file: &PathBuf) -> Result<fibstab::cli::ProblemSpec, String> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    parse(&text).map_err(|e| e.to_string())
}

fn main_inner(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Analyze { file, common, oracle_check, fail_on_unstable } => {
            let spec = read_spec(&file)?;
            let opts = RunOptions { max_k: common.max_k, oracle_check };
            let a = run(&spec, &opts).map_err(|e| e.to_string())?;
            print!("{}", render(&a, format(common.json)));
            if fail_on_unstable && matches!(a.report.summary, Summary::Unstable { .. }) {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Df { weights, a, normal_cone, common } => {
            let spec = match (weights, normal_cone) {
                (Some(weights), None) => TcSpec::Product { weights, a },
                (None, Some(v)) => TcSpec::PointNormalCone { a: v[0], c: v[1] },
                _ => return Err("give either --weights or --normal-cone".into()),
            };
            let r = analyze_tc(&spec, common.max_k).map_err(|e| e.to_string())?;
            print!("{}", render_tc(&r, format(common.json)));
        }
        Command::Oracle { file, common } => {
            let spec = read_spec(&file)?;
            let d = oracle_dump(&spec, common.max_k).map_err(|e| e.to_string())?;
            print!("{}", render_oracle(&d, format(common.json)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match main_inner(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
