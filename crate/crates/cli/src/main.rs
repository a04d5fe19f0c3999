use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use obstruction_core::corpus::{run_selfcheck, selfcheck_corpus};
use obstruction_core::{compute_report, parse_spec, reproduce_tables, Verdict};

/// Exact cross-checks of the local integral obstruction group of a surface
/// singularity.
#[derive(Parser)]
#[command(name = "obstruction", version)]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; the exit code carries the result.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every applicable realization for one singularity.
    Compute(ComputeArgs),
    /// Recompute the reference tables and compare them cell by cell.
    Tables,
    /// Run the 100-case cross-realization corpus.
    Selfcheck,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ComputeArgs {
    /// Path to a JSON spec document.
    specfile: Option<PathBuf>,
    /// Inline JSON spec, e.g. '{"kind":"ade","type":"D","n":5}'.
    #[arg(long)]
    spec: Option<String>,
}

enum Outcome {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let (text, ok) = match &cli.command {
        Command::Compute(args) => {
            let source = match (&args.specfile, &args.spec) {
                (Some(path), _) => fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
                (None, Some(inline)) => inline.clone(),
                (None, None) => unreachable!("clap requires one spec source"),
            };
            let spec = parse_spec(&source).map_err(|e| e.to_string())?;
            let report = compute_report(&spec).map_err(|e| e.to_string())?;
            let text = if cli.json {
                report.to_json()
            } else {
                report.render_text()
            };
            (text, report.verdict.is_success())
        }
        Command::Tables => {
            let doc = reproduce_tables().map_err(|e| e.to_string())?;
            let text = if cli.json {
                doc.to_json()
            } else {
                doc.render_text()
            };
            (text, doc.is_exact())
        }
        Command::Selfcheck => {
            let check = run_selfcheck(&selfcheck_corpus()).map_err(|e| e.to_string())?;
            let text = if cli.json {
                serde_json::to_string_pretty(&check.reports).map_err(|e| e.to_string())?
            } else {
                selfcheck_summary(&check)
            };
            (text, check.passed())
        }
    };
    if !cli.quiet || !ok {
        println!("{}", text.trim_end());
    }
    Ok(if ok {
        Outcome::Success
    } else {
        Outcome::Failure
    })
}

fn selfcheck_summary(check: &obstruction_core::corpus::SelfCheck) -> String {
    let mut out = String::new();
    for report in &check.reports {
        out.push_str(&format!(
            "{:<18} {}\n",
            report.spec.to_string(),
            report.verdict.label()
        ));
    }
    out.push('\n');
    for verdict in [
        Verdict::Compatible,
        Verdict::OrderOnlyMatch,
        Verdict::SingleRoute,
        Verdict::Mismatch,
    ] {
        out.push_str(&format!(
            "{:<17} {}\n",
            verdict.label(),
            check.count(verdict)
        ));
    }
    for report in check.mismatches() {
        if let Some(m) = &report.mismatch {
            out.push_str(&format!(
                "MISMATCH {}: {} = {}, {} = {}\n",
                report.spec,
                m.first.name(),
                m.first_value,
                m.second.name(),
                m.second_value
            ));
        }
    }
    out
}
