use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qra_core::qra::{check_identities, QraContext, MAX_QUBITS};
use qra_core::script::{
    format_outputs, format_outputs_json, parse_definition, run_script, AlgebraDefinition,
};

#[derive(Parser)]
#[command(
    name = "qra",
    version,
    about = "Quantum register algebra script runner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a script and print its `?` outputs.
    Run(RunConfig),
    /// Check the Witt basis, projector and iota identities.
    Selftest {
        /// Largest register size to check.
        #[arg(long, default_value_t = 3)]
        max_qubits: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Gaalop,
    Json,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Script file.
    script: PathBuf,
    /// Definition.csv describing the algebra.
    #[arg(
        long = "def",
        value_name = "PATH",
        conflicts_with = "qubits",
        required_unless_present = "qubits"
    )]
    definition: Option<PathBuf>,
    /// Use the QRA algebra for this many qubits instead of a definition file.
    #[arg(long)]
    qubits: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Gaalop)]
    format: Format,
    /// Drop output coordinates whose magnitude is at most this value.
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run(cfg: &RunConfig) -> Result<String> {
    if cfg.tol.is_nan() || cfg.tol < 0.0 {
        bail!("--tol must be a non-negative number");
    }
    let def = match (&cfg.definition, cfg.qubits) {
        (Some(path), None) => {
            parse_definition(&read(path)?).with_context(|| path.display().to_string())?
        }
        (None, Some(n)) => {
            if !(1..=MAX_QUBITS).contains(&n) {
                bail!("--qubits must be between 1 and {MAX_QUBITS}");
            }
            AlgebraDefinition::qra(n)
        }
        _ => bail!("exactly one of --def and --qubits is required"),
    };
    let source = read(&cfg.script)?;
    let ev = run_script(&source, &def)
        .map_err(|e| anyhow::anyhow!("{}:{e}", cfg.script.display()))?
        .pruned(cfg.tol);
    Ok(match cfg.format {
        Format::Gaalop => format_outputs(&ev),
        Format::Json => format_outputs_json(&ev),
    })
}

fn selftest(max_qubits: usize) -> Result<bool> {
    if !(1..=MAX_QUBITS).contains(&max_qubits) {
        bail!("--max-qubits must be between 1 and {MAX_QUBITS}");
    }
    let mut all = true;
    let mut total = 0;
    for n in 1..=max_qubits {
        let ctx = QraContext::new(n)?;
        for check in check_identities(&ctx) {
            total += 1;
            all &= check.passed;
            let tag = if check.passed { "PASS" } else { "FAIL" };
            println!("[{tag}] n={n} {}", check.name);
        }
    }
    println!(
        "{total} identities checked: {}",
        if all { "all passed" } else { "FAILURES" }
    );
    Ok(all)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(cfg) => run(cfg).map(|out| {
            print!("{out}");
            true
        }),
        Command::Selftest { max_qubits } => selftest(*max_qubits),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
