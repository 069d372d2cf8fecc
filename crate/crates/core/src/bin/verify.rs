use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use roquette::report::{
    emit_json, emit_markdown, is_usage_error, run_pipeline, Options, DEFAULT_MAX_PRIME, DEFAULT_SEED,
};
use roquette::jacobian::DEFAULT_ELL_BOUND;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

/// Verify the automorphism representation of y^2 = x^p - x and report the
/// Schur obstruction verdict.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    #[arg(long)]
    prime: u64,
    /// torsion primes for the ell-adic witness (default: chosen from --ell-bound)
    #[arg(long, value_delimiter = ',')]
    ell: Option<Vec<u64>>,
    /// largest ell^(2g) enumerated when building J[ell]
    #[arg(long, default_value_t = DEFAULT_ELL_BOUND)]
    ell_bound: u128,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// initial series precision (default 2p + 4)
    #[arg(long)]
    precision: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_MAX_PRIME)]
    max_prime: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if matches!(cli.precision, Some(n) if n < 1) {
        eprintln!("error: --precision must be positive");
        return ExitCode::from(2);
    }
    let opts = Options {
        ells: cli.ell,
        ell_bound: cli.ell_bound,
        seed: cli.seed,
        precision: cli.precision,
        max_prime: cli.max_prime,
    };
    let report = match run_pipeline(cli.prime, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_usage_error(&e) { 2 } else { 1 });
        }
    };
    let body = match cli.format {
        Format::Json => emit_json(&report),
        Format::Markdown => emit_markdown(&report),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    for (stage, ms) in &report.timings_ms {
        eprintln!("{stage}: {ms} ms");
    }
    ExitCode::from(report.exit_code() as u8)
}
