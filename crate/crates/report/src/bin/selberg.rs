use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use selberg_report::{emit_report, list_suites, run_suite, Format, SuiteConfig};

/// Verify Selberg-type integral evaluations and related identities.
#[derive(Parser)]
#[command(name = "selberg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run suites and write a report; exits nonzero if any case fails.
    Verify(VerifyArgs),
    /// Print the registered suites.
    List,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suites to run, added to those named in the config file.
    suites: Vec<String>,
    /// TOML config file.
    #[arg(long, env = "SELBERG_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Tolerance override `name=value`; repeatable.
    #[arg(long = "tolerance", value_name = "NAME=VALUE")]
    tolerances: Vec<String>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// json_lines, csv or summary_text.
    #[arg(long, default_value = "summary_text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-case wall time.
    #[arg(long)]
    timing: bool,
}

fn build_config(args: &VerifyArgs) -> selberg_report::Result<SuiteConfig> {
    let mut config = match &args.config {
        Some(path) => SuiteConfig::from_path(path)?,
        None => SuiteConfig::default(),
    };
    for s in &args.suites {
        if !config.suites.contains(s) {
            config.suites.push(s.clone());
        }
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    for t in &args.tolerances {
        config.set_tolerance(t)?;
    }
    if args.jobs.is_some() {
        config.jobs = args.jobs;
    }
    config.timing |= args.timing;
    Ok(config)
}

fn verify(args: &VerifyArgs) -> Result<bool, Box<dyn std::error::Error>> {
    let config = build_config(args)?;
    let records = run_suite(&config)?;
    let bytes = emit_report(&records, args.format);
    match &args.out {
        Some(path) => std::fs::write(path, &bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(records.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for (name, about) in list_suites() {
                println!("{name:16} {about}");
            }
            ExitCode::SUCCESS
        }
        Command::Verify(args) => match verify(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
