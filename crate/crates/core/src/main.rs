use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use torus_cremona::error::ReportError;
use torus_cremona::report::{cmd_prove, cmd_verify, render, Format, ReportConfig, Verbosity};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    #[value(alias = "markdown")]
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerbosityArg {
    Summary,
    FullTree,
}

/// Exact verifier: the linear and toric S3 × Z2 actions are not conjugate
/// in the plane Cremona group.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
    /// Seed for the sampled exact checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value = "summary")]
    verbosity: VerbosityArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one lemma check: 1.4.1, 1.8, 1.5-singular, links-identities, 2.4.2.
    Verify { lemma: String },
    /// Prove that no chain of links leads from X to P2, and run the S3 contrast.
    Prove,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = ReportConfig {
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Md => Format::Markdown,
        },
        seed: cli.seed,
        verbosity: match cli.verbosity {
            VerbosityArg::Summary => Verbosity::Summary,
            VerbosityArg::FullTree => Verbosity::FullTree,
        },
    };
    let report = match &cli.command {
        Command::Verify { lemma } => cmd_verify(lemma, &config),
        Command::Prove => cmd_prove(&config),
    };
    let report = match report {
        Ok(r) => r,
        Err(e @ ReportError::UnknownLemma(..)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match render(&report, config.format) {
        Ok(s) => print!("{s}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if let Some(f) = &report.failure {
        eprintln!("verification failed: {f}");
    }
    ExitCode::from(report.exit_code as u8)
}
