use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use d0l_growth::cli::{run, Command, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "d0l", version, about = "Exact growth analysis of D0L-systems")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Window start for ratio checks and the slope fit.
    #[arg(long, default_value_t = 10, global = true)]
    n_lo: u64,

    /// Window end for ratio checks and the slope fit.
    #[arg(long, default_value_t = 60, global = true)]
    n_hi: u64,

    /// Longest word that is ever materialized.
    #[arg(long, default_value_t = 10_000_000, global = true)]
    word_cap: u64,

    /// Iterates searched for an eventual cycle.
    #[arg(long, default_value_t = 10_000, global = true)]
    cycle_cap: u64,

    #[arg(long, default_value_t = 1e-3, global = true)]
    rel_tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Growth order, components, periods and periodicity.
    Analyze { file: PathBuf },
    /// Exact lengths |s^n(w)|, optionally the words.
    Simulate {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        n_max: u64,
        #[arg(long)]
        words: bool,
    },
    /// Empirical check of the growth order.
    Verify {
        file: PathBuf,
        #[arg(long)]
        queffelec: bool,
        #[arg(long)]
        force_alpha: Option<u32>,
        #[arg(long)]
        force_beta: Option<f64>,
    },
    /// Bin coverage of cos(n theta), sin(n theta) for theta = arg(p + qi).
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, default_value_t = 5000)]
        n: u64,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Analyze { file } => Command::Analyze { file },
        Cmd::Simulate { file, n_max, words } => Command::Simulate { file, n_max, words },
        Cmd::Verify { file, queffelec, force_alpha, force_beta } => {
            Command::Verify { file, queffelec, force_alpha, force_beta }
        }
        Cmd::Orbit { p, q, n, delta } => Command::Orbit { p, q, n, delta },
    };
    let config = RunConfig {
        command,
        n_lo: cli.n_lo,
        n_hi: cli.n_hi,
        word_cap: cli.word_cap,
        cycle_cap: cli.cycle_cap,
        rel_tol: cli.rel_tol,
        format: match cli.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        },
        seed: cli.seed,
    };
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
