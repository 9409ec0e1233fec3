use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use judicious::generators::GeneratorSpec;
use judicious::local_search::SearchConfig;
use judicious::ratio::DEFAULT_EPSILON;
use judicious::Ratio;
use judicious_cli::commands::{self, ExperimentArgs, OracleMode, Output};
use judicious_cli::config::ConfigFile;
use judicious_cli::{read_input, write_output, CliError};

/// Judicious partitions of 3-uniform hypergraphs.
///
/// Exit status: 0 success, 1 bound not met, 2 input error, 3 budget exceeded.
#[derive(Parser)]
#[command(name = "judicious", version)]
struct Cli {
    /// key = value file supplying defaults for any flag
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchFlags {
    #[arg(long)]
    seed: Option<u64>,
    /// Hill-climbing restarts per engine round [env: JP_RESTARTS]
    #[arg(long)]
    restarts: Option<usize>,
    /// Largest exhaustive search, in assignments [env: JP_EXACT_CAP]
    #[arg(long)]
    exact_cap: Option<u64>,
    /// Engine slack as p/q, between 1/15 and 2/3
    #[arg(long)]
    epsilon: Option<Ratio>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a partition with every part meeting at least 3m/5 edges
    Partition {
        /// Instance file (`p h3`), or - for stdin
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Recompute the degrees of a partition given as JSON
    Verify { file: PathBuf, partition: PathBuf },
    /// Exhaustive optimum: max-min part degree (tri) or min-max side load (bi)
    Oracle {
        file: PathBuf,
        #[arg(long)]
        mode: Option<OracleMode>,
        #[arg(long)]
        exact_cap: Option<u64>,
    },
    /// Solve `count` random instances and print one CSV row each
    Experiment {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        count: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Write an instance file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Grid3,
    Tight15,
    Complete { n: usize },
    Random { n: usize, m: usize, seed: u64 },
    RandomSpecial { n: usize, m: u64, k: usize, maxmult: u64, seed: u64 },
}

fn search_config(cfg: &ConfigFile, flags: SearchFlags) -> Result<SearchConfig, CliError> {
    let defaults = SearchConfig::default();
    Ok(SearchConfig {
        seed: cfg.resolve("seed", flags.seed, None, defaults.seed)?,
        max_restarts: cfg.resolve("restarts", flags.restarts, Some("JP_RESTARTS"), defaults.max_restarts)?,
        exact_cap: cfg.resolve("exact-cap", flags.exact_cap, Some("JP_EXACT_CAP"), defaults.exact_cap)?,
        epsilon: cfg.resolve("epsilon", flags.epsilon, None, DEFAULT_EPSILON)?,
        ..defaults
    })
}

fn required<T>(value: Option<T>, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Input(format!("--{name} is required (flag or config key)")))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let cfg = ConfigFile::load(cli.config.as_deref())?;
    match cli.command {
        Command::Partition { file, search } => {
            let search = search_config(&cfg, search)?;
            search.validate()?;
            commands::partition(&read_input(&file)?, &search)
        }
        Command::Verify { file, partition } => {
            commands::verify(&read_input(&file)?, &read_input(&partition)?)
        }
        Command::Oracle { file, mode, exact_cap } => {
            let mode = cfg.resolve_opt("mode", mode)?;
            let cap = cfg.resolve("exact-cap", exact_cap, Some("JP_EXACT_CAP"), SearchConfig::default().exact_cap)?;
            commands::oracle(&read_input(&file)?, mode, cap)
        }
        Command::Experiment { n, m, count, out, search } => {
            let args = ExperimentArgs {
                n: required(cfg.resolve_opt("n", n)?, "n")?,
                m: required(cfg.resolve_opt("m", m)?, "m")?,
                count: required(cfg.resolve_opt("count", count)?, "count")?,
                seed: cfg.resolve("seed", search.seed, None, 0)?,
            };
            let search = search_config(&cfg, search)?;
            search.validate()?;
            let out_path: Option<PathBuf> = cfg.resolve_opt("out", out)?;
            let result = commands::experiment(&args, &search)?;
            let stdout = write_output(out_path.as_deref(), result.stdout)?.unwrap_or_default();
            Ok(Output { stdout, ..result })
        }
        Command::Gen { kind, out } => {
            let spec = match kind {
                GenKind::Grid3 => GeneratorSpec::Grid3,
                GenKind::Tight15 => GeneratorSpec::Tight15,
                GenKind::Complete { n } => GeneratorSpec::Complete { n },
                GenKind::Random { n, m, seed } => GeneratorSpec::Random { n, m, seed },
                GenKind::RandomSpecial { n, m, k, maxmult, seed } => {
                    GeneratorSpec::RandomSpecial { n, m, k, maxmult, seed }
                }
            };
            let out_path: Option<PathBuf> = cfg.resolve_opt("out", out)?;
            let result = commands::generate(&spec)?;
            let stdout = write_output(out_path.as_deref(), result.stdout)?.unwrap_or_default();
            Ok(Output { stdout, ..result })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(note) = out.stderr {
                eprintln!("warning: {note}");
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
