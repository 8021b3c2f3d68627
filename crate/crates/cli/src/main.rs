use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{DegreeRange, Outcome};
use hilbtail_core::HilbStore;

/// Name of the cache file inside the cache directory.
const CACHE_FILE: &str = "hilb_classes.json";

#[derive(Debug, Parser)]
#[command(
    name = "hilbtail",
    version,
    about = "Motivic classes of Hilbert schemes of points on P^2 and stable-range Betti numbers of M(d, chi)"
)]
struct Cli {
    /// Directory holding the class cache [default: $HOME/.cache/hilbtail]
    #[arg(long, global = true, env = "HILBTAIL_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class of Hilb^n(P^2) with its Euler number and duality check
    Hilb {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Parameters, determined motivic tail and Betti tail of M(d, chi)
    Moduli {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check that the determined tail of M(d, chi) does not depend on chi
    Verify {
        /// Inclusive degree range `a..b` with 3 <= a <= b
        #[arg(long, value_parser = DegreeRange::parse)]
        d: DegreeRange,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Fixed-point count of Hilb^n(P^2), compared with the cached class if any
    Euler {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Inspect or remove the class cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    Info,
    Clear,
}

fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".cache").join("hilbtail"))
}

fn open_store(dir: Option<PathBuf>) -> anyhow::Result<HilbStore> {
    match dir.or_else(default_cache_dir) {
        Some(dir) => Ok(HilbStore::open(dir.join(CACHE_FILE))?),
        None => Ok(HilbStore::in_memory()),
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let store = open_store(cli.cache_dir)?;
    let outcome = match cli.command {
        Command::Hilb { n, format } => commands::hilb(&store, n, format.format)?,
        Command::Moduli { d, chi, format } => commands::moduli(&store, d, chi, format.format)?,
        Command::Verify { d, format } => commands::verify(&store, d, format.format)?,
        Command::Euler { n, format } => commands::euler(&store, n, format.format)?,
        Command::Cache {
            action: CacheAction::Info,
        } => commands::cache_info(&store),
        Command::Cache {
            action: CacheAction::Clear,
        } => commands::cache_clear(&store)?,
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            for w in &outcome.stderr {
                eprintln!("warning: {w}");
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
