mod commands;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use spec::MonoidSpec;

#[derive(Parser)]
#[command(name = "regmon", version, about = "Representations of finite regular monoids over Q")]
struct Cli {
    /// Report elapsed time on stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order of the monoid; for S(G,L) also the orbit-stabilizer count.
    Order { spec: String },
    /// J-class poset and eggbox diagrams.
    Eggbox {
        spec: String,
        /// `k`, `Jk`, `constants` (least class) or `units` (greatest class).
        #[arg(long, conflicts_with = "all")]
        jclass: Option<String>,
        /// Draw every J-class (the default when no class is chosen).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Catalog of irreducible representations of an inverse monoid.
    Irreps {
        spec: String,
        /// Check the sum of squared dimensions and every reduce/induce roundtrip.
        #[arg(long)]
        check: bool,
    },
    /// Build and serialize one representation.
    Rep {
        spec: String,
        /// `mapping`, `specht:(λ)`, `induce:J<k>:<label>` or `reduce:J<k>`.
        #[arg(long)]
        build: String,
        /// Write the representation to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Graph,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] regmon::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use regmon::Error as E;
        match self {
            CliError::Core(E::CapExceeded { .. }) => 3,
            CliError::Core(E::Verification(_) | E::SplitFailed(_) | E::CertificateMismatch) => 4,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let parse = |s: &str| s.parse::<MonoidSpec>().map_err(CliError::from);
    match &cli.command {
        Command::Order { spec } => commands::order(&parse(spec)?),
        Command::Eggbox {
            spec,
            jclass,
            all: _,
            format,
        } => commands::eggbox(&parse(spec)?, jclass.as_deref(), *format),
        Command::Irreps { spec, check } => commands::irreps(&parse(spec)?, *check),
        Command::Rep { spec, build, out } => commands::rep(&parse(spec)?, build, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed_ms {}", start.elapsed().as_millis());
    }
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
