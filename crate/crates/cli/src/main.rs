use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, FamilyArg};

#[derive(Parser)]
#[command(name = "polycount", version, about = "Exact counts of multivariate polynomials over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Symbolic count tables for n = 0..=nmax.
    Table {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        nmax: usize,
        /// Comma-separated subset of P,I,R,S,Q,A,E.
        #[arg(long, value_delimiter = ',', default_value = "P,I,R")]
        families: Vec<FamilyArg>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One count evaluated at an integer q.
    Eval {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        q: i64,
    },
    /// Error bounds checked against exact counts over a grid.
    CheckBounds {
        /// Comma-separated subset of R,Q,E,I,A.
        #[arg(long, value_delimiter = ',', default_value = "R,Q,E,I")]
        families: Vec<FamilyArg>,
        /// Values of r, as a list `2,3` or a range `2-4`.
        #[arg(long, default_value = "2-3")]
        r: String,
        #[arg(long, default_value = "2-6")]
        n: String,
        #[arg(long, default_value = "2-3")]
        s: String,
        #[arg(long, default_value = "2,3,4,5,7,8,9")]
        q: String,
        /// Exponent of the powerful bound.
        #[arg(long, default_value = "prop")]
        delta: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        zero_bounds: bool,
    },
    /// Brute-force count over GF(p^k) compared with the symbolic count.
    Oracle {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Partitions of n in concise notation.
    Partitions {
        #[arg(long)]
        n: usize,
        /// Print every row from 1 to n.
        #[arg(long)]
        table: bool,
    },
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Table { r, nmax, families, s, format, out } => {
            let text = commands::table(r, nmax, &families, s, format)?;
            commands::emit(&text, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { family, r, n, s, q } => {
            println!("{}", commands::eval(family, r, n, s, q)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckBounds { families, r, n, s, q, delta, format, out, zero_bounds } => {
            let spec = commands::sweep_spec(&families, &r, &n, &s, &q, &delta)?;
            let (text, all_pass) = commands::check_bounds(&spec, format, zero_bounds)?;
            commands::emit(&text, out.as_deref())?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Oracle { family, p, k, r, n, s } => {
            let (line, matched) = commands::oracle(family, p, k, r, n, s)?;
            println!("{line}");
            Ok(if matched { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Partitions { n, table } => {
            print!("{}", commands::partitions(n, table)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("polycount: {e}");
            e.exit_code()
        }
    }
}
