use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mnword::oracle::DEFAULT_BUDGET;

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "mnword",
    version,
    about = "Enumerate, certify and export (m,n)-word lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of intermediate letters; words use the alphabet 0..=m+1.
    #[arg(short = 'm', long = "m", global = true, default_value_t = 1)]
    m: u32,

    /// Word length.
    #[arg(short = 'n', long = "n", global = true, default_value_t = 3)]
    n: usize,

    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Maximum number of words any command may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// List all words in lexicographic order.
    Enumerate,
    /// Minimum letter, support, top count and in-degree.
    Stats {
        /// A single word; all words when omitted.
        #[arg(long)]
        word: Option<String>,
    },
    /// Lattice, extremality, semidistributivity and trimness certificate.
    Certify,
    /// Hasse diagram.
    ExportHasse,
    /// Galois graph on the join-irreducibles.
    Galois,
    /// H-triangle by direct count, compared with its closed form.
    HTriangle,
    /// Scan the conjectured in-degree formula for counterexamples.
    Conjecture {
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        max_a: Option<usize>,
    },
    /// Rebuild W(m,n) by interval doublings and list every stage.
    DoublingTrace,
    /// Run every brute-force cross-check.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

/// How a command ended when it did not simply succeed.
#[derive(Debug)]
enum Failure {
    Usage(String),
    /// Output is still written; the message names the witness.
    Disagreement {
        output: String,
        witness: String,
    },
}

impl Cli {
    fn check_format(&self) -> Result<(), Failure> {
        let ok = match self.format {
            Format::Text | Format::Json => true,
            Format::Dot => matches!(self.command, Command::ExportHasse | Command::Galois),
            Format::Csv => matches!(self.command, Command::HTriangle),
        };
        if ok {
            Ok(())
        } else {
            Err(Failure::Usage(
                format!(
                    "--format {:?} is not available for this command",
                    self.format
                )
                .to_lowercase(),
            ))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = cli.check_format().and_then(|()| commands::run(&cli));
    match result {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Disagreement { output, witness }) => {
            if let Err(e) = emit(&cli, &output) {
                eprintln!("error: {e}");
            }
            eprintln!("disagreement: {witness}");
            ExitCode::from(2)
        }
    }
}
