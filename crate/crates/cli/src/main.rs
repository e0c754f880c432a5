//! `braidquot`: a calculator for `B_n/[P_n,P_n]`.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use braidquot::word::GRAMMAR;
use braidquot::Error;

/// Largest strand count accepted on the command line.
pub const MAX_N: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "braidquot",
    version,
    about = "Exact arithmetic and conjugacy in B_n/[P_n,P_n]"
)]
#[command(after_help = GRAMMAR)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Increase diagnostic output on stderr (repeatable)
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    /// Centralizer size above which `conj` and `canon` print a warning
    #[arg(long, global = true, default_value_t = 1_000_000, value_name = "SIZE")]
    pub warn_threshold: u64,

    /// Run `conj` and `canon` even when the centralizer exceeds 10^8 elements
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Strands {
    /// Number of strands
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_N as u64))]
    pub n: u64,
}

impl Strands {
    pub fn get(&self) -> usize {
        self.n as usize
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a word
    Eval {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Multiply words left to right
    Mul {
        #[command(flatten)]
        strands: Strands,
        #[arg(required = true, allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Inverse of a word
    Inv {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Integer power of a word
    Pow {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        exponent: i64,
    },
    /// Permutation of a word
    Perm {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Pure coordinates relative to a base with the same permutation
    Coords {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Base word; defaults to the positive section of the permutation
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Orbit-sum normal form within the fiber of a base
    Nf {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Decide conjugacy, with a witness when conjugate
    Conj {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Order of an element
    Order {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Canonical representative of the conjugacy class
    Canon {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Realize Z_p x|_k Z
    VcZp {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
    },
    /// Realize (Z_3 x Z_3) x| Z in B_6 for the k-th automorphism
    VcZ3z3 {
        #[arg(long)]
        k: usize,
    },
    /// Check the bundled table rows
    VerifyTables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        table: Option<u8>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return ExitCode::SUCCESS;
            }
            eprintln!("grammar: {GRAMMAR}");
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Syntax { .. } | Error::IndexOutOfRange { .. } => {
                    eprintln!("grammar: {GRAMMAR}");
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
