//! `leech-cusp`: lattice verification, root reduction with certificates,
//! certificate checking and the reproducible root sampler.
//!
//! Every command prints one JSON report on stdout. Numbers are exact: integers,
//! `[n, d]` rationals and the crate's quadratic encodings, never decimals.
//! Exit codes: 0 success, 2 parse or validation error, 3 failed mathematical
//! check, 4 no certified reduction step found.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "leech-cusp", version, about = "Exact Leech-lattice cusp geometry and certified root reduction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check minimal norm 6, Λ = θΛ* and det 729 for the built or a supplied basis.
    VerifyLattice {
        /// Also count the norm-6 vectors (expect 196560).
        #[arg(long)]
        full_enumeration: bool,
        /// JSON basis to check instead of the built one: a list of twelve
        /// vectors, or an object with a "basis" field.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Report m, the height and the Leech / m = θ classification of a root.
    Classify { input: PathBuf },
    /// Reduce a root to a Leech root and write the certificate.
    Reduce {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Re-check a certificate written by `reduce`.
    VerifyCert { certificate: PathBuf },
    /// Recompute the ball-overlap constants for (λ₉; θ, -1).
    #[command(name = "lemma54")]
    OverlapConstants,
    /// Corner table of the region containing y for a given |m|².
    Corners {
        #[arg(long)]
        m_sq: i64,
    },
    /// Random roots from words in Leech triflections and translations.
    SampleRoots {
        #[arg(short = 'n', long, default_value_t = 10)]
        count: usize,
        #[arg(short = 'w', long, default_value_t = 8)]
        max_word: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the roots here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyLattice { full_enumeration, basis } => commands::verify_lattice(full_enumeration, basis.as_deref()),
        Command::Classify { input } => commands::classify(&input),
        Command::Reduce { input, output } => commands::reduce(&input, &output),
        Command::VerifyCert { certificate } => commands::verify_cert(&certificate),
        Command::OverlapConstants => commands::overlap_constants(),
        Command::Corners { m_sq } => commands::corners(m_sq),
        Command::SampleRoots { count, max_word, seed, output } => commands::sample_roots(count, max_word, seed, output.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
