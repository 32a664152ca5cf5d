//! Command-line frontend: exact X-rank computations and claim verifiers
//! with machine-checkable JSON output.
//!
//! Results go to standard output, diagnostics to standard error. Exit codes:
//! 0 verified/computed, 1 refuted, 2 invalid input, 3 undecided because a
//! resource limit was hit. Identical (command, seed) invocations produce
//! byte-identical output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use xrank_core::error::Error;

mod codec;
mod commands;

#[derive(Parser)]
#[command(
    name = "xrank",
    version,
    about = "Exact X-rank computations for binary forms, plane cubics, and space curves"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Waring rank of a binary form from a polynomial JSON file.
    RankBinary {
        /// Path to the form, {"vars": 2, "terms": [...]}.
        #[arg(long)]
        form: PathBuf,
    },
    /// Waring rank of a ternary cubic from a polynomial JSON file.
    RankCubic {
        /// Path to the form, {"vars": 3, "terms": [...]}.
        #[arg(long)]
        form: PathBuf,
        /// Also print the structured certificate (decomposition or scheme).
        #[arg(long)]
        decompose: bool,
    },
    /// Rank of a point with respect to an embedded rational curve.
    RankCurvePoint {
        /// Path to the curve, {"ambient", "degree", "components"}.
        #[arg(long)]
        curve: PathBuf,
        /// Path to the point, an array of "num/den" strings.
        #[arg(long)]
        point: PathBuf,
    },
    /// Claim verifiers producing evidence-carrying reports.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Run the whole verification battery and write an aggregate report.
    Report {
        /// Output path for the aggregate JSON report.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Numeric finiteness routes for a degree-d genus-g space curve.
    Ii1 {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        g: i64,
    },
    /// Tangent-line contact and rank-3 samples for the rational normal form
    /// curve (z0^d, z0^{d-1} z1, a2 z0 z1^{d-1}, a3 z1^d).
    Ii0 {
        #[arg(long)]
        d: usize,
        /// Coefficient a2, a canonical rational such as 2 or -1/2.
        #[arg(long)]
        a2: String,
        /// Coefficient a3, a canonical rational.
        #[arg(long)]
        a3: String,
        /// How many rank-2 sample points to certify.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Stall tangents of a projected quartic in P^3 and the rank of the
    /// tangent-intersection point.
    Piene {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Scroll suite: intersection numbers, genus, system dimensions, a
    /// seeded smooth member, and maximal rank on the contracted line.
    F1 {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The six-case dimension ledger for rank-3 loci of plane quartics.
    QuarticLedger,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::RankBinary { form } => commands::rank_binary(&form),
        Cmd::RankCubic { form, decompose } => commands::rank_cubic(&form, decompose),
        Cmd::RankCurvePoint { curve, point } => commands::rank_curve_point(&curve, &point),
        Cmd::Verify { what } => match what {
            VerifyCmd::Ii1 { d, g } => commands::verify_ii1(d, g),
            VerifyCmd::Ii0 { d, a2, a3, samples } => commands::verify_ii0(d, &a2, &a3, samples),
            VerifyCmd::Piene { seed } => commands::verify_piene(seed),
            VerifyCmd::F1 { d, seed } => commands::verify_f1(d, seed),
            VerifyCmd::QuarticLedger => commands::verify_quartic_ledger(),
        },
        Cmd::Report { out } => commands::report(&out),
    };
    match outcome {
        Ok((value, code)) => {
            println!("{value:#}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Undecided { .. } => ExitCode::from(3),
                Error::InvalidInput(_) | Error::UnsupportedInstance(_) => ExitCode::from(2),
            }
        }
    }
}
