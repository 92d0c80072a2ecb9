//! Command-line frontend for `floerq-core`: JSON input formats, report
//! rendering and the `floerq` binary's dispatch.
//!
//! Exit codes: 0 success, 1 input error, 2 internal invariant failure,
//! 3 contradiction found by `ohpoz analyze`.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod formats;
pub mod report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<floerq_core::Error> for CliError {
    fn from(e: floerq_core::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "floerq", version, about = "Mod-2 algebra for Floer homotopy computations on RP^n in CP^n")]
pub struct Cli {
    /// Emit the machine-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The Steenrod algebra and its action on rings.
    #[command(subcommand)]
    Steenrod(SteenrodCmd),
    /// The q_i characteristic classes.
    #[command(subcommand)]
    Qclass(QclassCmd),
    /// Truncated flow categories.
    #[command(subcommand)]
    Flowcat(FlowcatCmd),
    /// Clean-intersection spectral sequence bookkeeping.
    #[command(subcommand)]
    Ohpoz(OhpozCmd),
    /// The RP^n in CP^n report.
    #[command(subcommand)]
    Rpcp(RpcpCmd),
}

#[derive(Debug, Subcommand)]
pub enum SteenrodCmd {
    /// Apply an operation such as "Q1" or "Sq(2,1)" to a ring element.
    Apply {
        #[arg(long)]
        op: String,
        /// rp:n, cp:n, poly:m, sw:m or a ring JSON file.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: String,
    },
    /// Rewrite a sum of Sq-words in the admissible basis.
    Normalize {
        #[arg(long)]
        op: String,
    },
    /// The Milnor primitive Q_i in the admissible basis.
    Milnor {
        #[arg(long)]
        i: u32,
    },
    /// Which Q_i act for a Lagrangian RP^n, or over a given ring spectrum.
    Available(AvailableArgs),
}

#[derive(Debug, Args)]
pub struct AvailableArgs {
    /// Odd n for RP^n in CP^n.
    #[arg(long, conflicts_with_all = ["gate", "i"], required_unless_present = "gate")]
    pub n: Option<i64>,
    /// MU, tauMU:r, HZ or HFp:p, together with --i.
    #[arg(long, requires = "i")]
    pub gate: Option<String>,
    #[arg(long)]
    pub i: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum QclassCmd {
    /// q_i in the universal Stiefel-Whitney classes.
    Universal {
        #[arg(long)]
        i: u32,
        /// Number of Stiefel-Whitney classes; defaults to the stable range.
        #[arg(long)]
        rank: Option<usize>,
    },
    /// q_i of a bundle described in a JSON file.
    Bundle {
        file: PathBuf,
        #[arg(long)]
        i: u32,
    },
    /// q_i of the tangent bundle of RP^n.
    Rpn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        i: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlowcatCmd {
    /// Validate gradings, ordering and d^2 = 0.
    Check {
        file: PathBuf,
        /// f2, fp:p or z.
        #[arg(long, default_value = "f2")]
        coeff: String,
    },
    /// Floer homology of the associated chain complex.
    Homology {
        file: PathBuf,
        #[arg(long, default_value = "f2")]
        coeff: String,
        /// Keep only generators with rank at least this.
        #[arg(long)]
        rank_lo: Option<i64>,
        /// Keep only generators with rank at most this.
        #[arg(long)]
        rank_hi: Option<i64>,
    },
    /// Obstruction groups for the Pontryagin-Thom maps.
    Obstructions {
        file: Option<PathBuf>,
        /// MU, tauMU:r, HZ or HFp:p.
        #[arg(long, default_value = "MU")]
        ring: String,
        /// Largest gap to tabulate when no file is given.
        #[arg(long, default_value_t = 12)]
        max_gap: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OhpozCmd {
    /// Check a scenario file; exits 3 on contradiction.
    Analyze {
        file: PathBuf,
        /// Include the E_1 page.
        #[arg(long)]
        page: bool,
    },
    /// Enumerate Betti profiles that survive the counting argument.
    Search {
        #[arg(long)]
        n: u32,
        /// conn or pt+conn.
        #[arg(long, default_value = "conn")]
        shape: String,
        #[arg(long, default_value_t = 3)]
        cap: u64,
        /// Drop Poincaré duality.
        #[arg(long)]
        open: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum RpcpCmd {
    Report {
        #[arg(long)]
        n: u32,
        /// Residue of the point component; all residues if omitted.
        #[arg(long)]
        r: Option<i64>,
    },
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok((report, code)) => {
            let stdout = if cli.json { report::Envelope::new(report).to_json() } else { report.text() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}
