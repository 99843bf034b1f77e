use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use relparabose::cli::{self, CliError};
use relparabose::realize::RealizationMode;

/// Exact verification tools for the relative parabose set and its
/// paraparticle realizations.
#[derive(Parser)]
#[command(name = "relparabose", version, about)]
struct Cli {
    /// Emit the report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Print elapsed wall time to stderr
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the four quadruple-bracket identities over free symbols
    Identities,
    /// Build L(m,n) and run the graded axiom suite
    CheckPbf {
        /// Number of paraboson modes
        #[arg(long)]
        m: u32,
        /// Number of parafermion modes
        #[arg(long)]
        n: u32,
        /// Also verify relations and table against truncated Fock matrices
        #[arg(long)]
        oracle: bool,
        /// Total boson occupation cutoff for the oracle
        #[arg(long, default_value_t = 5)]
        cutoff: u32,
        /// Write the exported algebra as JSON to this path
        #[arg(long, value_name = "FILE")]
        dump_algebra: Option<PathBuf>,
    },
    /// Load an algebra file, build its paraparticle realization, verify it
    Realize {
        /// Algebra file (JSON)
        file: PathBuf,
        /// Bilinear families to use: mixed, paraboson, or parafermion
        #[arg(long, default_value = "mixed")]
        mode: String,
        /// Also verify the Hopf-compatibility conditions
        #[arg(long)]
        hopf: bool,
    },
    /// Verify the braided Hopf axioms for L(m,n)
    CheckHopf {
        /// Number of paraboson modes
        #[arg(long)]
        m: u32,
        /// Number of parafermion modes
        #[arg(long)]
        n: u32,
        /// Check all normal-form words up to this length
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Identities => Ok(cli::run_identities()),
        Command::CheckPbf { m, n, oracle, cutoff, dump_algebra } => {
            cli::run_check_pbf(*m, *n, *oracle, *cutoff, dump_algebra.as_deref())
        }
        Command::Realize { file, mode, hopf } => match mode.parse::<RealizationMode>() {
            Ok(mode) => cli::run_realize(file, mode, *hopf),
            Err(msg) => Err(CliError::Usage(msg)),
        },
        Command::CheckHopf { m, n, max_len } => cli::run_check_hopf(*m, *n, *max_len),
    };
    let code = match result {
        Ok(report) => {
            let code = cli::report_exit_code(&report);
            print_report(report.with_exit_status(code), cli.json);
            code
        }
        Err(CliError::Validation(report)) => {
            print_report(report.with_exit_status(cli::EXIT_INVALID_INPUT), cli.json);
            cli::EXIT_INVALID_INPUT
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    if cli.timing {
        eprintln!("elapsed: {:?}", start.elapsed());
    }
    ExitCode::from(code as u8)
}

fn print_report(report: relparabose::report::Report, json: bool) {
    if json {
        print!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
}
