//! `kequiv` — exact verification of K-equivalence invariants from the
//! command line.
//!
//! Every subcommand assembles its objects (from the built-in gallery or
//! from JSON documents), checks the relevant identities in exact
//! arithmetic, and emits one report. Exit codes: 0 every claim verified,
//! 1 at least one claim refuted, 2 malformed input or configuration,
//! 3 a check was declined by policy (for example an enumeration budget)
//! and nothing was refuted.

mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};
use report::{Report, EXIT_MALFORMED};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kequiv",
    version,
    about = "Exact-arithmetic workbench for K-equivalent pairs: genera, \
             motivic classes, stringy invariants, zeta functions, and jet \
             spaces, all verified with zero tolerance.",
    propagate_version = true
)]
struct Cli {
    /// Report format printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Also write the machine (JSON) report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Compact, line-oriented report for terminals.
    Human,
    /// Canonical JSON; byte-identical across reruns on the same inputs.
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a genus across the space gallery by two independent routes.
    Genus(commands::genus::GenusArgs),
    /// Verify structural identities of the genus engine.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Stringy classes and E-functions from resolved singular examples.
    StringyE(commands::stringy::StringyArgs),
    /// Point counts and zeta functions over small finite fields.
    #[command(subcommand)]
    Zeta(ZetaCommand),
    /// Truncated arc (jet) spaces of birational models.
    #[command(subcommand)]
    Arcs(ArcsCommand),
    /// Inspect the built-in object gallery.
    #[command(subcommand)]
    Gallery(GalleryCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The two-variable functional equation of the elliptic genus, plus
    /// the rank-two version and the normalizations of its Jacobian factor.
    EllipticFe(commands::elliptic_fe::EllipticFeArgs),
    /// The residue-correction (change-of-variable) identity on blow-ups.
    Cov(commands::cov::CovArgs),
    /// Scissor and localized blow-up identities for motivic classes.
    BlowupMotive(commands::blowup_motive::BlowupMotiveArgs),
}

#[derive(Subcommand)]
enum ZetaCommand {
    /// Compare point counts, truncated zeta series, closed rational forms,
    /// and Betti multiplicities of two proper models.
    Compare(commands::zeta_compare::ZetaCompareArgs),
}

#[derive(Subcommand)]
enum ArcsCommand {
    /// Exhaustively verify the jet-level fibration structure of a model.
    Verify(commands::arcs_verify::ArcsVerifyArgs),
}

#[derive(Subcommand)]
enum GalleryCommand {
    /// List gallery objects with canonical digests and round-trip checks.
    List(commands::gallery::GalleryListArgs),
}

/// A configuration or input problem; the run ends with exit code 2 and no
/// report.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<kequiv::docs::DocError> for CliError {
    fn from(e: kequiv::docs::DocError) -> Self {
        CliError(e.to_string())
    }
}

fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Genus(args) => commands::genus::run(args),
        Command::Verify(VerifyCommand::EllipticFe(args)) => commands::elliptic_fe::run(args),
        Command::Verify(VerifyCommand::Cov(args)) => commands::cov::run(args),
        Command::Verify(VerifyCommand::BlowupMotive(args)) => commands::blowup_motive::run(args),
        Command::StringyE(args) => commands::stringy::run(args),
        Command::Zeta(ZetaCommand::Compare(args)) => commands::zeta_compare::run(args),
        Command::Arcs(ArcsCommand::Verify(args)) => commands::arcs_verify::run(args),
        Command::Gallery(GalleryCommand::List(args)) => commands::gallery::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Human => print!("{}", report.render_human()),
                Format::Machine => print!("{}", report.render_machine()),
            }
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, report.render_machine()) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(EXIT_MALFORMED as u8);
                }
            }
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MALFORMED as u8)
        }
    }
}
