use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::Rational64;
use sccckit::born::{self, MatrixWorld, QuotientWorld};
use sccckit::models::{self, SuiteConfig};
use sccckit::{ortho, protocols, wproj, MatrixLiteral, Morphism, Tolerance, VerificationReport};

#[derive(Parser)]
#[command(name = "sccckit", version, about = "Randomized law checks for compact closed matrix models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a protocol.
    Protocol {
        #[command(subcommand)]
        protocol: Protocol,
    },
    /// Shorthand for `verify wproj`.
    Wproj {
        #[command(subcommand)]
        action: CheckAction,
    },
    /// Shorthand for `verify ortho`.
    Ortho {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Shorthand for `verify born`.
    Born {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand)]
enum CheckAction {
    Check(RunArgs),
}

#[derive(Subcommand)]
enum VerifyAction {
    Verify(RunArgs),
}

#[derive(Subcommand)]
enum Protocol {
    /// Teleport one state given by `--state`, or `--trials` random states.
    Teleport {
        /// A JSON list of `[re, im]` pairs, or a full matrix literal.
        #[arg(long)]
        state: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Sccc,
    Wproj,
    PrepState,
    Ortho,
    Born,
    Equivalence,
    Protocols,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// fdhilb, rel, weights, transpose-complex, wproj:fdhilb or corrupt-trace:fdhilb.
    #[arg(long, default_value = "fdhilb")]
    model: String,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, env = "SCCCKIT_SEED", default_value_t = 7)]
    seed: u64,
    /// Relative tolerance for approximate equality.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, default_value_t = 6)]
    max_dim: usize,
    /// Exponent of the valuation for the born suite: 1, 1/2 or 2.
    #[arg(long, default_value = "1")]
    nu: String,
    /// Write the JSON report to PATH, or to stdout when no path is given.
    #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
    json: Option<String>,
}

impl RunArgs {
    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            trials: self.trials,
            seed: self.seed,
            tolerance: Tolerance::new(self.tolerance),
            max_dim: self.max_dim,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("unknown model `{model}` for {suite}; expected one of: {allowed}")]
    UnknownModel { model: String, suite: &'static str, allowed: &'static str },
    #[error("unsupported exponent `{0}`; expected 1, 1/2 or 2")]
    UnknownNu(String),
    #[error(transparent)]
    Core(#[from] sccckit::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    fn is_usage(&self) -> bool {
        matches!(self, CliError::UnknownModel { .. } | CliError::UnknownNu(_))
    }
}

#[derive(Clone, Copy, PartialEq)]
enum ModelName {
    Fdhilb,
    Rel,
    Weights,
    TransposeComplex,
    Wproj,
    CorruptTrace,
}

impl FromStr for ModelName {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "fdhilb" => ModelName::Fdhilb,
            "rel" | "boolean" => ModelName::Rel,
            "weights" => ModelName::Weights,
            "transpose-complex" => ModelName::TransposeComplex,
            "wproj:fdhilb" | "wproj" => ModelName::Wproj,
            "corrupt-trace:fdhilb" => ModelName::CorruptTrace,
            _ => return Err(()),
        })
    }
}

fn model_for(name: &str, suite: &'static str, allowed: &'static str) -> Result<ModelName, CliError> {
    let unknown = || CliError::UnknownModel { model: name.to_owned(), suite, allowed };
    let model = name.parse::<ModelName>().map_err(|_| unknown())?;
    let listed = allowed.split(", ").any(|a| a.parse::<ModelName>() == Ok(model));
    if listed {
        Ok(model)
    } else {
        Err(unknown())
    }
}

fn parse_nu(text: &str) -> Result<Rational64, CliError> {
    let nu = match text.trim() {
        "0.5" => Rational64::new(1, 2),
        t => Rational64::from_str(t).map_err(|_| CliError::UnknownNu(text.to_owned()))?,
    };
    let allowed = [Rational64::from_integer(1), Rational64::new(1, 2), Rational64::from_integer(2)];
    if allowed.contains(&nu) {
        Ok(nu)
    } else {
        Err(CliError::UnknownNu(text.to_owned()))
    }
}

fn run_suite(suite: Suite, run: &RunArgs) -> Result<VerificationReport, CliError> {
    let cfg = run.config();
    let report = match suite {
        Suite::Sccc => match model_for(&run.model, "sccc", "fdhilb, rel, weights, transpose-complex, wproj:fdhilb")? {
            ModelName::Fdhilb => models::verify_model_axioms(&models::fdhilb(), &cfg),
            ModelName::Rel => models::verify_model_axioms(&models::rel(), &cfg),
            ModelName::Weights => models::verify_model_axioms(&models::weights(), &cfg),
            ModelName::TransposeComplex => models::verify_model_axioms(&models::transpose_complex(), &cfg),
            _ => wproj::verify_wproj(&models::fdhilb(), &cfg),
        },
        Suite::Wproj => {
            model_for(&run.model, "wproj", "fdhilb, wproj:fdhilb")?;
            wproj::verify_wproj(&models::fdhilb(), &cfg)
        }
        Suite::PrepState => match model_for(&run.model, "prep-state", "fdhilb, wproj:fdhilb, rel, weights")? {
            ModelName::Fdhilb => wproj::check_prep_state_fdhilb(&cfg),
            ModelName::Wproj => wproj::check_prep_state_wproj(&cfg),
            ModelName::Rel => wproj::check_prep_state_semiring(&models::rel(), &cfg),
            _ => wproj::check_prep_state_semiring(&models::weights(), &cfg),
        },
        Suite::Ortho => match model_for(&run.model, "ortho", "fdhilb, rel, weights")? {
            ModelName::Fdhilb => ortho::verify_ortho_fdhilb(&models::fdhilb(), &cfg),
            ModelName::Rel => ortho::verify_ortho(&models::rel(), &cfg),
            _ => ortho::verify_ortho(&models::weights(), &cfg),
        },
        Suite::Born => {
            let nu = parse_nu(&run.nu)?;
            match model_for(&run.model, "born", "fdhilb, wproj:fdhilb, corrupt-trace:fdhilb")? {
                ModelName::Fdhilb => {
                    let mut r = born::verify_born(&MatrixWorld::fdhilb(), &cfg, nu)?;
                    for c in born::scalar_arithmetic_checks().into_iter().chain(born::positivity_checks(&cfg)) {
                        r.push(c);
                    }
                    r
                }
                ModelName::Wproj => born::verify_born(&QuotientWorld, &cfg, nu)?,
                _ => born::verify_born(&MatrixWorld::corrupted(), &cfg, nu)?,
            }
        }
        Suite::Equivalence => {
            match model_for(&run.model, "equivalence", "fdhilb, wproj:fdhilb, corrupt-trace:fdhilb")? {
                ModelName::Fdhilb => born::check_theorem_equivalence(&MatrixWorld::fdhilb(), &cfg)?,
                ModelName::Wproj => born::check_theorem_equivalence(&QuotientWorld, &cfg)?,
                _ => born::check_theorem_equivalence(&MatrixWorld::corrupted(), &cfg)?,
            }
        }
        Suite::Protocols => {
            model_for(&run.model, "protocols", "fdhilb")?;
            protocols::verify_protocols(&cfg)?
        }
    };
    Ok(report)
}

fn run_teleport(state: Option<&str>, run: &RunArgs) -> Result<VerificationReport, CliError> {
    model_for(&run.model, "teleport", "fdhilb, wproj:fdhilb")?;
    let cfg = run.config();
    match state {
        Some(text) => {
            let psi: Morphism<Complex64> = MatrixLiteral::parse(text, "Q")?.to_morphism()?;
            Ok(protocols::run_teleportation(&psi, &cfg)?)
        }
        None => Ok(protocols::verify_teleportation(&cfg)?),
    }
}

fn emit_report(report: &VerificationReport, json: Option<&str>) -> Result<(), CliError> {
    match json {
        Some("-") => println!("{}", report.to_json()),
        Some(path) => {
            fs::write(path, report.to_json() + "\n").map_err(|source| CliError::Io { path: path.into(), source })?;
            print!("{}", report.to_text());
        }
        None => print!("{}", report.to_text()),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, run) = match &cli.command {
        Command::Verify { suite, run } => (run_suite(*suite, run), run),
        Command::Wproj { action: CheckAction::Check(run) } => (run_suite(Suite::Wproj, run), run),
        Command::Ortho { action: VerifyAction::Verify(run) } => (run_suite(Suite::Ortho, run), run),
        Command::Born { action: VerifyAction::Verify(run) } => (run_suite(Suite::Born, run), run),
        Command::Protocol { protocol: Protocol::Teleport { state, run } } => (run_teleport(state.as_deref(), run), run),
    };
    let result = outcome.and_then(|report| {
        emit_report(&report, run.json.as_deref())?;
        Ok(report.passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_usage() {
                eprintln!("\n{}", Cli::command().render_usage());
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
