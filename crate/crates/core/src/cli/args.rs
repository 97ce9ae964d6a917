//! Argument parsing and I/O for the `homnambu` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::{
    cmd_check, cmd_classify, cmd_examples_list, cmd_induce, cmd_jacobian, cmd_solve_beta, cmd_twist, fixtures,
    load_input, prepare, suite, CheckKind, JacobianCommand, Model, Prepare, RunReport, TripleNames, EXIT_USAGE,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "homnambu", version, about = "Exact Hom-Lie and Hom-Nambu-Lie algebra workbench")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Document path, or `fixture:NAME` for a built-in example.
    #[arg(long)]
    input: String,
    /// Leave the document's constraints unapplied.
    #[arg(long)]
    ignore_constraints: bool,
    /// Assign a parameter after the constraints are applied (repeatable).
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run axiom and hypothesis checks.
    Check {
        #[command(flatten)]
        input: Input,
        /// Map to check; repeat for several. For compat and hom-nambu the
        /// first two are alpha and beta.
        #[arg(long = "map")]
        maps: Vec<String>,
        #[arg(long)]
        functional: Option<String>,
        /// Comma-separated: skew, hom-jacobi, trace, hom-nambu, endo, compat.
        #[arg(long = "check", value_delimiter = ',')]
        checks: Vec<String>,
    },
    /// Build the ternary algebra induced by a trace function.
    Induce {
        #[command(flatten)]
        input: Input,
        /// alpha, then beta (defaults: `alpha`/`id`, then `beta`/alpha).
        #[arg(long = "map")]
        maps: Vec<String>,
        #[arg(long)]
        functional: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Produce the document even when a hypothesis fails.
        #[arg(long)]
        force: bool,
    },
    /// Classify a compatible triple.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long = "map")]
        maps: Vec<String>,
        #[arg(long)]
        functional: Option<String>,
    },
    /// Solve for every beta compatible with a given alpha and tau.
    SolveBeta {
        #[command(flatten)]
        input: Input,
        #[arg(long = "map")]
        map: Option<String>,
        #[arg(long)]
        functional: Option<String>,
    },
    /// Twist a ternary algebra by an endomorphism.
    Twist {
        #[command(flatten)]
        input: Input,
        #[arg(long = "map")]
        map: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Jacobian bracket on polynomials in x1, x2, x3.
    Jacobian {
        #[command(subcommand)]
        command: JacobianArgs,
    },
    /// List, show or run the built-in examples.
    Examples {
        /// Print one fixture document.
        #[arg(long)]
        show: Option<String>,
        /// Run every worked example end to end.
        #[arg(long)]
        all_paper_examples: bool,
    },
    /// Rewrite a document in canonical form.
    Format {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum JacobianArgs {
    /// Evaluate [f, g, h].
    Bracket {
        #[arg(num_args = 3, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Check the fundamental identity on five polynomials, or on the
    /// built-in sample when none are given.
    FiCheck {
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Check the identity twisted by a unimodular polynomial map.
    TwistCheck {
        /// Components of gamma, comma separated.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
    },
}

/// What a command hands back for printing.
struct Outcome {
    report: Option<RunReport>,
    document: Option<String>,
    out: Option<PathBuf>,
}

impl Outcome {
    fn report(r: RunReport) -> Self {
        Outcome { report: Some(r), document: None, out: None }
    }
}

fn load(input: &Input, r: &mut RunReport) -> Result<Model> {
    let m = load_input(&input.input)?;
    prepare(
        &m,
        &Prepare { ignore_constraints: input.ignore_constraints, set: input.set.clone() },
        r,
    )
}

/// Moves notes gathered while preparing the input into the command report.
fn with_notes(mut r: RunReport, notes: RunReport) -> RunReport {
    let mut all = notes.notes;
    all.append(&mut r.notes);
    r.notes = all;
    r
}

fn names(maps: &[String], functional: Option<String>) -> TripleNames {
    TripleNames { tau: functional, alpha: maps.first().cloned(), beta: maps.get(1).cloned() }
}

fn dispatch(echo: &str, command: Command) -> Result<Outcome> {
    let mut pre = RunReport::new(echo);
    Ok(match command {
        Command::Check { input, maps, functional, checks } => {
            let m = load(&input, &mut pre)?;
            let checks = checks.iter().map(|c| CheckKind::parse(c)).collect::<Result<Vec<_>>>()?;
            Outcome::report(with_notes(cmd_check(echo, &m, &maps, functional.as_deref(), &checks)?, pre))
        }
        Command::Induce { input, maps, functional, out, force } => {
            let m = load(&input, &mut pre)?;
            let (r, doc) = cmd_induce(echo, &m, &names(&maps, functional), force)?;
            Outcome { report: Some(with_notes(r, pre)), document: doc.map(|d| d.to_json()), out }
        }
        Command::Classify { input, maps, functional } => {
            let m = load(&input, &mut pre)?;
            Outcome::report(with_notes(cmd_classify(echo, &m, &names(&maps, functional))?, pre))
        }
        Command::SolveBeta { input, map, functional } => {
            let m = load(&input, &mut pre)?;
            let n = TripleNames { tau: functional, alpha: map, beta: None };
            Outcome::report(with_notes(cmd_solve_beta(echo, &m, &n)?, pre))
        }
        Command::Twist { input, map, out } => {
            let m = load(&input, &mut pre)?;
            let (r, doc) = cmd_twist(echo, &m, &map)?;
            Outcome { report: Some(with_notes(r, pre)), document: doc.map(|d| d.to_json()), out }
        }
        Command::Jacobian { command } => {
            let r = match command {
                JacobianArgs::Bracket { polys } => cmd_jacobian(echo, JacobianCommand::Bracket, &polys, None)?,
                JacobianArgs::FiCheck { polys } => cmd_jacobian(echo, JacobianCommand::FiCheck, &polys, None)?,
                JacobianArgs::TwistCheck { gamma, polys } => {
                    cmd_jacobian(echo, JacobianCommand::TwistCheck, &polys, gamma.as_deref())?
                }
            };
            Outcome::report(r)
        }
        Command::Examples { show: Some(name), .. } => {
            let text = fixtures::get(&name).ok_or(Error::UnknownName(name))?;
            Outcome { report: None, document: Some(text.to_string()), out: None }
        }
        Command::Examples { all_paper_examples: true, .. } => Outcome::report(suite::run_examples(echo)?),
        Command::Examples { .. } => Outcome::report(cmd_examples_list(echo)),
        Command::Format { input, out } => {
            let m = load_input(&input.input)?;
            Outcome { report: None, document: Some(m.to_json()), out }
        }
    })
}

fn render(r: &RunReport, format: Format) -> String {
    match format {
        Format::Text => r.render_text(),
        Format::Json => r.render_json(),
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// status: 0 when every check holds, 1 when one fails, 2 on usage or
/// validation errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let echo = std::iter::once("homnambu".to_string())
        .chain(argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    let format = cli.format;
    let outcome = match dispatch(&echo, cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let code = outcome.report.as_ref().map_or(0, RunReport::exit_code);
    let mut stdout = std::io::stdout().lock();
    match (&outcome.document, &outcome.out) {
        (Some(doc), Some(path)) => {
            if let Err(e) = std::fs::write(path, doc) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            if let Some(r) = &outcome.report {
                let _ = stdout.write_all(render(r, format).as_bytes());
            }
        }
        (Some(doc), None) => {
            // The document owns stdout; the report goes to stderr.
            if let Some(r) = &outcome.report {
                eprint!("{}", render(r, format));
            }
            let _ = stdout.write_all(doc.as_bytes());
        }
        (None, _) => {
            if let Some(r) = &outcome.report {
                let _ = stdout.write_all(render(r, format).as_bytes());
            }
        }
    }
    code
}
