//! `homalg`: batch front end for the Hom-algebra engine.
//!
//! Exit codes: 0 when everything checked passes, 1 when a check or a
//! construction precondition fails, 2 on input, schema or I/O errors.

mod construct;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homalg_core::bundle::Bundle;
use homalg_core::functors::verify_diagram;
use homalg_core::operators::{check_hessian, check_operator};
use homalg_core::report;
use homalg_core::reps::check_rep_with;
use homalg_core::structures::check;
use homalg_core::{CheckOptions, Error, StructureClass};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "homalg", version, about = "Exact checks and constructions for finite-dimensional Hom-algebras")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report or bundle here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check a bundle's structure, or one of its representations, operators or forms.
    Check(CheckArgs),
    /// Build a new bundle from a recipe.
    Construct(construct::ConstructArgs),
    /// Verify the closing alternative/Malcev diagram for two Rota-Baxter operators.
    Diagram(DiagramArgs),
    /// Rewrite a bundle in canonical form.
    Fmt { path: PathBuf },
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    /// Class to check against; defaults to the declared class, then to the
    /// class matching the stored products.
    #[arg(long)]
    class: Option<String>,
    /// Also require the twist to be multiplicative.
    #[arg(long)]
    multiplicativity: bool,
    /// Also check twist equivariance of pre-alternative actions.
    #[arg(long)]
    equivariance: bool,
    /// Check representation `i` instead of the structure.
    #[arg(long, conflicts_with_all = ["operator", "form"])]
    rep: Option<usize>,
    /// Check operator `i` against the structure.
    #[arg(long, conflicts_with = "form")]
    operator: Option<usize>,
    /// Check form `i` as a Hessian structure.
    #[arg(long)]
    form: Option<usize>,
}

#[derive(Args)]
struct DiagramArgs {
    path: PathBuf,
    #[arg(long)]
    operator: usize,
    #[arg(long)]
    operator2: usize,
}

/// A failure with its exit code.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OperatorInvalid(_)
            | Error::NotCommuting
            | Error::NotAMorphism(_)
            | Error::NotMultiplicative(_)
            | Error::NonZeroWeight(_)
            | Error::HessianInvalid(_)
            | Error::EndomorphismInvalid(_)
            | Error::SingularMatrix(_) => 1,
            _ => 2,
        };
        let name = format!("{e:?}");
        let variant = name.split(['(', ' ']).next().unwrap_or_default().to_string();
        Failure { code, message: format!("{variant}: {e}") }
    }
}

pub(crate) fn load(path: &Path) -> Result<Bundle, Failure> {
    Bundle::load(path).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure { code: 2, message: format!("{}: {e}", p.display()) }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Report document: the deterministic part first, timing outside it.
fn document(command: Value, report: Value, exit: u8, elapsed_ms: f64) -> String {
    let doc = json!({
        "deterministic": { "command": command, "report": report, "exit": exit },
        "timing": { "elapsed_ms": elapsed_ms },
    });
    homalg_core::bundle::canonical_json(&doc)
}

fn run_check(args: &CheckArgs, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let start = Instant::now();
    let bundle = load(&args.path)?;
    let opts = CheckOptions { multiplicativity: args.multiplicativity, equivariance: args.equivariance };
    let class = match &args.class {
        Some(c) => Some(StructureClass::from_name(c)?),
        None => bundle.class,
    };
    let r = if let Some(i) = args.rep {
        let rep = bundle.rep(i)?;
        check_rep_with(rep, class.unwrap_or(rep.kind()?.class()), opts)?
    } else if let Some(i) = args.operator {
        check_operator(&bundle.structure, &bundle.witness(i)?)?
    } else if let Some(i) = args.form {
        check_hessian(&bundle.structure, bundle.form(i)?)?
    } else {
        check(&bundle.structure, class.unwrap_or(bundle.structure.natural_class()), opts)?
    };
    let code = u8::from(!r.pass);
    let text = match format {
        Format::Json => {
            let command = json!({
                "command": "check",
                "path": args.path.display().to_string(),
                "class": r.class.name(),
                "multiplicativity": args.multiplicativity,
                "equivariance": args.equivariance,
                "rep": args.rep,
                "operator": args.operator,
                "form": args.form,
            });
            document(command, report::check_json(&r), code, start.elapsed().as_secs_f64() * 1e3)
        }
        Format::Text => report::check_text(&r),
    };
    emit(out, &text)?;
    if format == Format::Text {
        eprintln!("elapsed: {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(code)
}

fn run_diagram(args: &DiagramArgs, format: Format, out: Option<&Path>) -> Result<u8, Failure> {
    let start = Instant::now();
    let bundle = load(&args.path)?;
    let (r1, r2) = (bundle.witness(args.operator)?, bundle.witness(args.operator2)?);
    let d = verify_diagram(&bundle.structure, &r1, &r2)?;
    let code = u8::from(!d.pass());
    let text = match format {
        Format::Json => {
            let command = json!({
                "command": "diagram",
                "path": args.path.display().to_string(),
                "operator": args.operator,
                "operator2": args.operator2,
            });
            document(command, report::diagram_json(&d), code, start.elapsed().as_secs_f64() * 1e3)
        }
        Format::Text => report::diagram_text(&d),
    };
    emit(out, &text)?;
    Ok(code)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let out = cli.output.as_deref();
    match &cli.command {
        Command::Check(args) => run_check(args, cli.format, out),
        Command::Construct(args) => construct::run(args, out),
        Command::Diagram(args) => run_diagram(args, cli.format, out),
        Command::Fmt { path } => {
            let b = load(path)?;
            emit(out, &b.to_json())?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
