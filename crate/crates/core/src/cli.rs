//! The `nes` command-line front end.
//!
//! Exit statuses: 0 on success (and for `aeq`, when the terms are
//! α-equivalent), 1 when `aeq` answers false or a property fails, 2 for
//! usage, input and parse errors. Results go to stdout, diagnostics to
//! stderr.

use std::ffi::OsString;
use std::io::{self, IsTerminal, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::alpha::{aeq, canonicalize};
use crate::atoms::Atom;
use crate::msubst::msubst;
use crate::parser::{eval_meta, parse};
use crate::properties::{property_names, run_properties, GenConfig, PropertyReport};
use crate::term::Term;

#[derive(Parser, Debug)]
#[command(
    name = "nes",
    version,
    about = "Nominal lambda-terms with explicit substitutions",
    after_help = "EXPR arguments are term text, or @FILE to read the text from FILE."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse EXPR, evaluate any {x := u} t, and print the result.
    Parse { expr: String },
    /// Print the free atoms of EXPR, one per line.
    Fv { expr: String },
    /// Exchange atoms X and Y everywhere in EXPR.
    Swap { x: String, y: String, expr: String },
    /// Print {X := U} T.
    Subst { x: String, u: String, t: String },
    /// Decide α-equivalence; exit status 0 iff equivalent.
    Aeq { left: String, right: String },
    /// Print the nameless form, bound variables as #k.
    Canon { expr: String },
    /// Run lemma properties on generated terms.
    Check {
        /// Property to run (repeatable); all properties when absent.
        #[arg(long = "lemma", value_name = "NAME")]
        lemmas: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-size", default_value_t = 20)]
        max_size: usize,
        /// Comma-separated atom pool.
        #[arg(long, value_delimiter = ',', default_value = "x,y,z,w,v")]
        pool: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

/// Failure that ends a command with a given exit status.
struct Exit {
    status: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        status: 2,
        message: message.into(),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_styled(args, out, err, false)
}

/// Like [`run`], for the real process: colors `check` output when stdout is
/// a terminal and `NES_COLOR` is not `0`.
pub fn main_with_env() -> i32 {
    let styled =
        io::stdout().is_terminal() && std::env::var("NES_COLOR").map_or(true, |v| v != "0");
    let stdout = io::stdout();
    let stderr = io::stderr();
    let status = run_styled(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
        styled,
    );
    let _ = io::stdout().flush();
    status
}

fn run_styled<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, styled: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return status;
        }
    };
    match execute(cli.command, out, styled) {
        Ok(status) => status,
        Err(Exit { status, message }) => {
            let _ = writeln!(err, "nes: {message}");
            status
        }
    }
}

fn read_arg(arg: &str) -> Result<String, Exit> {
    match arg.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read `{path}`: {e}")))
        }
        None => Ok(arg.to_owned()),
    }
}

fn term_arg(arg: &str) -> Result<Term, Exit> {
    let text = read_arg(arg)?;
    let expr = parse(&text).map_err(|e| usage(format!("parse error at {e}")))?;
    Ok(eval_meta(&expr))
}

fn atom_arg(arg: &str) -> Result<Atom, Exit> {
    arg.trim()
        .parse()
        .map_err(|e| usage(format!("invalid atom `{arg}`: {e}")))
}

fn io_err(e: io::Error) -> Exit {
    Exit {
        status: 2,
        message: format!("write error: {e}"),
    }
}

fn execute(command: Command, out: &mut dyn Write, styled: bool) -> Result<i32, Exit> {
    match command {
        Command::Parse { expr } => {
            writeln!(out, "{}", term_arg(&expr)?).map_err(io_err)?;
            Ok(0)
        }
        Command::Fv { expr } => {
            for a in &term_arg(&expr)?.fv() {
                writeln!(out, "{a}").map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Swap { x, y, expr } => {
            let (x, y) = (atom_arg(&x)?, atom_arg(&y)?);
            writeln!(out, "{}", term_arg(&expr)?.swap(&x, &y)).map_err(io_err)?;
            Ok(0)
        }
        Command::Subst { x, u, t } => {
            let x = atom_arg(&x)?;
            let (u, t) = (term_arg(&u)?, term_arg(&t)?);
            writeln!(out, "{}", msubst(&t, &u, &x)).map_err(io_err)?;
            Ok(0)
        }
        Command::Aeq { left, right } => {
            let equal = aeq(&term_arg(&left)?, &term_arg(&right)?);
            writeln!(out, "{equal}").map_err(io_err)?;
            Ok(if equal { 0 } else { 1 })
        }
        Command::Canon { expr } => {
            writeln!(out, "{}", canonicalize(&term_arg(&expr)?)).map_err(io_err)?;
            Ok(0)
        }
        Command::Check {
            lemmas,
            cases,
            seed,
            max_size,
            pool,
            format,
        } => {
            let atom_pool = pool.iter().map(|a| atom_arg(a)).collect::<Result<_, _>>()?;
            let config = GenConfig {
                max_size,
                atom_pool,
                seed,
                cases,
            };
            let names: Vec<String> = if lemmas.is_empty() {
                property_names().into_iter().map(String::from).collect()
            } else {
                lemmas
            };
            let reports = run_properties(&names, &config).map_err(|e| usage(e.to_string()))?;
            let text = match format {
                Format::Tsv => reports.iter().map(PropertyReport::to_tsv).collect(),
                Format::Text => render_text(&reports, styled),
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(if reports.iter().all(PropertyReport::passed) {
                0
            } else {
                1
            })
        }
    }
}

fn render_text(reports: &[PropertyReport], styled: bool) -> String {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in reports {
        let tag = match (r.passed(), styled) {
            (true, false) => "ok  ".to_owned(),
            (false, false) => "FAIL".to_owned(),
            (true, true) => "\x1b[32mok\x1b[0m  ".to_owned(),
            (false, true) => "\x1b[31mFAIL\x1b[0m".to_owned(),
        };
        s.push_str(&format!(
            "{tag}  {:<width$}  {} cases, {} failures, seed {}\n",
            r.name, r.cases_run, r.failures, r.seed
        ));
        if let Some(cx) = &r.counterexample {
            s.push_str("      counterexample:\n");
            for line in cx.lines() {
                s.push_str(&format!("        {line}\n"));
            }
        }
    }
    let failing = reports.iter().filter(|r| !r.passed()).count();
    let noun = if reports.len() == 1 {
        "property"
    } else {
        "properties"
    };
    s.push_str(&format!("{} {noun}, {failing} failing\n", reports.len()));
    s
}
