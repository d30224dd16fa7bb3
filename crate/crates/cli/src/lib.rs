//! Batch interface: JSON query documents in, deterministic reports out.
//!
//! Command shape:
//!
//! ```text
//! cohomlen <query> --input FILE [--output FILE] [--format json|text]
//!                  [--param key=value]...
//! ```
//!
//! Exit statuses: 0 success (verdicts such as "no equivariant map exists"
//! are results, not errors), 64 usage/parse errors, 65 data-validation
//! errors, 66 bounded-search failures. Every error prints a single
//! `CODE: message` line to stderr.

pub mod document;
pub mod error;
pub mod params;
pub mod queries;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use document::Document;
use error::{CliError, EXIT_DATA, EXIT_OK};
use params::Params;
use report::Report;

#[derive(Parser)]
#[command(
    name = "cohomlen",
    about = "Exact length calculator for p-torus and torus actions on cohomology spheres",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Length of the pair (X, X^G) for a cohomology sphere
    Length(QueryArgs),
    /// Euler class: line factors and the expanded polynomial
    Euler(QueryArgs),
    /// Consistency check of one space description
    Validate(QueryArgs),
    /// Necessary condition for a G-map between two spheres
    #[command(name = "borsuk-ulam")]
    BorsukUlam(QueryArgs),
    /// Existence decision for a map into a representation sphere
    #[command(name = "map-exists")]
    MapExists(QueryArgs),
    /// Representation sphere with the same dimension profile as the source
    #[command(name = "canonical-target")]
    CanonicalTarget(QueryArgs),
    /// Zero-set dimension bound for an equivariant map
    #[command(name = "bourgin-yang")]
    BourginYang(QueryArgs),
    /// Upper/lower length bounds and refinements
    Bounds(QueryArgs),
    /// Brute-force oracle cross-check of the length formula
    Verify(QueryArgs),
    /// Validate every space in the document
    Lint(QueryArgs),
}

impl Command {
    pub fn query_name(&self) -> &'static str {
        match self {
            Command::Length(_) => "length",
            Command::Euler(_) => "euler",
            Command::Validate(_) => "validate",
            Command::BorsukUlam(_) => "borsuk-ulam",
            Command::MapExists(_) => "map-exists",
            Command::CanonicalTarget(_) => "canonical-target",
            Command::BourginYang(_) => "bourgin-yang",
            Command::Bounds(_) => "bounds",
            Command::Verify(_) => "verify",
            Command::Lint(_) => "lint",
        }
    }

    pub fn args(&self) -> &QueryArgs {
        match self {
            Command::Length(a)
            | Command::Euler(a)
            | Command::Validate(a)
            | Command::BorsukUlam(a)
            | Command::MapExists(a)
            | Command::CanonicalTarget(a)
            | Command::BourginYang(a)
            | Command::Bounds(a)
            | Command::Verify(a)
            | Command::Lint(a) => a,
        }
    }
}

#[derive(Args)]
pub struct QueryArgs {
    /// Query document (JSON)
    #[arg(long)]
    pub input: PathBuf,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Report format
    #[arg(long, default_value = "json", value_parser = ["json", "text"])]
    pub format: String,
    /// Query parameter override, repeatable (key=value)
    #[arg(long = "param")]
    pub params: Vec<String>,
}

fn load_document(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
    Document::parse(&text)
}

/// Full run for one invocation: parse the document, execute, render.
/// Returns the rendered report and the process exit status.
pub fn run(command: &Command) -> Result<(String, i32), CliError> {
    let args = command.args();
    let doc = load_document(&args.input)?;
    let params = Params::new(&doc.parameters, &args.params)?;
    let report: Report = queries::execute(command.query_name(), &doc, params)?;
    let rendered = match args.format.as_str() {
        "text" => report.to_text(),
        _ => report.to_json(),
    };
    let exit = if report.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_DATA
    };
    Ok((rendered, exit))
}

/// Writes the rendered report to the requested sink.
pub fn emit(args: &QueryArgs, rendered: &str) -> Result<(), CliError> {
    match &args.output {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => fs::write(path, rendered)
            .map_err(|e| CliError::parse(format!("cannot write {}: {e}", path.display()))),
    }
}
