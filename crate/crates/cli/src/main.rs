//! Command-line front end for the loop space homology pipeline.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use loopring::catalog::CatalogCase;
use loopring::pipeline::{
    parse_spec, run_pipeline, PipelineOptions, PipelineReport, RingSelection, SpecInput, Stage,
};

#[derive(Parser, Debug)]
#[command(
    name = "loopring",
    version,
    about = "Pontrjagin rings of loop spaces on formal homogeneous spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce the cohomology presentation and stop.
    Cohomology(RunArgs),
    /// Build the minimal model and stop.
    Model(RunArgs),
    /// Compute the homotopy Lie algebra and stop.
    Lie(RunArgs),
    /// Run the full pipeline through the loop space homology.
    Loop(RunArgs),
    /// Run the full pipeline and every verification oracle.
    Verify(RunArgs),
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List the standard catalog cases.
    List(OutputArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Specification file, or `-` for standard input.
    #[arg(
        required_unless_present = "all_catalog",
        conflicts_with = "all_catalog"
    )]
    spec: Option<PathBuf>,
    /// Run every standard catalog case instead of a specification file.
    #[arg(long)]
    all_catalog: bool,
    /// Highest degree to compute.
    #[arg(long, default_value_t = 20)]
    degree_bound: u32,
    /// Coefficient rings to target.
    #[arg(long, value_enum, default_value_t = Ring::Rational)]
    ring: Ring,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ring {
    Rational,
    Integral,
    Both,
}

impl From<Ring> for RingSelection {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Rational => RingSelection::Rational,
            Ring::Integral => RingSelection::Integral,
            Ring::Both => RingSelection::Both,
        }
    }
}

/// Failures that map to exit code 2.
#[derive(Debug)]
enum InputError {
    Io(PathBuf, io::Error),
    Spec(String),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            InputError::Spec(msg) => f.write_str(msg),
        }
    }
}

#[derive(Serialize)]
struct CatalogEntry {
    case: CatalogCase,
    space: String,
    torus_rank: u32,
    loop_group_degrees: Vec<u32>,
    degenerate: bool,
}

fn read_spec(path: &Path) -> Result<SpecInput, InputError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError::Io(path.into(), e))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| InputError::Io(path.into(), e))?
    };
    parse_spec(&text).map_err(|e| InputError::Spec(format!("{}: {e}", path.display())))
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), InputError> {
    match &output.output {
        Some(path) => fs::write(path, text).map_err(|e| InputError::Io(path.clone(), e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| InputError::Io("<stdout>".into(), e)),
    }
}

fn structured<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize to JSON");
    s.push('\n');
    s
}

fn run(args: &RunArgs, stop_after: Stage, verify: bool) -> Result<bool, InputError> {
    let options = PipelineOptions {
        degree_bound: args.degree_bound,
        verify,
        ring: args.ring.into(),
        stop_after,
    };
    let inputs: Vec<SpecInput> = match &args.spec {
        Some(path) => vec![read_spec(path)?],
        None => CatalogCase::standard()
            .into_iter()
            .map(SpecInput::Catalog)
            .collect(),
    };
    let reports: Vec<PipelineReport> = inputs
        .par_iter()
        .map(|input| run_pipeline(input, &options))
        .collect::<Result<_, _>>()
        .map_err(|e| InputError::Spec(e.to_string()))?;
    let text = match (args.output.format, args.all_catalog) {
        (Format::Structured, true) => structured(&reports),
        (Format::Structured, false) => structured(&reports[0]),
        (Format::Text, _) => reports
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(&args.output, &text)?;
    Ok(all_match(&reports))
}

fn all_match(reports: &[PipelineReport]) -> bool {
    reports.iter().all(|r| !r.verdicts.overall().is_mismatch())
}

fn catalog_list(output: &OutputArgs) -> Result<bool, InputError> {
    let entries: Vec<CatalogEntry> = CatalogCase::standard()
        .into_iter()
        .map(|case| CatalogEntry {
            case,
            space: case.space_name(),
            torus_rank: case.torus_rank(),
            loop_group_degrees: case.loop_group_degrees(),
            degenerate: case.is_degenerate(),
        })
        .collect();
    let text = match output.format {
        Format::Structured => structured(&entries),
        Format::Text => entries
            .iter()
            .map(|e| format!("{:<20} {}\n", e.case.to_string(), e.space))
            .collect(),
    };
    emit(output, &text)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Cohomology(args) => run(args, Stage::CartanReduce, false),
        Command::Model(args) => run(args, Stage::Model, false),
        Command::Lie(args) => run(args, Stage::Lie, false),
        Command::Loop(args) => run(args, Stage::Verify, false),
        Command::Verify(args) => run(args, Stage::Verify, true),
        Command::Catalog {
            action: CatalogAction::List(output),
        } => catalog_list(output),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopring::envelope::Verdict;

    fn report() -> PipelineReport {
        let options = PipelineOptions {
            degree_bound: 8,
            verify: true,
            ..PipelineOptions::default()
        };
        run_pipeline(&SpecInput::Catalog(CatalogCase::So8), &options).unwrap()
    }

    #[test]
    fn any_mismatch_fails_the_run() {
        let good = report();
        let mut bad = good.clone();
        bad.verdicts.golden = Verdict::Mismatch { degree: 3 };
        assert!(all_match(std::slice::from_ref(&good)));
        assert!(!all_match(&[good, bad]));
    }

    #[test]
    fn skipped_verdicts_do_not_fail_the_run() {
        let mut r = report();
        r.verdicts.rank = Verdict::Skipped {
            reason: "integral ring not requested".into(),
        };
        assert!(all_match(&[r]));
    }

    #[test]
    fn command_line_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
