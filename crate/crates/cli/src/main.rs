mod document;
mod input;
mod report;
mod verify;

use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use minimal4::{
    build, canonical_connected_sum, complete_intersection_b2, rationally_equivalent, BuildOptions, Example,
    SullivanError, DEFAULT_BASIS_GUARD, DEFAULT_MAX_DEGREE,
};

use crate::document::ModelDocument;
use crate::input::{load_form, parse_list, parse_pair, resolve, Source};

/// Exit statuses: 0 success, 1 failed check, 2 bad input, 3 guard exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Guard,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        match s {
            Status::Ok => ExitCode::SUCCESS,
            Status::Failed => ExitCode::from(1),
            Status::Guard => ExitCode::from(3),
        }
    }
}

#[derive(Parser)]
#[command(name = "minimal4", version, about = "Rational homotopy ranks of simply connected closed four-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Args, Clone)]
struct SourceArgs {
    /// Second Betti number.
    #[arg(long)]
    b2: Option<usize>,
    /// Signature split as b2+,b2-.
    #[arg(long, value_name = "P,Q")]
    split: Option<String>,
    /// Intersection form: JSON file, `e8`, `hyperbolic`, `diag:a,b,..` or `sum:P,Q`.
    #[arg(long, value_name = "PATH")]
    form: Option<String>,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: u32,
    /// Largest monomial basis enumerated in a single degree.
    #[arg(long, default_value_t = DEFAULT_BASIS_GUARD)]
    guard: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form ranks, optionally checked against the model engine.
    Ranks {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Also build the minimal model and compare.
        #[arg(long)]
        engine: bool,
    },
    /// Minimal model generators and differentials.
    Model {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Decide rational equivalence of two forms.
    Classify {
        /// Forms as JSON paths or builtins (`e8`, `hyperbolic`, `diag:1,-1`, `sum:P,Q`).
        #[arg(num_args = 2, required = true)]
        forms: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Ranks for catalogued surfaces.
    Examples {
        #[arg(value_enum)]
        which: Catalog,
        /// Degree for `hypersurface`, degree list for `ci`, P,Q for `connected-sum`.
        params: Option<String>,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        engine: bool,
    },
    /// Build models and run every invariant check.
    Verify {
        /// Check a single b2 instead of the range 0..=6.
        #[arg(long)]
        b2: Option<usize>,
        #[arg(long, value_name = "P,Q")]
        split: Option<String>,
        /// Check every signature split of each b2.
        #[arg(long)]
        all_splits: bool,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[arg(long, default_value_t = DEFAULT_BASIS_GUARD)]
        guard: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Verify a model document instead of building.
        #[arg(long, hide = true, value_name = "PATH")]
        fixture: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Catalog {
    Hypersurface,
    Ci,
    K3,
    ConnectedSum,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Status> {
    match command {
        Command::Ranks { source, run, engine } => {
            let src = resolve(source.b2, source.split.as_deref(), source.form.as_deref())?;
            Ok(cmd_ranks(&src, &run, engine, None))
        }
        Command::Model { source, run } => {
            let src = resolve(source.b2, source.split.as_deref(), source.form.as_deref())?;
            Ok(cmd_model(&src, &run))
        }
        Command::Classify { forms, format } => cmd_classify(&forms[0], &forms[1], format),
        Command::Examples { which, params, run, engine } => {
            let example = catalog_entry(which, params.as_deref())?;
            let b2 = example.b2()? as usize;
            let mut src = Source::from_b2(b2, example.split())?;
            src.label = example.label();
            Ok(cmd_ranks(&src, &run, engine, Some(&example)))
        }
        Command::Verify { b2, split, all_splits, max_degree, guard, format, fixture } => {
            if let Some(path) = fixture {
                return verify::verify_fixture(&path, guard, format);
            }
            let jobs = verify::plan(b2, split.as_deref().map(parse_pair).transpose()?, all_splits, max_degree)?;
            Ok(verify::run_jobs(&jobs, guard, format))
        }
    }
}

fn catalog_entry(which: Catalog, params: Option<&str>) -> Result<Example> {
    let need = |what: &str| params.with_context(|| format!("`{what}` needs a parameter"));
    Ok(match which {
        Catalog::Hypersurface => {
            let d: u64 = need("hypersurface")?.trim().parse().context("hypersurface degree must be an integer")?;
            Example::Hypersurface(d)
        }
        Catalog::Ci => {
            let ds = parse_list(need("ci")?)?;
            complete_intersection_b2(&ds)?;
            Example::CompleteIntersection(ds)
        }
        Catalog::K3 => Example::K3,
        Catalog::ConnectedSum => {
            let (p, q) = parse_pair(need("connected-sum")?)?;
            Example::ConnectedSum(p, q)
        }
    })
}

fn options(run: &RunArgs) -> BuildOptions {
    BuildOptions { guard: run.guard, ..Default::default() }
}

fn cmd_ranks(src: &Source, run: &RunArgs, engine: bool, example: Option<&Example>) -> Status {
    let formula = minimal4::closed_form_ranks(src.b2 as u64, run.max_degree);
    let mut status = Status::Ok;
    let mut note = None;
    let engine_table = if engine {
        match build(&src.algebra(), run.max_degree, &options(run)) {
            Ok(out) => Some((out.ranks, run.max_degree)),
            Err(SullivanError::GuardExceeded { source, completed, partial }) => {
                status = Status::Guard;
                note = Some(format!("engine stopped: {source}"));
                Some((partial, completed))
            }
            Err(e) => {
                status = Status::Failed;
                note = Some(format!("engine failed: {e}"));
                None
            }
        }
    } else {
        None
    };
    let r = report::RankReport::new(src, run.max_degree, &formula, engine_table.as_ref(), example, note);
    if status == Status::Ok && r.agree == Some(false) {
        status = Status::Failed;
    }
    r.print(run.format);
    status
}

fn cmd_model(src: &Source, run: &RunArgs) -> Status {
    match build(&src.algebra(), run.max_degree, &options(run)) {
        Ok(out) => {
            let doc = ModelDocument::from_stage(&out.stage, src.model_split());
            match run.format {
                Format::Json => println!("{}", doc.to_json()),
                Format::Table => report::print_model(src, &out.stage),
            }
            Status::Ok
        }
        Err(SullivanError::GuardExceeded { source, completed, partial }) => {
            eprintln!("error: {source}");
            println!("model complete through degree {completed}; ranks so far:");
            for (d, r) in partial.entries() {
                println!("  {d:>3}  {r}");
            }
            Status::Guard
        }
        Err(e) => {
            eprintln!("error: {e}");
            Status::Failed
        }
    }
}

fn cmd_classify(a: &str, b: &str, format: Format) -> Result<Status> {
    let fa = load_form(a)?;
    let fb = load_form(b)?;
    let equivalent = rationally_equivalent(&fa, &fb);
    let rows = [(a, &fa), (b, &fb)].map(|(spec, f)| report::FormRow {
        name: f.name().unwrap_or(spec).to_string(),
        rank: f.rank(),
        sigma: f.signature(),
        b2plus: f.b2plus(),
        b2minus: f.b2minus(),
        connected_sum: canonical_connected_sum(f),
    });
    report::print_classification(&rows, equivalent, format);
    Ok(Status::Ok)
}
