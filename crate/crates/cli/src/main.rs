//! `aacbr` command-line tool.
//!
//! Exit codes: 0 success, 1 property violations found (`check`), 2 bad input
//! or flags, 3 incoherent casebase where coherence is required.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use aacbr::format::{
    casebase_to_json, parse_casebase, parse_feature_list, parse_queries, to_json_lines,
    AuditRecord, PredictionRecord,
};
use aacbr::properties::{
    check_casebase, check_property, GeneratorConfig, Property, PropertyReport, QueryMode, QuerySet,
    DEFAULT_SAMPLE,
};
use aacbr::{dot, fixtures, learn_concise, Casebase, Engine, Error, NewCase};

#[derive(Parser)]
#[command(
    name = "aacbr",
    version,
    about = "Argumentation-based case-based reasoning"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every query in a query file.
    Predict {
        #[arg(long)]
        casebase: PathBuf,
        #[arg(long)]
        queries: PathBuf,
        #[arg(long, default_value = "plain", value_parser = parse_engine)]
        engine: Engine,
        /// Output file; `-` for stdout.
        #[arg(long, default_value = "-")]
        out: String,
        /// Write one DOT file per query into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Report an incoherent casebase on stderr (plain engine).
        #[arg(long)]
        warn_incoherent: bool,
    },
    /// Write the concise subset of a coherent casebase.
    Concise {
        #[arg(long)]
        casebase: PathBuf,
        #[arg(long, default_value = "-")]
        out: String,
        /// Per-case audit (JSON lines): kept/dropped, stratum, predicted outcome.
        #[arg(long)]
        audit: Option<PathBuf>,
    },
    /// Check a non-monotonicity property on generated casebases or a fixture.
    Check {
        #[arg(long, default_value = "plain", value_parser = parse_engine)]
        engine: Engine,
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(long, default_value_t = 5)]
        features: usize,
        #[arg(long, default_value_t = 8)]
        cases: usize,
        /// Generated trials; defaults to 100, or 0 when a fixture is given.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Query every characterisation instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Queries sampled per trial when not exhaustive.
        #[arg(long, default_value_t = DEFAULT_SAMPLE)]
        sample: usize,
        /// Also run a named fixture (`theorem4`).
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Render the attack graph of a casebase (and optional query) as DOT.
    ExportDot {
        #[arg(long)]
        casebase: PathBuf,
        /// Comma-separated features of a new case.
        #[arg(long)]
        query: Option<String>,
        #[arg(long, default_value = "plain", value_parser = parse_engine)]
        engine: Engine,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Incoherent(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Incoherent(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IncoherentCasebase(_) => Failure::Incoherent(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn load_casebase(path: &Path) -> Result<Casebase, Failure> {
    parse_casebase(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(target: &str, text: &str) -> Result<(), Failure> {
    if target == "-" {
        io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}")))
    } else {
        let path = Path::new(target);
        fs::write(path, text).map_err(|e| io_failure(path, e))
    }
}

fn file_stem(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn require_coherent(cb: &Casebase) -> Result<(), Failure> {
    if cb.is_coherent() {
        return Ok(());
    }
    let pairs: Vec<String> = cb
        .conflicts()
        .iter()
        .map(|(a, b)| format!("{} vs {}", a.id, b.id))
        .collect();
    Err(Failure::Incoherent(format!(
        "casebase is incoherent: {}",
        pairs.join(", ")
    )))
}

fn predict(
    casebase: &Path,
    queries: &Path,
    engine: Engine,
    out: &str,
    dot_dir: Option<&Path>,
    warn_incoherent: bool,
) -> Result<u8, Failure> {
    let cb = load_casebase(casebase)?;
    let queries: Vec<NewCase> = parse_queries(&read(queries)?)?;
    if engine == Engine::Cumulative {
        require_coherent(&cb)?;
    } else if warn_incoherent && !cb.is_coherent() {
        eprintln!(
            "warning: casebase is incoherent ({} conflicting pair(s)); predictions are still defined",
            cb.conflicts().len()
        );
    }
    let model = engine.fit(&cb)?;
    if let Some(dir) = dot_dir {
        fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    }
    let mut records = Vec::with_capacity(queries.len());
    for q in &queries {
        let p = model.predict(&q.characterisation);
        if let Some(dir) = dot_dir {
            let path = dir.join(format!("{}.dot", file_stem(&q.id)));
            fs::write(&path, dot::to_dot(&p.graph, cb.labels()))
                .map_err(|e| io_failure(&path, e))?;
        }
        records.push(PredictionRecord {
            id: q.id.clone(),
            outcome: cb.labels().label(p.outcome).to_string(),
            default_in_grounded: p.default_in_grounded,
            engine: engine.name().to_string(),
        });
    }
    write_out(out, &to_json_lines(records))?;
    Ok(0)
}

fn concise(casebase: &Path, out: &str, audit: Option<&Path>) -> Result<u8, Failure> {
    let cb = load_casebase(casebase)?;
    require_coherent(&cb)?;
    let model = learn_concise(&cb)?;
    write_out(out, &casebase_to_json(model.concise()))?;
    if let Some(path) = audit {
        let lines = to_json_lines(
            model
                .audit()
                .iter()
                .map(|e| AuditRecord::new(e, cb.labels())),
        );
        fs::write(path, lines).map_err(|e| io_failure(path, e))?;
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn check(
    engine: Engine,
    property: Property,
    features: usize,
    cases: usize,
    trials: Option<usize>,
    seed: u64,
    exhaustive: bool,
    sample: usize,
    fixture: Option<&str>,
) -> Result<u8, Failure> {
    let mut report: Option<PropertyReport> = None;
    let mut absorb = |r: PropertyReport| match report.as_mut() {
        Some(total) => total.merge(r),
        None => report = Some(r),
    };
    if let Some(name) = fixture {
        let (cb, queries) = match name {
            "theorem4" => (
                fixtures::monotonicity_casebase(),
                QuerySet::Pairs(vec![(
                    fixtures::monotonicity_first_query(),
                    fixtures::monotonicity_second_query(),
                )]),
            ),
            other => return Err(Failure::Input(format!("unknown fixture `{other}`"))),
        };
        absorb(check_casebase(engine, property, &cb, &queries)?);
    }
    let trials = trials.unwrap_or(if fixture.is_some() { 0 } else { 100 });
    if trials > 0 {
        let mode = if exhaustive {
            QueryMode::Exhaustive
        } else {
            QueryMode::Sampled(sample)
        };
        let cfg = GeneratorConfig::new(features, cases, seed);
        absorb(check_property(engine, property, &cfg, trials, mode)?);
    }
    let report = report
        .ok_or_else(|| Failure::Input("nothing to check: zero trials and no fixture".into()))?;
    write_out("-", &report.to_json_lines())?;
    Ok(if report.holds() { 0 } else { 1 })
}

fn export_dot(
    casebase: &Path,
    query: Option<&str>,
    engine: Engine,
    out: &str,
) -> Result<u8, Failure> {
    let cb = load_casebase(casebase)?;
    if engine == Engine::Cumulative {
        require_coherent(&cb)?;
    }
    let model = engine.fit(&cb)?;
    let graph = match (query, &model) {
        (Some(q), m) => m.predict(&parse_feature_list(q)).graph,
        (None, aacbr::Model::Plain { graph, .. }) => graph.clone(),
        (None, aacbr::Model::Cumulative(m)) => m.graph().clone(),
    };
    write_out(out, &dot::to_dot(&graph, cb.labels()))?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Predict {
            casebase,
            queries,
            engine,
            out,
            dot,
            warn_incoherent,
        } => predict(
            &casebase,
            &queries,
            engine,
            &out,
            dot.as_deref(),
            warn_incoherent,
        ),
        Command::Concise {
            casebase,
            out,
            audit,
        } => concise(&casebase, &out, audit.as_deref()),
        Command::Check {
            engine,
            property,
            features,
            cases,
            trials,
            seed,
            exhaustive,
            sample,
            fixture,
        } => check(
            engine,
            property,
            features,
            cases,
            trials,
            seed,
            exhaustive,
            sample,
            fixture.as_deref(),
        ),
        Command::ExportDot {
            casebase,
            query,
            engine,
            out,
        } => export_dot(&casebase, query.as_deref(), engine, &out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let msg = match &f {
                Failure::Input(m) | Failure::Incoherent(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
