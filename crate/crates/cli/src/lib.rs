//! The `ifps` command line.
//!
//! Exit status is 0 on success, 1 on a domain or validation error (including
//! a failing law suite) and 2 on a usage error.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ifps::io::{parse_ifps, serialize_ifps};
use ifps::lawcheck::run_suite;
use ifps::{
    aggregate_group, decide, reduce_fuzzy, reduce_intuitionistic, GroupOperator, IfpsSet, RangeWarning, RankedDecision,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "ifps", version, about = "Intuitionistic fuzzy parametrized soft sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a document.
    Validate { file: PathBuf },
    /// Apply a set operation; binary operators fold left over the files.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Extend every input to the union of all universes and parameter sets first.
        #[arg(long)]
        align: bool,
    },
    /// Reduce a set to an intuitionistic fuzzy set (rif) or to scores (rf).
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Stage::Rf)]
        stage: Stage,
        #[arg(long)]
        json: bool,
    },
    /// Rank the alternatives and report the best ones.
    Decide {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Fold several experts' sets into one with a sum or product operator.
    Aggregate {
        #[arg(long = "op", value_enum)]
        op: AggregateOp,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        align: bool,
    },
    /// Run the randomized law suite.
    Laws {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OpKind {
    Union,
    Intersection,
    Complement,
    OrSum,
    AndSum,
    OrProduct,
    AndProduct,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AggregateOp {
    OrSum,
    AndSum,
    OrProduct,
    AndProduct,
}

impl From<AggregateOp> for GroupOperator {
    fn from(op: AggregateOp) -> Self {
        match op {
            AggregateOp::OrSum => GroupOperator::OrSum,
            AggregateOp::AndSum => GroupOperator::AndSum,
            AggregateOp::OrProduct => GroupOperator::OrProduct,
            AggregateOp::AndProduct => GroupOperator::AndProduct,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Stage {
    Rif,
    Rf,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => f.write_str(m),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn domain(context: impl fmt::Display, err: impl fmt::Display) -> Failure {
    Failure::Domain(format!("{context}: {err}"))
}

fn load(path: &Path) -> Result<IfpsSet, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| domain(path.display(), e))?;
    parse_ifps(&text).map_err(|e| domain(path.display(), e))
}

fn load_all(paths: &[PathBuf], align: bool) -> Result<Vec<IfpsSet>, Failure> {
    let sets = paths.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
    if !align {
        return Ok(sets);
    }
    let universe: BTreeSet<String> = sets.iter().flat_map(|s| s.universe().iter().cloned()).collect();
    let params: BTreeSet<String> = sets.iter().flat_map(|s| s.params().iter().cloned()).collect();
    sets.iter().map(|s| s.aligned_to(&universe, &params).map_err(|e| domain("alignment", e))).collect()
}

fn emit_set(set: &IfpsSet, output: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let violations = set.clause_violations();
    if !violations.is_empty() {
        let _ = writeln!(
            err,
            "warning: parameters {} have degree (0,1) but a non-empty support; the result will not re-validate",
            violations.join(", ")
        );
    }
    let text = serialize_ifps(set);
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| domain(path.display(), e))?,
        None => out.write_all(text.as_bytes()).map_err(|e| domain("stdout", e))?,
    }
    Ok(EXIT_OK)
}

fn warn_all(warnings: &[RangeWarning], err: &mut dyn Write) {
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
}

fn width<'a>(ids: impl Iterator<Item = &'a str>) -> usize {
    ids.map(str::len).max().unwrap_or(0)
}

fn cmd_validate(file: &Path, out: &mut dyn Write) -> CmdResult {
    let set = load(file)?;
    writeln!(
        out,
        "ok: {} alternatives, {} parameters, {} entries",
        set.universe().len(),
        set.params().len(),
        set.entries().count()
    )
    .map_err(|e| domain("stdout", e))?;
    Ok(EXIT_OK)
}

fn cmd_op(
    kind: OpKind,
    files: &[PathBuf],
    output: Option<&Path>,
    align: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if kind == OpKind::Complement && files.len() != 1 {
        return Err(Failure::Usage("complement takes exactly one file".into()));
    }
    if kind != OpKind::Complement && files.len() < 2 {
        return Err(Failure::Usage("binary operations need at least two files".into()));
    }
    let sets = load_all(files, align)?;
    let apply = |a: &IfpsSet, b: &IfpsSet| match kind {
        OpKind::Union => a.union(b),
        OpKind::Intersection => a.intersection(b),
        OpKind::OrSum => a.or_sum(b),
        OpKind::AndSum => a.and_sum(b),
        OpKind::OrProduct => a.or_product(b),
        OpKind::AndProduct => a.and_product(b),
        OpKind::Complement => unreachable!("complement is unary"),
    };
    let result = if kind == OpKind::Complement {
        sets[0].complement()
    } else {
        let (first, rest) = sets.split_first().expect("at least two sets");
        rest.iter().try_fold(first.clone(), |acc, s| apply(&acc, s)).map_err(|e| domain("operation", e))?
    };
    emit_set(&result, output, out, err)
}

#[derive(Serialize)]
struct PairOut {
    alpha: f64,
    beta: f64,
}

#[derive(Serialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
enum ReduceOut<'a> {
    Rif { degrees: BTreeMap<&'a str, PairOut>, warnings: &'a [RangeWarning] },
    Rf { membership: BTreeMap<&'a str, f64>, warnings: &'a [RangeWarning] },
}

fn cmd_reduce(file: &Path, stage: Stage, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let set = load(file)?;
    let reduced = reduce_intuitionistic(&set).map_err(|e| domain(file.display(), e))?;
    warn_all(&reduced.warnings, err);
    let io = |e: std::io::Error| domain("stdout", e);
    let w = width(reduced.value.ground().iter().map(String::as_str));
    match stage {
        Stage::Rif if json => {
            let degrees =
                reduced.value.iter().map(|(u, d)| (u, PairOut { alpha: d.alpha(), beta: d.beta() })).collect();
            let doc = ReduceOut::Rif { degrees, warnings: &reduced.warnings };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable")).map_err(io)?;
        }
        Stage::Rif => {
            for (u, d) in reduced.value.iter() {
                writeln!(out, "{u:<w$} {:.4} {:.4}", d.alpha(), d.beta()).map_err(io)?;
            }
        }
        Stage::Rf => {
            let scores = reduce_fuzzy(&reduced.value);
            if json {
                let doc = ReduceOut::Rf { membership: scores.iter().collect(), warnings: &reduced.warnings };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable")).map_err(io)?;
            } else {
                for (u, mu) in scores.iter() {
                    writeln!(out, "{u:<w$} {mu:.4}").map_err(io)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RankOut<'a> {
    element: &'a str,
    score: f64,
}

#[derive(Serialize)]
struct DecisionOut<'a> {
    ranking: Vec<RankOut<'a>>,
    argmax: &'a BTreeSet<String>,
    warnings: &'a [RangeWarning],
}

fn write_decision(decision: &RankedDecision, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        let doc = DecisionOut {
            ranking: decision.ranking.iter().map(|(u, s)| RankOut { element: u, score: *s }).collect(),
            argmax: &decision.argmax,
            warnings: &decision.warnings,
        };
        return writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    let w = width(decision.ranking.iter().map(|(u, _)| u.as_str()));
    for (u, s) in &decision.ranking {
        writeln!(out, "{u:<w$} {s:.4}")?;
    }
    let best: Vec<&str> = decision.argmax.iter().map(String::as_str).collect();
    writeln!(out, "argmax: {}", best.join(" "))
}

fn cmd_decide(file: &Path, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let set = load(file)?;
    let decision = decide(&set).map_err(|e| domain(file.display(), e))?;
    warn_all(&decision.warnings, err);
    write_decision(&decision, json, out).map_err(|e| domain("stdout", e))?;
    Ok(EXIT_OK)
}

fn cmd_aggregate(
    op: AggregateOp,
    files: &[PathBuf],
    output: Option<&Path>,
    align: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let sets = load_all(files, align)?;
    let result = aggregate_group(&sets, op.into()).map_err(|e| domain("aggregate", e))?;
    emit_set(&result, output, out, err)
}

fn cmd_laws(trials: usize, seed: u64, out: &mut dyn Write) -> CmdResult {
    if trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let report = run_suite(trials, seed).map_err(|e| domain("laws", e))?;
    writeln!(out, "{report}").map_err(|e| domain("stdout", e))?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_DOMAIN })
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(file, out),
        Command::Op { kind, files, output, align } => cmd_op(*kind, files, output.as_deref(), *align, out, err),
        Command::Reduce { file, stage, json } => cmd_reduce(file, *stage, *json, out, err),
        Command::Decide { file, json } => cmd_decide(file, *json, out, err),
        Command::Aggregate { op, files, output, align } => {
            cmd_aggregate(*op, files, output.as_deref(), *align, out, err)
        }
        Command::Laws { trials, seed } => cmd_laws(*trials, *seed, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            match failure {
                Failure::Usage(_) => EXIT_USAGE,
                Failure::Domain(_) => EXIT_DOMAIN,
            }
        }
    }
}
