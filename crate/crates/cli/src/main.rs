//! `leonard-kit`: verify Leonard pairs, inspect their flags, decide
//! adjacency and build mutually adjacent triples from JSON files.
//!
//! Every subcommand writes one JSON document to stdout (or `--output`) and
//! a one-line summary to stderr. Exit status: 0 affirmative, 1 negative,
//! 2 bad input or usage.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use leonard_kit::adjacency::mutual_adjacency;
use leonard_kit::json::{self as lj, PairJson};
use leonard_kit::linalg::{parse_rational, Rational, Vector};
use leonard_kit::sequences::{classify_sequence, SequenceClass};
use leonard_kit::sl2::{companions, three_mutually_adjacent, KrawtchoukParameters};
use leonard_kit::{verify_leonard, Error, LeonardPair};

const MAX_DIM_VAR: &str = "LEONARD_KIT_MAX_DIM";
const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser)]
#[command(name = "leonard-kit", version, about = "Exact computations with Leonard pairs")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pair of matrices is a Leonard pair.
    Verify { pair: PathBuf },
    /// Standard flags and principal relation of a Leonard pair.
    Flags { pair: PathBuf },
    /// Decide adjacency of two Leonard pairs.
    Adjacent { first: PathBuf, second: PathBuf },
    /// Build three mutually adjacent Leonard pairs on V^d.
    Triple(TripleArgs),
    /// Two companions forming a mutually adjacent triple with the input.
    Companions { pair: PathBuf },
    /// Classify a sequence as arithmetic, q-classical or neither.
    ClassifySeq { sequence: PathBuf },
}

#[derive(Args)]
struct TripleArgs {
    #[arg(long)]
    d: usize,
    /// Krawtchouk parameter; uses the vectors (1,0), (0,1), (1,1), (p,p-1).
    #[arg(long, conflicts_with = "vectors", required_unless_present = "vectors")]
    p: Option<String>,
    /// JSON file with v0, v1, w0, w1.
    #[arg(long)]
    vectors: Option<PathBuf>,
}

/// A finished run: exit status, report and a summary line.
struct Outcome {
    code: u8,
    report: Value,
    summary: String,
}

impl Outcome {
    fn new(affirmative: bool, report: Value, summary: impl Into<String>) -> Self {
        Self {
            code: if affirmative { 0 } else { 1 },
            report,
            summary: summary.into(),
        }
    }
}

/// Input or usage failure (exit 2).
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run = Result<Outcome, Usage>;

fn max_dim() -> Result<usize, Usage> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Usage(format!("{MAX_DIM_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn check_size(n: usize, limit: usize) -> Result<(), Usage> {
    if n > limit {
        return Err(Usage(format!("dimension {n} exceeds {MAX_DIM_VAR}={limit}")));
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_pair(path: &Path, limit: usize) -> Result<PairJson, Usage> {
    let pair = lj::parse_pair(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    for m in [&pair.a, &pair.a_star] {
        check_size(m.rows().max(m.cols()), limit)?;
    }
    Ok(pair)
}

/// Shape problems are input errors; everything else `verify_leonard`
/// reports is a negative verdict.
fn is_shape_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotSquare { .. } | Error::DimensionMismatch(..) | Error::NotADecomposition(_) | Error::ShapeMismatch { .. }
    )
}

fn verified(pair: &PairJson) -> Result<Result<LeonardPair, Error>, Usage> {
    match verify_leonard(&pair.a, &pair.a_star) {
        Ok(p) => Ok(Ok(p)),
        Err(e) if is_shape_error(&e) => Err(e.into()),
        Err(e) => Ok(Err(e)),
    }
}

/// A Leonard pair, where anything else is an input error.
fn leonard_input(path: &Path, limit: usize) -> Result<LeonardPair, Usage> {
    verified(&read_pair(path, limit)?)?.map_err(|e| Usage(format!("{} is not a Leonard pair: {e}", path.display())))
}

fn verify(path: &Path, limit: usize) -> Run {
    Ok(match verified(&read_pair(path, limit)?)? {
        Ok(p) => Outcome::new(true, lj::verification_report(&p), format!("Leonard pair, d = {}", p.diameter())),
        Err(e) => Outcome::new(false, lj::rejection_report(&e), format!("not a Leonard pair: {e}")),
    })
}

fn flags(path: &Path, limit: usize) -> Run {
    Ok(match verified(&read_pair(path, limit)?)? {
        Ok(p) => {
            let report = lj::flags_report(&p)?;
            let summary = format!("{} standard flags, d = {}", report["count"], p.diameter());
            Outcome::new(true, report, summary)
        }
        Err(e) => Outcome::new(false, lj::rejection_report(&e), format!("not a Leonard pair: {e}")),
    })
}

fn adjacent(first: &Path, second: &Path, limit: usize) -> Run {
    let p1 = leonard_input(first, limit)?;
    let p2 = leonard_input(second, limit)?;
    let report = lj::adjacency_report(&p1, &p2)?;
    let yes = report["adjacent"] == true;
    let summary = match (&report["dichotomy"]["branch"], yes) {
        (Value::String(b), true) => format!("adjacent ({b})"),
        (_, true) => "adjacent".to_string(),
        _ => "not adjacent".to_string(),
    };
    Ok(Outcome::new(yes, report, summary))
}

fn krawtchouk_vectors(p: &Rational) -> [Vector; 4] {
    let one = Rational::from_integer(1.into());
    let zero = Rational::from_integer(0.into());
    [
        vec![one.clone(), zero.clone()],
        vec![zero, one.clone()],
        vec![one.clone(), one.clone()],
        vec![p.clone(), p - &one],
    ]
}

fn triple(args: &TripleArgs, limit: usize) -> Run {
    check_size(args.d + 1, limit)?;
    let (vectors, p) = match (&args.p, &args.vectors) {
        (Some(p), _) => {
            let p = parse_rational(p)?;
            KrawtchoukParameters::new(args.d, p.clone())?;
            (krawtchouk_vectors(&p), Some(p))
        }
        (None, Some(path)) => (lj::parse_vectors(&read(path)?)?, None),
        (None, None) => return Err(Usage("triple needs --p or --vectors".into())),
    };
    let [v0, v1, w0, w1] = &vectors;
    let pairs = three_mutually_adjacent(args.d, v0, v1, w0, w1)?;
    let report = lj::triple_report(&pairs, args.d, p.as_ref(), &vectors);
    Ok(Outcome::new(true, report, format!("three mutually adjacent Leonard pairs on V^{}", args.d)))
}

fn companions_cmd(path: &Path, limit: usize) -> Run {
    let pair = leonard_input(path, limit)?;
    if pair.diameter() == 0 {
        return Err(Error::DegenerateDimension.into());
    }
    match companions(&pair) {
        Ok(c) => {
            let m = mutual_adjacency(&[pair, c.b.clone(), c.c.clone()])?;
            let yes = m.mutually_adjacent;
            let summary = format!("companions built, p = {}", c.normal_form.p);
            Ok(Outcome::new(yes, lj::companions_report(&c, &m), summary))
        }
        Err(Error::NotArithmetic) => Ok(Outcome::new(
            false,
            json!({ "arithmetic": false, "reason": Error::NotArithmetic.to_string() }),
            "no companions: sequences are not arithmetic",
        )),
        Err(e) => Err(e.into()),
    }
}

fn classify(path: &Path) -> Run {
    let seq = lj::parse_sequence(&read(path)?)?;
    let class = classify_sequence(&seq)?;
    let yes = class != SequenceClass::Neither;
    Ok(Outcome::new(yes, lj::sequence_class(&class), class.to_string()))
}

fn run(cli: &Cli) -> Run {
    let limit = max_dim()?;
    match &cli.command {
        Command::Verify { pair } => verify(pair, limit),
        Command::Flags { pair } => flags(pair, limit),
        Command::Adjacent { first, second } => adjacent(first, second, limit),
        Command::Triple(args) => triple(args, limit),
        Command::Companions { pair } => companions_cmd(pair, limit),
        Command::ClassifySeq { sequence } => classify(sequence),
    }
}

fn emit(report: &Value, output: Option<&Path>) -> Result<(), Usage> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| emit(&o.report, cli.output.as_deref()).map(|_| o));
    match result {
        Ok(o) => {
            eprintln!("{}", o.summary);
            ExitCode::from(o.code)
        }
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
