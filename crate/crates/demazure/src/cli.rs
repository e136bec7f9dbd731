//! Argument parsing and dispatch for the `demazure` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use demazure_core::{Engine, Partition, RootSystem, SuiteId, TableKind, Weight};
use serde_json::{json, Value};

use crate::{golden, json, latex, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "demazure", version, about = "Exact transition coefficients and level-two Demazure characters in type A")]
pub struct Cli {
    /// Write the document here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand P_ν, G_λ or G_{ν,λ} in the Schur basis.
    Expand(ExpandArgs),
    /// Dump one row of a transition table.
    Matrix(MatrixArgs),
    /// Dump the Σ-families of a weight in P^+(1).
    Sigma(SigmaArgs),
    /// Run identity suites over a bounded sweep.
    Verify(VerifyArgs),
    /// Dimension of M(ν,λ) and of its two factors.
    Dims(PairArgs),
    /// Compare the reference expansions against checked-in fixtures.
    Golden,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "P")]
    P,
    #[value(name = "G")]
    G,
    #[value(name = "Gpair")]
    Gpair,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    P,
    A,
    G0,
    H,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub n: i64,
    /// ω-coordinates, comma separated; zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub lam: Option<String>,
    /// Read weights as partitions (at most n+1 parts) instead of ω-coordinates.
    #[arg(long)]
    pub partition: bool,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    pub family: Family,
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub top: String,
    #[arg(long)]
    pub partition: bool,
}

#[derive(Args, Debug)]
pub struct SigmaArgs {
    #[arg(long)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub lam: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 3)]
    pub n_max: i64,
    #[arg(long, default_value_t = 5)]
    pub ht_max: i64,
}

/// A usage problem, reported with the offending flag.
#[derive(Debug)]
pub struct Usage(pub String);

fn usage(flag: &str, msg: impl std::fmt::Display) -> Usage {
    Usage(format!("{}: {}", flag, msg))
}

fn rank(n: i64) -> Result<RootSystem, Usage> {
    usize::try_from(n)
        .ok()
        .and_then(|n| RootSystem::new(n).ok())
        .ok_or_else(|| usage("--n", format!("rank must be at least 1, got {}", n)))
}

fn numbers(flag: &str, s: &str) -> Result<Vec<i64>, Usage> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(flag, format!("`{}` is not an integer", t.trim()))))
        .collect()
}

/// A dominant weight from ω-coordinates or, with `partition`, from parts.
pub fn parse_weight(rs: &RootSystem, flag: &str, s: Option<&str>, partition: bool) -> Result<Weight, Usage> {
    let Some(s) = s else { return Ok(rs.zero()) };
    let xs = numbers(flag, s)?;
    let w = if partition {
        let parts: Vec<usize> = xs
            .iter()
            .map(|&x| usize::try_from(x).map_err(|_| usage(flag, "partition parts must be nonnegative")))
            .collect::<Result<_, _>>()?;
        let p = Partition::try_new(parts).ok_or_else(|| usage(flag, "parts must be weakly decreasing"))?;
        rs.from_partition(&p).map_err(|e| usage(flag, e))?
    } else {
        rs.weight(&xs).map_err(|e| usage(flag, e))?
    };
    if !w.is_dominant() {
        return Err(usage(flag, "weight is not dominant"));
    }
    Ok(w)
}

enum Doc {
    Json(Value),
    Text(String),
}

struct Output {
    doc: Doc,
    code: i32,
}

impl Output {
    fn ok(doc: Doc) -> Self {
        Output { doc, code: EXIT_OK }
    }
}

fn expand(a: &ExpandArgs) -> Result<Output, Usage> {
    let p = &a.pair;
    let rs = rank(p.n)?;
    let nu = parse_weight(&rs, "--nu", p.nu.as_deref(), p.partition)?;
    let lam = parse_weight(&rs, "--lam", p.lam.as_deref(), p.partition)?;
    let mut e = Engine::for_root_system(rs);
    let (series, head) = match a.family {
        Family::P => (e.macdonald_q0(&nu).as_ref().clone(), (format!("P_{{{}}}(z,q,0)", latex::weight(&nu)), format!("P[{}]", nu))),
        Family::G => (e.g_series(&lam).as_ref().clone(), (format!("G_{{0,{}}}", latex::weight(&lam)), format!("G[{}]", lam))),
        Family::Gpair => (
            e.g_pair_series(&nu, &lam),
            (
                format!("G_{{{},{}}}", latex::weight(&nu), latex::weight(&lam)),
                format!("G[{}, {}]", nu, lam),
            ),
        ),
    };
    let top = match a.family {
        Family::P => nu,
        Family::G => lam,
        Family::Gpair => &nu + &lam,
    };
    let doc = match a.format {
        Format::Json => Doc::Json(json::series(&series)),
        Format::Latex => Doc::Text(format!("{}={}", head.0, latex::series(&rs, &top, &series))),
        Format::Text => Doc::Text(format!("{} = {}", head.1, latex::series_text(&rs, &top, &series))),
    };
    Ok(Output::ok(doc))
}

fn matrix(a: &MatrixArgs) -> Result<Output, Usage> {
    let rs = rank(a.n)?;
    let top = parse_weight(&rs, "--top", Some(&a.top), a.partition)?;
    let kind = match a.kind {
        Kind::P => TableKind::P,
        Kind::A => TableKind::A,
        Kind::G0 => TableKind::G0,
        Kind::H => TableKind::H,
    };
    let table = Engine::for_root_system(rs).table(kind, &top).map_err(|e| usage("--top", e))?;
    Ok(Output::ok(Doc::Json(json::table(&table))))
}

fn sigma(a: &SigmaArgs) -> Result<Output, Usage> {
    let rs = rank(a.n)?;
    let lam = parse_weight(&rs, "--lam", Some(&a.lam), false)?;
    let f = Engine::for_root_system(rs).sigma(&lam).map_err(|e| usage("--lam", e))?;
    Ok(Output::ok(Doc::Json(json::sigma(&f))))
}

fn run_verify(a: &VerifyArgs) -> Result<Output, Usage> {
    let suites = SuiteId::parse_selector(&a.suite).map_err(|e| usage("--suite", e))?;
    let n_max = usize::try_from(a.n_max).ok().filter(|&n| n >= 1).ok_or_else(|| usage("--n-max", "must be at least 1"))?;
    if a.ht_max < 0 {
        return Err(usage("--ht-max", "must be nonnegative"));
    }
    let reports = verify::run(&suites, n_max, a.ht_max);
    let passed = reports.iter().all(|r| r.passed());
    let doc = json!({
        "n_max": n_max,
        "ht_max": a.ht_max,
        "passed": passed,
        "suites": reports.iter().map(json::report).collect::<Vec<_>>(),
    });
    Ok(Output { doc: Doc::Json(doc), code: if passed { EXIT_OK } else { EXIT_FAILURE } })
}

fn dims(p: &PairArgs) -> Result<Output, Usage> {
    let rs = rank(p.n)?;
    let nu = parse_weight(&rs, "--nu", p.nu.as_deref(), p.partition)?;
    let lam = parse_weight(&rs, "--lam", p.lam.as_deref(), p.partition)?;
    let mut e = Engine::for_root_system(rs);
    let zero = rs.zero();
    let d = e.dim_m(&nu, &lam);
    let (dn, dl) = (e.dim_m(&nu, &zero), e.dim_m(&zero, &lam));
    let doc = json!({
        "n": rs.rank(),
        "nu": json::weight(&nu),
        "lambda": json::weight(&lam),
        "admissible": rs.is_admissible(&nu, &lam),
        "dim": json::int(&d),
        "dim_nu": json::int(&dn),
        "dim_lambda": json::int(&dl),
        "factorizes": d == dn * dl,
    });
    Ok(Output::ok(Doc::Json(doc)))
}

fn run_golden() -> Output {
    let outcomes = golden::check(golden::entries());
    let passed = outcomes.iter().all(golden::Outcome::matches);
    let entries: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            let rs = RootSystem::new(o.entry.n).expect("fixture rank");
            let top = &o.entry.nu + &o.entry.lambda;
            golden::outcome_json(o, latex::series(&rs, &top, &o.actual))
        })
        .collect();
    let doc = json!({"passed": passed, "count": entries.len(), "entries": entries});
    Output { doc: Doc::Json(doc), code: if passed { EXIT_OK } else { EXIT_FAILURE } }
}

fn dispatch(cli: &Cli) -> Result<Output, Usage> {
    match &cli.command {
        Command::Expand(a) => expand(a),
        Command::Matrix(a) => matrix(a),
        Command::Sigma(a) => sigma(a),
        Command::Verify(a) => run_verify(a),
        Command::Dims(a) => dims(a),
        Command::Golden => Ok(run_golden()),
    }
}

fn render(doc: &Doc) -> String {
    match doc {
        Doc::Json(v) => serde_json::to_string_pretty(v).expect("serializable") + "\n",
        Doc::Text(s) => format!("{}\n", s),
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the document to `out` or to the `--out` path. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let text = render(&output.doc);
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {}", e);
                return EXIT_FAILURE;
            }
            output.code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_USAGE
        }
    }
}
