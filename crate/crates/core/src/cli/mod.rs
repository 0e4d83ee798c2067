//! The `omega` command-line front end.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 operation not
//! applicable to the monoid, 4 search limit reached, 5 cross-check mismatch.

mod bench;
mod input;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::asymptotic::{asymptotic_omega_of, empirical_ratio_sequence, k_vector, Rational};
use crate::clock::Instant;
use crate::diophantine::Limits;
use crate::error::{Error, Result};
use crate::omega::{omega_element, omega_semigroup, Method, OmegaOptions, OmegaReport};
use crate::semigroup::{Element, Monoid, SemigroupSpec};
use crate::vector::NVec;

pub use bench::{run_suite, BenchRow, Suite};
pub use input::{ElementDoc, JsonInt, SpecDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// The exit code an error maps to.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedMode { .. } | Error::NotQuasiArchimedean(_) | Error::NotNumerical => {
            EXIT_NOT_APPLICABLE
        }
        Error::ResourceLimit { .. } => EXIT_LIMIT,
        Error::CrossCheckMismatch(_) => EXIT_MISMATCH,
        Error::InvalidSpec(_)
        | Error::EmptyGenerators
        | Error::NotReduced(_)
        | Error::InvalidTwoGen { .. }
        | Error::GcdNotOne(_)
        | Error::NotMember(_)
        | Error::MixedArity { .. }
        | Error::TooLarge(_)
        | Error::UnsoundBound { .. } => EXIT_INVALID,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "omega",
    version,
    about = "ω-primality of numerical, affine and presented monoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ω of one element
    OmegaElem(ElemCmd),
    /// ω of the monoid: the maximum over its atoms
    OmegaSg(SgCmd),
    /// The minimal exponent vectors whose class is a multiple of the element
    Minimals(ElemCmd),
    /// Asymptotic ω of one element (quasi-Archimedean monoids)
    AsymptoticElem(AsymElemCmd),
    /// Asymptotic ω of the monoid (quasi-Archimedean monoids)
    AsymptoticSg(AsymSgCmd),
    /// Decide membership of an ambient point and print a factorization
    Membership(MemberCmd),
    /// Factorize an ambient point, failing if it is not a member
    Factorize(MemberCmd),
    /// The ratios ω(n·x)/n for n = 1..=nmax
    Empirical(EmpiricalCmd),
    /// Run a suite of jobs with several methods and compare them
    Bench(BenchCmd),
}

#[derive(Debug, Args)]
#[group(id = "monoid", required = true, multiple = false)]
struct SpecArgs {
    /// Numerical semigroup generators, e.g. 3,5,7
    #[arg(long, value_name = "GENS")]
    numerical: Option<String>,
    /// Affine semigroup columns separated by ';', e.g. "5,3;5,11"
    #[arg(long, value_name = "COLS")]
    affine: Option<String>,
    /// Two-generated presentation alpha,beta
    #[arg(long, value_name = "ALPHA,BETA")]
    twogen: Option<String>,
    /// Lattice basis vectors separated by ';', e.g. "4,-2"
    #[arg(long, value_name = "BASIS", allow_hyphen_values = true)]
    lattice: Option<String>,
    /// JSON description of the monoid, optionally with an element
    #[arg(long, value_name = "FILE")]
    spec: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ArityArg {
    /// Number of generators of a lattice presentation (needed for an empty basis)
    #[arg(long)]
    arity: Option<usize>,
}

#[derive(Debug, Args)]
#[group(id = "element", multiple = false)]
struct ElementArgs {
    /// A natural number of a numerical semigroup
    #[arg(long)]
    value: Option<String>,
    /// An ambient point, e.g. 154,118
    #[arg(long)]
    vector: Option<String>,
    /// An exponent vector over the generators as given
    #[arg(long)]
    expression: Option<String>,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Node cap for the Diophantine search
    #[arg(long, value_name = "N")]
    limit: Option<u64>,
    /// Run every applicable method and fail on disagreement
    #[arg(long)]
    cross_check: bool,
    /// engine, two-gen-closed or oracle
    #[arg(long, value_parser = parse_method)]
    method: Option<Method>,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    Method::parse(s).ok_or_else(|| format!("unknown method {s:?}"))
}

#[derive(Debug, Args)]
struct ElemCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[command(flatten)]
    element: ElementArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct SgCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct AsymElemCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[command(flatten)]
    element: ElementArgs,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct AsymSgCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct MemberCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[command(flatten)]
    element: ElementArgs,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Node cap for the Diophantine search
    #[arg(long, value_name = "N")]
    limit: Option<u64>,
}

#[derive(Debug, Args)]
struct EmpiricalCmd {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    arity: ArityArg,
    #[command(flatten)]
    element: ElementArgs,
    /// Largest multiple
    #[arg(long, default_value_t = 30)]
    nmax: u64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Debug, Args)]
struct BenchCmd {
    /// Suite file: {"jobs": [{"id", "command", "spec", "element", "methods"}]}
    #[arg(long, value_name = "FILE")]
    suite: PathBuf,
    /// Emit a JSON report instead of CSV
    #[arg(long)]
    json: bool,
    /// Node cap for the Diophantine search
    #[arg(long, value_name = "N")]
    limit: Option<u64>,
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidSpec(format!("output: {e}"))
}

/// A parsed monoid with the description it came from and an element from a
/// spec file, if any.
struct Loaded {
    raw: SemigroupSpec,
    monoid: Monoid,
    file_element: Option<Element>,
}

fn load(spec: &SpecArgs, arity: &ArityArg) -> Result<Loaded> {
    let mut file_element = None;
    let raw = if let Some(s) = &spec.numerical {
        input::parse_numerical(s)?
    } else if let Some(s) = &spec.affine {
        input::parse_affine(s)?
    } else if let Some(s) = &spec.twogen {
        input::parse_two_gen(s)?
    } else if let Some(s) = &spec.lattice {
        input::parse_lattice(s, arity.arity)?
    } else if let Some(path) = &spec.spec {
        let doc = input::read_spec_file(path)?;
        file_element = doc.element.as_ref().map(ElementDoc::to_element).transpose()?;
        let mut doc = doc;
        if doc.arity.is_none() {
            doc.arity = arity.arity;
        }
        doc.to_spec()?
    } else {
        unreachable!("clap requires one monoid flag")
    };
    let monoid = Monoid::new(&raw)?;
    Ok(Loaded {
        raw,
        monoid,
        file_element,
    })
}

impl Loaded {
    fn element(&self, args: &ElementArgs) -> Result<Element> {
        let elem = if let Some(v) = &args.value {
            Element::Ambient(NVec::new(input::parse_naturals(v)?))
        } else if let Some(v) = &args.vector {
            Element::Ambient(NVec::new(input::parse_naturals(v)?))
        } else if let Some(e) = &args.expression {
            Element::Expression(NVec::new(input::parse_naturals(e)?))
        } else if let Some(e) = &self.file_element {
            e.clone()
        } else {
            return Err(Error::InvalidSpec(
                "this command needs an element (--value, --vector or --expression)".into(),
            ));
        };
        input::adapt_element(&self.raw, &self.monoid, elem)
    }
}

fn options(run: &RunArgs) -> OmegaOptions {
    OmegaOptions {
        limits: limits(run.limit),
        method: run.method,
        cross_check: run.cross_check,
    }
}

fn limits(limit: Option<u64>) -> Limits {
    limit.map_or_else(Limits::default, |max_nodes| Limits { max_nodes })
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn num(x: &BigUint) -> Value {
    serde_json::to_value(NVec::new(vec![x.clone()])).map_or(Value::Null, |v| v[0].clone())
}

fn sorted_witnesses(report: &OmegaReport) -> Vec<NVec> {
    let mut w = report.witnesses();
    w.sort();
    w
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )
    .map_err(io)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::OmegaElem(cmd) => omega_elem(&cmd, out, false),
        Command::Minimals(cmd) => omega_elem(&cmd, out, true),
        Command::OmegaSg(cmd) => omega_sg(&cmd, out),
        Command::AsymptoticElem(cmd) => asymptotic_elem(&cmd, out),
        Command::AsymptoticSg(cmd) => asymptotic_sg(&cmd, out),
        Command::Membership(cmd) => membership(&cmd, out, false),
        Command::Factorize(cmd) => membership(&cmd, out, true),
        Command::Empirical(cmd) => empirical(&cmd, out),
        Command::Bench(cmd) => {
            let suite = Suite::read(&cmd.suite)?;
            let report = run_suite(&suite, &limits(cmd.limit))?;
            if cmd.json {
                emit(out, &bench::report_json(&report))?;
            } else {
                bench::write_csv(&report, out).map_err(io)?;
            }
            Ok(if report.iter().all(|r| r.agree) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

fn header(out: &mut dyn Write, loaded: &Loaded) -> std::io::Result<()> {
    let m = &loaded.monoid;
    writeln!(out, "monoid: {} {}", m.mode(), m.spec())?;
    if loaded.raw != *m.spec() {
        writeln!(out, "given as: {}", loaded.raw)?;
    }
    Ok(())
}

fn element_line(out: &mut dyn Write, elem: &Element) -> std::io::Result<()> {
    match elem {
        Element::Ambient(v) if v.len() == 1 => writeln!(out, "element: {}", v.entries()[0]),
        Element::Ambient(v) => writeln!(out, "element: {v}"),
        Element::Expression(g) => writeln!(out, "element: [{g}]"),
    }
}

fn omega_elem(cmd: &ElemCmd, out: &mut dyn Write, list_all: bool) -> Result<i32> {
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let elem = loaded.element(&cmd.element)?;
    let report = omega_element(&loaded.monoid, &elem, &options(&cmd.run))?;
    let witnesses = sorted_witnesses(&report);
    if cmd.run.json {
        let mut v = json!({
            "value": num(&report.value),
            "witnesses": witnesses,
            "method": report.method,
            "elapsed_ms": ms(report.elapsed),
            "minimals_count": report.minimals.len(),
            "expression": report.expression,
        });
        if list_all {
            v["minimals"] = json!(report.minimals);
        }
        if let Some(cc) = &report.cross_check {
            v["cross_check"] = json!(cc.to_string());
        }
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        element_line(out, &elem)?;
        writeln!(out, "The expression of the element is {}", report.expression)?;
        writeln!(out, "omega: {}", report.value)?;
        writeln!(out, "minimal elements: {}", report.minimals.len())?;
        if list_all {
            for m in report.minimals.iter() {
                writeln!(out, "  {m}  (norm {})", m.norm())?;
            }
        }
        let w: Vec<String> = witnesses.iter().map(ToString::to_string).collect();
        writeln!(out, "witnesses: {}", w.join(" "))?;
        writeln!(out, "method: {}", report.method)?;
        if let Some(cc) = &report.cross_check {
            writeln!(out, "cross-check: {cc}")?;
        }
        writeln!(out, "elapsed: {} ms", ms(report.elapsed))
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}

fn omega_sg(cmd: &SgCmd, out: &mut dyn Write) -> Result<i32> {
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let result = omega_semigroup(&loaded.monoid, &options(&cmd.run))?;
    let method = result.per_generator.first().map_or(Method::Engine, |r| r.method);
    let mut witnesses: Vec<NVec> = result
        .per_generator
        .iter()
        .filter(|r| r.value == result.value)
        .flat_map(sorted_witnesses)
        .collect();
    witnesses.sort();
    if cmd.run.json {
        let per: Vec<Value> = result
            .per_generator
            .iter()
            .map(|r| {
                json!({
                    "generator": r.expression,
                    "value": num(&r.value),
                    "minimals_count": r.minimals.len(),
                    "witnesses": sorted_witnesses(r),
                })
            })
            .collect();
        let v = json!({
            "value": num(&result.value),
            "witnesses": witnesses,
            "method": method,
            "elapsed_ms": ms(result.elapsed),
            "per_generator": per,
        });
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        for (i, r) in result.per_generator.iter().enumerate() {
            writeln!(
                out,
                "omega(e{}) = {}  ({} minimal elements)",
                i + 1,
                r.value,
                r.minimals.len()
            )?;
            if let Some(cc) = &r.cross_check {
                writeln!(out, "  cross-check: {cc}")?;
            }
        }
        let vals: Vec<String> = result
            .per_generator_values()
            .iter()
            .map(ToString::to_string)
            .collect();
        writeln!(out, "per generator: ({})", vals.join(","))?;
        writeln!(out, "omega: {}", result.value)?;
        writeln!(out, "method: {method}")?;
        writeln!(out, "elapsed: {} ms", ms(result.elapsed))
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}

fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn asymptotic_elem(cmd: &AsymElemCmd, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let elem = loaded.element(&cmd.element)?;
    let k = k_vector(&loaded.monoid)?;
    let gamma = loaded.monoid.resolve(&elem)?;
    let value = asymptotic_omega_of(&k, &gamma);
    if cmd.json {
        let v = json!({
            "value": rational(&value),
            "witnesses": [],
            "method": "k-vector",
            "elapsed_ms": ms(start.elapsed()),
            "k": k.k,
            "expression": gamma,
        });
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        element_line(out, &elem)?;
        writeln!(out, "The expression of the element is {gamma}")?;
        writeln!(out, "k: {}", k.k)?;
        writeln!(out, "asymptotic omega: {value}")
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}

fn asymptotic_sg(cmd: &AsymSgCmd, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let k = k_vector(&loaded.monoid)?;
    let p = loaded.monoid.arity();
    let per: Vec<Rational> = (0..p)
        .map(|i| asymptotic_omega_of(&k, &NVec::unit(p, i)))
        .collect();
    let value = per.iter().max().cloned().unwrap_or_default();
    if cmd.json {
        let v = json!({
            "value": rational(&value),
            "witnesses": [],
            "method": "k-vector",
            "elapsed_ms": ms(start.elapsed()),
            "k": k.k,
            "per_generator": per.iter().map(rational).collect::<Vec<_>>(),
        });
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        writeln!(out, "k: {}", k.k)?;
        for (i, q) in per.iter().enumerate() {
            writeln!(out, "asymptotic omega(e{}) = {q}", i + 1)?;
        }
        writeln!(out, "asymptotic omega: {value}")
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}

fn membership(cmd: &MemberCmd, out: &mut dyn Write, require: bool) -> Result<i32> {
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let Element::Ambient(point) = loaded.element(&cmd.element)? else {
        return Err(Error::InvalidSpec(
            "membership takes an ambient point (--value or --vector)".into(),
        ));
    };
    let found = loaded.monoid.membership_with(&point, &limits(cmd.limit))?;
    if require && found.is_none() {
        return Err(Error::NotMember(point.to_string()));
    }
    if cmd.json {
        let v = json!({ "member": found.is_some(), "factorization": found });
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let shown = match point.entries() {
        [n] => n.to_string(),
        _ => point.to_string(),
    };
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        match &found {
            Some(f) => {
                writeln!(out, "{shown} is in the monoid")?;
                writeln!(out, "factorization: {f}")
            }
            None => writeln!(out, "{shown} is not in the monoid"),
        }
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}

/// Recovers `ω(n·x)` from the ratio `ω(n·x)/n`.
fn omega_at(ratio: &Rational, n: u64) -> BigUint {
    (ratio * Rational::from_integer(n.into()))
        .to_integer()
        .magnitude()
        .clone()
}

fn empirical(cmd: &EmpiricalCmd, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let loaded = load(&cmd.spec, &cmd.arity)?;
    let elem = loaded.element(&cmd.element)?;
    let ratios = empirical_ratio_sequence(&loaded.monoid, &elem, cmd.nmax, &options(&cmd.run))?;
    let limit = match k_vector(&loaded.monoid) {
        Ok(k) => Some(asymptotic_omega_of(&k, &loaded.monoid.resolve(&elem)?)),
        Err(Error::NotQuasiArchimedean(_)) => None,
        Err(e) => return Err(e),
    };
    if cmd.run.json {
        let rows: Vec<Value> = ratios
            .iter()
            .zip(1u64..)
            .map(|(q, n)| json!({ "n": n, "omega": num(&omega_at(q, n)), "ratio": rational(q) }))
            .collect();
        let v = json!({
            "ratios": rows,
            "limit": limit.as_ref().map(rational),
            "method": cmd.run.method.unwrap_or_else(|| crate::omega::default_method(&loaded.monoid)),
            "elapsed_ms": ms(start.elapsed()),
        });
        return emit(out, &v).map(|()| EXIT_OK);
    }
    let mut text = || -> std::io::Result<()> {
        header(out, &loaded)?;
        element_line(out, &elem)?;
        writeln!(out, "{:>4}  {:>10}  ratio", "n", "omega")?;
        for (q, n) in ratios.iter().zip(1u64..) {
            writeln!(out, "{n:>4}  {:>10}  {q}", omega_at(q, n))?;
        }
        if let Some(l) = &limit {
            writeln!(out, "limit: {l}")?;
        }
        writeln!(out, "elapsed: {} ms", ms(start.elapsed()))
    };
    text().map_err(io)?;
    Ok(EXIT_OK)
}
