//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 computed and the aggregate verdict is true, 1 computed
//! and false, 2 usage or input error, 3 resource limit.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use fpure_core::adjunction::{check_colon_containment, check_height_containment};
use fpure_core::fedder::{
    fedder_fpure_at_q, fedder_pfr_witness_at_q, fedder_sfr_witness_at_q, fpt_lower_bounds, nu_value,
    verify_certificate,
};
use fpure_core::frobenius::colon_bracket;
use fpure_core::polytope::fpt_monomial;
use fpure_core::{parse_polynomial, Convention, Error, FrobExponent, Ideal, Polynomial, Threshold};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::problem::{Problem, ProblemError};
use crate::report::{certificate_json, error_json, Report};
use crate::suite::run_example_suite;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Floor,
    Ceil,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Floor => Convention::Floor,
            ConventionArg::Ceil => Convention::Ceil,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct Args {
    /// Problem file (JSON).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// A single Frobenius power q = p^e.
    #[arg(long, conflicts_with_all = ["emin", "emax"])]
    pub q: Option<u64>,
    #[arg(long)]
    pub emin: Option<u32>,
    #[arg(long)]
    pub emax: Option<u32>,
    #[arg(long, value_enum)]
    pub convention: Option<ConventionArg>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Witness element c for `fedder-sfr`.
    #[arg(long)]
    pub c: Option<String>,
    /// Named ideal to act on.
    #[arg(long)]
    pub ideal: Option<String>,
    /// With `--right`: test whether the named ideal `left` contains `right`.
    #[arg(long, requires = "right")]
    pub left: Option<String>,
    #[arg(long, requires = "left")]
    pub right: Option<String>,
    /// Declared height, overriding the problem file.
    #[arg(long)]
    pub height: Option<u64>,
    /// Report `elapsed_ms` as null so output is byte-stable.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, clap::Subcommand)]
pub enum Command {
    /// Fedder-type F-purity test of the pair at each q.
    FedderFpure(Args),
    /// Strong F-regularity test with a witness element c (ceil exponents).
    FedderSfr(Args),
    /// ν(q) for the quotient and the single pair ideal.
    Nu(Args),
    /// ν(q)/q lower bounds for q = p, ..., p^emax.
    FptBounds(Args),
    /// Exact F-pure threshold of a monomial ideal.
    FptMonomial(Args),
    /// Containments between (I^[q]:I) and powers of I, or between two ideals.
    Contain(Args),
    /// Generators of (I^[q]:I).
    ColonBracket(Args),
    /// Reduced Gröbner bases of the named ideals.
    Gb(Args),
    /// The built-in example suite.
    #[command(name = "paper-suite")]
    ExampleSuite(Args),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::FedderFpure(_) => "fedder-fpure",
            Command::FedderSfr(_) => "fedder-sfr",
            Command::Nu(_) => "nu",
            Command::FptBounds(_) => "fpt-bounds",
            Command::FptMonomial(_) => "fpt-monomial",
            Command::Contain(_) => "contain",
            Command::ColonBracket(_) => "colon-bracket",
            Command::Gb(_) => "gb",
            Command::ExampleSuite(_) => "paper-suite",
        }
    }

    pub fn args(&self) -> &Args {
        match self {
            Command::FedderFpure(a)
            | Command::FedderSfr(a)
            | Command::Nu(a)
            | Command::FptBounds(a)
            | Command::FptMonomial(a)
            | Command::Contain(a)
            | Command::ColonBracket(a)
            | Command::Gb(a)
            | Command::ExampleSuite(a) => a,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "fpure", version, about = "Fedder-type tests and F-pure threshold certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Problem(ProblemError),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        Failure::Problem(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_resource() => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Usage(msg) => error_json("usage", msg.clone(), None),
            Failure::Problem(ProblemError::Polynomial { ideal, index, error }) => {
                let mut v = error_json("parse", self.message(), Some(error.position));
                v["ideal"] = json!(ideal);
                v["generator"] = json!(index);
                v
            }
            Failure::Problem(_) => error_json("input", self.message(), None),
            Failure::Core(Error::Parse(e)) => error_json("parse", self.message(), Some(e.position)),
            Failure::Core(e) if e.is_resource() => error_json("resource", self.message(), None),
            Failure::Core(_) => error_json("precondition", self.message(), None),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Problem(e) => e.to_string(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

/// A command's verdict list plus an error that cut it short, if any.
struct Outcome {
    report: Report,
    failure: Option<Failure>,
}

const QUOTIENT_NOTE: &str =
    "the quotient ideal is trusted to be unmixed and reduced where a containment statement needs it; this is not verified";

/// Reads and parses the problem file, recording its digest first so that
/// parse failures still identify the input.
fn load(args: &Args, report: &mut Report) -> Result<Problem, Failure> {
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| Failure::Usage("--input is required".into()))?;
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    report.input_digest = Some(hex::encode(Sha256::digest(&bytes)));
    let text = String::from_utf8(bytes).map_err(|_| Failure::Usage("input is not UTF-8".into()))?;
    Ok(Problem::from_json(&text)?)
}

fn q_list(args: &Args, problem: &Problem) -> Result<Vec<FrobExponent>, Failure> {
    let p = problem.ring.characteristic();
    if let Some(q) = args.q {
        return Ok(vec![FrobExponent::from_q(p, q)?]);
    }
    let (lo, hi) = match (args.emin, args.emax, problem.q_range) {
        (lo, Some(hi), _) => (lo.unwrap_or(1), hi),
        (Some(lo), None, _) => (lo, lo),
        (None, None, Some(r)) => (r.e_min, r.e_max),
        (None, None, None) => (1, 1),
    };
    if lo == 0 || lo > hi {
        return Err(Failure::Usage(format!("bad exponent range {lo}..{hi}")));
    }
    (lo..=hi)
        .map(|e| FrobExponent::new(p, e).map_err(Failure::from))
        .collect()
}

fn named_or<'a>(problem: &'a Problem, name: Option<&str>, fallback: Option<&'a Ideal>) -> Result<&'a Ideal, Failure> {
    match (name, fallback) {
        (Some(n), _) => Ok(problem.ideal(n)?),
        (None, Some(i)) => Ok(i),
        (None, None) => Err(Failure::Usage("name an ideal with --ideal".into())),
    }
}

fn polys_json(gens: &[Polynomial]) -> Value {
    json!(gens.iter().map(Polynomial::render).collect::<Vec<_>>())
}

fn fedder(cmd: &Command, args: &Args, problem: &Problem, report: &mut Report) -> Result<(), Failure> {
    let sfr = matches!(cmd, Command::FedderSfr(_));
    let convention = match (args.convention, sfr) {
        (Some(c), _) => c.into(),
        (None, true) => Convention::Ceil,
        (None, false) => problem.convention,
    };
    let spec = problem.pair_spec(convention)?;
    let c = if sfr {
        Some(match (&args.c, &problem.witness) {
            (Some(text), _) => parse_polynomial(text, &problem.ring).map_err(Error::from)?,
            (None, Some(w)) => w.clone(),
            (None, None) => Polynomial::one(&problem.ring),
        })
    } else {
        None
    };
    if let Some(c) = &c {
        report.result = json!({ "c": c.render() });
    }
    report.aggregate = true;
    for q in q_list(args, problem)? {
        let cert = match (&c, convention) {
            (None, _) => fedder_fpure_at_q(&spec, q)?,
            (Some(c), Convention::Ceil) => fedder_sfr_witness_at_q(&spec, c, q)?,
            (Some(c), Convention::Floor) => fedder_pfr_witness_at_q(&spec, c, q)?,
        };
        let verified = verify_certificate(&spec, c.as_ref(), &cert)?;
        report.aggregate &= cert.holds;
        report.verdicts.push(certificate_json(&problem.ring, &cert, verified));
    }
    Ok(())
}

fn nu_json(nu: &fpure_core::NuValue) -> Value {
    json!({
        "q": nu.q.q(),
        "r": nu.r,
        "lower_bound": nu.lower_bound().map(|b| b.to_string()),
    })
}

fn threshold_json(t: &Threshold) -> Value {
    match t {
        Threshold::Finite(v) => json!(v.to_string()),
        Threshold::Infinite => json!("infinite"),
    }
}

fn run(cmd: &Command, report: &mut Report) -> Result<(), Failure> {
    let args = cmd.args();
    if let Command::ExampleSuite(_) = cmd {
        let items = run_example_suite();
        report.aggregate = items.iter().all(|i| i.pass);
        report.verdicts = items.iter().map(|i| i.to_json()).collect();
        return Ok(());
    }
    let problem = load(args, report)?;
    let pair_command = matches!(
        cmd,
        Command::FedderFpure(_) | Command::FedderSfr(_) | Command::Nu(_) | Command::FptBounds(_) | Command::Contain(_)
    );
    if pair_command && !problem.quotient.is_zero() {
        report.notes.push(QUOTIENT_NOTE.into());
    }
    match cmd {
        Command::FedderFpure(_) | Command::FedderSfr(_) => fedder(cmd, args, &problem, report)?,
        Command::Nu(_) => {
            let a = problem.single_term()?;
            for q in q_list(args, &problem)? {
                report.verdicts.push(nu_json(&nu_value(&problem.quotient, a, q)?));
            }
            report.aggregate = true;
        }
        Command::FptBounds(_) => {
            let a = problem.single_term()?;
            let e_max = args
                .emax
                .or(args.q.map(|q| FrobExponent::from_q(problem.ring.characteristic(), q).map(|f| f.e())).transpose()?)
                .or(problem.q_range.map(|r| r.e_max))
                .unwrap_or(1);
            let rep = fpt_lower_bounds(&problem.quotient, a, e_max)?;
            let mut resource = None;
            for level in &rep.levels {
                match &level.nu {
                    Ok(nu) => report.verdicts.push(nu_json(nu)),
                    Err(e) => {
                        report.verdicts.push(json!({ "q": level.q.q(), "error": e.to_string() }));
                        if resource.is_none() {
                            resource = Some(e.clone());
                        }
                    }
                }
            }
            report.result = json!({
                "best_lower_bound": rep.best_lower_bound.map(|b| b.to_string()),
                "exact": rep.exact.as_ref().map(threshold_json),
            });
            report.aggregate = true;
            if let Some(e) = resource {
                return Err(e.into());
            }
        }
        Command::FptMonomial(_) => {
            let (name, ideal) = match (&args.ideal, problem.terms.as_slice(), problem.ideals.len()) {
                (Some(n), _, _) => (n.clone(), problem.ideal(n)?),
                (None, [(n, a, _)], _) => (n.clone(), a),
                (None, [], 1) => {
                    let (n, a) = problem.ideals.iter().next().expect("one ideal");
                    (n.clone(), a)
                }
                _ => return Err(Failure::Usage("name the monomial ideal with --ideal".into())),
            };
            let t = fpt_monomial(ideal)?;
            report.verdicts.push(json!({ "ideal": name, "fpt": threshold_json(&t) }));
            report.result = threshold_json(&t);
            report.aggregate = true;
        }
        Command::Contain(_) => {
            if let (Some(l), Some(r)) = (&args.left, &args.right) {
                let holds = problem.ideal(l)?.contains(problem.ideal(r)?)?;
                report.verdicts.push(json!({ "left": l, "right": r, "contains": holds }));
                report.aggregate = holds;
                return Ok(());
            }
            let quotient = (!problem.quotient.is_zero()).then_some(&problem.quotient);
            let ideal = named_or(&problem, args.ideal.as_deref(), quotient)?;
            let height = args.height.or(problem.height);
            report.aggregate = true;
            for q in q_list(args, &problem)? {
                let colon = check_colon_containment(ideal, q)?;
                let mut v = json!({ "q": q.q(), "colon_in_power": colon, "height": height });
                report.aggregate &= colon;
                if let Some(h) = height {
                    let hc = check_height_containment(ideal, h, q)?;
                    v["power_in_colon"] = json!(hc);
                    report.aggregate &= hc;
                }
                report.verdicts.push(v);
            }
        }
        Command::ColonBracket(_) => {
            let quotient = (!problem.quotient.is_zero()).then_some(&problem.quotient);
            let ideal = named_or(&problem, args.ideal.as_deref(), quotient)?;
            for q in q_list(args, &problem)? {
                let c = colon_bracket(ideal, q)?;
                report.verdicts.push(json!({ "q": q.q(), "generators": polys_json(c.generators()) }));
            }
            report.aggregate = true;
        }
        Command::Gb(_) => {
            let mut bases = Map::new();
            let names: Vec<&String> = match &args.ideal {
                Some(n) => vec![n],
                None => problem.ideals.keys().collect(),
            };
            for name in names {
                let ideal = problem.ideal(name)?;
                bases.insert(name.clone(), polys_json(ideal.groebner_basis()?));
            }
            report.result = Value::Object(bases);
            report.aggregate = true;
        }
        Command::ExampleSuite(_) => unreachable!("handled above"),
    }
    Ok(())
}

fn execute(cmd: &Command) -> Outcome {
    let mut report = Report::new(cmd.name());
    let failure = run(cmd, &mut report).err();
    Outcome { report, failure }
}

/// Runs one command line and returns the exit code and standard output.
pub fn dispatch<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (EXIT_TRUE, e.to_string());
            }
            let mut report = Report::new("usage");
            report.error = Some(error_json("usage", e.to_string().trim_end().to_string(), None));
            return (EXIT_USAGE, report.render_json());
        }
    };
    let args = cli.command.args().clone();
    let start = Instant::now();
    let Outcome { mut report, failure } = execute(&cli.command);
    if !args.no_timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let code = match &failure {
        Some(f) => {
            report.error = Some(f.to_json());
            report.aggregate = false;
            f.exit_code()
        }
        None if report.aggregate => EXIT_TRUE,
        None => EXIT_FALSE,
    };
    let out = match args.format {
        Format::Json => report.render_json(),
        Format::Text => report.render_text(),
    };
    (code, out)
}
