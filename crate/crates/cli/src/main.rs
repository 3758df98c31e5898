//! `numerals`: normalize and compare λ-terms, print numerals, and run the
//! numeral-system checks from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use numerals_core::harness::{
    check_combinator, check_definable, check_system, grid, CheckReport, NumericFunction, Overall,
};
use numerals_core::numerals::{c_system, Combinator, NumeralSystem, SequenceSpec, SystemName};
use numerals_core::reduce::{head_reduce, HeadOutcome};
use numerals_core::{
    beta_eta_normalize, beta_eta_eq, mk_f, mk_i, mk_t, parse_program, parse_term, EqVerdict,
    Fuel, ParseError, Program, ReductionOutcome, Term,
};
use serde::Serialize;

const FORMAT: u32 = 1;

const EXIT_FAIL: u8 = 1;
const EXIT_FUEL: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "numerals", version, about = "Numeral systems in the untyped lambda calculus")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Maximum number of beta steps per reduction.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = parse_fuel)]
    fuel: u64,
    /// Check numerals d_0 .. d_{upto-1}.
    #[arg(long, global = true, default_value_t = 50, value_parser = parse_upto)]
    upto: u64,
    /// Definitions file (`name = term ;` per entry) whose names are inlined.
    #[arg(long, global = true, value_name = "PATH")]
    defs: Option<PathBuf>,
    /// Preload I, T, F and the built-in combinators (S_church, P_a, Z_tilde, ...).
    #[arg(long, global = true)]
    prelude: bool,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Beta-eta normalize a term.
    Eval { term: String },
    /// Print the n-th numeral of a system.
    Numeral {
        system: String,
        n: u64,
        #[arg(long, value_enum, default_value_t = Sequence::Church)]
        sequence: Sequence,
    },
    /// Check a system's combinators against their contracts.
    Check {
        system: String,
        #[arg(value_enum, default_value_t = Which::All)]
        which: Which,
        /// Element sequence for the c system.
        #[arg(long, value_enum, default_value_t = Sequence::Church)]
        sequence: Sequence,
    },
    /// Head-reduce a term and report the length of the reduction.
    Head {
        term: String,
        /// Print every intermediate state.
        #[arg(long)]
        trace: bool,
    },
    /// Decide beta-eta equality of two terms within the fuel budget.
    Eq { left: String, right: String },
    /// Check that a term defines a numeric function on a system's numerals.
    Definable {
        system: String,
        term: String,
        /// One of id, succ, pred, nonzero, k.
        #[arg(long, default_value = "id")]
        function: String,
        #[arg(long, value_enum, default_value_t = Sequence::Church)]
        sequence: Sequence,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    All,
    Succ,
    Pred,
    Zero,
    /// The numerals themselves: closed, beta-eta-normal, pairwise distinct.
    System,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    Church,
    Barendregt,
}

fn parse_fuel(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(n) if n >= 1 => Ok(n),
        Ok(_) => Err("fuel must be at least 1".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_upto(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(_) => Err("upto must be at least 2".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let o = &cli.opts;
    let fuel = Fuel::new(o.fuel).expect("validated by clap");
    match &cli.command {
        Command::Eval { term } => eval(o, &read_term(o, term)?, fuel),
        Command::Numeral { system, n, sequence } => {
            let sys = system_named(system, *sequence)?;
            let t = sys.numeral(*n);
            emit(o, &TermOut { format: FORMAT, term: t.to_string() }, || t.to_string());
            Ok(0)
        }
        Command::Check { system, which, sequence } => {
            check(o, &system_named(system, *sequence)?, *which, fuel)
        }
        Command::Head { term, trace } => head(o, &read_term(o, term)?, *trace, fuel),
        Command::Eq { left, right } => {
            let verdict = beta_eta_eq(&read_term(o, left)?, &read_term(o, right)?, fuel);
            let code = match verdict {
                EqVerdict::Equal => 0,
                EqVerdict::Distinct => EXIT_FAIL,
                EqVerdict::Unknown(_) => EXIT_INCONCLUSIVE,
            };
            emit(o, &EqOut { format: FORMAT, verdict: &verdict }, || verdict.to_string());
            Ok(code)
        }
        Command::Definable { system, term, function, sequence } => {
            let sys = system_named(system, *sequence)?;
            let phi = NumericFunction::by_name(function)
                .with_context(|| format!("unknown function `{function}` (expected id, succ, pred, nonzero, k)"))?;
            let t = read_term(o, term)?;
            let points = grid(phi.arity(), o.upto);
            let report = check_definable(&sys, &t, &phi, &points, fuel);
            Ok(emit_reports(o, &sys.name, vec![report], Vec::new()))
        }
    }
}

fn system_named(name: &str, sequence: Sequence) -> Result<NumeralSystem> {
    let name: SystemName = name.parse()?;
    Ok(match (name, sequence) {
        (SystemName::C, Sequence::Barendregt) => c_system(SequenceSpec::barendregt()),
        _ => name.system(),
    })
}

/// The names in scope for terms: the prelude (if requested), then `--defs`.
fn environment(o: &Opts) -> Result<Program> {
    let prelude = if o.prelude { prelude() } else { Program::new() };
    let Some(path) = &o.defs else { return Ok(prelude) };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let defs = parse_program(&text).map_err(|e| syntax_error(&path.display().to_string(), &e))?;
    let mut env = Program::new();
    for (name, body) in prelude.definitions() {
        if !defs.contains(name) {
            env.define(name.clone(), body.clone()).expect("prelude names are distinct");
        }
    }
    for (name, body) in defs.definitions() {
        let body = env.resolve(body);
        env.define(name.clone(), body).expect("definition names are distinct");
    }
    Ok(env)
}

fn prelude() -> Program {
    let mut env = Program::new();
    for (name, body) in [("I", mk_i()), ("T", mk_t()), ("F", mk_f())] {
        env.define(name, body).expect("distinct");
    }
    for name in SystemName::ALL {
        let sys = name.system();
        for (letter, term) in [
            ("S", &sys.successor),
            ("P", &sys.predecessor),
            ("Z", &sys.zero_test),
        ] {
            if let Some(t) = term {
                env.define(format!("{letter}_{name}"), t.clone()).expect("distinct");
            }
        }
    }
    env.define("K_church", numerals_core::harness::church_k_term())
        .expect("distinct");
    env
}

fn read_term(o: &Opts, text: &str) -> Result<Term> {
    let env = environment(o)?;
    parse_term(text, &env).map_err(|e| syntax_error("term", &e))
}

fn syntax_error(source: &str, e: &ParseError) -> anyhow::Error {
    anyhow::anyhow!("{source}: {e}")
}

fn emit<T: Serialize>(o: &Opts, value: &T, text: impl FnOnce() -> String) {
    if o.json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{}", text());
    }
}

#[derive(Serialize)]
struct TermOut {
    format: u32,
    term: String,
}

#[derive(Serialize)]
struct EqOut<'a> {
    format: u32,
    #[serde(flatten)]
    verdict: &'a EqVerdict,
}

#[derive(Serialize)]
struct EvalOut {
    format: u32,
    normal: bool,
    term: String,
    steps: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta_steps: Option<u64>,
}

fn eval(o: &Opts, t: &Term, fuel: Fuel) -> Result<u8> {
    let out = beta_eta_normalize(t, fuel);
    let (normal, eta_steps) = match &out {
        ReductionOutcome::Normal { eta_steps, .. } => (true, Some(*eta_steps)),
        ReductionOutcome::OutOfFuel { .. } => (false, None),
    };
    let record = EvalOut {
        format: FORMAT,
        normal,
        term: out.term().to_string(),
        steps: out.steps(),
        eta_steps,
    };
    emit(o, &record, || {
        let mut s = record.term.clone();
        match eta_steps {
            Some(e) => s.push_str(&format!("\nsteps: {} beta, {e} eta", record.steps)),
            None => s.push_str(&format!("\nout of fuel after {} beta steps", record.steps)),
        }
        s
    });
    Ok(if normal { 0 } else { EXIT_FUEL })
}

#[derive(Serialize)]
struct HeadOut {
    format: u32,
    finished: bool,
    h: usize,
    term: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<String>>,
}

fn head(o: &Opts, t: &Term, trace: bool, fuel: Fuel) -> Result<u8> {
    let outcome = head_reduce(t, fuel);
    let finished = matches!(outcome, HeadOutcome::Done(_));
    let states = outcome.trace();
    let record = HeadOut {
        format: FORMAT,
        finished,
        h: states.length(),
        term: states.last().to_string(),
        trace: trace.then(|| states.states().iter().map(Term::to_string).collect()),
    };
    emit(o, &record, || {
        let mut lines = Vec::new();
        if let Some(all) = &record.trace {
            lines.extend(all.iter().enumerate().map(|(i, s)| format!("{i:>4}  {s}")));
        }
        lines.push(record.term.clone());
        if finished {
            lines.push(format!("h = {}", record.h));
        } else {
            lines.push(format!("no head normal form after {} steps", record.h));
        }
        lines.join("\n")
    });
    Ok(if finished { 0 } else { EXIT_FUEL })
}

fn check(o: &Opts, sys: &NumeralSystem, which: Which, fuel: Fuel) -> Result<u8> {
    let combinators: &[Combinator] = match which {
        Which::All => &[Combinator::Successor, Combinator::Predecessor, Combinator::ZeroTest],
        Which::Succ => &[Combinator::Successor],
        Which::Pred => &[Combinator::Predecessor],
        Which::Zero => &[Combinator::ZeroTest],
        Which::System => {
            let report = check_system(sys, o.upto);
            return Ok(emit_reports(o, &sys.name, vec![report], Vec::new()));
        }
    };
    let mut reports = Vec::new();
    let mut absent = Vec::new();
    for &c in combinators {
        match check_combinator(sys, c, o.upto, fuel) {
            Some(r) => reports.push(r),
            None => absent.push(c.to_string()),
        }
    }
    Ok(emit_reports(o, &sys.name, reports, absent))
}

#[derive(Serialize)]
struct ChecksOut<'a> {
    format: u32,
    system: &'a str,
    overall: Overall,
    reports: &'a [CheckReport],
    absent: &'a [String],
}

/// Prints the reports and returns the exit code: 1 if anything failed,
/// 3 if anything was inconclusive or absent, 0 otherwise.
fn emit_reports(o: &Opts, system: &str, reports: Vec<CheckReport>, absent: Vec<String>) -> u8 {
    let overall = if reports.iter().any(|r| r.overall == Overall::Fail) {
        Overall::Fail
    } else if !absent.is_empty() || reports.iter().any(|r| r.overall == Overall::Inconclusive) {
        Overall::Inconclusive
    } else {
        Overall::Pass
    };
    let record = ChecksOut {
        format: FORMAT,
        system,
        overall,
        reports: &reports,
        absent: &absent,
    };
    emit(o, &record, || {
        let mut lines: Vec<String> = reports.iter().map(|r| r.to_string().trim_end().to_owned()).collect();
        lines.extend(absent.iter().map(|a| format!("{a} absent")));
        lines.push(format!("overall: {overall}"));
        lines.join("\n")
    });
    match overall {
        Overall::Pass => 0,
        Overall::Fail => EXIT_FAIL,
        Overall::Inconclusive => EXIT_INCONCLUSIVE,
    }
}
