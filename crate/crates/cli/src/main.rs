use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use srcomp_core::engine::{self, CrosscheckReport, Engine, Verdict};
use srcomp_core::interpreters::{first_term_count, second_term_count, TermCount};
use srcomp_core::lhrc::Lhrc;
use srcomp_core::oracle::{enumerate_with_ceiling, DEFAULT_CEILING};
use srcomp_core::sequences::{self, verdict_is_consistent, verify_bijections, Sequence};
use srcomp_core::{Error, PartSet};

#[derive(Parser)]
#[command(
    name = "srcomp",
    version,
    about = "Exact counting of restricted integer compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the compositions of N with parts in SET.
    Count(CountArgs),
    /// List the compositions of N with parts in SET in lexicographic order.
    Enumerate(EnumerateArgs),
    /// Evaluate a named sequence.
    Seq(SeqArgs),
    /// Linear recurrence tools.
    Lhrc {
        #[command(subcommand)]
        command: LhrcCommand,
    },
    /// Compare every engine against the oracle for n = 0..=MAX_N.
    Crosscheck(CrosscheckArgs),
    /// Empirical checks.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
}

#[derive(Args)]
struct CountArgs {
    /// Part set, e.g. `{1,2}`, `1..3`, `2..`, `mod(1,2)`, `not{2}`, `not(2..4)`.
    #[arg(long)]
    set: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "auto", value_parser = parse_engine)]
    engine: Engine,
    #[arg(long, value_enum, env = "SRCOMP_FORMAT", default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    set: String,
    #[arg(long)]
    n: usize,
    /// Print at most this many compositions.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value = "lines")]
    format: ListFormat,
    /// Refuse to enumerate more than this many compositions.
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u64,
}

#[derive(Args)]
struct SeqArgs {
    /// One of mfib, lucas, padovan, perrin, pell, pell-lucas.
    name: String,
    #[arg(long)]
    n: usize,
    /// Order of the m-Fibonacci sequence.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value = "closed")]
    method: SeqMethod,
    #[arg(long, value_enum, env = "SRCOMP_FORMAT", default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqMethod {
    Closed,
    Recurrence,
}

#[derive(Subcommand)]
enum LhrcCommand {
    /// Evaluate f(N) for f(n) = Σ k_j f(n − a_j).
    Solve(LhrcArgs),
}

#[derive(Args)]
struct LhrcArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    offsets: Vec<usize>,
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    coeffs: Vec<i64>,
    /// f(0), ..., f(a_l − 1).
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    init: Vec<BigInt>,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "closed")]
    method: LhrcMethod,
    #[arg(long, value_enum, env = "SRCOMP_FORMAT", default_value = "plain")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum LhrcMethod {
    Dp,
    Closed,
    TwoTerm,
    ThreeTerm,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long)]
    set: String,
    #[arg(long)]
    max_n: usize,
    /// Comma-separated engines; defaults to brute,dio,dp1,dp2,closed.
    #[arg(long, value_delimiter = ',', value_parser = parse_engine)]
    engines: Vec<Engine>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Test the composition/sequence correspondences over a range of n.
    Bijections {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: the message for stderr and the exit code.
struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Unsupported(_) => 3,
            Error::CeilingExceeded { .. } => 4,
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            message: e.to_string(),
            code: 2,
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn parse_set(spec: &str) -> Result<PartSet, Failure> {
    spec.parse::<PartSet>().map_err(|e| {
        let mut message = format!("invalid set {spec:?}: {e}");
        if let Error::Syntax { pos, .. } = e {
            message.push_str(&format!("\n  {spec}\n  {}^", " ".repeat(pos)));
        }
        Failure { message, code: 2 }
    })
}

fn print_json<T: Serialize>(value: &T) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct CountReport {
    set_spec: String,
    n: usize,
    engine: Engine,
    #[serde(serialize_with = "display")]
    count: num_bigint::BigUint,
    t1: TermCount,
    t2: TermCount,
    elapsed_ms: f64,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn cmd_count(args: CountArgs) -> CmdResult {
    let set = parse_set(&args.set)?;
    let start = Instant::now();
    let (used, count) = engine::count(&set, args.n, args.engine)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    match args.format {
        Format::Plain => println!("{count}"),
        Format::Json => print_json(&CountReport {
            set_spec: set.canonical(),
            n: args.n,
            engine: used,
            count,
            t1: TermCount::Finite(first_term_count(&set, args.n)),
            t2: second_term_count(&set, args.n),
            elapsed_ms,
        })?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct EnumerateReport {
    set_spec: String,
    n: usize,
    total: usize,
    truncated: bool,
    compositions: Vec<Vec<usize>>,
}

pub const TRUNCATION_MARKER: &str = "...";

fn cmd_enumerate(args: EnumerateArgs) -> CmdResult {
    let set = parse_set(&args.set)?;
    let all = enumerate_with_ceiling(&set, args.n, args.ceiling)?;
    let total = all.len();
    let shown = args.limit.unwrap_or(total).min(total);
    let truncated = shown < total;
    match args.format {
        ListFormat::Lines => {
            let mut out = io::stdout().lock();
            for c in &all[..shown] {
                writeln!(out, "{c}")?;
            }
            if truncated {
                writeln!(out, "{TRUNCATION_MARKER}")?;
            }
        }
        ListFormat::Json => print_json(&EnumerateReport {
            set_spec: set.canonical(),
            n: args.n,
            total,
            truncated,
            compositions: all[..shown].iter().map(|c| c.parts().to_vec()).collect(),
        })?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct SeqReport {
    sequence: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    n: usize,
    method: sequences::Method,
    #[serde(serialize_with = "display")]
    value: num_bigint::BigUint,
}

fn cmd_seq(args: SeqArgs) -> CmdResult {
    let seq = Sequence::from_name(&args.name, args.m)?;
    let method = match args.method {
        SeqMethod::Closed => sequences::Method::Closed,
        SeqMethod::Recurrence => sequences::Method::Recurrence,
    };
    let value = seq.value(args.n, method)?;
    match args.format {
        Format::Plain => println!("{value}"),
        Format::Json => print_json(&SeqReport {
            sequence: seq.name(),
            m: match seq {
                Sequence::MFibonacci(m) => Some(m),
                _ => None,
            },
            n: args.n,
            method,
            value,
        })?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct LhrcReport {
    offsets: Vec<usize>,
    coeffs: Vec<i64>,
    #[serde(serialize_with = "display_all")]
    init: Vec<BigInt>,
    n: usize,
    method: LhrcMethod,
    #[serde(serialize_with = "display")]
    value: BigInt,
}

fn display_all<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn cmd_lhrc(args: LhrcArgs) -> CmdResult {
    let rec = Lhrc::new(args.offsets.clone(), args.coeffs.clone(), args.init.clone())?;
    let value = match args.method {
        LhrcMethod::Dp => rec.eval_dp(args.n),
        LhrcMethod::Closed => rec.solve_closed(args.n),
        LhrcMethod::TwoTerm => rec.solve_two_term(args.n)?,
        LhrcMethod::ThreeTerm => rec.solve_three_term(args.n)?,
    };
    match args.format {
        Format::Plain => println!("{value}"),
        Format::Json => print_json(&LhrcReport {
            offsets: args.offsets,
            coeffs: args.coeffs,
            init: args.init,
            n: args.n,
            method: args.method,
            value,
        })?,
    }
    Ok(0)
}

fn cmd_crosscheck(args: CrosscheckArgs) -> CmdResult {
    let set = parse_set(&args.set)?;
    let engines = if args.engines.is_empty() {
        Engine::CONCRETE.to_vec()
    } else {
        args.engines
    };
    let report: CrosscheckReport = engine::crosscheck(&set, args.max_n, &engines)?;
    print_json(&report)?;
    Ok(match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
    })
}

fn cmd_verify_bijections(max_n: usize) -> CmdResult {
    let verdicts = verify_bijections(max_n)?;
    print_json(&verdicts)?;
    let inconsistent: Vec<u8> = verdicts
        .iter()
        .filter(|v| !verdict_is_consistent(v, max_n))
        .map(|v| v.claim_id)
        .collect();
    if inconsistent.is_empty() {
        Ok(0)
    } else {
        eprintln!("verdicts contradict their evidence for claims {inconsistent:?}");
        Ok(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Seq(args) => cmd_seq(args),
        Command::Lhrc {
            command: LhrcCommand::Solve(args),
        } => cmd_lhrc(args),
        Command::Crosscheck(args) => cmd_crosscheck(args),
        Command::Verify {
            command: VerifyCommand::Bijections { max_n },
        } => cmd_verify_bijections(max_n),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
