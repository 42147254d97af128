//! Command-line front end: `eval`, `check`, `bench` and `repl`.
//!
//! Exit status is 0 on success, 1 when a law check fails, 2 on usage,
//! parse or evaluation errors.

pub mod bench;
pub mod eval;
pub mod parser;
pub mod repl;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};

use crate::algebra::{AlgebraHandle, Ctx, Mutation};
use crate::coeffs::RingMode;
use crate::laws::{self, reports_json, Config, DEFAULT_SEED};
use crate::text::{render, to_json};

use eval::{BaseDiff, BaseRb, Operators};

pub const EXIT_OK: i32 = 0;
pub const EXIT_LAW_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rb-shuffle",
    version,
    about = "Exact Rota-Baxter, Hurwitz series and distributive law computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Coefficient ring: q, z or zmod:M.
    #[arg(long, default_value = "q", value_parser = parse_ring)]
    pub ring: RingMode,
    /// Weight λ.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args, Clone)]
pub struct OperatorArgs {
    /// Rota-Baxter operator on polynomial carriers.
    #[arg(long, default_value = "canonical")]
    pub rb: BaseRb,
    /// λ-derivation on polynomial carriers.
    #[arg(long, default_value = "canonical")]
    pub diff: BaseDiff,
    /// Precision of series introduced by eps(..).
    #[arg(long, default_value_t = 4)]
    pub precision: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one expression.
    Eval {
        expr: String,
        /// Algebra, e.g. "sha(poly(x,y))" or "hur(poly(x),4)".
        #[arg(long)]
        handle: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ops: OperatorArgs,
    },
    /// Run law suites.
    Check {
        /// Suite to run; repeatable. All suites when absent.
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, env = "RB_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        precision: usize,
        /// Override every variant's sample count.
        #[arg(long)]
        samples: Option<usize>,
        /// Include wall times in the output.
        #[arg(long)]
        timings: bool,
        /// Corrupt one formula on purpose.
        #[arg(long, value_parser = parse_mutation)]
        mutate: Option<Mutation>,
        /// List suites instead of running them.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Term counts and timing of one shuffle product of pure tensors.
    Bench {
        /// Tail length of the left tensor (m + 1 factors).
        #[arg(short, default_value_t = 3)]
        m: usize,
        /// Tail length of the right tensor (n + 1 factors).
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Interactive session.
    Repl {
        #[arg(long, default_value = "sha(poly(x,y))")]
        handle: String,
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ops: OperatorArgs,
    },
}

fn parse_ring(s: &str) -> Result<RingMode, String> {
    s.parse().map_err(|e| format!("{e}"))
}

pub fn parse_mutation(s: &str) -> Result<Mutation, String> {
    Ok(match s {
        "shuffle-lambda" => Mutation::ShuffleDropLambda,
        "hurwitz-lambda-power" => Mutation::HurwitzDropLambdaPower,
        "tilde-third-term" => Mutation::TildeDDropThirdTerm,
        "tilde-repeated-factor" => Mutation::TildeDRepeatedFactor,
        "rb-swap-degrees" => Mutation::RbSwapDegrees,
        _ => {
            return Err(format!(
                "unknown mutation {s:?} (shuffle-lambda, hurwitz-lambda-power, tilde-third-term, \
                 tilde-repeated-factor, rb-swap-degrees)"
            ))
        }
    })
}

fn context(common: &Common) -> Result<Ctx, String> {
    let ring = common.ring;
    let lambda = match &common.lambda {
        None => ring.zero(),
        Some(s) => ring.parse_scalar(s).map_err(|e| format!("--lambda: {e}"))?,
    };
    Ctx::new(ring, lambda).map_err(|e| e.to_string())
}

fn operators(o: &OperatorArgs) -> Operators {
    Operators { rb: o.rb, diff: o.diff }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: io::Error| e.to_string();
    match cmd {
        Command::Eval {
            expr,
            handle,
            common,
            ops,
        } => {
            let h = AlgebraHandle::parse(&handle, context(&common)?).map_err(|e| format!("--handle: {e}"))?;
            let x = eval::eval_str(&expr, &h, &operators(&ops), ops.precision).map_err(|e| e.to_string())?;
            if common.json {
                let v = serde_json::json!({
                    "schema": laws::SCHEMA,
                    "handle": h.to_string(),
                    "value": to_json(&h, &x),
                    "text": render(&h, &x),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "{}", render(&h, &x)).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            suites,
            seed,
            precision,
            samples,
            timings,
            mutate,
            list,
            common,
        } => {
            if list {
                for s in laws::registry() {
                    writeln!(out, "{:<26} {}", s.name, s.statement).map_err(io)?;
                }
                return Ok(EXIT_OK);
            }
            let ring = common.ring;
            let lambda = match &common.lambda {
                None => None,
                Some(s) => Some(ring.parse_scalar(s).map_err(|e| format!("--lambda: {e}"))?),
            };
            let cfg = Config {
                ring,
                lambda,
                precision,
                samples,
                mutation: mutate,
                parallel: true,
            };
            let names = (!suites.is_empty()).then_some(suites.as_slice());
            let reports = laws::run_many(names, seed, &cfg)?;
            let passed = reports.iter().all(|r| r.passed);
            if common.json {
                let v = reports_json(&reports, timings);
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                for r in &reports {
                    let mut line = r.summary_line();
                    if !timings {
                        if let Some(i) = line.find(", ") {
                            if line.starts_with("PASS") {
                                line.truncate(i);
                                line.push(')');
                            }
                        }
                    }
                    writeln!(out, "{line}").map_err(io)?;
                    if let Some(d) = r.details() {
                        write!(out, "{d}").map_err(io)?;
                    }
                }
                let failed = reports.iter().filter(|r| !r.passed).count();
                writeln!(out, "{} suites, {failed} failed, seed {seed}", reports.len()).map_err(io)?;
            }
            Ok(if passed { EXIT_OK } else { EXIT_LAW_FAILED })
        }
        Command::Bench { m, n, timings, common } => {
            let r = bench::run(m, n, context(&common)?).map_err(|e| e.to_string())?;
            if common.json {
                let v = serde_json::json!({"schema": laws::SCHEMA, "bench": r.to_json(timings)});
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "m = {m}, n = {n}, λ = {}: {} terms", r.lambda, r.terms).map_err(io)?;
                for (len, c) in &r.by_length {
                    writeln!(out, "  length {len}: {c}").map_err(io)?;
                }
                let verdict = if r.top_matches() { "ok" } else { "MISMATCH" };
                writeln!(
                    out,
                    "  top stratum {} vs C({}, {n}) = {} {verdict}",
                    r.top_terms,
                    m + n,
                    r.expected_top
                )
                .map_err(io)?;
                if timings {
                    writeln!(out, "  {:.3} ms", r.elapsed.as_secs_f64() * 1e3).map_err(io)?;
                }
            }
            Ok(if r.top_matches() { EXIT_OK } else { EXIT_LAW_FAILED })
        }
        Command::Repl { handle, common, ops } => {
            let h = AlgebraHandle::parse(&handle, context(&common)?).map_err(|e| format!("--handle: {e}"))?;
            let mut repl = repl::Repl {
                handle: h,
                ops: operators(&ops),
                precision: ops.precision,
                json: common.json,
            };
            let stdin = io::stdin();
            repl.run(stdin.lock(), out).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}
