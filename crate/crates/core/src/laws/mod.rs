//! Seeded property checks for every algebraic law the library relies on.
//!
//! A suite is a list of variants; each variant draws samples from an RNG
//! seeded by `(run seed, suite name, variant name, sample index)`, so any
//! failure replays from the report alone.

pub mod oracles;
mod report;
mod suites;

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{AlgebraHandle, Budget, Ctx, Element, Mutation, Prec, Result, DEFAULT_MAX_DEPTH};
use crate::coeffs::{RingMode, Scalar, Weight};
use crate::free_rb::FreeRbElement;
use crate::text::render;

pub use report::{reports_json, Counterexample, LawReport, SCHEMA};

pub const DEFAULT_SEED: u64 = 1;

/// Which weights a variant is meaningful for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weights {
    All,
    Nonzero,
    Zero,
}

pub type Check = fn(&mut Sample) -> Result<()>;

#[derive(Clone, Copy)]
pub struct Variant {
    pub name: &'static str,
    pub samples: usize,
    pub weights: Weights,
    pub rational_only: bool,
    pub check: Check,
}

impl Variant {
    pub const fn new(name: &'static str, samples: usize, check: Check) -> Self {
        Variant {
            name,
            samples,
            weights: Weights::All,
            rational_only: false,
            check,
        }
    }

    pub const fn weights(mut self, w: Weights) -> Self {
        self.weights = w;
        self
    }

    pub const fn rational(mut self) -> Self {
        self.rational_only = true;
        self
    }
}

pub struct LawSuite {
    pub name: &'static str,
    /// The identities checked, in plain notation.
    pub statement: &'static str,
    pub variants: Vec<Variant>,
}

impl LawSuite {
    pub fn variant(&self, name: &str) -> Option<&Variant> {
        self.variants.iter().find(|v| v.name == name)
    }

    pub fn default_samples(&self) -> usize {
        self.variants.iter().map(|v| v.samples).sum()
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub ring: RingMode,
    /// Fixes λ instead of cycling through the default weights.
    pub lambda: Option<Scalar>,
    pub precision: usize,
    /// Overrides every variant's sample count.
    pub samples: Option<usize>,
    pub mutation: Option<Mutation>,
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ring: RingMode::Rational,
            lambda: None,
            precision: 4,
            samples: None,
            mutation: None,
            parallel: true,
        }
    }
}

impl Config {
    /// The weights cycled through when λ is not fixed.
    pub fn weight_cycle(&self, w: Weights) -> Vec<Scalar> {
        let r = self.ring;
        let all = match r {
            RingMode::Rational => vec![r.zero(), r.one(), r.parse_scalar("1/2").expect("literal")],
            _ => vec![r.zero(), r.one(), r.from_i64(-1)],
        };
        let pick: Vec<Scalar> = match &self.lambda {
            Some(l) => vec![l.clone()],
            None => all,
        };
        pick.into_iter()
            .filter(|l| match w {
                Weights::All => true,
                Weights::Nonzero => !l.is_zero(),
                Weights::Zero => l.is_zero(),
            })
            .collect()
    }
}

/// State for one sample: its weight, its RNG, and what it has drawn.
pub struct Sample {
    pub index: usize,
    pub ctx: Arc<Ctx>,
    pub precision: usize,
    pub rng: ChaCha8Rng,
    inputs: Vec<(String, String)>,
    failure: Option<(String, String, String)>,
}

impl Sample {
    pub fn lambda(&self) -> &Scalar {
        self.ctx.lambda()
    }

    pub fn ring(&self) -> RingMode {
        self.ctx.ring
    }

    /// Parses a handle literal such as `sha(poly(x))`; `N` stands for the
    /// working precision.
    pub fn handle(&self, spec: &str) -> AlgebraHandle {
        let spec = spec.replace('N', &self.precision.to_string());
        AlgebraHandle::parse(&spec, (*self.ctx).clone())
            .expect("valid handle literal")
            .with_ctx(self.ctx.clone())
    }

    pub fn draw(&mut self, name: &str, h: &AlgebraHandle, budget: &Budget) -> Element {
        let x = crate::algebra::random_element_with(h, budget, &mut self.rng);
        self.note(name, h, &x);
        x
    }

    pub fn draw_sha(&mut self, name: &str, h: &AlgebraHandle, budget: &Budget) -> FreeRbElement {
        self.draw(name, h, budget).as_sha().cloned().expect("sha handle")
    }

    pub fn note(&mut self, name: &str, h: &AlgebraHandle, x: &Element) {
        self.inputs.push((name.to_string(), render(h, x)));
    }

    pub fn note_text(&mut self, name: &str, text: String) {
        self.inputs.push((name.to_string(), text));
    }

    /// Records a failure unless `lhs = rhs` at their common precision.
    pub fn check_eq(&mut self, what: &str, h: &AlgebraHandle, lhs: &Element, rhs: &Element) -> bool {
        self.check_eq_at(what, h, lhs, rhs, 0)
    }

    /// As [`Sample::check_eq`], and also fails when the common precision is
    /// below `min_prec`, so a comparison cannot pass by truncating
    /// everything away.
    pub fn check_eq_at(
        &mut self,
        what: &str,
        h: &AlgebraHandle,
        lhs: &Element,
        rhs: &Element,
        min_prec: usize,
    ) -> bool {
        if self.failure.is_some() {
            return false;
        }
        let common = lhs.prec().min(rhs.prec());
        if common < Prec::Finite(min_prec) {
            self.failure = Some((
                format!("{what}: compared at precision {common}, expected at least {min_prec}"),
                render(h, lhs),
                render(h, rhs),
            ));
            return false;
        }
        if h.eq(lhs, rhs) {
            return true;
        }
        self.failure = Some((what.to_string(), render(h, lhs), render(h, rhs)));
        false
    }

    pub fn check_bool(&mut self, what: &str, ok: bool, lhs: String, rhs: String) -> bool {
        if self.failure.is_some() {
            return false;
        }
        if !ok {
            self.failure = Some((what.to_string(), lhs, rhs));
        }
        ok
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mix_name(seed: u64, name: &str) -> u64 {
    name.bytes().fold(splitmix(seed), |acc, b| splitmix(acc ^ u64::from(b)))
}

pub fn sample_seed(seed: u64, suite: &str, variant: &str, index: usize) -> u64 {
    splitmix(mix_name(mix_name(seed, suite), variant) ^ index as u64)
}

/// Runs one variant; the report is named `suite/variant`.
pub fn run_variant(suite: &LawSuite, v: &Variant, samples: usize, seed: u64, cfg: &Config) -> LawReport {
    let start = Instant::now();
    let mut report = LawReport::new(format!("{}/{}", suite.name, v.name), seed);
    let weights = cfg.weight_cycle(v.weights);
    if weights.is_empty() || (v.rational_only && cfg.ring != RingMode::Rational) {
        report.wall_time = Some(start.elapsed());
        return report;
    }
    for i in 0..samples {
        let lambda = weights[i % weights.len()].clone();
        let ctx = Arc::new(Ctx {
            ring: cfg.ring,
            weight: Weight::new(lambda),
            max_depth: DEFAULT_MAX_DEPTH,
            mutation: cfg.mutation,
        });
        let mut s = Sample {
            index: i,
            ctx,
            precision: cfg.precision,
            rng: ChaCha8Rng::seed_from_u64(sample_seed(seed, suite.name, v.name, i)),
            inputs: Vec::new(),
            failure: None,
        };
        let outcome = (v.check)(&mut s);
        report.samples = i + 1;
        let failure = match outcome {
            Err(e) => Some((format!("error: {e}"), String::new(), String::new())),
            Ok(()) => s.failure.take(),
        };
        if let Some((what, lhs, rhs)) = failure {
            report.passed = false;
            report.counterexample = Some(Counterexample {
                index: i,
                lambda: s.ctx.lambda().to_string(),
                inputs: s.inputs,
                lhs,
                rhs,
                note: Some(what),
            });
            break;
        }
    }
    report.wall_time = Some(start.elapsed());
    report
}

/// Runs every variant of a suite and folds them into one report.
pub fn run_suite(suite: &LawSuite, seed: u64, cfg: &Config) -> LawReport {
    let start = Instant::now();
    let mut report = LawReport::new(suite.name, seed);
    for v in &suite.variants {
        let n = cfg.samples.unwrap_or(v.samples);
        let r = run_variant(suite, v, n, seed, cfg);
        report.samples += r.samples;
        if !r.passed {
            report.passed = false;
            let mut c = r.counterexample.expect("failed reports carry a counterexample");
            c.note = Some(format!("{}: {}", v.name, c.note.unwrap_or_default()));
            report.counterexample = Some(c);
            break;
        }
    }
    report.wall_time = Some(start.elapsed());
    report
}

pub fn registry() -> Vec<LawSuite> {
    suites::registry()
}

pub fn find_suite(name: &str) -> Option<LawSuite> {
    registry().into_iter().find(|s| s.name == name)
}

/// Runs the named suites (or all of them) and returns reports in registry
/// order.
pub fn run_many(names: Option<&[String]>, seed: u64, cfg: &Config) -> std::result::Result<Vec<LawReport>, String> {
    let all = registry();
    let chosen: Vec<&LawSuite> = match names {
        None => all.iter().collect(),
        Some(names) => {
            let mut out = Vec::new();
            for n in names {
                out.push(
                    all.iter()
                        .find(|s| s.name == n)
                        .ok_or_else(|| format!("unknown suite {n:?}"))?,
                );
            }
            out
        }
    };
    Ok(if cfg.parallel {
        chosen.par_iter().map(|s| run_suite(s, seed, cfg)).collect()
    } else {
        chosen.iter().map(|s| run_suite(s, seed, cfg)).collect()
    })
}

pub fn run_all(seed: u64, cfg: &Config) -> Vec<LawReport> {
    run_many(None, seed, cfg).expect("registry names are valid")
}

/// Which suite exercises which identity.
pub fn coverage() -> Vec<(&'static str, &'static str)> {
    registry().iter().map(|s| (s.statement, s.name)).collect()
}
