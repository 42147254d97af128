//! Term growth of `(a_0⊗…⊗a_m) ⋄ (b_0⊗…⊗b_n)` on generic pure tensors.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::algebra::{AlgError, AlgebraHandle, Basis, Ctx, Monomial, Prec};
use crate::coeffs::binomial;
use crate::free_rb::{mixable_shuffle, FreeRbElement, PureTensor};

pub const MAX_TAIL: usize = 8;

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub m: usize,
    pub n: usize,
    pub lambda: String,
    pub terms: usize,
    /// Number of distinct tensors of each length.
    pub by_length: BTreeMap<usize, usize>,
    pub top_terms: usize,
    pub expected_top: u64,
    pub elapsed: Duration,
}

impl BenchReport {
    pub fn top_matches(&self) -> bool {
        self.top_terms as u64 == self.expected_top
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let strata: Vec<Value> = self
            .by_length
            .iter()
            .map(|(l, c)| json!({"length": l, "terms": c}))
            .collect();
        let mut v = json!({
            "m": self.m,
            "n": self.n,
            "lambda": self.lambda,
            "terms": self.terms,
            "strata": strata,
            "top_terms": self.top_terms,
            "expected_top": self.expected_top,
            "top_matches": self.top_matches(),
        });
        if timings {
            v["wall_us"] = json!(self.elapsed.as_micros() as u64);
        }
        v
    }
}

/// Pure tensors `a_0⊗…⊗a_m` and `b_0⊗…⊗b_n` in distinct variables, with
/// the algebra containing them.
pub fn generic_pair(m: usize, n: usize, ctx: Ctx) -> (AlgebraHandle, FreeRbElement, FreeRbElement) {
    let names: Vec<String> = (0..=m)
        .map(|i| format!("a{i}"))
        .chain((0..=n).map(|j| format!("b{j}")))
        .collect();
    let a = AlgebraHandle::poly(&names, ctx);
    let h = a.sha();
    let nv = names.len();
    let one = h.ring().one();
    let word = |range: std::ops::Range<usize>| {
        let t = PureTensor(range.map(|i| Basis::Mono(Monomial::var(nv, i))).collect());
        FreeRbElement::from_terms([(t, one.clone())], Prec::Exact)
    };
    let x = word(0..m + 1);
    let y = word(m + 1..nv);
    (h, x, y)
}

pub fn run(m: usize, n: usize, ctx: Ctx) -> Result<BenchReport, AlgError> {
    if m > MAX_TAIL || n > MAX_TAIL {
        return Err(AlgError::Domain(format!(
            "bench sizes are limited to m, n ≤ {MAX_TAIL}"
        )));
    }
    let lambda = ctx.lambda().to_string();
    let (h, x, y) = generic_pair(m, n, ctx);
    let start = Instant::now();
    let prod = mixable_shuffle(&h, &x, &y);
    let elapsed = start.elapsed();
    let mut by_length = BTreeMap::new();
    for t in prod.terms().keys() {
        *by_length.entry(t.len()).or_insert(0) += 1;
    }
    let top_terms = by_length.get(&(m + n + 1)).copied().unwrap_or(0);
    let expected_top = binomial((m + n) as u64, n as u64)
        .to_string()
        .parse()
        .expect("fits in u64");
    Ok(BenchReport {
        m,
        n,
        lambda,
        terms: prod.terms().len(),
        by_length,
        top_terms,
        expected_top,
        elapsed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn top(m: usize, n: usize) -> usize {
        run(m, n, Ctx::rational("0")).unwrap().top_terms
    }

    #[test]
    fn small_counts() {
        assert_eq!(top(1, 1), 2);
        assert_eq!(top(1, 2), 3);
        assert_eq!(run(0, 3, Ctx::rational("1")).unwrap().terms, 1);
    }

    #[test]
    fn weight_one_counts_are_delannoy() {
        // every lattice path gives a distinct tensor
        let r = run(2, 2, Ctx::rational("1")).unwrap();
        assert_eq!(r.terms, 13);
        assert_eq!(r.by_length[&3], 1);
    }

    #[test]
    fn bounds() {
        assert!(run(9, 0, Ctx::rational("0")).is_err());
    }
}
