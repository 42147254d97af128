//! Seeded sampling of elements within size bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::Scalar;
use crate::free_rb::PureTensor;

use super::{add_term, AlgebraHandle, Basis, Carrier, Element, LinComb, Monomial, Prec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_degree: u32,
    pub max_len: usize,
    pub max_terms: usize,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
    /// Cap on sampled Hurwitz precision.
    pub precision: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_degree: 2,
            max_len: 3,
            max_terms: 3,
            coeff_bound: 3,
            precision: 4,
        }
    }
}

impl Budget {
    /// The smaller budget used inside `Ш(Ш(..))` and similar nestings.
    pub fn tiny() -> Self {
        Budget {
            max_degree: 2,
            max_len: 2,
            max_terms: 2,
            coeff_bound: 3,
            precision: 4,
        }
    }

    pub fn with_len(mut self, len: usize) -> Self {
        self.max_len = len;
        self
    }

    pub fn with_terms(mut self, terms: usize) -> Self {
        self.max_terms = terms;
        self
    }

    pub fn with_degree(mut self, degree: u32) -> Self {
        self.max_degree = degree;
        self
    }
}

/// Deterministic in `(h, budget, seed)`.
pub fn random_element(h: &AlgebraHandle, budget: &Budget, seed: u64) -> Element {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(h, budget, &mut rng)
}

pub fn random_element_with<R: Rng + ?Sized>(h: &AlgebraHandle, budget: &Budget, rng: &mut R) -> Element {
    let prec = match h.default_prec() {
        Prec::Finite(p) => Prec::Finite(p.min(budget.precision)),
        Prec::Exact => Prec::Exact,
    };
    random_at(h, budget, prec, rng, true)
}

fn random_at<R: Rng + ?Sized>(h: &AlgebraHandle, budget: &Budget, prec: Prec, rng: &mut R, nonzero: bool) -> Element {
    if budget.max_terms == 0 {
        return h.zero_at(prec);
    }
    match h.carrier() {
        Carrier::Hurwitz(..) => {
            let top = prec.finite().expect("finite");
            let inner = h.inner().expect("inner");
            let values = (0..=top)
                .map(|n| random_at(&inner, budget, Prec::Finite(top - n), rng, false))
                .collect();
            h.normalize(Element::Hurwitz(crate::hurwitz::HurwitzSeries::from_values(values)))
        }
        _ => {
            let lo = usize::from(nonzero);
            let count = rng.random_range(lo..=budget.max_terms);
            let mut lc = LinComb::new();
            for _ in 0..count {
                let b = random_basis(h, budget, prec, rng);
                add_term(&mut lc, b, random_coeff(h, budget, rng));
            }
            h.from_lincomb(lc, prec)
        }
    }
}

fn random_coeff<R: Rng + ?Sized>(h: &AlgebraHandle, budget: &Budget, rng: &mut R) -> Scalar {
    let b = budget.coeff_bound.max(1);
    let mut n = rng.random_range(-b..=b - 1);
    if n >= 0 {
        n += 1;
    }
    h.ring().from_i64(n)
}

/// A basis key of height at most `prec`.
pub fn random_basis<R: Rng + ?Sized>(h: &AlgebraHandle, budget: &Budget, prec: Prec, rng: &mut R) -> Basis {
    match h.carrier() {
        Carrier::Poly(vars) => {
            let mut e = vec![0u32; vars.len()];
            if !vars.is_empty() {
                let d = rng.random_range(0..=budget.max_degree);
                for _ in 0..d {
                    e[rng.random_range(0..vars.len())] += 1;
                }
            }
            Basis::Mono(Monomial::new(e))
        }
        Carrier::Sha(_) => {
            let inner = h.inner().expect("inner");
            let len = rng.random_range(1..=budget.max_len.max(1));
            Basis::Tensor(PureTensor(
                (0..len).map(|_| random_basis(&inner, budget, prec, rng)).collect(),
            ))
        }
        Carrier::Hurwitz(..) => {
            let inner = h.inner().expect("inner");
            let top = prec.min(h.default_prec()).finite().expect("finite");
            let n = rng.random_range(0..=top);
            Basis::Series(n, Box::new(random_basis(&inner, budget, Prec::Finite(top - n), rng)))
        }
    }
}
