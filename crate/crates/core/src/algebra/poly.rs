use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::coeffs::{RingMode, Scalar};

use super::{add_term, AlgError, Result};

/// Exponent vector; ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut out = self.0.clone();
        out[i] = e;
        Monomial(out)
    }

    pub fn render(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial. The number of variables is fixed by the handle.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Poly::from_terms([(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, i: usize, ring: RingMode) -> Self {
        Poly::from_terms([(Monomial::var(nvars, i), ring.one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            add_term(&mut out, m, c);
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut out, m.clone(), c.clone());
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a * c)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                add_term(&mut out, m.mul(n), a * b);
            }
        }
        Poly { terms: out }
    }

    pub fn derivative(&self, var: usize, ring: RingMode) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            (e > 0).then(|| (m.with_exponent(var, e - 1), c * &ring.from_i64(e as i64)))
        }))
    }

    /// `(f(x + λ) - f(x)) / λ`, expanded without division.
    pub fn difference_quotient(&self, var: usize, lambda: &Scalar) -> Poly {
        let ring = lambda.mode();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            for i in 0..e {
                let coeff = &(c * &ring.binomial(e as u64, i as u64)) * &lambda.pow(e - 1 - i);
                add_term(&mut out, m.with_exponent(var, i), coeff);
            }
        }
        Poly { terms: out }
    }

    /// `∫_0^x f`. Only defined over the rationals.
    pub fn integrate(&self, var: usize, ring: RingMode) -> Result<Poly> {
        if ring != RingMode::Rational {
            return Err(AlgError::UnsupportedRing {
                operation: "integration",
                mode: ring,
            });
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            let inv = ring.from_fraction(&1.into(), &(e as i64 + 1).into())?;
            add_term(&mut out, m.with_exponent(var, e + 1), c * &inv);
        }
        Ok(Poly { terms: out })
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Poly], target_nvars: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target_nvars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[i]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, c.neg_ref())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_bare_string());
            } else if mag.is_one() {
                out.push_str(&m.render(vars));
            } else {
                out.push_str(&format!("{}*{}", mag.to_bare_string(), m.render(vars)));
            }
        }
        out
    }
}
