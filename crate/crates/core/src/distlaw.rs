//! The mixed distributive law `β_A : Ш(A^ℕ) → (Ш(A))^ℕ` and the structures
//! it lifts.

use crate::algebra::{AlgError, AlgebraHandle, Element, Morphism, RbOperator, Result};
use crate::free_rb::{self, FreeRbElement};
use crate::hurwitz::{self, HurwitzSeries};
use crate::laws::{Counterexample, LawReport};
use crate::text::render;

/// `(η_A)^ℕ : A^ℕ → (Ш(A))^ℕ`, truncated at `n`.
pub fn eta_pointwise(a: &AlgebraHandle, source_precision: usize, n: usize) -> Morphism {
    let sha_a = a.sha();
    let out = sha_a.hurwitz(n);
    let out2 = out.clone();
    Morphism::new("eta^N", &a.hurwitz(source_precision), &out, move |f| {
        let f = f.as_series().ok_or_else(|| out2.mismatch(f.kind_name()))?;
        let values = f
            .values()
            .iter()
            .take(n + 1)
            .map(|v| Element::Sha(free_rb::eta(&sha_a, v)))
            .collect();
        let s = HurwitzSeries::from_values(values);
        Ok(Element::Hurwitz(hurwitz::normalized(&out2, s)))
    })
}

/// `β_A(x)` at precision `n`. `source` is the handle `Ш(hur(A, M))` of `x`.
///
/// Evaluated as the Rota-Baxter homomorphism induced by `(η_A)^ℕ` into
/// `((Ш(A))^ℕ, P̃_{P_A})`: `β(f_0⊗…⊗f_k) = η^ℕ(f_0) · P̃(β(f_1⊗…⊗f_k))`.
pub fn beta(source: &AlgebraHandle, x: &FreeRbElement, n: usize) -> Result<HurwitzSeries> {
    let hur_a = source
        .inner()
        .filter(|h| h.is_hurwitz())
        .ok_or_else(|| source.mismatch("beta needs sha(hur(..))"))?;
    let a = hur_a.inner().expect("hur inner");
    let m = hur_a.default_prec().finite().expect("finite");
    if let Some(p) = x.prec().finite() {
        if p < n {
            return Err(AlgError::PrecisionUnderflow {
                needed: n,
                available: p,
            });
        }
    }
    let phi = eta_pointwise(&a, m, n);
    let lift = RbOperator::lift(&RbOperator::free(&a.sha())?, n);
    let out = free_rb::induced_rb_hom(&phi, &lift, x)?;
    let out = lift.handle().truncate(&out, crate::algebra::Prec::Finite(n));
    Ok(out.as_series().cloned().expect("series"))
}

/// `β` as a map `Ш(hur(A, M)) → hur(Ш(A), n)`. An input known only to
/// precision `p < n` gives an output at precision `p`, so the map can be
/// applied to the values of a series.
pub fn beta_morphism(a: &AlgebraHandle, source_precision: usize, n: usize) -> Morphism {
    let src = a.hurwitz(source_precision).sha();
    let src2 = src.clone();
    Morphism::new("beta", &src, &a.sha().hurwitz(n), move |x| {
        let x = x.as_sha().ok_or_else(|| src2.mismatch(x.kind_name()))?;
        let p = x.prec().finite().map_or(n, |p| p.min(n));
        Ok(Element::Hurwitz(beta(&src2, x, p)?))
    })
}

/// `h^ℕ ∘ β_A`, the structure map `Ш(A^ℕ) → A^ℕ` lifted from `h: Ш(A) → A`.
pub fn lift_t_structure(h: &Morphism, n: usize) -> Result<Morphism> {
    let a = h.target().clone();
    let src = a.hurwitz(n).sha();
    let target = a.hurwitz(n);
    let (h2, src2, t2) = (h.clone(), src.clone(), target.clone());
    Ok(Morphism::new(format!("lift({})", h.name()), &src, &target, move |x| {
        let x = x.as_sha().ok_or_else(|| src2.mismatch(x.kind_name()))?;
        let b = beta(&src2, x, n)?;
        Ok(Element::Hurwitz(hurwitz::map_pointwise(&h2, &t2, &b)?))
    }))
}

/// `β_A ∘ Ш(f)` applied to `u`, for a costructure `f: A → A^ℕ`.
pub fn lift_costructure(f: &Morphism, u: &FreeRbElement, n: usize) -> Result<HurwitzSeries> {
    let (mid, _) = costructure_handles(f, n)?;
    let image = free_rb::sha_map(f, &mid, u)?;
    beta(&mid, &image, n)
}

/// The lifted costructure `Ш(A) → (Ш(A))^ℕ` as a map.
pub fn lift_costructure_morphism(f: &Morphism, n: usize) -> Result<Morphism> {
    let (_, target) = costructure_handles(f, n)?;
    let src = f.source().sha();
    let (f2, src2) = (f.clone(), src.clone());
    Ok(Morphism::new(format!("lift({})", f.name()), &src, &target, move |u| {
        let u = u.as_sha().ok_or_else(|| src2.mismatch(u.kind_name()))?;
        Ok(Element::Hurwitz(lift_costructure(&f2, u, n)?))
    }))
}

fn costructure_handles(f: &Morphism, n: usize) -> Result<(AlgebraHandle, AlgebraHandle)> {
    let t = f.target();
    if !t.is_hurwitz() {
        return Err(t.mismatch("costructure target must be hur(..)"));
    }
    let m = t.default_prec().finite().expect("finite");
    if m < n {
        return Err(AlgError::PrecisionUnderflow {
            needed: n,
            available: m,
        });
    }
    Ok((t.sha(), f.source().sha().hurwitz(n)))
}

/// Checks `f ∘ h = h^ℕ ∘ β_A ∘ Ш(f)` on each sample of `Ш(A)`.
pub fn check_mixed_compat(h: &Morphism, f: &Morphism, samples: &[FreeRbElement], n: usize, seed: u64) -> LawReport {
    let a = h.target().clone();
    let sha_a = h.source().clone();
    let an = a.hurwitz(n);
    let mut report = LawReport::new("mixed_compat", seed);
    for (i, u) in samples.iter().enumerate() {
        report.samples = i + 1;
        let outcome = (|| -> Result<(Element, Element)> {
            let lhs = f.apply(&h.apply(&Element::Sha(u.clone()))?)?;
            let mid = f.target().sha();
            let image = free_rb::sha_map(f, &mid, u)?;
            let b = beta(&mid, &image, n)?;
            let rhs = Element::Hurwitz(hurwitz::map_pointwise(h, &an, &b)?);
            Ok((lhs, rhs))
        })();
        let failure = match outcome {
            Ok((lhs, rhs)) if an.eq(&lhs, &rhs) => None,
            Ok((lhs, rhs)) => Some((render(&an, &lhs), render(&an, &rhs), None)),
            Err(e) => Some((String::new(), String::new(), Some(e.to_string()))),
        };
        if let Some((lhs, rhs, note)) = failure {
            report.passed = false;
            report.counterexample = Some(Counterexample {
                index: i,
                lambda: a.lambda().to_string(),
                inputs: vec![("u".into(), render(&sha_a, &Element::Sha(u.clone())))],
                lhs,
                rhs,
                note,
            });
            return report;
        }
    }
    report
}

/// An object carrying both a Rota-Baxter structure `h` and a differential
/// costructure `f` on the same carrier, listed in either order.
#[derive(Debug, Clone)]
pub enum MixedPair {
    StructureFirst { h: Morphism, f: Morphism },
    CostructureFirst { f: Morphism, h: Morphism },
}

impl MixedPair {
    pub fn carrier(&self) -> &AlgebraHandle {
        match self {
            MixedPair::StructureFirst { h, .. } | MixedPair::CostructureFirst { h, .. } => h.target(),
        }
    }

    pub fn structure(&self) -> &Morphism {
        match self {
            MixedPair::StructureFirst { h, .. } | MixedPair::CostructureFirst { h, .. } => h,
        }
    }

    pub fn costructure(&self) -> &Morphism {
        match self {
            MixedPair::StructureFirst { f, .. } | MixedPair::CostructureFirst { f, .. } => f,
        }
    }

    pub fn is_structure_first(&self) -> bool {
        matches!(self, MixedPair::StructureFirst { .. })
    }

    /// The compatibility square is the same for both orders.
    pub fn check(&self, samples: &[FreeRbElement], n: usize, seed: u64) -> LawReport {
        check_mixed_compat(self.structure(), self.costructure(), samples, n, seed)
    }
}

/// `⟨⟨A, h⟩, f⟩ ↦ ⟨⟨A, f⟩, h⟩`, and back.
pub fn phi_swap(pair: MixedPair) -> MixedPair {
    match pair {
        MixedPair::StructureFirst { h, f } => MixedPair::CostructureFirst { f, h },
        MixedPair::CostructureFirst { f, h } => MixedPair::StructureFirst { h, f },
    }
}

/// `K(R, P)`: the structure map `Ш(R) → R` of a Rota-Baxter operator.
pub fn t_structure_of(p: &RbOperator) -> Morphism {
    let p2 = p.clone();
    let src = p.handle().sha();
    let src2 = src.clone();
    Morphism::new(format!("eval({})", p.name()), &src, p.handle(), move |x| {
        let x = x.as_sha().ok_or_else(|| src2.mismatch(x.kind_name()))?;
        free_rb::counit_eval(&p2, x)
    })
}

#[cfg(test)]
mod tests;
