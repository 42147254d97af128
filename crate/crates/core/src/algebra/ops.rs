//! Named linear operators and algebra maps attached to handles.

use std::fmt;
use std::sync::Arc;

use crate::coeffs::RingMode;
use crate::free_rb;
use crate::hurwitz;

use super::{AlgError, AlgebraHandle, Element, Poly, Result};

pub type MapFn = Arc<dyn Fn(&Element) -> Result<Element> + Send + Sync>;

/// A k-linear map between two carriers, usually an algebra homomorphism.
#[derive(Clone)]
pub struct Morphism {
    name: String,
    source: AlgebraHandle,
    target: AlgebraHandle,
    f: MapFn,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source, self.target)
    }
}

impl Morphism {
    pub fn new(
        name: impl Into<String>,
        source: &AlgebraHandle,
        target: &AlgebraHandle,
        f: impl Fn(&Element) -> Result<Element> + Send + Sync + 'static,
    ) -> Self {
        Morphism {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            f: Arc::new(f),
        }
    }

    pub fn identity(h: &AlgebraHandle) -> Self {
        Morphism::new("id", h, h, |x| Ok(x.clone()))
    }

    /// The polynomial map sending variable `i` of `source` to `images[i]`.
    pub fn substitution(source: &AlgebraHandle, target: &AlgebraHandle, images: Vec<Poly>) -> Result<Self> {
        let n = source
            .vars()
            .ok_or_else(|| source.mismatch("substitution source"))?
            .len();
        let m = target
            .vars()
            .ok_or_else(|| target.mismatch("substitution target"))?
            .len();
        if images.len() != n {
            return Err(AlgError::Domain(format!(
                "substitution needs {n} images, got {}",
                images.len()
            )));
        }
        let images: Arc<[Poly]> = images.into();
        Ok(Morphism::new("subst", source, target, move |x| match x {
            Element::Poly(p) => Ok(Element::Poly(p.substitute(&images, m))),
            other => Err(AlgError::Domain(format!(
                "substitution applied to a {}",
                other.kind_name()
            ))),
        }))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Morphism) -> Morphism {
        let (f, g) = (self.f.clone(), next.f.clone());
        Morphism {
            name: format!("{}∘{}", next.name, self.name),
            source: self.source.clone(),
            target: next.target.clone(),
            f: Arc::new(move |x| g(&f(x)?)),
        }
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        (self.f)(x)
    }

    /// Validates `x` against the source handle first.
    pub fn apply_checked(&self, x: &Element) -> Result<Element> {
        self.source.check(x)?;
        self.apply(x)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &AlgebraHandle {
        &self.source
    }

    pub fn target(&self) -> &AlgebraHandle {
        &self.target
    }
}

#[derive(Clone)]
pub enum RbKind {
    /// `∫_0^x` in one variable.
    Integration {
        var: usize,
    },
    /// `-λ · id`.
    ScaledIdentity,
    /// `P_A` on `Ш(A)`.
    Free,
    /// `P̃` on `A^ℕ`, built from an operator on `A`.
    Lift(Box<RbOperator>),
    Custom(MapFn),
}

/// An operator meant to satisfy `P(x)P(y) = P(xP(y)) + P(yP(x)) + λP(xy)`.
#[derive(Clone)]
pub struct RbOperator {
    name: String,
    handle: AlgebraHandle,
    kind: RbKind,
}

impl fmt::Debug for RbOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.name, self.handle)
    }
}

impl RbOperator {
    pub fn integration(h: &AlgebraHandle, var: &str) -> Result<Self> {
        let idx = h.var_index(var)?;
        if h.ring() != RingMode::Rational {
            return Err(AlgError::UnsupportedRing {
                operation: "integration",
                mode: h.ring(),
            });
        }
        if !h.lambda().is_zero() {
            return Err(AlgError::Domain(
                "integration is a Rota-Baxter operator of weight 0 only".into(),
            ));
        }
        Ok(RbOperator {
            name: format!("int_{var}"),
            handle: h.clone(),
            kind: RbKind::Integration { var: idx },
        })
    }

    pub fn scaled_identity(h: &AlgebraHandle) -> Self {
        RbOperator {
            name: "-lambda*id".into(),
            handle: h.clone(),
            kind: RbKind::ScaledIdentity,
        }
    }

    pub fn free(h: &AlgebraHandle) -> Result<Self> {
        if !h.is_sha() {
            return Err(h.mismatch("P_A needs a sha(..) handle"));
        }
        Ok(RbOperator {
            name: "P_A".into(),
            handle: h.clone(),
            kind: RbKind::Free,
        })
    }

    /// `P̃` on `inner^ℕ` at the given precision.
    pub fn lift(p: &RbOperator, precision: usize) -> Self {
        RbOperator {
            name: format!("lift({})", p.name),
            handle: p.handle.hurwitz(precision),
            kind: RbKind::Lift(Box::new(p.clone())),
        }
    }

    pub fn custom(
        name: impl Into<String>,
        h: &AlgebraHandle,
        f: impl Fn(&Element) -> Result<Element> + Send + Sync + 'static,
    ) -> Self {
        RbOperator {
            name: name.into(),
            handle: h.clone(),
            kind: RbKind::Custom(Arc::new(f)),
        }
    }

    /// The weight-appropriate default for a handle: integration in the first
    /// variable at weight 0 over the rationals, `-λ·id` otherwise.
    pub fn canonical(h: &AlgebraHandle) -> Result<Self> {
        match h.carrier() {
            super::Carrier::Sha(_) => RbOperator::free(h),
            super::Carrier::Hurwitz(..) => {
                let inner = h.inner().expect("inner");
                let n = h.default_prec().finite().expect("finite");
                Ok(RbOperator::lift(&RbOperator::canonical(&inner)?, n))
            }
            super::Carrier::Poly(vars) => {
                if h.lambda().is_zero() && h.ring() == RingMode::Rational && !vars.is_empty() {
                    RbOperator::integration(h, &vars[0].clone())
                } else {
                    Ok(RbOperator::scaled_identity(h))
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn handle(&self) -> &AlgebraHandle {
        &self.handle
    }

    pub fn kind(&self) -> &RbKind {
        &self.kind
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let h = &self.handle;
        match (&self.kind, x) {
            (RbKind::Integration { var }, Element::Poly(p)) => Ok(Element::Poly(p.integrate(*var, h.ring())?)),
            (RbKind::ScaledIdentity, _) => Ok(h.scale(&h.lambda().neg_ref(), x)),
            (RbKind::Free, Element::Sha(s)) => Ok(Element::Sha(free_rb::rb_operator(h, s))),
            (RbKind::Lift(p), Element::Hurwitz(f)) => Ok(Element::Hurwitz(hurwitz::rb_lift(h, p, f)?)),
            (RbKind::Custom(f), _) => f(x),
            (_, other) => Err(h.mismatch(other.kind_name())),
        }
    }

    pub fn apply_checked(&self, x: &Element) -> Result<Element> {
        self.handle.check(x)?;
        self.apply(x)
    }
}

#[derive(Clone)]
pub enum DiffKind {
    Derivative {
        var: usize,
    },
    DifferenceQuotient {
        var: usize,
    },
    Zero,
    /// `d̃` on `Ш(A)`, built from a derivation on `A`.
    Tilde(Box<DiffOperator>),
    /// `∂` on `A^ℕ`.
    Partial,
    Custom(MapFn),
}

/// An operator meant to satisfy `d(xy) = d(x)y + x d(y) + λ d(x)d(y)`.
#[derive(Clone)]
pub struct DiffOperator {
    name: String,
    handle: AlgebraHandle,
    kind: DiffKind,
}

impl fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.name, self.handle)
    }
}

impl DiffOperator {
    pub fn derivative(h: &AlgebraHandle, var: &str) -> Result<Self> {
        Ok(DiffOperator {
            name: format!("d/d{var}"),
            handle: h.clone(),
            kind: DiffKind::Derivative { var: h.var_index(var)? },
        })
    }

    pub fn difference_quotient(h: &AlgebraHandle, var: &str) -> Result<Self> {
        let idx = h.var_index(var)?;
        if h.lambda().is_zero() {
            return Err(AlgError::ZeroWeight);
        }
        Ok(DiffOperator {
            name: format!("dq_{var}"),
            handle: h.clone(),
            kind: DiffKind::DifferenceQuotient { var: idx },
        })
    }

    pub fn zero(h: &AlgebraHandle) -> Self {
        DiffOperator {
            name: "0".into(),
            handle: h.clone(),
            kind: DiffKind::Zero,
        }
    }

    pub fn tilde(d: &DiffOperator) -> Self {
        DiffOperator {
            name: format!("tilde({})", d.name),
            handle: d.handle.sha(),
            kind: DiffKind::Tilde(Box::new(d.clone())),
        }
    }

    pub fn partial(h: &AlgebraHandle) -> Result<Self> {
        if !h.is_hurwitz() {
            return Err(h.mismatch("partial needs a hur(..) handle"));
        }
        Ok(DiffOperator {
            name: "partial".into(),
            handle: h.clone(),
            kind: DiffKind::Partial,
        })
    }

    pub fn custom(
        name: impl Into<String>,
        h: &AlgebraHandle,
        f: impl Fn(&Element) -> Result<Element> + Send + Sync + 'static,
    ) -> Self {
        DiffOperator {
            name: name.into(),
            handle: h.clone(),
            kind: DiffKind::Custom(Arc::new(f)),
        }
    }

    /// d/dx at weight 0 and the difference quotient otherwise, in the first
    /// variable; `d̃` and `∂` for the other carrier kinds.
    pub fn canonical(h: &AlgebraHandle) -> Result<Self> {
        match h.carrier() {
            super::Carrier::Sha(_) => Ok(DiffOperator::tilde(&DiffOperator::canonical(
                &h.inner().expect("inner"),
            )?)),
            super::Carrier::Hurwitz(..) => DiffOperator::partial(h),
            super::Carrier::Poly(vars) => match vars.first() {
                None => Ok(DiffOperator::zero(h)),
                Some(v) if h.lambda().is_zero() => DiffOperator::derivative(h, &v.clone()),
                Some(v) => DiffOperator::difference_quotient(h, &v.clone()),
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn handle(&self) -> &AlgebraHandle {
        &self.handle
    }

    pub fn kind(&self) -> &DiffKind {
        &self.kind
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let h = &self.handle;
        match (&self.kind, x) {
            (DiffKind::Derivative { var }, Element::Poly(p)) => Ok(Element::Poly(p.derivative(*var, h.ring()))),
            (DiffKind::DifferenceQuotient { var }, Element::Poly(p)) => {
                Ok(Element::Poly(p.difference_quotient(*var, h.lambda())))
            }
            (DiffKind::Zero, _) => Ok(h.zero_at(h.prec(x))),
            (DiffKind::Tilde(d), Element::Sha(s)) => Ok(Element::Sha(free_rb::tilde_d(h, d, s)?)),
            (DiffKind::Partial, Element::Hurwitz(f)) => Ok(Element::Hurwitz(hurwitz::partial(h, f)?)),
            (DiffKind::Custom(f), _) => f(x),
            (_, other) => Err(h.mismatch(other.kind_name())),
        }
    }

    pub fn apply_checked(&self, x: &Element) -> Result<Element> {
        self.handle.check(x)?;
        self.apply(x)
    }

    /// `d^n(x)`.
    pub fn iterate(&self, x: &Element, n: usize) -> Result<Element> {
        let mut acc = x.clone();
        for _ in 0..n {
            acc = self.apply(&acc)?;
        }
        Ok(acc)
    }

    /// The same operator viewed as a linear map.
    pub fn as_morphism(&self) -> Morphism {
        let d = self.clone();
        Morphism::new(self.name.clone(), &self.handle, &self.handle, move |x| d.apply(x))
    }
}

impl RbOperator {
    pub fn as_morphism(&self) -> Morphism {
        let p = self.clone();
        Morphism::new(self.name.clone(), &self.handle, &self.handle, move |x| p.apply(x))
    }
}

#[cfg(feature = "exp-span")]
pub mod exp_span {
    //! Formal span of `e_k ≈ e^{-kx}` for `k ≥ 1`, with `e_j e_k = e_{j+k}`,
    //! and the weight-0 operator `P_0(f) = -∫_x^∞ f`, `P_0(e_k) = -(1/k) e_k`.
    //! There is no unit: `P_0` diverges on constants.

    use std::collections::BTreeMap;

    use crate::coeffs::{RingMode, Scalar};

    use super::{AlgError, Result};

    #[derive(Debug, Clone, PartialEq, Eq, Default)]
    pub struct ExpSpanElement {
        terms: BTreeMap<u64, Scalar>,
    }

    impl ExpSpanElement {
        pub fn zero() -> Self {
            Self::default()
        }

        /// Rejects `k = 0`; the constant is outside the span.
        pub fn from_terms(terms: impl IntoIterator<Item = (u64, Scalar)>) -> Result<Self> {
            let mut out = BTreeMap::new();
            for (k, c) in terms {
                if k == 0 {
                    return Err(AlgError::Domain("e_0 lies outside the span of e_k, k >= 1".into()));
                }
                crate::algebra::add_term(&mut out, k, c);
            }
            Ok(ExpSpanElement { terms: out })
        }

        pub fn terms(&self) -> &BTreeMap<u64, Scalar> {
            &self.terms
        }

        pub fn add(&self, other: &Self) -> Self {
            let mut out = self.terms.clone();
            for (k, c) in &other.terms {
                crate::algebra::add_term(&mut out, *k, c.clone());
            }
            ExpSpanElement { terms: out }
        }

        pub fn mul(&self, other: &Self) -> Self {
            let mut out = BTreeMap::new();
            for (j, a) in &self.terms {
                for (k, b) in &other.terms {
                    crate::algebra::add_term(&mut out, j + k, a * b);
                }
            }
            ExpSpanElement { terms: out }
        }
    }

    pub fn exp_span_rb(f: &ExpSpanElement) -> Result<ExpSpanElement> {
        let mut out = BTreeMap::new();
        for (k, c) in &f.terms {
            let inv = RingMode::Rational.from_fraction(&(-1).into(), &(*k as i64).into())?;
            crate::algebra::add_term(&mut out, *k, c * &inv);
        }
        Ok(ExpSpanElement { terms: out })
    }

}
