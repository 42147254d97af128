//! Commutative unital algebras over the coefficient ring, addressed through
//! runtime [`AlgebraHandle`]s.
//!
//! Three carrier kinds nest freely: polynomials, the free Rota-Baxter
//! algebra `Ш(A)` of a carrier, and the λ-Hurwitz series `A^ℕ` of a carrier.
//! Every carrier has a basis of [`Basis`] keys, and every element has a
//! canonical form.
//!
//! Hurwitz carriers are only ever known up to a finite [`Prec`]. Precision is
//! measured as a height on basis keys: a series index adds to the height of
//! the value it holds, and a tensor has the height of its tallest factor. An
//! element at precision `N` is a combination of keys of height at most `N`;
//! the keys above `N` span an ideal, so every operation is well defined on
//! the truncation. For doubly indexed series this is the triangle
//! `m + n <= N`.

pub mod ops;
pub mod poly;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coeffs::{CoeffError, RingMode, Scalar, Weight};
use crate::free_rb::{self, FreeRbElement, PureTensor};
use crate::hurwitz::{self, HurwitzSeries};

pub use ops::{DiffOperator, Morphism, RbOperator};
pub use poly::{Monomial, Poly};
pub use random::{random_element, random_element_with, Budget};

pub const DEFAULT_MAX_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("handle mismatch: expected {expected}, found {found}")]
    HandleMismatch { expected: String, found: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("precision underflow: need {needed}, have {available}")]
    PrecisionUnderflow { needed: usize, available: usize },
    #[error("the difference quotient needs a nonzero weight; use the derivative at λ = 0")]
    ZeroWeight,
    #[error("{operation} needs rational coefficients, ring is {mode}")]
    UnsupportedRing { operation: &'static str, mode: RingMode },
    #[error("nesting depth {depth} exceeds the configured maximum {max}")]
    NestingTooDeep { depth: usize, max: usize },
    #[error("invalid handle: {0}")]
    InvalidHandle(String),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;

/// Deliberate formula corruptions, used to confirm the law suites notice
/// them. `None` in every production context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Drop the λ-weighted summand of the recursive shuffle step.
    ShuffleDropLambda,
    /// Replace `λ^k` by `1` in the Hurwitz product.
    HurwitzDropLambdaPower,
    /// Drop the λ-weighted third term of the free derivation on `Ш(A)`.
    TildeDDropThirdTerm,
    /// Use the third term with `x_1` repeated, `λ d(x_0)x_1 ⊗ x_1 ⊗ … ⊗ x_n`.
    TildeDRepeatedFactor,
    /// Follow `P_A` by exchanging degrees 1 and 2 of the first variable in
    /// every tensor factor.
    RbSwapDegrees,
}

/// Ring mode, weight and configuration shared by every handle in a session.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ctx {
    pub ring: RingMode,
    pub weight: Weight,
    pub max_depth: usize,
    pub mutation: Option<Mutation>,
}

impl Ctx {
    pub fn new(ring: RingMode, lambda: Scalar) -> Result<Self> {
        if lambda.mode() != ring {
            return Err(CoeffError::ModeMismatch {
                left: ring,
                right: lambda.mode(),
            }
            .into());
        }
        Ok(Ctx {
            ring,
            weight: Weight::new(lambda),
            max_depth: DEFAULT_MAX_DEPTH,
            mutation: None,
        })
    }

    pub fn rational(lambda: &str) -> Self {
        let lambda = RingMode::Rational.parse_scalar(lambda).expect("valid rational literal");
        Ctx::new(RingMode::Rational, lambda).expect("same mode")
    }

    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn lambda(&self) -> &Scalar {
        self.weight.lambda()
    }
}

/// Known precision of an element. `Exact` sorts above every finite bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prec {
    Finite(usize),
    Exact,
}

impl Prec {
    pub fn plus(self, n: usize) -> Prec {
        match self {
            Prec::Finite(p) => Prec::Finite(p + n),
            Prec::Exact => Prec::Exact,
        }
    }

    /// `self - n`, or `None` when that would go below zero.
    pub fn minus(self, n: usize) -> Option<Prec> {
        match self {
            Prec::Finite(p) => p.checked_sub(n).map(Prec::Finite),
            Prec::Exact => Some(Prec::Exact),
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Prec::Finite(p) => Some(p),
            Prec::Exact => None,
        }
    }
}

impl fmt::Display for Prec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prec::Finite(p) => write!(f, "{p}"),
            Prec::Exact => write!(f, "exact"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Carrier {
    Poly(Arc<[String]>),
    Sha(Arc<Carrier>),
    Hurwitz(Arc<Carrier>, usize),
}

impl Carrier {
    pub fn depth(&self) -> usize {
        match self {
            Carrier::Poly(_) => 0,
            Carrier::Sha(inner) | Carrier::Hurwitz(inner, _) => 1 + inner.depth(),
        }
    }

    fn is_exact(&self) -> bool {
        match self {
            Carrier::Poly(_) => true,
            Carrier::Sha(inner) => inner.is_exact(),
            Carrier::Hurwitz(..) => false,
        }
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Carrier::Poly(vars) => write!(f, "poly({})", vars.join(",")),
            Carrier::Sha(inner) => write!(f, "sha({inner})"),
            Carrier::Hurwitz(inner, n) => write!(f, "hur({inner},{n})"),
        }
    }
}

/// A commutative unital algebra: a carrier shape plus the session context.
#[derive(Clone)]
pub struct AlgebraHandle {
    carrier: Arc<Carrier>,
    ctx: Arc<Ctx>,
}

impl PartialEq for AlgebraHandle {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx)
    }
}

impl fmt::Debug for AlgebraHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, λ={}]", self.carrier, self.ctx.ring, self.ctx.weight)
    }
}

impl fmt::Display for AlgebraHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.carrier.fmt(f)
    }
}

impl AlgebraHandle {
    pub fn poly<S: AsRef<str>>(vars: &[S], ctx: Ctx) -> Self {
        Self::poly_in(vars, Arc::new(ctx))
    }

    pub fn poly_in<S: AsRef<str>>(vars: &[S], ctx: Arc<Ctx>) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        AlgebraHandle {
            carrier: Arc::new(Carrier::Poly(vars.into())),
            ctx,
        }
    }

    /// `Ш(self)`.
    pub fn sha(&self) -> Self {
        AlgebraHandle {
            carrier: Arc::new(Carrier::Sha(self.carrier.clone())),
            ctx: self.ctx.clone(),
        }
    }

    /// `self^ℕ`, known up to `precision`.
    pub fn hurwitz(&self, precision: usize) -> Self {
        AlgebraHandle {
            carrier: Arc::new(Carrier::Hurwitz(self.carrier.clone(), precision)),
            ctx: self.ctx.clone(),
        }
    }

    pub fn with_ctx(&self, ctx: Arc<Ctx>) -> Self {
        AlgebraHandle {
            carrier: self.carrier.clone(),
            ctx,
        }
    }

    /// Parses `poly(x,y)`, `sha(...)` and `hur(..., N)`.
    pub fn parse(src: &str, ctx: Ctx) -> Result<Self> {
        let ctx = Arc::new(ctx);
        let mut rest = src.trim();
        let carrier = parse_carrier(&mut rest)?;
        if !rest.trim().is_empty() {
            return Err(AlgError::InvalidHandle(format!("trailing input {rest:?}")));
        }
        let handle = AlgebraHandle {
            carrier: Arc::new(carrier),
            ctx,
        };
        handle.validate_depth()?;
        Ok(handle)
    }

    pub fn validate_depth(&self) -> Result<()> {
        let depth = self.depth();
        if depth > self.ctx.max_depth {
            return Err(AlgError::NestingTooDeep {
                depth,
                max: self.ctx.max_depth,
            });
        }
        Ok(())
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn ctx(&self) -> &Arc<Ctx> {
        &self.ctx
    }

    pub fn ring(&self) -> RingMode {
        self.ctx.ring
    }

    pub fn lambda(&self) -> &Scalar {
        self.ctx.lambda()
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.ctx.mutation
    }

    pub fn depth(&self) -> usize {
        self.carrier.depth()
    }

    /// True when no Hurwitz carrier occurs anywhere in the tree.
    pub fn is_exact(&self) -> bool {
        self.carrier.is_exact()
    }

    pub fn is_poly(&self) -> bool {
        matches!(*self.carrier, Carrier::Poly(_))
    }

    pub fn is_sha(&self) -> bool {
        matches!(*self.carrier, Carrier::Sha(_))
    }

    pub fn is_hurwitz(&self) -> bool {
        matches!(*self.carrier, Carrier::Hurwitz(..))
    }

    /// Variables of a polynomial handle.
    pub fn vars(&self) -> Option<&[String]> {
        match &*self.carrier {
            Carrier::Poly(vars) => Some(vars),
            _ => None,
        }
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars()
            .ok_or_else(|| self.mismatch("poly(..)"))?
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }

    /// The carrier one level down for `Ш` and `^ℕ` handles.
    pub fn inner(&self) -> Option<AlgebraHandle> {
        match &*self.carrier {
            Carrier::Poly(_) => None,
            Carrier::Sha(inner) | Carrier::Hurwitz(inner, _) => Some(AlgebraHandle {
                carrier: inner.clone(),
                ctx: self.ctx.clone(),
            }),
        }
    }

    fn inner_unchecked(&self) -> AlgebraHandle {
        self.inner().expect("handle has an inner carrier")
    }

    /// Precision used for units, scalars and sampling under this handle.
    pub fn default_prec(&self) -> Prec {
        fn go(c: &Carrier) -> Prec {
            match c {
                Carrier::Poly(_) => Prec::Exact,
                Carrier::Sha(inner) => go(inner),
                Carrier::Hurwitz(inner, n) => Prec::Finite(*n).min(go(inner)),
            }
        }
        go(&self.carrier)
    }

    pub(crate) fn mismatch(&self, found: impl fmt::Display) -> AlgError {
        AlgError::HandleMismatch {
            expected: self.to_string(),
            found: found.to_string(),
        }
    }

    // ---- constructors -------------------------------------------------

    pub fn zero(&self) -> Element {
        self.zero_at(self.default_prec())
    }

    pub fn zero_at(&self, prec: Prec) -> Element {
        match &*self.carrier {
            Carrier::Poly(_) => Element::Poly(Poly::zero()),
            Carrier::Sha(_) => Element::Sha(FreeRbElement::zero(self.sha_prec(prec))),
            Carrier::Hurwitz(..) => {
                let top = self.series_top(prec);
                let inner = self.inner_unchecked();
                Element::Hurwitz(HurwitzSeries::from_values(
                    (0..=top).map(|i| inner.zero_at(Prec::Finite(top - i))).collect(),
                ))
            }
        }
    }

    pub fn unit(&self) -> Element {
        self.unit_at(self.default_prec())
    }

    pub fn unit_at(&self, prec: Prec) -> Element {
        self.scalar_at(&self.ring().one(), prec)
    }

    /// `c · 1`.
    pub fn scalar(&self, c: &Scalar) -> Element {
        self.scalar_at(c, self.default_prec())
    }

    pub fn scalar_at(&self, c: &Scalar, prec: Prec) -> Element {
        let mut lc = LinComb::new();
        add_term(&mut lc, self.unit_basis(), c.clone());
        self.from_lincomb(lc, prec)
    }

    fn sha_prec(&self, prec: Prec) -> Prec {
        if self.is_exact() {
            Prec::Exact
        } else if prec == Prec::Exact {
            self.default_prec()
        } else {
            prec
        }
    }

    fn series_top(&self, prec: Prec) -> usize {
        match prec {
            Prec::Finite(p) => p,
            Prec::Exact => match self.default_prec() {
                Prec::Finite(p) => p,
                Prec::Exact => unreachable!("hurwitz handles have finite precision"),
            },
        }
    }

    // ---- basis ---------------------------------------------------------

    /// The basis key of `1`; it is a single key for every carrier kind.
    pub fn unit_basis(&self) -> Basis {
        match &*self.carrier {
            Carrier::Poly(vars) => Basis::Mono(Monomial::one(vars.len())),
            Carrier::Sha(_) => Basis::Tensor(PureTensor(vec![self.inner_unchecked().unit_basis()])),
            Carrier::Hurwitz(..) => Basis::Series(0, Box::new(self.inner_unchecked().unit_basis())),
        }
    }

    /// Expands an element into basis keys.
    pub fn decompose(&self, x: &Element) -> LinComb<Basis> {
        match x {
            Element::Poly(p) => p
                .terms()
                .iter()
                .map(|(m, c)| (Basis::Mono(m.clone()), c.clone()))
                .collect(),
            Element::Sha(s) => s
                .terms()
                .iter()
                .map(|(t, c)| (Basis::Tensor(t.clone()), c.clone()))
                .collect(),
            Element::Hurwitz(f) => {
                let inner = self.inner_unchecked();
                let mut out = LinComb::new();
                for (n, v) in f.values().iter().enumerate() {
                    for (k, c) in inner.decompose(v) {
                        out.insert(Basis::Series(n, Box::new(k)), c);
                    }
                }
                out
            }
        }
    }

    /// The element spelled by a single basis key, at `prec`.
    pub fn materialize(&self, b: &Basis, prec: Prec) -> Element {
        let mut lc = LinComb::new();
        lc.insert(b.clone(), self.ring().one());
        self.from_lincomb(lc, prec)
    }

    /// Rebuilds an element from basis keys; keys above `prec` are dropped.
    pub fn from_lincomb(&self, lc: LinComb<Basis>, prec: Prec) -> Element {
        match &*self.carrier {
            Carrier::Poly(_) => Element::Poly(Poly::from_terms(lc.into_iter().map(|(b, c)| match b {
                Basis::Mono(m) => (m, c),
                other => panic!("basis {other:?} is not a monomial"),
            }))),
            Carrier::Sha(_) => {
                let prec = self.sha_prec(prec);
                let terms = lc
                    .into_iter()
                    .filter(|(b, _)| Prec::Finite(b.height()) <= prec)
                    .map(|(b, c)| match b {
                        Basis::Tensor(t) => (t, c),
                        other => panic!("basis {other:?} is not a tensor"),
                    });
                Element::Sha(FreeRbElement::from_terms(terms, prec))
            }
            Carrier::Hurwitz(..) => {
                let top = self.series_top(prec);
                let inner = self.inner_unchecked();
                let mut slots: Vec<LinComb<Basis>> = vec![LinComb::new(); top + 1];
                for (b, c) in lc {
                    match b {
                        Basis::Series(n, k) if n <= top => add_term(&mut slots[n], *k, c),
                        Basis::Series(..) => {}
                        other => panic!("basis {other:?} is not a series key"),
                    }
                }
                let values = slots
                    .into_iter()
                    .enumerate()
                    .map(|(n, s)| inner.from_lincomb(s, Prec::Finite(top - n)))
                    .collect();
                Element::Hurwitz(HurwitzSeries::from_values(values))
            }
        }
    }

    /// Product of two basis keys, expanded in the basis and truncated at
    /// `prec`.
    pub fn mul_basis(&self, a: &Basis, b: &Basis, prec: Prec) -> LinComb<Basis> {
        match (&*self.carrier, a, b) {
            (Carrier::Poly(_), Basis::Mono(x), Basis::Mono(y)) => {
                let mut lc = LinComb::new();
                lc.insert(Basis::Mono(x.mul(y)), self.ring().one());
                lc
            }
            _ => {
                let x = self.materialize(a, prec);
                let y = self.materialize(b, prec);
                self.decompose(&self.mul(&x, &y))
            }
        }
    }

    // ---- arithmetic ------------------------------------------------------

    pub fn prec(&self, x: &Element) -> Prec {
        x.prec()
    }

    /// Forgets everything above `prec`.
    pub fn truncate(&self, x: &Element, prec: Prec) -> Element {
        match x {
            Element::Poly(_) => x.clone(),
            Element::Sha(s) => {
                if self.is_exact() {
                    x.clone()
                } else {
                    Element::Sha(s.truncated(prec))
                }
            }
            Element::Hurwitz(f) => {
                let top = match prec.min(f.prec()) {
                    Prec::Finite(p) => p,
                    Prec::Exact => unreachable!("series precision is finite"),
                };
                let inner = self.inner_unchecked();
                Element::Hurwitz(HurwitzSeries::from_values(
                    f.values()[..=top]
                        .iter()
                        .enumerate()
                        .map(|(n, v)| inner.truncate(v, Prec::Finite(top - n)))
                        .collect(),
                ))
            }
        }
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        match x {
            Element::Poly(p) => p.is_zero(),
            Element::Sha(s) => s.is_zero(),
            Element::Hurwitz(f) => {
                let inner = self.inner_unchecked();
                f.values().iter().all(|v| inner.is_zero(v))
            }
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.add(b)),
            (Element::Sha(a), Element::Sha(b)) => Element::Sha(a.add(b)),
            (Element::Hurwitz(f), Element::Hurwitz(g)) => {
                let top = f.prec().min(g.prec()).finite().expect("finite");
                let inner = self.inner_unchecked();
                let values = (0..=top).map(|n| inner.add(&f.values()[n], &g.values()[n])).collect();
                self.normalize(Element::Hurwitz(HurwitzSeries::from_values(values)))
            }
            _ => panic!("payload kinds differ under {self}"),
        }
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        match x {
            Element::Poly(p) => Element::Poly(p.scale(c)),
            Element::Sha(s) => Element::Sha(s.scale(c)),
            Element::Hurwitz(f) => {
                let inner = self.inner_unchecked();
                Element::Hurwitz(HurwitzSeries::from_values(
                    f.values().iter().map(|v| inner.scale(c, v)).collect(),
                ))
            }
        }
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.scale(&self.ring().from_i64(-1), x)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.mul(b)),
            (Element::Sha(a), Element::Sha(b)) => Element::Sha(free_rb::mixable_shuffle(self, a, b)),
            (Element::Hurwitz(f), Element::Hurwitz(g)) => Element::Hurwitz(hurwitz::hurwitz_mul(self, f, g)),
            _ => panic!("payload kinds differ under {self}"),
        }
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        let mut acc = self.unit_at(self.prec(x));
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Sum of an iterator of elements; `prec` fixes the precision of an
    /// empty sum.
    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Element>, prec: Prec) -> Element {
        items.into_iter().fold(self.zero_at(prec), |acc, x| self.add(&acc, x))
    }

    /// Equality of canonical forms at the smaller of the two precisions.
    pub fn eq(&self, x: &Element, y: &Element) -> bool {
        let p = self.prec(x).min(self.prec(y));
        self.truncate(x, p) == self.truncate(y, p)
    }

    /// Re-truncates a series to its own derived precision.
    pub(crate) fn normalize(&self, x: Element) -> Element {
        match &x {
            Element::Hurwitz(f) => self.truncate(&x, f.prec()),
            _ => x,
        }
    }

    /// Deep check that `x` is a canonical element of this carrier.
    pub fn check(&self, x: &Element) -> Result<()> {
        let ring = self.ring();
        let coeff_ok = |c: &Scalar| -> Result<()> {
            if c.mode() != ring {
                return Err(CoeffError::ModeMismatch {
                    left: ring,
                    right: c.mode(),
                }
                .into());
            }
            if c.is_zero() {
                return Err(AlgError::Domain("zero coefficient stored".into()));
            }
            Ok(())
        };
        match (&*self.carrier, x) {
            (Carrier::Poly(vars), Element::Poly(p)) => {
                for (m, c) in p.terms() {
                    if m.exponents().len() != vars.len() {
                        return Err(self.mismatch(format!("monomial with {} variables", m.exponents().len())));
                    }
                    coeff_ok(c)?;
                }
                Ok(())
            }
            (Carrier::Sha(_), Element::Sha(s)) => {
                let inner = self.inner_unchecked();
                if self.is_exact() != (s.prec() == Prec::Exact) {
                    return Err(self.mismatch(format!("tensor combination at precision {}", s.prec())));
                }
                for (t, c) in s.terms() {
                    if t.0.is_empty() {
                        return Err(AlgError::Domain("empty tensor".into()));
                    }
                    for b in &t.0 {
                        inner.check_basis(b)?;
                    }
                    if Prec::Finite(t.height()) > s.prec() {
                        return Err(AlgError::Domain(format!(
                            "tensor of height {} above precision {}",
                            t.height(),
                            s.prec()
                        )));
                    }
                    coeff_ok(c)?;
                }
                Ok(())
            }
            (Carrier::Hurwitz(..), Element::Hurwitz(f)) => {
                let inner = self.inner_unchecked();
                f.values().iter().try_for_each(|v| inner.check(v))
            }
            (_, other) => Err(self.mismatch(other.kind_name())),
        }
    }

    fn check_basis(&self, b: &Basis) -> Result<()> {
        match (&*self.carrier, b) {
            (Carrier::Poly(vars), Basis::Mono(m)) if m.exponents().len() == vars.len() => Ok(()),
            (Carrier::Sha(_), Basis::Tensor(t)) if !t.0.is_empty() => {
                let inner = self.inner_unchecked();
                t.0.iter().try_for_each(|f| inner.check_basis(f))
            }
            (Carrier::Hurwitz(..), Basis::Series(_, k)) => self.inner_unchecked().check_basis(k),
            _ => Err(self.mismatch(format!("basis key {b:?}"))),
        }
    }
}

fn parse_carrier(rest: &mut &str) -> Result<Carrier> {
    fn eat(rest: &mut &str, tok: &str) -> bool {
        let trimmed = rest.trim_start();
        if let Some(r) = trimmed.strip_prefix(tok) {
            *rest = r;
            true
        } else {
            false
        }
    }
    fn expect(rest: &mut &str, tok: &str) -> Result<()> {
        if eat(rest, tok) {
            Ok(())
        } else {
            Err(AlgError::InvalidHandle(format!("expected {tok:?} at {rest:?}")))
        }
    }
    if eat(rest, "poly") {
        expect(rest, "(")?;
        let close = rest
            .find(')')
            .ok_or_else(|| AlgError::InvalidHandle("unclosed poly(".into()))?;
        let vars: Vec<String> = rest[..close]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        *rest = &rest[close + 1..];
        for v in &vars {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || crate::cli::parser::is_reserved(v) {
                return Err(AlgError::InvalidHandle(format!("bad variable name {v:?}")));
            }
        }
        let mut seen = std::collections::HashSet::new();
        if !vars.iter().all(|v| seen.insert(v)) {
            return Err(AlgError::InvalidHandle("duplicate variable".into()));
        }
        Ok(Carrier::Poly(vars.into()))
    } else if eat(rest, "sha") {
        expect(rest, "(")?;
        let inner = parse_carrier(rest)?;
        expect(rest, ")")?;
        Ok(Carrier::Sha(Arc::new(inner)))
    } else if eat(rest, "hur") {
        expect(rest, "(")?;
        let inner = parse_carrier(rest)?;
        expect(rest, ",")?;
        let trimmed = rest.trim_start();
        let digits = trimmed.chars().take_while(|c| c.is_ascii_digit()).count();
        let n: usize = trimmed[..digits]
            .parse()
            .map_err(|_| AlgError::InvalidHandle(format!("expected precision at {trimmed:?}")))?;
        *rest = &trimmed[digits..];
        expect(rest, ")")?;
        Ok(Carrier::Hurwitz(Arc::new(inner), n))
    } else {
        Err(AlgError::InvalidHandle(format!(
            "expected poly, sha or hur at {rest:?}"
        )))
    }
}

/// Basis key of a carrier: a monomial, a pure tensor of inner keys, or a
/// series supported at one index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Mono(Monomial),
    Tensor(PureTensor),
    Series(usize, Box<Basis>),
}

impl Basis {
    pub fn height(&self) -> usize {
        match self {
            Basis::Mono(_) => 0,
            Basis::Tensor(t) => t.height(),
            Basis::Series(n, k) => n + k.height(),
        }
    }
}

pub type LinComb<K> = BTreeMap<K, Scalar>;

/// Adds `c·k`, keeping the combination free of zero coefficients.
pub fn add_term<K: Ord>(lc: &mut LinComb<K>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match lc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Canonical element of the carrier named by some handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Poly(Poly),
    Sha(FreeRbElement),
    Hurwitz(HurwitzSeries),
}

impl Element {
    pub fn prec(&self) -> Prec {
        match self {
            Element::Poly(_) => Prec::Exact,
            Element::Sha(s) => s.prec(),
            Element::Hurwitz(f) => f.prec(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Element::Poly(_) => "polynomial",
            Element::Sha(_) => "tensor combination",
            Element::Hurwitz(_) => "series",
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Element::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_sha(&self) -> Option<&FreeRbElement> {
        match self {
            Element::Sha(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_series(&self) -> Option<&HurwitzSeries> {
        match self {
            Element::Hurwitz(f) => Some(f),
            _ => None,
        }
    }
}

// ---- checked public operations --------------------------------------------

pub fn alg_add(h: &AlgebraHandle, x: &Element, y: &Element) -> Result<Element> {
    h.check(x)?;
    h.check(y)?;
    Ok(h.add(x, y))
}

pub fn alg_mul(h: &AlgebraHandle, x: &Element, y: &Element) -> Result<Element> {
    h.check(x)?;
    h.check(y)?;
    Ok(h.mul(x, y))
}

pub fn alg_scale(h: &AlgebraHandle, c: &Scalar, x: &Element) -> Result<Element> {
    h.check(x)?;
    if c.mode() != h.ring() {
        return Err(CoeffError::ModeMismatch {
            left: h.ring(),
            right: c.mode(),
        }
        .into());
    }
    Ok(h.scale(c, x))
}

pub fn alg_unit(h: &AlgebraHandle) -> Element {
    h.unit()
}

pub fn alg_eq(h: &AlgebraHandle, x: &Element, y: &Element) -> Result<bool> {
    h.check(x)?;
    h.check(y)?;
    Ok(h.eq(x, y))
}

#[cfg(test)]
mod tests;
