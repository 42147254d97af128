//! The free commutative Rota-Baxter algebra `Ш(A) = ⊕_{i≥1} A^{⊗i}`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{
    add_term, AlgebraHandle, Basis, DiffOperator, Element, LinComb, Morphism, Mutation, Prec, RbOperator, Result,
};
use crate::coeffs::Scalar;

/// `a_0 ⊗ … ⊗ a_n` with every factor a basis key of the inner carrier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureTensor(pub Vec<Basis>);

impl PureTensor {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> usize {
        self.0.iter().map(Basis::height).max().unwrap_or(0)
    }

    fn prepend(head: &Basis, tail: &[Basis]) -> PureTensor {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(head.clone());
        v.extend_from_slice(tail);
        PureTensor(v)
    }
}

/// Finite combination of pure tensors. Over a carrier containing series the
/// combination is known up to `prec`; otherwise `prec` is `Exact`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeRbElement {
    terms: BTreeMap<PureTensor, Scalar>,
    prec: Prec,
}

impl FreeRbElement {
    pub fn zero(prec: Prec) -> Self {
        FreeRbElement {
            terms: BTreeMap::new(),
            prec,
        }
    }

    /// Collects terms, dropping tensors above `prec`.
    pub fn from_terms(terms: impl IntoIterator<Item = (PureTensor, Scalar)>, prec: Prec) -> Self {
        let mut out = BTreeMap::new();
        for (t, c) in terms {
            assert!(!t.is_empty(), "pure tensors have length at least 1");
            if Prec::Finite(t.height()) <= prec {
                add_term(&mut out, t, c);
            }
        }
        FreeRbElement { terms: out, prec }
    }

    pub fn terms(&self) -> &BTreeMap<PureTensor, Scalar> {
        &self.terms
    }

    pub fn prec(&self) -> Prec {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest tensor length, 0 for the zero element.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(PureTensor::len).max().unwrap_or(0)
    }

    pub fn truncated(&self, prec: Prec) -> Self {
        let prec = prec.min(self.prec);
        FreeRbElement::from_terms(self.terms.iter().map(|(t, c)| (t.clone(), c.clone())), prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        FreeRbElement::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(t, c)| (t.clone(), c.clone())),
            prec,
        )
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        FreeRbElement::from_terms(self.terms.iter().map(|(t, a)| (t.clone(), a * c)), self.prec)
    }
}

/// Per-call evaluator of the recursive shuffle, memoized on ordered pairs of
/// tensors.
struct Shuffler {
    inner: AlgebraHandle,
    prec: Prec,
    lambda: Scalar,
    with_lambda: bool,
    unit: Basis,
    heads: HashMap<(Basis, Basis), LinComb<Basis>>,
    memo: HashMap<(Vec<Basis>, Vec<Basis>), LinComb<PureTensor>>,
}

impl Shuffler {
    fn new(h: &AlgebraHandle, prec: Prec) -> Self {
        let inner = h.inner().expect("shuffle needs a Ш handle");
        Shuffler {
            unit: inner.unit_basis(),
            inner,
            prec,
            lambda: h.lambda().clone(),
            with_lambda: !h.lambda().is_zero() && h.mutation() != Some(Mutation::ShuffleDropLambda),
            heads: HashMap::new(),
            memo: HashMap::new(),
        }
    }

    fn head(&mut self, a: &Basis, b: &Basis) -> LinComb<Basis> {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(hit) = self.heads.get(&key) {
            return hit.clone();
        }
        let out = self.inner.mul_basis(a, b, self.prec);
        self.heads.insert(key, out.clone());
        out
    }

    fn tensors(&mut self, a: &[Basis], b: &[Basis]) -> LinComb<PureTensor> {
        let key = (a.to_vec(), b.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let head = self.head(&a[0], &b[0]);
        let mut out = LinComb::new();
        if !head.is_empty() {
            let (ta, tb) = (&a[1..], &b[1..]);
            let tail: LinComb<Vec<Basis>> = if ta.is_empty() && tb.is_empty() {
                std::iter::once((Vec::new(), self.inner.ring().one())).collect()
            } else if ta.is_empty() || tb.is_empty() {
                let rest = if ta.is_empty() { tb } else { ta };
                std::iter::once((rest.to_vec(), self.inner.ring().one())).collect()
            } else {
                let one_ta = PureTensor::prepend(&self.unit, ta).0;
                let one_tb = PureTensor::prepend(&self.unit, tb).0;
                let mut tail = LinComb::new();
                for (t, c) in self.tensors(ta, &one_tb) {
                    add_term(&mut tail, t.0, c);
                }
                for (t, c) in self.tensors(&one_ta, tb) {
                    add_term(&mut tail, t.0, c);
                }
                if self.with_lambda {
                    let lambda = self.lambda.clone();
                    for (t, c) in self.tensors(ta, tb) {
                        add_term(&mut tail, t.0, &c * &lambda);
                    }
                }
                tail
            };
            for (hk, hc) in &head {
                for (t, tc) in &tail {
                    add_term(&mut out, PureTensor::prepend(hk, t), hc * tc);
                }
            }
        }
        self.memo.insert(key, out.clone());
        out
    }
}

/// The mixable shuffle product `a ⋄ b` on `Ш(A)`.
pub fn mixable_shuffle(h: &AlgebraHandle, a: &FreeRbElement, b: &FreeRbElement) -> FreeRbElement {
    let prec = a.prec.min(b.prec);
    let mut sh = Shuffler::new(h, prec);
    let mut out = LinComb::new();
    for (ta, ca) in &a.terms {
        if Prec::Finite(ta.height()) > prec {
            continue;
        }
        for (tb, cb) in &b.terms {
            if Prec::Finite(tb.height()) > prec {
                continue;
            }
            let c = ca * cb;
            for (t, k) in sh.tensors(&ta.0, &tb.0) {
                add_term(&mut out, t, &k * &c);
            }
        }
    }
    FreeRbElement { terms: out, prec }
}

/// `P_A(x_0 ⊗ … ⊗ x_n) = 1_A ⊗ x_0 ⊗ … ⊗ x_n`.
pub fn rb_operator(h: &AlgebraHandle, a: &FreeRbElement) -> FreeRbElement {
    let unit = h.inner().expect("Ш handle").unit_basis();
    let out = FreeRbElement::from_terms(
        a.terms
            .iter()
            .map(|(t, c)| (PureTensor::prepend(&unit, &t.0), c.clone())),
        a.prec,
    );
    if h.mutation() == Some(Mutation::RbSwapDegrees) {
        return swap_degrees(&out);
    }
    out
}

/// Exchanges exponents 1 and 2 of the first variable in every factor. Not an
/// algebra map; exists only to corrupt `P_A`.
fn swap_degrees(a: &FreeRbElement) -> FreeRbElement {
    fn swap(b: &Basis) -> Basis {
        match b {
            Basis::Mono(m) if !m.exponents().is_empty() => {
                let mut e = m.exponents().to_vec();
                e[0] = match e[0] {
                    1 => 2,
                    2 => 1,
                    other => other,
                };
                Basis::Mono(crate::algebra::Monomial::new(e))
            }
            other => other.clone(),
        }
    }
    FreeRbElement::from_terms(
        a.terms
            .iter()
            .map(|(t, c)| (PureTensor(t.0.iter().map(swap).collect()), c.clone())),
        a.prec,
    )
}

/// `η_A(a) = [a]`, the degree-1 embedding.
pub fn eta(h: &AlgebraHandle, a: &Element) -> FreeRbElement {
    let inner = h.inner().expect("Ш handle");
    let prec = if h.is_exact() { Prec::Exact } else { inner.prec(a) };
    FreeRbElement::from_terms(
        inner.decompose(a).into_iter().map(|(k, c)| (PureTensor(vec![k]), c)),
        prec,
    )
}

/// Multilinear expansion of `x_0 ⊗ … ⊗ x_n` for arbitrary inner elements.
pub fn tensor(h: &AlgebraHandle, factors: &[Element]) -> FreeRbElement {
    let inner = h.inner().expect("Ш handle");
    let prec = if h.is_exact() {
        Prec::Exact
    } else {
        factors
            .iter()
            .map(|f| inner.prec(f))
            .min()
            .unwrap_or(Prec::Exact)
            .min(h.default_prec())
    };
    let parts: Vec<LinComb<Basis>> = factors.iter().map(|f| inner.decompose(f)).collect();
    FreeRbElement::from_terms(expand(&parts, &inner.ring().one()), prec)
}

fn expand(parts: &[LinComb<Basis>], one: &Scalar) -> Vec<(PureTensor, Scalar)> {
    let mut acc: Vec<(Vec<Basis>, Scalar)> = vec![(Vec::new(), one.clone())];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (t, c) in &acc {
            for (k, a) in part {
                let mut t2 = t.clone();
                t2.push(k.clone());
                next.push((t2, c * a));
            }
        }
        acc = next;
    }
    acc.into_iter().map(|(t, c)| (PureTensor(t), c)).collect()
}

/// `Ш(f)`: applies `f` to every factor. `target` is the `Ш` handle of the
/// codomain of `f`.
pub fn sha_map(f: &Morphism, target: &AlgebraHandle, a: &FreeRbElement) -> Result<FreeRbElement> {
    let src_inner = f.source().clone();
    let mut memo: HashMap<Basis, Element> = HashMap::new();
    let mut acc = target
        .zero_at(target.default_prec().min(a.prec))
        .as_sha()
        .cloned()
        .expect("Ш zero");
    for (t, c) in &a.terms {
        let mut images = Vec::with_capacity(t.len());
        for k in &t.0 {
            let img = match memo.get(k) {
                Some(img) => img.clone(),
                None => {
                    let img = f.apply(&src_inner.materialize(k, a.prec))?;
                    memo.insert(k.clone(), img.clone());
                    img
                }
            };
            images.push(img);
        }
        acc = acc.add(&tensor(target, &images).scale(c));
    }
    Ok(acc)
}

/// The unique Rota-Baxter homomorphism `Ш(A) → R` extending `φ: A → R`:
/// `a_0 ⊗ … ⊗ a_n ↦ φ(a_0) P(φ(a_1) P(… P(φ(a_n))))`.
pub fn induced_rb_hom(phi: &Morphism, rb: &RbOperator, a: &FreeRbElement) -> Result<Element> {
    let src = phi.source().clone();
    let r = rb.handle().clone();
    let mut memo: HashMap<Basis, Element> = HashMap::new();
    let mut image = |k: &Basis| -> Result<Element> {
        if let Some(hit) = memo.get(k) {
            return Ok(hit.clone());
        }
        let img = phi.apply(&src.materialize(k, a.prec))?;
        memo.insert(k.clone(), img.clone());
        Ok(img)
    };
    let mut total = r.zero_at(r.default_prec().min(a.prec));
    for (t, c) in &a.terms {
        let mut acc = image(t.0.last().expect("nonempty"))?;
        for k in t.0[..t.len() - 1].iter().rev() {
            acc = r.mul(&image(k)?, &rb.apply(&acc)?);
        }
        total = r.add(&total, &r.scale(c, &acc));
    }
    Ok(total)
}

/// `ε_{(R,P)}`: evaluation of tensors over `R` with `P` in place of `P_A`.
pub fn counit_eval(rb: &RbOperator, a: &FreeRbElement) -> Result<Element> {
    induced_rb_hom(&Morphism::identity(rb.handle()), rb, a)
}

/// `μ_A: Ш(Ш(A)) → Ш(A)`. `h` is the handle of `Ш(Ш(A))`.
pub fn mu(h: &AlgebraHandle, a: &FreeRbElement) -> Result<FreeRbElement> {
    let sha_a = h.inner().expect("Ш(Ш(A)) handle");
    let p = RbOperator::free(&sha_a)?;
    Ok(counit_eval(&p, a)?.as_sha().cloned().expect("Ш element"))
}

/// `d̃` on `Ш(A)` for a λ-derivation `d` on `A`:
/// `x_0 ↦ d(x_0)`, and for `n ≥ 1`
/// `x_0⊗…⊗x_n ↦ d(x_0)⊗x_1⊗… + x_0x_1⊗x_2⊗… + λ d(x_0)x_1⊗x_2⊗…`.
pub fn tilde_d(h: &AlgebraHandle, d: &DiffOperator, a: &FreeRbElement) -> Result<FreeRbElement> {
    let inner = h.inner().expect("Ш handle");
    let lambda = h.lambda().clone();
    let third = !lambda.is_zero() && h.mutation() != Some(Mutation::TildeDDropThirdTerm);
    let repeat = h.mutation() == Some(Mutation::TildeDRepeatedFactor);

    let mut prec = a.prec;
    let mut terms: Vec<(PureTensor, Scalar)> = Vec::new();
    for (t, c) in &a.terms {
        let x0 = inner.materialize(&t.0[0], a.prec);
        let dx0 = d.apply(&x0)?;
        prec = prec.min(inner.prec(&dx0));
        let rest = &t.0[1..];
        for (k, a0) in inner.decompose(&dx0) {
            terms.push((PureTensor::prepend(&k, rest), &a0 * c));
        }
        if rest.is_empty() {
            continue;
        }
        let tail = &rest[1..];
        for (k, a0) in inner.mul_basis(&t.0[0], &rest[0], a.prec) {
            terms.push((PureTensor::prepend(&k, tail), &a0 * c));
        }
        if third {
            let x1 = inner.materialize(&rest[0], a.prec);
            let lc = &lambda * c;
            let tail = if repeat { rest } else { tail };
            for (k, a0) in inner.decompose(&inner.mul(&dx0, &x1)) {
                terms.push((PureTensor::prepend(&k, tail), &a0 * &lc));
            }
        }
    }
    Ok(FreeRbElement::from_terms(
        terms,
        if h.is_exact() { Prec::Exact } else { prec },
    ))
}

/// `η_A : A → Ш(A)` as a map.
pub fn eta_morphism(a: &AlgebraHandle) -> Morphism {
    let sha = a.sha();
    let sha2 = sha.clone();
    Morphism::new("eta", a, &sha, move |x| Ok(Element::Sha(eta(&sha2, x))))
}

/// `μ_A : Ш(Ш(A)) → Ш(A)` as a map, for `a` the handle of `A`.
pub fn mu_morphism(a: &AlgebraHandle) -> Morphism {
    let hh = a.sha().sha();
    let hh2 = hh.clone();
    Morphism::new("mu", &hh, &a.sha(), move |x| {
        let x = x.as_sha().ok_or_else(|| hh2.mismatch(x.kind_name()))?;
        Ok(Element::Sha(mu(&hh2, x)?))
    })
}

/// `Ш(f) : Ш(A) → Ш(B)` as a map.
pub fn sha_morphism(f: &Morphism) -> Morphism {
    let src = f.source().sha();
    let tgt = f.target().sha();
    let (f2, src2, tgt2) = (f.clone(), src.clone(), tgt.clone());
    Morphism::new(format!("sha({})", f.name()), &src, &tgt, move |x| {
        let x = x.as_sha().ok_or_else(|| src2.mismatch(x.kind_name()))?;
        Ok(Element::Sha(sha_map(&f2, &tgt2, x)?))
    })
}

#[cfg(test)]
mod tests;
