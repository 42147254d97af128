//! λ-Hurwitz series `A^ℕ`, stored as finite prefixes.
//!
//! A series over a handle `hur(A, N)` holds values `f(0), …, f(P)` where
//! `P ≤ N` is its precision, and value `n` is known to precision `P - n`
//! (a triangle for doubly indexed series).

use crate::algebra::{AlgError, AlgebraHandle, DiffOperator, Element, Morphism, Mutation, Prec, RbOperator, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzSeries {
    values: Vec<Element>,
}

impl HurwitzSeries {
    pub fn from_values(values: Vec<Element>) -> Self {
        assert!(!values.is_empty(), "a series keeps at least f(0)");
        HurwitzSeries { values }
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&Element> {
        self.values.get(n)
    }

    /// Largest `P` such that `f(n)` is known to precision `P - n` for all
    /// `n ≤ P`.
    pub fn prec(&self) -> Prec {
        let mut p = Prec::Finite(self.values.len() - 1);
        for (n, v) in self.values.iter().enumerate() {
            p = p.min(v.prec().plus(n));
        }
        p
    }

    pub fn precision(&self) -> usize {
        self.prec().finite().expect("series precision is finite")
    }
}

/// Read-only view of a series of series as the triangle `a_{m,n}`,
/// `m + n ≤ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleSeries(HurwitzSeries);

impl DoubleSeries {
    pub fn new(rows: HurwitzSeries) -> Result<Self> {
        if rows.values.iter().all(|v| matches!(v, Element::Hurwitz(_))) {
            Ok(DoubleSeries(rows))
        } else {
            Err(AlgError::Domain("rows of a double series must be series".into()))
        }
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn get(&self, m: usize, n: usize) -> Option<&Element> {
        if m + n > self.precision() {
            return None;
        }
        self.0.values.get(m)?.as_series()?.get(n)
    }

    pub fn into_series(self) -> HurwitzSeries {
        self.0
    }
}

fn inner_of(h: &AlgebraHandle) -> AlgebraHandle {
    h.inner().expect("hur(..) handle")
}

/// `(fg)(n) = Σ_{k=0}^{n} Σ_{j=0}^{n-k} C(n,k) C(n-k,j) λ^k f(n-j) g(k+j)`.
pub fn hurwitz_mul(h: &AlgebraHandle, f: &HurwitzSeries, g: &HurwitzSeries) -> HurwitzSeries {
    let inner = inner_of(h);
    let ring = h.ring();
    let top = f.precision().min(g.precision());
    let drop_power = h.mutation() == Some(Mutation::HurwitzDropLambdaPower);
    let lambda = h.lambda().clone();
    let fz: Vec<bool> = f.values[..=top].iter().map(|v| inner.is_zero(v)).collect();
    let gz: Vec<bool> = g.values[..=top].iter().map(|v| inner.is_zero(v)).collect();

    let mut values = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let prec = Prec::Finite(top - n);
        let mut acc = inner.zero_at(prec);
        for k in 0..=n {
            if k > 0 && lambda.is_zero() && !drop_power {
                break;
            }
            let lk = if drop_power { ring.one() } else { lambda.pow(k as u32) };
            let ck = ring.binomial(n as u64, k as u64);
            for j in 0..=(n - k) {
                if fz[n - j] || gz[k + j] {
                    continue;
                }
                let c = &(&ck * &ring.binomial((n - k) as u64, j as u64)) * &lk;
                if c.is_zero() {
                    continue;
                }
                let a = inner.truncate(&f.values[n - j], prec);
                let b = inner.truncate(&g.values[k + j], prec);
                acc = inner.add(&acc, &inner.scale(&c, &inner.mul(&a, &b)));
            }
        }
        values.push(inner.truncate(&acc, prec));
    }
    HurwitzSeries { values }
}

/// `∂(f)(n) = f(n+1)`.
pub fn partial(_h: &AlgebraHandle, f: &HurwitzSeries) -> Result<HurwitzSeries> {
    let p = f.precision();
    if p == 0 {
        return Err(AlgError::PrecisionUnderflow {
            needed: 1,
            available: 0,
        });
    }
    Ok(HurwitzSeries {
        values: f.values[1..=p].to_vec(),
    })
}

/// `ε(f) = f(0)`.
pub fn counit(f: &HurwitzSeries) -> Element {
    f.values[0].clone()
}

/// `δ(f)(m)(n) = f(m+n)`; the result lives in `hur(hur(A, N), N)`.
pub fn delta(_h: &AlgebraHandle, f: &HurwitzSeries) -> HurwitzSeries {
    let p = f.precision();
    HurwitzSeries {
        values: (0..=p)
            .map(|m| {
                Element::Hurwitz(HurwitzSeries {
                    values: f.values[m..=p].to_vec(),
                })
            })
            .collect(),
    }
}

/// `P̃(f) = (P(f(0)), f(0), f(1), …)`; gains one index of precision.
pub fn rb_lift(h: &AlgebraHandle, p: &RbOperator, f: &HurwitzSeries) -> Result<HurwitzSeries> {
    let mut values = Vec::with_capacity(f.values.len() + 1);
    values.push(p.apply(&f.values[0])?);
    values.extend(f.values.iter().cloned());
    Ok(normalized(h, HurwitzSeries { values }))
}

/// `h^ℕ`: applies `m` to every value. `target` is `hur(B, N)`.
pub fn map_pointwise(m: &Morphism, target: &AlgebraHandle, f: &HurwitzSeries) -> Result<HurwitzSeries> {
    let values = f.values.iter().map(|v| m.apply(v)).collect::<Result<Vec<_>>>()?;
    let out = HurwitzSeries { values };
    Ok(normalized(target, out))
}

pub(crate) fn normalized(h: &AlgebraHandle, f: HurwitzSeries) -> HurwitzSeries {
    let prec = f.prec();
    match h.truncate(&Element::Hurwitz(f), prec) {
        Element::Hurwitz(s) => s,
        _ => unreachable!(),
    }
}

/// `(a, d a, d² a, …, d^N a)`.
pub fn hurwitz_hom_of_derivation(d: &DiffOperator, a: &Element, n: usize) -> Result<HurwitzSeries> {
    let mut values = Vec::with_capacity(n + 1);
    let mut cur = a.clone();
    for i in 0..=n {
        values.push(cur.clone());
        if i < n {
            cur = d.apply(&cur)?;
        }
    }
    Ok(normalized(&d.handle().hurwitz(n), HurwitzSeries { values }))
}

/// The costructure `A → A^ℕ` of a derivation, as a map.
pub fn costructure_of(d: &DiffOperator, n: usize) -> Morphism {
    let d2 = d.clone();
    Morphism::new(
        format!("hom({})", d.name()),
        d.handle(),
        &d.handle().hurwitz(n),
        move |x| Ok(Element::Hurwitz(hurwitz_hom_of_derivation(&d2, x, n)?)),
    )
}

/// `Σ_{k=0}^{n} Σ_{j=0}^{n-k} C(n,k) C(n-k,j) λ^k d^{n-j}(x) d^{k+j}(y)`.
pub fn higher_leibniz(d: &DiffOperator, x: &Element, y: &Element, n: usize) -> Result<Element> {
    let h = d.handle();
    let ring = h.ring();
    let lambda = h.lambda();
    let mut dx = Vec::with_capacity(n + 1);
    let mut dy = Vec::with_capacity(n + 1);
    let (mut cx, mut cy) = (x.clone(), y.clone());
    for i in 0..=n {
        dx.push(cx.clone());
        dy.push(cy.clone());
        if i < n {
            cx = d.apply(&cx)?;
            cy = d.apply(&cy)?;
        }
    }
    let prec = dx.iter().chain(&dy).map(Element::prec).min().unwrap_or(Prec::Exact);
    let mut acc = h.zero_at(prec);
    for k in 0..=n {
        let lk = lambda.pow(k as u32);
        if lk.is_zero() {
            continue;
        }
        for j in 0..=(n - k) {
            let c = &(&ring.binomial(n as u64, k as u64) * &ring.binomial((n - k) as u64, j as u64)) * &lk;
            acc = h.add(&acc, &h.scale(&c, &h.mul(&dx[n - j], &dy[k + j])));
        }
    }
    Ok(acc)
}

/// `ε_A : A^ℕ → A` as a map; `hn` is the handle of `A^ℕ`.
pub fn counit_morphism(hn: &AlgebraHandle) -> Morphism {
    let a = hn.inner().expect("hur(..) handle");
    let hn2 = hn.clone();
    Morphism::new("eps", hn, &a, move |f| {
        let f = f.as_series().ok_or_else(|| hn2.mismatch(f.kind_name()))?;
        Ok(counit(f))
    })
}

/// `δ_A : A^ℕ → (A^ℕ)^ℕ` as a map.
pub fn delta_morphism(hn: &AlgebraHandle) -> Morphism {
    let n = hn.default_prec().finite().expect("finite");
    let hnn = hn.hurwitz(n);
    let (hn2, hnn2) = (hn.clone(), hnn.clone());
    Morphism::new("delta", hn, &hnn, move |f| {
        let f = f.as_series().ok_or_else(|| hn2.mismatch(f.kind_name()))?;
        Ok(Element::Hurwitz(delta(&hnn2, f)))
    })
}

/// `f^ℕ : A^ℕ → B^ℕ` at precision `n`.
pub fn pointwise_morphism(f: &Morphism, n: usize) -> Morphism {
    let src = f.source().hurwitz(n);
    let tgt = f.target().hurwitz(n);
    let (f2, src2, tgt2) = (f.clone(), src.clone(), tgt.clone());
    Morphism::new(format!("{}^N", f.name()), &src, &tgt, move |x| {
        let x = x.as_series().ok_or_else(|| src2.mismatch(x.kind_name()))?;
        Ok(Element::Hurwitz(map_pointwise(&f2, &tgt2, x)?))
    })
}

#[cfg(test)]
mod tests;
