use crate::algebra::{AlgebraHandle, Budget, DiffOperator, Element, Monomial, Morphism, RbOperator, Result};
use crate::distlaw::{self, MixedPair};
use crate::free_rb::{self, FreeRbElement, PureTensor};
use crate::hurwitz::{self, HurwitzSeries};
use crate::text::render;

use super::oracles;
use super::{LawSuite, Sample, Variant, Weights};

fn sha(x: &Element) -> &FreeRbElement {
    x.as_sha().expect("tensor combination")
}

fn series(x: &Element) -> &HurwitzSeries {
    x.as_series().expect("series")
}

fn el(s: FreeRbElement) -> Element {
    Element::Sha(s)
}

fn ser(s: HurwitzSeries) -> Element {
    Element::Hurwitz(s)
}

fn nested() -> Budget {
    Budget::tiny().with_terms(2).with_len(2)
}

/// Budget for the innermost level of triply nested samples.
fn innermost() -> Budget {
    Budget::tiny().with_terms(1).with_len(2).with_degree(1)
}

// ---- ring axioms -------------------------------------------------------------

fn ring_axioms(s: &mut Sample, spec: &str, budget: Budget) -> Result<()> {
    let h = s.handle(spec);
    let x = s.draw("x", &h, &budget);
    let y = s.draw("y", &h, &budget);
    let z = s.draw("z", &h, &budget);
    let one = h.unit();
    s.check_eq("xy = yx", &h, &h.mul(&x, &y), &h.mul(&y, &x));
    s.check_eq(
        "(xy)z = x(yz)",
        &h,
        &h.mul(&h.mul(&x, &y), &z),
        &h.mul(&x, &h.mul(&y, &z)),
    );
    s.check_eq(
        "x(y+z) = xy + xz",
        &h,
        &h.mul(&x, &h.add(&y, &z)),
        &h.add(&h.mul(&x, &y), &h.mul(&x, &z)),
    );
    s.check_eq("1x = x", &h, &h.mul(&one, &x), &x);
    s.check_eq("x - x = 0", &h, &h.sub(&x, &x), &h.zero());
    Ok(())
}

fn axioms_poly(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "poly(x,y)", Budget::default())
}
fn axioms_sha(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "sha(poly(x,y))", Budget::default())
}
fn axioms_hur(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "hur(poly(x),N)", Budget::default())
}
fn axioms_sha_sha(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "sha(sha(poly(x)))", nested())
}
fn axioms_sha_hur(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "sha(hur(poly(x),N))", nested())
}
fn axioms_hur_sha(s: &mut Sample) -> Result<()> {
    ring_axioms(s, "hur(sha(poly(x)),N)", nested().with_terms(1))
}

// ---- Rota-Baxter identity ------------------------------------------------------

pub(super) fn rb_law(s: &mut Sample, p: &RbOperator, budget: Budget, min_prec: usize) -> Result<()> {
    let h = p.handle().clone();
    let x = s.draw("x", &h, &budget);
    let y = s.draw("y", &h, &budget);
    let (px, py) = (p.apply(&x)?, p.apply(&y)?);
    let lhs = h.mul(&px, &py);
    let a = p.apply(&h.mul(&x, &py))?;
    let b = p.apply(&h.mul(&y, &px))?;
    let c = h.scale(s.lambda(), &p.apply(&h.mul(&x, &y))?);
    let rhs = h.add(&h.add(&a, &b), &c);
    s.check_eq_at("P(x)P(y) = P(xP(y)) + P(yP(x)) + λP(xy)", &h, &lhs, &rhs, min_prec);
    Ok(())
}

pub(super) fn rb_free(s: &mut Sample) -> Result<()> {
    let h = s.handle("sha(poly(x,y))");
    rb_law(s, &RbOperator::free(&h)?, Budget::default(), 0)
}

pub(super) fn rb_lift(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let p = RbOperator::lift(&RbOperator::canonical(&a)?, s.precision);
    let n = s.precision;
    rb_law(s, &p, Budget::default(), n)
}

fn rb_integration(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    rb_law(s, &RbOperator::integration(&a, "x")?, Budget::default(), 0)
}

fn rb_scaled_identity(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    rb_law(s, &RbOperator::scaled_identity(&a), Budget::default(), 0)
}

fn rb_free_over_series(s: &mut Sample) -> Result<()> {
    let h = s.handle("sha(hur(poly(x),N))");
    let n = s.precision;
    rb_law(s, &RbOperator::free(&h)?, nested(), n)
}

// ---- λ-Leibniz rule ------------------------------------------------------------

fn leibniz_law(s: &mut Sample, d: &DiffOperator, budget: Budget, min_prec: usize) -> Result<()> {
    let h = d.handle().clone();
    let x = s.draw("x", &h, &budget);
    let y = s.draw("y", &h, &budget);
    let (dx, dy) = (d.apply(&x)?, d.apply(&y)?);
    let lhs = d.apply(&h.mul(&x, &y))?;
    let rhs = h.add(
        &h.add(&h.mul(&dx, &y), &h.mul(&x, &dy)),
        &h.scale(s.lambda(), &h.mul(&dx, &dy)),
    );
    s.check_eq_at("d(xy) = d(x)y + x d(y) + λ d(x)d(y)", &h, &lhs, &rhs, min_prec);
    let d1 = d.apply(&h.unit())?;
    s.check_eq_at("d(1) = 0", &h, &d1, &h.zero(), min_prec);
    Ok(())
}

pub(super) fn leibniz_partial(s: &mut Sample) -> Result<()> {
    let h = s.handle("hur(poly(x),N)");
    let n = s.precision.saturating_sub(1);
    leibniz_law(s, &DiffOperator::partial(&h)?, Budget::default(), n)
}

pub(super) fn leibniz_tilde(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    leibniz_law(
        s,
        &DiffOperator::tilde(&DiffOperator::canonical(&a)?),
        Budget::default(),
        0,
    )
}

fn leibniz_dq(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    leibniz_law(s, &DiffOperator::difference_quotient(&a, "x")?, Budget::default(), 0)
}

fn leibniz_derivative(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    leibniz_law(s, &DiffOperator::derivative(&a, "y")?, Budget::default(), 0)
}

fn leibniz_tilde_two_vars(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    leibniz_law(
        s,
        &DiffOperator::tilde(&DiffOperator::canonical(&a)?),
        Budget::default().with_len(2),
        0,
    )
}

// ---- higher Leibniz --------------------------------------------------------------

fn higher_law(s: &mut Sample, d: &DiffOperator, budget: Budget, max_n: usize) -> Result<()> {
    let h = d.handle().clone();
    let x = s.draw("x", &h, &budget);
    let y = s.draw("y", &h, &budget);
    let xy = h.mul(&x, &y);
    for n in 0..=max_n {
        let lhs = hurwitz::higher_leibniz(d, &x, &y, n)?;
        let rhs = d.iterate(&xy, n)?;
        if !s.check_eq(&format!("double sum = d^{n}(xy)"), &h, &lhs, &rhs) {
            break;
        }
    }
    Ok(())
}

pub(super) fn higher_dq(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let d = DiffOperator::difference_quotient(&a, "x")?;
    higher_law(s, &d, Budget::default().with_degree(5), 5)
}

fn higher_derivative(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    let d = DiffOperator::derivative(&a, "x")?;
    higher_law(s, &d, Budget::default().with_degree(4), 5)
}

fn higher_tilde(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let d = DiffOperator::tilde(&DiffOperator::canonical(&a)?);
    higher_law(s, &d, nested(), 3)
}

// ---- monad -------------------------------------------------------------------------

pub(super) fn monad_unit_left(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let (h1, h2) = (a.sha(), a.sha().sha());
    let w = s.draw_sha("w", &h1, &Budget::default());
    let got = free_rb::mu(&h2, &free_rb::eta(&h2, &el(w.clone())))?;
    s.check_eq("μ(η_{Ш(A)}(w)) = w", &h1, &el(got), &el(w));
    Ok(())
}

pub(super) fn monad_unit_right(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let (h1, h2) = (a.sha(), a.sha().sha());
    let w = s.draw_sha("w", &h1, &Budget::default());
    let lifted = free_rb::sha_map(&free_rb::eta_morphism(&a), &h2, &w)?;
    let got = free_rb::mu(&h2, &lifted)?;
    s.check_eq("μ(Ш(η_A)(w)) = w", &h1, &el(got), &el(w));
    Ok(())
}

pub(super) fn monad_assoc(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let (h1, h2, h3) = (a.sha(), a.sha().sha(), a.sha().sha().sha());
    let z = s.draw_sha("z", &h3, &innermost());
    let left = free_rb::mu(&h2, &free_rb::sha_map(&free_rb::mu_morphism(&a), &h2, &z)?)?;
    let right = free_rb::mu(&h2, &free_rb::mu(&h3, &z)?)?;
    s.check_eq("μ ∘ Ш(μ) = μ ∘ μ_Ш", &h1, &el(left), &el(right));
    Ok(())
}

/// `μ` against the nested form `w_0 ⋄ P_A(w_1 ⋄ P_A(… ⋄ P_A(w_k)))`,
/// evaluated by an explicit right fold.
fn monad_mu_fold(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let (h1, h2) = (a.sha(), a.sha().sha());
    let u = s.draw_sha("u", &h2, &nested());
    let mut expect = h1.zero();
    for (t, c) in u.terms() {
        let words: Vec<FreeRbElement> =
            t.0.iter()
                .map(|b| sha(&h1.materialize(b, h1.default_prec())).clone())
                .collect();
        let mut acc = words.last().expect("nonempty").clone();
        for w in words[..words.len() - 1].iter().rev() {
            acc = free_rb::mixable_shuffle(&h1, w, &free_rb::rb_operator(&h1, &acc));
        }
        expect = h1.add(&expect, &h1.scale(c, &el(acc)));
    }
    let got = free_rb::mu(&h2, &u)?;
    s.check_eq("μ(w_0⊗…⊗w_k) = w_0 ⋄ P_A(w_1 ⋄ P_A(…))", &h1, &el(got), &expect);
    Ok(())
}

// ---- comonad -----------------------------------------------------------------------

pub(super) fn comonad_counit(s: &mut Sample) -> Result<()> {
    let hn = s.handle("hur(poly(x),N)");
    let n = s.precision;
    let f = s.draw("f", &hn, &Budget::default());
    let hnn = hn.hurwitz(n);
    let d = hurwitz::delta(&hnn, series(&f));
    let outer = hurwitz::counit(&d);
    s.check_eq_at("ε_{A^ℕ}(δ f) = f", &hn, &outer, &f, n);
    let inner = hurwitz::map_pointwise(&hurwitz::counit_morphism(&hn), &hn, &d)?;
    s.check_eq_at("ε_A^ℕ(δ f) = f", &hn, &ser(inner), &f, n);
    Ok(())
}

pub(super) fn comonad_coassoc(s: &mut Sample) -> Result<()> {
    let hn = s.handle("hur(poly(x),N)");
    let n = s.precision;
    let f = s.draw("f", &hn, &Budget::default());
    let hnn = hn.hurwitz(n);
    let hnnn = hnn.hurwitz(n);
    let d = hurwitz::delta(&hnn, series(&f));
    let left = hurwitz::delta(&hnnn, &d);
    let right = hurwitz::map_pointwise(&hurwitz::delta_morphism(&hn), &hnnn, &d)?;
    s.check_eq_at("δ_{A^ℕ} ∘ δ = δ^ℕ ∘ δ", &hnnn, &ser(left), &ser(right), n);
    Ok(())
}

// ---- T-structures ------------------------------------------------------------------

fn t_structure_law(s: &mut Sample, p: &RbOperator, inner_budget: Budget, outer_budget: Budget) -> Result<()> {
    let r = p.handle().clone();
    let (hs, hss) = (r.sha(), r.sha().sha());
    let h = distlaw::t_structure_of(p);
    let x = s.draw("x", &r, &inner_budget);
    let back = h.apply(&el(free_rb::eta(&hs, &x)))?;
    s.check_eq("h(η(x)) = x", &r, &back, &x);
    let z = s.draw_sha("z", &hss, &outer_budget);
    let left = h.apply(&el(free_rb::sha_map(&h, &hs, &z)?))?;
    let right = h.apply(&el(free_rb::mu(&hss, &z)?))?;
    s.check_eq("h ∘ Ш(h) = h ∘ μ", &r, &left, &right);
    Ok(())
}

fn t_base(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    t_structure_law(s, &RbOperator::canonical(&a)?, Budget::default(), nested())
}

fn t_free(s: &mut Sample) -> Result<()> {
    let a = s.handle("sha(poly(x))");
    t_structure_law(s, &RbOperator::free(&a)?, Budget::default(), innermost())
}

fn t_lift(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let p = RbOperator::lift(&RbOperator::canonical(&a)?, s.precision);
    t_structure_law(s, &p, Budget::default(), innermost())
}

// ---- costructures --------------------------------------------------------------------

fn costructure_law(s: &mut Sample, d: &DiffOperator, budget: Budget) -> Result<()> {
    let a = d.handle().clone();
    let n = s.precision;
    let hn = a.hurwitz(n);
    let f = hurwitz::costructure_of(d, n);
    let x = s.draw("x", &a, &budget);
    let y = s.draw("y", &a, &budget);
    let fx = f.apply(&x)?;
    s.check_eq("ε(f(x)) = x", &a, &hurwitz::counit(series(&fx)), &x);
    let hnn = hn.hurwitz(n);
    let left = hurwitz::delta(&hnn, series(&fx));
    let right = hurwitz::map_pointwise(&f, &hnn, series(&fx))?;
    s.check_eq("δ(f(x)) = f^ℕ(f(x))", &hnn, &ser(left), &ser(right));
    let prod = f.apply(&a.mul(&x, &y))?;
    let fy = f.apply(&y)?;
    s.check_eq("f(xy) = f(x)f(y)", &hn, &prod, &hn.mul(&fx, &fy));
    Ok(())
}

fn co_base(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    costructure_law(s, &DiffOperator::canonical(&a)?, Budget::default())
}

fn co_free(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    costructure_law(s, &DiffOperator::tilde(&DiffOperator::canonical(&a)?), nested())
}

/// On `A^ℕ` with `∂`, the costructure is `δ` itself.
fn co_partial_is_delta(s: &mut Sample) -> Result<()> {
    let hn = s.handle("hur(poly(x),N)");
    let n = s.precision;
    let f = s.draw("f", &hn, &Budget::default());
    let hom = hurwitz::hurwitz_hom_of_derivation(&DiffOperator::partial(&hn)?, &f, n)?;
    let hnn = hn.hurwitz(n);
    let d = hurwitz::delta(&hnn, series(&f));
    s.check_eq_at("hom(∂)(f) = δ(f)", &hnn, &ser(hom), &ser(d), n);
    Ok(())
}

// ---- mixed distributive law ----------------------------------------------------------

pub(super) fn mdl_unit(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let f = s.draw("f", &hn, &Budget::default());
    let src = hn.sha();
    let b = distlaw::beta(&src, &free_rb::eta(&src, &f), n)?;
    let expect = distlaw::eta_pointwise(&a, n, n).apply(&f)?;
    s.check_eq_at("β(η(f)) = η^ℕ(f)", &a.sha().hurwitz(n), &ser(b), &expect, n);
    Ok(())
}

pub(super) fn mdl_counit(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let src = hn.sha();
    let x = s.draw_sha("x", &src, &Budget::default().with_len(2));
    let b = distlaw::beta(&src, &x, n)?;
    let expect = free_rb::sha_map(&hurwitz::counit_morphism(&hn), &a.sha(), &x)?;
    s.check_eq("ε(β(x)) = Ш(ε)(x)", &a.sha(), &hurwitz::counit(&b), &el(expect));
    Ok(())
}

pub(super) fn mdl_delta(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let hnn = hn.hurwitz(n);
    let src = hn.sha();
    let x = s.draw_sha("x", &src, &Budget::default().with_len(2).with_terms(2));
    let out = a.sha().hurwitz(n).hurwitz(n);
    let left = hurwitz::delta(&out, &distlaw::beta(&src, &x, n)?);
    let dx = free_rb::sha_map(&hurwitz::delta_morphism(&hn), &hnn.sha(), &x)?;
    let mid = distlaw::beta(&hnn.sha(), &dx, n)?;
    let right = hurwitz::map_pointwise(&distlaw::beta_morphism(&a, n, n), &out, &mid)?;
    s.check_eq_at("δ ∘ β = β^ℕ ∘ β_{A^ℕ} ∘ Ш(δ)", &out, &ser(left), &ser(right), n);
    Ok(())
}

pub(super) fn mdl_mu(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let src = hn.sha().sha();
    let x = s.draw_sha("x", &src, &innermost());
    let sha_a_n = a.sha().hurwitz(n);
    let left = distlaw::beta(&hn.sha(), &free_rb::mu(&src, &x)?, n)?;
    let bx = free_rb::sha_map(&distlaw::beta_morphism(&a, n, n), &sha_a_n.sha(), &x)?;
    let mid = distlaw::beta(&sha_a_n.sha(), &bx, n)?;
    let right = hurwitz::map_pointwise(&free_rb::mu_morphism(&a), &sha_a_n, &mid)?;
    s.check_eq_at("β ∘ μ = μ^ℕ ∘ β_Ш ∘ Ш(β)", &sha_a_n, &ser(left), &ser(right), n);
    Ok(())
}

fn random_substitution(s: &mut Sample, src: &AlgebraHandle, tgt: &AlgebraHandle) -> Result<Morphism> {
    let nvars = src.vars().expect("poly").len();
    let budget = Budget::default().with_degree(2).with_terms(2);
    let mut images = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let p = s.draw(&format!("phi(v{i})"), tgt, &budget);
        images.push(p.as_poly().cloned().expect("poly"));
    }
    Morphism::substitution(src, tgt, images)
}

fn beta_naturality(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let phi = random_substitution(s, &a, &a)?;
    let x = s.draw_sha("x", &hn.sha(), &Budget::default().with_len(2));
    let out = a.sha().hurwitz(n);
    let left = hurwitz::map_pointwise(&free_rb::sha_morphism(&phi), &out, &distlaw::beta(&hn.sha(), &x, n)?)?;
    let px = free_rb::sha_map(&hurwitz::pointwise_morphism(&phi, n), &hn.sha(), &x)?;
    let right = distlaw::beta(&hn.sha(), &px, n)?;
    s.check_eq_at("Ш(φ)^ℕ ∘ β = β ∘ Ш(φ^ℕ)", &out, &ser(left), &ser(right), n);
    Ok(())
}

fn beta_hom(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let src = a.hurwitz(n).sha();
    let out = a.sha().hurwitz(n);
    let budget = Budget::default().with_len(2).with_terms(2);
    let u = s.draw_sha("u", &src, &budget);
    let v = s.draw_sha("v", &src, &budget);
    let (bu, bv) = (distlaw::beta(&src, &u, n)?, distlaw::beta(&src, &v, n)?);
    let prod = distlaw::beta(&src, &free_rb::mixable_shuffle(&src, &u, &v), n)?;
    s.check_eq_at(
        "β(u ⋄ v) = β(u)β(v)",
        &out,
        &ser(prod),
        &out.mul(&ser(bu.clone()), &ser(bv)),
        n,
    );
    let lift = RbOperator::lift(&RbOperator::free(&a.sha())?, n);
    let pu = distlaw::beta(&src, &free_rb::rb_operator(&src, &u), n)?;
    s.check_eq_at("β(P(u)) = P̃(β(u))", &out, &ser(pu), &lift.apply(&ser(bu))?, n);
    Ok(())
}

// ---- Rota-Baxter lift ------------------------------------------------------------------

fn lift_law(s: &mut Sample, p: &RbOperator, budget: Budget) -> Result<()> {
    let n = s.precision;
    let lift = RbOperator::lift(p, n);
    let hn = lift.handle().clone();
    let f = s.draw("f", &hn, &budget);
    let pf = lift.apply(&f)?;
    let back = DiffOperator::partial(&hn)?.apply(&pf)?;
    s.check_eq_at("∂(P̃ f) = f", &hn, &back, &f, n);
    let a = p.handle();
    let e = p.apply(&hurwitz::counit(series(&f)))?;
    s.check_eq("ε(P̃ f) = P(ε f)", a, &hurwitz::counit(series(&pf)), &e);
    Ok(())
}

fn lift_base(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    lift_law(s, &RbOperator::canonical(&a)?, Budget::default())
}

fn lift_free(s: &mut Sample) -> Result<()> {
    let a = s.handle("sha(poly(x))");
    lift_law(s, &RbOperator::free(&a)?, nested())
}

// ---- pointwise maps ----------------------------------------------------------------------

fn n_morphism(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let b = s.handle("poly(x,y)");
    let n = s.precision;
    let (an, bn) = (a.hurwitz(n), b.hurwitz(n));
    let phi = random_substitution(s, &a, &b)?;
    let phin = hurwitz::pointwise_morphism(&phi, n);
    let f = s.draw("f", &an, &Budget::default());
    let g = s.draw("g", &an, &Budget::default());
    let pf = phin.apply(&f)?;
    s.check_eq(
        "ε(φ^ℕ f) = φ(ε f)",
        &b,
        &hurwitz::counit(series(&pf)),
        &phi.apply(&hurwitz::counit(series(&f)))?,
    );
    let left = DiffOperator::partial(&bn)?.apply(&pf)?;
    let right = phin.apply(&DiffOperator::partial(&an)?.apply(&f)?)?;
    s.check_eq_at("∂(φ^ℕ f) = φ^ℕ(∂ f)", &bn, &left, &right, n - 1);
    let bnn = bn.hurwitz(n);
    let left = hurwitz::delta(&bnn, series(&pf));
    let right = hurwitz::map_pointwise(&phin, &bnn, &hurwitz::delta(&an.hurwitz(n), series(&f)))?;
    s.check_eq_at("δ(φ^ℕ f) = (φ^ℕ)^ℕ(δ f)", &bnn, &ser(left), &ser(right), n);
    let left = phin.apply(&an.mul(&f, &g))?;
    let right = bn.mul(&pf, &phin.apply(&g)?);
    s.check_eq_at("φ^ℕ(fg) = φ^ℕ(f)φ^ℕ(g)", &bn, &left, &right, n);
    Ok(())
}

// ---- head and tail -------------------------------------------------------------------------

fn head_tail(s: &mut Sample) -> Result<()> {
    use rand::Rng;
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let f = s.draw("f", &hn, &Budget::default());
    let g = if s.rng.random_bool(0.5) {
        f.clone()
    } else {
        let k = s.rng.random_range(0..=n);
        let c = s.draw("c", &a, &Budget::default());
        let mut values = series(&f).values().to_vec();
        values[k] = a.add(&values[k], &c);
        hn.normalize(ser(HurwitzSeries::from_values(values)))
    };
    s.note("g", &hn, &g);
    let partial = DiffOperator::partial(&hn)?;
    let heads = a.eq(&hurwitz::counit(series(&f)), &hurwitz::counit(series(&g)));
    let tails = hn.eq(&partial.apply(&f)?, &partial.apply(&g)?);
    let same = hn.eq(&f, &g);
    s.check_bool(
        "f = g iff ε f = ε g and ∂f = ∂g",
        same == (heads && tails),
        format!("f = g: {same}"),
        format!("heads {heads}, tails {tails}"),
    );
    let mut values = vec![hurwitz::counit(series(&f))];
    values.extend(series(&partial.apply(&f)?).values().iter().cloned());
    let rebuilt = hn.normalize(ser(HurwitzSeries::from_values(values)));
    s.check_eq_at("f = (ε f, ∂f)", &hn, &rebuilt, &f, n);
    Ok(())
}

// ---- differential Rota-Baxter ----------------------------------------------------------------

pub(super) fn drb_free_inverse(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let h = a.sha();
    let d = DiffOperator::tilde(&DiffOperator::canonical(&a)?);
    let u = s.draw("u", &h, &Budget::default());
    let back = d.apply(&el(free_rb::rb_operator(&h, sha(&u))))?;
    s.check_eq("d̃(P_A(u)) = u", &h, &back, &u);
    Ok(())
}

fn drb_free_inverse_two_vars(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    let h = a.sha();
    let d = DiffOperator::tilde(&DiffOperator::canonical(&a)?);
    let u = s.draw("u", &h, &Budget::default());
    let back = d.apply(&el(free_rb::rb_operator(&h, sha(&u))))?;
    s.check_eq("d̃(P_A(u)) = u", &h, &back, &u);
    Ok(())
}

fn drb_base_inverse(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    let d = DiffOperator::derivative(&a, "x")?;
    let p = RbOperator::integration(&a, "x")?;
    let u = s.draw("u", &a, &Budget::default());
    s.check_eq("d(P(u)) = u", &a, &d.apply(&p.apply(&u)?)?, &u);
    Ok(())
}

// ---- lifted structures ---------------------------------------------------------------------------

fn lifted_t(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let p = RbOperator::canonical(&a)?;
    let big_h = distlaw::lift_t_structure(&distlaw::t_structure_of(&p), n)?;
    let f = s.draw("f", &hn, &Budget::default());
    let back = big_h.apply(&el(free_rb::eta(&hn.sha(), &f)))?;
    s.check_eq_at("H(η(f)) = f", &hn, &back, &f, n);
    let x = s.draw_sha("x", &hn.sha(), &Budget::default().with_len(2));
    let direct = distlaw::t_structure_of(&RbOperator::lift(&p, n)).apply(&el(x.clone()))?;
    s.check_eq_at("h^ℕ ∘ β = evaluation with P̃", &hn, &big_h.apply(&el(x))?, &direct, n);
    Ok(())
}

fn lifted_t_assoc(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let p = RbOperator::canonical(&a)?;
    let big_h = distlaw::lift_t_structure(&distlaw::t_structure_of(&p), n)?;
    let hss = hn.sha().sha();
    let z = s.draw_sha("z", &hss, &innermost());
    let left = big_h.apply(&el(free_rb::sha_map(&big_h, &hn.sha(), &z)?))?;
    let right = big_h.apply(&el(free_rb::mu(&hss, &z)?))?;
    s.check_eq_at("H ∘ Ш(H) = H ∘ μ", &hn, &left, &right, n);
    Ok(())
}

fn lifted_c(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let d = DiffOperator::canonical(&a)?;
    let big_f = distlaw::lift_costructure_morphism(&hurwitz::costructure_of(&d, n), n)?;
    let h = a.sha();
    let out = h.hurwitz(n);
    let u = s.draw("u", &h, &Budget::default().with_len(2));
    let fu = big_f.apply(&u)?;
    s.check_eq("ε(F(u)) = u", &h, &hurwitz::counit(series(&fu)), &u);
    let outn = out.hurwitz(n);
    let left = hurwitz::delta(&outn, series(&fu));
    let right = hurwitz::map_pointwise(&big_f, &outn, series(&fu))?;
    s.check_eq_at("δ(F(u)) = F^ℕ(F(u))", &outn, &ser(left), &ser(right), n);
    let direct = hurwitz::costructure_of(&DiffOperator::tilde(&d), n).apply(&u)?;
    s.check_eq_at("β ∘ Ш(f) = costructure of d̃", &out, &fu, &direct, n);
    Ok(())
}

// ---- mixed compatibility ----------------------------------------------------------------------------

fn compat(s: &mut Sample, pair: MixedPair, samples_handle: &AlgebraHandle, budget: Budget) -> Result<()> {
    let n = s.precision;
    let u = s.draw_sha("u", samples_handle, &budget);
    let report = pair.check(std::slice::from_ref(&u), n, 0);
    if let Some(c) = report.counterexample {
        s.check_bool(
            "f ∘ h = h^ℕ ∘ β ∘ Ш(f)",
            false,
            c.lhs,
            format!("{} {}", c.rhs, c.note.unwrap_or_default()),
        );
    }
    let swapped = distlaw::phi_swap(pair);
    s.check_bool(
        "Φ keeps the square",
        !swapped.is_structure_first() && swapped.check(&[u], n, 0).passed == report.passed,
        String::new(),
        String::new(),
    );
    Ok(())
}

pub(super) fn compat_free_drb(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let r = a.sha();
    let n = s.precision;
    let h = distlaw::t_structure_of(&RbOperator::free(&r)?);
    let f = hurwitz::costructure_of(&DiffOperator::tilde(&DiffOperator::canonical(&a)?), n);
    compat(s, MixedPair::StructureFirst { h, f }, &r.sha(), nested())
}

fn compat_base_drb(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let h = distlaw::t_structure_of(&RbOperator::integration(&a, "x")?);
    let f = hurwitz::costructure_of(&DiffOperator::derivative(&a, "x")?, n);
    compat(s, MixedPair::StructureFirst { h, f }, &a.sha(), Budget::default())
}

fn compat_cofree(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let h = distlaw::t_structure_of(&RbOperator::lift(&RbOperator::canonical(&a)?, n));
    let f = hurwitz::delta_morphism(&hn);
    compat(s, MixedPair::StructureFirst { h, f }, &hn.sha(), nested().with_terms(1))
}

// ---- power sequence ------------------------------------------------------------------------------------

fn power_law(s: &mut Sample, d: &DiffOperator, budget: Budget, max: usize) -> Result<()> {
    let h = d.handle().clone();
    let mut powers = vec![Morphism::identity(&h)];
    for i in 0..max {
        powers.push(powers[i].then(&d.as_morphism()));
    }
    let x = s.draw("x", &h, &budget);
    let y = s.draw("y", &h, &budget);
    s.check_eq("f_0 = id", &h, &powers[0].apply(&x)?, &x);
    'outer: for m in 0..=max {
        for n in 0..=(max - m) {
            let left = powers[m].apply(&powers[n].apply(&x)?)?;
            let right = powers[m + n].apply(&x)?;
            if !s.check_eq(&format!("f_{m} ∘ f_{n} = f_{}", m + n), &h, &left, &right) {
                break 'outer;
            }
        }
    }
    let ring = h.ring();
    let xy = h.mul(&x, &y);
    for n in 0..=max {
        let mut acc = h.zero();
        for k in 0..=n {
            for j in 0..=(n - k) {
                let c = &(&ring.binomial(n as u64, k as u64) * &ring.binomial((n - k) as u64, j as u64))
                    * &s.lambda().pow(k as u32);
                let term = h.mul(&powers[n - j].apply(&x)?, &powers[k + j].apply(&y)?);
                acc = h.add(&acc, &h.scale(&c, &term));
            }
        }
        if !s.check_eq(
            &format!("f_{n}(xy) = Σ C(n,k)C(n-k,j) λ^k f_(n-j)(x) f_(k+j)(y)"),
            &h,
            &powers[n].apply(&xy)?,
            &acc,
        ) {
            break;
        }
    }
    Ok(())
}

fn power_base(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    power_law(s, &DiffOperator::canonical(&a)?, Budget::default().with_degree(4), 5)
}

fn power_tilde(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    power_law(s, &DiffOperator::tilde(&DiffOperator::canonical(&a)?), nested(), 3)
}

// ---- adjunction ------------------------------------------------------------------------------------------

/// `(ε_A)^ℕ(η'(f)) = f` on the cofree object `(A^ℕ, ∂, P̃)`.
fn adj_cofree_triangle(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let n = s.precision;
    let hn = a.hurwitz(n);
    let f = s.draw("f", &hn, &Budget::default());
    let eta = hurwitz::hurwitz_hom_of_derivation(&DiffOperator::partial(&hn)?, &f, n)?;
    let back = hurwitz::map_pointwise(&hurwitz::counit_morphism(&hn), &hn, &eta)?;
    s.check_eq_at("ε^ℕ(η'(f)) = f", &hn, &ser(back), &f, n);
    Ok(())
}

/// `ε(η'(x)) = x`, and `η'` is a morphism of differential Rota-Baxter
/// algebras: `∂ η' = η' d`, `P̃ η' = η' P`.
fn adj_drb_law(s: &mut Sample, d: &DiffOperator, p: &RbOperator, budget: Budget) -> Result<()> {
    let r = d.handle().clone();
    let n = s.precision;
    let rn = r.hurwitz(n);
    let eta = hurwitz::costructure_of(d, n);
    let x = s.draw("x", &r, &budget);
    let ex = eta.apply(&x)?;
    s.check_eq("ε(η'(x)) = x", &r, &hurwitz::counit(series(&ex)), &x);
    let left = DiffOperator::partial(&rn)?.apply(&ex)?;
    let right = eta.apply(&d.apply(&x)?)?;
    s.check_eq_at("∂(η'(x)) = η'(d x)", &rn, &left, &right, n - 1);
    let lift = RbOperator::lift(p, n);
    let left = lift.apply(&ex)?;
    let right = eta.apply(&p.apply(&x)?)?;
    s.check_eq_at("P̃(η'(x)) = η'(P x)", &rn, &left, &right, n);
    Ok(())
}

fn adj_free(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let r = a.sha();
    let d = DiffOperator::tilde(&DiffOperator::canonical(&a)?);
    adj_drb_law(s, &d, &RbOperator::free(&r)?, nested())
}

fn adj_base(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    let d = DiffOperator::derivative(&a, "x")?;
    adj_drb_law(s, &d, &RbOperator::integration(&a, "x")?, Budget::default())
}

// ---- universal property ------------------------------------------------------------------------------------

fn universal(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let r = s.handle("poly(x,y)");
    let h = a.sha();
    let phi = random_substitution(s, &a, &r)?;
    let p = RbOperator::canonical(&r)?;
    let budget = Budget::default().with_len(2);
    let u = s.draw_sha("u", &h, &budget);
    let v = s.draw_sha("v", &h, &budget);
    let big = |w: &FreeRbElement| free_rb::induced_rb_hom(&phi, &p, w);
    let left = big(&free_rb::mixable_shuffle(&h, &u, &v))?;
    s.check_eq("Φ(u ⋄ v) = Φ(u)Φ(v)", &r, &left, &r.mul(&big(&u)?, &big(&v)?));
    let left = big(&free_rb::rb_operator(&h, &u))?;
    s.check_eq("Φ(P_A u) = P(Φ u)", &r, &left, &p.apply(&big(&u)?)?);
    let x = s.draw("x", &a, &Budget::default());
    let left = big(&free_rb::eta(&h, &x))?;
    s.check_eq("Φ(η x) = φ(x)", &r, &left, &phi.apply(&x)?);
    Ok(())
}

fn functoriality(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x)");
    let phi = random_substitution(s, &a, &a)?;
    let psi = random_substitution(s, &a, &a)?;
    let h = a.sha();
    let u = s.draw_sha("u", &h, &Budget::default().with_len(2).with_degree(1));
    let composite = free_rb::sha_map(&phi.then(&psi), &h, &u)?;
    let stepwise = free_rb::sha_map(&psi, &h, &free_rb::sha_map(&phi, &h, &u)?)?;
    s.check_eq("Ш(ψ∘φ) = Ш(ψ)∘Ш(φ)", &h, &el(composite), &el(stepwise));
    let id = free_rb::sha_map(&Morphism::identity(&a), &h, &u)?;
    s.check_eq("Ш(id) = id", &h, &el(id), &el(u));
    Ok(())
}

// ---- shuffle oracles -----------------------------------------------------------------------------------------

fn random_pure_tensor(s: &mut Sample, a: &AlgebraHandle, max_len: usize) -> PureTensor {
    use rand::Rng;
    let len = s.rng.random_range(1..=max_len);
    let budget = Budget::default();
    PureTensor(
        (0..len)
            .map(|_| crate::algebra::random::random_basis(a, &budget, crate::algebra::Prec::Exact, &mut s.rng))
            .collect(),
    )
}

fn shuffle_paths(s: &mut Sample) -> Result<()> {
    let a = s.handle("poly(x,y)");
    let h = a.sha();
    let ta = random_pure_tensor(s, &a, 5);
    let tb = random_pure_tensor(s, &a, 5);
    let one = h.ring().one();
    let ea = FreeRbElement::from_terms([(ta.clone(), one.clone())], crate::algebra::Prec::Exact);
    let eb = FreeRbElement::from_terms([(tb.clone(), one)], crate::algebra::Prec::Exact);
    s.note("a", &h, &el(ea.clone()));
    s.note("b", &h, &el(eb.clone()));
    let got = free_rb::mixable_shuffle(&h, &ea, &eb);
    let expect = oracles::mixable_shuffle_by_paths(&h, &ta, &tb);
    s.check_eq("recursive a ⋄ b = sum over lattice paths", &h, &el(got), &el(expect));
    Ok(())
}

/// At weight 0 the product of generic pure tensors is `a_0b_0` followed by
/// every interleaving of the tails, each once.
fn shuffle_interleavings(s: &mut Sample) -> Result<()> {
    use rand::Rng;
    let m = s.rng.random_range(0..=5usize);
    let n = s.rng.random_range(0..=5usize);
    let names: Vec<String> = (0..=m)
        .map(|i| format!("a{i}"))
        .chain((0..=n).map(|j| format!("b{j}")))
        .collect();
    let a = AlgebraHandle::poly_in(&names, s.ctx.clone());
    let h = a.sha();
    let var = |i: usize| crate::algebra::Basis::Mono(Monomial::var(names.len(), i));
    let ta: Vec<_> = (0..=m).map(var).collect();
    let tb: Vec<_> = (0..=n).map(|j| var(m + 1 + j)).collect();
    let one = h.ring().one();
    let ea = FreeRbElement::from_terms([(PureTensor(ta.clone()), one.clone())], crate::algebra::Prec::Exact);
    let eb = FreeRbElement::from_terms([(PureTensor(tb.clone()), one.clone())], crate::algebra::Prec::Exact);
    s.note("a", &h, &el(ea.clone()));
    s.note("b", &h, &el(eb.clone()));
    let got = free_rb::mixable_shuffle(&h, &ea, &eb);
    let head = a
        .mul_basis(&ta[0], &tb[0], crate::algebra::Prec::Exact)
        .into_keys()
        .next()
        .expect("monomial");
    let top: Vec<(PureTensor, crate::coeffs::Scalar)> = got
        .terms()
        .iter()
        .filter(|(t, _)| t.len() == m + n + 1)
        .map(|(t, c)| (t.clone(), c.clone()))
        .collect();
    let expected = FreeRbElement::from_terms(
        oracles::shuffles(&ta[1..], &tb[1..]).into_iter().map(|w| {
            let mut t = vec![head.clone()];
            t.extend(w);
            (PureTensor(t), one.clone())
        }),
        crate::algebra::Prec::Exact,
    );
    let top = FreeRbElement::from_terms(top, crate::algebra::Prec::Exact);
    let count_ok = top.terms().len() as u64
        == crate::coeffs::binomial((m + n) as u64, n as u64)
            .to_string()
            .parse::<u64>()
            .unwrap_or(0);
    s.check_eq(
        "top stratum = brute-force interleavings",
        &h,
        &el(top.clone()),
        &el(expected),
    );
    s.check_bool(
        "top count = C(m+n, n)",
        count_ok,
        top.terms().len().to_string(),
        format!("C({}, {n})", m + n),
    );
    if s.lambda().is_zero() {
        s.check_bool(
            "no lower strata at λ = 0",
            got.terms().len() == top.terms().len(),
            render(&h, &el(got.clone())),
            String::new(),
        );
    }
    Ok(())
}

pub(super) fn registry() -> Vec<LawSuite> {
    vec![
        LawSuite {
            name: "algebra_axioms",
            statement: "xy = yx, (xy)z = x(yz), x(y+z) = xy+xz, 1x = x",
            variants: vec![
                Variant::new("poly", 500, axioms_poly),
                Variant::new("sha", 500, axioms_sha),
                Variant::new("hur", 500, axioms_hur),
                Variant::new("sha_sha", 500, axioms_sha_sha),
                Variant::new("sha_hur", 500, axioms_sha_hur),
                Variant::new("hur_sha", 500, axioms_hur_sha),
            ],
        },
        LawSuite {
            name: "rb_identity",
            statement: "P(x)P(y) = P(xP(y)) + P(yP(x)) + λP(xy)",
            variants: vec![
                Variant::new("free", 300, rb_free),
                Variant::new("lift", 300, rb_lift),
                Variant::new("integration", 500, rb_integration)
                    .weights(Weights::Zero)
                    .rational(),
                Variant::new("scaled_identity", 500, rb_scaled_identity),
                Variant::new("free_over_series", 100, rb_free_over_series),
            ],
        },
        LawSuite {
            name: "lambda_leibniz",
            statement: "d(xy) = d(x)y + x d(y) + λ d(x)d(y), d(1) = 0",
            variants: vec![
                Variant::new("partial", 300, leibniz_partial),
                Variant::new("tilde", 300, leibniz_tilde),
                Variant::new("difference_quotient", 500, leibniz_dq).weights(Weights::Nonzero),
                Variant::new("derivative", 300, leibniz_derivative).weights(Weights::Zero),
                Variant::new("tilde_two_vars", 100, leibniz_tilde_two_vars),
            ],
        },
        LawSuite {
            name: "higher_leibniz",
            statement: "d^n(xy) = Σ_k Σ_j C(n,k) C(n-k,j) λ^k d^(n-j)(x) d^(k+j)(y), n ≤ 5",
            variants: vec![
                Variant::new("difference_quotient", 100, higher_dq).weights(Weights::Nonzero),
                Variant::new("derivative", 50, higher_derivative).weights(Weights::Zero),
                Variant::new("tilde", 30, higher_tilde),
            ],
        },
        LawSuite {
            name: "monad_laws",
            statement: "μ∘η_Ш = id, μ∘Ш(η) = id, μ∘Ш(μ) = μ∘μ_Ш, μ = nested evaluation",
            variants: vec![
                Variant::new("unit_left", 100, monad_unit_left),
                Variant::new("unit_right", 100, monad_unit_right),
                Variant::new("assoc", 100, monad_assoc),
                Variant::new("nested_form", 100, monad_mu_fold),
            ],
        },
        LawSuite {
            name: "comonad_laws",
            statement: "ε_{A^ℕ}∘δ = id, ε^ℕ∘δ = id, δ_{A^ℕ}∘δ = δ^ℕ∘δ",
            variants: vec![
                Variant::new("counit", 300, comonad_counit),
                Variant::new("coassoc", 300, comonad_coassoc),
            ],
        },
        LawSuite {
            name: "t_structure",
            statement: "h∘η = id, h∘Ш(h) = h∘μ for h the evaluation of a Rota-Baxter operator",
            variants: vec![
                Variant::new("base", 100, t_base),
                Variant::new("free", 40, t_free),
                Variant::new("lift", 40, t_lift),
            ],
        },
        LawSuite {
            name: "costructure",
            statement: "ε∘f = id, δ∘f = f^ℕ∘f, f multiplicative, for f(a) = (d^n a)_n",
            variants: vec![
                Variant::new("base", 100, co_base),
                Variant::new("free", 40, co_free),
                Variant::new("partial_is_delta", 100, co_partial_is_delta),
            ],
        },
        LawSuite {
            name: "mixed_distlaw_4",
            statement: "β∘η = η^ℕ, ε∘β = Ш(ε), δ∘β = β^ℕ∘β∘Ш(δ), β∘μ = μ^ℕ∘β∘Ш(β)",
            variants: vec![
                Variant::new("unit", 200, mdl_unit),
                Variant::new("counit", 200, mdl_counit),
                Variant::new("delta_square", 100, mdl_delta),
                Variant::new("mu_square", 100, mdl_mu),
            ],
        },
        LawSuite {
            name: "beta_naturality",
            statement: "Ш(φ)^ℕ∘β_A = β_B∘Ш(φ^ℕ)",
            variants: vec![Variant::new("substitution", 100, beta_naturality)],
        },
        LawSuite {
            name: "beta_hom",
            statement: "β(u⋄v) = β(u)β(v), β(P(u)) = P̃(β(u))",
            variants: vec![Variant::new("shuffle_and_operator", 200, beta_hom)],
        },
        LawSuite {
            name: "rb_lift",
            statement: "∂∘P̃ = id, ε∘P̃ = P∘ε",
            variants: vec![
                Variant::new("base", 300, lift_base),
                Variant::new("free", 100, lift_free),
            ],
        },
        LawSuite {
            name: "n_morphism",
            statement: "ε∘φ^ℕ = φ∘ε, ∂∘φ^ℕ = φ^ℕ∘∂, δ∘φ^ℕ = (φ^ℕ)^ℕ∘δ, φ^ℕ multiplicative",
            variants: vec![Variant::new("substitution", 100, n_morphism)],
        },
        LawSuite {
            name: "head_tail",
            statement: "f = g iff ε(f) = ε(g) and ∂f = ∂g",
            variants: vec![Variant::new("series", 200, head_tail)],
        },
        LawSuite {
            name: "drb",
            statement: "d∘P = id",
            variants: vec![
                Variant::new("free", 300, drb_free_inverse),
                Variant::new("free_two_vars", 100, drb_free_inverse_two_vars),
                Variant::new("base", 100, drb_base_inverse)
                    .weights(Weights::Zero)
                    .rational(),
            ],
        },
        LawSuite {
            name: "lifted_structures",
            statement: "h^ℕ∘β is a T-structure on A^ℕ, β∘Ш(f) is a costructure on Ш(A)",
            variants: vec![
                Variant::new("t_structure", 100, lifted_t),
                Variant::new("t_assoc", 100, lifted_t_assoc),
                Variant::new("costructure", 100, lifted_c),
            ],
        },
        LawSuite {
            name: "mixed_compat",
            statement: "f∘h = h^ℕ∘β∘Ш(f)",
            variants: vec![
                Variant::new("free_drb", 100, compat_free_drb),
                Variant::new("base_drb", 100, compat_base_drb)
                    .weights(Weights::Zero)
                    .rational(),
                Variant::new("cofree", 30, compat_cofree),
            ],
        },
        LawSuite {
            name: "power_sequence",
            statement: "f_0 = id, f_m∘f_n = f_(m+n), f_n(xy) = Σ C(n,k)C(n-k,j) λ^k f_(n-j)(x) f_(k+j)(y)",
            variants: vec![
                Variant::new("base", 60, power_base),
                Variant::new("tilde", 20, power_tilde),
            ],
        },
        LawSuite {
            name: "adjunction_triangles_drb",
            statement: "ε^ℕ∘η'_(A^ℕ) = id, ε∘η' = id, η' commutes with d and P",
            variants: vec![
                Variant::new("cofree_triangle", 100, adj_cofree_triangle),
                Variant::new("free", 50, adj_free),
                Variant::new("base", 100, adj_base).weights(Weights::Zero).rational(),
            ],
        },
        LawSuite {
            name: "universal_property",
            statement: "Φ(u⋄v) = Φ(u)Φ(v), Φ∘P_A = P∘Φ, Φ∘η = φ, Ш(ψ∘φ) = Ш(ψ)∘Ш(φ)",
            variants: vec![
                Variant::new("induced", 100, universal),
                Variant::new("functor", 100, functoriality),
            ],
        },
        LawSuite {
            name: "shuffle_oracle",
            statement: "a⋄b = a_0b_0 ⊗ Σ_paths λ^(merges) (interleaved tails)",
            variants: vec![
                Variant::new("lattice_paths", 100, shuffle_paths),
                Variant::new("interleavings", 60, shuffle_interleavings),
            ],
        },
    ]
}
