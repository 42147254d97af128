use proptest::prelude::*;

use super::*;
use crate::algebra::{random_element, AlgebraHandle, Budget, Ctx, Poly};
use crate::cli::bench::generic_pair;
use crate::cli::eval::{eval_str, Operators};
use crate::coeffs::binomial;
use crate::laws::oracles::mixable_shuffle_by_paths;
use crate::text::render;

fn handle(spec: &str, lambda: &str) -> AlgebraHandle {
    AlgebraHandle::parse(spec, Ctx::rational(lambda)).unwrap()
}

fn el(h: &AlgebraHandle, src: &str) -> Element {
    eval_str(src, h, &Operators::default(), 4).unwrap()
}

fn sha(h: &AlgebraHandle, src: &str) -> FreeRbElement {
    el(h, src).as_sha().unwrap().clone()
}

const ABC: &str = "sha(poly(a0,a1,b0,b1,b2))";

#[test]
fn worked_example() {
    for lambda in ["0", "1", "1/2"] {
        let h = handle(ABC, lambda);
        let lhs = mixable_shuffle(&h, &sha(&h, "a0 # a1"), &sha(&h, "b0 # b1 # b2"));
        let rhs = sha(
            &h,
            &format!(
                "a0*b0 # a1 # b1 # b2 + a0*b0 # b1 # a1 # b2 + a0*b0 # b1 # b2 # a1 \
                 + {lambda}*(a0*b0 # b1 # a1*b2) + {lambda}*(a0*b0 # a1*b1 # b2)"
            ),
        );
        assert_eq!(lhs, rhs, "λ = {lambda}");
    }
}

#[test]
fn degree_one_factor() {
    let h = handle(ABC, "1");
    let got = mixable_shuffle(&h, &sha(&h, "a0"), &sha(&h, "b0 # b1"));
    assert_eq!(render(&h, &Element::Sha(got)), "a0*b0 # b1");
}

#[test]
fn unit_is_neutral() {
    let h = handle("sha(poly(x,y))", "1/2");
    let one = sha(&h, "1");
    for seed in 0..30 {
        let x = random_element(&h, &Budget::default(), seed).as_sha().unwrap().clone();
        assert_eq!(mixable_shuffle(&h, &one, &x), x);
        assert_eq!(mixable_shuffle(&h, &x, &one), x);
    }
}

#[test]
fn rb_operator_prepends_unit() {
    let h = handle("sha(poly(x0,x1))", "0");
    let got = rb_operator(&h, &sha(&h, "x0 # x1"));
    assert_eq!(got, sha(&h, "1 # x0 # x1"));
    assert!(rb_operator(&h, &FreeRbElement::zero(Prec::Exact)).is_zero());
}

#[test]
fn eta_is_multiplicative() {
    let h = handle("sha(poly(x,y))", "1");
    let a = h.inner().unwrap();
    let (x, y) = (el(&a, "x"), el(&a, "y"));
    let lhs = mixable_shuffle(&h, &eta(&h, &x), &eta(&h, &y));
    assert_eq!(lhs, eta(&h, &a.mul(&x, &y)));
    assert_eq!(render(&h, &Element::Sha(lhs)), "x*y");
}

#[test]
fn tensor_is_multilinear() {
    let h = handle("sha(poly(x,y))", "0");
    let a = h.inner().unwrap();
    let t = tensor(&h, &[el(&a, "x + y"), el(&a, "2")]);
    assert_eq!(t, sha(&h, "2*(x # 1) + 2*(y # 1)"));
}

#[test]
fn functor_on_substitution() {
    let h = handle("sha(poly(x))", "0");
    let a = h.inner().unwrap();
    let f = Morphism::substitution(&a, &a, vec![el(&a, "x + 1").as_poly().unwrap().clone()]).unwrap();
    let got = sha_map(&f, &h, &sha(&h, "x # x")).unwrap();
    assert_eq!(got, sha(&h, "(x + 1) # (x + 1)"));
    assert_eq!(render(&h, &Element::Sha(got)), "x # x + x # 1 + 1 # x + 1 # 1");
}

#[test]
fn induced_hom_with_integration() {
    let h = handle("sha(poly(x))", "0");
    let a = h.inner().unwrap();
    let p = RbOperator::integration(&a, "x").unwrap();
    let id = Morphism::identity(&a);
    let got = induced_rb_hom(&id, &p, &sha(&h, "x # 1")).unwrap();
    assert_eq!(render(&a, &got), "x^2");
    let got = counit_eval(&p, &sha(&h, "1 # x")).unwrap();
    assert_eq!(render(&a, &got), "1/2*x^2");
}

#[test]
fn induced_hom_is_rb_hom() {
    let h = handle("sha(poly(x))", "0");
    let a = h.inner().unwrap();
    let p = RbOperator::integration(&a, "x").unwrap();
    let free = RbOperator::free(&h).unwrap();
    for seed in 0..40 {
        let u = random_element(&h, &Budget::default(), seed);
        let v = random_element(&h, &Budget::default(), seed + 1000);
        let f = |w: &Element| counit_eval(&p, w.as_sha().unwrap()).unwrap();
        assert_eq!(f(&h.mul(&u, &v)), a.mul(&f(&u), &f(&v)));
        assert_eq!(f(&free.apply(&u).unwrap()), p.apply(&f(&u)).unwrap());
    }
}

#[test]
fn multiplication_of_monad() {
    let a = handle("poly(a,b0,b1)", "1");
    let hh = a.sha().sha();
    let h = a.sha();
    let inner = |src: &str| el(&h, src);
    let x = tensor(&hh, &[inner("a"), inner("b0 # b1")]);
    assert_eq!(mu(&hh, &x).unwrap(), sha(&h, "a # b0 # b1"));
    let x = tensor(&hh, &[inner("a # b0")]);
    assert_eq!(mu(&hh, &x).unwrap(), sha(&h, "a # b0"));
}

#[test]
fn tilde_d_examples() {
    let h = handle("sha(poly(x))", "1/2");
    let a = h.inner().unwrap();
    let d = DiffOperator::derivative(&a, "x").unwrap();
    assert_eq!(tilde_d(&h, &d, &sha(&h, "1 # x")).unwrap(), sha(&h, "x"));
    assert_eq!(tilde_d(&h, &d, &sha(&h, "x^2")).unwrap(), sha(&h, "2*x"));
    // d(x) ⊗ x + x·x + λ d(x)·x
    assert_eq!(
        tilde_d(&h, &d, &sha(&h, "x # x")).unwrap(),
        sha(&h, "1 # x + x^2 + 1/2*x")
    );
    assert!(tilde_d(&h, &d, &sha(&h, "1")).unwrap().is_zero());
}

#[test]
fn tilde_d_inverts_rb_operator() {
    let h = handle("sha(poly(x,y))", "1");
    let a = h.inner().unwrap();
    let d = DiffOperator::difference_quotient(&a, "x").unwrap();
    for seed in 0..50 {
        let u = random_element(&h, &Budget::default(), seed).as_sha().unwrap().clone();
        assert_eq!(tilde_d(&h, &d, &rb_operator(&h, &u)).unwrap(), u);
    }
}

#[test]
fn term_counts() {
    for m in 0..=4 {
        for n in 0..=4 {
            let (h, x, y) = generic_pair(m, n, Ctx::rational("0"));
            let prod = mixable_shuffle(&h, &x, &y);
            assert_eq!(
                prod.terms().len() as u64,
                binomial((m + n) as u64, n as u64).to_string().parse::<u64>().unwrap()
            );
            assert!(prod.terms().values().all(|c| c.is_one()));
            assert!(prod.terms().keys().all(|t| t.len() == m + n + 1));
        }
    }
}

#[test]
fn mutation_drops_lambda_term() {
    let ctx = Ctx::rational("1").with_mutation(Some(Mutation::ShuffleDropLambda));
    let h = AlgebraHandle::parse(ABC, ctx).unwrap();
    let clean = handle(ABC, "0");
    let got = mixable_shuffle(&h, &sha(&h, "a0 # a1"), &sha(&h, "b0 # b1 # b2"));
    let lambda_free = mixable_shuffle(&clean, &sha(&clean, "a0 # a1"), &sha(&clean, "b0 # b1 # b2"));
    assert_eq!(got.terms(), lambda_free.terms());
}

#[test]
fn truncation_respects_height() {
    let h = handle("sha(hur(poly(x),3))", "1");
    let u = random_element(&h, &Budget::default(), 5);
    let s = u.as_sha().unwrap();
    for t in s.terms().keys() {
        assert!(Prec::Finite(t.height()) <= s.prec());
    }
}

fn lambda_strategy() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("0"), Just("1"), Just("1/2"), Just("-1")]
}

fn draw(h: &AlgebraHandle, seed: u64) -> FreeRbElement {
    random_element(h, &Budget::default(), seed).as_sha().unwrap().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shuffle_matches_lattice_paths(lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("sha(poly(x,y))", lambda);
        let (a, b) = (draw(&h, s1), draw(&h, s2));
        for (ta, ca) in a.terms() {
            for (tb, cb) in b.terms() {
                let one_a = FreeRbElement::from_terms([(ta.clone(), ca.clone())], Prec::Exact);
                let one_b = FreeRbElement::from_terms([(tb.clone(), cb.clone())], Prec::Exact);
                let fast = mixable_shuffle(&h, &one_a, &one_b);
                let slow = mixable_shuffle_by_paths(&h, ta, tb).scale(&(ca * cb));
                prop_assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn shuffle_is_commutative_and_associative(lambda in lambda_strategy(), s in any::<u64>()) {
        let h = handle("sha(poly(x,y))", lambda);
        let (a, b, c) = (draw(&h, s), draw(&h, s ^ 1), draw(&h, s ^ 2));
        prop_assert_eq!(mixable_shuffle(&h, &a, &b), mixable_shuffle(&h, &b, &a));
        let l = mixable_shuffle(&h, &mixable_shuffle(&h, &a, &b), &c);
        let r = mixable_shuffle(&h, &a, &mixable_shuffle(&h, &b, &c));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn rb_identity(lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("sha(poly(x,y))", lambda);
        let (x, y) = (draw(&h, s1), draw(&h, s2));
        let (px, py) = (rb_operator(&h, &x), rb_operator(&h, &y));
        let lhs = mixable_shuffle(&h, &px, &py);
        let rhs = rb_operator(&h, &mixable_shuffle(&h, &x, &py))
            .add(&rb_operator(&h, &mixable_shuffle(&h, &px, &y)))
            .add(&rb_operator(&h, &mixable_shuffle(&h, &x, &y)).scale(h.lambda()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tilde_d_is_lambda_derivation(lambda in prop_oneof![Just("1"), Just("1/2")], s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("sha(poly(x))", lambda);
        let a = h.inner().unwrap();
        let d = DiffOperator::difference_quotient(&a, "x").unwrap();
        let (x, y) = (draw(&h, s1), draw(&h, s2));
        let (dx, dy) = (tilde_d(&h, &d, &x).unwrap(), tilde_d(&h, &d, &y).unwrap());
        let lhs = tilde_d(&h, &d, &mixable_shuffle(&h, &x, &y)).unwrap();
        let rhs = mixable_shuffle(&h, &dx, &y)
            .add(&mixable_shuffle(&h, &x, &dy))
            .add(&mixable_shuffle(&h, &dx, &dy).scale(h.lambda()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sha_map_is_a_homomorphism(lambda in lambda_strategy(), s in any::<u64>(), c in -3i64..=3) {
        let h = handle("sha(poly(x,y))", lambda);
        let a = h.inner().unwrap();
        let ring = a.ring();
        let images = vec![
            Poly::var(2, 1, ring).add(&Poly::constant(2, ring.from_i64(c))),
            Poly::var(2, 0, ring).mul(&Poly::var(2, 0, ring)),
        ];
        let f = Morphism::substitution(&a, &a, images).unwrap();
        let (x, y) = (draw(&h, s), draw(&h, s ^ 7));
        let lhs = sha_map(&f, &h, &mixable_shuffle(&h, &x, &y)).unwrap();
        let rhs = mixable_shuffle(&h, &sha_map(&f, &h, &x).unwrap(), &sha_map(&f, &h, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
