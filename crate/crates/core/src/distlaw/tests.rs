use super::*;
use crate::algebra::{random_element, Budget, Ctx, DiffOperator, Prec};
use crate::cli::eval::{eval_str, Operators};
use crate::hurwitz::{costructure_of, rb_lift};

fn handle(spec: &str, lambda: &str) -> AlgebraHandle {
    AlgebraHandle::parse(spec, Ctx::rational(lambda)).unwrap()
}

fn el(h: &AlgebraHandle, src: &str) -> Element {
    eval_str(src, h, &Operators::default(), 4).unwrap()
}

fn sha(h: &AlgebraHandle, src: &str) -> FreeRbElement {
    el(h, src).as_sha().unwrap().clone()
}

#[test]
fn beta_of_degree_one() {
    let src = handle("sha(hur(poly(x),3))", "1");
    let a = handle("poly(x)", "1");
    let sha_a = a.sha();
    let f = el(&a.hurwitz(3), "[x; 2; 0; 0]");
    let x = free_rb::eta(&src, &f);
    let b = beta(&src, &x, 3).unwrap();
    for (n, v) in f.as_series().unwrap().values().iter().enumerate() {
        assert_eq!(b.get(n).unwrap().as_sha().unwrap(), &free_rb::eta(&sha_a, v), "n = {n}");
    }
}

#[test]
fn beta_head_of_tensor() {
    let src = handle("sha(hur(poly(a,b,c,e),1))", "1/2");
    let x = sha(&src, "[a; b] # [c; e]");
    let b = beta(&src, &x, 1).unwrap();
    let sha_a = handle("sha(poly(a,b,c,e))", "1/2");
    assert_eq!(b.get(0).unwrap(), &el(&sha_a, "a # c"));
}

#[test]
fn beta_precision_underflow() {
    let src = handle("sha(hur(poly(x),3))", "0");
    let x = sha(&src, "[x; 1]");
    assert!(matches!(
        beta(&src, &x, 3),
        Err(AlgError::PrecisionUnderflow {
            needed: 3,
            available: 1
        })
    ));
    let m = beta_morphism(&handle("poly(x)", "0"), 3, 3);
    let out = m.apply(&Element::Sha(x)).unwrap();
    assert_eq!(out.prec(), Prec::Finite(1));
}

#[test]
fn beta_commutes_with_rb_operators() {
    for lambda in ["0", "1", "-1/2"] {
        let src = handle("sha(hur(poly(x),3))", lambda);
        let a = handle("poly(x)", lambda);
        let target = a.sha().hurwitz(3);
        let pa = RbOperator::free(&a.sha()).unwrap();
        for seed in 0..20 {
            let x = random_element(&src, &Budget::tiny(), seed).as_sha().unwrap().clone();
            let lhs = beta(&src, &free_rb::rb_operator(&src, &x), 3).unwrap();
            let rhs = rb_lift(&target, &pa, &beta(&src, &x, 3).unwrap()).unwrap();
            assert!(
                target.eq(&Element::Hurwitz(lhs), &Element::Hurwitz(rhs)),
                "λ = {lambda}, seed {seed}"
            );
        }
    }
}

#[test]
fn lifted_structure_unit_and_zero() {
    let a = handle("poly(x)", "0");
    let h = t_structure_of(&RbOperator::integration(&a, "x").unwrap());
    let lift = lift_t_structure(&h, 3).unwrap();
    let an = a.hurwitz(3);
    let src = an.sha();
    for seed in 0..20 {
        let f = random_element(&an, &Budget::default(), seed);
        let x = Element::Sha(free_rb::eta(&src, &f));
        assert!(an.eq(&lift.apply(&x).unwrap(), &f));
    }
    let z = lift.apply(&src.zero()).unwrap();
    assert!(an.is_zero(&z));
}

#[test]
fn lifted_costructure_examples() {
    let a = handle("poly(x)", "0");
    let f = costructure_of(&DiffOperator::derivative(&a, "x").unwrap(), 3);
    let sha_a = a.sha();
    // u = η(a) goes to η^ℕ(f(a))
    let u = free_rb::eta(&sha_a, &el(&a, "x^2"));
    let got = lift_costructure(&f, &u, 3).unwrap();
    let expect = ["x^2", "2*x", "2", "0"];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(got.get(n).unwrap(), &el(&sha_a, e), "n = {n}");
    }
    let got = lift_costructure(&f, &sha(&sha_a, "x # 1"), 3).unwrap();
    assert_eq!(got.get(0).unwrap(), &el(&sha_a, "x # 1"));
    let one = sha(&sha_a, "1");
    let got = lift_costructure(&f, &one, 3).unwrap();
    assert!(sha_a.hurwitz(3).eq(&Element::Hurwitz(got), &sha_a.hurwitz(3).unit()));
}

#[test]
fn lifted_costructure_checks_precision() {
    let a = handle("poly(x)", "0");
    let f = costructure_of(&DiffOperator::derivative(&a, "x").unwrap(), 2);
    assert!(lift_costructure_morphism(&f, 3).is_err());
    assert!(lift_costructure_morphism(&Morphism::identity(&a), 1).is_err());
}

#[test]
fn compat_holds_for_integration_and_derivative() {
    let a = handle("poly(x)", "0");
    let h = t_structure_of(&RbOperator::integration(&a, "x").unwrap());
    let f = costructure_of(&DiffOperator::derivative(&a, "x").unwrap(), 3);
    let samples: Vec<FreeRbElement> = (0..30)
        .map(|s| {
            random_element(&a.sha(), &Budget::default(), s)
                .as_sha()
                .unwrap()
                .clone()
        })
        .collect();
    let r = check_mixed_compat(&h, &f, &samples, 3, 0);
    assert!(r.passed, "{:?}", r.counterexample);
    assert_eq!(r.samples, 30);
}

#[test]
fn compat_holds_on_free_object() {
    let a = handle("poly(x)", "1/2");
    let sha_a = a.sha();
    let h = t_structure_of(&RbOperator::free(&sha_a).unwrap());
    let d = DiffOperator::tilde(&DiffOperator::difference_quotient(&a, "x").unwrap());
    let f = costructure_of(&d, 3);
    let samples: Vec<FreeRbElement> = (0..15)
        .map(|s| {
            random_element(&sha_a.sha(), &Budget::tiny(), s)
                .as_sha()
                .unwrap()
                .clone()
        })
        .collect();
    let r = check_mixed_compat(&h, &f, &samples, 3, 0);
    assert!(r.passed, "{:?}", r.counterexample);
}

#[test]
fn compat_fails_for_zero_derivation() {
    let a = handle("poly(x)", "0");
    let h = t_structure_of(&RbOperator::integration(&a, "x").unwrap());
    let f = costructure_of(&DiffOperator::zero(&a), 3);
    let r = check_mixed_compat(&h, &f, &[sha(&a.sha(), "x # 1")], 3, 11);
    assert!(!r.passed);
    let c = r.counterexample.unwrap();
    assert_eq!(c.index, 0);
    assert_eq!(r.seed, 11);
}

#[test]
fn compat_on_no_samples_passes() {
    let a = handle("poly(x)", "0");
    let h = t_structure_of(&RbOperator::integration(&a, "x").unwrap());
    let f = costructure_of(&DiffOperator::zero(&a), 3);
    let r = check_mixed_compat(&h, &f, &[], 3, 0);
    assert!(r.passed);
    assert_eq!(r.samples, 0);
}

#[test]
fn swap_is_an_involution() {
    let a = handle("poly(x)", "0");
    let h = t_structure_of(&RbOperator::integration(&a, "x").unwrap());
    let f = costructure_of(&DiffOperator::derivative(&a, "x").unwrap(), 3);
    let pair = MixedPair::StructureFirst { h, f };
    let swapped = phi_swap(pair.clone());
    assert!(!swapped.is_structure_first());
    assert_eq!(swapped.carrier(), pair.carrier());
    assert_eq!(swapped.structure().name(), pair.structure().name());
    let back = phi_swap(swapped);
    assert!(back.is_structure_first());
    assert_eq!(back.costructure().name(), pair.costructure().name());
    let samples = [sha(&a.sha(), "x # x")];
    assert_eq!(back.check(&samples, 3, 0).passed, pair.check(&samples, 3, 0).passed);
}
