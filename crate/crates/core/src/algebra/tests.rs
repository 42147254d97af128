use proptest::prelude::*;

use super::*;
use crate::cli::eval::{eval_str, Operators};
use crate::text::render;

fn handle(spec: &str, lambda: &str) -> AlgebraHandle {
    AlgebraHandle::parse(spec, Ctx::rational(lambda)).unwrap()
}

fn el(h: &AlgebraHandle, src: &str) -> Element {
    eval_str(src, h, &Operators::default(), 4).unwrap()
}

#[test]
fn polynomial_product() {
    let h = handle("poly(x)", "0");
    let p = h.mul(&el(&h, "x + 1"), &el(&h, "x - 1"));
    assert_eq!(render(&h, &p), "x^2 - 1");
}

#[test]
fn sha_unit_times_unit() {
    let h = handle("sha(poly(x))", "1");
    let one = alg_unit(&h);
    assert_eq!(alg_mul(&h, &one, &one).unwrap(), one);
}

#[test]
fn scale_by_zero() {
    for spec in ["poly(x,y)", "sha(poly(x))", "hur(poly(x),3)"] {
        let h = handle(spec, "1/2");
        let x = random_element(&h, &Budget::default(), 3);
        let z = alg_scale(&h, &h.ring().zero(), &x).unwrap();
        assert!(h.is_zero(&z), "{spec}");
    }
}

#[test]
fn checked_ops_reject_foreign_elements() {
    let h = handle("poly(x)", "0");
    let s = handle("sha(poly(x))", "0");
    let e = alg_add(&h, &h.unit(), &s.unit()).unwrap_err();
    assert!(matches!(e, AlgError::HandleMismatch { .. }));
}

#[test]
fn derivative_examples() {
    let h = handle("poly(x,y)", "0");
    let d = DiffOperator::derivative(&h, "x").unwrap();
    let show = |src: &str| render(&h, &d.apply(&el(&h, src)).unwrap());
    assert_eq!(show("x^2"), "2*x");
    assert_eq!(show("1"), "0");
    assert_eq!(show("x*y"), "y");
    assert!(matches!(
        DiffOperator::derivative(&h, "z"),
        Err(AlgError::UnknownVariable(_))
    ));
}

#[test]
fn difference_quotient_examples() {
    let h = handle("poly(x)", "3");
    let d = DiffOperator::difference_quotient(&h, "x").unwrap();
    let show = |src: &str| render(&h, &d.apply(&el(&h, src)).unwrap());
    assert_eq!(show("x"), "1");
    assert_eq!(show("x^2"), "2*x + 3");
    assert_eq!(show("1"), "0");
    let h0 = handle("poly(x)", "0");
    assert_eq!(
        DiffOperator::difference_quotient(&h0, "x").unwrap_err(),
        AlgError::ZeroWeight
    );
}

#[test]
fn difference_quotient_matches_shift() {
    // (f(x+λ) - f(x)) / λ computed by substitution
    let h = handle("poly(x)", "1/2");
    let d = DiffOperator::difference_quotient(&h, "x").unwrap();
    let shift = Morphism::substitution(&h, &h, vec![el(&h, "x + 1/2").as_poly().unwrap().clone()]).unwrap();
    for seed in 0..50 {
        let f = random_element(&h, &Budget::default().with_degree(5), seed);
        let diff = h.sub(&shift.apply(&f).unwrap(), &f);
        let expect = h.scale(&h.ring().from_i64(2), &diff);
        assert_eq!(d.apply(&f).unwrap(), expect);
    }
}

#[test]
fn integration_examples() {
    let h = handle("poly(x)", "0");
    let p = RbOperator::integration(&h, "x").unwrap();
    let show = |src: &str| render(&h, &p.apply(&el(&h, src)).unwrap());
    assert_eq!(show("1"), "x");
    assert_eq!(show("x"), "1/2*x^2");
    let px = p.apply(&el(&h, "x")).unwrap();
    let lhs = h.mul(&px, &px);
    let rhs = h.scale(&h.ring().from_i64(2), &p.apply(&h.mul(&el(&h, "x"), &px)).unwrap());
    assert_eq!(render(&h, &lhs), "1/4*x^4");
    assert_eq!(lhs, rhs);
    let z = AlgebraHandle::parse(
        "poly(x)",
        Ctx::new(RingMode::Integer, RingMode::Integer.zero()).unwrap(),
    )
    .unwrap();
    assert!(matches!(
        RbOperator::integration(&z, "x"),
        Err(AlgError::UnsupportedRing { .. })
    ));
}

#[test]
fn integration_treats_other_variables_as_constants() {
    let h = handle("poly(x,y)", "0");
    let p = RbOperator::integration(&h, "x").unwrap();
    assert_eq!(render(&h, &p.apply(&el(&h, "3*x*y^2")).unwrap()), "3/2*x^2*y^2");
}

#[test]
fn scaled_identity_examples() {
    let h = handle("poly(x)", "1");
    let p = RbOperator::scaled_identity(&h);
    assert_eq!(render(&h, &p.apply(&el(&h, "x")).unwrap()), "-x");
    for lambda in ["0", "1", "1/2", "-3"] {
        let h = handle("poly(x)", lambda);
        let p = RbOperator::scaled_identity(&h);
        let one = h.unit();
        let p1 = p.apply(&one).unwrap();
        let lhs = h.mul(&p1, &p1);
        let rhs = h.add(
            &h.add(&p.apply(&p1).unwrap(), &p.apply(&p1).unwrap()),
            &h.scale(h.lambda(), &p1),
        );
        assert_eq!(lhs, rhs, "λ = {lambda}");
    }
    let h0 = handle("poly(x)", "0");
    let x = el(&h0, "x");
    assert!(h0.is_zero(&RbOperator::scaled_identity(&h0).apply(&x).unwrap()));
}

#[test]
fn random_zero_budget_gives_zero() {
    for spec in ["poly(x,y)", "sha(poly(x))", "hur(poly(x),2)", "sha(hur(poly(x),2))"] {
        let h = handle(spec, "1");
        let z = random_element(&h, &Budget::default().with_terms(0), 9);
        assert!(h.is_zero(&z), "{spec}");
    }
}

#[test]
fn random_is_deterministic_and_within_budget() {
    let h = handle("sha(poly(x,y))", "0");
    let b = Budget::default();
    for seed in 0..100 {
        let x = random_element(&h, &b, seed);
        assert_eq!(x, random_element(&h, &b, seed));
        h.check(&x).unwrap();
        let s = x.as_sha().unwrap();
        assert!(s.max_len() <= b.max_len);
        assert!(s.terms().len() <= b.max_terms);
    }
}

#[test]
fn random_snapshot_seed_42() {
    let h = handle("poly(x,y)", "0");
    let x = random_element(&h, &Budget::default(), 42);
    assert_eq!(render(&h, &x), SNAPSHOT_42);
}

const SNAPSHOT_42: &str = "-x*y";

#[test]
fn handle_parsing() {
    let h = handle("sha(hur(poly(x, y), 4))", "0");
    assert_eq!(h.to_string(), "sha(hur(poly(x,y),4))");
    assert_eq!(h.depth(), 2);
    assert!(AlgebraHandle::parse("sha(sha(sha(hur(poly(x),2))))", Ctx::rational("0")).is_err());
    assert!(AlgebraHandle::parse("poly(x,x)", Ctx::rational("0")).is_err());
    assert!(AlgebraHandle::parse("poly(P)", Ctx::rational("0")).is_err());
    assert!(AlgebraHandle::parse("hur(poly(x))", Ctx::rational("0")).is_err());
}

#[test]
fn precision_of_series_is_the_triangle() {
    let h = handle("hur(hur(poly(x),3),3)", "0");
    let u = h.unit();
    let f = u.as_series().unwrap();
    assert_eq!(f.precision(), 3);
    let lens: Vec<usize> = f
        .values()
        .iter()
        .map(|v| v.as_series().unwrap().values().len())
        .collect();
    assert_eq!(lens, vec![4, 3, 2, 1]);
}

#[test]
fn equality_is_up_to_common_precision() {
    let h = handle("hur(poly(x),4)", "0");
    let a = el(&h, "[1; x; x^2]");
    let b = el(&h, "[1; x; x^2; 7]");
    assert!(alg_eq(&h, &a, &b).unwrap());
    let c = el(&h, "[1; 2*x]");
    assert!(!h.eq(&a, &c));
}

#[test]
fn nesting_is_bounded() {
    let h = handle("sha(sha(poly(x)))", "0");
    let mut ctx = (**h.ctx()).clone();
    ctx.max_depth = 1;
    let e = AlgebraHandle::parse("sha(sha(poly(x)))", ctx).unwrap_err();
    assert!(matches!(e, AlgError::NestingTooDeep { depth: 2, max: 1 }));
}

fn spec_strategy() -> impl Strategy<Value = &'static str> {
    prop_oneof![
        Just("poly(x,y)"),
        Just("sha(poly(x,y))"),
        Just("hur(poly(x),3)"),
        Just("sha(sha(poly(x)))"),
        Just("hur(sha(poly(x)),2)"),
    ]
}

fn lambda_strategy() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("0"), Just("1"), Just("1/2"), Just("-2")]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn eq_is_an_equivalence(spec in spec_strategy(), lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle(spec, lambda);
        let b = Budget::tiny();
        let x = random_element(&h, &b, s1);
        let y = random_element(&h, &b, s2);
        prop_assert!(h.eq(&x, &x));
        prop_assert_eq!(h.eq(&x, &y), h.eq(&y, &x));
        let back = h.normalize(h.truncate(&x, x.prec()));
        prop_assert_eq!(&back, &x);
    }

    #[test]
    fn difference_quotient_is_a_lambda_derivation(lambda in prop_oneof![Just("1"), Just("1/2"), Just("-3")], s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("poly(x,y)", lambda);
        let d = DiffOperator::difference_quotient(&h, "x").unwrap();
        let b = Budget::default().with_degree(3);
        let x = random_element(&h, &b, s1);
        let y = random_element(&h, &b, s2);
        let (dx, dy) = (d.apply(&x).unwrap(), d.apply(&y).unwrap());
        let lhs = d.apply(&h.mul(&x, &y)).unwrap();
        let rhs = h.add(&h.add(&h.mul(&dx, &y), &h.mul(&x, &dy)), &h.scale(h.lambda(), &h.mul(&dx, &dy)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integration_is_rota_baxter(s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("poly(x,y)", "0");
        let p = RbOperator::integration(&h, "x").unwrap();
        let x = random_element(&h, &Budget::default(), s1);
        let y = random_element(&h, &Budget::default(), s2);
        let (px, py) = (p.apply(&x).unwrap(), p.apply(&y).unwrap());
        let lhs = h.mul(&px, &py);
        let rhs = h.add(&p.apply(&h.mul(&x, &py)).unwrap(), &p.apply(&h.mul(&y, &px)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaled_identity_is_rota_baxter(lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("poly(x,y)", lambda);
        let p = RbOperator::scaled_identity(&h);
        let x = random_element(&h, &Budget::default(), s1);
        let y = random_element(&h, &Budget::default(), s2);
        let (px, py) = (p.apply(&x).unwrap(), p.apply(&y).unwrap());
        let lhs = h.mul(&px, &py);
        let rhs = h.add(
            &h.add(&p.apply(&h.mul(&x, &py)).unwrap(), &p.apply(&h.mul(&y, &px)).unwrap()),
            &h.scale(h.lambda(), &p.apply(&h.mul(&x, &y)).unwrap()),
        );
        prop_assert_eq!(lhs, rhs);
    }
}

#[cfg(feature = "exp-span")]
mod exp_span {
    use super::super::ops::exp_span::*;
    use crate::coeffs::RingMode;

    #[test]
    fn examples() {
        let q = RingMode::Rational;
        let e = |k: u64| ExpSpanElement::from_terms([(k, q.one())]).unwrap();
        let p1 = exp_span_rb(&e(1)).unwrap();
        assert_eq!(p1, ExpSpanElement::from_terms([(1, q.from_i64(-1))]).unwrap());
        let p2 = exp_span_rb(&e(2)).unwrap();
        assert_eq!(
            p2,
            ExpSpanElement::from_terms([(2, q.parse_scalar("-1/2").unwrap())]).unwrap()
        );
        assert_eq!(exp_span_rb(&ExpSpanElement::zero()).unwrap(), ExpSpanElement::zero());
        assert!(ExpSpanElement::from_terms([(0, q.one())]).is_err());
    }

    #[test]
    fn weight_zero_identity() {
        let q = RingMode::Rational;
        let x = ExpSpanElement::from_terms([(1, q.from_i64(2)), (3, q.one())]).unwrap();
        let y = ExpSpanElement::from_terms([(2, q.from_i64(-1))]).unwrap();
        let p = |f: &ExpSpanElement| exp_span_rb(f).unwrap();
        let lhs = p(&x).mul(&p(&y));
        let rhs = p(&x.mul(&p(&y))).add(&p(&y.mul(&p(&x))));
        assert_eq!(lhs, rhs);
    }
}
