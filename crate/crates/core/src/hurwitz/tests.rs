use proptest::prelude::*;

use super::*;
use crate::algebra::{random_element, AlgebraHandle, Budget, Ctx};
use crate::cli::eval::{eval_str, Operators};
use crate::text::render;

fn handle(spec: &str, lambda: &str) -> AlgebraHandle {
    AlgebraHandle::parse(spec, Ctx::rational(lambda)).unwrap()
}

fn el(h: &AlgebraHandle, src: &str) -> Element {
    eval_str(src, h, &Operators::default(), 4).unwrap()
}

fn ser(h: &AlgebraHandle, src: &str) -> HurwitzSeries {
    el(h, src).as_series().unwrap().clone()
}

const FG: &str = "hur(poly(f0,f1,f2,g0,g1,g2),2)";

#[test]
fn product_expansion() {
    let h = handle(FG, "3");
    let a = h.inner().unwrap();
    let p = hurwitz_mul(&h, &ser(&h, "[f0; f1; f2]"), &ser(&h, "[g0; g1; g2]"));
    let expect = [
        "f0*g0",
        "f1*g0 + f0*g1 + 3*f1*g1",
        "f2*g0 + 2*f1*g1 + f0*g2 + 6*f2*g1 + 6*f1*g2 + 9*f2*g2",
    ];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(p.get(n).unwrap(), &el(&a, e), "n = {n}");
    }
}

#[test]
fn product_at_weight_zero_is_leibniz() {
    let h = handle(FG, "0");
    let a = h.inner().unwrap();
    let p = hurwitz_mul(&h, &ser(&h, "[f0; f1; f2]"), &ser(&h, "[g0; g1; g2]"));
    assert_eq!(p.get(2).unwrap(), &el(&a, "f2*g0 + 2*f1*g1 + f0*g2"));
}

#[test]
fn unit_is_neutral() {
    let h = handle("hur(poly(x),4)", "1/2");
    let one = h.unit().as_series().unwrap().clone();
    assert_eq!(render(&h, &h.unit()), "[1; 0; 0; 0; 0]");
    for seed in 0..30 {
        let f = random_element(&h, &Budget::default(), seed)
            .as_series()
            .unwrap()
            .clone();
        assert_eq!(hurwitz_mul(&h, &f, &one), f);
    }
}

#[test]
fn shift_examples() {
    let h = handle("hur(poly(a0,a1,a2),2)", "1");
    let f = ser(&h, "[a0; a1; a2]");
    assert_eq!(partial(&h, &f).unwrap(), ser(&h, "[a1; a2]"));
    let one = h.unit().as_series().unwrap().clone();
    let d1 = partial(&h, &one).unwrap();
    assert!(d1.values().iter().all(|v| h.inner().unwrap().is_zero(v)));
    let f0 = ser(&h, "[a0]");
    assert_eq!(
        partial(&h, &f0).unwrap_err(),
        AlgError::PrecisionUnderflow {
            needed: 1,
            available: 0
        }
    );
    assert_eq!(counit(&f), el(&h.inner().unwrap(), "a0"));
}

#[test]
fn comultiplication() {
    let h = handle("hur(poly(a0,a1,a2),2)", "0");
    let f = ser(&h, "[a0; a1; a2]");
    let dd = DoubleSeries::new(delta(&h.hurwitz(2), &f)).unwrap();
    assert_eq!(dd.precision(), 2);
    assert_eq!(dd.get(1, 1).unwrap(), &el(&h.inner().unwrap(), "a2"));
    assert_eq!(dd.get(0, 2), dd.get(2, 0));
    assert!(dd.get(2, 1).is_none());
    assert!(DoubleSeries::new(f).is_err());
}

#[test]
fn rb_lift_example() {
    let h = handle("hur(poly(x),2)", "0");
    let a = h.inner().unwrap();
    let p = RbOperator::integration(&a, "x").unwrap();
    let got = rb_lift(&h, &p, &ser(&h, "[x; 1]")).unwrap();
    assert_eq!(got, ser(&h, "[1/2*x^2; x; 1]"));
    assert_eq!(got.precision(), 2);
}

#[test]
fn hom_of_derivative() {
    let a = handle("poly(x)", "0");
    let d = DiffOperator::derivative(&a, "x").unwrap();
    let got = hurwitz_hom_of_derivation(&d, &el(&a, "x^2"), 3).unwrap();
    assert_eq!(render(&a.hurwitz(3), &Element::Hurwitz(got)), "[x^2; 2*x; 2; 0]");
}

#[test]
fn higher_leibniz_small_case() {
    // n = 1 is the λ-Leibniz rule
    let a = handle("poly(x,y)", "2");
    let d = DiffOperator::difference_quotient(&a, "x").unwrap();
    let (x, y) = (el(&a, "x^2"), el(&a, "x*y"));
    let got = higher_leibniz(&d, &x, &y, 1).unwrap();
    assert_eq!(got, d.apply(&a.mul(&x, &y)).unwrap());
}

#[test]
fn hurwitz_mutation_changes_product() {
    let ctx = Ctx::rational("3").with_mutation(Some(Mutation::HurwitzDropLambdaPower));
    let h = AlgebraHandle::parse(FG, ctx).unwrap();
    let a = h.inner().unwrap();
    let p = hurwitz_mul(&h, &ser(&h, "[f0; f1; f2]"), &ser(&h, "[g0; g1; g2]"));
    assert_eq!(p.get(1).unwrap(), &el(&a, "f1*g0 + f0*g1 + f1*g1"));
}

fn lambda_strategy() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("0"), Just("1"), Just("1/2"), Just("-2")]
}

fn draw(h: &AlgebraHandle, seed: u64) -> HurwitzSeries {
    random_element(h, &Budget::default(), seed).as_series().unwrap().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_is_commutative_and_associative(lambda in lambda_strategy(), s in any::<u64>()) {
        let h = handle("hur(poly(x),4)", lambda);
        let (f, g, k) = (draw(&h, s), draw(&h, s ^ 1), draw(&h, s ^ 2));
        let fg = Element::Hurwitz(hurwitz_mul(&h, &f, &g));
        let gf = Element::Hurwitz(hurwitz_mul(&h, &g, &f));
        prop_assert!(h.eq(&fg, &gf));
        let l = Element::Hurwitz(hurwitz_mul(&h, &hurwitz_mul(&h, &f, &g), &k));
        let r = Element::Hurwitz(hurwitz_mul(&h, &f, &hurwitz_mul(&h, &g, &k)));
        prop_assert!(h.eq(&l, &r));
    }

    #[test]
    fn shift_is_lambda_derivation(lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("hur(poly(x),4)", lambda);
        let (f, g) = (draw(&h, s1), draw(&h, s2));
        let d = |x: &HurwitzSeries| partial(&h, x).unwrap();
        let m = |x: &HurwitzSeries, y: &HurwitzSeries| Element::Hurwitz(hurwitz_mul(&h, x, y));
        prop_assume!(f.precision() > 0 && g.precision() > 0);
        let lhs = Element::Hurwitz(d(&hurwitz_mul(&h, &f, &g)));
        let rhs = h.add(&h.add(&m(&d(&f), &g), &m(&f, &d(&g))), &h.scale(h.lambda(), &m(&d(&f), &d(&g))));
        prop_assert!(h.eq(&lhs, &rhs));
    }

    #[test]
    fn lifted_operator_is_rota_baxter(lambda in lambda_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let h = handle("hur(poly(x),4)", lambda);
        let p = RbOperator::scaled_identity(&h.inner().unwrap());
        let (f, g) = (draw(&h, s1), draw(&h, s2));
        let pt = |x: &HurwitzSeries| rb_lift(&h, &p, x).unwrap();
        let m = |x: &HurwitzSeries, y: &HurwitzSeries| hurwitz_mul(&h, x, y);
        let lhs = Element::Hurwitz(m(&pt(&f), &pt(&g)));
        let rhs = h.add(
            &h.add(&Element::Hurwitz(pt(&m(&f, &pt(&g)))), &Element::Hurwitz(pt(&m(&pt(&f), &g)))),
            &h.scale(h.lambda(), &Element::Hurwitz(pt(&m(&f, &g)))),
        );
        prop_assert!(h.eq(&lhs, &rhs));
    }

    #[test]
    fn higher_leibniz_matches_iteration(lambda in prop_oneof![Just("1"), Just("1/2"), Just("-1")], s1 in any::<u64>(), s2 in any::<u64>(), n in 0usize..=4) {
        let a = handle("poly(x)", lambda);
        let d = DiffOperator::difference_quotient(&a, "x").unwrap();
        let b = Budget::default().with_degree(4);
        let (x, y) = (random_element(&a, &b, s1), random_element(&a, &b, s2));
        prop_assert_eq!(higher_leibniz(&d, &x, &y, n).unwrap(), d.iterate(&a.mul(&x, &y), n).unwrap());
    }
}
