//! Handle-directed evaluation: every node is evaluated against the handle
//! its position expects, so `x` means `η(x)` under `sha(..)` and a tensor's
//! factors are read in the inner algebra.

use std::str::FromStr;

use crate::algebra::{AlgError, AlgebraHandle, Carrier, DiffOperator, Element, Poly, Prec, RbOperator};
use crate::distlaw;
use crate::free_rb;
use crate::hurwitz::{self, HurwitzSeries};

use super::parser::{parse, DiagKind, Diagnostic, Expr, ExprKind, Func, Span};

/// Rota-Baxter operator used on polynomial carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseRb {
    /// Integration at weight 0 over ℚ, `-λ·id` otherwise.
    #[default]
    Canonical,
    Integration,
    ScaledIdentity,
}

impl FromStr for BaseRb {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "canonical" => Ok(BaseRb::Canonical),
            "integration" | "int" => Ok(BaseRb::Integration),
            "scaled-identity" | "neg-lambda" => Ok(BaseRb::ScaledIdentity),
            _ => Err(format!(
                "unknown operator {s:?} (canonical, integration, scaled-identity)"
            )),
        }
    }
}

/// λ-derivation used on polynomial carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseDiff {
    /// d/dx at weight 0, the difference quotient otherwise.
    #[default]
    Canonical,
    Derivative,
    DifferenceQuotient,
    Zero,
}

impl FromStr for BaseDiff {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "canonical" => Ok(BaseDiff::Canonical),
            "derivative" | "d" => Ok(BaseDiff::Derivative),
            "difference" | "dq" => Ok(BaseDiff::DifferenceQuotient),
            "zero" => Ok(BaseDiff::Zero),
            _ => Err(format!(
                "unknown derivation {s:?} (canonical, derivative, difference, zero)"
            )),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Operators {
    pub rb: BaseRb,
    pub diff: BaseDiff,
}

impl Operators {
    /// `P` under `h`: `P_A` on `sha`, the lift on `hur`, the base choice on
    /// `poly`.
    pub fn rb(&self, h: &AlgebraHandle) -> Result<RbOperator, AlgError> {
        match h.carrier() {
            Carrier::Sha(_) => RbOperator::free(h),
            Carrier::Hurwitz(_, n) => Ok(RbOperator::lift(&self.rb(&h.inner().expect("inner"))?, *n)),
            Carrier::Poly(vars) => match (self.rb, vars.first()) {
                (BaseRb::Canonical, _) => RbOperator::canonical(h),
                (BaseRb::Integration, Some(v)) => RbOperator::integration(h, &v.clone()),
                (BaseRb::Integration, None) => Err(AlgError::Domain("integration needs a variable".into())),
                (BaseRb::ScaledIdentity, _) => Ok(RbOperator::scaled_identity(h)),
            },
        }
    }

    /// `D` under `h`: `d̃` on `sha`, `∂` on `hur`, the base choice on `poly`.
    pub fn diff(&self, h: &AlgebraHandle) -> Result<DiffOperator, AlgError> {
        match h.carrier() {
            Carrier::Sha(_) => Ok(DiffOperator::tilde(&self.diff(&h.inner().expect("inner"))?)),
            Carrier::Hurwitz(..) => DiffOperator::partial(h),
            Carrier::Poly(vars) => match (self.diff, vars.first()) {
                (BaseDiff::Canonical, _) => DiffOperator::canonical(h),
                (BaseDiff::Zero, _) | (_, None) => Ok(DiffOperator::zero(h)),
                (BaseDiff::Derivative, Some(v)) => DiffOperator::derivative(h, &v.clone()),
                (BaseDiff::DifferenceQuotient, Some(v)) => DiffOperator::difference_quotient(h, &v.clone()),
            },
        }
    }
}

pub struct Evaluator<'a> {
    src: &'a str,
    ops: &'a Operators,
    /// Precision of series built for `eps` over a series argument.
    precision: usize,
}

impl<'a> Evaluator<'a> {
    pub fn new(src: &'a str, ops: &'a Operators, precision: usize) -> Self {
        Evaluator { src, ops, precision }
    }

    fn type_error(&self, span: Span, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(self.src, DiagKind::Type, span, msg)
    }

    fn alg(&self, span: Span) -> impl Fn(AlgError) -> Diagnostic + '_ {
        move |e| Diagnostic::new(self.src, DiagKind::Algebra, span, e.to_string())
    }

    pub fn eval(&self, e: &Expr, h: &AlgebraHandle) -> Result<Element, Diagnostic> {
        let span = e.span;
        match &e.kind {
            ExprKind::Num(s) => {
                let c = h.ring().parse_scalar(s).map_err(|err| self.alg(span)(err.into()))?;
                Ok(h.scalar(&c))
            }
            ExprKind::Var(name) => self.var(name, span, h),
            ExprKind::Add(a, b) => {
                let (x, y) = (self.eval(a, h)?, self.eval(b, h)?);
                Ok(h.add(&x, &y))
            }
            ExprKind::Sub(a, b) => {
                let (x, y) = (self.eval(a, h)?, self.eval(b, h)?);
                Ok(h.sub(&x, &y))
            }
            ExprKind::Neg(a) => Ok(h.neg(&self.eval(a, h)?)),
            ExprKind::Mul(a, b) => {
                let (x, y) = (self.eval(a, h)?, self.eval(b, h)?);
                Ok(h.mul(&x, &y))
            }
            ExprKind::Pow(a, n) => Ok(h.pow(&self.eval(a, h)?, *n)),
            ExprKind::Tensor(factors) => {
                let inner = self.need_sha(h, span, "a tensor")?;
                let fs = factors
                    .iter()
                    .map(|f| self.eval(f, &inner))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Element::Sha(free_rb::tensor(h, &fs)))
            }
            ExprKind::Series(values) => {
                if h.is_sha() {
                    let x = self.eval(e, &h.inner().expect("inner"))?;
                    return Ok(Element::Sha(free_rb::eta(h, &x)));
                }
                let Carrier::Hurwitz(_, n) = h.carrier() else {
                    return Err(self.type_error(span, format!("a series literal is not an element of {h}")));
                };
                let inner = h.inner().expect("inner");
                let vs = values
                    .iter()
                    .map(|v| self.eval(v, &inner))
                    .collect::<Result<Vec<_>, _>>()?;
                let f = Element::Hurwitz(HurwitzSeries::from_values(vs));
                let top = Prec::Finite((*n).min(values.len() - 1));
                Ok(h.truncate(&f, top.min(f.prec())))
            }
            ExprKind::Call(func, arg) => self.call(*func, arg, span, h),
        }
    }

    fn var(&self, name: &str, span: Span, h: &AlgebraHandle) -> Result<Element, Diagnostic> {
        match h.carrier() {
            Carrier::Poly(vars) => {
                let i = vars.iter().position(|v| v == name).ok_or_else(|| {
                    Diagnostic::new(
                        self.src,
                        DiagKind::UnknownIdentifier,
                        span,
                        format!("{name:?} is not a variable of {h}"),
                    )
                })?;
                Ok(Element::Poly(Poly::var(vars.len(), i, h.ring())))
            }
            Carrier::Sha(_) => {
                let inner = h.inner().expect("inner");
                let x = self.var(name, span, &inner)?;
                Ok(Element::Sha(free_rb::eta(h, &x)))
            }
            Carrier::Hurwitz(..) => Err(self.type_error(
                span,
                format!("{name:?} is not an element of {h}; write a series literal [..]"),
            )),
        }
    }

    fn need_sha(&self, h: &AlgebraHandle, span: Span, what: &str) -> Result<AlgebraHandle, Diagnostic> {
        if h.is_sha() {
            Ok(h.inner().expect("inner"))
        } else {
            Err(self.type_error(span, format!("{what} is an element of a sha(..) algebra, not of {h}")))
        }
    }

    fn call(&self, func: Func, arg: &Expr, span: Span, h: &AlgebraHandle) -> Result<Element, Diagnostic> {
        let alg = self.alg(span);
        match func {
            Func::P => {
                let p = self.ops.rb(h).map_err(&alg)?;
                p.apply(&self.eval(arg, h)?).map_err(alg)
            }
            Func::D => {
                let d = self.ops.diff(h).map_err(&alg)?;
                d.apply(&self.eval(arg, h)?).map_err(alg)
            }
            Func::Partial => {
                if !h.is_hurwitz() {
                    return Err(self.type_error(span, format!("partial acts on hur(..) algebras, not on {h}")));
                }
                let d = DiffOperator::partial(h).map_err(&alg)?;
                d.apply(&self.eval(arg, h)?).map_err(alg)
            }
            Func::Eta => {
                let inner = self.need_sha(h, span, "eta(..)")?;
                Ok(Element::Sha(free_rb::eta(h, &self.eval(arg, &inner)?)))
            }
            Func::Mu => {
                self.need_sha(h, span, "mu(..)")?;
                let hh = h.sha();
                hh.validate_depth().map_err(&alg)?;
                let x = self.eval(arg, &hh)?;
                Ok(Element::Sha(free_rb::mu(&hh, x.as_sha().expect("sha")).map_err(alg)?))
            }
            Func::Eps => {
                let hs = h.sha();
                if hs.validate_depth().is_ok() {
                    if let Ok(x) = self.eval(arg, &hs) {
                        let p = self.ops.rb(h).map_err(&alg)?;
                        return free_rb::counit_eval(&p, x.as_sha().expect("sha")).map_err(alg);
                    }
                }
                let hn = h.hurwitz(self.precision);
                hn.validate_depth().map_err(&alg)?;
                let f = self.eval(arg, &hn)?;
                Ok(hurwitz::counit(f.as_series().expect("series")))
            }
            Func::Beta => {
                let (Carrier::Hurwitz(inner, n), true) = (h.carrier(), h.inner().is_some_and(|i| i.is_sha())) else {
                    return Err(self.type_error(span, format!("beta lands in hur(sha(..), N), not in {h}")));
                };
                let _ = inner;
                let a = h.inner().and_then(|i| i.inner()).expect("sha inner");
                let src = a.hurwitz(*n).sha();
                let x = self.eval(arg, &src)?;
                let b = distlaw::beta(&src, x.as_sha().expect("sha"), *n).map_err(alg)?;
                Ok(Element::Hurwitz(b))
            }
        }
    }
}

/// Parses and evaluates `src` under `h`.
pub fn eval_str(src: &str, h: &AlgebraHandle, ops: &Operators, precision: usize) -> Result<Element, Diagnostic> {
    let e = parse(src)?;
    Evaluator::new(src, ops, precision).eval(&e, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ctx;
    use crate::text::render;

    fn handle(spec: &str, lambda: &str) -> AlgebraHandle {
        AlgebraHandle::parse(spec, Ctx::rational(lambda)).unwrap()
    }

    fn show(src: &str, h: &AlgebraHandle) -> String {
        render(h, &eval_str(src, h, &Operators::default(), 4).unwrap())
    }

    #[test]
    fn p_prepends_one() {
        let h = handle("sha(poly(x))", "1");
        assert_eq!(show("P(x)", &h), "1 # x");
    }

    #[test]
    fn worked_example_with_ones() {
        let h = handle("sha(poly(x,y))", "1");
        let got = eval_str("(x # 1) * (y # 1 # 1)", &h, &Operators::default(), 4).unwrap();
        // a0 = x, b0 = y, a1 = b1 = b2 = 1: the three interleavings coincide
        let want = eval_str("3*(x*y # 1 # 1 # 1) + 2*(x*y # 1 # 1)", &h, &Operators::default(), 4).unwrap();
        assert!(h.eq(&got, &want));
    }

    #[test]
    fn eps_with_integration_is_identity_in_degree_one() {
        let h = handle("poly(x)", "0");
        let ops = Operators {
            rb: BaseRb::Integration,
            ..Operators::default()
        };
        let got = eval_str("eps(x)", &h, &ops, 4).unwrap();
        assert_eq!(render(&h, &got), "x");
    }

    #[test]
    fn eps_evaluates_nested_integrals() {
        let h = handle("poly(x)", "0");
        let got = eval_str("eps(1 # 1)", &h, &Operators::default(), 4).unwrap();
        assert_eq!(render(&h, &got), "x");
    }

    #[test]
    fn variables_under_hur_are_rejected_with_a_span() {
        let h = handle("hur(poly(x),3)", "0");
        let e = eval_str("1 + x", &h, &Operators::default(), 4).unwrap_err();
        assert_eq!(e.kind, DiagKind::Type);
        assert_eq!(e.col, 5);
    }

    #[test]
    fn beta_needs_a_sha_inner() {
        let h = handle("hur(poly(x),3)", "0");
        let e = eval_str("beta(1)", &h, &Operators::default(), 4).unwrap_err();
        assert_eq!(e.kind, DiagKind::Type);
    }

    #[test]
    fn beta_of_a_constant_series() {
        let h = handle("hur(sha(poly(x)),2)", "1");
        assert_eq!(show("beta([x; 0; 0])", &h), "[x; 0; 0]");
    }

    #[test]
    fn partial_shifts() {
        let h = handle("hur(poly(x),3)", "0");
        assert_eq!(show("partial([1; x; x^2; x^3])", &h), "[x; x^2; x^3]");
        assert_eq!(show("D([1; x; x^2; x^3])", &h), "[x; x^2; x^3]");
    }

    #[test]
    fn unknown_variable() {
        let h = handle("sha(poly(x))", "0");
        let e = eval_str("x # z", &h, &Operators::default(), 4).unwrap_err();
        assert_eq!(e.kind, DiagKind::UnknownIdentifier);
        assert_eq!(e.col, 5);
    }
}
