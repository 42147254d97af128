//! Text and JSON forms of elements. The text form is accepted back by the
//! expression parser.

use serde_json::{json, Value};

use crate::algebra::{AlgebraHandle, Basis, Carrier, Element, Prec};

/// Binding strength of a rendered fragment, loosest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Tensor,
    Product,
}

fn wrap(s: String, level: Level, need: Level) -> String {
    if level < need {
        format!("({s})")
    } else {
        s
    }
}

pub fn render(h: &AlgebraHandle, x: &Element) -> String {
    render_level(h, x).0
}

fn render_level(h: &AlgebraHandle, x: &Element) -> (String, Level) {
    match (h.carrier(), x) {
        (Carrier::Poly(vars), Element::Poly(p)) => {
            let level = if p.terms().len() > 1 || p.terms().values().any(|c| c.is_negative()) {
                Level::Sum
            } else {
                Level::Product
            };
            (p.render(vars), level)
        }
        (Carrier::Sha(_), Element::Sha(s)) => {
            if s.is_zero() {
                return ("0".into(), Level::Product);
            }
            let inner = h.inner().expect("inner");
            let mut out = String::new();
            let n = s.terms().len();
            for (i, (t, c)) in s.terms().iter().rev().enumerate() {
                let (body, level) = render_tensor(&inner, &t.0);
                let (neg, mag) = if c.is_negative() {
                    (true, c.neg_ref())
                } else {
                    (false, c.clone())
                };
                if i == 0 {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if mag.is_one() {
                    let need = if neg || n > 1 { Level::Tensor } else { Level::Sum };
                    out.push_str(&wrap(body, level, if neg { Level::Product } else { need }));
                } else {
                    out.push_str(&format!(
                        "{}*{}",
                        mag.to_bare_string(),
                        wrap(body, level, Level::Product)
                    ));
                }
            }
            let level = if n > 1 || s.terms().values().any(|c| c.is_negative()) {
                Level::Sum
            } else {
                let (t, c) = s.terms().iter().next().expect("nonempty");
                if c.is_one() {
                    render_tensor(&inner, &t.0).1
                } else {
                    Level::Product
                }
            };
            (out, level)
        }
        (Carrier::Hurwitz(..), Element::Hurwitz(f)) => {
            let inner = h.inner().expect("inner");
            let parts: Vec<String> = f.values().iter().map(|v| render(&inner, v)).collect();
            (format!("[{}]", parts.join("; ")), Level::Product)
        }
        (_, other) => (format!("<{} under {h}>", other.kind_name()), Level::Product),
    }
}

fn render_tensor(inner: &AlgebraHandle, factors: &[Basis]) -> (String, Level) {
    let prec = inner.default_prec();
    if factors.len() == 1 {
        let (s, level) = render_level(inner, &inner.materialize(&factors[0], prec));
        // A lone factor that is itself a tensor would be read back as a
        // longer tensor.
        if level <= Level::Tensor && inner.is_sha() {
            return (format!("eta({s})"), Level::Product);
        }
        return (s, level);
    }
    let parts: Vec<String> = factors
        .iter()
        .map(|b| {
            let (s, level) = render_level(inner, &inner.materialize(b, prec));
            wrap(s, level, Level::Product)
        })
        .collect();
    (parts.join(" # "), Level::Tensor)
}

pub fn to_json(h: &AlgebraHandle, x: &Element) -> Value {
    match (h.carrier(), x) {
        (Carrier::Poly(_), Element::Poly(p)) => Value::Array(
            p.terms()
                .iter()
                .rev()
                .map(|(m, c)| json!({"exponents": m.exponents(), "coeff": c.to_string()}))
                .collect(),
        ),
        (Carrier::Sha(_), Element::Sha(s)) => {
            let inner = h.inner().expect("inner");
            let prec = inner.default_prec();
            Value::Array(
                s.terms()
                    .iter()
                    .rev()
                    .map(|(t, c)| {
                        let factors: Vec<Value> =
                            t.0.iter()
                                .map(|b| to_json(&inner, &inner.materialize(b, prec)))
                                .collect();
                        json!({"factors": factors, "coeff": c.to_string()})
                    })
                    .collect(),
            )
        }
        (Carrier::Hurwitz(..), Element::Hurwitz(f)) => {
            let inner = h.inner().expect("inner");
            let values: Vec<Value> = f.values().iter().map(|v| to_json(&inner, v)).collect();
            json!({"precision": f.precision(), "values": values})
        }
        _ => Value::Null,
    }
}

/// Precision as printed in reports.
pub fn prec_string(p: Prec) -> String {
    p.to_string()
}
