//! Expression language: tokens, AST and a recursive-descent parser.
//!
//! ```text
//! sum     := tensor (('+' | '-') tensor)*
//! tensor  := product ('#' product)*
//! product := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := NUM | IDENT | IDENT '(' sum ')' | '(' sum ')' | '[' sum (';' sum)* ']'
//! ```
//!
//! `NUM` is an integer or a fraction `p/q`, read as one token.

use std::fmt;

use thiserror::Error;

/// Byte range in the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagKind {
    Syntax,
    UnknownIdentifier,
    Arity,
    Type,
    Algebra,
}

impl fmt::Display for DiagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagKind::Syntax => "syntax error",
            DiagKind::UnknownIdentifier => "unknown identifier",
            DiagKind::Arity => "arity error",
            DiagKind::Type => "type error",
            DiagKind::Algebra => "error",
        })
    }
}

/// An error located in the source text; line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}: {message}")]
pub struct Diagnostic {
    pub kind: DiagKind,
    pub line: usize,
    pub col: usize,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn new(src: &str, kind: DiagKind, span: Span, message: impl Into<String>) -> Self {
        let (line, col) = line_col(src, span.start);
        Diagnostic {
            kind,
            line,
            col,
            span,
            message: message.into(),
        }
    }
}

pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

/// Operator applications known to the grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    P,
    D,
    Eta,
    Eps,
    Mu,
    Beta,
    Partial,
}

impl Func {
    pub const ALL: [(&'static str, Func); 7] = [
        ("P", Func::P),
        ("D", Func::D),
        ("eta", Func::Eta),
        ("eps", Func::Eps),
        ("mu", Func::Mu),
        ("beta", Func::Beta),
        ("partial", Func::Partial),
    ];

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
    }

    pub fn name(self) -> &'static str {
        Func::ALL
            .iter()
            .find(|(_, f)| *f == self)
            .map(|(n, _)| *n)
            .expect("listed")
    }
}

/// Names that cannot be used as polynomial variables.
pub fn is_reserved(name: &str) -> bool {
    Func::from_name(name).is_some() || matches!(name, "poly" | "sha" | "hur")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    /// An integer or `p/q`, as written.
    Num(String),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Tensor(Vec<Expr>),
    Call(Func, Box<Expr>),
    Series(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) => write!(f, "number {s}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Sym(c) => write!(f, "{c:?}"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((Tok::Num(src[start..i].to_string()), Span { start, end: i }));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), Span { start, end: i }));
        } else if "+-*^#()[];,".contains(c) {
            i += 1;
            out.push((Tok::Sym(c), Span { start, end: i }));
        } else {
            let ch = src[i..].chars().next().expect("in bounds");
            let span = Span {
                start,
                end: start + ch.len_utf8(),
            };
            return Err(Diagnostic::new(
                src,
                DiagKind::Syntax,
                span,
                format!("unexpected character {ch:?}"),
            ));
        }
    }
    out.push((
        Tok::Eof,
        Span {
            start: src.len(),
            end: src.len(),
        },
    ));
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, message: String) -> Diagnostic {
        Diagnostic::new(self.src, DiagKind::Syntax, self.span(), message)
    }

    fn expect(&mut self, c: char) -> Result<Span, Diagnostic> {
        if *self.peek() == Tok::Sym(c) {
            Ok(self.bump().1)
        } else {
            Err(self.error(format!("expected {c:?}, found {}", self.peek())))
        }
    }

    fn sum(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.tensor()?;
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = if self.eat('+') {
                ExprKind::Add
            } else if self.eat('-') {
                ExprKind::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.tensor()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr {
                kind: kind(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
    }

    fn tensor(&mut self) -> Result<Expr, Diagnostic> {
        let first = self.product()?;
        if *self.peek() != Tok::Sym('#') {
            return Ok(first);
        }
        let mut factors = vec![first];
        while self.eat('#') {
            factors.push(self.product()?);
        }
        let span = factors[0].span.join(factors[factors.len() - 1].span);
        Ok(Expr {
            kind: ExprKind::Tensor(factors),
            span,
        })
    }

    fn product(&mut self) -> Result<Expr, Diagnostic> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr {
                kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, Diagnostic> {
        if *self.peek() == Tok::Sym('-') {
            let start = self.bump().1;
            let inner = self.unary()?;
            let span = start.join(inner.span);
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                span,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, Diagnostic> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.bump() {
            (Tok::Num(s), span) if !s.contains('/') => {
                let n: u32 = s
                    .parse()
                    .map_err(|_| Diagnostic::new(self.src, DiagKind::Syntax, span, "exponent too large"))?;
                let span = base.span.join(span);
                Ok(Expr {
                    kind: ExprKind::Pow(Box::new(base), n),
                    span,
                })
            }
            (t, span) => Err(Diagnostic::new(
                self.src,
                DiagKind::Syntax,
                span,
                format!("expected a nonnegative integer exponent, found {t}"),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, Diagnostic> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Num(s) => Ok(Expr {
                kind: ExprKind::Num(s),
                span,
            }),
            Tok::Ident(name) => {
                if *self.peek() == Tok::Sym('(') {
                    let func = Func::from_name(&name).ok_or_else(|| {
                        Diagnostic::new(
                            self.src,
                            DiagKind::UnknownIdentifier,
                            span,
                            format!("no operator named {name:?}"),
                        )
                    })?;
                    self.bump();
                    let arg = self.sum()?;
                    if *self.peek() == Tok::Sym(',') || *self.peek() == Tok::Sym(';') {
                        return Err(Diagnostic::new(
                            self.src,
                            DiagKind::Arity,
                            self.span(),
                            format!("{name} takes one argument"),
                        ));
                    }
                    let end = self.expect(')')?;
                    return Ok(Expr {
                        kind: ExprKind::Call(func, Box::new(arg)),
                        span: span.join(end),
                    });
                }
                if Func::from_name(&name).is_some() {
                    return Err(Diagnostic::new(
                        self.src,
                        DiagKind::Arity,
                        span,
                        format!("{name} takes one argument"),
                    ));
                }
                Ok(Expr {
                    kind: ExprKind::Var(name),
                    span,
                })
            }
            Tok::Sym('(') => {
                let inner = self.sum()?;
                let end = self.expect(')')?;
                Ok(Expr {
                    kind: inner.kind,
                    span: span.join(end),
                })
            }
            Tok::Sym('[') => {
                let mut values = vec![self.sum()?];
                while self.eat(';') {
                    values.push(self.sum()?);
                }
                let end = self.expect(']')?;
                Ok(Expr {
                    kind: ExprKind::Series(values),
                    span: span.join(end),
                })
            }
            t => Err(Diagnostic::new(
                self.src,
                DiagKind::Syntax,
                span,
                format!("unexpected {t}"),
            )),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse(src: &str) -> Result<Expr, Diagnostic> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(format!("unexpected {}", p.peek())));
    }
    Ok(e)
}
