//! Line-oriented session: each line is an expression, or a command
//! starting with `:`.

use std::io::{BufRead, Write};

use crate::algebra::{AlgebraHandle, Ctx};
use crate::text::{render, to_json};

use super::eval::{eval_str, Operators};

const HELP: &str = "\
:handle SPEC    switch algebra, e.g. :handle hur(poly(x),4)
:lambda VALUE   change the weight
:json           toggle JSON output
:quit           leave
anything else is evaluated, e.g. P(x # y) * (1 # x)";

pub struct Repl {
    pub handle: AlgebraHandle,
    pub ops: Operators,
    pub precision: usize,
    pub json: bool,
}

impl Repl {
    /// Handles one line; `None` ends the session.
    pub fn line(&mut self, line: &str) -> Option<String> {
        let line = line.trim();
        if line.is_empty() {
            return Some(String::new());
        }
        let Some(cmd) = line.strip_prefix(':') else {
            return Some(match eval_str(line, &self.handle, &self.ops, self.precision) {
                Ok(x) if self.json => to_json(&self.handle, &x).to_string(),
                Ok(x) => render(&self.handle, &x),
                Err(e) => format!("error: {e}"),
            });
        };
        let (word, rest) = cmd.split_once(' ').unwrap_or((cmd, ""));
        Some(match word {
            "q" | "quit" => return None,
            "help" => HELP.to_string(),
            "json" => {
                self.json = !self.json;
                format!("json {}", if self.json { "on" } else { "off" })
            }
            "handle" => match AlgebraHandle::parse(rest, (**self.handle.ctx()).clone()) {
                Ok(h) => {
                    self.handle = h;
                    format!("handle {}", self.handle)
                }
                Err(e) => format!("error: {e}"),
            },
            "lambda" => {
                let ring = self.handle.ring();
                match ring
                    .parse_scalar(rest.trim())
                    .map_err(Into::into)
                    .and_then(|l| Ctx::new(ring, l))
                {
                    Ok(ctx) => {
                        self.handle = self.handle.with_ctx(ctx.into());
                        format!("λ = {}", self.handle.lambda())
                    }
                    Err(e) => format!("error: {e}"),
                }
            }
            other => format!("error: unknown command :{other} (try :help)"),
        })
    }

    pub fn run(&mut self, input: impl BufRead, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "{} (:help for commands)", self.handle)?;
        for line in input.lines() {
            match self.line(&line?) {
                None => break,
                Some(s) if s.is_empty() => {}
                Some(s) => writeln!(out, "{s}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn session() {
        let h = AlgebraHandle::parse("sha(poly(x))", Ctx::rational("0")).unwrap();
        let mut r = Repl {
            handle: h,
            ops: Operators::default(),
            precision: 4,
            json: false,
        };
        assert_eq!(r.line("P(x)").unwrap(), "1 # x");
        assert_eq!(r.line(":handle poly(x)").unwrap(), "handle poly(x)");
        assert_eq!(r.line("D(x^2)").unwrap(), "2*x");
        assert!(r.line("x +").unwrap().starts_with("error: 1:4"));
        assert!(r.line(":quit").is_none());
    }
}
