//! Recursive-descent parser for the pi grammar.
//!
//! ```text
//! proc  := "0" | "stop" | "!" proc | "new" names "." proc
//!        | name "(" name ")" ["." proc] | name "<" name ">" ["." proc]
//!        | "(" proc ("|" proc)+ ")"
//! names := name ("," name)*
//! name  := [a-zA-Z][a-zA-Z0-9_']*
//! ```
//!
//! An omitted continuation means `.0`. Parsed terms are freshened so the
//! distinct-variable convention holds.

use super::syntax::{Name, Process};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            _ => return self.err("expected a name"),
        }
        while let Some(c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == b'_' || *c == b'\'' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn name(&mut self) -> Result<Name, ParseError> {
        let id = self.ident()?;
        if id == "new" || id == "stop" {
            return self.err(format!("'{}' is a keyword, not a name", id));
        }
        Ok(Name::new(id))
    }

    /// Optional `.P` continuation; defaults to `0`.
    fn continuation(&mut self) -> Result<Process, ParseError> {
        if self.peek() == Some(b'.') {
            self.pos += 1;
            self.proc()
        } else {
            Ok(Process::Nil)
        }
    }

    fn proc(&mut self) -> Result<Process, ParseError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Process::Nil)
            }
            Some(b'!') => {
                self.pos += 1;
                Ok(Process::repl(self.proc()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let mut parts = vec![self.proc()?];
                while self.peek() == Some(b'|') {
                    self.pos += 1;
                    parts.push(self.proc()?);
                }
                self.eat(b')')?;
                let mut p = parts.pop().unwrap();
                while let Some(q) = parts.pop() {
                    p = Process::par(q, p);
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let save = self.pos;
                let id = self.ident()?;
                match id.as_str() {
                    "stop" => Ok(Process::Stop),
                    "new" => {
                        let mut names = vec![self.name()?];
                        while self.peek() == Some(b',') {
                            self.pos += 1;
                            names.push(self.name()?);
                        }
                        self.eat(b'.')?;
                        let mut p = self.proc()?;
                        for n in names.into_iter().rev() {
                            p = Process::Nu(n, Box::new(p));
                        }
                        Ok(p)
                    }
                    _ => {
                        let chan = Name::new(id);
                        match self.peek() {
                            Some(b'(') => {
                                self.pos += 1;
                                let binder = self.name()?;
                                self.eat(b')')?;
                                Ok(Process::In {
                                    chan,
                                    binder,
                                    cont: Box::new(self.continuation()?),
                                })
                            }
                            Some(b'<') => {
                                self.pos += 1;
                                let msg = self.name()?;
                                self.eat(b'>')?;
                                Ok(Process::Out {
                                    chan,
                                    msg,
                                    cont: Box::new(self.continuation()?),
                                })
                            }
                            _ => {
                                self.pos = save;
                                self.err("expected '(' or '<' after a channel name")
                            }
                        }
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the grammar above and freshens binders.
pub fn parse_pi(text: &str) -> Result<Process, ParseError> {
    let mut p = Parser::new(text);
    let proc = p.proc()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(proc.freshen())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi::syntax::print_pi;

    #[test]
    fn parses_stop() {
        assert_eq!(parse_pi("stop").unwrap(), Process::Stop);
    }

    #[test]
    fn parses_example_shape() {
        // new x,y.(x(z).0 | x<y>.stop)
        let p = parse_pi("new x,y.(x(z).0 | x<y>.stop)").unwrap();
        let expected = Process::nu(
            "x",
            Process::nu(
                "y",
                Process::par(
                    Process::input("x", "z", Process::Nil),
                    Process::out("x", "y", Process::Stop),
                ),
            ),
        );
        assert!(p.alpha_eq(&expected));
    }

    #[test]
    fn parses_replication() {
        let p = parse_pi("!x(y).0").unwrap();
        let expected = Process::repl(Process::input("x", "y", Process::Nil));
        assert!(p.alpha_eq(&expected));
    }

    #[test]
    fn omitted_continuation_is_nil() {
        let p = parse_pi("x<y>").unwrap();
        assert!(p.alpha_eq(&Process::out("x", "y", Process::Nil)));
    }

    #[test]
    fn reports_position() {
        let e = parse_pi("new x.(x(y).0 | ?)").unwrap_err();
        assert_eq!(e.pos, 16);
    }

    #[test]
    fn keyword_is_not_a_name() {
        assert!(parse_pi("new stop.0").is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        for src in [
            "stop",
            "new x,y.(x(z).0 | x<y>.stop)",
            "!x(y).0",
            "(x<y>.0 | (0 | stop) | x(u).x(v).0)",
            "new a.(a<a>.stop | a(b).b<a>.0)",
        ] {
            let p = parse_pi(src).unwrap();
            let q = parse_pi(&print_pi(&p)).unwrap();
            assert!(p.alpha_eq(&q), "roundtrip failed for {src}");
        }
    }
}
