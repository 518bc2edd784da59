//! Recursive-descent parser for rational expressions in `s`.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (('*'|'·'|'/') power | implicit power)*
//! power   := atom ['^' int | '^' '(' int ')']
//! atom    := integer | 's' | '(' expr ')' | '-' power
//! ```
//!
//! `2s`, `3(s+1)` and `(s+1)(s+2)` multiply implicitly. U+2212 is read as
//! a minus sign and `×` as multiplication. Offsets in errors count characters.

use num_bigint::BigInt;

use super::RationalFunction;
use crate::error::{Error, Result};
use crate::linalg::Q;

const MAX_EXPONENT: i64 = 1000;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    S,
    Plus,
    Minus,
    Times,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            's' => Tok::S,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '·' | '×' => Tok::Times,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = if self.eat(&Tok::Minus) {
            -&self.term()?
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.power()?;
        loop {
            if self.eat(&Tok::Times) {
                acc = &acc * &self.power()?;
            } else if self.peek() == Some(&Tok::Slash) {
                let at = self.offset();
                self.pos += 1;
                let rhs = self.power()?;
                acc = acc.checked_div(&rhs).map_err(|e| match e {
                    Error::DivisionByZero => Error::Parse {
                        offset: at,
                        message: "division by zero".into(),
                    },
                    other => other,
                })?;
            } else if matches!(self.peek(), Some(Tok::S) | Some(Tok::LParen)) {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let paren = self.eat(&Tok::LParen);
        let negative = self.eat(&Tok::Minus);
        let k = match self.peek() {
            Some(Tok::Int(n)) => {
                let n = i64::try_from(n.clone()).ok().filter(|n| *n <= MAX_EXPONENT);
                match n {
                    Some(n) => n,
                    None => return self.err(format!("exponent larger than {MAX_EXPONENT}")),
                }
            }
            _ => return self.err("expected an integer exponent"),
        };
        self.pos += 1;
        if paren && !self.eat(&Tok::RParen) {
            return self.err("expected ')'");
        }
        let k = if negative { -k } else { k };
        base.pow(k as i32).map_err(|e| match e {
            Error::DivisionByZero => Error::Parse {
                offset: self.offset(),
                message: "negative power of zero".into(),
            },
            other => other,
        })
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(Q::from_integer(n)))
            }
            Some(Tok::S) => {
                self.pos += 1;
                Ok(RationalFunction::s())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(_) => self.err("expected a number, 's' or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<RationalFunction> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let r = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, q_frac};

    #[test]
    fn basics() {
        let r = parse_expression("1/(s+1) + 1/(2s+1)").unwrap();
        assert_eq!(r.to_string(), "(3s + 2)/((s + 1)·(2s + 1))");
        assert_eq!(parse_expression("2s^2 - s").unwrap().to_string(), "2s^2 - s");
        assert_eq!(parse_expression("(s+1)^-2").unwrap().to_string(), "1/(s + 1)^2");
        assert_eq!(parse_expression("(s+1)^(-1)·(s+1)").unwrap().to_string(), "1");
        assert_eq!(parse_expression("\u{2212}3/6").unwrap().eval(&q(0)).unwrap(), q_frac(-1, 2));
        assert_eq!(parse_expression("2*-s").unwrap().to_string(), "-2s");
    }

    #[test]
    fn literal_content() {
        let r = parse_expression("1/(9s+3)").unwrap();
        assert_eq!(r.factor_triples(), vec![("3".into(), "1".into(), 1)]);
        assert_eq!(r.numerator().coeffs(), &[q_frac(1, 3)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_expression("1/(s-s)"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_expression("(s+1"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_expression("s $"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_expression(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("s^x"), Err(Error::Parse { .. })));
        assert_eq!(parse_expression("1/(s^2+1)").unwrap_err(), Error::NonLinearDenominator);
    }

    #[test]
    fn display_reparses() {
        for t in ["(2-s)/((s+1)(3s+2))", "3/2 s^2/(s+1)^3 - 1/(9s+3)", "s^3 + 1/2", "0", "-7/(5s+2)"] {
            let r = parse_expression(t).unwrap();
            assert_eq!(parse_expression(&r.to_string()).unwrap(), r, "{t}");
        }
    }
}
