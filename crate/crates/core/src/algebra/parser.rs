//! Expression front end for curve input.
//!
//! Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
//! factor := base ('^' natural)?; base := literal | variable | '(' expr ')'
//! | '-' base. Whitespace is insignificant. Unary minus binds below '^', so
//! `-t^2` reads as `-(t^2)`.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{Poly, Rat};
use super::ratfunc::RatFunc;
use super::AlgebraError;
use crate::vars::Var;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>, AlgebraError> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while lx.pos < lx.src.len() {
            let c = lx.src[lx.pos];
            let at = lx.pos;
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    lx.pos += 1;
                }
                b'+' => {
                    out.push((Tok::Plus, at));
                    lx.pos += 1;
                }
                b'-' => {
                    out.push((Tok::Minus, at));
                    lx.pos += 1;
                }
                b'*' => {
                    out.push((Tok::Star, at));
                    lx.pos += 1;
                }
                b'/' => {
                    out.push((Tok::Slash, at));
                    lx.pos += 1;
                }
                b'^' => {
                    out.push((Tok::Caret, at));
                    lx.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, at));
                    lx.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, at));
                    lx.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = lx.pos;
                    while lx.pos < lx.src.len() && lx.src[lx.pos].is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Int(text.parse().unwrap()), start));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = lx.pos;
                    while lx.pos < lx.src.len()
                        && (lx.src[lx.pos].is_ascii_alphanumeric() || lx.src[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[start..lx.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), start));
                }
                other => {
                    return Err(AlgebraError::Syntax {
                        pos: at,
                        msg: format!("unexpected character '{}'", other as char),
                    })
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a [Var],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.at)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<RatFunc, AlgebraError> {
        let mut acc = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, AlgebraError> {
        let mut acc = self.factor()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Star => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.next();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc, AlgebraError> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if let Some((Tok::Caret, _)) = self.peek() {
            self.next();
            let pos = self.here();
            match self.next() {
                Some((Tok::Int(n), _)) => {
                    let e: u32 = n.try_into().map_err(|_| AlgebraError::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    return base.pow(e as i32);
                }
                _ => {
                    return Err(AlgebraError::Syntax {
                        pos,
                        msg: "expected a natural number after '^'".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RatFunc, AlgebraError> {
        let pos = self.here();
        match self.next() {
            Some((Tok::Int(n), _)) => Ok(RatFunc::from_rat(Rat::new(n, BigInt::one()))),
            Some((Tok::Ident(name), p)) => {
                let v = self
                    .vars
                    .iter()
                    .find(|w| w.name() == name)
                    .ok_or(AlgebraError::UnknownSymbol { name: name.clone(), pos: p })?;
                Ok(RatFunc::from_poly(Poly::var(v)))
            }
            Some((Tok::LParen, _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Tok::RParen, _)) => Ok(inner),
                    other => Err(AlgebraError::Syntax {
                        pos: other.map(|(_, p)| p).unwrap_or(self.end),
                        msg: "expected ')'".into(),
                    }),
                }
            }
            _ => Err(AlgebraError::Syntax {
                pos,
                msg: "expected a literal, variable or '('".into(),
            }),
        }
    }
}

/// Parse an expression over the given variables into a reduced RatFunc.
pub fn parse_expression(text: &str, variables: &[Var]) -> Result<RatFunc, AlgebraError> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        vars: variables,
        end: text.len(),
    };
    let f = p.expr()?;
    if let Some((_, pos)) = p.peek() {
        return Err(AlgebraError::Syntax {
            pos: *pos,
            msg: "unexpected trailing input".into(),
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_i;

    fn t() -> Var {
        Var::new("t")
    }

    #[test]
    fn parses_x1_component() {
        let f = parse_expression("10*t/(t^3+1)", &[t()]).unwrap();
        let expect = RatFunc::new(
            Poly::var(&t()).scale(&rat_i(10)),
            Poly::var(&t()).pow(3).add(&Poly::one()),
        )
        .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn parses_zero() {
        let f = parse_expression("0", &[t()]).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn reduces_on_parse() {
        let f = parse_expression("(t^2-1)/(t-1)", &[t()]).unwrap();
        let expect = RatFunc::new(Poly::var(&t()).add(&Poly::one()), Poly::one()).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn reports_positions() {
        match parse_expression("t + %", &[t()]) {
            Err(AlgebraError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
        match parse_expression("t + u", &[t()]) {
            Err(AlgebraError::UnknownSymbol { name, pos }) => {
                assert_eq!(name, "u");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown symbol, got {:?}", other),
        }
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert!(matches!(
            parse_expression("1/(t-t)", &[t()]),
            Err(AlgebraError::DivisionByZero)
        ));
    }

    #[test]
    fn print_then_parse_roundtrip() {
        let f = parse_expression("(3*t^2 - 1/2)/(t^3 + 7*t)", &[t()]).unwrap();
        let g = parse_expression(&f.to_string(), &[t()]).unwrap();
        assert_eq!(f, g);
    }
}
