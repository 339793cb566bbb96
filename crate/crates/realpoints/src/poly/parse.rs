//! Parser for the textual polynomial grammar.
//!
//! ```text
//! poly   := sign? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' nat)?
//! coeff  := int ('/' int)?
//! ```
//!
//! Whitespace is insignificant.

use super::{Polynomial, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Ident(String),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok((start, Tok::Plus))
            }
            b'-' => {
                self.pos += 1;
                Ok((start, Tok::Minus))
            }
            b'*' => {
                self.pos += 1;
                Ok((start, Tok::Star))
            }
            b'^' => {
                self.pos += 1;
                Ok((start, Tok::Caret))
            }
            b'/' => {
                self.pos += 1;
                Ok((start, Tok::Slash))
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Ok((start, Tok::Int(text.parse().unwrap())))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                Ok((start, Tok::Ident(text)))
            }
            other => Err(ParseError::Syntax {
                pos: start,
                msg: format!("unexpected character `{}`", other as char),
            }),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    ring: &'a Ring,
    lookahead: Option<(usize, Tok)>,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Result<&(usize, Tok), ParseError> {
        if self.lookahead.is_none() {
            self.lookahead = Some(self.lexer.next()?);
        }
        Ok(self.lookahead.as_ref().unwrap())
    }

    fn bump(&mut self) -> Result<(usize, Tok), ParseError> {
        match self.lookahead.take() {
            Some(t) => Ok(t),
            None => self.lexer.next(),
        }
    }

    fn parse_nat(&mut self) -> Result<BigInt, ParseError> {
        match self.bump()? {
            (_, Tok::Int(n)) => Ok(n),
            (pos, _) => Err(ParseError::Syntax { pos, msg: "expected integer".into() }),
        }
    }

    /// factor := int ('/' int)? | ident ('^' nat)?
    fn parse_factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.bump()? {
            (pos, Tok::Int(n)) => {
                if matches!(self.peek()?.1, Tok::Slash) {
                    self.bump()?;
                    let d_pos = self.lexer.peek_pos();
                    let d = self.parse_nat()?;
                    if d.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos: d_pos });
                    }
                    let _ = pos;
                    Ok(Polynomial::constant(self.ring, BigRational::new(n, d)))
                } else {
                    Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
                }
            }
            (pos, Tok::Ident(name)) => {
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or(ParseError::UnknownVariable { pos, name: name.clone() })?;
                let mut exp = BigInt::one();
                if matches!(self.peek()?.1, Tok::Caret) {
                    self.bump()?;
                    exp = self.parse_nat()?;
                }
                let e: u32 = exp.try_into().map_err(|_| ParseError::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?;
                Ok(Polynomial::var(self.ring, idx).pow(e))
            }
            (pos, t) => Err(ParseError::Syntax { pos, msg: format!("expected factor, found {:?}", t) }),
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut p = self.parse_factor()?;
        while matches!(self.peek()?.1, Tok::Star) {
            self.bump()?;
            p = p.mul(&self.parse_factor()?);
        }
        Ok(p)
    }

    fn parse_poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        match self.peek()?.1 {
            Tok::Minus => {
                self.bump()?;
                negate = true;
            }
            Tok::Plus => {
                self.bump()?;
            }
            _ => {}
        }
        let first = self.parse_term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek()?.1 {
                Tok::Plus => {
                    self.bump()?;
                    let t = self.parse_term()?;
                    acc = acc.add(&t);
                }
                Tok::Minus => {
                    self.bump()?;
                    let t = self.parse_term()?;
                    acc = acc.sub(&t);
                }
                Tok::End => break,
                _ => {
                    let (pos, t) = self.bump()?;
                    return Err(ParseError::Syntax {
                        pos,
                        msg: format!("expected `+`, `-` or end of input, found {:?}", t),
                    });
                }
            }
        }
        Ok(acc)
    }
}

/// Parses `text` as a polynomial over the given ring.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut p = Parser { lexer: Lexer::new(text), ring, lookahead: None };
    p.parse_poly()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_terms() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("x^2 + y^2 - 1", &r).unwrap();
        assert_eq!(f.num_terms(), 3);
    }

    #[test]
    fn zero_literal() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("0", &r).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn coefficient_cancellation() {
        let r = Ring::new(vec!["x", "y"]);
        let f = parse_polynomial("2/3*x*y - x*y", &r).unwrap();
        assert_eq!(f.num_terms(), 1);
        let g = parse_polynomial("-1/3*x*y", &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn unknown_variable_reports_name() {
        let r = Ring::new(vec!["x"]);
        match parse_polynomial("x + z", &r) {
            Err(ParseError::UnknownVariable { name, pos }) => {
                assert_eq!(name, "z");
                assert_eq!(pos, 4);
            }
            other => panic!("expected unknown-variable error, got {:?}", other),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        let r = Ring::new(vec!["x"]);
        match parse_polynomial("x + + ^", &r) {
            Err(ParseError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {:?}", other),
        }
    }

    #[test]
    fn fraction_with_zero_denominator() {
        let r = Ring::new(vec!["x"]);
        assert!(matches!(
            parse_polynomial("1/0*x", &r),
            Err(ParseError::ZeroDenominator { .. })
        ));
    }
}
