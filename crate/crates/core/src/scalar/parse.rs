//! Recursive-descent parser for the scalar grammar.
//!
//! ```text
//! expr     := "-"? term (("+"|"-") term)*
//! term     := factor (("*"|"/")? factor)*
//! factor   := integer | variable power? | "(" expr ")"
//! variable := "q" | "s"
//! power    := "^" (integer | "(" integer "/" integer ")" | "{" integer "/" integer "}")
//! integer  := "-"? digits
//! ```
//!
//! "/" is an ordinary left-associative operator with the same precedence as
//! "*"; a plain integer quotient like 3/2 therefore denotes the rational 3/2,
//! and the canonical fraction form "(num)/(den)" parses back to the value it
//! was printed from.  Whitespace is insignificant.  "q^-2", "q^(1/2)" and
//! "q^{1/2}" are all accepted.

use super::{LaurentPoly, Rational, Scalar};
use crate::error::{Error, Result};
use num::{BigInt, One};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Digits(String),
    Q,
    S,
    Caret,
    Star,
    Slash,
    Plus,
    Minus,
    LParen,
    RParen,
    LBrace,
    RBrace,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Digits(text[start..i].to_string())));
            }
            'q' => {
                toks.push((i, Tok::Q));
                i += 1;
            }
            's' => {
                toks.push((i, Tok::S));
                i += 1;
            }
            '^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            '{' => {
                toks.push((i, Tok::LBrace));
                i += 1;
            }
            '}' => {
                toks.push((i, Tok::RBrace));
                i += 1;
            }
            _ => {
                return Err(Error::Parse {
                    offset: i,
                    expected: "digit, 'q', 's', '^', '*', '/', '+', '-', '(', ')', '{' or '}'"
                        .into(),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    root_order: u32,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse { offset: self.offset(), expected: expected.to_string() }
    }

    /// integer := "-"? digits, returned as BigInt.
    fn parse_integer(&mut self) -> Result<BigInt> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Digits(d)) => {
                let v: BigInt = d.parse().expect("digits");
                Ok(if neg { -v } else { v })
            }
            _ => {
                self.pos -= 1;
                Err(self.err("integer"))
            }
        }
    }

    /// power := "^" (integer | "(" integer "/" integer ")" | "{" integer "/" integer "}")
    /// Returns the exponent as (numerator, denominator), denominator > 0.
    fn parse_power(&mut self) -> Result<(i64, i64)> {
        self.expect(Tok::Caret, "'^'")?;
        let (open, close) = match self.peek() {
            Some(Tok::LParen) => (Some(Tok::LParen), Tok::RParen),
            Some(Tok::LBrace) => (Some(Tok::LBrace), Tok::RBrace),
            _ => (None, Tok::RParen),
        };
        if let Some(open) = open {
            self.expect(open, "'(' or '{'")?;
            let at = self.offset();
            let a = self.parse_integer()?;
            self.expect(Tok::Slash, "'/'")?;
            let b = self.parse_integer()?;
            self.expect(close.clone(), if close == Tok::RParen { "')'" } else { "'}'" })?;
            let (a, b) = (to_i64(&a, at)?, to_i64(&b, at)?);
            if b <= 0 {
                return Err(Error::Parse { offset: at, expected: "positive exponent denominator".into() });
            }
            Ok((a, b))
        } else {
            let at = self.offset();
            let a = self.parse_integer()?;
            Ok((to_i64(&a, at)?, 1))
        }
    }

    fn q_exponent(&self, num: i64, den: i64, at: usize) -> Result<i64> {
        let n = self.root_order as i64;
        if (num * n) % den != 0 {
            return Err(Error::Parse {
                offset: at,
                expected: format!("q-exponent with denominator dividing root order {}", self.root_order),
            });
        }
        Ok(num * n / den)
    }

    /// factor := integer | "q" power? | "s" power? | "(" expr ")"
    /// `allow_sign` permits a leading minus (used after '*', '/' only).
    fn parse_factor(&mut self, allow_sign: bool) -> Result<Scalar> {
        match self.peek() {
            Some(Tok::Digits(_)) => {
                let v = self.parse_integer()?;
                Ok(Scalar::from_rational(Rational::from_integer(v)))
            }
            Some(Tok::Minus) if allow_sign => {
                let v = self.parse_integer()?;
                Ok(Scalar::from_rational(Rational::from_integer(v)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    let at = self.offset();
                    let (a, b) = self.parse_power()?;
                    let eq = self.q_exponent(a, b, at)?;
                    Ok(Scalar::from_poly(LaurentPoly::q_power(eq, self.root_order)))
                } else {
                    Ok(Scalar::from_poly(LaurentPoly::q_power(self.root_order as i64, self.root_order)))
                }
            }
            Some(Tok::S) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Caret) {
                    let at = self.offset();
                    let (a, b) = self.parse_power()?;
                    if b != 1 || a < 0 {
                        return Err(Error::Parse {
                            offset: at,
                            expected: "non-negative integer exponent for s".into(),
                        });
                    }
                    Ok(Scalar::from_poly(LaurentPoly::monomial(
                        Rational::one(),
                        0,
                        a as u32,
                        self.root_order,
                    )))
                } else {
                    Ok(Scalar::from_poly(LaurentPoly::s_var(self.root_order)))
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.err("integer, 'q', 's' or '('")),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Digits(_)) | Some(Tok::Q) | Some(Tok::S) | Some(Tok::LParen))
    }

    /// term := factor (("*"|"/")? factor)*
    fn parse_term(&mut self) -> Result<Scalar> {
        let mut acc = self.parse_factor(false)?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.parse_factor(true)?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.pos += 1;
                    let f = self.parse_factor(true)?;
                    acc = acc.div(&f).map_err(|_| Error::Parse {
                        offset: at,
                        expected: "nonzero divisor".into(),
                    })?;
                }
                _ if self.starts_factor() => {
                    let f = self.parse_factor(false)?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// expr := "-"? term (("+"|"-") term)*
    fn parse_expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            self.parse_term()?.neg()
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

fn to_i64(v: &BigInt, at: usize) -> Result<i64> {
    use num::ToPrimitive;
    v.to_i64().ok_or(Error::Parse { offset: at, expected: "exponent within i64 range".into() })
}

/// Parse a scalar expression at the given root order.
pub fn parse_scalar(text: &str, root_order: u32) -> Result<Scalar> {
    if root_order == 0 {
        return Err(Error::Parse { offset: 0, expected: "positive root order".into() });
    }
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), root_order };
    if p.peek().is_none() {
        return Err(p.err("expression"));
    }
    let x = p.parse_expr()?;
    if p.peek().is_some() {
        return Err(p.err("'+', '-', '*', '/' or end of input"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn denotation_examples() {
        let x = parse_scalar("q^2 - q^-2", 1).unwrap();
        let terms: Vec<_> = x.num().terms().map(|(&k, c)| (k, c.clone())).collect();
        assert_eq!(terms, vec![((-2, 0), rat(-1, 1)), ((2, 0), rat(1, 1))]);

        let y = parse_scalar("s*(q^2 - 1)", 1).unwrap();
        let terms: Vec<_> = y.num().terms().map(|(&k, c)| (k, c.clone())).collect();
        assert_eq!(terms, vec![((0, 1), rat(-1, 1)), ((2, 1), rat(1, 1))]);

        let z = parse_scalar("q^{1/2} + (3/2)", 2).unwrap();
        let terms: Vec<_> = z.num().terms().map(|(&k, c)| (k, c.clone())).collect();
        assert_eq!(terms, vec![((0, 0), rat(3, 2)), ((1, 0), rat(1, 1))]);
    }

    #[test]
    fn power_forms_agree() {
        let a = parse_scalar("q^(1/2)", 4).unwrap();
        let b = parse_scalar("q^{1/2}", 4).unwrap();
        let c = Scalar::q_pow(2, 4);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(parse_scalar("q^-2", 1).unwrap(), Scalar::q_int(-2));
    }

    #[test]
    fn error_offsets() {
        match parse_scalar("q^2 + ", 1) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_scalar("q^(1/3)", 2) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_scalar("x", 1) {
            Err(Error::Parse { offset: 0, .. }) => {}
            other => panic!("expected parse error, got {:?}", other),
        }
        match parse_scalar("1/(q - q)", 1) {
            Err(Error::Parse { offset: 1, .. }) => {}
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(parse_scalar("2q s", 1).unwrap(), parse_scalar("2*q*s", 1).unwrap());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "q^2 - q^-2",
            "s*(q^2 - 1)",
            "-q^3 + q^-1",
            "(q)/(q^2 - 1)",
            "(1/2)/(q^2 - 1)",
            "3/2*s + q",
            "0",
            "-2",
            "q^(-3/2) + s^2",
        ] {
            let n = 2;
            let x = parse_scalar(text, n).unwrap();
            let printed = x.to_string();
            let y = parse_scalar(&printed, n).unwrap();
            assert_eq!(x, y, "round trip failed for {text} -> {printed}");
            assert_eq!(printed, y.to_string());
        }
    }
}
