//! Text form of R[x;θ] elements.
//!
//! ```text
//! poly  := term (('+' | '-') term)*
//! term  := coef | coef '*'? var | var
//! var   := 'x' ('^' uint)?
//! coef  := uint | 'u' | uint '*'? 'u' | '(' uint ('+' ucoef)? ')'
//! ucoef := 'u' | uint '*'? 'u'
//! ```
//!
//! Whitespace between tokens is ignored, integers are reduced mod p and
//! like terms are combined. The printer emits descending degrees, e.g.
//! `x^3 + u*x^2 + x + 1`.

use crate::error::{Error, Result};
use crate::fp_poly::FpPoly;
use crate::ring::{Automorphism, RingElement};
use crate::skew_poly::SkewPoly;

/// Parses a polynomial over R. The automorphism only tags the result.
pub fn parse_polynomial(text: &str, aut: &Automorphism) -> Result<SkewPoly> {
    let terms = Parser::new(text).parse()?;
    let f = aut.field();
    let len = terms.iter().map(|t| t.degree + 1).max().unwrap_or(0);
    let mut coeffs = vec![RingElement::ZERO; len];
    for t in terms {
        let c = RingElement::new(f.reduce(t.a as i64), f.reduce(t.b as i64));
        let c = if t.negative { f.r_neg(c) } else { c };
        coeffs[t.degree] = f.r_add(coeffs[t.degree], c);
    }
    Ok(SkewPoly::new(aut, coeffs))
}

/// Parses a polynomial that must lie in F_p[x].
pub fn parse_fp_polynomial(text: &str, aut: &Automorphism) -> Result<FpPoly> {
    let poly = parse_polynomial(text, aut)?;
    if !poly.u_part().is_zero() {
        return Err(Error::Syntax { pos: 0, msg: "expected a polynomial without u terms".into() });
    }
    Ok(poly.fp_part())
}

fn format_coefficient(c: RingElement) -> String {
    match (c.a, c.b) {
        (a, 0) => a.to_string(),
        (0, 1) => "u".into(),
        (0, b) => format!("{b}*u"),
        (a, 1) => format!("({a}+u)"),
        (a, b) => format!("({a}+{b}*u)"),
    }
}

pub fn format_polynomial(poly: &SkewPoly) -> String {
    format_terms(poly.coeffs())
}

pub fn format_fp_polynomial(poly: &FpPoly) -> String {
    let v: Vec<RingElement> = poly.coeffs().iter().map(|&a| RingElement::scalar(a)).collect();
    format_terms(&v)
}

fn format_terms(coeffs: &[RingElement]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let term = if i == 0 {
            format_coefficient(c)
        } else if c == RingElement::ONE {
            var
        } else {
            format!("{}*{}", format_coefficient(c), var)
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

struct Term {
    negative: bool,
    a: u64,
    b: u64,
    degree: usize,
}

struct Parser {
    chars: Vec<(usize, char)>,
    idx: usize,
    src_len: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            idx: 0,
            src_len: src.len(),
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map(|&(p, _)| p).unwrap_or(self.src_len)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.idx += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected '{want}', found '{c}'")),
            None => self.err(format!("expected '{want}', found end of input")),
        }
    }

    fn parse(mut self) -> Result<Vec<Term>> {
        if self.chars.is_empty() {
            return self.err("empty polynomial");
        }
        let mut terms = vec![self.term(false)?];
        while let Some(c) = self.peek() {
            let negative = match c {
                '+' => false,
                '-' => true,
                other => return self.err(format!("unexpected '{other}'")),
            };
            self.idx += 1;
            terms.push(self.term(negative)?);
        }
        Ok(terms)
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.idx;
        let mut v: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            // consecutive digit characters only; whitespace already split tokens
            if self.idx > start && self.chars[self.idx].0 != self.chars[self.idx - 1].0 + 1 {
                break;
            }
            v = match v.checked_mul(10).and_then(|v| v.checked_add(c as u64 - '0' as u64)) {
                Some(v) => v,
                None => return self.err("integer too large"),
            };
            self.idx += 1;
        }
        if self.idx == start {
            return self.err("expected an integer");
        }
        Ok(v)
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let (a, b, had_coef) = match self.peek() {
            Some('x') => (1, 0, false),
            Some(c) if c.is_ascii_digit() || c == 'u' || c == '(' => {
                let (a, b) = self.coef()?;
                (a, b, true)
            }
            Some(c) => return self.err(format!("unexpected '{c}'")),
            None => return self.err("expected a term"),
        };
        let mut degree = 0;
        if had_coef && self.peek() == Some('*') {
            self.idx += 1;
            if self.peek() != Some('x') {
                return self.err("expected 'x' after '*'");
            }
        }
        if self.peek() == Some('x') {
            self.idx += 1;
            degree = 1;
            if self.peek() == Some('^') {
                self.idx += 1;
                let d = self.uint()?;
                degree = match usize::try_from(d) {
                    Ok(d) if d <= 1 << 20 => d,
                    _ => return self.err("exponent too large"),
                };
            }
        }
        Ok(Term { negative, a, b, degree })
    }

    /// Returns (a, b) for a + bu.
    fn coef(&mut self) -> Result<(u64, u64)> {
        match self.peek() {
            Some('u') => {
                self.idx += 1;
                Ok((0, 1))
            }
            Some('(') => {
                self.idx += 1;
                let a = self.uint()?;
                let mut b = 0;
                if self.peek() == Some('+') {
                    self.idx += 1;
                    b = self.u_coef()?;
                }
                self.expect(')')?;
                Ok((a, b))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                // consume '*' only when a 'u' follows
                if self.peek() == Some('u') {
                    self.idx += 1;
                    return Ok((0, v));
                }
                if self.peek() == Some('*') && self.chars.get(self.idx + 1).map(|&(_, c)| c) == Some('u') {
                    self.idx += 2;
                    return Ok((0, v));
                }
                Ok((v, 0))
            }
            _ => self.err("expected a coefficient"),
        }
    }

    fn u_coef(&mut self) -> Result<u64> {
        if self.peek() == Some('u') {
            self.idx += 1;
            return Ok(1);
        }
        let v = self.uint()?;
        if self.peek() == Some('*') {
            self.idx += 1;
        }
        match self.bump() {
            Some('u') => Ok(v),
            _ => {
                self.idx -= 1;
                self.err("expected 'u'")
            }
        }
    }
}
