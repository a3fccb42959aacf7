//! Tiny recursive-descent parser for the textual forms used in configs:
//! polynomials/rational expressions in `z` with coefficients that are
//! rational numbers or polynomials in the field generator `t`, e.g.
//! `(2*z^3+(t+1)*z)/(z^2-t)`. Field moduli reuse the same grammar with
//! `z` disallowed.

use num::bigint::BigInt;
use num::BigRational;
use num::One;

use crate::field::Ring;
use crate::numfield::{FieldElement, NumberField};
use crate::poly::Polynomial;
use crate::ratfn::RatFn;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                it.next();
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Num(digits.parse().unwrap()));
            }
            't' | 'z' | 'x' | 'y' | 'w' | 'u' => {
                it.next();
                toks.push(Tok::Sym(c));
            }
            '+' => {
                it.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                it.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                it.next();
                toks.push(Tok::Star);
            }
            '/' => {
                it.next();
                toks.push(Tok::Slash);
            }
            '^' => {
                it.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                it.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                it.next();
                toks.push(Tok::RParen);
            }
            _ => return Err(ParseError(format!("unexpected character '{c}'"))),
        }
    }
    Ok(toks)
}

/// Rational expression in up to two symbols: the field generator and one
/// designated variable. Parses into a rational function over the field.
pub struct ExprParser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a NumberField,
    var: Option<char>,
}

type Rf = RatFn<FieldElement>;

impl<'a> ExprParser<'a> {
    pub fn new(input: &str, field: &'a NumberField, var: Option<char>) -> Result<Self, ParseError> {
        Ok(ExprParser { toks: lex(input)?, pos: 0, field, var })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn var_rf(&self) -> Rf {
        let one = self.field.one();
        RatFn::from_poly(Polynomial::new(vec![one.zero_like(), one]))
    }

    fn const_rf(&self, e: FieldElement) -> Rf {
        RatFn::constant(e)
    }

    pub fn parse(mut self) -> Result<Rf, ParseError> {
        let e = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(ParseError("trailing input".into()));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Rf, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Rf, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = acc.div(&f).ok_or_else(|| ParseError("division by zero".into()))?;
                }
                // implicit multiplication: `2t`, `3(t+1)`
                Some(Tok::Sym(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Rf, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let exp = match self.bump() {
                Some(Tok::Num(n)) => n,
                _ => return Err(ParseError("expected integer exponent".into())),
            };
            let e: u32 = exp
                .try_into()
                .map_err(|_| ParseError("exponent out of range".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Rf, ParseError> {
        match self.bump() {
            Some(Tok::Num(n)) => {
                let q = BigRational::new(n, BigInt::one());
                Ok(self.const_rf(self.field.from_rational(q)))
            }
            Some(Tok::Sym('t')) => Ok(self.const_rf(self.field.generator())),
            Some(Tok::Sym(c)) if self.var == Some(c) => Ok(self.var_rf()),
            Some(Tok::Sym(c)) => Err(ParseError(format!("symbol '{c}' not allowed here"))),
            Some(Tok::Minus) => Ok(self.atom()?.neg()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ParseError("expected ')'".into())),
                }
            }
            other => Err(ParseError(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial with rational coefficients in the symbol `t`
/// (used for field moduli and conjugation images, before any field exists).
pub fn parse_rational_poly(input: &str) -> Result<Vec<BigRational>, ParseError> {
    // Parse over the trivial field ℚ = ℚ[t]/(t - 0)? That would collapse t.
    // Instead run a dedicated small evaluator over ℚ[t] represented as
    // coefficient vectors, lowest degree first.
    let toks = lex(input)?;
    let mut p = PolyParser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError("trailing input".into()));
    }
    Ok(v)
}

struct PolyParser {
    toks: Vec<Tok>,
    pos: usize,
}

type QP = Vec<BigRational>;

fn qp_trim(mut v: QP) -> QP {
    while v.last().map(|c| num::Zero::is_zero(c)).unwrap_or(false) {
        v.pop();
    }
    v
}

fn qp_add(a: &QP, b: &QP) -> QP {
    let n = a.len().max(b.len());
    let zero = BigRational::from_integer(0.into());
    let mut out = vec![zero; n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    qp_trim(out)
}

fn qp_neg(a: &QP) -> QP {
    a.iter().map(|c| -c).collect()
}

fn qp_mul(a: &QP, b: &QP) -> QP {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let zero = BigRational::from_integer(0.into());
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qp_trim(out)
}

impl PolyParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<QP, ParseError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                qp_neg(&self.term()?)
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = qp_add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = qp_add(&acc, &qp_neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QP, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = qp_mul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let f = self.factor()?;
                    if f.len() != 1 {
                        return Err(ParseError("can only divide by a constant".into()));
                    }
                    if num::Zero::is_zero(&f[0]) {
                        return Err(ParseError("division by zero".into()));
                    }
                    acc = acc.iter().map(|c| c / &f[0]).collect();
                }
                Some(Tok::Sym(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = qp_mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QP, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let e: u32 = match self.bump() {
                Some(Tok::Num(n)) => n
                    .try_into()
                    .map_err(|_| ParseError("exponent out of range".into()))?,
                _ => return Err(ParseError("expected integer exponent".into())),
            };
            let mut acc = vec![BigRational::from_integer(1.into())];
            for _ in 0..e {
                acc = qp_mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QP, ParseError> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(qp_trim(vec![BigRational::new(n, BigInt::one())])),
            Some(Tok::Sym('t')) => Ok(vec![
                BigRational::from_integer(0.into()),
                BigRational::from_integer(1.into()),
            ]),
            Some(Tok::Sym(c)) => Err(ParseError(format!("symbol '{c}' not allowed in modulus"))),
            Some(Tok::Minus) => Ok(qp_neg(&self.atom()?)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ParseError("expected ')'".into())),
                }
            }
            other => Err(ParseError(format!("unexpected token {other:?}"))),
        }
    }
}
