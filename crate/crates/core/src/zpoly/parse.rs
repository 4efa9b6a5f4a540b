//! Text grammar for polynomials: integer literals, `X`, `+ - * ^ / ( )`,
//! with implicit multiplication by adjacency (`2X`, `(X-1)(X-2)`).
//! Rational polynomials are written `<intpoly>/<positive integer>`.
//!
//! The parse keeps the product structure of the input so that factored
//! inputs like `(95095X+2)(95095X+3)` never need to be re-factored from
//! their expansion.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut lit = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        lit.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(lit.parse().expect("digits")));
            }
            'X' => {
                chars.next();
                out.push(Token::X);
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            other => return Err(Error::Parse(format!("unexpected character '{}'", other))),
        }
    }
    Ok(out)
}

/// Expression tree retaining the product structure of the source text.
#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Div(Box<Expr>, BigInt),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.next();
                    let d = self.divisor()?;
                    acc = Expr::Div(Box::new(acc), d);
                }
                // implicit multiplication by adjacency
                Some(Token::Int(_)) | Some(Token::X) | Some(Token::LParen) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divisor(&mut self) -> Result<BigInt> {
        // A positive integer literal, or a parenthesized one.
        match self.next() {
            Some(Token::Int(n)) if n.is_positive() => Ok(n),
            Some(Token::Int(n)) => {
                Err(Error::Parse(format!("denominator must be positive, found {}", n)))
            }
            Some(Token::LParen) => {
                let n = match self.next() {
                    Some(Token::Int(n)) if n.is_positive() => n,
                    other => {
                        return Err(Error::Parse(format!(
                            "denominator must be a positive integer, found {:?}",
                            other
                        )))
                    }
                };
                match self.next() {
                    Some(Token::RParen) => Ok(n),
                    _ => Err(Error::Parse("expected ')' after denominator".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "denominator must be a positive integer, found {:?}",
                other
            ))),
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            match self.next() {
                Some(Token::Int(n)) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| Error::Parse(format!("exponent {} too large", n)))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                other => Err(Error::Parse(format!(
                    "exponent must be a nonnegative integer, found {:?}",
                    other
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::X) => Ok(Expr::X),
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// A parsed polynomial: the expanded rational polynomial plus the
/// nonconstant structural parts of the source product.
#[derive(Debug, Clone)]
pub struct ParsedPoly {
    pub text: String,
    pub poly: RatPoly,
    /// Nonconstant top-level product parts (each expanded), with exponents.
    /// `poly = (constant_num / constant_den) * prod parts_i ^ e_i`.
    pub parts: Vec<(IntPoly, u32)>,
    pub constant_num: BigInt,
    pub constant_den: BigInt,
}

impl Expr {
    fn expand(&self) -> RatPoly {
        match self {
            Expr::Int(n) => RatPoly::from_int(IntPoly::constant(n.clone())),
            Expr::X => RatPoly::from_int(IntPoly::x()),
            Expr::Neg(e) => {
                let r = e.expand();
                RatPoly::new(r.numerator().neg(), r.denominator().clone()).expect("nonzero den")
            }
            Expr::Add(a, b) => {
                let (ra, rb) = (a.expand(), b.expand());
                let num = ra
                    .numerator()
                    .scale(rb.denominator())
                    .add(&rb.numerator().scale(ra.denominator()));
                RatPoly::new(num, ra.denominator() * rb.denominator()).expect("nonzero den")
            }
            Expr::Sub(a, b) => {
                let (ra, rb) = (a.expand(), b.expand());
                let num = ra
                    .numerator()
                    .scale(rb.denominator())
                    .sub(&rb.numerator().scale(ra.denominator()));
                RatPoly::new(num, ra.denominator() * rb.denominator()).expect("nonzero den")
            }
            Expr::Mul(a, b) => a.expand().mul(&b.expand()),
            Expr::Pow(a, e) => {
                let r = a.expand();
                RatPoly::new(r.numerator().pow(*e), r.denominator().pow(*e)).expect("nonzero den")
            }
            Expr::Div(a, d) => {
                let r = a.expand();
                RatPoly::new(r.numerator().clone(), r.denominator() * d).expect("checked nonzero")
            }
        }
    }

    /// Collects multiplicative structure: parts^e, a numeric constant and
    /// a denominator. Additive subtrees are leaves.
    fn collect(
        &self,
        exp: u32,
        parts: &mut Vec<(IntPoly, u32)>,
        cnum: &mut BigInt,
        cden: &mut BigInt,
    ) {
        match self {
            Expr::Mul(a, b) => {
                a.collect(exp, parts, cnum, cden);
                b.collect(exp, parts, cnum, cden);
            }
            Expr::Pow(a, e) => a.collect(exp * e, parts, cnum, cden),
            Expr::Div(a, d) => {
                *cden *= d.pow(exp);
                a.collect(exp, parts, cnum, cden);
            }
            Expr::Neg(a) => {
                if exp % 2 == 1 {
                    *cnum = -&*cnum;
                }
                a.collect(exp, parts, cnum, cden);
            }
            leaf => {
                let r = leaf.expand();
                *cden *= r.denominator().pow(exp);
                let num = r.numerator();
                if num.is_constant() {
                    *cnum *= num.coeff(0).pow(exp);
                } else {
                    match parts.iter_mut().find(|(g, _)| g == num) {
                        Some((_, m)) => *m += exp,
                        None => parts.push((num.clone(), exp)),
                    }
                }
            }
        }
    }
}

/// Parses a polynomial in the text grammar.
pub fn parse_poly(input: &str) -> Result<ParsedPoly> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    let poly = expr.expand();
    let mut parts = Vec::new();
    let mut cnum = BigInt::one();
    let mut cden = BigInt::one();
    expr.collect(1, &mut parts, &mut cnum, &mut cden);
    if cden.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    // Pure exponent-0 parts vanish; drop them.
    parts.retain(|(_, e)| *e > 0);
    Ok(ParsedPoly { text: input.to_string(), poly, parts, constant_num: cnum, constant_den: cden })
}
