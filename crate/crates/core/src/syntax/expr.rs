//! Expression language for elements of `A` and of the coefficient ring.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') ['-'] term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := int | int '/' uint | 't' | '[' int (',' int)* ']' | name | '(' expr ')'
//! ```
//!
//! Products keep their written order and are evaluated with the normal-form
//! multiplication of the extension.

use num::{BigInt, BigRational, ToPrimitive, Zero};

use crate::coeff::{RingDescriptor, RingElement};
use crate::error::{Error, Position, Result};
use crate::extension::{ExtensionSpec, Normalizer, SkewPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Position,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Position { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Int(digits.parse().expect("digits")), pos });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                name.push(d);
                chars.next();
                column += 1;
            }
            out.push(Token { tok: Tok::Name(name), pos });
        } else if "+-*^/()[],".contains(c) {
            chars.next();
            column += 1;
            out.push(Token { tok: Tok::Sym(c), pos });
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character '{c}'") });
        }
    }
    out.push(Token { tok: Tok::End, pos: Position { line, column } });
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Coeff(RingElement),
    Var(usize),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Diff(Box<Expr>, Box<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, u32),
}

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    ring: &'a RingDescriptor,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::End {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{c}'")))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        let t = self.peek();
        let found = match &t.tok {
            Tok::Int(k) => k.to_string(),
            Tok::Name(n) => n.clone(),
            Tok::Sym(c) => c.to_string(),
            Tok::End => "end of input".to_string(),
        };
        Error::Syntax { pos: t.pos, msg: format!("{what}, found {found}") }
    }

    fn signed_term(&mut self) -> Result<Expr> {
        if self.is_sym('-') {
            self.bump();
            Ok(Expr::Neg(Box::new(self.term()?)))
        } else {
            self.term()
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.signed_term()?;
        loop {
            if self.is_sym('+') {
                self.bump();
                acc = Expr::Sum(Box::new(acc), Box::new(self.signed_term()?));
            } else if self.is_sym('-') {
                self.bump();
                acc = Expr::Diff(Box::new(acc), Box::new(self.signed_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.is_sym('*') {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(k) => {
                let k = k.to_u32().ok_or_else(|| Error::Syntax { pos: t.pos, msg: "exponent too large".into() })?;
                Ok(Expr::Power(Box::new(base), k))
            }
            _ => Err(Error::Syntax { pos: t.pos, msg: "expected a nonnegative integer exponent".into() }),
        }
    }

    fn int_literal(&mut self) -> Result<BigInt> {
        let negative = self.is_sym('-');
        if negative {
            self.bump();
        }
        match self.peek().tok.clone() {
            Tok::Int(k) => {
                self.bump();
                Ok(if negative { -k } else { k })
            }
            _ => Err(self.unexpected("expected an integer")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(k) => {
                self.bump();
                if !self.is_sym('/') {
                    return Ok(Expr::Coeff(self.ring.from_int(&k)));
                }
                self.bump();
                let den_tok = self.bump();
                let Tok::Int(den) = den_tok.tok else {
                    return Err(Error::Syntax { pos: den_tok.pos, msg: "expected a denominator".into() });
                };
                if den.is_zero() {
                    return Err(Error::Syntax { pos: den_tok.pos, msg: "zero denominator".into() });
                }
                let q = BigRational::new(k, den);
                let e = self.ring.from_rational(&q).ok_or_else(|| Error::BadCoefficientForRing {
                    pos: t.pos,
                    msg: format!("fraction {q} in {}", self.ring),
                })?;
                Ok(Expr::Coeff(e))
            }
            Tok::Name(name) => {
                self.bump();
                if let Some(i) = self.names.iter().position(|n| *n == name) {
                    return Ok(Expr::Var(i));
                }
                if name == "t" {
                    return self.ring.t().map(Expr::Coeff).ok_or_else(|| Error::BadCoefficientForRing {
                        pos: t.pos,
                        msg: format!("{} has no element t", self.ring),
                    });
                }
                Err(Error::UnknownVariable { pos: t.pos, name })
            }
            Tok::Sym('[') => {
                self.bump();
                let mut comps = vec![self.int_literal()?];
                while self.is_sym(',') {
                    self.bump();
                    comps.push(self.int_literal()?);
                }
                self.expect_sym(']')?;
                let e = self.ring.tuple(&comps).ok_or_else(|| Error::BadCoefficientForRing {
                    pos: t.pos,
                    msg: format!("tuple of length {} in {}", comps.len(), self.ring),
                })?;
                Ok(Expr::Coeff(e))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(self.unexpected("expected a term")),
        }
    }
}

fn parse_tree(src: &str, ring: &RingDescriptor, names: &[String]) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, at: 0, ring, names };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected("expected an operator"));
    }
    Ok(e)
}

fn eval_poly(e: &Expr, norm: &mut Normalizer<'_>) -> SkewPolynomial {
    let ring = norm.spec().ring().clone();
    let n = norm.spec().nvars();
    match e {
        Expr::Coeff(c) => SkewPolynomial::constant(&ring, n, c.clone()),
        Expr::Var(i) => SkewPolynomial::variable(&ring, n, *i),
        Expr::Neg(a) => eval_poly(a, norm).neg(&ring),
        Expr::Sum(a, b) => eval_poly(a, norm).add(&ring, &eval_poly(b, norm)),
        Expr::Diff(a, b) => eval_poly(a, norm).sub(&ring, &eval_poly(b, norm)),
        Expr::Product(fs) => {
            let mut acc = eval_poly(&fs[0], norm);
            for f in &fs[1..] {
                let rhs = eval_poly(f, norm);
                acc = norm.mul(&acc, &rhs);
            }
            acc
        }
        Expr::Power(a, k) => {
            let base = eval_poly(a, norm);
            norm.pow(&base, *k)
        }
    }
}

fn eval_element(e: &Expr, ring: &RingDescriptor) -> RingElement {
    match e {
        Expr::Coeff(c) => c.clone(),
        Expr::Var(_) => unreachable!("element expressions have no variables"),
        Expr::Neg(a) => ring.neg(&eval_element(a, ring)),
        Expr::Sum(a, b) => ring.add(&eval_element(a, ring), &eval_element(b, ring)),
        Expr::Diff(a, b) => ring.sub(&eval_element(a, ring), &eval_element(b, ring)),
        Expr::Product(fs) => fs.iter().fold(ring.one(), |acc, f| ring.mul(&acc, &eval_element(f, ring))),
        Expr::Power(a, k) => ring.pow(&eval_element(a, ring), *k),
    }
}

/// Normal form of the element of `A` denoted by `src`.
pub fn parse_expression(src: &str, spec: &ExtensionSpec) -> Result<SkewPolynomial> {
    let mut norm = Normalizer::new(spec);
    parse_expression_with(src, &mut norm)
}

/// As [`parse_expression`], reusing a normalizer's cache.
pub fn parse_expression_with(src: &str, norm: &mut Normalizer<'_>) -> Result<SkewPolynomial> {
    let tree = parse_tree(src, norm.spec().ring(), norm.spec().names())?;
    Ok(eval_poly(&tree, norm))
}

/// An element of the coefficient ring.
pub fn parse_element(src: &str, ring: &RingDescriptor) -> Result<RingElement> {
    let tree = parse_tree(src, ring, &[])?;
    Ok(eval_element(&tree, ring))
}

/// Splits a formatted coefficient into a sign and a body usable as a factor.
fn coefficient_parts(text: &str) -> (bool, String) {
    let composite = text.contains(' ');
    match text.strip_prefix('-') {
        Some(rest) if !composite => (true, rest.to_string()),
        _ if composite => (false, format!("({text})")),
        _ => (false, text.to_string()),
    }
}

/// Text form in descending deglex order, e.g. `x1^2 + 3*x1*x2 - 1/2`.
pub fn format_polynomial(spec: &ExtensionSpec, f: &SkewPolynomial) -> String {
    let ring = spec.ring();
    let mut out = String::new();
    for (exp, c) in f.terms() {
        let text = ring.format_element(c);
        let mono: Vec<String> = exp
            .as_slice()
            .iter()
            .zip(spec.names())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
            .collect();
        let (negative, body) = if mono.is_empty() {
            // a bare constant needs no parentheses even when composite
            match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            }
        } else {
            let (negative, coeff) = coefficient_parts(&text);
            let mono = mono.join("*");
            (negative, if coeff == "1" { mono } else { format!("{coeff}*{mono}") })
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Formats a ring element the way [`parse_element`] reads it back.
pub fn format_element(ring: &RingDescriptor, e: &RingElement) -> String {
    ring.format_element(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{PolyBase, RingDescriptor};
    use crate::extension::{ExponentVector, Tail};

    fn weyl() -> ExtensionSpec {
        let q = RingDescriptor::rationals();
        ExtensionSpec::builder(q.clone(), 2).relation(0, 1, q.one(), Tail::constant(&q, 2, q.one())).build().unwrap()
    }

    #[test]
    fn weyl_reordering() {
        let e = weyl();
        let f = parse_expression("x2*x1^2", &e).unwrap();
        assert_eq!(format_polynomial(&e, &f), "x1^2*x2 + 2*x1");
        assert!(parse_expression("0", &e).unwrap().is_zero());
        assert_eq!(format_polynomial(&e, &parse_expression("-x1 + 1/2 - 3*x2*x2", &e).unwrap()), "-3*x2^2 - x1 + 1/2");
    }

    #[test]
    fn quantum_square() {
        let q = RingDescriptor::rationals();
        let two = q.from_i64(2);
        let e = ExtensionSpec::builder(q.clone(), 2).relation(0, 1, two, Tail::zero(&q, 2)).build().unwrap();
        let f = parse_expression("(x1+x2)^2", &e).unwrap();
        assert_eq!(format_polynomial(&e, &f), "x1^2 + 3*x1*x2 + x2^2");
    }

    #[test]
    fn diagnostics_carry_positions() {
        let e = weyl();
        match parse_expression("x1 +\n  y", &e) {
            Err(Error::UnknownVariable { pos, name }) => assert_eq!((pos.line, pos.column, name.as_str()), (2, 3, "y")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expression("x1 + ", &e), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("x1 x2", &e), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expression("x1^-1", &e), Err(Error::Syntax { .. })));
        let z = ExtensionSpec::builder(RingDescriptor::zmod(5).unwrap(), 1).build().unwrap();
        assert!(matches!(parse_expression("1/2*x1", &z), Err(Error::BadCoefficientForRing { .. })));
        assert!(matches!(parse_expression("t*x1", &z), Err(Error::BadCoefficientForRing { .. })));
    }

    #[test]
    fn composite_coefficients() {
        let r = RingDescriptor::unipoly(PolyBase::Rationals).unwrap();
        let e = ExtensionSpec::builder(r.clone(), 1).build().unwrap();
        let f = parse_expression("(t^2 - 1/2*t)*x1 - t + 3", &e).unwrap();
        let text = format_polynomial(&e, &f);
        assert_eq!(text, "(t^2 - 1/2*t)*x1 - t + 3");
        assert_eq!(parse_expression(&text, &e).unwrap(), f);
        let g = SkewPolynomial::term(&r, ExponentVector::new(vec![1]), r.neg(&r.t().unwrap()));
        assert_eq!(format_polynomial(&e, &g), "-t*x1");
    }

    #[test]
    fn elements() {
        let p = RingDescriptor::product(vec![3, 3]).unwrap();
        assert_eq!(parse_element("[1,-1]", &p).unwrap(), RingElement::Tuple(vec![1, 2]));
        assert!(matches!(parse_element("[1]", &p), Err(Error::BadCoefficientForRing { .. })));
        assert!(matches!(parse_element("x1", &p), Err(Error::UnknownVariable { .. })));
        let d = RingDescriptor::quotient_poly(2, vec![0, 0, 1]).unwrap();
        assert!(d.is_zero(&parse_element("t^2", &d).unwrap()));
    }
}
