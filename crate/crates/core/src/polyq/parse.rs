//! Text form of polynomials: `t^2 - 1/2*x^6 - y^6 - z^3`.
//!
//! Sums and differences of products; factors are rational literals,
//! identifiers, parenthesized expressions, or any of those raised to a
//! non-negative integer power. Division is only allowed by a nonzero
//! constant. Whitespace is insignificant.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{var_list, Poly, Rational, VarList};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{message} at line {line}, column {column}")]
pub struct ParseError {
    pub message: String,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    fn at(src: &str, offset: usize, message: impl Into<String>) -> Self {
        let before = &src[..offset.min(src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { message: message.into(), offset, line, column }
    }

    /// Shifts the position by a prefix of `src` that preceded the parsed text.
    pub fn relocate(self, src: &str, base: usize) -> Self {
        ParseError::at(src, base + self.offset, self.message)
    }
}

#[derive(Debug, Clone)]
enum Expr {
    Num(Rational),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap_or(c);
            return Err(ParseError::at(src, i, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(_, o)| *o)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.src, self.offset(), msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.offset();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {}", describe(&t)))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
    }
}

fn collect_vars(e: &Expr, out: &mut BTreeSet<String>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(s) => {
            out.insert(s.clone());
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
        Expr::Neg(a) | Expr::Pow(a, _) => collect_vars(a, out),
    }
}

fn eval(e: &Expr, vars: &VarList, src: &str) -> Result<Poly, ParseError> {
    Ok(match e {
        Expr::Num(q) => Poly::constant(vars, q.clone()),
        Expr::Var(s) => Poly::variable(vars, s)
            .map_err(|_| ParseError::at(src, 0, format!("variable `{s}` is not in the variable list")))?,
        Expr::Add(a, b) => &eval(a, vars, src)? + &eval(b, vars, src)?,
        Expr::Sub(a, b) => &eval(a, vars, src)? - &eval(b, vars, src)?,
        Expr::Mul(a, b) => &eval(a, vars, src)? * &eval(b, vars, src)?,
        Expr::Div(a, b, at) => {
            let d = eval(b, vars, src)?;
            if !d.is_constant() || d.is_zero() {
                return Err(ParseError::at(src, *at, "division only by a nonzero constant"));
            }
            let inv = Rational::one() / d.constant_term();
            eval(a, vars, src)?.scale(&inv)
        }
        Expr::Neg(a) => -eval(a, vars, src)?,
        Expr::Pow(a, n) => eval(a, vars, src)?.pow(*n),
    })
}

fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    if p.peek().is_none() {
        return Err(p.err("empty polynomial"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(format!("unexpected token {}", describe(p.peek().unwrap()))));
    }
    Ok(e)
}

/// Parses over the alphabetically sorted set of identifiers that occur.
pub fn parse(src: &str) -> Result<Poly, ParseError> {
    let e = parse_expr(src)?;
    let mut names = BTreeSet::new();
    collect_vars(&e, &mut names);
    let names: Vec<String> = names.into_iter().collect();
    eval(&e, &var_list(&names), src)
}

/// Parses over a fixed variable list; identifiers outside it are an error.
pub fn parse_with_vars(src: &str, vars: &VarList) -> Result<Poly, ParseError> {
    let e = parse_expr(src)?;
    let mut names = BTreeSet::new();
    collect_vars(&e, &mut names);
    if let Some(bad) = names.iter().find(|n| !vars.contains(n)) {
        let at = src.find(bad.as_str()).unwrap_or(0);
        return Err(ParseError::at(src, at, format!("unknown variable `{bad}`")));
    }
    let p = eval(&e, vars, src)?;
    debug_assert!(p.terms().all(|(_, c)| !c.is_zero()));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::rat;
    use proptest::prelude::*;

    #[test]
    fn rational_coefficients_and_alphabetical_vars() {
        let f = parse("t^2 - 1/2*x^6 - y^6 - z^3").unwrap();
        assert_eq!(f.vars().join(","), "t,x,y,z");
        assert_eq!(f.coeff(&[0, 6, 0, 0]), rat(-1, 2));
        assert_eq!(f.num_terms(), 4);
    }

    #[test]
    fn products_and_parentheses_expand() {
        let f = parse("(x + y)^2*z").unwrap();
        assert_eq!(f.to_string(), "x^2*z + 2*x*y*z + y^2*z");
        let g = parse(" x /  2 ").unwrap();
        assert_eq!(g.coeff(&[1]), rat(1, 2));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let e = parse("x^2 +\n  y $ 3").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse("x^y").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse("x / y").is_err());
        assert!(parse("").is_err());
        assert!(parse("(x + 1").is_err());
        assert!(parse_with_vars("x + w", &var_list(&["x"])).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let vars = var_list(&["a", "b", "c"]);
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..7), 0..8).prop_map(
            move |terms| {
                Poly::from_terms(
                    &vars,
                    terms.into_iter().map(|((i, j, k), n, d)| (vec![i, j, k], rat(n, d))),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in arb_poly()) {
            let text = p.to_string();
            let back = parse_with_vars(&text, p.vars()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
