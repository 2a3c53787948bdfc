//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Poly`] carries its own ordered variable list and a map from exponent
//! vectors to nonzero rational coefficients. Terms are ordered
//! graded-lexicographically (total degree first, then lexicographic with the
//! first variable most significant); that order drives printing, leading
//! terms and monic normalization.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

mod gcd;
mod parse;
mod resultant;
mod roots;

pub use parse::{parse, parse_with_vars, ParseError};
pub use resultant::sylvester_matrix;
pub use roots::{rational_roots, RootSplit, UniPoly};

pub type Rational = BigRational;

/// Shared, immutable variable list.
pub type VarList = Arc<[String]>;

pub fn var_list<S: AsRef<str>>(names: &[S]) -> VarList {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial has degree zero in `{0}`")]
    DegreeZero(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division is not exact")]
    InexactDivision,
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * u64::from(w))
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// No stored coefficient is zero and every exponent vector has one entry per
/// variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: VarList,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(vars: &VarList) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarList, c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarList) -> Self {
        Poly::constant(vars, Rational::one())
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: &VarList, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Poly::monomial(vars, e, Rational::one())
    }

    pub fn variable(vars: &VarList, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Poly::var(vars, i))
    }

    pub fn monomial(vars: &VarList, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms<I>(vars: &VarList, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.nvars()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Highest total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    /// Lowest total degree of a term (the order at the origin); 0 for zero.
    pub fn min_degree(&self) -> u32 {
        self.terms.keys().next().map_or(0, Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter_terms(|m| m.degree() == d)
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Poly {
        self.filter_terms(|m| m.degree() <= d)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn check_same(&self, other: &Poly) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    pub fn arith(&self, other: &Poly, op: ArithOp) -> Result<Poly, PolyError> {
        self.check_same(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the `i`-th variable.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * int(i64::from(e)));
        }
        out
    }

    pub fn differentiate(&self, name: &str) -> Result<Poly, PolyError> {
        let i = self
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.derivative(i))
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for the `i`-th variable; all images share one
    /// target variable list.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&p.vars), p.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Like [`Poly::compose`], dropping every term above total degree `order`
    /// after each multiplication.
    pub fn compose_truncated(&self, images: &[Poly], order: u32) -> Poly {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let target = images[0].vars.clone();
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(&p.vars), p.truncate(order)])
            .collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = (&cache[cache.len() - 1] * &cache[1]).truncate(order);
                    cache.push(next);
                }
                t = (&t * &cache[e as usize]).truncate(order);
                if t.is_zero() {
                    break;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Substitutes polynomials for named variables. Unbound variables pass
    /// through; the result lives over the unbound variables followed by the
    /// variables of the bindings, in order of first appearance.
    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Result<Poly, PolyError> {
        for (name, _) in bindings {
            if self.var_index(name).is_none() {
                return Err(PolyError::UnknownVariable(name.to_string()));
            }
        }
        let mut names: Vec<String> = Vec::new();
        for v in self.vars.iter() {
            let bound = bindings.iter().any(|(n, _)| n == v);
            let reused = bindings.iter().any(|(_, img)| img.var_index(v).is_some_and(|i| img.degree_in(i) > 0));
            if (!bound || reused) && !names.contains(v) {
                names.push(v.clone());
            }
        }
        for (_, img) in bindings {
            for v in img.vars.iter() {
                if !names.contains(v) {
                    names.push(v.clone());
                }
            }
        }
        let target = var_list(&names);
        let mut images = Vec::with_capacity(self.nvars());
        for v in self.vars.iter() {
            match bindings.iter().find(|(n, _)| n == v) {
                Some((_, img)) => images.push(img.with_vars(&target)?),
                None => images.push(Poly::variable(&target, v)?),
            }
        }
        Ok(self.compose(&images))
    }

    /// Re-expresses the polynomial over another variable list, which must
    /// contain every variable that occurs.
    pub fn with_vars(&self, target: &VarList) -> Result<Poly, PolyError> {
        if *target == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            let j = target.iter().position(|t| t == v);
            if j.is_none() && self.degree_in(i) > 0 {
                return Err(PolyError::UnknownVariable(v.clone()));
            }
            map.push(j);
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] += x;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Renames the variables positionally.
    pub fn rename(&self, target: &VarList) -> Poly {
        assert_eq!(target.len(), self.nvars(), "rename keeps the arity");
        Poly { vars: target.clone(), terms: self.terms.clone() }
    }

    /// Restricts to the given variable indices (in that order); the other
    /// variables must not occur.
    pub fn restrict(&self, keep: &[usize]) -> Poly {
        let names: Vec<&str> = keep.iter().map(|&i| self.vars[i].as_str()).collect();
        let target = var_list(&names);
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            debug_assert!(
                (0..self.nvars()).all(|i| keep.contains(&i) || m.0[i] == 0),
                "restrict drops a used variable"
            );
            out.add_term(Monomial(keep.iter().map(|&i| m.0[i]).collect()), c.clone());
        }
        out
    }

    /// Fixes the `i`-th variable to `value`, removing it from the variable list.
    pub fn set_var(&self, i: usize, value: &Rational) -> Poly {
        let names: Vec<&str> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.as_str())
            .collect();
        let target = var_list(&names);
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(i);
            let f = if k == 0 { c.clone() } else { c * num_traits::pow(value.clone(), k as usize) };
            out.add_term(Monomial(e), f);
        }
        out
    }

    /// `p(x + pt)`, expanded; the constant term of the result is `p(pt)`.
    pub fn translate(&self, pt: &[Rational]) -> Result<Poly, PolyError> {
        if pt.len() != self.nvars() {
            return Err(PolyError::ArityMismatch { expected: self.nvars(), got: pt.len() });
        }
        if pt.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<Poly> = pt
            .iter()
            .enumerate()
            .map(|(i, a)| &Poly::var(&self.vars, i) + &Poly::constant(&self.vars, a.clone()))
            .collect();
        Ok(self.compose(&images))
    }

    /// Coefficients of the polynomial viewed as univariate in variable `i`;
    /// entry `k` multiplies `x_i^k` and does not involve `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let deg = self.degree_in(i) as usize;
        let mut out = vec![Poly::zero(&self.vars); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.clone();
            e[i] = 0;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        out
    }

    pub fn from_coefficients_in(vars: &VarList, i: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.0.clone();
                e[i] += k as u32;
                out.add_term(Monomial(e), v.clone());
            }
        }
        out
    }

    /// Multivariate division by a single divisor in graded-lex order.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_same(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(PolyError::ZeroPolynomial)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut quotient = Poly::zero(&self.vars);
        let mut remainder = Poly::zero(&self.vars);
        let mut rest = self.clone();
        while let Some((m, c)) = rest.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = m.div(&lm);
                let qc = &c / &lc;
                for (dm, dc) in &divisor.terms {
                    rest.add_term(dm.mul(&qm), -(dc * &qc));
                }
                quotient.add_term(qm, qc);
            } else {
                rest.terms.remove(&m);
                remainder.add_term(m, c);
            }
        }
        Ok((quotient, remainder))
    }

    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    /// Scales so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Multiplies by the least positive rational making all coefficients
    /// coprime integers with positive leading coefficient.
    pub fn primitive_integer(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            num = num_integer::Integer::gcd(&num, &n);
        }
        let mut factor = Rational::new(den, num);
        if self.leading_coeff().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Parity of the exponents of variable `i`: `Some(true)` when all even,
    /// `Some(false)` when all odd, `None` when mixed.
    pub fn parity_in(&self, i: usize) -> Option<bool> {
        let mut even = true;
        let mut odd = true;
        for m in self.terms.keys() {
            if m.0[i] % 2 == 0 {
                odd = false;
            } else {
                even = false;
            }
        }
        if even {
            Some(true)
        } else if odd {
            Some(false)
        } else {
            None
        }
    }

    /// Coefficient list, low degree first, when at most variable `i` occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_univariate(vars: &VarList, i: usize, u: &UniPoly) -> Poly {
        let mut out = Poly::zero(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    /// Panics when the variable lists differ; see [`Poly::arith`].
    fn add(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Add).expect("add: variable lists differ")
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Sub).expect("sub: variable lists differ")
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Mul).expect("mul: variable lists differ")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(fmt_rational(&abs));
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
