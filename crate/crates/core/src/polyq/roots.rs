//! Univariate polynomials over the rationals and their rational roots.
//!
//! Rational roots are found by reducing to a monic integer polynomial whose
//! integer roots are `lc * r`, finding roots modulo a small prime where the
//! polynomial stays squarefree, and Hensel-lifting them past the Cauchy
//! root bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn monic(&self) -> UniPoly {
        match self.0.last() {
            None => self.clone(),
            Some(lc) => UniPoly(self.0.iter().map(|c| c / lc).collect()),
        }
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        let lc = d.0.last().unwrap().clone();
        if r.len() < d.0.len() {
            return (UniPoly(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

/// Distinct rational roots plus the monic squarefree cofactor that has no
/// rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    pub roots: Vec<Rational>,
    pub residual: UniPoly,
}

impl RootSplit {
    pub fn has_irrational_part(&self) -> bool {
        self.residual.degree() > 0
    }
}

/// All distinct rational roots of a nonzero polynomial, sorted ascending.
pub fn rational_roots(u: &UniPoly) -> RootSplit {
    assert!(!u.is_zero(), "rational_roots of the zero polynomial");
    let mut rest = u.squarefree_part();
    let mut roots = Vec::new();
    if rest.degree() > 0 && rest.0[0].is_zero() {
        roots.push(Rational::zero());
        rest = UniPoly::new(rest.0[1..].to_vec());
    }
    for r in integer_lift_roots(&rest) {
        let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
        let (q, rem) = rest.div_rem(&lin);
        debug_assert!(rem.is_zero());
        rest = q;
        roots.push(r);
    }
    roots.sort();
    RootSplit { roots, residual: rest.monic() }
}

fn to_primitive_integers(u: &UniPoly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &u.0 {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = u.0.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn mod_poly(g: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    g.iter()
        .map(|c| c.mod_floor(&pb).try_into().expect("residue fits"))
        .collect()
}

fn eval_mod_u64(g: &[u64], x: u64, p: u64) -> u64 {
    g.iter().rev().fold(0u64, |acc, &c| ((acc as u128 * x as u128 + c as u128) % p as u128) as u64)
}

fn inv_mod_u64(a: u64, p: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(p));
    e.x.mod_floor(&BigInt::from(p)).try_into().expect("residue fits")
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod_u64(b[db], p);
    while r.len() > db {
        let top = r.len() - 1;
        let c = (r[top] as u128 * inv as u128 % p as u128) as u64;
        if c != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = ((r[k] as u128 + p as u128 - (c as u128 * bc as u128 % p as u128)) % p as u128) as u64;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn squarefree_mod_p(g: &[u64], p: u64) -> bool {
    let mut d: Vec<u64> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| (c as u128 * k as u128 % p as u128) as u64)
        .collect();
    trim(&mut d);
    if d.is_empty() {
        return false;
    }
    let mut a = g.to_vec();
    trim(&mut a);
    let mut b = d;
    while !b.is_empty() {
        let r = rem_mod_p(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn eval_big(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

// Rational roots of a squarefree polynomial with nonzero constant term.
fn integer_lift_roots(u: &UniPoly) -> Vec<Rational> {
    let n = u.degree();
    if n == 0 {
        return Vec::new();
    }
    let f = to_primitive_integers(u);
    if n == 1 {
        return vec![Rational::new(-f[0].clone(), f[1].clone())];
    }
    let lc = f[n].clone();
    // g(y) = lc^(n-1) f(y / lc) is monic with integer roots y = lc * r.
    let mut g: Vec<BigInt> = (0..n).map(|i| &f[i] * num_traits::pow(lc.clone(), n - 1 - i)).collect();
    g.push(BigInt::one());
    let bound = g[..n].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero) + BigInt::one();
    let limit = &bound * 2;
    let dg: Vec<BigInt> = g.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();

    let p = small_primes()
        .find(|&p| squarefree_mod_p(&mod_poly(&g, p), p))
        .expect("some prime keeps a squarefree polynomial squarefree");
    let gp = mod_poly(&g, p);
    let mut out = Vec::new();
    for r0 in 0..p {
        if eval_mod_u64(&gp, r0, p) != 0 {
            continue;
        }
        let mut y = BigInt::from(r0);
        let mut m = BigInt::from(p);
        while m <= limit {
            m = &m * &m;
            let gy = eval_big(&g, &y).mod_floor(&m);
            let dy = eval_big(&dg, &y).mod_floor(&m);
            let inv = dy.extended_gcd(&m).x;
            y = (&y - gy * inv).mod_floor(&m);
        }
        let half = &m / 2;
        if y > half {
            y -= &m;
        }
        if eval_big(&g, &y).is_zero() {
            out.push(Rational::new(y, lc.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{int, rat};
    use proptest::prelude::*;

    fn poly_from_roots(roots: &[Rational], extra: &[Rational]) -> UniPoly {
        let mut acc = UniPoly::new(extra.to_vec());
        for r in roots {
            let mut next = vec![Rational::zero(); acc.0.len() + 1];
            for (k, c) in acc.0.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            acc = UniPoly::new(next);
        }
        acc
    }

    #[test]
    fn finds_rational_roots_and_irrational_rest() {
        // (x - 1/2)(x + 3)(x^2 - 2)
        let u = poly_from_roots(&[rat(1, 2), int(-3)], &[int(-2), int(0), int(1)]);
        let s = rational_roots(&u);
        assert_eq!(s.roots, vec![int(-3), rat(1, 2)]);
        assert!(s.has_irrational_part());
        assert_eq!(s.residual, UniPoly::new(vec![int(-2), int(0), int(1)]));
    }

    #[test]
    fn repeated_and_zero_roots() {
        let u = poly_from_roots(&[int(0), int(0), int(5), int(5), rat(-7, 3)], &[int(4)]);
        let s = rational_roots(&u);
        assert_eq!(s.roots, vec![rat(-7, 3), int(0), int(5)]);
        assert!(!s.has_irrational_part());
    }

    #[test]
    fn no_roots() {
        let s = rational_roots(&UniPoly::new(vec![int(1), int(0), int(1)]));
        assert!(s.roots.is_empty());
        assert_eq!(s.residual.degree(), 2);
        let c = rational_roots(&UniPoly::new(vec![int(3)]));
        assert!(c.roots.is_empty() && !c.has_irrational_part());
    }

    proptest! {
        #[test]
        fn planted_roots_are_recovered(
            nums in prop::collection::vec((-40i64..40, 1i64..12), 1..6),
            scale in 1i64..50,
        ) {
            let roots: Vec<Rational> = nums.iter().map(|&(n, d)| rat(n, d)).collect();
            let u = poly_from_roots(&roots, &[int(scale)]);
            let mut expect = roots.clone();
            expect.sort();
            expect.dedup();
            let s = rational_roots(&u);
            prop_assert_eq!(&s.roots, &expect);
            prop_assert!(!s.has_irrational_part());
        }
    }
}
