//! Multivariate gcd by recursion on the main variable: contents are gcds of
//! coefficient polynomials in fewer variables, primitive parts are combined
//! through a subresultant remainder sequence.

use num_traits::One;

use super::{Poly, PolyError};

impl Poly {
    /// Greatest common divisor, normalized to graded-lex leading coefficient 1.
    /// `gcd(0, q)` is `q` normalized; `gcd(0, 0)` is 0.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_same(other)?;
        Ok(gcd_rec(self, other).monic())
    }

    /// Content with respect to variable `i`: the gcd of the coefficients of
    /// `self` viewed as a polynomial in `x_i`.
    pub fn content_in(&self, i: usize) -> Poly {
        content(self, i)
    }

    /// True iff `p` and all its partial derivatives have constant gcd.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.repeated_part().is_constant())
    }

    /// Removes repeated factors.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.repeated_part();
        if g.is_constant() {
            return self.monic();
        }
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// `gcd(p, dp/dx_1, ..., dp/dx_n)`, the product of `g^(e-1)` over the
    /// factors `g^e` of `p`.
    pub fn repeated_part(&self) -> Poly {
        let mut g = self.clone();
        for i in self.used_vars() {
            if g.is_constant() {
                break;
            }
            g = gcd_rec(&g, &self.derivative(i));
        }
        g
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in variable `i`.
    pub fn pseudo_rem(&self, b: &Poly, i: usize) -> Poly {
        prem(self, b, i)
    }
}

fn main_var(p: &Poly, q: &Poly) -> Option<usize> {
    (0..p.nvars()).rev().find(|&i| p.degree_in(i) > 0 || q.degree_in(i) > 0)
}

pub(super) fn gcd_rec(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one(p.vars());
    }
    let v = main_var(p, q).expect("nonconstant input has a variable");
    let cp = content(p, v);
    let cq = content(q, v);
    let c = gcd_rec(&cp, &cq);
    let pp = p.div_exact(&cp).expect("content divides");
    let qp = q.div_exact(&cq).expect("content divides");
    let h = if pp.degree_in(v) == 0 || qp.degree_in(v) == 0 {
        Poly::one(p.vars())
    } else {
        let g = subresultant_gcd(&pp, &qp, v);
        let cg = content(&g, v);
        g.div_exact(&cg).expect("content divides")
    };
    (&c * &h).monic()
}

fn content(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero(p.vars());
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return Poly::one(p.vars());
        }
    }
    g.monic()
}

fn lc_in(p: &Poly, v: usize) -> Poly {
    p.coefficients_in(v).pop().unwrap_or_else(|| Poly::zero(p.vars()))
}

fn prem(a: &Poly, b: &Poly, v: usize) -> Poly {
    let db = b.degree_in(v);
    let da = a.degree_in(v);
    if a.is_zero() || da < db {
        return a.clone();
    }
    let lb = lc_in(b, v);
    let mut r = a.clone();
    let mut e = da - db + 1;
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = lc_in(&r, v);
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - db;
        let mono = Poly::monomial(r.vars(), shift, super::Rational::one());
        r = &(&lb * &r) - &(&(&lr * &mono) * b);
        e -= 1;
    }
    if e > 0 {
        r = &lb.pow(e) * &r;
    }
    r
}

/// Last nonzero element of the subresultant remainder sequence of two
/// polynomials with positive degree in `v`.
fn subresultant_gcd(p: &Poly, q: &Poly, v: usize) -> Poly {
    let (mut a, mut b) = if p.degree_in(v) >= q.degree_in(v) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let one = Poly::one(p.vars());
    let mut g = one.clone();
    let mut h = one;
    loop {
        let d = a.degree_in(v) - b.degree_in(v);
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return b;
        }
        if r.degree_in(v) == 0 {
            return Poly::one(p.vars());
        }
        let denom = &g * &h.pow(d);
        a = b;
        b = r.div_exact(&denom).expect("subresultant division is exact");
        g = lc_in(&a, v);
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use crate::polyq::{parse_with_vars, var_list, Poly};

    fn p(s: &str) -> Poly {
        parse_with_vars(s, &var_list(&["x", "y", "z"])).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2 - y^2").gcd(&p("x - y")).unwrap(), p("x - y"));
        assert_eq!(p("x^2").gcd(&p("y^2")).unwrap(), p("1"));
        let g = p("(x + y)^2*z").gcd(&p("(x + y)*z^2")).unwrap();
        // Oracle: exact division of both arguments, and the cofactors are coprime.
        let a = p("(x + y)^2*z").div_exact(&g).unwrap();
        let b = p("(x + y)*z^2").div_exact(&g).unwrap();
        assert!(a.gcd(&b).unwrap().is_constant());
        assert_eq!(g, p("x*z + y*z"));
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(Poly::zero(p("x").vars()).gcd(&p("2*x + 4")).unwrap(), p("x + 2"));
    }

    #[test]
    fn squarefree() {
        assert!(!p("x^2*y").is_squarefree().unwrap());
        assert!(p("x^2 - y^2").is_squarefree().unwrap());
        let sq = p("x + y + z").pow(2);
        assert!(!sq.is_squarefree().unwrap());
        assert_eq!(sq.squarefree_part(), p("x + y + z"));
        assert!(Poly::zero(p("x").vars()).is_squarefree().is_err());
        // factors free of some variable
        assert!(p("x*y").is_squarefree().unwrap());
        assert!(p("(x^2 + y^2 - z^2)*(x - 2*z)*(y - z)").is_squarefree().unwrap());
        assert_eq!(p("x*y").squarefree_part(), p("x*y"));
        let f = p("(x - z)^3*y^2*(y + z)");
        assert!(!f.is_squarefree().unwrap());
        assert_eq!(f.squarefree_part(), p("(x - z)*y*(y + z)").monic());
    }

    #[test]
    fn gcd_of_dense_products() {
        let common = p("x*y - z^2 + 3");
        let a = &common * &p("x^3 + y*z + 1");
        let b = &common * &p("y^2 - x*z - 2");
        assert_eq!(a.gcd(&b).unwrap(), common.monic());
    }
}
