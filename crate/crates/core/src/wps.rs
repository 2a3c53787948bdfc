//! Weighted projective spaces `P(w_0, ..., w_n)`: homogeneity, monomial
//! bases, orbifold strata, quasi-smoothness and adjunction numerics.

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::polyq::{Monomial, Poly, PolyError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WpsError {
    #[error("a weighted projective space needs at least two coordinates")]
    TooFewCoordinates,
    #[error("weights must be positive")]
    ZeroWeight,
    #[error("P{0:?} is not well-formed")]
    IllFormed(Vec<u32>),
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("polynomial is not weighted homogeneous")]
    NotHomogeneous,
    #[error("point is not on the hypersurface")]
    NotOnHypersurface,
    #[error("chart index {0} is out of range")]
    Chart(usize),
    #[error("anticanonical amplitude {0} is not positive")]
    Amplitude(i64),
    #[error("{coords} coordinates cut by {degrees} equations do not give a surface")]
    NotSurface { coords: usize, degrees: usize },
    #[error("only hypersurfaces and complete intersections of two equations are supported")]
    TooManyDegrees,
    #[error("genus must be at least 2, got {0}")]
    Genus(i64),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedSpace {
    weights: Vec<u32>,
}

/// Locus where exactly the coordinates in `support` may be nonzero, with
/// cyclic isotropy of order `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub support: Vec<usize>,
    pub order: u32,
}

impl Stratum {
    /// `(0:0:1:0)` for a coordinate point, `{x=y=0}` otherwise.
    pub fn describe(&self, names: &[&str]) -> String {
        let n = names.len();
        if self.support.len() == 1 {
            let coords: Vec<&str> =
                (0..n).map(|i| if self.support.contains(&i) { "1" } else { "0" }).collect();
            format!("({})", coords.join(":"))
        } else {
            let zero: Vec<&str> = (0..n).filter(|i| !self.support.contains(i)).map(|i| names[i]).collect();
            format!("{{{}=0}}", zero.join("="))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSquare {
    pub k_square: Rational,
    pub g: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusSystems {
    pub dim_cg: i64,
    pub cg_square: i64,
    pub dim_dg: i64,
    pub dg_square: i64,
}

fn gcd_all<I: IntoIterator<Item = u32>>(it: I) -> u32 {
    it.into_iter().fold(0, |a, b| a.gcd(&b))
}

impl WeightedSpace {
    pub fn new(weights: Vec<u32>) -> Result<Self, WpsError> {
        if weights.len() < 2 {
            return Err(WpsError::TooFewCoordinates);
        }
        if weights.contains(&0) {
            return Err(WpsError::ZeroWeight);
        }
        Ok(WeightedSpace { weights })
    }

    /// Ordinary projective space of dimension `n`.
    pub fn projective(n: usize) -> Self {
        WeightedSpace { weights: vec![1; n + 1] }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn num_coords(&self) -> usize {
        self.weights.len()
    }

    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    /// Every `n` of the `n + 1` weights are coprime.
    pub fn is_well_formed(&self) -> bool {
        (0..self.num_coords()).all(|skip| {
            gcd_all(self.weights.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &w)| w)) == 1
        })
    }

    fn check_arity(&self, p: &Poly) -> Result<(), WpsError> {
        if p.nvars() != self.num_coords() {
            return Err(WpsError::Arity { expected: self.num_coords(), got: p.nvars() });
        }
        Ok(())
    }

    /// Common weighted degree of all terms, `None` when they disagree or
    /// the polynomial is zero.
    pub fn weighted_degree(&self, p: &Poly) -> Result<Option<u64>, WpsError> {
        self.check_arity(p)?;
        let mut degs = p.terms().map(|(m, _)| m.weighted_degree(&self.weights));
        let Some(first) = degs.next() else { return Ok(None) };
        Ok(degs.all(|d| d == first).then_some(first))
    }

    /// Exponent vectors of weighted degree `d`, in descending graded-lex order.
    pub fn monomial_basis(&self, d: u64) -> Vec<Vec<u32>> {
        fn rec(w: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial::new(cur.clone()));
                }
                return;
            }
            let mut e = 0u32;
            loop {
                let used = e as u64 * w[i] as u64;
                if used > left {
                    break;
                }
                cur.push(e);
                rec(w, i + 1, left - used, cur, out);
                cur.pop();
                e += 1;
            }
        }
        let mut out = Vec::new();
        rec(&self.weights, 0, d, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out.into_iter().map(|m| m.exps().to_vec()).collect()
    }

    /// Maximal coordinate strata with nontrivial isotropy.
    pub fn singular_strata(&self) -> Result<Vec<Stratum>, WpsError> {
        if !self.is_well_formed() {
            return Err(WpsError::IllFormed(self.weights.clone()));
        }
        let n = self.num_coords();
        let mut found: Vec<(u32, u32)> = Vec::new();
        for mask in 1u32..(1 << n) {
            let m = gcd_all((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.weights[i]));
            if m > 1 {
                found.push((mask, m));
            }
        }
        let mut out: Vec<Stratum> = found
            .iter()
            .filter(|&&(mask, m)| !found.iter().any(|&(o, om)| om == m && o != mask && o & mask == mask))
            .map(|&(mask, m)| Stratum { support: (0..n).filter(|i| mask >> i & 1 == 1).collect(), order: m })
            .collect();
        out.sort_by(|a, b| (a.support.len(), &a.support).cmp(&(b.support.len(), &b.support)));
        Ok(out)
    }

    /// `K^2 = (prod d) (sum w - sum d)^2 / prod w` for a surface cut out by
    /// at most two equations, together with `g = K^2 + 1`.
    pub fn k_square(&self, degrees: &[u64]) -> Result<KSquare, WpsError> {
        if degrees.len() > 2 {
            return Err(WpsError::TooManyDegrees);
        }
        if self.num_coords() != degrees.len() + 3 {
            return Err(WpsError::NotSurface { coords: self.num_coords(), degrees: degrees.len() });
        }
        let sw: i64 = self.weights.iter().map(|&w| w as i64).sum();
        let sd: i64 = degrees.iter().map(|&d| d as i64).sum();
        let amp = sw - sd;
        if amp <= 0 {
            return Err(WpsError::Amplitude(amp));
        }
        let pd: Rational = degrees.iter().map(|&d| Rational::from_integer(d.into())).product();
        let pw: Rational = self.weights.iter().map(|&w| Rational::from_integer(w.into())).product();
        let a = Rational::from_integer(amp.into());
        let k2 = pd * &a * &a / pw;
        let g = &k2 + Rational::one();
        Ok(KSquare { k_square: k2, g })
    }
}

/// Weighted homogeneous polynomial on a weighted projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedForm {
    space: WeightedSpace,
    poly: Poly,
    degree: u64,
}

impl WeightedForm {
    pub fn new(space: WeightedSpace, poly: Poly) -> Result<Self, WpsError> {
        let degree = space.weighted_degree(&poly)?.ok_or(WpsError::NotHomogeneous)?;
        Ok(WeightedForm { space, poly, degree })
    }

    pub fn space(&self) -> &WeightedSpace {
        &self.space
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Whether the affine cone is smooth over the point with coordinate
    /// `chart` equal to 1 and the remaining coordinates `pt`, in order.
    pub fn quasi_smooth_at(&self, chart: usize, pt: &[Rational]) -> Result<bool, WpsError> {
        let n = self.space.num_coords();
        if chart >= n {
            return Err(WpsError::Chart(chart));
        }
        if pt.len() + 1 != n {
            return Err(WpsError::Arity { expected: n - 1, got: pt.len() });
        }
        let mut cone = pt.to_vec();
        cone.insert(chart, Rational::one());
        self.quasi_smooth_at_cone(&cone)
    }

    /// Same test at an explicit nonzero point of the affine cone.
    pub fn quasi_smooth_at_cone(&self, cone: &[Rational]) -> Result<bool, WpsError> {
        if !self.poly.eval(cone)?.is_zero() {
            return Err(WpsError::NotOnHypersurface);
        }
        for d in self.poly.gradient() {
            if !d.eval(cone)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// `(dim |C_g|, C_g^2, dim |D_g|, D_g^2) = (3g-3, 4g-4, g, 2g-2)`.
pub fn genus_system_invariants(g: i64) -> Result<GenusSystems, WpsError> {
    if g < 2 {
        return Err(WpsError::Genus(g));
    }
    Ok(GenusSystems { dim_cg: 3 * g - 3, cg_square: 4 * g - 4, dim_dg: g, dg_square: 2 * g - 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{int, parse_with_vars, var_list};
    use proptest::prelude::*;

    fn space(w: &[u32]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    fn form(w: &[u32], vars: &[&str], s: &str) -> WeightedForm {
        WeightedForm::new(space(w), parse_with_vars(s, &var_list(vars)).unwrap()).unwrap()
    }

    #[test]
    fn weighted_degrees() {
        let v = var_list(&["x", "y", "z", "t"]);
        let p = |s: &str| parse_with_vars(s, &v).unwrap();
        assert_eq!(space(&[1, 1, 2, 3]).weighted_degree(&p("t^2 - z^3")).unwrap(), Some(6));
        assert_eq!(space(&[1, 1, 4, 4]).weighted_degree(&p("t^2 - z^2 - x^8")).unwrap(), Some(8));
        assert_eq!(space(&[1, 1, 1, 2]).weighted_degree(&p("x^4 + t")).unwrap(), None);
        assert!(space(&[1, 1, 2]).weighted_degree(&p("x")).is_err());
    }

    // Oracle: count solutions of e . w = d by nested loops.
    fn brute_count(w: &[u32], d: u32) -> usize {
        fn go(w: &[u32], d: u32) -> usize {
            match w.split_first() {
                None => usize::from(d == 0),
                Some((&h, rest)) => (0..=d / h).map(|k| go(rest, d - k * h)).sum(),
            }
        }
        go(w, d)
    }

    #[test]
    fn monomial_bases() {
        let b = space(&[1, 1, 2]).monomial_basis(2);
        assert_eq!(b, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]);
        assert_eq!(space(&[1, 1, 2, 3]).monomial_basis(6).len(), 23);
        assert_eq!(brute_count(&[1, 1, 2, 3], 6), 23);
        for g in 2..=12usize {
            let mut w = vec![1; g];
            w.push(2);
            assert_eq!(space(&w).monomial_basis(2).len(), g * (g + 1) / 2 + 1);
        }
    }

    #[test]
    fn strata() {
        let s = space(&[1, 1, 2, 3]).singular_strata().unwrap();
        assert_eq!(s, vec![Stratum { support: vec![2], order: 2 }, Stratum { support: vec![3], order: 3 }]);
        assert_eq!(s[0].describe(&["x", "y", "z", "t"]), "(0:0:1:0)");
        let s = space(&[1, 1, 1, 4]).singular_strata().unwrap();
        assert_eq!(s, vec![Stratum { support: vec![3], order: 4 }]);
        assert!(space(&[1, 1, 1]).singular_strata().unwrap().is_empty());
        let s = space(&[1, 1, 4, 4]).singular_strata().unwrap();
        assert_eq!(s, vec![Stratum { support: vec![2, 3], order: 4 }]);
        assert_eq!(s[0].describe(&["x", "y", "z", "t"]), "{x=y=0}");
        assert!(space(&[1, 2, 2]).singular_strata().is_err());
    }

    #[test]
    fn quasi_smoothness() {
        let f = form(&[1, 1, 2, 3], &["x", "y", "z", "t"], "t^2 - z^3");
        // chart z = 1, point t = 1 on the curve t^2 = 1
        assert!(f.quasi_smooth_at(2, &[int(0), int(0), int(1)]).unwrap());
        assert!(f.quasi_smooth_at(2, &[int(0), int(0), int(0)]).is_err());
        let fermat = form(&[1, 1, 2, 3], &["x", "y", "z", "t"], "x^6 + y^6 + z^3 + t^2");
        assert!(fermat.quasi_smooth_at(2, &[int(0), int(0), int(1)]).is_err());
        // (1 : 0 : -1 : 0)
        assert!(fermat.quasi_smooth_at(0, &[int(0), int(-1), int(0)]).unwrap());
        let sq = form(&[1, 1, 2, 3], &["x", "y", "z", "t"], "t^2");
        assert!(!sq.quasi_smooth_at(0, &[int(5), int(7), int(0)]).unwrap());
    }

    #[test]
    fn quasi_smoothness_is_chart_independent() {
        // (2 : 1 : z : t) in chart x is (1 : 1/2 : z/4 : t/8).
        let f = form(&[1, 1, 2, 3], &["x", "y", "z", "t"], "t^2 - z^3 - x^6 + 64*y^6");
        let (z, t) = (int(1), int(1));
        let in_y = f.quasi_smooth_at(1, &[int(2), z.clone(), t.clone()]).unwrap();
        let in_x = f.quasi_smooth_at(0, &[rat_(1, 2), z / int(4), t / int(8)]).unwrap();
        assert_eq!(in_x, in_y);
    }

    fn rat_(n: i64, d: i64) -> Rational {
        crate::polyq::rat(n, d)
    }

    #[test]
    fn adjunction_table() {
        let cases: [(&[u32], &[u64], i64); 5] = [
            (&[1, 1, 2, 3], &[6], 1),
            (&[1, 1, 4, 4], &[8], 2),
            (&[1, 1, 1, 2], &[4], 2),
            (&[1, 1, 1, 1, 2], &[2, 3], 3),
            (&[1, 1, 1, 4], &[5], 5),
        ];
        for (w, d, k2) in cases {
            let r = space(w).k_square(d).unwrap();
            assert_eq!(r.k_square, int(k2));
            assert_eq!(r.g, int(k2 + 1));
        }
        assert_eq!(space(&[1, 1, 4]).k_square(&[]).unwrap().k_square, int(9));
        assert!(matches!(space(&[1, 1, 1, 1]).k_square(&[4]), Err(WpsError::Amplitude(0))));
        assert!(matches!(space(&[1, 1, 1, 1]).k_square(&[2, 2]), Err(WpsError::NotSurface { .. })));
    }

    #[test]
    fn genus_systems() {
        let r = genus_system_invariants(2).unwrap();
        assert_eq!((r.dim_cg, r.cg_square, r.dim_dg, r.dg_square), (3, 4, 2, 2));
        let r = genus_system_invariants(3).unwrap();
        assert_eq!((r.dim_cg, r.cg_square, r.dim_dg, r.dg_square), (6, 8, 3, 4));
        let r = genus_system_invariants(10).unwrap();
        assert_eq!((r.dim_cg, r.cg_square, r.dim_dg, r.dg_square), (27, 36, 10, 18));
        assert!(genus_system_invariants(1).is_err());
    }

    proptest! {
        #[test]
        fn unweighting_gives_ordinary_form(
            terms in prop::collection::vec((0u32..5, 0u32..5, -9i64..10), 1..6),
        ) {
            // build F of weighted degree 4 in P(1,1,1,2) from random (a, b) with t-exponent filling
            let v = var_list(&["x", "y", "z", "t"]);
            let mut f = Poly::zero(&v);
            for (a, b, c) in terms {
                if a + b > 4 || c == 0 { continue; }
                let rest = 4 - a - b;
                let e = vec![a, b, rest % 2, rest / 2];
                f = &f + &Poly::monomial(&v, e, int(c));
            }
            prop_assume!(!f.is_zero());
            prop_assert_eq!(space(&[1, 1, 1, 2]).weighted_degree(&f).unwrap(), Some(4));
            let t = Poly::variable(&v, "t").unwrap();
            let g = f.substitute(&[("t", t.pow(2))]).unwrap();
            prop_assert!(g.is_homogeneous());
            prop_assert_eq!(g.total_degree(), 4);
        }
    }
}
