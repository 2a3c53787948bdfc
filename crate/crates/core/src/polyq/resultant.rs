
use super::{Poly, PolyError};

/// Sylvester matrix of `p` and `q` in variable `i`: `deg q` rows of `p`'s
/// coefficients (highest degree first) followed by `deg p` rows of `q`'s.
pub fn sylvester_matrix(p: &Poly, q: &Poly, i: usize) -> Vec<Vec<Poly>> {
    let m = p.degree_in(i) as usize;
    let n = q.degree_in(i) as usize;
    let size = m + n;
    let zero = Poly::zero(p.vars());
    let mut rows = Vec::with_capacity(size);
    let pc: Vec<Poly> = p.coefficients_in(i).into_iter().rev().collect();
    let qc: Vec<Poly> = q.coefficients_in(i).into_iter().rev().collect();
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in pc.iter().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in qc.iter().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

impl Poly {
    /// Resultant with respect to variable `i`, equal to the determinant of
    /// [`sylvester_matrix`] (rows of `self` first). The result does not
    /// involve `x_i` but keeps the same variable list.
    pub fn resultant(&self, other: &Poly, i: usize) -> Result<Poly, PolyError> {
        self.check_same(other)?;
        for p in [self, other] {
            if p.degree_in(i) == 0 {
                return Err(PolyError::DegreeZero(self.vars[i].clone()));
            }
        }
        Ok(subresultant(self, other, i))
    }

    pub fn resultant_by_name(&self, other: &Poly, name: &str) -> Result<Poly, PolyError> {
        let i = self
            .var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        self.resultant(other, i)
    }
}

fn lc_in(p: &Poly, v: usize) -> Poly {
    p.coefficients_in(v).pop().unwrap_or_else(|| Poly::zero(p.vars()))
}

// Collins' subresultant algorithm for the resultant, without content removal.
fn subresultant(p: &Poly, q: &Poly, v: usize) -> Poly {
    let one = Poly::one(p.vars());
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut sign = false;
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
        if a.degree_in(v) % 2 == 1 && b.degree_in(v) % 2 == 1 {
            sign = true;
        }
    }
    let mut g = one.clone();
    let mut h = one;
    loop {
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        let d = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = a.pseudo_rem(&b, v);
        let denom = &g * &h.pow(d);
        a = b;
        b = r.div_exact(&denom).expect("subresultant division is exact");
        g = lc_in(&a, v);
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact")
        };
        if b.is_zero() {
            return Poly::zero(p.vars());
        }
        if b.degree_in(v) == 0 {
            let da = a.degree_in(v);
            let lb = lc_in(&b, v);
            let res = if da == 0 {
                h
            } else {
                lb.pow(da).div_exact(&h.pow(da - 1)).expect("subresultant division is exact")
            };
            return if sign { -res } else { res };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{int, parse_with_vars, var_list, Poly};

    fn p(s: &str) -> Poly {
        parse_with_vars(s, &var_list(&["x", "y"])).unwrap()
    }

    // Independent oracle: Laplace expansion of the Sylvester determinant.
    fn det(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Poly::zero(m[0][0].vars());
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Poly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, c)| c.clone()).collect())
                .collect();
            let term = &m[0][j] * &det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p("x^2 + y").resultant(&p("x + y"), 0).unwrap(), p("y^2 + y"));
        let r = p("x - 1").resultant(&p("x + 1"), 0).unwrap();
        assert_eq!(r, p("2"));
        assert_eq!(det(&sylvester_matrix(&p("x - 1"), &p("x + 1"), 0)), p("2"));
        let q = p("x^3 - x*y + 2");
        assert!(q.resultant(&q, 0).unwrap().is_zero());
        assert!(matches!(p("y").resultant(&p("x"), 0), Err(PolyError::DegreeZero(_))));
    }

    #[test]
    fn matches_sylvester_determinant() {
        let cases = [
            ("x^3 + y*x - 2", "x^2 - y^2*x + 3"),
            ("2*x^2 + y", "x^4 - y*x^3 + x - 1"),
            ("x^2*y + x + y^3", "y*x^3 + 2*x^2 - y"),
            ("x^3 - 1", "x^3 + x"),
            ("x + y", "x^4 + y^2*x^2 + 7"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            assert_eq!(a.resultant(&b, 0).unwrap(), det(&sylvester_matrix(&a, &b, 0)), "{a} | {b}");
            assert_eq!(b.resultant(&a, 0).unwrap(), det(&sylvester_matrix(&b, &a, 0)), "{b} | {a}");
        }
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - a, x - b) = a - b under the rows-of-p-first convention.
        let r = p("x - 3").resultant(&p("x - 5"), 0).unwrap();
        assert_eq!(r.constant_term(), int(3) - int(5));
    }
}
