//! Surface double points via the splitting lemma: squares are split off the
//! quadratic part one variable at a time, the rest of the germ being carried
//! as a power series truncated at a fixed total degree.

use num_traits::Zero;

use super::{classify_curve_germ, multiplicity, ClassifyError, SingularityType};
use crate::polyq::{int, Poly, Rational};

pub const DEFAULT_ORDER: u32 = 16;

struct Step {
    before: Poly,
    var: usize,
    phi: Poly,
}

/// Result of splitting off the nondegenerate quadratic part.
pub struct Splitting {
    /// Rank of the quadratic part.
    pub rank: usize,
    /// Germ in the remaining variables, truncated at `order`.
    pub residual: Poly,
    pub order: u32,
    input_truncated: bool,
    steps: Vec<Step>,
}

impl Splitting {
    /// True when no truncation was needed, so the residual is exact.
    pub fn is_exact(&self) -> bool {
        if self.input_truncated {
            return false;
        }
        self.steps.iter().all(|s| {
            if s.phi.total_degree() >= self.order {
                return false;
            }
            // too large to expand; report inexact rather than compute
            let d = s.phi.total_degree();
            let bound = s.before.terms().map(|(m, _)| m.degree() - m.exps()[s.var] + m.exps()[s.var] * d).max();
            if bound.unwrap_or(0) > 2 * self.order {
                return false;
            }
            let images = images_with(&s.before, s.var, &s.phi);
            s.before.derivative(s.var).compose(&images).is_zero()
                && s.before.compose(&images).total_degree() <= self.order
        })
    }
}

fn images_with(g: &Poly, var: usize, phi: &Poly) -> Vec<Poly> {
    (0..g.nvars()).map(|i| if i == var { phi.clone() } else { Poly::var(g.vars(), i) }).collect()
}

fn square_coeff(q: &Poly, i: usize) -> Rational {
    let mut e = vec![0; q.nvars()];
    e[i] = 2;
    q.coeff(&e)
}

/// Splits squares off `f` until the quadratic part of the residual vanishes.
pub fn split_quadratic(f: &Poly, order: u32) -> Splitting {
    let n = f.nvars();
    let mut g = f.truncate(order);
    let input_truncated = g != *f;
    let mut steps = Vec::new();
    let mut split = vec![false; n];
    loop {
        let q = g.homogeneous_part(2);
        if q.is_zero() {
            break;
        }
        let u = match (0..n).find(|&i| !square_coeff(&q, i).is_zero()) {
            Some(u) => u,
            None => {
                // only mixed terms: shear x_j -> x_j + x_i on the first one
                let (i, j) = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| {
                        let mut e = vec![0; n];
                        e[i] = 1;
                        e[j] = 1;
                        !q.coeff(&e).is_zero()
                    })
                    .expect("nonzero quadratic part has a term");
                let images: Vec<Poly> = (0..n)
                    .map(|k| {
                        let x = Poly::var(g.vars(), k);
                        if k == j {
                            &x + &Poly::var(g.vars(), i)
                        } else {
                            x
                        }
                    })
                    .collect();
                g = g.compose_truncated(&images, order);
                i
            }
        };
        let two_c = square_coeff(&g.homogeneous_part(2), u) * int(2);
        let gu = g.derivative(u);
        let mut phi = Poly::zero(g.vars());
        for _ in 0..=order + 1 {
            let val = gu.compose_truncated(&images_with(&g, u, &phi), order);
            if val.is_zero() {
                break;
            }
            phi = (&phi - &val.scale(&two_c.recip())).truncate(order);
        }
        let h = g.compose_truncated(&images_with(&g, u, &phi), order);
        steps.push(Step { before: g, var: u, phi });
        split[u] = true;
        g = h;
    }
    let keep: Vec<usize> = (0..n).filter(|&i| !split[i]).collect();
    Splitting { rank: n - keep.len(), residual: g.restrict(&keep), order, input_truncated, steps }
}

/// ADE recognition for a surface germ `f(x, y, z)` at the origin, working
/// with the jet of order `order`.
pub fn classify_surface_double_point(f: &Poly, order: u32) -> Result<SingularityType, ClassifyError> {
    if f.nvars() != 3 {
        return Err(ClassifyError::Arity { expected: 3, got: f.nvars() });
    }
    match multiplicity(f)? {
        0 => return Err(ClassifyError::NotAtOrigin),
        1 => return Ok(SingularityType::Smooth),
        2 => {}
        _ => return Ok(SingularityType::NotSimple),
    }
    let s = split_quadratic(f, order);
    let undetermined = Err(ClassifyError::Undetermined { order });
    let h = &s.residual;
    match s.rank {
        3 => Ok(SingularityType::A(1)),
        2 => {
            if h.is_zero() {
                return if s.is_exact() { Ok(SingularityType::NonIsolated) } else { undetermined };
            }
            Ok(SingularityType::A(h.min_degree() - 1))
        }
        1 => {
            if h.is_zero() {
                return if s.is_exact() { Ok(SingularityType::NonIsolated) } else { undetermined };
            }
            let m = h.min_degree();
            if m >= 4 && !s.is_exact() {
                return Ok(SingularityType::NotSimple);
            }
            match classify_curve_germ(h)? {
                t if t.is_ade() => {
                    if t.milnor().is_some_and(|mu| mu < order) {
                        Ok(t)
                    } else {
                        undetermined
                    }
                }
                SingularityType::NotSimple if m >= 4 || order >= 9 => Ok(SingularityType::NotSimple),
                SingularityType::NonIsolated if s.is_exact() => Ok(SingularityType::NonIsolated),
                SingularityType::NonIsolated if m >= 4 => Ok(SingularityType::NotSimple),
                SingularityType::NonIsolated if order >= 9 && triple_tangent(h)? => Ok(SingularityType::NotSimple),
                _ => undetermined,
            }
        }
        _ => unreachable!("a double point has a nonzero quadratic part"),
    }
}

fn triple_tangent(h: &Poly) -> Result<bool, ClassifyError> {
    let cone = h.homogeneous_part(3);
    Ok(cone.derivative(0).gcd(&cone.derivative(1))?.total_degree() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{parse_with_vars, var_list};
    use SingularityType::*;

    fn s(src: &str) -> Result<SingularityType, ClassifyError> {
        classify_surface_double_point(&parse_with_vars(src, &var_list(&["x", "y", "z"])).unwrap(), DEFAULT_ORDER)
    }

    #[test]
    fn double_points() {
        assert_eq!(s("x^2 + y^2 + z^2").unwrap(), A(1));
        assert_eq!(s("x^2 + y^2 + z^4").unwrap(), A(3));
        assert_eq!(s("z^2 - (x*y^2 + x^4)").unwrap(), D(5));
        assert_eq!(s("x*y + z^5").unwrap(), A(4));
        assert_eq!(s("x^2 + y^3 + z^4").unwrap(), E(6));
        assert_eq!(s("x + y^2").unwrap(), Smooth);
        assert_eq!(s("x^3 + y^3 + z^3").unwrap(), NotSimple);
        assert_eq!(s("x^2 + y^2").unwrap(), NonIsolated);
        assert_eq!(s("x^2").unwrap(), NonIsolated);
    }

    #[test]
    fn coupled_terms_are_split() {
        // (x + y^2)^2 + z^2 + y^5 is A_4 after x -> x - y^2
        assert_eq!(s("x^2 + 2*x*y^2 + y^4 + z^2 + y^5").unwrap(), A(4));
        // x^2 + x*z^3 + y^2 + z^7: completing the square gives z^7 - z^6/4, so A_5
        assert_eq!(s("x^2 + x*z^3 + y^2 + z^7").unwrap(), A(5));
    }

    #[test]
    fn truncation_can_leave_the_type_undetermined() {
        let f = parse_with_vars("x^2 + y^2 + z^20", &var_list(&["x", "y", "z"])).unwrap();
        assert_eq!(classify_surface_double_point(&f, 16), Err(ClassifyError::Undetermined { order: 16 }));
        assert_eq!(classify_surface_double_point(&f, 24).unwrap(), A(19));
        // (x + y*z/2)^2 + y^2*(1 - z^2/2): both completions are polynomial
        let g = parse_with_vars("x^2 + x*y*z + y^2 - z^2*y^2/4", &var_list(&["x", "y", "z"])).unwrap();
        assert_eq!(classify_surface_double_point(&g, 12).unwrap(), NonIsolated);
    }
}
