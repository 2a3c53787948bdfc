//! Rational solutions of polynomial systems with finitely many solutions,
//! by successive resultants down to a univariate eliminant, rational root
//! extraction and back substitution.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use super::{classify_germ, ClassifyError, SingularityType};
use crate::polyq::{fmt_rational, rational_roots, Poly, PolyError, Rational, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("the solution set is positive-dimensional")]
    PositiveDimensional,
    #[error("the polynomial is not reduced")]
    NonReduced,
    #[error("expected a plane curve or a surface, got {0} variables")]
    Dimension(usize),
    #[error("a projective equation must be homogeneous")]
    NotHomogeneous,
    #[error("the point is not on the variety")]
    NotOnVariety,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Rational solutions of a zero-dimensional system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solutions {
    pub points: Vec<Vec<Rational>>,
    /// False when some eliminant had factors without rational roots.
    pub complete: bool,
    /// Those factors, as `var: polynomial`.
    pub unresolved: Vec<String>,
}

/// Common rational zeros of `eqs`, all over one variable list.
pub fn solve_system(eqs: &[Poly]) -> Result<Solutions, SolveError> {
    let Some(first) = eqs.first() else {
        return Err(SolveError::PositiveDimensional);
    };
    let n = first.nvars();
    for e in eqs {
        if e.vars() != first.vars() {
            return Err(PolyError::VariableMismatch { left: first.vars().join(","), right: e.vars().join(",") }.into());
        }
    }
    let mut solver = Solver { unresolved: BTreeSet::new() };
    let free: Vec<usize> = (0..n).collect();
    let partial = solver.solve(eqs.to_vec(), &free)?;
    let mut points: Vec<Vec<Rational>> = partial
        .into_iter()
        .map(|assign| {
            let mut pt = vec![Rational::zero(); n];
            for (i, v) in assign {
                pt[i] = v;
            }
            pt
        })
        .collect();
    points.sort();
    points.dedup();
    Ok(Solutions { points, complete: solver.unresolved.is_empty(), unresolved: solver.unresolved.into_iter().collect() })
}

type Assignment = Vec<(usize, Rational)>;

struct Solver {
    unresolved: BTreeSet<String>,
}

fn uses_free(p: &Poly, free: &[usize]) -> Vec<usize> {
    free.iter().copied().filter(|&i| p.degree_in(i) > 0).collect()
}

fn fix(p: &Poly, i: usize, value: &Rational) -> Poly {
    p.set_var(i, value).with_vars(p.vars()).expect("remaining variables are kept")
}

fn normalize(eqs: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        let e = if e.is_constant() { Poly::one(e.vars()) } else { e.squarefree_part().primitive_integer() };
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

fn is_variable_multiple(p: &Poly, i: usize) -> bool {
    p.terms().all(|(m, _)| m.exps()[i] > 0)
}

fn univariate(p: &Poly, i: usize) -> UniPoly {
    p.to_univariate(i).expect("polynomial in a single variable")
}

fn univariate_gcd(polys: &[UniPoly]) -> UniPoly {
    polys.iter().fold(UniPoly::new(Vec::new()), |g, p| g.gcd(p))
}

impl Solver {
    fn solve(&mut self, eqs: Vec<Poly>, free: &[usize]) -> Result<Vec<Assignment>, SolveError> {
        let eqs = normalize(eqs);
        if eqs.iter().any(Poly::is_constant) {
            return Ok(Vec::new());
        }
        if free.is_empty() {
            return Ok(vec![Vec::new()]);
        }
        if eqs.is_empty() {
            return Err(SolveError::PositiveDimensional);
        }

        // x_v * h = 0 splits into x_v = 0 and h = 0
        for (k, e) in eqs.iter().enumerate() {
            for &v in free {
                if is_variable_multiple(e, v) && e.total_degree() > 1 {
                    let xv = Poly::var(e.vars(), v);
                    let zero_branch: Vec<Poly> = eqs.iter().map(|p| fix(p, v, &Rational::zero())).collect();
                    let rest: Vec<usize> = free.iter().copied().filter(|&i| i != v).collect();
                    let mut out: Vec<Assignment> = self
                        .solve(zero_branch, &rest)?
                        .into_iter()
                        .map(|mut a| {
                            a.push((v, Rational::zero()));
                            a
                        })
                        .collect();
                    let mut other = eqs.clone();
                    other[k] = e.div_exact(&xv)?;
                    out.extend(self.solve(other, free)?);
                    return Ok(out);
                }
            }
        }

        // a variable occurring linearly with a constant coefficient
        for (k, e) in eqs.iter().enumerate() {
            for &v in free {
                if e.degree_in(v) != 1 {
                    continue;
                }
                let coeffs = e.coefficients_in(v);
                if !coeffs[1].is_constant() {
                    continue;
                }
                let value = coeffs[0].scale(&(-coeffs[1].constant_term().recip()));
                let images: Vec<Poly> =
                    (0..e.nvars()).map(|i| if i == v { value.clone() } else { Poly::var(e.vars(), i) }).collect();
                let reduced: Vec<Poly> =
                    eqs.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, p)| p.compose(&images)).collect();
                let rest: Vec<usize> = free.iter().copied().filter(|&i| i != v).collect();
                let sols = self.solve(reduced, &rest)?;
                let n = e.nvars();
                return Ok(sols
                    .into_iter()
                    .map(|mut a| {
                        let mut pt = vec![Rational::zero(); n];
                        for (i, x) in &a {
                            pt[*i] = x.clone();
                        }
                        let x = value.eval(&pt).expect("arity");
                        a.push((v, x));
                        a
                    })
                    .collect());
            }
        }

        let (target, eliminant) = match free.iter().copied().find(|&v| eqs.iter().any(|e| uses_free(e, free) == [v])) {
            Some(v) => {
                let us: Vec<UniPoly> =
                    eqs.iter().filter(|e| uses_free(e, free) == [v]).map(|e| univariate(e, v)).collect();
                (v, univariate_gcd(&us))
            }
            None => {
                let target = *free.last().expect("free variables");
                (target, self.eliminant(&eqs, free, target)?)
            }
        };
        if eliminant.is_zero() {
            return Err(SolveError::PositiveDimensional);
        }
        let split = rational_roots(&eliminant);
        if split.has_irrational_part() {
            let vars = eqs[0].vars().clone();
            let p = Poly::from_univariate(&vars, target, &split.residual);
            self.unresolved.insert(format!("{}: {}", vars[target], p));
        }
        let rest: Vec<usize> = free.iter().copied().filter(|&i| i != target).collect();
        let mut out = Vec::new();
        for r in split.roots {
            let sub: Vec<Poly> = eqs.iter().map(|p| fix(p, target, &r)).collect();
            for mut a in self.solve(sub, &rest)? {
                a.push((target, r.clone()));
                out.push(a);
            }
        }
        Ok(out)
    }

    /// A nonzero univariate polynomial in `target` vanishing at the
    /// `target`-coordinate of every common zero.
    fn eliminant(&mut self, eqs: &[Poly], free: &[usize], target: usize) -> Result<UniPoly, SolveError> {
        let eqs = normalize(eqs.to_vec());
        if eqs.iter().any(Poly::is_constant) {
            return Ok(UniPoly::new(vec![Rational::one()]));
        }
        let others: Vec<usize> =
            free.iter().copied().filter(|&i| i != target && eqs.iter().any(|e| e.degree_in(i) > 0)).collect();
        if others.is_empty() {
            let us: Vec<UniPoly> = eqs.iter().map(|e| univariate(e, target)).collect();
            let g = univariate_gcd(&us);
            if g.is_zero() {
                return Err(SolveError::PositiveDimensional);
            }
            return Ok(g);
        }
        // eliminate the variable of smallest maximal degree
        let w = *others
            .iter()
            .min_by_key(|&&i| (eqs.iter().map(|e| e.degree_in(i)).max().unwrap_or(0), i))
            .expect("nonempty");
        let rest: Vec<usize> = free.iter().copied().filter(|&i| i != w).collect();
        let (with, without): (Vec<Poly>, Vec<Poly>) = eqs.iter().cloned().partition(|e| e.degree_in(w) > 0);
        if with.len() == 1 {
            if without.is_empty() {
                return Err(SolveError::PositiveDimensional);
            }
            return self.eliminant(&without, &rest, target);
        }
        let k0 = (0..with.len()).min_by_key(|&k| (with[k].degree_in(w), with[k].num_terms())).expect("nonempty");
        let e0 = &with[k0];
        let mut next = without.clone();
        for (k, ei) in with.iter().enumerate() {
            if k == k0 {
                continue;
            }
            let r = e0.resultant(ei, w)?;
            if r.is_zero() {
                // V(e0, ei) = V(g) + V(e0/g, ei/g) for g = gcd(e0, ei)
                let g = e0.gcd(ei)?;
                let others_eqs: Vec<Poly> =
                    eqs.iter().filter(|p| *p != e0 && *p != ei).cloned().collect();
                let mut a = others_eqs.clone();
                a.push(g.clone());
                let mut b = others_eqs;
                b.push(e0.div_exact(&g)?);
                b.push(ei.div_exact(&g)?);
                let ua = self.eliminant(&a, free, target)?;
                let ub = self.eliminant(&b, free, target)?;
                return Ok(ua.mul(&ub).squarefree_part());
            }
            next.push(r);
        }
        self.eliminant(&next, &rest, target)
    }
}

/// Where a polynomial lives for [`find_rational_singular_points`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// Affine plane or 3-space; the polynomial's own coordinates.
    Affine,
    /// Projective plane or 3-space; the polynomial is homogeneous.
    Projective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularPoint {
    #[serde(serialize_with = "ser_point")]
    pub coords: Vec<Rational>,
    /// `None` when the germ could not be classified at the working order.
    pub germ_type: Option<SingularityType>,
}

fn ser_point<S: serde::Serializer>(pt: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(pt.iter().map(fmt_rational))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularSearch {
    pub points: Vec<SingularPoint>,
    pub complete: bool,
    pub unresolved: Vec<String>,
}

/// Germ of `f` at `pt`, moved to the origin. Projective points are read in
/// the chart of their first nonzero coordinate.
pub fn germ_at(f: &Poly, pt: &[Rational], ambient: Ambient) -> Result<Poly, SolveError> {
    if pt.len() != f.nvars() {
        return Err(PolyError::ArityMismatch { expected: f.nvars(), got: pt.len() }.into());
    }
    let germ = match ambient {
        Ambient::Affine => f.translate(pt)?,
        Ambient::Projective => {
            let j = pt.iter().position(|c| !c.is_zero()).ok_or(SolveError::NotOnVariety)?;
            let scale = pt[j].recip();
            let mut rest: Vec<Rational> = pt.iter().map(|c| c * &scale).collect();
            rest.remove(j);
            f.set_var(j, &Rational::one()).translate(&rest)?
        }
    };
    if !germ.constant_term().is_zero() {
        return Err(SolveError::NotOnVariety);
    }
    Ok(germ)
}

/// Classifies the germ of `f` at a point of `{f = 0}`.
pub fn classify_at(f: &Poly, pt: &[Rational], ambient: Ambient, order: u32) -> Result<SingularityType, SolveError> {
    Ok(classify_germ(&germ_at(f, pt, ambient)?, order)?)
}

fn check_dimension(f: &Poly, ambient: Ambient) -> Result<(), SolveError> {
    let dim = match ambient {
        Ambient::Affine => f.nvars(),
        Ambient::Projective => f.nvars().saturating_sub(1),
    };
    if dim != 2 && dim != 3 {
        return Err(SolveError::Dimension(dim));
    }
    if ambient == Ambient::Projective && !f.is_homogeneous() {
        return Err(SolveError::NotHomogeneous);
    }
    Ok(())
}

/// Rational singular points of `{f = 0}`, each with its germ type.
pub fn find_rational_singular_points(f: &Poly, ambient: Ambient, order: u32) -> Result<SingularSearch, SolveError> {
    check_dimension(f, ambient)?;
    if !f.is_squarefree()? {
        return Err(SolveError::NonReduced);
    }
    let n = f.nvars();
    let grad = f.gradient();
    let mut raw = Vec::new();
    let mut complete = true;
    let mut unresolved = Vec::new();
    match ambient {
        Ambient::Affine => {
            let mut eqs = vec![f.clone()];
            eqs.extend(grad);
            let s = solve_system(&eqs)?;
            raw = s.points;
            complete = s.complete;
            unresolved = s.unresolved;
        }
        Ambient::Projective => {
            // chart i: x_0 = .. = x_{i-1} = 0, x_i = 1
            for i in 0..n {
                let restrict = |p: &Poly| {
                    let mut q = p.set_var(i, &Rational::one());
                    for j in (0..i).rev() {
                        q = q.set_var(j, &Rational::zero());
                    }
                    q
                };
                let eqs: Vec<Poly> = grad.iter().map(restrict).collect();
                let found = solve_system(&eqs)?;
                complete &= found.complete;
                unresolved.extend(found.unresolved.into_iter().map(|u| format!("chart {}: {u}", f.vars()[i])));
                for p in found.points {
                    let mut pt = vec![Rational::zero(); i];
                    pt.push(Rational::one());
                    pt.extend(p);
                    raw.push(pt);
                }
            }
        }
    }
    let mut points = Vec::with_capacity(raw.len());
    for pt in raw {
        let germ_type = match classify_at(f, &pt, ambient, order) {
            Ok(t) => Some(t),
            Err(SolveError::Classify(ClassifyError::Undetermined { .. })) => None,
            Err(e) => return Err(e),
        };
        points.push(SingularPoint { coords: pt, germ_type });
    }
    Ok(SingularSearch { points, complete, unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{int, parse_with_vars, rat, var_list};
    use SingularityType::*;

    fn p(s: &str, vars: &[&str]) -> Poly {
        parse_with_vars(s, &var_list(vars)).unwrap()
    }

    #[test]
    fn solves_small_systems() {
        let v = ["x", "y"];
        let s = solve_system(&[p("x^2 - 1", &v), p("y - x", &v)]).unwrap();
        assert_eq!(s.points, vec![vec![int(-1), int(-1)], vec![int(1), int(1)]]);
        assert!(s.complete);
        let s = solve_system(&[p("x^2 + y^2 - 5", &v), p("x*y - 2", &v)]).unwrap();
        assert_eq!(s.points.len(), 4);
        let s = solve_system(&[p("x^2 - 2", &v), p("y", &v)]).unwrap();
        assert!(s.points.is_empty());
        assert!(!s.complete);
        assert!(matches!(solve_system(&[p("x - y", &v)]), Err(SolveError::PositiveDimensional)));
        let s = solve_system(&[p("3*x^2 - 2*x*y - 1", &v), p("2*y^2 + x - 3", &v)]).unwrap();
        for pt in &s.points {
            assert!(p("3*x^2 - 2*x*y - 1", &v).eval(pt).unwrap().is_zero());
        }
        assert!(s.points.contains(&vec![int(1), int(1)]));
    }

    #[test]
    fn common_components_are_split() {
        let v = ["x", "y", "z"];
        let eqs = [p("(x - 1)*(y - z)", &v), p("(x - 1)*(y + z - 2)", &v), p("z^2 - 1", &v)];
        // x = 1 is a whole plane of solutions meeting z = +-1 in lines
        assert!(matches!(solve_system(&eqs), Err(SolveError::PositiveDimensional)));
        let eqs = [p("(x*y - 1)*(y - z)", &v), p("(x*y - 1)*(y + z - 2)", &v), p("x - 2", &v), p("z - 1/2", &v)];
        let s = solve_system(&eqs).unwrap();
        assert_eq!(s.points, vec![vec![int(2), rat(1, 2), rat(1, 2)]]);
    }

    #[test]
    fn plane_sextics() {
        let v = ["a", "b", "c"];
        let s = find_rational_singular_points(&p("a^6 + b^6 + c^6", &v), Ambient::Projective, 16).unwrap();
        assert!(s.points.is_empty() && s.complete);
        let s = find_rational_singular_points(&p("a^2*c^4 + b^6 + a^6", &v), Ambient::Projective, 16).unwrap();
        assert_eq!(s.points, vec![SingularPoint { coords: vec![int(0), int(0), int(1)], germ_type: Some(A(5)) }]);
    }

    #[test]
    fn planted_node_on_a_quartic_surface() {
        let v = ["a", "b", "c", "d"];
        let f = p("d^2*(a*b + b*c + 2*c*a + a^2) + a^4 + b^4 + c^4", &v);
        let s = find_rational_singular_points(&f, Ambient::Projective, 16).unwrap();
        assert!(s.points.contains(&SingularPoint {
            coords: vec![int(0), int(0), int(0), int(1)],
            germ_type: Some(A(1)),
        }));
    }

    #[test]
    fn affine_curves_and_errors() {
        let v = ["x", "y"];
        let s = find_rational_singular_points(&p("y^2 - x^3 + x^2", &v), Ambient::Affine, 16).unwrap();
        assert_eq!(s.points, vec![SingularPoint { coords: vec![int(0), int(0)], germ_type: Some(A(1)) }]);
        assert!(matches!(
            find_rational_singular_points(&p("(x - y)^2*(x + 1)", &v), Ambient::Affine, 16),
            Err(SolveError::NonReduced)
        ));
        assert!(matches!(
            find_rational_singular_points(&p("x^2 + y", &v), Ambient::Projective, 16),
            Err(SolveError::Dimension(1))
        ));
    }
}
