//! Complete intersections of a quadric and a cubic in P(1,1,1,1,2).

use num_traits::{One, Zero};

use super::search::{check_center, check_points, halve, Found};
use super::{
    describe, normalize_projective, power_substitute, prepare, Condition, FamilyError, FamilyId, FamilyReport,
    ReportBuilder,
};
use crate::polyq::{Poly, Rational};
use crate::singclass::{classify_surface_double_point, solve_system, ClassifyError, SingularityType, SolveError};

const ORDERS: [u32; 2] = [10, 16];

/// Rank of a quadratic form, from its symmetric matrix.
pub fn quadric_rank(q: &Poly) -> Result<usize, FamilyError> {
    let n = q.nvars();
    if !q.is_zero() && (!q.is_homogeneous() || q.total_degree() != 2) {
        return Err(FamilyError::Degree { index: 0, expected: 2, got: Some(q.total_degree().into()) });
    }
    let half = Rational::new(1.into(), 2.into());
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (mono, c) in q.terms() {
        let idx: Vec<usize> = (0..n).filter(|&i| mono.exps()[i] > 0).collect();
        match idx[..] {
            [i] => m[i][i] = c.clone(),
            [i, j] => {
                m[i][j] = c * &half;
                m[j][i] = c * &half;
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    Ok(rank(m))
}

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for k in c..cols {
                    let d = &m[r][k] * &f;
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Germ type at the origin of `{f = g = 0}` in affine 4-space: one
/// equation with a linear term is solved for that variable as a power
/// series and substituted into the other. Without any linear term the
/// point has embedding dimension four and is not a double point.
pub fn complete_intersection_germ(f: &Poly, g: &Poly, order: u32) -> Result<SingularityType, ClassifyError> {
    let n = f.nvars();
    let linear = |p: &Poly| (0..n).find(|&j| !p.coeff(&unit(n, j)).is_zero());
    let (eq, other, j) = match (linear(f), linear(g)) {
        (Some(j), _) => (f, g, j),
        (None, Some(j)) => (g, f, j),
        (None, None) => return Ok(SingularityType::NotSimple),
    };
    let vars = f.vars().clone();
    let c = eq.coeff(&unit(n, j));
    let images = |phi: &Poly| -> Vec<Poly> {
        (0..n).map(|i| if i == j { phi.clone() } else { Poly::var(&vars, i) }).collect()
    };
    let mut phi = Poly::zero(&vars);
    for _ in 0..=order {
        let val = eq.compose_truncated(&images(&phi), order);
        if val.is_zero() {
            break;
        }
        phi = (&phi - &val.scale(&c.recip())).truncate(order);
    }
    let h = other.compose_truncated(&images(&phi), order);
    let keep: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    classify_surface_double_point(&h.restrict(&keep), order)
}

fn unit(n: usize, j: usize) -> Vec<u32> {
    (0..n).map(|i| u32::from(i == j)).collect()
}

/// Classifies the complete intersection at a point of P^4, retrying at a
/// higher order when the first jet does not decide.
fn germ_at_point(fs: &Poly, gs: &Poly, pt: &[Rational]) -> Result<Option<SingularityType>, FamilyError> {
    let pt = normalize_projective(pt);
    let i = pt.iter().position(|c| !c.is_zero()).ok_or_else(|| FamilyError::PointNotOnSurface(describe(&pt)))?;
    let mut rest = pt.clone();
    rest.remove(i);
    let f = fs.set_var(i, &Rational::one()).translate(&rest)?;
    let g = gs.set_var(i, &Rational::one()).translate(&rest)?;
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Err(FamilyError::PointNotOnSurface(describe(&pt)));
    }
    for order in ORDERS {
        match complete_intersection_germ(&f, &g, order) {
            Ok(t) => return Ok(Some(t)),
            Err(ClassifyError::Undetermined { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(None)
}

/// Quadric `F` and cubic `G` in P(1,1,1,1,2), variables `x, y, z, t, u`
/// with `u` of weight 2.
///
/// The check runs on `X = {F(a,b,c,d,e^2) = G(a,b,c,d,e^2) = 0}` in P^4,
/// symmetric under `e -> -e` with centre `(0:0:0:0:1)`. The centre lies on
/// `X` exactly when `F` has no `u` term, and then the surface has index two.
/// Reported and supplied points are points of `X`.
pub fn verify_g4(f: &Poly, g: &Poly, points: &[Vec<Rational>]) -> Result<FamilyReport, FamilyError> {
    let family = FamilyId::G4CiP11112;
    let f = prepare(family, f, 0)?;
    let g = prepare(family, g, 1)?;
    let names = ["a", "b", "c", "d", "e"];
    let fs = power_substitute(&f, 4, 2, &names);
    let gs = power_substitute(&g, 4, 2, &names);
    let mut b = ReportBuilder::new(family);

    let common = fs.gcd(&gs)?;
    if common.total_degree() > 0 {
        b.fail(Condition::CommonComponent, format!("the quadric and the cubic share the factor {common}"));
        return Ok(b.finish());
    }
    let alpha = f.coeff(&[0, 0, 0, 0, 1]);
    let q = f.set_var(4, &Rational::zero());
    let q_rank = quadric_rank(&q)?;
    let full_rank = quadric_rank(&fs)?;
    b.notes.push(format!("quadric rank {full_rank}"));
    if !alpha.is_zero() {
        b.notes.push("F is linear in u, so the surface is isomorphic to a cubic surface in P^3".into());
        if q_rank < 4 {
            b.notes.push(format!("the quadric is singular (rank {full_rank}) but the centre is off the surface"));
        }
    }

    let mut found = Found::new();
    let jac = [fs.gradient(), gs.gradient()];
    let minors: Vec<Poly> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .map(|(i, j)| &(&jac[0][i] * &jac[1][j]) - &(&jac[0][j] * &jac[1][i]))
        .filter(|m| !m.is_zero())
        .collect();
    for i in 0..5 {
        let restrict = |p: &Poly| {
            let mut r = p.set_var(i, &Rational::one());
            for j in (0..i).rev() {
                r = r.set_var(j, &Rational::zero());
            }
            r
        };
        let mut eqs = vec![restrict(&fs), restrict(&gs)];
        eqs.extend(minors.iter().map(restrict));
        if eqs[0].nvars() == 0 {
            if eqs.iter().all(|e| e.is_zero()) {
                found.push((unit_point(i), None));
            }
            continue;
        }
        let sols = match solve_system(&eqs) {
            Ok(s) => s,
            Err(SolveError::PositiveDimensional) => {
                b.fail(Condition::NonIsolatedSingularities, "the singular locus is positive-dimensional");
                return Ok(b.finish());
            }
            Err(e) => return Err(FamilyError::Search(e.to_string())),
        };
        b.complete &= sols.complete;
        b.unresolved.extend(sols.unresolved.into_iter().map(|u| format!("chart {}: {u}", names[i])));
        for s in sols.points {
            let mut pt = vec![Rational::zero(); i];
            pt.push(Rational::one());
            pt.extend(s);
            found.push((pt, None));
        }
    }
    for p in points {
        if p.len() != 5 {
            return Err(FamilyError::PointArity { point: describe(p), expected: 5, got: p.len() });
        }
        let p = normalize_projective(p);
        let mut m = p.clone();
        m[4] = -m[4].clone();
        for q in [p, normalize_projective(&m)] {
            if !found.iter().any(|(r, _)| *r == q) {
                found.push((q, None));
            }
        }
    }
    let mut classified = Found::new();
    for (pt, _) in found {
        match germ_at_point(&fs, &gs, &pt)? {
            Some(SingularityType::Smooth) => b.notes.push(format!("supplied point {} is smooth", describe(&pt))),
            t => classified.push((pt, t)),
        }
    }
    classified.sort_by(|x, y| x.0.cmp(&y.0));
    classified.dedup_by(|x, y| x.0 == y.0);

    if alpha.is_zero() {
        let center = unit_point(4);
        let t = classified.iter().find(|(p, _)| *p == center).and_then(|(_, t)| *t);
        check_center(&mut b, t, &describe(&center))?;
    }
    let all = check_points(&mut b, &classified, Some(4));
    b.duval = halve(&classified, 4);
    b.doubled = Some(all);
    Ok(b.finish())
}

fn unit_point(i: usize) -> Vec<Rational> {
    (0..5).map(|j| Rational::from_integer(i64::from(i == j).into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Verdict;
    use crate::polyq::{parse_with_vars, var_list};
    use SingularityType::*;

    fn p(s: &str) -> Poly {
        parse_with_vars(s, &var_list(&["x", "y", "z", "t", "u"])).unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(quadric_rank(&p("x^2 + y^2 + z^2 + t^2 + u^2")).unwrap(), 5);
        assert_eq!(quadric_rank(&p("x*y + z*t")).unwrap(), 4);
        assert_eq!(quadric_rank(&p("(x + y)^2 + z^2")).unwrap(), 2);
        assert_eq!(quadric_rank(&p("x*y - y*x")).unwrap(), 0);
        assert!(quadric_rank(&p("x^3")).is_err());
    }

    #[test]
    fn germ_elimination() {
        let v = var_list(&["x", "y", "z", "w"]);
        let q = |s: &str| parse_with_vars(s, &v).unwrap();
        // w = -x^2, then y z + x^4 + w^2 ... = A_3
        assert_eq!(complete_intersection_germ(&q("w + x^2"), &q("y*z + w^2"), 16).unwrap(), A(3));
        assert_eq!(complete_intersection_germ(&q("x^2 + y^2 + z^2 + w^2"), &q("w + x^3"), 16).unwrap(), A(1));
        assert_eq!(complete_intersection_germ(&q("x*y"), &q("z*w"), 16).unwrap(), NotSimple);
        assert_eq!(complete_intersection_germ(&q("w + y*z"), &q("x + y^2"), 16).unwrap(), Smooth);
    }

    #[test]
    fn index_from_u_term() {
        // centre off the surface, smooth generic member
        let r = verify_g4(&p("u + x^2 + y^2 - z^2 - t^2"), &p("x^3 + y^3 + z^3 + t^3 + u*(x + y)"), &[]).unwrap();
        assert_eq!(r.index, 1);
        assert_eq!((r.k_square, r.g), (3, 4));
        let r = verify_g4(&p("x*y + z*t"), &p("x^3 + y^3 + z^3 + t^3 + u*x"), &[]).unwrap();
        assert_eq!(r.index, 2, "{r:?}");
        assert!(r.center_germ.is_some());
        assert!(r.notes.iter().any(|n| n == "quadric rank 4"));
    }

    #[test]
    fn common_component() {
        let r = verify_g4(&p("x*y"), &p("x*(z^2 + u)"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failed_condition.unwrap().condition, Condition::CommonComponent);
    }
}
