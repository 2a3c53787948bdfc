//! Quartics in P(1,1,1,2) and quintics in P(1,1,1,4).

use std::collections::BTreeSet;

use num_traits::Zero;

use super::search::{
    check_center, check_points, halve, merge_user_points, projective_points, weighted_chart_points, Found,
};
use super::{
    describe, power_substitute, prepare, Condition, FamilyError, FamilyId, FamilyReport, PointReport, PointRole,
    ReportBuilder,
};
use crate::dynkin::{ConfigName, Letter};
use crate::polyq::{Poly, Rational};
use crate::singclass::{Ambient, SingularityType};

/// Quartic `F(x, y, z, t)` in P(1,1,1,2).
///
/// The check runs on the quartic surface `S = F(a, b, c, d^2)` in P^3,
/// symmetric under `d -> -d` with centre `(0:0:0:1)`. Reported and supplied
/// points are points of `S`.
pub fn verify_g3b(f: &Poly, points: &[Vec<Rational>]) -> Result<FamilyReport, FamilyError> {
    let family = FamilyId::G3bP1112;
    let f = prepare(family, f, 0)?;
    let s = power_substitute(&f, 3, 2, &["a", "b", "c", "d"]);
    let mut b = ReportBuilder::new(family);
    let Some(mut found) = projective_points(&mut b, &s)? else {
        return Ok(b.finish());
    };
    merge_user_points(&mut b, &s, Ambient::Projective, points, Some(3), &mut found)?;
    let center: Vec<Rational> = (0..4).map(|i| Rational::from_integer((i == 3).into())).collect();
    if s.eval(&center)?.is_zero() {
        let t = found.iter().find(|(p, _)| *p == center).and_then(|(_, t)| *t);
        check_center(&mut b, t, &describe(&center))?;
    }
    let all = check_points(&mut b, &found, Some(3));
    b.duval = halve(&found, 3);
    b.doubled = Some(all);
    Ok(b.finish())
}

/// Du Val configurations a quintic of this family can carry.
pub fn quintic_configurations() -> BTreeSet<ConfigName> {
    ["∅", "A_4", "A_3", "A_2", "A_1", "A_2 A_1", "2A_1"].iter().map(|s| s.parse().expect("valid name")).collect()
}

/// Quintic `F(x, y, z, t)` in P(1,1,1,4), `t` of weight 4.
///
/// The vertex `(0:0:0:1)` lies on every such surface; it is a `K_1` point
/// when `F` contains `t` times a nonzero linear form, and a worse point
/// otherwise. Elsewhere the surface is read in the affine charts of `x`, `y`
/// and `z`, where its germs are classified directly. Reported and supplied
/// points are points of the surface in P(1,1,1,4).
pub fn verify_quintic(f: &Poly, points: &[Vec<Rational>]) -> Result<FamilyReport, FamilyError> {
    let family = FamilyId::G6cP1114;
    let f = prepare(family, f, 0)?;
    let mut b = ReportBuilder::new(family);
    let linear_t = f.derivative(3).homogeneous_part(1);
    let vertex: Vec<Rational> = (0..4).map(|i| Rational::from_integer((i == 3).into())).collect();
    if linear_t.is_zero() {
        b.fail(Condition::SingularAtVertex, "no term t*l(x, y, z): the vertex is not a K_1 point");
    } else {
        b.k = 1;
        b.index = 2;
        b.center_type = Some(SingularityType::K(1));
        b.index2.push(Letter::K, 1)?;
        b.points.push(PointReport { coords: vertex, role: PointRole::Center, germ_type: Some(SingularityType::K(1)) });
    }
    if !f.is_squarefree()? {
        b.fail(Condition::NotReduced, "the quintic has a repeated factor");
        return Ok(b.finish());
    }
    let Some(mut found) = weighted_chart_points(&mut b, &f, &[1, 1, 1, 4])? else {
        return Ok(b.finish());
    };
    for p in points {
        let mut extra = Found::new();
        let (i, chart_pt) = unit_chart(p)?;
        let mut rest = chart_pt.clone();
        rest.remove(i);
        merge_user_points(&mut b, &f.set_var(i, &Rational::from_integer(1.into())), Ambient::Affine, &[rest], None, &mut extra)?;
        for (mut q, t) in extra {
            q.insert(i, Rational::from_integer(1.into()));
            if !found.iter().any(|(r, _)| *r == q) {
                found.push((q, t));
            }
        }
    }
    found.sort_by(|x, y| x.0.cmp(&y.0));
    let config = check_points(&mut b, &found, None);
    if !quintic_configurations().contains(&config) {
        b.fail(Condition::UnlistedConfiguration, format!("{config} is not among the possible configurations"));
    }
    b.duval = config;
    Ok(b.finish())
}

/// Normalizes a point of P(1,1,1,4) by its first nonzero weight-one
/// coordinate.
fn unit_chart(p: &[Rational]) -> Result<(usize, Vec<Rational>), FamilyError> {
    if p.len() != 4 {
        return Err(FamilyError::PointArity { point: describe(p), expected: 4, got: p.len() });
    }
    let i = (0..3).find(|&i| !p[i].is_zero()).ok_or_else(|| FamilyError::PointNotOnSurface(describe(p)))?;
    let s = p[i].recip();
    Ok((i, vec![&p[0] * &s, &p[1] * &s, &p[2] * &s, &p[3] * num_traits::pow(s.clone(), 4)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Verdict;
    use crate::polyq::{int, parse_with_vars, var_list};
    use SingularityType::*;

    fn p(s: &str) -> Poly {
        parse_with_vars(s, &var_list(&["x", "y", "z", "t"])).unwrap()
    }

    #[test]
    fn fermat_quartic() {
        let r = verify_g3b(&p("x^4 + y^4 + z^4 + t^2"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.index, r.k, r.g, r.k_square), (1, 0, 3, 2));
        assert!(r.points.is_empty());
    }

    #[test]
    fn planted_node() {
        let r = verify_g3b(&p("(t - x^2)^2 + x^2*y^2 + x^2*z^2 + y^4 + z^4"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.duval_config.to_string(), "A_1");
        assert_eq!(r.duval_config_doubled.unwrap().to_string(), "2A_1");
        assert_eq!(r.points.len(), 2);
    }

    #[test]
    fn a3_center() {
        let r = verify_g3b(&p("t*(x^2 + y^2) + x^4 + y^4 + z^4"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.center_germ, Some(A(3)));
        assert_eq!(r.center_type, Some(K(1)));
        assert_eq!((r.k, r.index), (1, 2));
    }

    #[test]
    fn bad_center_and_mirror() {
        let r = verify_g3b(&p("t*x^2 + x^4 + y^4 + z^4"), &[]).unwrap();
        assert_eq!(r.failed_condition.unwrap().condition, Condition::CenterType);
        let r = verify_g3b(&p("t^2 + t*z^2 + (x^2 - y^2)^2 + z^4"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failed_condition.unwrap().condition, Condition::SingularOnSymmetryLocus);
    }

    #[test]
    fn contradiction_at_center() {
        let mut b = ReportBuilder::new(FamilyId::G3bP1112);
        assert!(matches!(check_center(&mut b, Some(A(2)), "c"), Err(FamilyError::Contradiction(A(2)))));
        assert!(matches!(check_center(&mut b, Some(D(4)), "c"), Err(FamilyError::Contradiction(D(4)))));
    }

    #[test]
    fn quintics() {
        let r = verify_quintic(&p("t*x + y^5 + z^5"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!((r.index, r.k, r.k_square, r.g), (2, 1, 5, 6));
        assert_eq!(r.index2_config.to_string(), "K_1");
        let r = verify_quintic(&p("x^5 + y^5 + z^5"), &[]).unwrap();
        assert_eq!(r.failed_condition.unwrap().condition, Condition::SingularAtVertex);
    }

    #[test]
    fn planted_a2() {
        let f = p("t*x + y^2*z^3 + z^5 + x*y^4 + x^5");
        let r = verify_quintic(&f, &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.duval_config.to_string(), "A_2");
        let a2 = r.points.iter().find(|q| q.germ_type == Some(A(2))).unwrap();
        assert_eq!(a2.coords, vec![int(0), int(1), int(0), int(-1)]);
        let again = verify_quintic(&f, &[vec![int(0), int(2), int(0), int(-16)]]).unwrap();
        assert_eq!(again.duval_config, r.duval_config);
        assert!(verify_quintic(&f, &[vec![int(0), int(1), int(1), int(0)]]).is_err());
        let smooth = verify_quintic(&f, &[vec![int(0), int(1), int(0), int(1)]]).unwrap();
        assert!(smooth.notes.iter().any(|n| n.contains("smooth")));
    }

    #[test]
    fn configuration_list() {
        let c = quintic_configurations();
        assert_eq!(c.len(), 7);
        assert!(!c.contains(&"A_5".parse().unwrap()));
    }
}
