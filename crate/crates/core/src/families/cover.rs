//! Double planes: sextics in P(1,1,2) and octics in P(1,1,4).

use num_traits::Zero;

use super::search::{check_center, check_points, halve, merge_user_points, projective_points, weighted_chart_points};
use super::{describe, one, power_substitute, prepare, Condition, FamilyError, FamilyId, FamilyReport, ReportBuilder};
use crate::dynkin::{config_diagram, enumerate_ade_subdiagrams, ConfigName, Letter};
use crate::polyq::{Poly, Rational};
use crate::singclass::{germ_at, multiplicity, Ambient, SingularityType};

/// `t^2 = G(x, y, z)` in P(1,1,2,3), with `G` a sextic in P(1,1,2).
///
/// The check runs on the plane sextic `K(a, b, c) = G(a, b, c^2)`, which is
/// symmetric under `c -> -c` with centre `(0:0:1)`. Reported points and
/// supplied `points` are points of `K` in P^2. Off-centre singular points of
/// `K` come in mirror pairs, each pair giving one Du Val point of the
/// surface.
pub fn verify_g2(g: &Poly, points: &[Vec<Rational>]) -> Result<FamilyReport, FamilyError> {
    let family = FamilyId::G2P1123;
    let g = prepare(family, g, 0)?;
    let k = power_substitute(&g, 2, 2, &["a", "b", "c"]);
    let mut b = ReportBuilder::new(family);
    let center = [Rational::zero(), Rational::zero(), one()];
    let Some(mut found) = projective_points(&mut b, &k)? else {
        return Ok(b.finish());
    };
    merge_user_points(&mut b, &k, Ambient::Projective, points, Some(2), &mut found)?;
    if k.eval(&center)?.is_zero() {
        let germ = germ_at(&k, &center, Ambient::Projective).map_err(|e| FamilyError::Search(e.to_string()))?;
        let m = multiplicity(&germ)?;
        if m > 2 {
            b.center_germ = found.iter().find(|(p, _)| p[..] == center[..]).and_then(|(_, t)| *t);
            b.fail(Condition::CenterMultiplicity, format!("the sextic has multiplicity {m} at the centre"));
        } else {
            let t = found.iter().find(|(p, _)| p[..] == center[..]).and_then(|(_, t)| *t);
            check_center(&mut b, t, &describe(&center))?;
        }
    }
    let all = check_points(&mut b, &found, Some(2));
    b.duval = halve(&found, 2);
    b.doubled = Some(all);
    Ok(b.finish())
}

/// `t^2 = G(x, y, z)` in P(1,1,4,4), with `G` an octic in P(1,1,4).
///
/// The surface has two `K_1` points over the vertex `(0:0:1)` of P(1,1,4)
/// and its Du Val points sit over the singular points of the branch curve
/// `G = 0`, found in the charts `x = 1` and `x = 0, y = 1`. Reported and
/// supplied points are points of the branch curve in P(1,1,4).
pub fn verify_g3a(g: &Poly, points: &[Vec<Rational>]) -> Result<FamilyReport, FamilyError> {
    let family = FamilyId::G3aP1144;
    let g = prepare(family, g, 0)?;
    let mut b = ReportBuilder::new(family);
    let vertex = [Rational::zero(), Rational::zero(), one()];
    if g.eval(&vertex)?.is_zero() {
        b.fail(Condition::PassesThroughVertex, "the branch curve passes through (0:0:1)");
    } else {
        b.k = 2;
        b.index = 2;
        b.center_type = Some(SingularityType::K(1));
        b.index2.push(Letter::K, 1)?;
        b.index2.push(Letter::K, 1)?;
    }
    let Some(mut found) = weighted_chart_points(&mut b, &g, &[1, 1, 4])? else {
        return Ok(b.finish());
    };
    for p in points {
        if p.len() == 3 && p[0].is_zero() && p[1].is_zero() {
            return Err(FamilyError::PointNotOnSurface(describe(p)));
        }
    }
    let charted: Vec<Vec<Rational>> = points.iter().map(|p| to_unit_chart(p)).collect();
    merge_weighted_points(&mut b, &g, &charted, &mut found)?;
    let all = check_points(&mut b, &found, None);
    let a7 = enumerate_ade_subdiagrams(&config_diagram(&ConfigName::single(Letter::A, 7)?)?)?;
    if !a7.contains(&all) {
        b.fail(Condition::UnlistedConfiguration, format!("{all} is not a subdiagram of A_7"));
    }
    b.doubled = Some(all.doubled());
    b.duval = all;
    Ok(b.finish())
}

/// Rescales a point of P(1,1,w) so that its first nonzero weight-one
/// coordinate is 1.
fn to_unit_chart(p: &[Rational]) -> Vec<Rational> {
    if p.len() != 3 {
        return p.to_vec();
    }
    let i = if p[0].is_zero() { 1 } else { 0 };
    let s = p[i].recip();
    let w = 4;
    vec![&p[0] * &s, &p[1] * &s, &p[2] * num_traits::pow(s.clone(), w)]
}

/// Supplied points on a weighted curve, classified in the affine chart of
/// their first nonzero weight-one coordinate.
fn merge_weighted_points(
    b: &mut ReportBuilder,
    g: &Poly,
    pts: &[Vec<Rational>],
    found: &mut super::search::Found,
) -> Result<(), FamilyError> {
    for p in pts {
        if found.iter().any(|(q, _)| q == p) {
            continue;
        }
        let i = if p[0].is_zero() { 1 } else { 0 };
        let mut rest = p.clone();
        rest.remove(i);
        let mut one_found = Vec::new();
        merge_user_points(b, &g.set_var(i, &one()), Ambient::Affine, &[rest], None, &mut one_found)?;
        for (mut q, t) in one_found {
            q.insert(i, one());
            found.push((q, t));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{PointRole, Verdict};
    use crate::polyq::{int, parse_with_vars, var_list};
    use SingularityType::*;

    fn p(s: &str) -> Poly {
        parse_with_vars(s, &var_list(&["x", "y", "z"])).unwrap()
    }

    #[test]
    fn fermat_sextic() {
        let r = verify_g2(&p("x^6 + y^6 + z^3"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.g, r.k_square, r.index, r.k), (2, 1, 1, 0));
        assert!(r.duval_config.is_empty());
        assert!(r.center_germ.is_none());
    }

    #[test]
    fn a5_center() {
        // K = a^2 c^4 + b^6 + a^6, which is a^2 + b^6 + .. at (0:0:1)
        let r = verify_g2(&p("z^2*x^2 + y^6 + x^6"), &[]).unwrap();
        assert_eq!(r.center_germ, Some(A(5)));
        assert_eq!(r.center_type, Some(K(2)));
        assert_eq!((r.k, r.index), (2, 2));
        assert_eq!(r.index2_config.to_string(), "K_2");
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn three_conics() {
        let r = verify_g2(&p("(z - x^2 - y^2)*(z - x^2 - 2*y^2)*(z - x^2 - 3*y^2)"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.points.iter().any(|q| q.germ_type == Some(NotSimple)));
    }

    #[test]
    fn non_reduced_fails() {
        let r = verify_g2(&p("z*(z - x^2)^2"), &[]).unwrap();
        assert_eq!(r.failed_condition.unwrap().condition, Condition::NotReduced);
    }

    #[test]
    fn paired_nodes() {
        // two conics meeting transversally at (3:+-4:+-5) in the cover plane
        let g = p("(z - x^2 - y^2)*(9*z + 7*x^2 - 18*y^2)*(z - 5*x^2 - 3*y^2)");
        let r = verify_g2(&g, &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.duval_config.to_string(), "2A_1");
        assert_eq!(r.duval_config_doubled.unwrap().to_string(), "4A_1");
        for q in &r.points {
            assert_eq!(q.role, PointRole::OffCenter);
        }
    }

    #[test]
    fn wrong_degree() {
        assert!(matches!(verify_g2(&p("x^5 + z^2"), &[]), Err(FamilyError::Degree { .. })));
        let bad = parse_with_vars("x^6 + w^6", &var_list(&["x", "w"])).unwrap();
        assert!(verify_g2(&bad, &[]).is_err());
    }

    #[test]
    fn octic_double_plane() {
        let r = verify_g3a(&p("z^2 + x^8 + y^8"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.index2_config.to_string(), "2K_1");
        assert_eq!((r.k, r.index, r.k_square, r.g), (2, 2, 2, 3));
        let r = verify_g3a(&p("z*x^4 + y^8"), &[]).unwrap();
        assert_eq!(r.failed_condition.unwrap().condition, Condition::PassesThroughVertex);
    }

    #[test]
    fn octic_with_node() {
        // branch curve with a node at (1:0:1): z^2 - 2 z x^4 + x^8 - y^2 x^6 ... perturbed
        let r = verify_g3a(&p("(z - x^4)^2 - x^6*y^2 + y^8"), &[]).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert_eq!(r.duval_config.to_string(), "A_1");
        assert_eq!(r.points[0].coords, vec![int(1), int(0), int(1)]);
        let again = verify_g3a(&p("(z - x^4)^2 - x^6*y^2 + y^8"), &[vec![int(2), int(0), int(16)]]).unwrap();
        assert_eq!(again.duval_config, r.duval_config);
    }
}
