use num_traits::Zero;

use super::{milnor_number, multiplicity, ClassifyError, Intersection, SingularityType};
use crate::polyq::Poly;

/// ADE recognition for a plane-curve germ at the origin.
pub fn classify_curve_germ(f: &Poly) -> Result<SingularityType, ClassifyError> {
    if f.nvars() != 2 {
        return Err(ClassifyError::Arity { expected: 2, got: f.nvars() });
    }
    let m = multiplicity(f)?;
    if m == 0 {
        return Err(ClassifyError::NotAtOrigin);
    }
    if m == 1 {
        return Ok(SingularityType::Smooth);
    }
    if m >= 4 {
        // the singular locus is a curve through the origin exactly when
        // f, f_x and f_y share a factor vanishing there
        let common = f.repeated_part();
        let through_origin = !common.is_constant() && common.constant_term().is_zero();
        return Ok(if through_origin { SingularityType::NonIsolated } else { SingularityType::NotSimple });
    }
    let mu = match milnor_number(f)? {
        Intersection::Infinite => return Ok(SingularityType::NonIsolated),
        Intersection::Finite(mu) => mu as u32,
    };
    if m == 2 {
        return Ok(SingularityType::A(mu));
    }
    // Repeated lines of the cubic tangent cone divide both of its partials.
    let cone = f.homogeneous_part(3);
    let repeated = cone.derivative(0).gcd(&cone.derivative(1))?.total_degree();
    Ok(match repeated {
        0 => {
            debug_assert_eq!(mu, 4);
            SingularityType::D(4)
        }
        1 => SingularityType::D(mu),
        _ if (6..=8).contains(&mu) => SingularityType::E(mu),
        _ => SingularityType::NotSimple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::{parse_with_vars, var_list};
    use SingularityType::*;

    fn c(s: &str) -> SingularityType {
        classify_curve_germ(&parse_with_vars(s, &var_list(&["x", "y"])).unwrap()).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(c("y^2 - x^4"), A(3));
        assert_eq!(c("x*y^2 + x^4"), D(5));
        assert_eq!(c("y^3 + x^4"), E(6));
        assert_eq!(c("y^3 + x*y^3 + x^3*y"), E(7));
        assert_eq!(c("y^3 + x^5"), E(8));
        assert_eq!(c("y^3 + x^6"), NotSimple);
        assert_eq!(c("x^3 - x*y^2"), D(4));
        assert_eq!(c("x + y^5"), Smooth);
        assert_eq!(c("x^4 + y^4"), NotSimple);
        assert_eq!(c("x^2*y^2"), NonIsolated);
        assert_eq!(c("y^2"), NonIsolated);
    }

    #[test]
    fn errors() {
        let v = var_list(&["x", "y"]);
        assert!(classify_curve_germ(&parse_with_vars("1 + x", &v).unwrap()).is_err());
        assert!(classify_curve_germ(&Poly::zero(&v)).is_err());
        assert!(classify_curve_germ(&parse_with_vars("x", &var_list(&["x", "y", "z"])).unwrap()).is_err());
    }
}
