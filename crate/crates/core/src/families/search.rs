//! Singular point searches shared by the verifiers.

use num_traits::{One, Signed, Zero};

use super::{
    close_under_mirror, describe, is_center, normalize_projective, search_failure, Condition, FamilyError,
    PointReport, PointRole, ReportBuilder,
};
use crate::dynkin::{ConfigName, Letter};
use crate::polyq::{Poly, Rational};
use crate::singclass::{
    classify_at, find_rational_singular_points, Ambient, ClassifyError, SingularityType, SolveError, DEFAULT_ORDER,
};

pub(crate) type Found = Vec<(Vec<Rational>, Option<SingularityType>)>;

fn classify_or_none(r: Result<SingularityType, SolveError>) -> Result<Option<SingularityType>, FamilyError> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(SolveError::Classify(ClassifyError::Undetermined { .. })) => Ok(None),
        Err(SolveError::NotOnVariety) => unreachable!("callers check membership first"),
        Err(e) => Err(FamilyError::Search(e.to_string())),
    }
}

/// Adds supplied points (after checking they lie on `f`) to a search
/// result, classifying each; smooth ones are dropped with a note.
pub(crate) fn merge_user_points(
    b: &mut ReportBuilder,
    f: &Poly,
    ambient: Ambient,
    user: &[Vec<Rational>],
    mirror: Option<usize>,
    found: &mut Found,
) -> Result<(), FamilyError> {
    let mut extra: Vec<Vec<Rational>> = Vec::new();
    for p in user {
        if p.len() != f.nvars() {
            return Err(FamilyError::PointArity { point: describe(p), expected: f.nvars(), got: p.len() });
        }
        let p = if ambient == Ambient::Projective { normalize_projective(p) } else { p.clone() };
        if p.iter().all(Zero::is_zero) || !f.eval(&p)?.is_zero() {
            return Err(FamilyError::PointNotOnSurface(describe(&p)));
        }
        extra.push(p);
    }
    if let Some(sym) = mirror {
        close_under_mirror(&mut extra, sym);
    }
    for p in extra {
        if found.iter().any(|(q, _)| *q == p) {
            continue;
        }
        match classify_or_none(classify_at(f, &p, ambient, DEFAULT_ORDER))? {
            Some(SingularityType::Smooth) => b.notes.push(format!("supplied point {} is smooth", describe(&p))),
            t => found.push((p, t)),
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(())
}

/// Rational singular points of a projective hypersurface; `None` after a
/// failure (non-reduced, non-isolated) has been recorded.
pub(crate) fn projective_points(b: &mut ReportBuilder, f: &Poly) -> Result<Option<Found>, FamilyError> {
    match find_rational_singular_points(f, Ambient::Projective, DEFAULT_ORDER) {
        Ok(s) => {
            b.complete &= s.complete;
            b.unresolved.extend(s.unresolved);
            Ok(Some(s.points.into_iter().map(|p| (normalize_projective(&p.coords), p.germ_type)).collect()))
        }
        Err(e) => {
            search_failure(b, e)?;
            Ok(None)
        }
    }
}

/// Rational singular points of a weighted hypersurface away from the locus
/// where every weight-one coordinate vanishes. Chart `i` sets the `i`-th
/// weight-one coordinate to 1 and the earlier ones to 0, which leaves an
/// ordinary affine chart.
pub(crate) fn weighted_chart_points(
    b: &mut ReportBuilder,
    f: &Poly,
    weights: &[u32],
) -> Result<Option<Found>, FamilyError> {
    let mut out = Found::new();
    let unit: Vec<usize> = (0..weights.len()).filter(|&i| weights[i] == 1).collect();
    for (k, &i) in unit.iter().enumerate() {
        let chart = f.set_var(i, &Rational::one());
        let s = match find_rational_singular_points(&chart, Ambient::Affine, DEFAULT_ORDER) {
            Ok(s) => s,
            Err(e) => {
                search_failure(b, e)?;
                return Ok(None);
            }
        };
        b.complete &= s.complete;
        b.unresolved.extend(s.unresolved.into_iter().map(|u| format!("chart {}: {u}", f.vars()[i])));
        for p in s.points {
            let mut pt = p.coords;
            pt.insert(i, Rational::one());
            if unit[..k].iter().all(|&j| pt[j].is_zero()) {
                out.push((pt, p.germ_type));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Some(out))
}

/// Checks non-central points: none on the mirror, all Du Val. Returns the
/// configuration of the whole list.
pub(crate) fn check_points(b: &mut ReportBuilder, found: &Found, mirror: Option<usize>) -> ConfigName {
    let mut config = ConfigName::empty();
    for (pt, t) in found {
        let role = match mirror {
            Some(sym) if is_center(pt, sym) => PointRole::Center,
            Some(sym) if pt[sym].is_zero() => PointRole::SymmetryLocus,
            _ => PointRole::OffCenter,
        };
        b.points.push(PointReport { coords: pt.clone(), role, germ_type: *t });
        if role == PointRole::Center {
            continue;
        }
        if role == PointRole::SymmetryLocus {
            let what = t.map_or("undetermined".to_string(), |t| t.to_string());
            b.fail(Condition::SingularOnSymmetryLocus, format!("{what} point {} on the fixed hyperplane", describe(pt)));
        }
        match t {
            None => b.fail(Condition::UndeterminedSingularity, format!("germ at {} not classified", describe(pt))),
            Some(t) if !t.is_ade() => b.fail(Condition::NonSimpleSingularity, format!("{t} at {}", describe(pt))),
            Some(t) => push_ade(&mut config, *t),
        }
    }
    config
}

pub(crate) fn push_ade(config: &mut ConfigName, t: SingularityType) {
    let (l, n) = match t {
        SingularityType::A(n) => (Letter::A, n),
        SingularityType::D(n) => (Letter::D, n),
        SingularityType::E(n) => (Letter::E, n),
        _ => return,
    };
    config.push(l, n).expect("classifier returns valid ADE indices");
}

/// Splits the off-centre points of a cover into mirror pairs: the surface's
/// own configuration takes one of each pair.
pub(crate) fn halve(found: &Found, sym: usize) -> ConfigName {
    let mut half = ConfigName::empty();
    for (pt, t) in found {
        if pt[sym].is_positive() && !is_center(pt, sym) {
            if let Some(t) = t {
                push_ade(&mut half, *t);
            }
        }
    }
    half
}

/// Centre of a symmetric cover: records its germ, failing or raising a
/// contradiction when it is not of type `A_{2k+1}`.
pub(crate) fn check_center(b: &mut ReportBuilder, t: Option<SingularityType>, at: &str) -> Result<(), FamilyError> {
    match t {
        Some(SingularityType::A(f)) if f % 2 == 1 => b.set_center(SingularityType::A(f)),
        Some(t @ (SingularityType::A(_) | SingularityType::D(_) | SingularityType::E(_))) => {
            return Err(FamilyError::Contradiction(t));
        }
        Some(SingularityType::Smooth) => {
            b.notes.push(format!("the cover is smooth at the centre {at}"));
        }
        Some(t) => {
            b.center_germ = Some(t);
            b.fail(Condition::CenterType, format!("{t} at the centre {at}"));
        }
        None => b.fail(Condition::UndeterminedSingularity, format!("centre germ at {at} not classified")),
    }
    Ok(())
}
