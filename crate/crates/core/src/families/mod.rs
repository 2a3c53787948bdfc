//! Verifiers for the equation families of log del Pezzo surfaces of index
//! at most two, one per ambient space, with the invariants they predict.
//!
//! Each verifier takes the defining equation(s) over the family's canonical
//! variables, checks the hypotheses at the rational singular points it can
//! find (plus any supplied points) and returns a [`FamilyReport`]. Points
//! with irrational coordinates are not classified; `complete` says whether
//! any were left over.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::dynkin::{ConfigName, DiagramError, Letter};
use crate::polyq::{fmt_rational, var_list, ParseError, Poly, PolyError, Rational, VarList};
use crate::singclass::{ClassifyError, SingularityType, SolveError};
use crate::wps::{WeightedForm, WeightedSpace, WpsError};

mod ci;
mod cover;
mod search;
mod surface;

pub use ci::{complete_intersection_germ, quadric_rank, verify_g4};
pub use cover::{verify_g2, verify_g3a};
pub use surface::{quintic_configurations, verify_g3b, verify_quintic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    G2P1123,
    G3aP1144,
    G3bP1112,
    G4CiP11112,
    G6cP1114,
    HigherCone,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::G2P1123,
        FamilyId::G3aP1144,
        FamilyId::G3bP1112,
        FamilyId::G4CiP11112,
        FamilyId::G6cP1114,
        FamilyId::HigherCone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::G2P1123 => "G2_P1123",
            FamilyId::G3aP1144 => "G3A_P1144",
            FamilyId::G3bP1112 => "G3B_P1112",
            FamilyId::G4CiP11112 => "G4_CI_P11112",
            FamilyId::G6cP1114 => "G6C_P1114",
            FamilyId::HigherCone => "HIGHER_CONE",
        }
    }

    /// Variables of the input equation(s), in weight order.
    pub fn input_vars(self) -> VarList {
        match self {
            FamilyId::G2P1123 | FamilyId::G3aP1144 => var_list(&["x", "y", "z"]),
            FamilyId::G3bP1112 | FamilyId::G6cP1114 => var_list(&["x", "y", "z", "t"]),
            FamilyId::G4CiP11112 => var_list(&["x", "y", "z", "t", "u"]),
            FamilyId::HigherCone => var_list(&["x", "y", "z"]),
        }
    }

    /// Weights of the input variables and the expected weighted degrees.
    pub fn input_space(self) -> (Vec<u32>, Vec<u64>) {
        match self {
            FamilyId::G2P1123 => (vec![1, 1, 2], vec![6]),
            FamilyId::G3aP1144 => (vec![1, 1, 4], vec![8]),
            FamilyId::G3bP1112 => (vec![1, 1, 1, 2], vec![4]),
            FamilyId::G4CiP11112 => (vec![1, 1, 1, 1, 2], vec![2, 3]),
            FamilyId::G6cP1114 => (vec![1, 1, 1, 4], vec![5]),
            FamilyId::HigherCone => (vec![1, 1, 4], vec![]),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    /// Full names, or the short forms `g2`, `g3a`, `g3b`, `g4`, `quintic`, `cone`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let short = match s.to_ascii_lowercase().as_str() {
            "g2" => Some(FamilyId::G2P1123),
            "g3a" => Some(FamilyId::G3aP1144),
            "g3b" => Some(FamilyId::G3bP1112),
            "g4" => Some(FamilyId::G4CiP11112),
            "quintic" | "g6c" => Some(FamilyId::G6cP1114),
            "cone" => Some(FamilyId::HigherCone),
            _ => None,
        };
        short
            .or_else(|| FamilyId::ALL.into_iter().find(|f| f.name() == s))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub family: FamilyId,
    pub weights: Vec<u32>,
    pub degrees: Vec<u64>,
    pub k_square: i64,
    pub g: i64,
    pub index2_locus: &'static str,
}

/// Ambient spaces of the surfaces themselves (the input spaces plus the
/// double-cover coordinate where there is one).
pub fn family_catalog() -> Vec<CatalogEntry> {
    let e = |family, weights: &[u32], degrees: &[u64], k_square, index2_locus| CatalogEntry {
        family,
        weights: weights.to_vec(),
        degrees: degrees.to_vec(),
        k_square,
        g: k_square + 1,
        index2_locus,
    };
    vec![
        e(FamilyId::G2P1123, &[1, 1, 2, 3], &[6], 1, "(0:0:1:0), on Z iff G(0,0,1) = 0"),
        e(FamilyId::G3aP1144, &[1, 1, 4, 4], &[8], 2, "the two points of Z on the line x = y = 0, both K_1"),
        e(FamilyId::G3bP1112, &[1, 1, 1, 2], &[4], 2, "(0:0:0:1), on Z iff F(0,0,0,1) = 0"),
        e(FamilyId::G4CiP11112, &[1, 1, 1, 1, 2], &[2, 3], 3, "(0:0:0:0:1), on Z iff F has no u term"),
        e(FamilyId::G6cP1114, &[1, 1, 1, 4], &[5], 5, "(0:0:0:1), always a K_1 point"),
        e(FamilyId::HigherCone, &[1, 1, 4], &[], 9, "the vertex (0:0:1) of the cone over the rational normal quartic, K_1"),
    ]
}

/// Recomputes `K^2` of every catalog row from its weights and degrees.
pub fn validate_catalog() -> Result<(), FamilyError> {
    for entry in family_catalog() {
        let k = WeightedSpace::new(entry.weights.clone())?.k_square(&entry.degrees)?;
        if k.k_square != Rational::from_integer(entry.k_square.into()) || k.g != Rational::from_integer(entry.g.into()) {
            return Err(FamilyError::Catalog(entry.family));
        }
    }
    Ok(())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} expects {expected} equation(s), got {got}")]
    EquationCount { family: FamilyId, expected: usize, got: usize },
    #[error("equation {index} has weighted degree {got:?}, expected {expected}")]
    Degree { index: usize, expected: u64, got: Option<u64> },
    #[error("catalog row {0} disagrees with the adjunction formula")]
    Catalog(FamilyId),
    #[error("variable `{0}` does not occur with even exponents only")]
    NotEven(String),
    #[error("point {0} is not on the surface")]
    PointNotOnSurface(String),
    #[error("point {point} has {got} coordinates, expected {expected}")]
    PointArity { point: String, expected: usize, got: usize },
    #[error("contradiction: the centre carries {0}, which no symmetric germ of this family can have")]
    Contradiction(SingularityType),
    #[error("the singularity search did not finish: {0}")]
    Search(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Wps(#[from] WpsError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Hypotheses a verifier can find violated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    NotReduced,
    CenterMultiplicity,
    CenterType,
    SingularOnSymmetryLocus,
    NonSimpleSingularity,
    UndeterminedSingularity,
    NonIsolatedSingularities,
    PassesThroughVertex,
    SingularAtVertex,
    CommonComponent,
    UnlistedConfiguration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub condition: Condition,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointRole {
    /// The fixed point of the symmetry.
    Center,
    /// On the fixed hyperplane of the symmetry.
    SymmetryLocus,
    OffCenter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointReport {
    #[serde(serialize_with = "ser_coords")]
    pub coords: Vec<Rational>,
    pub role: PointRole,
    pub germ_type: Option<SingularityType>,
}

fn ser_coords<S: Serializer>(pt: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(pt.iter().map(fmt_rational))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: FamilyId,
    pub verdict: Verdict,
    pub failed_condition: Option<Failure>,
    pub g: i64,
    pub k_square: i64,
    pub k: u32,
    pub index: u8,
    /// Du Val singularities of the surface.
    pub duval_config: ConfigName,
    /// The same points on the symmetric cover, where they come in pairs.
    pub duval_config_doubled: Option<ConfigName>,
    /// Index-two singularities.
    pub index2_config: ConfigName,
    /// Germ at the symmetry centre of the cover, when it lies on it.
    pub center_germ: Option<SingularityType>,
    pub center_type: Option<SingularityType>,
    /// Singular points found, on the variety named in the verifier's docs.
    pub points: Vec<PointReport>,
    pub complete: bool,
    pub unresolved: Vec<String>,
    pub notes: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Accumulates findings; the first failure recorded becomes the verdict.
pub(crate) struct ReportBuilder {
    family: FamilyId,
    failure: Option<Failure>,
    pub k: u32,
    pub index: u8,
    pub duval: ConfigName,
    pub doubled: Option<ConfigName>,
    pub index2: ConfigName,
    pub center_germ: Option<SingularityType>,
    pub center_type: Option<SingularityType>,
    pub points: Vec<PointReport>,
    pub complete: bool,
    pub unresolved: Vec<String>,
    pub notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(family: FamilyId) -> Self {
        ReportBuilder {
            family,
            failure: None,
            k: 0,
            index: 1,
            duval: ConfigName::empty(),
            doubled: None,
            index2: ConfigName::empty(),
            center_germ: None,
            center_type: None,
            points: Vec::new(),
            complete: true,
            unresolved: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, condition: Condition, detail: impl Into<String>) {
        let detail = detail.into();
        match self.failure {
            None => self.failure = Some(Failure { condition, detail }),
            Some(_) => self.notes.push(format!("also failed: {detail}")),
        }
    }

    /// Records a germ at the symmetry centre: `A_{2k+1}` gives `K_k`.
    pub fn set_center(&mut self, t: SingularityType) {
        self.center_germ = Some(t);
        if let SingularityType::A(f) = t {
            if f % 2 == 1 {
                self.k = (f - 1) / 2;
                if self.k >= 1 {
                    self.center_type = Some(SingularityType::K(self.k));
                    self.index2.push(Letter::K, self.k).expect("valid K index");
                } else {
                    self.notes.push("A_1 at the centre: f = 2k + 1 gives k = 0".into());
                }
                self.index = 2;
            }
        }
    }

    pub fn finish(self) -> FamilyReport {
        let entry = family_catalog().into_iter().find(|e| e.family == self.family).expect("catalogued family");
        FamilyReport {
            family: self.family,
            verdict: if self.failure.is_some() { Verdict::Fail } else { Verdict::Pass },
            failed_condition: self.failure,
            g: entry.g,
            k_square: entry.k_square,
            k: self.k,
            index: self.index,
            duval_config: self.duval,
            duval_config_doubled: self.doubled,
            index2_config: self.index2,
            center_germ: self.center_germ,
            center_type: self.center_type,
            points: self.points,
            complete: self.complete,
            unresolved: self.unresolved,
            notes: self.notes,
        }
    }
}

/// Moves `p` onto the family's variables and checks its weighted degree.
pub(crate) fn prepare(family: FamilyId, p: &Poly, index: usize) -> Result<Poly, FamilyError> {
    let vars = family.input_vars();
    let p = p.with_vars(&vars)?;
    let (weights, degrees) = family.input_space();
    let got = WeightedSpace::new(weights)?.weighted_degree(&p)?;
    if got != Some(degrees[index]) || p.is_zero() {
        return Err(FamilyError::Degree { index, expected: degrees[index], got });
    }
    Ok(p)
}

/// `p(x_0, .., x_i^m, ..)` over the variables `names`.
pub(crate) fn power_substitute(p: &Poly, i: usize, m: u32, names: &[&str]) -> Poly {
    let vars = var_list(names);
    let images: Vec<Poly> =
        (0..p.nvars()).map(|j| if j == i { Poly::var(&vars, j).pow(m) } else { Poly::var(&vars, j) }).collect();
    p.compose(&images)
}

/// Scales a projective point so that its first nonzero coordinate is 1.
pub(crate) fn normalize_projective(pt: &[Rational]) -> Vec<Rational> {
    match pt.iter().find(|c| !c.is_zero()) {
        Some(c) => {
            let s = c.recip();
            pt.iter().map(|x| x * &s).collect()
        }
        None => pt.to_vec(),
    }
}

pub(crate) fn describe(pt: &[Rational]) -> String {
    format!("({})", pt.iter().map(fmt_rational).collect::<Vec<_>>().join(":"))
}

pub(crate) fn is_center(pt: &[Rational], sym: usize) -> bool {
    pt.iter().enumerate().all(|(i, c)| (i == sym) != c.is_zero())
}

/// Adds the mirror image under `x_sym -> -x_sym` of every point.
pub(crate) fn close_under_mirror(points: &mut Vec<Vec<Rational>>, sym: usize) {
    let mut extra = Vec::new();
    for p in points.iter() {
        let mut q = p.clone();
        q[sym] = -q[sym].clone();
        extra.push(normalize_projective(&q));
    }
    points.extend(extra);
    points.sort();
    points.dedup();
}

pub(crate) fn search_failure(b: &mut ReportBuilder, e: SolveError) -> Result<(), FamilyError> {
    match e {
        SolveError::NonReduced => {
            b.fail(Condition::NotReduced, "the equation has a repeated factor");
            Ok(())
        }
        SolveError::PositiveDimensional => {
            b.fail(Condition::NonIsolatedSingularities, "the singular locus is positive-dimensional");
            Ok(())
        }
        other => Err(FamilyError::Search(other.to_string())),
    }
}

/// Parity of a variable in a weighted form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

pub fn detect_symmetry(form: &WeightedForm, v: &str) -> Result<Parity, FamilyError> {
    let p = form.poly();
    let i = p.var_index(v).ok_or_else(|| PolyError::UnknownVariable(v.to_string()))?;
    Ok(match p.parity_in(i) {
        Some(true) => Parity::Even,
        Some(false) => Parity::Odd,
        None => Parity::None,
    })
}

/// Replaces `v^2` by a fresh variable of twice the weight, kept in `v`'s
/// position. The fresh variable is called `u` unless that name is taken.
pub fn desymmetrize(form: &WeightedForm, v: &str) -> Result<WeightedForm, FamilyError> {
    if detect_symmetry(form, v)? != Parity::Even {
        return Err(FamilyError::NotEven(v.to_string()));
    }
    let p = form.poly();
    let i = p.var_index(v).expect("checked above");
    let fresh = if p.var_index("u").is_none() { "u".to_string() } else { format!("{v}_sq") };
    let mut names: Vec<String> = p.vars().iter().cloned().collect();
    names[i] = fresh;
    let vars = var_list(&names);
    let poly = Poly::from_terms(
        &vars,
        p.terms().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            e[i] /= 2;
            (e, c.clone())
        }),
    );
    let mut weights = form.space().weights().to_vec();
    weights[i] *= 2;
    Ok(WeightedForm::new(WeightedSpace::new(weights)?, poly)?)
}

pub(crate) fn one() -> Rational {
    Rational::one()
}

/// Reads points given as lists of rational strings.
pub fn parse_points(v: &serde_json::Value) -> Result<Vec<Vec<Rational>>, FamilyError> {
    let bad = |s: String| FamilyError::Search(format!("bad point list: {s}"));
    let arr = v.as_array().ok_or_else(|| bad("expected an array".into()))?;
    arr.iter()
        .map(|pt| {
            let coords = pt.as_array().ok_or_else(|| bad(pt.to_string()))?;
            coords
                .iter()
                .map(|c| match c {
                    serde_json::Value::String(s) => s.trim().parse::<Rational>().map_err(|_| bad(s.clone())),
                    serde_json::Value::Number(n) => {
                        n.as_i64().map(|k| Rational::from_integer(k.into())).ok_or_else(|| bad(n.to_string()))
                    }
                    other => Err(bad(other.to_string())),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::parse_with_vars;

    #[test]
    fn catalog_agrees_with_adjunction() {
        validate_catalog().unwrap();
        let c = family_catalog();
        assert_eq!(c.len(), 6);
        let g4 = c.iter().find(|e| e.family == FamilyId::G4CiP11112).unwrap();
        assert_eq!((g4.weights.clone(), g4.degrees.clone(), g4.k_square), (vec![1, 1, 1, 1, 2], vec![2, 3], 3));
        let cone = c.iter().find(|e| e.family == FamilyId::HigherCone).unwrap();
        assert_eq!(cone.g, 10);
        for e in &c {
            assert_eq!(e.g, e.k_square + 1);
        }
    }

    #[test]
    fn family_names() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("g3b".parse::<FamilyId>().unwrap(), FamilyId::G3bP1112);
        assert!("g5".parse::<FamilyId>().is_err());
    }

    #[test]
    fn symmetry_detection() {
        let vars = var_list(&["x", "y", "z", "t"]);
        let space = WeightedSpace::new(vec![1, 1, 2, 3]).unwrap();
        let f = WeightedForm::new(space.clone(), parse_with_vars("t^2 - z^3 - x^6 - y^6", &vars).unwrap()).unwrap();
        assert_eq!(detect_symmetry(&f, "t").unwrap(), Parity::Even);
        let d = desymmetrize(&f, "t").unwrap();
        assert_eq!(d.space().weights(), &[1, 1, 2, 6]);
        assert_eq!(d.degree(), 6);
        assert_eq!(d.poly().vars()[3], "u");
        assert_eq!(d.poly().to_string(), parse_with_vars("u - z^3 - x^6 - y^6", d.poly().vars()).unwrap().to_string());

        let s = WeightedSpace::new(vec![1, 1, 1, 5]).unwrap();
        let g = WeightedForm::new(s.clone(), parse_with_vars("x^5 + t", &vars).unwrap()).unwrap();
        assert_eq!(detect_symmetry(&g, "t").unwrap(), Parity::None);
        assert!(desymmetrize(&g, "t").is_err());
        let s = WeightedSpace::new(vec![1, 1, 1, 1]).unwrap();
        let h = WeightedForm::new(s, parse_with_vars("t^3 + t*x^2", &vars).unwrap()).unwrap();
        assert_eq!(detect_symmetry(&h, "t").unwrap(), Parity::Odd);
    }

    #[test]
    fn points_from_json() {
        let v: serde_json::Value = serde_json::from_str(r#"[["1/2", 0, "-3"]]"#).unwrap();
        let pts = parse_points(&v).unwrap();
        assert_eq!(pts[0][0], crate::polyq::rat(1, 2));
        assert!(parse_points(&serde_json::json!([["x"]])).is_err());
    }
}
