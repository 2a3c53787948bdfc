//! Classification of isolated singularity germs at the origin.
//!
//! Plane-curve germs are recognized from multiplicity, Milnor number and the
//! cubic tangent cone. Surface double points are reduced to curve germs with
//! the splitting lemma. Quotients by a central symmetry turn `A_{2n+1}` into
//! the index-two type `K_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::polyq::{Poly, PolyError};

mod curve;
mod milnor;
mod solve;
mod surface;

pub use curve::classify_curve_germ;
pub use milnor::{intersection_multiplicity, milnor_number, Intersection};
pub use solve::{
    classify_at, find_rational_singular_points, germ_at, solve_system, Ambient, SingularPoint, SingularSearch,
    Solutions, SolveError,
};
pub use surface::{classify_surface_double_point, split_quadratic, Splitting, DEFAULT_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    Smooth,
    A(u32),
    D(u32),
    E(u32),
    K(u32),
    NotSimple,
    NonIsolated,
}

impl SingularityType {
    /// Milnor number of an ADE type.
    pub fn milnor(&self) -> Option<u32> {
        match *self {
            SingularityType::A(n) | SingularityType::D(n) | SingularityType::E(n) => Some(n),
            SingularityType::Smooth => Some(0),
            _ => None,
        }
    }

    pub fn is_ade(&self) -> bool {
        matches!(self, SingularityType::A(_) | SingularityType::D(_) | SingularityType::E(_))
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::Smooth => write!(f, "Smooth"),
            SingularityType::A(n) => write!(f, "A{n}"),
            SingularityType::D(n) => write!(f, "D{n}"),
            SingularityType::E(n) => write!(f, "E{n}"),
            SingularityType::K(n) => write!(f, "K{n}"),
            SingularityType::NotSimple => write!(f, "NotSimple"),
            SingularityType::NonIsolated => write!(f, "NonIsolated"),
        }
    }
}

impl FromStr for SingularityType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unknown singularity type `{s}`");
        match s {
            "Smooth" => return Ok(SingularityType::Smooth),
            "NotSimple" => return Ok(SingularityType::NotSimple),
            "NonIsolated" => return Ok(SingularityType::NonIsolated),
            _ => {}
        }
        let (letter, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let n: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        let t = match letter {
            "A" if n >= 1 => SingularityType::A(n),
            "D" if n >= 4 => SingularityType::D(n),
            "E" if (6..=8).contains(&n) => SingularityType::E(n),
            "K" if n >= 1 => SingularityType::K(n),
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("zero germ")]
    ZeroGerm,
    #[error("germ does not vanish at the origin")]
    NotAtOrigin,
    #[error("expected a germ in {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("classification undetermined at truncation order {order}")]
    Undetermined { order: u32 },
    #[error("germ is not invariant under the given symmetry")]
    NotSymmetric,
    #[error("germ is not singular at the origin")]
    NotSingular,
    #[error("{0} has no quotient of index two under a central symmetry")]
    Quotient(SingularityType),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Lowest total degree of a term; 1 means a smooth point.
pub fn multiplicity(f: &Poly) -> Result<u32, ClassifyError> {
    if f.is_zero() {
        return Err(ClassifyError::ZeroGerm);
    }
    Ok(f.min_degree())
}

/// Inputs to [`quotient_type`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientInput {
    /// A double point fixed by a central symmetry.
    CentralSymmetry(SingularityType),
    /// The cyclic quotient singularity of type 1/4(1,1).
    CyclicQuarter,
}

/// `A_{2n+1} / (central symmetry) = K_n` and `1/4(1,1) = K_1`.
pub fn quotient_type(input: QuotientInput) -> Result<SingularityType, ClassifyError> {
    match input {
        QuotientInput::CyclicQuarter => Ok(SingularityType::K(1)),
        QuotientInput::CentralSymmetry(SingularityType::A(m)) if m % 2 == 1 && m >= 3 => {
            Ok(SingularityType::K((m - 1) / 2))
        }
        QuotientInput::CentralSymmetry(t) => Err(ClassifyError::Quotient(t)),
    }
}

/// Involutions under which a germ can be symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `x -> -x` in every coordinate; the form a projective involution
    /// `x_n -> -x_n` takes in the chart centered at its isolated fixed point.
    Central,
    /// `x_i -> -x_i` in a single coordinate.
    Reflection(usize),
}

impl Symmetry {
    pub fn preserves(&self, f: &Poly) -> bool {
        match *self {
            Symmetry::Central => f.terms().all(|(m, _)| m.degree() % 2 == 0),
            Symmetry::Reflection(i) => i < f.nvars() && f.terms().all(|(m, _)| m.exps()[i] % 2 == 0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CenterVerdict {
    pub germ_type: SingularityType,
    pub pass: bool,
}

/// Classifies a symmetric germ singular at the origin; passes iff the type
/// is `A` with odd index.
pub fn check_symmetric_center(f: &Poly, sym: Symmetry, order: u32) -> Result<CenterVerdict, ClassifyError> {
    if !sym.preserves(f) {
        return Err(ClassifyError::NotSymmetric);
    }
    let germ_type = classify_germ(f, order)?;
    if germ_type == SingularityType::Smooth {
        return Err(ClassifyError::NotSingular);
    }
    let pass = matches!(germ_type, SingularityType::A(n) if n % 2 == 1);
    Ok(CenterVerdict { germ_type, pass })
}

/// Curve or surface classification according to the number of variables.
pub fn classify_germ(f: &Poly, order: u32) -> Result<SingularityType, ClassifyError> {
    match f.nvars() {
        2 => classify_curve_germ(f),
        3 => classify_surface_double_point(f, order),
        n => Err(ClassifyError::Arity { expected: 3, got: n }),
    }
}
