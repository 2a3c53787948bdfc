//! Local intersection numbers of plane curves at the origin by Fulton's
//! reduction, and Milnor numbers as the intersection of the two partials.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::ClassifyError;
use crate::polyq::{Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Intersection {
    Finite(u64),
    Infinite,
}

impl Intersection {
    pub fn finite(self) -> Option<u64> {
        match self {
            Intersection::Finite(n) => Some(n),
            Intersection::Infinite => None,
        }
    }
}

impl std::ops::Add for Intersection {
    type Output = Intersection;

    fn add(self, rhs: Intersection) -> Intersection {
        match (self, rhs) {
            (Intersection::Finite(a), Intersection::Finite(b)) => Intersection::Finite(a + b),
            _ => Intersection::Infinite,
        }
    }
}

impl fmt::Display for Intersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Intersection::Finite(n) => write!(f, "{n}"),
            Intersection::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Intersection {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Intersection::Finite(n) => s.serialize_u64(*n),
            Intersection::Infinite => s.serialize_str("infinite"),
        }
    }
}

fn check_bivariate(f: &Poly) -> Result<(), ClassifyError> {
    if f.nvars() != 2 {
        return Err(ClassifyError::Arity { expected: 2, got: f.nvars() });
    }
    Ok(())
}

/// Intersection number at the origin of two plane curves in the same two
/// variables; infinite when they share a component through the origin.
pub fn intersection_multiplicity(f: &Poly, g: &Poly) -> Result<Intersection, ClassifyError> {
    check_bivariate(f)?;
    check_bivariate(g)?;
    if f.vars() != g.vars() {
        return Err(crate::polyq::PolyError::VariableMismatch {
            left: f.vars().join(","),
            right: g.vars().join(","),
        }
        .into());
    }
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Ok(Intersection::Finite(0));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Intersection::Infinite);
    }
    let h = f.gcd(g)?;
    if !h.is_constant() && h.constant_term().is_zero() {
        return Ok(Intersection::Infinite);
    }
    Ok(fulton(f.clone(), g.clone()))
}

// Restriction to y = 0, as coefficients of x (low degree first).
fn on_x_axis(f: &Poly) -> Vec<Rational> {
    let mut out = Vec::new();
    for (m, c) in f.terms() {
        let e = m.exps();
        if e[1] == 0 {
            let k = e[0] as usize;
            if out.len() <= k {
                out.resize(k + 1, Rational::zero());
            }
            out[k] = c.clone();
        }
    }
    out
}

fn fulton(f: Poly, g: Poly) -> Intersection {
    let vars = f.vars().clone();
    let y = Poly::var(&vars, 1);
    let mut total = 0u64;
    let mut stack = vec![(f, g)];
    while let Some((mut f, mut g)) = stack.pop() {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            continue;
        }
        if f.is_zero() || g.is_zero() {
            return Intersection::Infinite;
        }
        let mut f0 = on_x_axis(&f);
        let mut g0 = on_x_axis(&g);
        if g0.is_empty() {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut f0, &mut g0);
        }
        if f0.is_empty() {
            // f = y h, and I(y, g) is the order of g(x, 0) at 0
            let Some(ord) = g0.iter().position(|c| !c.is_zero()) else {
                return Intersection::Infinite;
            };
            total += ord as u64;
            let h = f.div_exact(&y).expect("f vanishes on y = 0");
            stack.push((h, g));
            continue;
        }
        if f0.len() > g0.len() {
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut f0, &mut g0);
        }
        let (r, s) = (f0.len() - 1, g0.len() - 1);
        let c = &g0[s] / &f0[r];
        let shift = Poly::monomial(&vars, vec![(s - r) as u32, 0], c);
        let g1 = &g - &(&shift * &f);
        stack.push((f, g1));
    }
    Intersection::Finite(total)
}

/// `I(f_x, f_y)`; infinite for a non-isolated singularity.
pub fn milnor_number(f: &Poly) -> Result<Intersection, ClassifyError> {
    check_bivariate(f)?;
    if f.is_zero() {
        return Err(ClassifyError::ZeroGerm);
    }
    intersection_multiplicity(&f.derivative(0), &f.derivative(1))
}
