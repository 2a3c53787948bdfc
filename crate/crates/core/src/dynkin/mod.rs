//! Diagrams of exceptional curves: typed intersection graphs with their
//! Gram matrices, the Du Val and logarithmic parts, `K_n` resolution chains,
//! ADE subdiagram enumeration and elliptic-fiber checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyq::Rational;

mod config;
mod enumerate;
mod pencil;

pub use config::{ade_diagram, ade_type_of, config_of, config_diagram, ConfigName, Letter};
pub use enumerate::enumerate_ade_subdiagrams;
pub use pencil::{affine_diagram, elliptic_configuration, elliptic_pencil_check, PencilCheck, PencilConfiguration};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("K_n needs n >= 1, got {0}")]
    KnIndex(u32),
    #[error("vertex `{id}` of kind {kind} must have self-intersection {expected}, got {got}")]
    Incoherent { id: String, kind: VertexKind, expected: i64, got: i64 },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("edge multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("not a disjoint union of ADE diagrams: {0}")]
    NotAde(String),
    #[error("multiplicity of `{0}` must be positive")]
    NonPositiveMultiplicity(String),
    #[error("bad configuration name `{0}`")]
    BadName(String),
    #[error("unknown elliptic configuration `{0}`")]
    UnknownConfiguration(String),
    #[error("diagram JSON: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Black,
    Transparent,
    DoubleTransparent,
    Crossed,
}

impl VertexKind {
    pub fn self_intersection(self) -> i64 {
        match self {
            VertexKind::Black => -2,
            VertexKind::Transparent => -1,
            VertexKind::DoubleTransparent => -4,
            VertexKind::Crossed => -3,
        }
    }

    pub fn from_self_intersection(s: i64) -> Option<VertexKind> {
        Some(match s {
            -2 => VertexKind::Black,
            -1 => VertexKind::Transparent,
            -4 => VertexKind::DoubleTransparent,
            -3 => VertexKind::Crossed,
            _ => return None,
        })
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::Black => "black",
            VertexKind::Transparent => "transparent",
            VertexKind::DoubleTransparent => "double_transparent",
            VertexKind::Crossed => "crossed",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    #[serde(rename = "self")]
    pub self_intersection: i64,
    pub kind: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub mult: u32,
}

/// Intersection graph of curves. Edges are stored by vertex position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EdgeRepr {
    Simple(String, String),
    Weighted(String, String, u32),
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    vertices: Vec<Vertex>,
    #[serde(default)]
    edges: Vec<EdgeRepr>,
}

impl Diagram {
    pub fn empty() -> Self {
        Diagram { vertices: Vec::new(), edges: Vec::new() }
    }

    /// Builds a diagram from `(id, self-intersection)` pairs, the kind being
    /// read off the self-intersection, and edges `(a, b, mult)`.
    pub fn from_parts(vertices: &[(&str, i64)], edges: &[(&str, &str, u32)]) -> Result<Self, DiagramError> {
        let mut d = Diagram::empty();
        for &(id, s) in vertices {
            let kind = VertexKind::from_self_intersection(s).ok_or_else(|| DiagramError::Incoherent {
                id: id.to_string(),
                kind: VertexKind::Black,
                expected: -2,
                got: s,
            })?;
            d.add_vertex(id, s, kind)?;
        }
        for &(a, b, m) in edges {
            d.add_edge(a, b, m)?;
        }
        Ok(d)
    }

    pub fn add_vertex(&mut self, id: &str, self_intersection: i64, kind: VertexKind) -> Result<usize, DiagramError> {
        if kind.self_intersection() != self_intersection {
            return Err(DiagramError::Incoherent {
                id: id.to_string(),
                kind,
                expected: kind.self_intersection(),
                got: self_intersection,
            });
        }
        if self.index_of(id).is_some() {
            return Err(DiagramError::DuplicateVertex(id.to_string()));
        }
        self.vertices.push(Vertex { id: id.to_string(), self_intersection, kind });
        Ok(self.vertices.len() - 1)
    }

    /// Adds `mult` to the intersection number of `a` and `b`.
    pub fn add_edge(&mut self, a: &str, b: &str, mult: u32) -> Result<(), DiagramError> {
        let ia = self.index_of(a).ok_or_else(|| DiagramError::UnknownVertex(a.to_string()))?;
        let ib = self.index_of(b).ok_or_else(|| DiagramError::UnknownVertex(b.to_string()))?;
        if ia == ib {
            return Err(DiagramError::SelfLoop(a.to_string()));
        }
        if mult == 0 {
            return Err(DiagramError::ZeroMultiplicity);
        }
        self.edges.push(Edge { a: ia.min(ib), b: ia.max(ib), mult });
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.self_intersection).collect()
    }

    /// Total intersection number of two distinct vertices.
    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return self.vertices[i].self_intersection;
        }
        let (a, b) = (i.min(j), i.max(j));
        self.edges.iter().filter(|e| e.a == a && e.b == b).map(|e| e.mult as i64).sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.a == i {
                    Some(e.b)
                } else if e.b == i {
                    Some(e.a)
                } else {
                    None
                }
            })
            .collect();
        set.into_iter().collect()
    }

    /// Induced subdiagram on the given vertex positions, kept in input order.
    pub fn induced(&self, keep: &[usize]) -> Diagram {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let (a, b) = (*pos.get(&e.a)?, *pos.get(&e.b)?);
                Some(Edge { a: a.min(b), b: a.max(b), mult: e.mult })
            })
            .collect();
        Diagram { vertices, edges }
    }

    /// Vertex positions of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                for w in self.neighbors(comp[k]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn from_json(src: &str) -> Result<Self, DiagramError> {
        let repr: DiagramRepr = serde_json::from_str(src).map_err(|e| DiagramError::Json(e.to_string()))?;
        Diagram::from_repr(repr)
    }

    fn from_repr(repr: DiagramRepr) -> Result<Self, DiagramError> {
        let mut d = Diagram::empty();
        for v in repr.vertices {
            d.add_vertex(&v.id, v.self_intersection, v.kind)?;
        }
        for e in repr.edges {
            match e {
                EdgeRepr::Simple(a, b) => d.add_edge(&a, &b, 1)?,
                EdgeRepr::Weighted(a, b, m) => d.add_edge(&a, &b, m)?,
            }
        }
        Ok(d)
    }

    pub fn from_value(v: serde_json::Value) -> Result<Self, DiagramError> {
        let repr: DiagramRepr = serde_json::from_value(v).map_err(|e| DiagramError::Json(e.to_string()))?;
        Diagram::from_repr(repr)
    }

    pub fn to_value(&self) -> serde_json::Value {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (self.vertices[e.a].id.clone(), self.vertices[e.b].id.clone());
                if e.mult == 1 {
                    EdgeRepr::Simple(a, b)
                } else {
                    EdgeRepr::Weighted(a, b, e.mult)
                }
            })
            .collect();
        serde_json::to_value(DiagramRepr { vertices: self.vertices.clone(), edges }).expect("diagram serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("diagram serializes")
    }
}

/// A linear chain with the given self-intersections, vertices named `v1, v2, ...`.
pub fn chain(selfs: &[i64]) -> Result<Diagram, DiagramError> {
    let names: Vec<String> = (1..=selfs.len()).map(|i| format!("v{i}")).collect();
    let verts: Vec<(&str, i64)> = names.iter().map(String::as_str).zip(selfs.iter().copied()).collect();
    let edges: Vec<(&str, &str, u32)> = names.windows(2).map(|w| (w[0].as_str(), w[1].as_str(), 1)).collect();
    Diagram::from_parts(&verts, &edges)
}

/// Self-intersections along the chain of a minimal resolution of `K_n`.
fn kn_minimal_selfs(n: u32) -> Result<Vec<i64>, DiagramError> {
    match n {
        0 => Err(DiagramError::KnIndex(n)),
        1 => Ok(vec![-4]),
        _ => {
            let mut s = vec![-3];
            s.extend(std::iter::repeat_n(-2, n as usize - 2));
            s.push(-3);
            Ok(s)
        }
    }
}

pub fn kn_minimal(n: u32) -> Result<Diagram, DiagramError> {
    chain(&kn_minimal_selfs(n)?)
}

/// Blows up every intersection point of the minimal `K_n` chain.
pub fn kn_right_resolution(n: u32) -> Result<Diagram, DiagramError> {
    let minimal = kn_minimal_selfs(n)?;
    let mut out: Vec<i64> = Vec::with_capacity(2 * minimal.len());
    for (k, &s) in minimal.iter().enumerate() {
        if k > 0 {
            // the point shared with the previous curve
            *out.last_mut().expect("previous curve") -= 1;
            out.push(-1);
            out.push(s - 1);
        } else {
            out.push(s);
        }
    }
    chain(&out)
}

pub fn gram_matrix(d: &Diagram) -> Vec<Vec<i64>> {
    let n = d.len();
    let mut g = vec![vec![0i64; n]; n];
    for (i, v) in d.vertices.iter().enumerate() {
        g[i][i] = v.self_intersection;
    }
    for e in &d.edges {
        g[e.a][e.b] += e.mult as i64;
        g[e.b][e.a] += e.mult as i64;
    }
    g
}

/// Exact test by Gaussian elimination of `-G` over the rationals: positive
/// definite iff every pivot is positive. The empty diagram counts as definite.
pub fn is_negative_definite(d: &Diagram) -> bool {
    let mut m: Vec<Vec<Rational>> =
        gram_matrix(d).into_iter().map(|row| row.into_iter().map(|x| Rational::from_integer((-x).into())).collect()).collect();
    let n = m.len();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    true
}

/// Black vertices.
pub fn duv_part(d: &Diagram) -> Diagram {
    let keep: Vec<usize> = (0..d.len()).filter(|&i| d.vertices[i].kind == VertexKind::Black).collect();
    d.induced(&keep)
}

fn double_transparent_neighbors(d: &Diagram, i: usize) -> usize {
    d.neighbors(i).into_iter().filter(|&j| d.vertices[j].kind == VertexKind::DoubleTransparent).count()
}

/// Double transparent vertices and the transparent ones meeting at least
/// two of them.
pub fn log_part(d: &Diagram) -> Diagram {
    let keep: Vec<usize> = (0..d.len())
        .filter(|&i| match d.vertices[i].kind {
            VertexKind::DoubleTransparent => true,
            VertexKind::Transparent => double_transparent_neighbors(d, i) >= 2,
            _ => false,
        })
        .collect();
    d.induced(&keep)
}

/// `C_g . V` for every black, transparent and double transparent vertex;
/// crossed vertices do not occur on right resolutions and are left out.
pub fn cg_intersections(d: &Diagram) -> BTreeMap<String, i64> {
    d.vertices
        .iter()
        .enumerate()
        .filter_map(|(i, v)| {
            let c = match v.kind {
                VertexKind::Black | VertexKind::DoubleTransparent => 0,
                VertexKind::Transparent => 2 - double_transparent_neighbors(d, i) as i64,
                VertexKind::Crossed => return None,
            };
            Some((v.id.clone(), c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kn_chains() {
        assert_eq!(kn_minimal(1).unwrap().self_intersections(), vec![-4]);
        assert_eq!(kn_minimal(2).unwrap().self_intersections(), vec![-3, -3]);
        assert_eq!(kn_minimal(5).unwrap().self_intersections(), vec![-3, -2, -2, -2, -3]);
        assert_eq!(kn_right_resolution(1).unwrap().self_intersections(), vec![-4]);
        assert_eq!(kn_right_resolution(2).unwrap().self_intersections(), vec![-4, -1, -4]);
        assert_eq!(kn_right_resolution(3).unwrap().self_intersections(), vec![-4, -1, -4, -1, -4]);
        assert!(kn_minimal(0).is_err());
        assert!(kn_right_resolution(0).is_err());
    }

    #[test]
    fn right_resolution_pattern() {
        for n in 1..=20 {
            let s = kn_right_resolution(n).unwrap().self_intersections();
            assert_eq!(s.len(), 2 * n as usize - 1);
            for (k, x) in s.iter().enumerate() {
                assert_eq!(*x, if k % 2 == 0 { -4 } else { -1 });
            }
            assert!(is_negative_definite(&kn_minimal(n).unwrap()));
        }
    }

    #[test]
    fn gram_and_definiteness() {
        let a2 = chain(&[-2, -2]).unwrap();
        assert_eq!(gram_matrix(&a2), vec![vec![-2, 1], vec![1, -2]]);
        assert!(is_negative_definite(&a2));
        assert_eq!(gram_matrix(&kn_minimal(2).unwrap()), vec![vec![-3, 1], vec![1, -3]]);
        assert!(!is_negative_definite(&chain(&[-1, -1]).unwrap()));
        assert!(is_negative_definite(&Diagram::empty()));
        // the right resolution of K_2 still contracts
        assert!(is_negative_definite(&kn_right_resolution(2).unwrap()));
    }

    #[test]
    fn parts_and_cg() {
        let r = kn_right_resolution(2).unwrap();
        assert_eq!(log_part(&r).len(), 3);
        assert!(duv_part(&r).is_empty());
        let cg = cg_intersections(&r);
        assert!(cg.values().all(|&c| c == 0));

        let mut d = chain(&[-2, -2, -2]).unwrap();
        d.add_vertex("e", -1, VertexKind::Transparent).unwrap();
        assert_eq!(duv_part(&d).len(), 3);
        assert!(log_part(&d).is_empty());
        assert_eq!(cg_intersections(&d)["e"], 2);

        let d = Diagram::from_parts(&[("q", -4), ("e", -1)], &[("q", "e", 1)]).unwrap();
        let l = log_part(&d);
        assert_eq!(l.vertices().iter().map(|v| v.id.as_str()).collect::<Vec<_>>(), vec!["q"]);
        assert_eq!(cg_intersections(&d)["e"], 1);
    }

    #[test]
    fn coherence_and_json() {
        let mut d = Diagram::empty();
        assert!(d.add_vertex("a", -3, VertexKind::Black).is_err());
        d.add_vertex("a", -2, VertexKind::Black).unwrap();
        assert!(d.add_vertex("a", -2, VertexKind::Black).is_err());
        assert!(d.add_edge("a", "a", 1).is_err());
        assert!(d.add_edge("a", "b", 1).is_err());

        let src = r#"{"vertices":[{"id":"a","self":-2,"kind":"black"},{"id":"b","self":-4,"kind":"double_transparent"}],
                      "edges":[["a","b"],["a","b",2]]}"#;
        let d = Diagram::from_json(src).unwrap();
        assert_eq!(d.intersection(0, 1), 3);
        assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
        assert!(Diagram::from_json(r#"{"vertices":[{"id":"a","self":-1,"kind":"black"}]}"#).is_err());
    }
}
