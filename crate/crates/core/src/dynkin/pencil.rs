//! Elliptic fibers as integer combinations of `-2` curves.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;

use super::{ade_diagram, gram_matrix, Diagram, DiagramError, Letter, VertexKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilCheck {
    /// `E . v` for every vertex of the diagram.
    pub e_dot: BTreeMap<String, i64>,
    pub e_square: i64,
    /// `E . v = 0` on the support and `E . E = 0`.
    pub elliptic: bool,
}

/// Tests whether `E = sum mult(v) v` is the class of an elliptic fiber on
/// its support. Vertices missing from `mult` have multiplicity zero.
pub fn elliptic_pencil_check(d: &Diagram, mult: &BTreeMap<String, i64>) -> Result<PencilCheck, DiagramError> {
    let mut m = vec![0i64; d.len()];
    for (id, &k) in mult {
        let i = d.index_of(id).ok_or_else(|| DiagramError::UnknownVertex(id.clone()))?;
        if k <= 0 {
            return Err(DiagramError::NonPositiveMultiplicity(id.clone()));
        }
        m[i] = k;
    }
    let g = gram_matrix(d);
    let gm: Vec<i64> = g.iter().map(|row| row.iter().zip(&m).map(|(a, b)| a * b).sum()).collect();
    let e_square = gm.iter().zip(&m).map(|(a, b)| a * b).sum();
    let elliptic = e_square == 0 && (0..d.len()).all(|i| m[i] == 0 || gm[i] == 0);
    let e_dot = d.vertices().iter().zip(gm).map(|(v, x)| (v.id.clone(), x)).collect();
    Ok(PencilCheck { e_dot, e_square, elliptic })
}

/// The five shapes of fibers made of `-2` curves used for trigonal
/// detection: a cycle, a `D`-type chain with forked ends, and the three
/// exceptional trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PencilConfiguration {
    /// Cycle of `n + 1` curves, all of multiplicity one.
    Cycle(u32),
    /// Chain with two forks, `n + 1` curves.
    ForkedChain(u32),
    /// Multiplicities 1,2,3,4,3,2,1 with a 2 on the middle.
    E7,
    /// Multiplicities 2,4,6,5,4,3,2,1 with a 3 on the 6.
    E8,
    /// Multiplicities 1,2,3,2,1 with a 2 and then a 1 hanging off the middle.
    E6,
}

impl FromStr for PencilConfiguration {
    type Err = DiagramError;

    /// `i:N`, `ii:N`, `iii`, `iv` or `v`.
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let bad = || DiagramError::UnknownConfiguration(s.to_string());
        let (head, n) = match s.split_once(':') {
            Some((h, n)) => (h, Some(n.parse::<u32>().map_err(|_| bad())?)),
            None => (s, None),
        };
        Ok(match (head, n) {
            ("i", Some(n)) => PencilConfiguration::Cycle(n),
            ("ii", Some(n)) => PencilConfiguration::ForkedChain(n),
            ("iii", None) => PencilConfiguration::E7,
            ("iv", None) => PencilConfiguration::E8,
            ("v", None) => PencilConfiguration::E6,
            _ => return Err(bad()),
        })
    }
}

/// Affine extension of an ADE diagram with the multiplicities of its null
/// root; the extra vertex is called `v0`.
pub fn affine_diagram(letter: Letter, n: u32) -> Result<(Diagram, BTreeMap<String, i64>), DiagramError> {
    let mut d = ade_diagram(letter, n, "v")?;
    d.add_vertex("v0", -2, VertexKind::Black)?;
    let id = |k: u32| format!("v{k}");
    let mut mult: BTreeMap<String, i64> = BTreeMap::new();
    let mut set = |ks: &[u32], m: i64| {
        for &k in ks {
            mult.insert(id(k), m);
        }
    };
    match (letter, n) {
        (Letter::A, 1) => {
            d.add_edge("v0", "v1", 2)?;
            set(&[0, 1], 1);
        }
        (Letter::A, _) => {
            d.add_edge("v0", "v1", 1)?;
            d.add_edge("v0", &id(n), 1)?;
            set(&(0..=n).collect::<Vec<_>>(), 1);
        }
        (Letter::D, _) => {
            // chain v1 .. v_{n-1} with v_n on v2; v0 goes on v_{n-2}
            d.add_edge("v0", &id(n - 2), 1)?;
            set(&(2..=n - 2).collect::<Vec<_>>(), 2);
            set(&[0, 1, n - 1, n], 1);
        }
        (Letter::E, 6) => {
            // chain v1..v5, v6 on v3; v0 extends v6
            d.add_edge("v0", "v6", 1)?;
            set(&[1, 5, 0], 1);
            set(&[2, 4, 6], 2);
            set(&[3], 3);
        }
        (Letter::E, 7) => {
            // chain v1..v6, v7 on v3; v0 extends the v1 end
            d.add_edge("v0", "v1", 1)?;
            set(&[0, 6], 1);
            set(&[1, 5, 7], 2);
            set(&[2, 4], 3);
            set(&[3], 4);
        }
        (Letter::E, 8) => {
            // chain v1..v7, v8 on v3; v0 extends the v7 end
            d.add_edge("v0", "v7", 1)?;
            set(&[1], 2);
            set(&[2], 4);
            set(&[3], 6);
            set(&[4], 5);
            set(&[5], 4);
            set(&[6, 8], 3);
            set(&[7], 2);
            set(&[0], 1);
        }
        _ => return Err(DiagramError::NotAde(format!("{letter}_{n}"))),
    }
    Ok((d, mult))
}

fn from_lists(
    chain: &[i64],
    extra: &[(&str, i64)],
    extra_edges: &[(&str, &str)],
) -> Result<(Diagram, BTreeMap<String, i64>), DiagramError> {
    let mut d = Diagram::empty();
    let mut mult = BTreeMap::new();
    for (k, &m) in chain.iter().enumerate() {
        let id = format!("c{}", k + 1);
        d.add_vertex(&id, -2, VertexKind::Black)?;
        if k > 0 {
            d.add_edge(&format!("c{k}"), &id, 1)?;
        }
        mult.insert(id, m);
    }
    for &(id, m) in extra {
        d.add_vertex(id, -2, VertexKind::Black)?;
        mult.insert(id.to_string(), m);
    }
    for &(a, b) in extra_edges {
        d.add_edge(a, b, 1)?;
    }
    Ok((d, mult))
}

/// Diagram and printed multiplicities of a configuration, every curve taken
/// with self-intersection `-2`.
pub fn elliptic_configuration(c: PencilConfiguration) -> Result<(Diagram, BTreeMap<String, i64>), DiagramError> {
    match c {
        PencilConfiguration::Cycle(n) if n >= 1 => affine_diagram(Letter::A, n),
        PencilConfiguration::ForkedChain(n) if n >= 4 => affine_diagram(Letter::D, n),
        PencilConfiguration::E7 => from_lists(&[1, 2, 3, 4, 3, 2, 1], &[("p", 2)], &[("c4", "p")]),
        PencilConfiguration::E8 => from_lists(&[2, 4, 6, 5, 4, 3, 2, 1], &[("p", 3)], &[("c3", "p")]),
        PencilConfiguration::E6 => {
            from_lists(&[1, 2, 3, 2, 1], &[("p", 2), ("q", 1)], &[("c3", "p"), ("p", "q")])
        }
        _ => Err(DiagramError::UnknownConfiguration(format!("{c:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{chain, is_negative_definite};

    #[test]
    fn printed_configurations_are_fibers() {
        for c in ["iii", "iv", "v", "i:1", "i:5", "ii:4", "ii:9"] {
            let (d, m) = elliptic_configuration(c.parse().unwrap()).unwrap();
            let r = elliptic_pencil_check(&d, &m).unwrap();
            assert!(r.elliptic, "{c}");
            assert!(!is_negative_definite(&d), "{c}");
        }
        assert!("vi".parse::<PencilConfiguration>().is_err());
        assert!(elliptic_configuration(PencilConfiguration::ForkedChain(3)).is_err());
    }

    #[test]
    fn non_fibers() {
        let a2 = chain(&[-2, -2]).unwrap();
        let m: BTreeMap<String, i64> = [("v1".to_string(), 1), ("v2".to_string(), 1)].into();
        let r = elliptic_pencil_check(&a2, &m).unwrap();
        assert!(!r.elliptic);
        assert_eq!(r.e_dot["v1"], -1);
        assert_eq!(r.e_square, -2);
        // wrong multiplicity on one vertex of (iii)
        let (d, mut m) = elliptic_configuration(PencilConfiguration::E7).unwrap();
        m.insert("p".into(), 1);
        assert!(!elliptic_pencil_check(&d, &m).unwrap().elliptic);
        m.insert("zz".into(), 1);
        assert!(elliptic_pencil_check(&d, &m).is_err());
    }

    #[test]
    fn affine_null_roots() {
        let cases = [(Letter::A, 1), (Letter::A, 4), (Letter::D, 4), (Letter::D, 7), (Letter::E, 6), (Letter::E, 7), (Letter::E, 8)];
        for (l, n) in cases {
            let (d, m) = affine_diagram(l, n).unwrap();
            assert!(elliptic_pencil_check(&d, &m).unwrap().elliptic, "{l}{n}");
            assert_eq!(d.len(), n as usize + 1);
        }
    }
}
