use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Diagram, DiagramError, VertexKind};

/// Component letters, declared in rendering order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    K,
    E,
    D,
    A,
}

impl Letter {
    fn valid_index(self, n: u32) -> bool {
        match self {
            Letter::A | Letter::K => n >= 1,
            Letter::D => n >= 4,
            Letter::E => (6..=8).contains(&n),
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'A' => Letter::A,
            'D' => Letter::D,
            'E' => Letter::E,
            'K' => Letter::K,
            _ => return None,
        })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => "A",
            Letter::D => "D",
            Letter::E => "E",
            Letter::K => "K",
        };
        f.write_str(c)
    }
}

/// Multiset of singularity types such as `2A_3 A_1`. Ordered by total rank,
/// largest first, then by rendering order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConfigName {
    // (letter, Reverse(index)) keys iterate in rendering order
    parts: BTreeMap<(Letter, Reverse<u32>), u32>,
}

impl ConfigName {
    pub fn empty() -> Self {
        ConfigName::default()
    }

    pub fn single(letter: Letter, n: u32) -> Result<Self, DiagramError> {
        let mut c = ConfigName::empty();
        c.push(letter, n)?;
        Ok(c)
    }

    pub fn push(&mut self, letter: Letter, n: u32) -> Result<(), DiagramError> {
        self.push_many(letter, n, 1)
    }

    fn push_many(&mut self, letter: Letter, n: u32, count: u32) -> Result<(), DiagramError> {
        if !letter.valid_index(n) {
            return Err(DiagramError::BadName(format!("{letter}_{n}")));
        }
        if count > 0 {
            *self.parts.entry((letter, Reverse(n))).or_insert(0) += count;
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Components with repetition, in rendering order.
    pub fn components(&self) -> Vec<(Letter, u32)> {
        self.parts
            .iter()
            .flat_map(|(&(l, Reverse(n)), &c)| std::iter::repeat_n((l, n), c as usize))
            .collect()
    }

    /// Number of vertices of the corresponding diagram (the Milnor number
    /// for ADE components).
    pub fn rank(&self) -> u32 {
        self.parts.iter().map(|(&(_, Reverse(n)), &c)| n * c).sum()
    }

    pub fn union(&self, other: &ConfigName) -> ConfigName {
        let mut out = self.clone();
        for (k, c) in &other.parts {
            *out.parts.entry(*k).or_insert(0) += c;
        }
        out
    }

    /// Each component counted twice.
    pub fn doubled(&self) -> ConfigName {
        self.union(self)
    }
}

impl Ord for ConfigName {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |c: &ConfigName| c.components().into_iter().map(|(l, n)| (l, Reverse(n))).collect::<Vec<_>>();
        other.rank().cmp(&self.rank()).then_with(|| key(self).cmp(&key(other)))
    }
}

impl PartialOrd for ConfigName {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ConfigName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        let mut first = true;
        for (&(l, Reverse(n)), &c) in &self.parts {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "{l}_{n}")?;
        }
        Ok(())
    }
}

impl FromStr for ConfigName {
    type Err = DiagramError;

    /// Accepts `2A_3 A_1`, `2A3 A1`, `A_{11}` and `∅` (or an empty string).
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let bad = || DiagramError::BadName(s.to_string());
        let mut out = ConfigName::empty();
        for tok in s.split_whitespace() {
            if tok == "∅" {
                continue;
            }
            let digits_end = tok.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
            let count: u32 = if digits_end == 0 { 1 } else { tok[..digits_end].parse().map_err(|_| bad())? };
            let mut rest = tok[digits_end..].chars();
            let letter = rest.next().and_then(Letter::from_char).ok_or_else(bad)?;
            let idx = rest.as_str().trim_start_matches('_').trim_start_matches('{').trim_end_matches('}');
            let n: u32 = idx.parse().map_err(|_| bad())?;
            if count == 0 {
                return Err(bad());
            }
            out.push_many(letter, n, count).map_err(|_| bad())?;
        }
        Ok(out)
    }
}

impl Serialize for ConfigName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ConfigName {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The black Dynkin diagram of `A_n`, `D_n` or `E_n`, vertex ids prefixed.
///
/// `D_n` is a chain of `n - 1` with one extra vertex on the second;
/// `E_n` is a chain of `n - 1` with one extra vertex on the third.
pub fn ade_diagram(letter: Letter, n: u32, prefix: &str) -> Result<Diagram, DiagramError> {
    if letter == Letter::K || !letter.valid_index(n) {
        return Err(DiagramError::NotAde(format!("{letter}_{n}")));
    }
    let mut d = Diagram::empty();
    let id = |k: u32| format!("{prefix}{k}");
    for k in 1..=n {
        d.add_vertex(&id(k), -2, VertexKind::Black)?;
    }
    let chain_len = if letter == Letter::A { n } else { n - 1 };
    for k in 1..chain_len {
        d.add_edge(&id(k), &id(k + 1), 1)?;
    }
    match letter {
        Letter::D => d.add_edge(&id(2), &id(n), 1)?,
        Letter::E => d.add_edge(&id(3), &id(n), 1)?,
        _ => {}
    }
    Ok(d)
}

/// Disjoint union of the ADE diagrams of a configuration, components named
/// `c1_`, `c2_`, ... in rendering order.
pub fn config_diagram(c: &ConfigName) -> Result<Diagram, DiagramError> {
    let mut out = Diagram::empty();
    for (k, (l, n)) in c.components().into_iter().enumerate() {
        let part = ade_diagram(l, n, &format!("c{}_", k + 1))?;
        let offset = out.vertices.len();
        out.vertices.extend(part.vertices);
        out.edges.extend(part.edges.into_iter().map(|e| super::Edge { a: e.a + offset, b: e.b + offset, mult: e.mult }));
    }
    Ok(out)
}

/// ADE type of the connected subdiagram on `comp`, from its shape: a chain,
/// or a tree with one fork whose arms have lengths `(1, 1, r)`, `(1, 2, 2)`,
/// `(1, 2, 3)` or `(1, 2, 4)`. Only black vertices and simple edges qualify.
pub fn ade_type_of(d: &Diagram, comp: &[usize]) -> Option<(Letter, u32)> {
    let k = comp.len();
    if k == 0 {
        return None;
    }
    let inside = |i: usize| comp.contains(&i);
    if comp.iter().any(|&i| d.vertices[i].kind != VertexKind::Black) {
        return None;
    }
    let edges: Vec<_> = d.edges.iter().filter(|e| inside(e.a) && inside(e.b)).collect();
    if edges.iter().any(|e| e.mult != 1) || edges.len() != k - 1 {
        return None;
    }
    let nbrs = |i: usize| -> Vec<usize> { d.neighbors(i).into_iter().filter(|&j| inside(j)).collect() };
    // connectivity
    let mut seen = vec![comp[0]];
    let mut q = 0;
    while q < seen.len() {
        for w in nbrs(seen[q]) {
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
        q += 1;
    }
    if seen.len() != k {
        return None;
    }
    let forks: Vec<usize> = comp.iter().copied().filter(|&i| nbrs(i).len() >= 3).collect();
    match forks.as_slice() {
        [] => Some((Letter::A, k as u32)),
        [c] => {
            let starts = nbrs(*c);
            if starts.len() != 3 {
                return None;
            }
            let mut arms: Vec<u32> = starts
                .into_iter()
                .map(|s| {
                    let (mut prev, mut cur, mut len) = (*c, s, 1);
                    loop {
                        let next: Vec<usize> = nbrs(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, r] => Some((Letter::D, r + 3)),
                [1, 2, 2] => Some((Letter::E, 6)),
                [1, 2, 3] => Some((Letter::E, 7)),
                [1, 2, 4] => Some((Letter::E, 8)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Configuration name of a diagram whose components are all ADE.
pub fn config_of(d: &Diagram) -> Result<ConfigName, DiagramError> {
    let mut out = ConfigName::empty();
    for comp in d.components() {
        let (l, n) = ade_type_of(d, &comp).ok_or_else(|| {
            let ids: Vec<&str> = comp.iter().map(|&i| d.vertices[i].id.as_str()).collect();
            DiagramError::NotAde(format!("component {{{}}}", ids.join(", ")))
        })?;
        out.push(l, n)?;
    }
    Ok(out)
}
