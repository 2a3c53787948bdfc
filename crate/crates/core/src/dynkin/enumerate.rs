use std::collections::{BTreeMap, BTreeSet};

use super::{ade_diagram, ade_type_of, config_of, ConfigName, Diagram, DiagramError, Letter};

// Components beyond this size would make the per-component subset walk slow.
const MAX_COMPONENT: usize = 24;

/// Configurations of a single connected ADE diagram: every vertex subset is
/// visited once and named by its components.
fn component_configs(letter: Letter, n: u32) -> Result<BTreeSet<ConfigName>, DiagramError> {
    let d = ade_diagram(letter, n, "v")?;
    let k = d.len();
    if k > MAX_COMPONENT {
        return Err(DiagramError::NotAde(format!("{letter}_{n} is too large to enumerate")));
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let keep: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        out.insert(config_of(&d.induced(&keep))?);
    }
    Ok(out)
}

/// All induced subdiagrams of a disjoint union of ADE diagrams, up to
/// isomorphism, including the empty one.
///
/// Each connected component is enumerated on its own (once per type) and the
/// results are combined, since an induced subdiagram of a disjoint union is
/// a union of induced subdiagrams of the pieces.
pub fn enumerate_ade_subdiagrams(d: &Diagram) -> Result<BTreeSet<ConfigName>, DiagramError> {
    let mut cache: BTreeMap<(Letter, u32), BTreeSet<ConfigName>> = BTreeMap::new();
    let mut acc: BTreeSet<ConfigName> = BTreeSet::from([ConfigName::empty()]);
    for comp in d.components() {
        let ty = ade_type_of(d, &comp).ok_or_else(|| {
            let ids: Vec<&str> = comp.iter().map(|&i| d.vertices()[i].id.as_str()).collect();
            DiagramError::NotAde(format!("component {{{}}}", ids.join(", ")))
        })?;
        if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(ty) {
            e.insert(component_configs(ty.0, ty.1)?);
        }
        let part = &cache[&ty];
        acc = acc.iter().flat_map(|a| part.iter().map(move |b| a.union(b))).collect();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::config_diagram;

    fn names(c: &str) -> Vec<String> {
        let d = config_diagram(&c.parse().unwrap()).unwrap();
        enumerate_ade_subdiagrams(&d).unwrap().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(names("A_2"), vec!["A_2", "A_1", "∅"]);
        let a4 = names("A_4");
        assert_eq!(a4.len(), 7);
        for want in ["∅", "A_4", "A_3", "A_2", "A_1", "A_2 A_1", "2A_1"] {
            assert!(a4.contains(&want.to_string()), "{want}");
        }
        assert_eq!(names("∅"), vec!["∅"]);
        let d4 = names("D_4");
        for want in ["D_4", "A_3", "3A_1", "A_2", "2A_1", "A_1", "∅"] {
            assert!(d4.contains(&want.to_string()), "{want}");
        }
        assert_eq!(d4.len(), 7);
    }

    #[test]
    fn unions_combine_components() {
        let two = names("2A_1");
        assert_eq!(two, vec!["2A_1", "A_1", "∅"]);
        let a7 = names("A_7");
        for want in ["2A_3", "A_4 A_2", "2A_2 A_1", "4A_1"] {
            assert!(a7.contains(&want.to_string()), "{want}");
        }
        assert!(!a7.contains(&"A_4 2A_1".to_string()));
    }

    #[test]
    fn rejects_non_ade() {
        let d = Diagram::from_parts(&[("a", -2), ("b", -1)], &[("a", "b", 1)]).unwrap();
        assert!(enumerate_ade_subdiagrams(&d).is_err());
    }
}
