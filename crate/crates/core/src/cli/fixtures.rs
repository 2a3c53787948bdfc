//! Configuration lists transcribed as data, compared against subdiagram
//! enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::dynkin::{config_diagram, elliptic_pencil_check, enumerate_ade_subdiagrams, ConfigName, Diagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureMode {
    /// The list must equal the enumerated set.
    Exact,
    /// The list must be contained in the enumerated set.
    Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub config: ConfigName,
    /// The entry as printed in the source.
    pub quote: String,
}

/// A printed list of configurations together with the diagrams whose
/// subdiagrams it should consist of.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureList {
    pub name: String,
    pub mode: FixtureMode,
    pub generators: Vec<ConfigName>,
    /// Compare against the enumerated configurations taken twice.
    #[serde(default)]
    pub doubled: bool,
    pub quote: String,
    #[serde(default)]
    pub note: Option<String>,
    pub entries: Vec<FixtureEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: String,
    pub mode: FixtureMode,
    pub pass: bool,
    pub listed: usize,
    pub enumerated: usize,
    /// Enumerated but not listed.
    pub not_listed: Vec<ConfigName>,
    /// Listed but not enumerated.
    pub not_enumerated: Vec<ConfigName>,
    pub duplicates: Vec<ConfigName>,
}

impl FixtureList {
    pub fn check(&self) -> Result<FixtureResult, CliError> {
        let mut listed = BTreeSet::new();
        let mut duplicates = Vec::new();
        for e in &self.entries {
            if !listed.insert(e.config.clone()) {
                duplicates.push(e.config.clone());
            }
        }
        let mut reference = BTreeSet::new();
        for g in &self.generators {
            reference.extend(enumerate_ade_subdiagrams(&config_diagram(g)?)?);
        }
        if self.doubled {
            reference = reference.iter().map(ConfigName::doubled).collect();
        }
        let not_listed: Vec<ConfigName> = reference.difference(&listed).cloned().collect();
        let not_enumerated: Vec<ConfigName> = listed.difference(&reference).cloned().collect();
        let pass = self.entries.is_empty()
            || match self.mode {
                FixtureMode::Exact => not_listed.is_empty() && not_enumerated.is_empty(),
                FixtureMode::Subset => not_enumerated.is_empty(),
            };
        Ok(FixtureResult {
            name: self.name.clone(),
            mode: self.mode,
            pass,
            listed: listed.len(),
            enumerated: reference.len(),
            not_listed,
            not_enumerated,
            duplicates,
        })
    }
}

/// Elliptic fiber candidate: a diagram with multiplicities on its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilFixture {
    pub name: String,
    pub quote: String,
    #[serde(default)]
    pub note: Option<String>,
    pub diagram: serde_json::Value,
    pub multiplicities: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilFixtureResult {
    pub name: String,
    pub pass: bool,
    pub e_square: i64,
}

impl PencilFixture {
    pub fn check(&self) -> Result<PencilFixtureResult, CliError> {
        let d = Diagram::from_value(self.diagram.clone())?;
        let r = elliptic_pencil_check(&d, &self.multiplicities)?;
        Ok(PencilFixtureResult { name: self.name.clone(), pass: r.elliptic, e_square: r.e_square })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixturesReport {
    pub lists: Vec<FixtureResult>,
    pub pencils: Vec<PencilFixtureResult>,
    pub pass: bool,
}

/// Fixtures shipped with the crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(format!("{}: {e}", path.display())))
}

fn json_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut out: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    out.sort();
    Ok(out)
}

pub fn load_fixture(path: &Path) -> Result<FixtureList, CliError> {
    read_json(path)
}

/// Checks every `*.json` list in `dir` and every pencil in `dir/pencils`.
/// `only` restricts to the named fixtures, each of which must exist.
pub fn fixtures_check(dir: &Path, only: &[String]) -> Result<FixturesReport, CliError> {
    let mut lists = Vec::new();
    for path in json_files(dir)? {
        let f = load_fixture(&path)?;
        if only.is_empty() || only.contains(&f.name) {
            lists.push(f.check()?);
        }
    }
    let mut pencils = Vec::new();
    let pencil_dir = dir.join("pencils");
    if pencil_dir.is_dir() {
        for path in json_files(&pencil_dir)? {
            let f: PencilFixture = read_json(&path)?;
            if only.is_empty() || only.contains(&f.name) {
                pencils.push(f.check()?);
            }
        }
    }
    for name in only {
        if !lists.iter().any(|r| &r.name == name) && !pencils.iter().any(|r| &r.name == name) {
            return Err(CliError::Io(format!("no fixture named {name} in {}", dir.display())));
        }
    }
    if lists.is_empty() && pencils.is_empty() {
        return Err(CliError::Io(format!("no fixture files in {}", dir.display())));
    }
    let pass = lists.iter().all(|r| r.pass) && pencils.iter().all(|r| r.pass);
    Ok(FixturesReport { lists, pencils, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(mode: FixtureMode, gens: &[&str], entries: &[&str]) -> FixtureList {
        FixtureList {
            name: "t".into(),
            mode,
            generators: gens.iter().map(|g| g.parse().unwrap()).collect(),
            doubled: false,
            quote: String::new(),
            note: None,
            entries: entries.iter().map(|e| FixtureEntry { config: e.parse().unwrap(), quote: e.to_string() }).collect(),
        }
    }

    #[test]
    fn modes() {
        let exact = list(FixtureMode::Exact, &["A_2"], &["A_2", "A_1", "∅"]);
        assert!(exact.check().unwrap().pass);
        let short = list(FixtureMode::Exact, &["A_2"], &["A_2", "∅"]);
        let r = short.check().unwrap();
        assert!(!r.pass);
        assert_eq!(r.not_listed, vec!["A_1".parse().unwrap()]);
        let sub = list(FixtureMode::Subset, &["A_2"], &["A_2", "∅"]);
        assert!(sub.check().unwrap().pass);
        let wrong = list(FixtureMode::Subset, &["A_2"], &["2A_1"]);
        assert!(!wrong.check().unwrap().pass);
        assert!(list(FixtureMode::Exact, &["A_3"], &[]).check().unwrap().pass);
        let mut dbl = list(FixtureMode::Exact, &["A_2"], &["2A_2", "2A_1", "∅"]);
        dbl.doubled = true;
        assert!(dbl.check().unwrap().pass);
    }

    #[test]
    fn missing_directory() {
        assert!(fixtures_check(Path::new("/nonexistent/fixtures"), &[]).is_err());
    }
}
