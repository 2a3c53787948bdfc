//! Command-line front end. Every subcommand prints one JSON document on
//! standard output; the exit code is 0 on success or pass, 1 on a verified
//! failure and 2 on bad input.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::dynkin::{
    config_diagram, elliptic_configuration, elliptic_pencil_check, enumerate_ade_subdiagrams, Diagram, DiagramError,
    PencilConfiguration,
};
use crate::families::{
    family_catalog, parse_points, validate_catalog, verify_g2, verify_g3a, verify_g3b, verify_g4, verify_quintic,
    FamilyError, FamilyId, FamilyReport,
};
use crate::polyq::{fmt_rational, parse, parse_with_vars, ParseError, Poly, VarList};
use crate::singclass::{classify_germ, multiplicity, ClassifyError, DEFAULT_ORDER};
use crate::wps::{genus_system_invariants, WeightedSpace, WpsError};

pub mod fixtures;

pub use fixtures::{
    default_dir, fixtures_check, load_fixture, FixtureEntry, FixtureList, FixtureMode, FixtureResult,
    FixturesReport, PencilFixture, PencilFixtureResult,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Json(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Wps(#[from] WpsError),
}

impl CliError {
    fn to_json(&self) -> Value {
        let kind = match self {
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Json(_) => "json",
            CliError::Parse(_) | CliError::Family(FamilyError::Parse(_)) => "parse",
            CliError::Family(_) => "family",
            CliError::Diagram(_) => "diagram",
            CliError::Classify(_) => "classify",
            CliError::Wps(_) => "wps",
        };
        let mut v = json!({ "kind": kind, "message": self.to_string() });
        let pe = match self {
            CliError::Parse(p) | CliError::Family(FamilyError::Parse(p)) => Some(p),
            _ => None,
        };
        if let Some(p) = pe {
            v["line"] = json!(p.line);
            v["column"] = json!(p.column);
        }
        json!({ "error": v })
    }
}

#[derive(Parser, Debug)]
#[command(name = "logdp", version, about = "Checkers for log del Pezzo surfaces of index at most two")]
pub struct Cli {
    /// Emit JSON (the only format; accepted for explicitness).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a curve or surface germ at the origin.
    Classify {
        #[arg(long)]
        germ: String,
        /// Require a surface germ in three variables.
        #[arg(long)]
        surface: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
    },
    /// Check a family equation and report its invariants.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        input: PathBuf,
        /// JSON list of points, coordinates as rational strings.
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// List the ADE subdiagrams of a configuration or diagram.
    Enumerate {
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        ade: Option<String>,
        #[arg(long)]
        diagram: Option<PathBuf>,
    },
    /// Test whether a weighted sum of curves is an elliptic fiber.
    PencilCheck {
        #[arg(long, conflicts_with = "config", required_unless_present = "config")]
        diagram: Option<PathBuf>,
        /// One of i:N, ii:N, iii, iv, v.
        #[arg(long)]
        config: Option<String>,
        /// Multiplicities as `v1=1,v2=2`; defaults to those of the file or
        /// configuration.
        #[arg(long)]
        mult: Option<String>,
    },
    /// Print the family table.
    Catalog,
    /// Compare the shipped configuration lists with enumeration.
    Fixtures {
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        name: Vec<String>,
    },
    /// Invariants of a weighted projective space.
    Wps {
        /// Comma list, e.g. `1,1,2,3`.
        #[arg(long)]
        weights: String,
        /// Degrees of the equations, e.g. `6` or `2,3`.
        #[arg(long)]
        degrees: Option<String>,
        /// Also print the linear systems of a surface of this genus.
        #[arg(long)]
        genus: Option<i64>,
    },
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn emit<T: Serialize>(v: &T, code: i32) -> Outcome {
    Outcome { code, stdout: serde_json::to_string_pretty(v).expect("serializable") + "\n" }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: e.to_string() },
                _ => emit(&CliError::Usage(e.to_string().trim().to_string()).to_json(), 2),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => emit(&e.to_json(), 2),
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Classify { germ, surface, order } => classify(&germ, surface, order),
        Command::Verify { family, input, points } => {
            let report = verify_file(&family, &read(&input)?, points.as_ref().map(read).transpose()?.as_deref())?;
            let code = if report.passed() { 0 } else { 1 };
            Ok(emit(&report, code))
        }
        Command::Enumerate { ade, diagram } => {
            let (input, d) = match (ade, diagram) {
                (Some(name), _) => {
                    let c = name.parse()?;
                    (name, config_diagram(&c)?)
                }
                (None, Some(path)) => (path.display().to_string(), read_diagram(&path)?),
                (None, None) => return Err(CliError::Usage("give --ade or --diagram".into())),
            };
            let configs = enumerate_ade_subdiagrams(&d)?;
            Ok(emit(&json!({ "input": input, "count": configs.len(), "configurations": configs }), 0))
        }
        Command::PencilCheck { diagram, config, mult } => {
            let (d, default_mult) = match (diagram, config) {
                (Some(path), _) => {
                    let v = read_json(&path)?;
                    let m = match v.get("multiplicities") {
                        Some(m) => serde_json::from_value(m.clone()).map_err(|e| CliError::Json(e.to_string()))?,
                        None => BTreeMap::new(),
                    };
                    let dv = v.get("diagram").cloned().unwrap_or(v);
                    (Diagram::from_value(dv)?, m)
                }
                (None, Some(c)) => elliptic_configuration(c.parse::<PencilConfiguration>()?)?,
                (None, None) => return Err(CliError::Usage("give --diagram or --config".into())),
            };
            let m = match mult {
                Some(s) => parse_mult(&s)?,
                None => default_mult,
            };
            let r = elliptic_pencil_check(&d, &m)?;
            let code = if r.elliptic { 0 } else { 1 };
            Ok(emit(&json!({ "multiplicities": m, "check": r }), code))
        }
        Command::Catalog => {
            validate_catalog()?;
            Ok(emit(&json!({ "validated": true, "families": family_catalog() }), 0))
        }
        Command::Fixtures { dir, name } => {
            let r = fixtures_check(&dir.unwrap_or_else(default_dir), &name)?;
            let code = if r.pass { 0 } else { 1 };
            Ok(emit(&r, code))
        }
        Command::Wps { weights, degrees, genus } => wps(&weights, degrees.as_deref(), genus),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_json(path: &PathBuf) -> Result<Value, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::Json(format!("{}: {e}", path.display())))
}

fn read_diagram(path: &PathBuf) -> Result<Diagram, CliError> {
    Ok(Diagram::from_json(&read(path)?)?)
}

fn classify(src: &str, surface: bool, order: u32) -> Result<Outcome, CliError> {
    let f = parse(src)?;
    if surface && f.nvars() != 3 {
        return Err(CliError::Usage(format!("--surface needs three variables, found {}", f.nvars())));
    }
    let t = classify_germ(&f, order)?;
    let details = json!({
        "variables": f.vars().to_vec(),
        "multiplicity": multiplicity(&f)?,
        "order": order,
        "kind": if f.nvars() == 2 { "curve" } else { "surface" },
    });
    Ok(emit(&json!({ "type": t, "milnor": t.milnor(), "details": details }), 0))
}

/// Splits a `.poly` text into its `;`-separated polynomials over `vars`.
/// `#` starts a comment running to the end of the line. Error positions
/// refer to the whole text.
pub fn parse_poly_file(src: &str, vars: &VarList) -> Result<Vec<Poly>, ParseError> {
    let blanked: String = src
        .split_inclusive('\n')
        .map(|line| match line.find('#') {
            Some(i) => {
                let tail: String = line[i..].chars().map(|c| if c == '\n' { '\n' } else { ' ' }).collect();
                format!("{}{}", &line[..i], tail)
            }
            None => line.to_string(),
        })
        .collect();
    let mut out = Vec::new();
    let mut base = 0;
    for piece in blanked.split(';') {
        if !piece.trim().is_empty() {
            out.push(parse_with_vars(piece, vars).map_err(|e| e.relocate(&blanked, base))?);
        }
        base += piece.len() + 1;
    }
    Ok(out)
}

/// Runs the verifier named by `family` on the contents of a `.poly` file.
pub fn verify_file(family: &str, poly_src: &str, points_src: Option<&str>) -> Result<FamilyReport, CliError> {
    let id: FamilyId = family.parse()?;
    let polys = parse_poly_file(poly_src, &id.input_vars())?;
    let points = match points_src {
        Some(s) => parse_points(&serde_json::from_str(s).map_err(|e| CliError::Json(e.to_string()))?)?,
        None => Vec::new(),
    };
    let expected = if id == FamilyId::G4CiP11112 { 2 } else { 1 };
    if polys.len() != expected {
        return Err(FamilyError::EquationCount { family: id, expected, got: polys.len() }.into());
    }
    Ok(match id {
        FamilyId::G2P1123 => verify_g2(&polys[0], &points)?,
        FamilyId::G3aP1144 => verify_g3a(&polys[0], &points)?,
        FamilyId::G3bP1112 => verify_g3b(&polys[0], &points)?,
        FamilyId::G4CiP11112 => verify_g4(&polys[0], &polys[1], &points)?,
        FamilyId::G6cP1114 => verify_quintic(&polys[0], &points)?,
        FamilyId::HigherCone => {
            return Err(CliError::Usage("the cone over the rational normal quartic has no equation to verify".into()))
        }
    })
}

fn parse_mult(s: &str) -> Result<BTreeMap<String, i64>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage(format!("bad multiplicity `{p}`")))?;
            let v = v.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad multiplicity `{p}`")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::Usage(format!("bad {what} `{x}`"))))
        .collect()
}

fn wps(weights: &str, degrees: Option<&str>, genus: Option<i64>) -> Result<Outcome, CliError> {
    let space = WeightedSpace::new(parse_list(weights, "weight")?)?;
    let strata: Vec<Value> = space
        .singular_strata()?
        .into_iter()
        .map(|s| json!({ "support": s.support, "order": s.order }))
        .collect();
    let mut out = json!({
        "weights": space.weights(),
        "well_formed": space.is_well_formed(),
        "singular_strata": strata,
    });
    if let Some(d) = degrees {
        let k = space.k_square(&parse_list(d, "degree")?)?;
        out["k_square"] = json!(fmt_rational(&k.k_square));
        out["g"] = json!(fmt_rational(&k.g));
    }
    if let Some(g) = genus {
        out["genus_systems"] = json!(genus_system_invariants(g)?);
    }
    Ok(emit(&out, 0))
}
