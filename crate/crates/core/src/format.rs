//! JSON instance files.
//!
//! Every file is an object with a `kind` field. Tables hold element, object
//! or arrow indices; `-1` marks an undefined entry. Morphism and cofunctor
//! files refer to their endpoints by path, resolved against the directory
//! of the referencing file.
//!
//! The canonical layout puts each top-level key on its own line in sorted
//! order and each table row on its own line; [`write_instance`] emits it
//! and reproduces canonical input byte for byte.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::{AlgebraError, BiUnaryAlgebra, SemigroupMorphism};
use crate::category::{CategoryError, Cofunctor, CofunctorError, FinCat};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("{path}: expected a {expected} file")]
    WrongKind { path: PathBuf, expected: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Cofunctor(#[from] CofunctorError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemigroupFile {
    kind: String,
    elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero: Option<usize>,
    mult: Vec<Vec<usize>>,
    star: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    plus: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowEntry {
    name: String,
    dom: usize,
    cod: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryFile {
    kind: String,
    objects: Vec<String>,
    arrows: Vec<ArrowEntry>,
    units: Vec<usize>,
    comp: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismFile {
    kind: String,
    source: String,
    target: String,
    map: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CofunctorFile {
    kind: String,
    source: String,
    target: String,
    anchor: Vec<usize>,
    mu: Vec<Vec<i64>>,
    rho1: Vec<Vec<i64>>,
}

/// A parsed instance. Morphisms and cofunctors keep the endpoint paths as
/// written so they can be serialized back unchanged.
#[derive(Debug, Clone)]
pub enum Instance {
    Semigroup(BiUnaryAlgebra),
    Category(FinCat),
    Morphism {
        source: String,
        target: String,
        morphism: SemigroupMorphism,
    },
    Cofunctor {
        source: String,
        target: String,
        cofunctor: Cofunctor,
    },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Semigroup(_) => "semigroup",
            Instance::Category(_) => "category",
            Instance::Morphism { .. } => "morphism",
            Instance::Cofunctor { .. } => "cofunctor",
        }
    }
}

fn schema(e: serde_json::Error) -> FormatError {
    FormatError::Schema(e.to_string())
}

fn opt_index(v: i64, what: &str) -> Result<Option<usize>, FormatError> {
    match v {
        -1 => Ok(None),
        v if v >= 0 => Ok(Some(v as usize)),
        v => Err(FormatError::Schema(format!("{what}: {v} is neither an index nor -1"))),
    }
}

fn opt_rows(rows: Vec<Vec<i64>>, what: &str) -> Result<Vec<Vec<Option<usize>>>, FormatError> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|v| opt_index(v, what)).collect())
        .collect()
}

fn check_kind(kind: &str, expected: &str) -> Result<(), FormatError> {
    if kind == expected {
        Ok(())
    } else {
        Err(FormatError::Schema(format!("kind is `{kind}`, expected `{expected}`")))
    }
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads any instance file.
pub fn read_instance(path: &Path) -> Result<Instance, FormatError> {
    let text = read_file(path)?;
    let dir = path.parent().unwrap_or(Path::new(""));
    parse_instance(&text, dir)
}

pub fn read_semigroup(path: &Path) -> Result<BiUnaryAlgebra, FormatError> {
    match read_instance(path)? {
        Instance::Semigroup(s) => Ok(s),
        _ => Err(FormatError::WrongKind {
            path: path.to_path_buf(),
            expected: "semigroup",
        }),
    }
}

pub fn read_category(path: &Path) -> Result<FinCat, FormatError> {
    match read_instance(path)? {
        Instance::Category(c) => Ok(c),
        _ => Err(FormatError::WrongKind {
            path: path.to_path_buf(),
            expected: "category",
        }),
    }
}

/// Parses an instance; relative endpoint paths are resolved against `dir`.
pub fn parse_instance(text: &str, dir: &Path) -> Result<Instance, FormatError> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| FormatError::Schema("missing string field `kind`".into()))?
        .to_string();
    match kind.as_str() {
        "semigroup" => parse_semigroup(value).map(Instance::Semigroup),
        "category" => parse_category(value).map(Instance::Category),
        "morphism" => {
            let f: MorphismFile = serde_json::from_value(value).map_err(schema)?;
            let s = Arc::new(read_semigroup(&dir.join(&f.source))?);
            let t = Arc::new(read_semigroup(&dir.join(&f.target))?);
            let morphism = SemigroupMorphism::new(s, t, f.map)?;
            Ok(Instance::Morphism {
                source: f.source,
                target: f.target,
                morphism,
            })
        }
        "cofunctor" => {
            let f: CofunctorFile = serde_json::from_value(value).map_err(schema)?;
            let c = Arc::new(read_category(&dir.join(&f.source))?);
            let d = Arc::new(read_category(&dir.join(&f.target))?);
            let shape =
                |rows: &Vec<Vec<i64>>| rows.len() == c.n_arrows() && rows.iter().all(|r| r.len() == d.n_objects());
            if !shape(&f.mu) || !shape(&f.rho1) {
                return Err(FormatError::Schema(format!(
                    "mu and rho1 must be {}×{}",
                    c.n_arrows(),
                    d.n_objects()
                )));
            }
            let mu = opt_rows(f.mu, "mu")?.into_iter().flatten().collect();
            let rho1 = opt_rows(f.rho1, "rho1")?.into_iter().flatten().collect();
            let cofunctor = Cofunctor::new(c, d, f.anchor, mu, rho1)?;
            Ok(Instance::Cofunctor {
                source: f.source,
                target: f.target,
                cofunctor,
            })
        }
        other => Err(FormatError::UnknownKind(other.to_string())),
    }
}

fn parse_semigroup(value: Value) -> Result<BiUnaryAlgebra, FormatError> {
    let f: SemigroupFile = serde_json::from_value(value).map_err(schema)?;
    check_kind(&f.kind, "semigroup")?;
    Ok(BiUnaryAlgebra::new(f.elements, f.mult, f.star, f.plus, f.zero)?)
}

fn parse_category(value: Value) -> Result<FinCat, FormatError> {
    let f: CategoryFile = serde_json::from_value(value).map_err(schema)?;
    check_kind(&f.kind, "category")?;
    let arrows = f.arrows.into_iter().map(|a| (a.name, a.dom, a.cod)).collect();
    let comp = opt_rows(f.comp, "comp")?;
    Ok(FinCat::new(f.objects, arrows, f.units, comp)?)
}

/// Sorted keys, one per line; arrays of arrays and arrays of objects get
/// one row per line, everything else is compact.
fn canonical(value: &Value) -> String {
    let Value::Object(map) = value else {
        return value.to_string();
    };
    let mut out = String::from("{\n");
    let mut keys: Vec<&String> = map.keys().collect();
    keys.sort();
    for (i, k) in keys.iter().enumerate() {
        let v = &map[*k];
        write!(out, "  {}: ", Value::String((*k).clone())).unwrap();
        match v {
            Value::Array(rows) if !rows.is_empty() && rows.iter().all(|r| r.is_array() || r.is_object()) => {
                out.push_str("[\n");
                for (j, r) in rows.iter().enumerate() {
                    let sep = if j + 1 < rows.len() { "," } else { "" };
                    writeln!(out, "    {r}{sep}").unwrap();
                }
                out.push_str("  ]");
            }
            _ => out.push_str(&v.to_string()),
        }
        out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

fn to_canonical<T: Serialize>(t: &T) -> String {
    canonical(&serde_json::to_value(t).expect("plain data serializes"))
}

fn undef(v: Option<usize>) -> i64 {
    v.map_or(-1, |x| x as i64)
}

pub fn semigroup_to_json(s: &BiUnaryAlgebra) -> String {
    to_canonical(&SemigroupFile {
        kind: "semigroup".into(),
        elements: s.names().to_vec(),
        zero: s.declared_zero(),
        mult: s.mult_rows(),
        star: s.star_table().to_vec(),
        plus: s.plus_table().map(<[usize]>::to_vec),
    })
}

pub fn category_to_json(c: &FinCat) -> String {
    to_canonical(&CategoryFile {
        kind: "category".into(),
        objects: c.object_names().to_vec(),
        arrows: (0..c.n_arrows())
            .map(|x| ArrowEntry {
                name: c.arrow_name(x).to_string(),
                dom: c.dom(x),
                cod: c.cod(x),
            })
            .collect(),
        units: c.units().to_vec(),
        comp: c
            .comp_rows()
            .into_iter()
            .map(|r| r.into_iter().map(undef).collect())
            .collect(),
    })
}

pub fn morphism_to_json(source: &str, target: &str, map: &[usize]) -> String {
    to_canonical(&MorphismFile {
        kind: "morphism".into(),
        source: source.into(),
        target: target.into(),
        map: map.to_vec(),
    })
}

pub fn cofunctor_to_json(source: &str, target: &str, f: &Cofunctor) -> String {
    let k = f.target.n_objects();
    let rows = |t: &[Option<usize>]| -> Vec<Vec<i64>> {
        t.chunks(k.max(1))
            .map(|r| r.iter().copied().map(undef).collect())
            .collect()
    };
    let (mu, rho1) = if k == 0 {
        let empty = vec![Vec::new(); f.source.n_arrows()];
        (empty.clone(), empty)
    } else {
        (rows(f.mu_table()), rows(f.rho_table()))
    };
    to_canonical(&CofunctorFile {
        kind: "cofunctor".into(),
        source: source.into(),
        target: target.into(),
        anchor: f.anchor().to_vec(),
        mu,
        rho1,
    })
}

pub fn write_instance(i: &Instance) -> String {
    match i {
        Instance::Semigroup(s) => semigroup_to_json(s),
        Instance::Category(c) => category_to_json(c),
        Instance::Morphism {
            source,
            target,
            morphism,
        } => morphism_to_json(source, target, &morphism.map),
        Instance::Cofunctor {
            source,
            target,
            cofunctor,
        } => cofunctor_to_json(source, target, cofunctor),
    }
}
