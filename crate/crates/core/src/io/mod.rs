//! Versioned JSON schemas for algebras, brackets, ternary operations and
//! representation seeds, with canonical output.
//!
//! Every input file carries `"schema_version": 1`. All rationals are
//! strings (`"p/q"` or `"p"`); floats never appear. Writing is canonical:
//! fixed field order, entries sorted by index tuple, reduced rationals,
//! two-space indentation and a trailing newline, so that loading and
//! re-saving any object is the byte identity.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ainfinity::ternary::{Pattern, Table};
use crate::ainfinity::{admissible_output, TernaryOperation};
use crate::algebra::AssocAlgebra;
use crate::bracket::DoubleBracket;
use crate::error::{Error, Result};
use crate::extended::Sort;
use crate::linalg::Matrix;
use crate::rep::RepPoint;
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

fn schema_err(context: &str, reason: impl Into<String>) -> Error {
    Error::Schema {
        context: context.to_string(),
        reason: reason.into(),
    }
}

fn check_version(context: &str, version: u32) -> Result<()> {
    if version != SCHEMA_VERSION {
        return Err(schema_err(
            context,
            format!("schema_version {version} is not supported (expected {SCHEMA_VERSION})"),
        ));
    }
    Ok(())
}

fn parse_scalar(context: &str, s: &str) -> Result<Scalar> {
    Scalar::from_str(s).map_err(|e| schema_err(context, e.to_string()))
}

// ---------------------------------------------------------------------------
// algebra files

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub schema_version: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    /// `[i, j, k, "p/q"]` entries of `e_i e_j = Σ c e_k`.
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(alg: &AssocAlgebra) -> Self {
        AlgebraFile {
            schema_version: SCHEMA_VERSION,
            name: alg.name().to_string(),
            dim: alg.dim(),
            basis: alg.basis_names().to_vec(),
            unit: alg
                .unit()
                .map(|u| u.iter().map(|c| c.to_string()).collect()),
            structure_constants: alg
                .sparse_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
        }
    }

    pub fn into_algebra(self) -> Result<AssocAlgebra> {
        let ctx = "algebra file";
        check_version(ctx, self.schema_version)?;
        if self.dim == 0 {
            return Err(schema_err(ctx, "dim must be positive"));
        }
        if self.basis.len() != self.dim {
            return Err(schema_err(
                ctx,
                format!("basis has {} names, dim is {}", self.basis.len(), self.dim),
            ));
        }
        let mut constants = BTreeMap::new();
        for (pos, (i, j, k, lit)) in self.structure_constants.iter().enumerate() {
            let context = format!("structure_constants[{pos}]");
            for &idx in [i, j, k] {
                if idx >= self.dim {
                    return Err(schema_err(&context, format!("index {idx} out of range")));
                }
            }
            let c = parse_scalar(&context, lit)?;
            if c.is_zero() {
                continue;
            }
            if constants.insert((*i, *j, *k), c).is_some() {
                return Err(schema_err(
                    &context,
                    format!("duplicate entry ({i},{j},{k})"),
                ));
            }
        }
        let unit = match self.unit {
            Some(u) => {
                if u.len() != self.dim {
                    return Err(schema_err(ctx, "unit vector has wrong length"));
                }
                Some(
                    u.iter()
                        .enumerate()
                        .map(|(pos, lit)| parse_scalar(&format!("unit[{pos}]"), lit))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            None => None,
        };
        AssocAlgebra::new(self.name, self.basis, &constants, unit)
    }
}

// ---------------------------------------------------------------------------
// bracket files

/// The algebra of a bracket file: inline, or a reference to an algebra
/// file resolved relative to the bracket file's directory. Canonical
/// output always inlines.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    File { file: String },
    Inline(AlgebraFile),
}

impl AlgebraRef {
    fn resolve(self, base_dir: Option<&Path>) -> Result<AssocAlgebra> {
        match self {
            AlgebraRef::Inline(file) => file.into_algebra(),
            AlgebraRef::File { file } => {
                let path = match base_dir {
                    Some(dir) => dir.join(&file),
                    None => std::path::PathBuf::from(&file),
                };
                load_algebra(&path)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketFile {
    pub schema_version: u32,
    pub algebra: AlgebraRef,
    /// `[i, j, k, l, "p/q"]` entries of `[[e_i, e_j]] = Σ D e_k ⊗ e_l`.
    pub entries: Vec<(usize, usize, usize, usize, String)>,
}

impl BracketFile {
    pub fn from_bracket(d: &DoubleBracket) -> Self {
        BracketFile {
            schema_version: SCHEMA_VERSION,
            algebra: AlgebraRef::Inline(AlgebraFile::from_algebra(d.algebra())),
            entries: d
                .entries()
                .iter()
                .map(|(&[i, j, k, l], c)| (i, j, k, l, c.to_string()))
                .collect(),
        }
    }

    pub fn into_bracket(self, base_dir: Option<&Path>) -> Result<DoubleBracket> {
        check_version("bracket file", self.schema_version)?;
        let alg = Arc::new(self.algebra.resolve(base_dir)?);
        let mut entries = BTreeMap::new();
        for (pos, (i, j, k, l, lit)) in self.entries.iter().enumerate() {
            let context = format!("entries[{pos}]");
            let c = parse_scalar(&context, lit)?;
            if c.is_zero() {
                continue;
            }
            if entries.insert([*i, *j, *k, *l], c).is_some() {
                return Err(schema_err(&context, "duplicate entry"));
            }
        }
        DoubleBracket::new(alg, entries)
    }
}

// ---------------------------------------------------------------------------
// ternary operation files

fn sort_from_str(context: &str, s: &str) -> Result<Sort> {
    match s {
        "A" => Ok(Sort::Alg),
        "A*" => Ok(Sort::Dual),
        other => Err(schema_err(context, format!("unknown sort {other:?}"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct M3Component {
    pub inputs: [String; 3],
    pub output: String,
    /// `[i1, i2, i3, k, "p/q"]` coefficient entries.
    pub entries: Vec<(usize, usize, usize, usize, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct M3File {
    pub schema_version: u32,
    pub dim: usize,
    pub components: Vec<M3Component>,
}

impl M3File {
    pub fn from_operation(m3: &TernaryOperation) -> Self {
        let components = m3
            .tables()
            .iter()
            .map(|(&pattern, table)| M3Component {
                inputs: [
                    pattern[0].label().to_string(),
                    pattern[1].label().to_string(),
                    pattern[2].label().to_string(),
                ],
                output: admissible_output(pattern)
                    .expect("stored patterns are admissible")
                    .label()
                    .to_string(),
                entries: table
                    .iter()
                    .map(|(&[a, b, c, k], v)| (a, b, c, k, v.to_string()))
                    .collect(),
            })
            .collect();
        M3File {
            schema_version: SCHEMA_VERSION,
            dim: m3.dim(),
            components,
        }
    }

    pub fn into_operation(self) -> Result<TernaryOperation> {
        let ctx = "ternary operation file";
        check_version(ctx, self.schema_version)?;
        if self.dim == 0 {
            return Err(schema_err(ctx, "dim must be positive"));
        }
        let mut tables: BTreeMap<Pattern, Table> = BTreeMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            let context = format!("components[{ci}]");
            let pattern: Pattern = [
                sort_from_str(&context, &comp.inputs[0])?,
                sort_from_str(&context, &comp.inputs[1])?,
                sort_from_str(&context, &comp.inputs[2])?,
            ];
            let output = sort_from_str(&context, &comp.output)?;
            match admissible_output(pattern) {
                Some(expected) if expected == output => {}
                _ => {
                    return Err(Error::DegreeViolation {
                        pattern: format!(
                            "({}, {}, {})",
                            comp.inputs[0], comp.inputs[1], comp.inputs[2]
                        ),
                        output: comp.output.clone(),
                    })
                }
            }
            let table = tables.entry(pattern).or_default();
            for (pos, (a, b, c, k, lit)) in comp.entries.iter().enumerate() {
                let context = format!("{context}.entries[{pos}]");
                for &idx in [a, b, c, k] {
                    if idx >= self.dim {
                        return Err(schema_err(&context, format!("index {idx} out of range")));
                    }
                }
                let v = parse_scalar(&context, lit)?;
                if v.is_zero() {
                    continue;
                }
                if table.insert([*a, *b, *c, *k], v).is_some() {
                    return Err(schema_err(&context, "duplicate entry"));
                }
            }
        }
        Ok(TernaryOperation::from_tables(self.dim, tables))
    }
}

// ---------------------------------------------------------------------------
// representation seed files

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedObject {
    pub n: usize,
    /// basis name -> n×n matrix of rational strings
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedsFile {
    pub schema_version: u32,
    pub seeds: Vec<SeedObject>,
}

impl SeedsFile {
    pub fn into_points(self, alg: &AssocAlgebra) -> Result<Vec<RepPoint>> {
        check_version("seeds file", self.schema_version)?;
        let mut out = Vec::new();
        for (si, seed) in self.seeds.into_iter().enumerate() {
            let context = format!("seeds[{si}]");
            if seed.n == 0 {
                return Err(schema_err(&context, "n must be positive"));
            }
            let mut mats: Vec<Matrix> = Vec::with_capacity(alg.dim());
            for name in alg.basis_names() {
                let rows = seed.matrices.get(name).ok_or_else(|| {
                    schema_err(
                        &context,
                        format!("missing matrix for basis element {name:?}"),
                    )
                })?;
                if rows.len() != seed.n || rows.iter().any(|r| r.len() != seed.n) {
                    return Err(schema_err(
                        &context,
                        format!("matrix for {name:?} is not {0}×{0}", seed.n),
                    ));
                }
                let mat: Matrix = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|lit| parse_scalar(&context, lit))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                mats.push(mat);
            }
            for extra in seed.matrices.keys() {
                if !alg.basis_names().contains(extra) {
                    return Err(schema_err(
                        &context,
                        format!("matrix given for unknown basis element {extra:?}"),
                    ));
                }
            }
            out.push(RepPoint::new(seed.n, mats)?);
        }
        Ok(out)
    }

    pub fn from_points(alg: &AssocAlgebra, points: &[RepPoint]) -> Self {
        SeedsFile {
            schema_version: SCHEMA_VERSION,
            seeds: points
                .iter()
                .map(|p| SeedObject {
                    n: p.n,
                    matrices: alg
                        .basis_names()
                        .iter()
                        .enumerate()
                        .map(|(a, name)| {
                            (
                                name.clone(),
                                p.mats[a]
                                    .iter()
                                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                                    .collect(),
                            )
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// canonical output and file helpers

/// Canonical serialization: two-space pretty JSON plus a trailing newline.
/// Byte-stable for a given value.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn load_algebra(path: &Path) -> Result<AssocAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let file: AlgebraFile = serde_json::from_str(&text)?;
    file.into_algebra()
}

pub fn save_algebra(path: &Path, alg: &AssocAlgebra) -> Result<()> {
    std::fs::write(path, to_canonical_json(&AlgebraFile::from_algebra(alg)))?;
    Ok(())
}

pub fn load_bracket(path: &Path) -> Result<DoubleBracket> {
    let text = std::fs::read_to_string(path)?;
    let file: BracketFile = serde_json::from_str(&text)?;
    file.into_bracket(path.parent())
}

pub fn save_bracket(path: &Path, d: &DoubleBracket) -> Result<()> {
    std::fs::write(path, to_canonical_json(&BracketFile::from_bracket(d)))?;
    Ok(())
}

pub fn load_m3(path: &Path) -> Result<TernaryOperation> {
    let text = std::fs::read_to_string(path)?;
    let file: M3File = serde_json::from_str(&text)?;
    file.into_operation()
}

pub fn save_m3(path: &Path, m3: &TernaryOperation) -> Result<()> {
    std::fs::write(path, to_canonical_json(&M3File::from_operation(m3)))?;
    Ok(())
}

pub fn load_seeds(path: &Path, alg: &AssocAlgebra) -> Result<Vec<RepPoint>> {
    let text = std::fs::read_to_string(path)?;
    let file: SeedsFile = serde_json::from_str(&text)?;
    file.into_points(alg)
}
