//! Self-contained JSON bundles: one structure plus its representations,
//! operators and bilinear forms.
//!
//! Canonical form: fixed key order, entries sorted ascending, rationals as
//! reduced `"p/q"` strings with `/1` for integers, two-space indentation,
//! scalar arrays on one line and a trailing newline. Loading accepts any
//! parseable rational and any entry order; saving always writes canonical
//! form, so `save(load(f)) == f` for canonical `f`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{Matrix, StructureTensor};
use crate::operators::{BilinearForm, OperatorWitness};
use crate::reps::{ActionRole, Representation};
use crate::structures::{HomStructure, ProductRole, StructureClass};

pub const SCHEMA_VERSION: u32 = 1;

type Entry = (usize, usize, usize, String);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBundle {
    schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<String>,
    dim: usize,
    basis: Vec<String>,
    twist: Vec<String>,
    products: BTreeMap<String, Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    reps: Vec<RawRep>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    operators: Vec<RawOperator>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    forms: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRep {
    module_dim: usize,
    module_twist: Vec<String>,
    actions: BTreeMap<String, Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weight: Option<String>,
    matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rep_index: Option<usize>,
}

/// An operator as stored in a bundle. O-operators refer to a bundle
/// representation by index; `Map` is a plain linear map used by twisting
/// and endomorphism recipes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleOperator {
    RotaBaxter { map: Matrix, weight: Rational },
    OOperator { map: Matrix, rep_index: usize },
    Map(Matrix),
}

impl BundleOperator {
    pub fn matrix(&self) -> &Matrix {
        match self {
            Self::RotaBaxter { map, .. } | Self::OOperator { map, .. } | Self::Map(map) => map,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Self::RotaBaxter { .. } => "rota-baxter",
            Self::OOperator { .. } => "o-operator",
            Self::Map(_) => "map",
        }
    }
}

/// In-memory bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub structure: HomStructure,
    pub class: Option<StructureClass>,
    pub reps: Vec<Representation>,
    pub operators: Vec<BundleOperator>,
    pub forms: Vec<BilinearForm>,
}

impl Bundle {
    pub fn new(structure: HomStructure) -> Self {
        Self { structure, class: None, reps: Vec::new(), operators: Vec::new(), forms: Vec::new() }
    }

    pub fn with_class(mut self, class: StructureClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn operator(&self, i: usize) -> Result<&BundleOperator> {
        self.operators
            .get(i)
            .ok_or_else(|| Error::Parse(format!("operators[{i}]: no such operator ({} present)", self.operators.len())))
    }

    pub fn rep(&self, i: usize) -> Result<&Representation> {
        self.reps
            .get(i)
            .ok_or_else(|| Error::Parse(format!("reps[{i}]: no such representation ({} present)", self.reps.len())))
    }

    pub fn form(&self, i: usize) -> Result<&BilinearForm> {
        self.forms
            .get(i)
            .ok_or_else(|| Error::Parse(format!("forms[{i}]: no such form ({} present)", self.forms.len())))
    }

    /// Operator `i` as a witness, resolving its representation.
    pub fn witness(&self, i: usize) -> Result<OperatorWitness> {
        match self.operator(i)? {
            BundleOperator::RotaBaxter { map, weight } => Ok(OperatorWitness::rota_baxter(map.clone(), weight.clone())),
            BundleOperator::OOperator { map, rep_index } => {
                OperatorWitness::o_operator(map.clone(), self.rep(*rep_index)?.clone())
            }
            BundleOperator::Map(_) => {
                Err(Error::RoleMismatch(format!("operators[{i}] is a plain map, not an operator witness")))
            }
        }
    }

    /// Parses a bundle from JSON text.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawBundle = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        from_raw(raw)
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        canonical_json(&serde_json::to_value(to_raw(self)).expect("bundle serializes"))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

/// Two-space indented JSON with arrays of scalars kept on one line and a
/// trailing newline. Keys keep their insertion order.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn q(field: &str, s: &str) -> Result<Rational> {
    rational::parse(s).map_err(|e| Error::Parse(format!("{field}: {e}")))
}

fn flat_matrix(field: &str, n: usize, values: &[String]) -> Result<Matrix> {
    if values.len() != n * n {
        return Err(Error::Parse(format!("{field}: expected {} values, found {}", n * n, values.len())));
    }
    let data = values.iter().enumerate().map(|(i, s)| q(&format!("{field}[{i}]"), s)).collect::<Result<Vec<_>>>()?;
    Matrix::new(n, n, data)
}

fn rows_matrix(field: &str, rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, s)| q(&format!("{field}[{i}][{j}]"), s)).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    if parsed.is_empty() {
        return Err(Error::Parse(format!("{field}: empty matrix")));
    }
    Matrix::from_rows(parsed).map_err(|e| Error::Parse(format!("{field}: {e}")))
}

fn tensor(field: &str, dim: usize, entries: &[Entry]) -> Result<StructureTensor> {
    let mut parsed = Vec::with_capacity(entries.len());
    for (n, (i, j, k, v)) in entries.iter().enumerate() {
        if *i >= dim || *j >= dim || *k >= dim {
            return Err(Error::Parse(format!("{field}[{n}]: index out of range for dimension {dim}")));
        }
        parsed.push((*i, *j, *k, q(&format!("{field}[{n}]"), v)?));
    }
    StructureTensor::from_entries(dim, parsed).map_err(|e| Error::Parse(format!("{field}: {e}")))
}

fn from_raw(raw: RawBundle) -> Result<Bundle> {
    if raw.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("schema_version: expected {SCHEMA_VERSION}, found {}", raw.schema_version)));
    }
    let n = raw.dim;
    let class = raw
        .class
        .as_deref()
        .map(|c| StructureClass::from_name(c).map_err(|e| Error::Parse(format!("class: {e}"))))
        .transpose()?;
    let twist = flat_matrix("twist", n, &raw.twist)?;
    let mut products = Vec::new();
    for (name, entries) in &raw.products {
        let role = ProductRole::from_name(name).map_err(|e| Error::Parse(format!("products.{name}: {e}")))?;
        products.push((role, tensor(&format!("products.{name}"), n, entries)?));
    }
    let mut structure = HomStructure::new(products, twist)
        .map_err(|e| Error::Parse(format!("products: {e}")))?
        .with_basis(raw.basis)
        .map_err(|e| Error::Parse(format!("basis: {e}")))?;
    if let Some(p) = raw.provenance {
        structure = structure.with_provenance(p);
    }
    let mut reps = Vec::new();
    for (r, rep) in raw.reps.iter().enumerate() {
        let m = rep.module_dim;
        let field = format!("reps[{r}]");
        let beta = flat_matrix(&format!("{field}.module_twist"), m, &rep.module_twist)?;
        let mut actions = Vec::new();
        for (name, entries) in &rep.actions {
            let f = format!("{field}.actions.{name}");
            let role = ActionRole::from_name(name).map_err(|e| Error::Parse(format!("{f}: {e}")))?;
            let mut slices = vec![Matrix::zeros(m, m); n];
            for (e, (i, a, b, v)) in entries.iter().enumerate() {
                if *i >= n || *a >= m || *b >= m {
                    return Err(Error::Parse(format!("{f}[{e}]: index out of range")));
                }
                slices[*i].set(*a, *b, q(&format!("{f}[{e}]"), v)?);
            }
            actions.push((role, slices));
        }
        reps.push(
            Representation::new(structure.clone(), actions, beta).map_err(|e| Error::Parse(format!("{field}: {e}")))?,
        );
    }
    let mut operators = Vec::new();
    for (o, op) in raw.operators.iter().enumerate() {
        let field = format!("operators[{o}]");
        let map = rows_matrix(&format!("{field}.matrix"), &op.matrix)?;
        let entry = match op.kind.as_str() {
            "rota-baxter" => {
                let w = op.weight.as_deref().unwrap_or("0/1");
                if map.rows() != n || map.cols() != n {
                    return Err(Error::Parse(format!("{field}.matrix: must be {n}x{n}")));
                }
                BundleOperator::RotaBaxter { map, weight: q(&format!("{field}.weight"), w)? }
            }
            "o-operator" => {
                let idx = op.rep_index.ok_or_else(|| Error::Parse(format!("{field}.rep_index: required")))?;
                let rep = reps.get(idx).ok_or_else(|| Error::Parse(format!("{field}.rep_index: no rep {idx}")))?;
                if map.rows() != n || map.cols() != rep.module_dim() {
                    return Err(Error::Parse(format!("{field}.matrix: must be {n}x{}", rep.module_dim())));
                }
                BundleOperator::OOperator { map, rep_index: idx }
            }
            "map" => BundleOperator::Map(map),
            other => return Err(Error::Parse(format!("{field}.kind: unknown kind {other:?}"))),
        };
        operators.push(entry);
    }
    let forms = raw
        .forms
        .iter()
        .enumerate()
        .map(|(f, rows)| {
            let field = format!("forms[{f}]");
            let m = rows_matrix(&field, rows)?;
            if m.rows() != n || m.cols() != n {
                return Err(Error::Parse(format!("{field}: must be {n}x{n}")));
            }
            BilinearForm::new(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Bundle { structure, class, reps, operators, forms })
}

fn flat(m: &Matrix) -> Vec<String> {
    m.data().iter().map(rational::to_canonical).collect()
}

fn rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| rational::to_canonical(m.get(i, j))).collect()).collect()
}

fn to_raw(b: &Bundle) -> RawBundle {
    let s = &b.structure;
    let products = s
        .products()
        .map(|(r, t)| {
            let entries = t.entries().into_iter().map(|(i, j, k, v)| (i, j, k, rational::to_canonical(&v))).collect();
            (r.name().to_string(), entries)
        })
        .collect();
    let reps = b
        .reps
        .iter()
        .map(|rep| RawRep {
            module_dim: rep.module_dim(),
            module_twist: flat(rep.twist()),
            actions: rep
                .actions()
                .map(|(role, slices)| {
                    let mut entries = Vec::new();
                    for (i, m) in slices.iter().enumerate() {
                        for a in 0..m.rows() {
                            for c in 0..m.cols() {
                                let v = m.get(a, c);
                                if *v != rational::zero() {
                                    entries.push((i, a, c, rational::to_canonical(v)));
                                }
                            }
                        }
                    }
                    (role.name().to_string(), entries)
                })
                .collect(),
        })
        .collect();
    let operators = b
        .operators
        .iter()
        .map(|op| RawOperator {
            kind: op.kind().to_string(),
            weight: match op {
                BundleOperator::RotaBaxter { weight, .. } => Some(rational::to_canonical(weight)),
                _ => None,
            },
            matrix: rows(op.matrix()),
            rep_index: match op {
                BundleOperator::OOperator { rep_index, .. } => Some(*rep_index),
                _ => None,
            },
        })
        .collect();
    RawBundle {
        schema_version: SCHEMA_VERSION,
        class: b.class.map(|c| c.name().to_string()),
        dim: s.dim(),
        basis: s.basis().to_vec(),
        twist: flat(s.twist()),
        products,
        reps,
        operators,
        forms: b.forms.iter().map(|f| rows(f.matrix())).collect(),
        provenance: s.provenance().map(str::to_string),
    }
}
