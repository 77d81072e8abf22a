//! JSON algebra files: a field descriptor, basis names, an optional unit,
//! and the nonzero structure constants as `[i, j, k, "scalar"]` entries.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::scalars::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FieldDescriptor {
    Q,
    GFp { p: u64 },
}

impl FieldDescriptor {
    pub fn of(f: FieldSpec) -> Self {
        match f.order() {
            None => FieldDescriptor::Q,
            Some(p) => FieldDescriptor::GFp { p },
        }
    }

    pub fn field(self) -> Result<FieldSpec> {
        match self {
            FieldDescriptor::Q => Ok(FieldSpec::Rationals),
            FieldDescriptor::GFp { p } => FieldSpec::gf(p),
        }
    }
}

/// On-disk form of a [`StructureConstants`].
///
/// A unit that is a basis vector is written as `unit_index`; any other
/// unit (e.g. `E11 + E22`) is written as `unit` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub table: Vec<(usize, usize, usize, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &StructureConstants) -> Self {
        let unit_index = a.unit_index();
        let unit = match (unit_index, a.unit()) {
            (None, Some(u)) => Some(u.coords().iter().map(Scalar::to_string).collect()),
            _ => None,
        };
        AlgebraFile {
            name: a.name().to_string(),
            field: FieldDescriptor::of(a.field()),
            dim: a.dim(),
            basis: a.basis_names().to_vec(),
            unit_index,
            unit,
            table: a
                .nonzero_entries()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<StructureConstants> {
        let field = self.field.field()?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::Shape(format!("{} basis names for dim {n}", self.basis.len())));
        }
        let unit = match (self.unit_index, &self.unit) {
            (Some(_), Some(_)) => return Err(Error::InvalidUnit("both unit_index and unit given".into())),
            (Some(i), None) if i >= n => return Err(Error::InvalidUnit(format!("unit_index {i} out of range"))),
            (Some(i), None) => Some(
                (0..n)
                    .map(|k| if k == i { field.one() } else { field.zero() })
                    .collect(),
            ),
            (None, Some(coords)) => Some(coords.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?),
            (None, None) => None,
        };
        let mut seen = BTreeSet::new();
        let mut entries = Vec::with_capacity(self.table.len());
        for (i, j, k, s) in &self.table {
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Shape(format!("duplicate table entry ({i},{j},{k})")));
            }
            entries.push((*i, *j, *k, field.parse(s)?));
        }
        StructureConstants::from_entries(self.name.clone(), field, self.basis.clone(), entries, unit)
    }

    pub fn to_json(&self) -> String {
        let field = serde_json::to_string(&self.field).expect("serializable");
        let mut out = format!(
            "{{\n  \"name\": {},\n  \"field\": {field},\n  \"dim\": {},\n  \"basis\": {},\n",
            serde_json::to_string(&self.name).expect("serializable"),
            self.dim,
            serde_json::to_string(&self.basis).expect("serializable"),
        );
        if let Some(i) = self.unit_index {
            out.push_str(&format!("  \"unit_index\": {i},\n"));
        }
        if let Some(u) = &self.unit {
            out.push_str(&format!("  \"unit\": {},\n", serde_json::to_string(u).unwrap()));
        }
        // one entry per line keeps large tables diffable
        out.push_str("  \"table\": [");
        for (idx, entry) in self.table.iter().enumerate() {
            out.push_str(if idx == 0 { "\n    " } else { ",\n    " });
            out.push_str(&serde_json::to_string(entry).unwrap());
        }
        out.push_str(if self.table.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
        out
    }
}

#[derive(Debug)]
pub enum FileError {
    Io(String),
    Parse(String),
    Algebra(Error),
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Io(m) | FileError::Parse(m) => f.write_str(m),
            FileError::Algebra(e) => e.fmt(f),
        }
    }
}

pub fn parse_algebra(text: &str) -> std::result::Result<StructureConstants, FileError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FileError::Parse(e.to_string()))?;
    file.to_algebra().map_err(FileError::Algebra)
}

pub fn load(path: &Path) -> std::result::Result<StructureConstants, FileError> {
    let text = std::fs::read_to_string(path).map_err(|e| FileError::Io(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| match e {
        FileError::Parse(m) => FileError::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn save(a: &StructureConstants, path: &Path) -> std::result::Result<(), FileError> {
    std::fs::write(path, AlgebraFile::from_algebra(a).to_json())
        .map_err(|e| FileError::Io(format!("{}: {e}", path.display())))
}
