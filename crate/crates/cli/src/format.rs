//! The module file: one JSON document.
//!
//! ```json
//! {
//!   "ring": {"p": 2, "n": 3},
//!   "level": 3,
//!   "group": "cyclic:2",
//!   "shape": [3, 2],
//!   "action": {"1": [[0, 1], [1, 0]]}
//! }
//! ```
//!
//! `group` is a token (`cyclic:m`, `symmetric:3`) or `{"order", "table"}`
//! with the identity at index 0. The keys of `action` are the generating
//! elements; for a token group they must be its standard generators.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use strel_core::chainring::{RMatrix, RingSpec};
use strel_core::group::FiniteGroup;
use strel_core::grouprep::GModule;
use strel_core::rnmod::{RnHom, Shape};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingField {
    pub p: u64,
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupField {
    Token(String),
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub ring: RingField,
    pub level: u32,
    pub group: GroupField,
    pub shape: Vec<u32>,
    pub action: BTreeMap<usize, Vec<Vec<u64>>>,
}

impl ModuleFile {
    pub fn from_module(m: &GModule) -> Self {
        let ring = m.ring();
        let g = m.group();
        let group = match g.name() {
            Some(name) => GroupField::Token(name.to_string()),
            None => GroupField::Table {
                order: g.order(),
                table: g.table_rows(),
            },
        };
        let action = g
            .generators()
            .iter()
            .map(|&s| (s, m.action(s).matrix().row_vecs()))
            .collect();
        ModuleFile {
            ring: RingField {
                p: ring.p(),
                n: ring.n(),
            },
            level: m.level(),
            group,
            shape: m.shape().exponents().to_vec(),
            action,
        }
    }

    pub fn to_module(&self) -> Result<GModule, CliError> {
        let ring = RingSpec::new(self.ring.p, self.ring.n)?;
        let keys: Vec<usize> = self.action.keys().copied().collect();
        let group = match &self.group {
            GroupField::Token(t) => {
                let g = FiniteGroup::parse(t).map_err(|e| CliError::Parse(e.to_string()))?;
                if g.generators() != keys.as_slice() {
                    return Err(CliError::Constraint(format!(
                        "action keys {keys:?} must be the generators {:?} of {t}",
                        g.generators()
                    )));
                }
                g
            }
            GroupField::Table { order, table } => {
                if table.len() != *order {
                    return Err(CliError::Constraint(format!(
                        "table has {} rows for order {order}",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(table.clone(), keys)?
            }
        };
        let shape = Shape::new(ring, self.shape.clone())?;
        let r = shape.rank();
        let mut gens = Vec::with_capacity(self.action.len());
        for (s, rows) in &self.action {
            if rows.len() != r || rows.iter().any(|row| row.len() != r) {
                return Err(CliError::Constraint(format!(
                    "matrix of generator {s} is not {r}x{r}"
                )));
            }
            let mat = RMatrix::from_fn(ring, r, r, |i, j| rows[i][j]);
            if (0..r).any(|i| (0..r).any(|j| mat.get(i, j) != rows[i][j])) {
                return Err(CliError::Constraint(format!(
                    "matrix of generator {s} has entries outside 0..{}",
                    ring.modulus()
                )));
            }
            gens.push(RnHom::new(shape.clone(), shape.clone(), mat)?);
        }
        Ok(GModule::new(self.level, Arc::new(group), shape, gens)?)
    }
}

pub fn to_json(m: &GModule) -> String {
    let mut s = serde_json::to_string(&ModuleFile::from_module(m)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<GModule, CliError> {
    let file: ModuleFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    file.to_module()
}

pub fn read_module(path: &Path) -> Result<GModule, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_module(path: &Path, m: &GModule) -> Result<(), CliError> {
    std::fs::write(path, to_json(m)).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
