//! Machine-readable decomposition reports (JSON schema version 1.0).

use crate::dihedral::IrrepLabel;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0";

/// One isomorphism class (or one unlabeled component) of a decomposition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentEntry {
    /// Catalog label; `None` for components of non-dihedral quandles.
    pub label: Option<IrrepLabel>,
    pub dimension: usize,
    pub multiplicity: usize,
    /// Ambient coordinates of a generating vector, as (re, im) pairs.
    pub generator_vector: Vec<(f64, f64)>,
}

/// Serialized decomposition of the regular representation of a quandle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub n: usize,
    pub quandle_kind: String,
    pub components: Vec<ComponentEntry>,
    pub residual_max: f64,
    pub seed: u64,
}

impl ReportDocument {
    /// Checks the document invariants: schema version present and component
    /// dimensions times multiplicities summing to `n`.
    pub fn validate(&self) -> Result<()> {
        if self.schema_version.is_empty() {
            return Err(Error::Report("schema_version missing".into()));
        }
        let total: usize = self
            .components
            .iter()
            .map(|c| c.dimension * c.multiplicity)
            .sum();
        if total != self.n {
            return Err(Error::Report(format!(
                "component dimensions x multiplicities sum to {total}, expected {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ReportDocument =
            serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }
}
