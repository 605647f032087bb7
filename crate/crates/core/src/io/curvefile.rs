//! JSON curve descriptions: the equation as an expression string plus the
//! user-asserted global and local data the algebra cannot derive.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::invariants::CurveEquation;
use crate::local::{resolve_named, CharPairs, SingularityRecord};

use super::parser::parse_poly;

/// One singularity entry: a named type from the table, explicit Newton
/// pairs, or a node.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SingularityEntry {
    Named { named: String },
    Pairs { pairs: Vec<(u32, u32)> },
    Node { node: bool },
}

/// The on-disk curve description.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub name: String,
    pub equation: String,
    pub irreducible: bool,
    pub components: u32,
    #[serde(default)]
    pub singularities: Vec<SingularityEntry>,
}

impl CurveFile {
    pub fn from_json(json: &str) -> Result<CurveFile> {
        let file: CurveFile = serde_json::from_str(json)?;
        Ok(file)
    }

    /// Validate and resolve into the analysis inputs.
    pub fn resolve(&self) -> Result<(CurveEquation, Vec<SingularityRecord>)> {
        let f = parse_poly(&self.equation)?;
        let curve = CurveEquation::new(f, self.irreducible, self.components)?;
        let mut sings = Vec::with_capacity(self.singularities.len());
        for entry in &self.singularities {
            let record = match entry {
                SingularityEntry::Named { named } => resolve_named(named)?,
                SingularityEntry::Pairs { pairs } => {
                    SingularityRecord::unibranch(CharPairs::new(pairs.clone())?)
                }
                SingularityEntry::Node { node } => {
                    if !*node {
                        return Err(Error::Validation(
                            "singularity entry {\"node\": false} is meaningless".into(),
                        ));
                    }
                    SingularityRecord::node()
                }
            };
            sings.push(record);
        }
        Ok((curve, sings))
    }
}

/// Load and validate a curve file from disk.
pub fn load_curve_file(path: &Path) -> Result<(CurveFile, CurveEquation, Vec<SingularityRecord>)> {
    let text = std::fs::read_to_string(path)?;
    let file = CurveFile::from_json(&text)?;
    let (curve, sings) = file.resolve()?;
    Ok((file, curve, sings))
}
