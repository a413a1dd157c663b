use std::path::Path;

use gitquot::{ActionData, IntMatrix, LatticeVector, Mode};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeField {
    #[default]
    Polynomial,
    Lattice,
}

impl From<ModeField> for Mode {
    fn from(m: ModeField) -> Self {
        match m {
            ModeField::Polynomial => Mode::Polynomial,
            ModeField::Lattice => Mode::Lattice,
        }
    }
}

/// One problem per file.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub action_rows: Vec<Vec<i64>>,
    pub alpha: Vec<i64>,
    #[serde(default)]
    pub mode: ModeField,
    pub degree_bound: Option<u64>,
    pub sweep_box: Option<Vec<[i64; 2]>>,
}

impl ProblemFile {
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let p: ProblemFile = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("{origin}:{}:{}: {e}", e.line(), e.column())))?;
        p.validate()?;
        Ok(p)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    fn validate(&self) -> Result<(), CliError> {
        let invalid = |m: String| Err(CliError::Invalid(m));
        if self.variables.is_empty() {
            return invalid("variables must not be empty".into());
        }
        if self.action_rows.is_empty() {
            return invalid("action_rows must not be empty".into());
        }
        for (i, row) in self.action_rows.iter().enumerate() {
            if row.len() != self.variables.len() {
                return invalid(format!(
                    "action_rows[{i}] has {} entries, expected {} (one per variable)",
                    row.len(),
                    self.variables.len()
                ));
            }
        }
        if self.alpha.len() != self.action_rows.len() {
            return invalid(format!(
                "alpha has {} entries, expected {} (one per action row)",
                self.alpha.len(),
                self.action_rows.len()
            ));
        }
        if self.degree_bound == Some(0) {
            return invalid("degree_bound must be at least 1".into());
        }
        if let Some(b) = &self.sweep_box {
            if b.len() != self.action_rows.len() {
                return invalid(format!(
                    "sweep_box has {} ranges, expected {} (one per action row)",
                    b.len(),
                    self.action_rows.len()
                ));
            }
        }
        self.action().map(|_| ())
    }

    pub fn action(&self) -> Result<ActionData, CliError> {
        let matrix = IntMatrix::from_i64_rows(&self.action_rows).map_err(|e| CliError::Invalid(e.to_string()))?;
        ActionData::new(matrix, self.variables.clone(), LatticeVector::from_i64s(&self.alpha))
            .map_err(|e| CliError::Invalid(e.to_string()))
    }

    pub fn sweep_ranges(&self) -> Option<Vec<(i64, i64)>> {
        self.sweep_box.as_ref().map(|b| b.iter().map(|r| (r[0], r[1])).collect())
    }
}
