//! Spec-file parsing: a strict JSON schema
//! `{"rank": int, "cartan": [[int]], "label": string?}` with trailing
//! garbage and unknown fields rejected, validated against the presentation
//! constructor.

use serde::{Deserialize, Serialize};

use grs::linalg::IntMatrix;
use grs::presentation::GrsPresentation;
use grs::Error as GrsError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrsSpecFile {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl GrsSpecFile {
    /// Validates dimensions and the constructor preconditions.
    pub fn presentation(&self) -> Result<GrsPresentation, CliError> {
        if self.cartan.len() != self.rank || self.cartan.iter().any(|row| row.len() != self.rank) {
            return Err(CliError::Validation(format!(
                "rank is {} but the matrix is {}x{}",
                self.rank,
                self.cartan.len(),
                self.cartan.first().map_or(0, Vec::len)
            )));
        }
        GrsPresentation::from_i64_rows(&self.cartan)
            .map_err(|e| CliError::Validation(e.to_string()))
    }

    pub fn from_presentation(
        grs: &GrsPresentation,
        label: Option<String>,
    ) -> Result<Self, CliError> {
        let cartan = int_rows(grs.cartan())?;
        Ok(GrsSpecFile {
            rank: grs.rank(),
            cartan,
            label,
        })
    }
}

fn int_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, CliError> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    i64::try_from(m.get(i, j)).map_err(|_| {
                        CliError::Internal("matrix entry exceeds the report range".into())
                    })
                })
                .collect()
        })
        .collect()
}

/// Strict parse: serde already rejects trailing input and unknown fields.
pub fn parse_spec(text: &str) -> Result<GrsSpecFile, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

/// CLI error with its process exit code.
#[derive(Debug)]
pub enum CliError {
    Io(String, String),
    Parse(String),
    Validation(String),
    Grs(GrsError),
    Internal(String),
    SelftestFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) | CliError::Parse(_) | CliError::Validation(_) => 1,
            CliError::Grs(e) => match e {
                GrsError::NotSquare { .. }
                | GrsError::NotSymmetric { .. }
                | GrsError::BadDiagonal { .. }
                | GrsError::DimensionMismatch(_)
                | GrsError::NameUnknown(_)
                | GrsError::SeedNotRoot(_) => 1,
                GrsError::NotPositiveDefinite
                | GrsError::NormNotTwo { .. }
                | GrsError::TargetNotEnumerable
                | GrsError::Reducible
                | GrsError::RankAboveCatalog(_) => 2,
                GrsError::SearchExhausted | GrsError::Verification(_) => 3,
            },
            CliError::Internal(_) => 3,
            CliError::SelftestFailed(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            CliError::Parse(e) => write!(f, "parse error: {e}"),
            CliError::Validation(e) => write!(f, "validation error: {e}"),
            CliError::Grs(e) => write!(f, "{e}"),
            CliError::Internal(e) => write!(f, "internal error: {e}"),
            CliError::SelftestFailed(n) => write!(f, "selftest: {n} criterion(s) failed"),
        }
    }
}

impl std::error::Error for CliError {}
