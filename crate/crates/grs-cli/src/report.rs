//! JSON report shapes. Fields that can be unavailable carry an explicit
//! `inapplicable` reason instead of being dropped.

use serde::Serialize;

use grs::carter::Classification;
use grs::linalg::IntMatrix;

use crate::spec::CliError;

/// A value or an explicit reason it does not apply.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Maybe<T> {
    Value(T),
    Inapplicable { inapplicable: String },
}

impl<T> Maybe<T> {
    pub fn inapplicable(reason: String) -> Self {
        Maybe::Inapplicable {
            inapplicable: reason,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum OrderReport {
    Order(u64),
    Unknown { unknown_at_cap: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct CapsReport {
    pub coxeter_order: u64,
    pub weyl_group: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentsReport {
    pub groups: Vec<Vec<usize>>,
    pub heuristic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub rank: usize,
    pub positive_definite: bool,
    pub radical_rank: usize,
    pub euler: Vec<Vec<i64>>,
    pub euler_unique: Maybe<bool>,
    pub coxeter: Vec<Vec<i64>>,
    pub coxeter_order: OrderReport,
    pub root_count: Maybe<usize>,
    pub components: ComponentsReport,
    pub component_names: Maybe<Vec<String>>,
    pub caps: CapsReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerIdentities {
    pub symmetrizes_to_cartan: bool,
    pub coxeter_twist: bool,
    pub det_one: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub euler: Vec<Vec<i64>>,
    pub identities: EulerIdentities,
    pub unique_solve: Maybe<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootsReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub count: usize,
    pub roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub basis_indices: Vec<usize>,
    pub name: String,
    pub ambient: String,
    pub root_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub components: Vec<ComponentReport>,
}

impl ClassifyReport {
    pub fn from_classification(label: Option<String>, c: &Classification) -> Self {
        ClassifyReport {
            label,
            components: c
                .components
                .iter()
                .map(|comp| ComponentReport {
                    basis_indices: comp.basis_indices.clone(),
                    name: comp.name.clone(),
                    ambient: comp.ambient.label(),
                    root_count: comp.root_count,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsomorphicReport {
    pub isomorphic: bool,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntryReport {
    pub name: String,
    pub rank: usize,
    pub ambient: String,
    pub edges: Vec<(usize, usize)>,
}

pub fn int_matrix(m: &IntMatrix) -> Result<Vec<Vec<i64>>, CliError> {
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

pub fn int_vector(v: &[grs::BigInt]) -> Result<Vec<i64>, CliError> {
    v.iter()
        .map(|x| {
            i64::try_from(x)
                .map_err(|_| CliError::Internal("vector entry exceeds the report range".into()))
        })
        .collect()
}
