use serde::Serialize;
use serde_json::{Map, Value};

use crate::checker::{PiMatrix, Verdict};
use crate::repr_core::{IrrepLabel, StabilizerSpec};

/// Machine-readable report; the layout is pinned by `schema/report.schema.json`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: Map<String, Value>,
    pub verdict: Option<ReportVerdict>,
    pub artifacts: Artifacts,
}

#[derive(Debug, Serialize)]
pub struct ReportVerdict {
    pub exists: bool,
    pub per_irrep: Vec<ReportEntry>,
}

#[derive(Debug, Serialize)]
pub struct ReportEntry {
    pub label: String,
    pub status: String,
    pub detail: String,
}

impl From<&Verdict> for ReportVerdict {
    fn from(v: &Verdict) -> Self {
        ReportVerdict {
            exists: v.exists,
            per_irrep: v
                .per_irrep
                .iter()
                .map(|e| ReportEntry { label: e.key.to_string(), status: e.status.name().into(), detail: e.status.detail() })
                .collect(),
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Artifacts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi_matrices: Option<Vec<PiJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_paths: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumTerm>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilizer: Option<StabilizerJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Map<String, Value>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PiJson {
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub row_labels: Vec<String>,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
    pub singular_values: Vec<f64>,
}

impl From<&PiMatrix> for PiJson {
    fn from(p: &PiMatrix) -> Self {
        let rows = |f: fn(&crate::linalg::C64) -> f64| -> Vec<Vec<f64>> {
            (0..p.rows()).map(|r| (0..p.cols()).map(|c| f(&p.entries[(r, c)])).collect()).collect()
        };
        PiJson {
            label: p.label.to_string(),
            rows: p.rows(),
            cols: p.cols(),
            row_labels: p.row_labels.clone(),
            re: rows(|z| z.re),
            im: rows(|z| z.im),
            singular_values: p.singular_values(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumTerm {
    pub label: String,
    pub multiplicity: usize,
}

impl SpectrumTerm {
    pub fn list(spectrum: &[(IrrepLabel, usize)]) -> Vec<SpectrumTerm> {
        spectrum.iter().map(|(l, m)| SpectrumTerm { label: l.to_string(), multiplicity: *m }).collect()
    }
}

#[derive(Debug, Serialize)]
pub struct StabilizerJson {
    pub subgroup: String,
    pub case: String,
}

impl From<&StabilizerSpec> for StabilizerJson {
    fn from(s: &StabilizerSpec) -> Self {
        StabilizerJson { subgroup: s.subgroup.to_string(), case: s.case_tag.to_string() }
    }
}
