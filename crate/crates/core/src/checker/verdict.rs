use std::fmt;

use serde::Serialize;

use crate::repr_core::IrrepLabel;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Ok,
    /// Condition (i): the irrep occurs fewer times in the induced
    /// representation than in the operator spectrum.
    MissingInInduced { required: usize, available: usize },
    /// Condition (ii): the pi matrix does not have full column rank.
    RankDeficient { rank: usize, cols: usize, singular_values: Vec<f64> },
}

impl Status {
    pub fn is_ok(&self) -> bool {
        matches!(self, Status::Ok)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::MissingInInduced { .. } => "missing_in_induced",
            Status::RankDeficient { .. } => "rank_deficient",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Status::Ok => String::new(),
            Status::MissingInInduced { required, available } => {
                format!("needs multiplicity {required}, induced representation has {available}")
            }
            Status::RankDeficient { rank, cols, singular_values } => {
                let sv: Vec<String> = singular_values.iter().map(|s| format!("{s:.3e}")).collect();
                format!("rank {rank} < {cols} columns; singular values [{}]", sv.join(", "))
            }
        }
    }
}

/// What a verdict entry refers to: an irrep of a compact group, or for the
/// Heisenberg–Weyl group a sampled phase-space point or a zero circle.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKey {
    Irrep { label: IrrepLabel },
    PhasePoint { q0: f64, p0: f64 },
    ZeroCircle { radius: f64 },
}

impl fmt::Display for VerdictKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKey::Irrep { label } => write!(f, "{label}"),
            VerdictKey::PhasePoint { q0, p0 } => write!(f, "({q0:.6},{p0:.6})"),
            VerdictKey::ZeroCircle { radius } => write!(f, "circle r={radius:.12}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictEntry {
    pub key: VerdictKey,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub exists: bool,
    pub per_irrep: Vec<VerdictEntry>,
}

impl Verdict {
    pub fn from_entries(per_irrep: Vec<VerdictEntry>) -> Self {
        let exists = per_irrep.iter().all(|e| e.status.is_ok());
        Verdict { exists, per_irrep }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerdictEntry> {
        self.per_irrep.iter().filter(|e| !e.status.is_ok())
    }

    pub fn failing_labels(&self) -> Vec<IrrepLabel> {
        self.failures()
            .filter_map(|e| match e.key {
                VerdictKey::Irrep { label } => Some(label),
                _ => None,
            })
            .collect()
    }

    pub fn status_of(&self, label: &IrrepLabel) -> Option<&Status> {
        self.per_irrep.iter().find(|e| e.key == VerdictKey::Irrep { label: *label }).map(|e| &e.status)
    }
}
