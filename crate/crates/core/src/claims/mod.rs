//! Each statement under test becomes a finite list of catalog instances,
//! evaluated through the engine. Asserted claims gate acceptance; reported
//! claims only record what was computed.

mod inventory;
mod table1;
mod theorem_a;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{resolve, CatalogError, Embedding};
use crate::engine::{ComplexityResult, EngineError};
use crate::sampler::SamplerConfig;

pub use table1::{reproduce_table1, DiagonalCheck, InstanceCheck, Table1Report, Table1RowReport};
pub use theorem_a::{reproduce_theorem_a, Candidate, PairClass, TheoremAReport, Verification};

/// Bounds and sampling parameters shared by every claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    #[serde(flatten)]
    pub sampler: SamplerConfig,
    pub max_rank: usize,
    pub max_param: usize,
    /// Largest ambient matrix size instantiated (spin rows may go to 16).
    pub max_size: usize,
    pub enable_spin: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            sampler: SamplerConfig::default(),
            max_rank: 8,
            max_param: 4,
            max_size: 10,
            enable_spin: false,
        }
    }
}

impl HarnessConfig {
    pub fn with_seed(seed: u64) -> Self {
        HarnessConfig {
            sampler: SamplerConfig::with_seed(seed),
            ..HarnessConfig::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Asserted,
    Reported,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Reported,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Count(usize),
    Flag(bool),
    List(Vec<usize>),
}

/// One computed number with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<ComplexityResult>,
}

impl Quantity {
    pub fn count(name: impl Into<String>, r: ComplexityResult) -> Self {
        Quantity {
            name: name.into(),
            value: Value::Count(r.value),
            result: Some(r),
        }
    }

    pub fn flag(name: impl Into<String>, b: bool) -> Self {
        Quantity {
            name: name.into(),
            value: Value::Flag(b),
            result: None,
        }
    }

    pub fn list(name: impl Into<String>, v: Vec<usize>) -> Self {
        Quantity {
            name: name.into(),
            value: Value::List(v),
            result: None,
        }
    }

    pub fn number(name: impl Into<String>, v: usize) -> Self {
        Quantity {
            name: name.into(),
            value: Value::Count(v),
            result: None,
        }
    }

    pub fn as_count(&self) -> Option<usize> {
        match self.value {
            Value::Count(c) => Some(c),
            _ => None,
        }
    }
}

/// One evaluated instance. `ids` plus the report's seed and sample count
/// are enough to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub instance: String,
    pub ids: Vec<String>,
    pub quantities: Vec<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    pub fn new(instance: impl Into<String>, ids: &[&str]) -> Self {
        Record {
            instance: instance.into(),
            ids: ids.iter().map(|s| s.to_string()).collect(),
            quantities: Vec::new(),
            expected: None,
            status: Status::Reported,
            note: None,
        }
    }

    pub fn with(mut self, q: Quantity) -> Self {
        self.quantities.push(q);
        self
    }

    /// Marks the record as checked against `expected`.
    pub fn check(mut self, expected: impl Into<String>, ok: bool) -> Self {
        self.expected = Some(expected.into());
        self.status = if ok { Status::Pass } else { Status::Fail };
        self
    }

    /// Records what the source states without gating on it.
    pub fn states(mut self, expected: impl Into<String>) -> Self {
        self.expected = Some(expected.into());
        self.status = Status::Reported;
        self
    }

    pub fn skipped(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.note = Some(why.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn value(&self, name: &str) -> Option<usize> {
        self.quantities.iter().find(|q| q.name == name).and_then(Quantity::as_count)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub title: String,
    pub statement: String,
    pub mode: Mode,
    pub status: Status,
    pub records: Vec<Record>,
    pub seed: u64,
    pub samples: usize,
}

impl ClaimReport {
    fn finish(claim: &ClaimInfo, records: Vec<Record>, cfg: &HarnessConfig) -> Self {
        let status = match claim.mode {
            Mode::Reported => Status::Reported,
            Mode::Asserted if records.iter().any(|r| r.status == Status::Fail) => Status::Fail,
            Mode::Asserted => Status::Pass,
        };
        ClaimReport {
            id: claim.id.to_string(),
            title: claim.title.to_string(),
            statement: claim.statement.to_string(),
            mode: claim.mode,
            status,
            records,
            seed: cfg.sampler.seed,
            samples: cfg.sampler.samples,
        }
    }

    /// Asserted records that failed.
    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

struct ClaimInfo {
    id: &'static str,
    title: &'static str,
    statement: &'static str,
    mode: Mode,
}

const CLAIMS: [ClaimInfo; 15] = [
    ClaimInfo {
        id: "C1",
        title: "spherical pairs consist of spherical subgroups",
        statement: "If (G1, G2) is a spherical pair in a connected reductive G, then G/G1 and G/G2 are spherical.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C2",
        title: "U is spherical but (U, U) is not a spherical pair",
        statement: "The maximal unipotent U is a spherical subgroup, yet 2 dim U < dim G so (U, U) has positive complexity.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C3",
        title: "complexity of a pair is invariant under conjugation and swapping",
        statement: "(G1, G2), (G2, G1), (G1, gG2g^-1) and (gG1g^-1, G2) have the same complexity.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C4",
        title: "pairs with a Borel factor",
        statement: "If G2 contains a Borel subgroup, (G1, G2) is a spherical pair iff G1 is spherical.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C5",
        title: "spherical decompositions give spherical factors",
        statement: "If G = G1G2 and (G1, G2) is a spherical pair, then Gi/(G1 ∩ G2) is a spherical Gi-variety.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C6",
        title: "no nontrivial reductive pairs of complexity zero or one",
        statement: "A nontrivial pair of reductive subgroups is neither spherical nor of complexity one.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C7",
        title: "horosphericity is shared within a spherical pair",
        statement: "In a spherical pair, G1 is horospherical iff G2 is horospherical.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C8",
        title: "no half-reductive spherical pairs",
        statement: "No nontrivial pair with exactly one reductive member has complexity zero.",
        mode: Mode::Reported,
    },
    ClaimInfo {
        id: "C9",
        title: "interchange",
        statement: "If c_H(G/B) = i with i in {0, 1}, then c_G(G/H) <= i.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C10",
        title: "sum bound",
        statement: "If (G1, G2) has complexity one, then c_G(G/G1) + c_G(G/G2) <= 1.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C11",
        title: "half-reductive complexity-one pairs",
        statement: "For simple G and reductive G1 in a complexity-one pair with non-reductive G2, (G, G1) is one of (SO(4), GL(2)), (SO(4), SO(3)), (SO(3), SO(2)), (SL(2), {e}).",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C12",
        title: "spherical diagonal actions on G/P x G/H",
        statement: "G/P x G/H is spherical for reductive spherical H and a Levi K of P exactly for rows 2, 4, 5, 7 of the spherical decomposition table.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C13",
        title: "decompositions into reductive subgroups",
        statement: "Each listed (G, H, K) satisfies G = HK.",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C14",
        title: "complexities of reductive subgroups",
        statement: "Each listed reductive subgroup H has c_G(G/H) equal to its column (0 or 1).",
        mode: Mode::Asserted,
    },
    ClaimInfo {
        id: "C15",
        title: "diagonal sphericality through the Levi",
        statement: "G/P x G/H is G-spherical iff G/H is spherical for a Levi subgroup of P.",
        mode: Mode::Asserted,
    },
];

/// Every claim id, in report order.
pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

pub fn claim_mode(id: &str) -> Option<Mode> {
    CLAIMS.iter().find(|c| c.id == id).map(|c| c.mode)
}

/// Runs the selected claims (all when empty), in catalog order.
pub fn run_claims(selection: &[String], cfg: &HarnessConfig) -> Result<Vec<ClaimReport>, ClaimError> {
    for s in selection {
        if !CLAIMS.iter().any(|c| c.id == s) {
            return Err(ClaimError::UnknownClaim(s.clone()));
        }
    }
    let mut out = Vec::new();
    for claim in CLAIMS.iter().filter(|c| selection.is_empty() || selection.iter().any(|s| s == c.id)) {
        let records = match claim.id {
            "C1" => inventory::c1(cfg)?,
            "C2" => inventory::c2(cfg)?,
            "C3" => inventory::c3(cfg)?,
            "C4" => inventory::c4(cfg)?,
            "C5" => inventory::c5(cfg)?,
            "C6" => inventory::c6(cfg)?,
            "C7" => inventory::c7(cfg)?,
            "C8" => inventory::c8(cfg)?,
            "C9" => inventory::c9(cfg)?,
            "C10" => inventory::c10(cfg)?,
            "C11" => reproduce_theorem_a(cfg)?.records(),
            "C12" => reproduce_table1(cfg)?.records(),
            "C13" => inventory::c13(cfg)?,
            "C14" => inventory::c14(cfg)?,
            "C15" => inventory::c15(cfg)?,
            _ => unreachable!("ids checked above"),
        };
        out.push(ClaimReport::finish(claim, records, cfg));
    }
    Ok(out)
}

/// The report for `id` built from precomputed records (used by the
/// reproduction commands).
pub fn claim_report(id: &str, records: Vec<Record>, cfg: &HarnessConfig) -> Result<ClaimReport, ClaimError> {
    let claim = CLAIMS.iter().find(|c| c.id == id).ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))?;
    Ok(ClaimReport::finish(claim, records, cfg))
}

fn get(id: &str, cfg: &HarnessConfig) -> Result<Embedding, ClaimError> {
    Ok(resolve(id, cfg.enable_spin)?)
}
