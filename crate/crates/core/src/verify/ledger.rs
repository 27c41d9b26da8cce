use serde::Deserialize;

use super::DiscrepancyCode;
use crate::constructors::CactusClassParams;

const SHIPPED: &str = include_str!("../../data/known_discrepancies.toml");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct LedgerEntry {
    pub code: DiscrepancyCode,
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub t_min: Option<usize>,
    pub reason: String,
}

impl LedgerEntry {
    pub fn matches(&self, code: DiscrepancyCode, cell: CactusClassParams) -> bool {
        self.code == code
            && self.n.is_none_or(|n| n == cell.n)
            && self.t.is_none_or(|t| t == cell.t)
            && self.t_min.is_none_or(|t| cell.t >= t)
    }
}

/// Discrepancy classes that are expected and do not fail a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Default, Deserialize)]
pub struct KnownDiscrepancies {
    #[serde(default, rename = "entry")]
    pub entries: Vec<LedgerEntry>,
}

impl KnownDiscrepancies {
    /// The ledger bundled with the crate.
    pub fn shipped() -> Self {
        Self::from_toml_str(SHIPPED).expect("shipped ledger parses")
    }

    pub fn from_toml_str(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn lookup(&self, code: DiscrepancyCode, cell: CactusClassParams) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.matches(code, cell))
    }
}
