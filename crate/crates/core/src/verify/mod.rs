//! Confronts the closed-form bounds and the extremal families with the
//! exhaustive enumeration, cell by cell.
//!
//! Attainment and uniqueness are decided by canonical-form membership. Every
//! mismatch becomes a [`Discrepancy`] carrying the graph6 of a witness, and is
//! then classified against the [`KnownDiscrepancies`] ledger.

mod formulas;
mod ledger;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructors::{bundle, saw, CactusClassParams, ConstructError};
use crate::enumeration::{extremal_scan, EnumerationCell, EnumerationError, Enumerator};
use crate::graph::{
    canonical_form_with_limit, cycle_blocks, internal_paths, is_chain_cactus, pendant_paths, Graph,
    DEFAULT_CANON_LIMIT,
};
use crate::invariants::edge_wiener;

pub use formulas::{
    format_ratio, lemma1_wiener_cycle, lemma1_wiener_path, theorem1_lower_bound, theorem2_applies,
    theorem2_upper_bound, FormulaError,
};
pub use ledger::{KnownDiscrepancies, LedgerEntry};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DiscrepancyCode {
    MinNotAttainedByBundle,
    MinNotUnique,
    Theorem1NonIntegral,
    Theorem1FormulaMismatch,
    MaxNotAttainedBySaw,
    MaxNotUnique,
    Theorem2NonIntegral,
    Theorem2FormulaMismatch,
    Claim1Violation,
    Claim2Violation,
    Claim3Violation,
    Claim4Violation,
    Claim5Violation,
}

impl DiscrepancyCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiscrepancyCode::MinNotAttainedByBundle => "MIN_NOT_ATTAINED_BY_BUNDLE",
            DiscrepancyCode::MinNotUnique => "MIN_NOT_UNIQUE",
            DiscrepancyCode::Theorem1NonIntegral => "THEOREM1_NON_INTEGRAL",
            DiscrepancyCode::Theorem1FormulaMismatch => "THEOREM1_FORMULA_MISMATCH",
            DiscrepancyCode::MaxNotAttainedBySaw => "MAX_NOT_ATTAINED_BY_SAW",
            DiscrepancyCode::MaxNotUnique => "MAX_NOT_UNIQUE",
            DiscrepancyCode::Theorem2NonIntegral => "THEOREM2_NON_INTEGRAL",
            DiscrepancyCode::Theorem2FormulaMismatch => "THEOREM2_FORMULA_MISMATCH",
            DiscrepancyCode::Claim1Violation => "CLAIM1_VIOLATION",
            DiscrepancyCode::Claim2Violation => "CLAIM2_VIOLATION",
            DiscrepancyCode::Claim3Violation => "CLAIM3_VIOLATION",
            DiscrepancyCode::Claim4Violation => "CLAIM4_VIOLATION",
            DiscrepancyCode::Claim5Violation => "CLAIM5_VIOLATION",
        }
    }

    /// Codes about the upper bound and its maximizers.
    pub fn concerns_maximum(self) -> bool {
        self >= DiscrepancyCode::MaxNotAttainedBySaw
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyStatus {
    /// Not in the ledger: fails a sweep.
    Unexpected,
    /// Matched by a ledger entry.
    Known,
    /// The cell lies outside the stated domain of the bound in question.
    OutOfDomain,
}

/// A raw mismatch before classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub code: DiscrepancyCode,
    /// graph6 of the graph exhibiting the mismatch.
    pub witness: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub code: DiscrepancyCode,
    pub status: DiscrepancyStatus,
    pub witness: String,
    pub detail: String,
    /// Ledger reason for known discrepancies.
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cell: CactusClassParams,
    pub cell_size: usize,
    pub oracle_min: u64,
    pub oracle_max: u64,
    pub min_forms: Vec<String>,
    pub max_forms: Vec<String>,
    pub bundle_form: String,
    pub saw_form: String,
    pub bundle_we: u64,
    pub saw_we: u64,
    /// Printed bounds as exact rationals, `"a"` or `"a/b"`.
    pub theorem1_value: String,
    pub theorem2_value: String,
    pub theorem2_domain: bool,
    pub min_attained_by_bundle: bool,
    pub max_attained_by_saw: bool,
    pub min_unique: bool,
    pub max_unique: bool,
    pub theorem1_matches: bool,
    pub theorem2_matches: bool,
    pub discrepancies: Vec<Discrepancy>,
}

/// Column order of the CSV report.
pub const CSV_COLUMNS: [&str; 20] = [
    "n",
    "t",
    "cell_size",
    "oracle_min",
    "oracle_max",
    "min_count",
    "max_count",
    "bundle_we",
    "saw_we",
    "theorem1_value",
    "theorem2_value",
    "theorem2_domain",
    "min_attained_by_bundle",
    "max_attained_by_saw",
    "min_unique",
    "max_unique",
    "extremal_status",
    "formula_status",
    "discrepancy_codes",
    "unexpected_discrepancies",
];

fn join_codes<'a>(items: impl Iterator<Item = &'a Discrepancy>) -> String {
    let mut codes: Vec<&str> = items.map(|d| d.code.as_str()).collect();
    codes.dedup();
    codes.join(";")
}

impl VerificationReport {
    /// `EXTREMAL_CONFIRMED` when the bundle attains the minimum and, inside
    /// the upper bound's domain, the saw attains the maximum.
    pub fn extremal_status(&self) -> &'static str {
        if self.min_attained_by_bundle && (self.max_attained_by_saw || !self.theorem2_domain) {
            "EXTREMAL_CONFIRMED"
        } else {
            "EXTREMAL_MISMATCH"
        }
    }

    /// `FORMULA_CONFIRMED` when the printed bounds equal the enumerated extremes.
    pub fn formula_status(&self) -> &'static str {
        if self.theorem1_matches && (self.theorem2_matches || !self.theorem2_domain) {
            "FORMULA_CONFIRMED"
        } else {
            "FORMULA_MISMATCH"
        }
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies
            .iter()
            .filter(|d| d.status == DiscrepancyStatus::Unexpected)
    }

    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.cell.n.to_string(),
            self.cell.t.to_string(),
            self.cell_size.to_string(),
            self.oracle_min.to_string(),
            self.oracle_max.to_string(),
            self.min_forms.len().to_string(),
            self.max_forms.len().to_string(),
            self.bundle_we.to_string(),
            self.saw_we.to_string(),
            self.theorem1_value.clone(),
            self.theorem2_value.clone(),
            self.theorem2_domain.to_string(),
            self.min_attained_by_bundle.to_string(),
            self.max_attained_by_saw.to_string(),
            self.min_unique.to_string(),
            self.max_unique.to_string(),
            self.extremal_status().to_owned(),
            self.formula_status().to_owned(),
            join_codes(self.discrepancies.iter()),
            join_codes(self.unexpected()),
        ]
    }
}

fn form(g: &Graph) -> String {
    canonical_form_with_limit(g, g.vertex_count().max(DEFAULT_CANON_LIMIT))
        .expect("within limit")
        .as_str()
        .to_owned()
}

/// The saw graph with `|i - j| <= 1` in the class.
pub fn balanced_saw(params: CactusClassParams) -> Result<Graph, ConstructError> {
    saw(params.t / 2, params.t - params.t / 2, params.n)
}

/// Checks the five structural properties of a maximizer with `t >= 1`:
/// every cycle is a triangle, chain cactus, pendant paths (exactly one for
/// `t = 1`, none for `t >= 2`), at most one internal path for `t >= 2`, and
/// isomorphism with the balanced saw graph.
pub fn verify_structural_claims(params: CactusClassParams, maximizers: &[Graph]) -> Vec<Finding> {
    let mut found = Vec::new();
    if params.t == 0 {
        return found;
    }
    let saw_form = form(&balanced_saw(params).expect("valid class"));
    for g in maximizers {
        let witness = form(g);
        let mut report = |code, detail: String| {
            found.push(Finding {
                code,
                witness: witness.clone(),
                detail,
            })
        };
        let lengths: Vec<usize> = cycle_blocks(g)
            .expect("cactus")
            .iter()
            .map(Vec::len)
            .collect();
        if lengths.iter().any(|&l| l != 3) {
            report(
                DiscrepancyCode::Claim1Violation,
                format!("cycle lengths {lengths:?}"),
            );
        }
        if is_chain_cactus(g) != Ok(true) {
            report(
                DiscrepancyCode::Claim2Violation,
                "not a chain cactus".into(),
            );
        }
        let pendant = pendant_paths(g).len();
        let wanted = usize::from(params.t == 1);
        if pendant != wanted {
            report(
                DiscrepancyCode::Claim3Violation,
                format!("{pendant} pendant paths, expected {wanted}"),
            );
        }
        let internal = internal_paths(g).len();
        if params.t >= 2 && internal > 1 {
            report(
                DiscrepancyCode::Claim4Violation,
                format!("{internal} internal paths"),
            );
        }
        if witness != saw_form {
            report(
                DiscrepancyCode::Claim5Violation,
                "not the balanced saw graph".into(),
            );
        }
    }
    found
}

fn classify(finding: Finding, cell: CactusClassParams, ledger: &KnownDiscrepancies) -> Discrepancy {
    let (status, reason) = if finding.code.concerns_maximum() && !theorem2_applies(cell.n) {
        (
            DiscrepancyStatus::OutOfDomain,
            Some("upper bound is stated for n >= 5".to_owned()),
        )
    } else if let Some(entry) = ledger.lookup(finding.code, cell) {
        (DiscrepancyStatus::Known, Some(entry.reason.clone()))
    } else {
        (DiscrepancyStatus::Unexpected, None)
    };
    Discrepancy {
        code: finding.code,
        status,
        witness: finding.witness,
        detail: finding.detail,
        reason,
    }
}

/// Verifies one enumerated cell.
pub fn verify_cell_from(
    cell: &EnumerationCell,
    ledger: &KnownDiscrepancies,
) -> Result<VerificationReport, VerifyError> {
    let params = cell.params;
    let scan = extremal_scan(cell).expect("every class is non-empty");
    let bundle_graph = bundle(params)?;
    let saw_graph = balanced_saw(params)?;
    let bundle_form = form(&bundle_graph);
    let saw_form = form(&saw_graph);
    let bundle_we = edge_wiener(&bundle_graph).expect("connected");
    let saw_we = edge_wiener(&saw_graph).expect("connected");
    let t1 = theorem1_lower_bound(params.n, params.t)?;
    let t2 = theorem2_upper_bound(params.n, params.t)?;

    let min_attained_by_bundle = scan.min_forms.contains(&bundle_form);
    let max_attained_by_saw = scan.max_forms.contains(&saw_form);
    let min_unique = scan.min_forms == [bundle_form.clone()];
    let max_unique = scan.max_forms == [saw_form.clone()];
    let theorem1_matches = t1.is_integer() && t1.to_integer() == scan.min_value as i64;
    let theorem2_matches = t2.is_integer() && t2.to_integer() == scan.max_value as i64;

    let mut findings = Vec::new();
    let mut push = |code, witness: &str, detail: String| {
        findings.push(Finding {
            code,
            witness: witness.to_owned(),
            detail,
        })
    };
    let (min_witness, max_witness) = (&scan.min_forms[0], &scan.max_forms[0]);

    if !min_attained_by_bundle {
        push(
            DiscrepancyCode::MinNotAttainedByBundle,
            min_witness,
            format!("minimum {} but the bundle has {bundle_we}", scan.min_value),
        );
    } else if !min_unique {
        for other in scan.min_forms.iter().filter(|f| **f != bundle_form) {
            push(
                DiscrepancyCode::MinNotUnique,
                other,
                format!("ties the bundle at {}", scan.min_value),
            );
        }
    }
    if !t1.is_integer() {
        push(
            DiscrepancyCode::Theorem1NonIntegral,
            min_witness,
            format!("printed lower bound {}", format_ratio(t1)),
        );
    }
    if !theorem1_matches {
        push(
            DiscrepancyCode::Theorem1FormulaMismatch,
            min_witness,
            format!(
                "printed lower bound {}, minimum {}",
                format_ratio(t1),
                scan.min_value
            ),
        );
    }

    if !max_attained_by_saw {
        push(
            DiscrepancyCode::MaxNotAttainedBySaw,
            max_witness,
            format!("maximum {} but the saw graph has {saw_we}", scan.max_value),
        );
    } else if !max_unique {
        for other in scan.max_forms.iter().filter(|f| **f != saw_form) {
            push(
                DiscrepancyCode::MaxNotUnique,
                other,
                format!("ties the saw graph at {}", scan.max_value),
            );
        }
    }
    if !t2.is_integer() {
        push(
            DiscrepancyCode::Theorem2NonIntegral,
            max_witness,
            format!("printed upper bound {}", format_ratio(t2)),
        );
    }
    if !theorem2_matches {
        push(
            DiscrepancyCode::Theorem2FormulaMismatch,
            max_witness,
            format!(
                "printed upper bound {}, maximum {}",
                format_ratio(t2),
                scan.max_value
            ),
        );
    }

    let maximizers: Vec<Graph> = cell
        .forms
        .iter()
        .zip(&cell.graphs)
        .filter(|(f, _)| scan.max_forms.iter().any(|m| m == f.as_str()))
        .map(|(_, g)| g.clone())
        .collect();
    findings.extend(verify_structural_claims(params, &maximizers));

    Ok(VerificationReport {
        cell: params,
        cell_size: cell.count(),
        oracle_min: scan.min_value,
        oracle_max: scan.max_value,
        min_forms: scan.min_forms,
        max_forms: scan.max_forms,
        bundle_form,
        saw_form,
        bundle_we,
        saw_we,
        theorem1_value: format_ratio(t1),
        theorem2_value: format_ratio(t2),
        theorem2_domain: theorem2_applies(params.n),
        min_attained_by_bundle,
        max_attained_by_saw,
        min_unique,
        max_unique,
        theorem1_matches,
        theorem2_matches,
        discrepancies: findings
            .into_iter()
            .map(|f| classify(f, params, ledger))
            .collect(),
    })
}

/// Enumerates and verifies one cell.
pub fn verify_cell(
    enumerator: &mut Enumerator,
    params: CactusClassParams,
    ledger: &KnownDiscrepancies,
) -> Result<VerificationReport, VerifyError> {
    verify_cell_from(&enumerator.cell(params)?, ledger)
}

/// Reports for every class with `3 <= n <= max_n`, in `(n, t)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub max_n: usize,
    pub cells: Vec<VerificationReport>,
}

impl BoundsReport {
    pub fn unexpected_count(&self) -> usize {
        self.cells.iter().map(|c| c.unexpected().count()).sum()
    }

    pub fn passed(&self) -> bool {
        self.unexpected_count() == 0
    }

    /// Plain-text summary: one line per cell, then the unexpected findings.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "cells with 3 <= n <= {}: {}",
            self.max_n,
            self.cells.len()
        );
        for c in &self.cells {
            let _ = writeln!(
                out,
                "({:>2},{:>2}) size {:>5}  min {:>4} (bound {:>6})  max {:>4} (bound {:>6})  {} {}  codes [{}]",
                c.cell.n,
                c.cell.t,
                c.cell_size,
                c.oracle_min,
                c.theorem1_value,
                c.oracle_max,
                c.theorem2_value,
                c.extremal_status(),
                c.formula_status(),
                join_codes(c.discrepancies.iter()),
            );
        }
        let unexpected = self.unexpected_count();
        let _ = writeln!(out, "unexpected discrepancies: {unexpected}");
        for c in &self.cells {
            for d in c.unexpected() {
                let _ = writeln!(
                    out,
                    "  ({},{}) {} {}: {}",
                    c.cell.n,
                    c.cell.t,
                    d.code.as_str(),
                    d.witness,
                    d.detail
                );
            }
        }
        out
    }
}

/// Verifies every class with `3 <= n <= max_n`. Enumeration is shared; the
/// cells are verified in parallel and reassembled in order.
pub fn verify_bounds(
    max_n: usize,
    cap: usize,
    ledger: &KnownDiscrepancies,
) -> Result<BoundsReport, VerifyError> {
    let mut enumerator = Enumerator::new(cap);
    let cells = CactusClassParams::sweep(3, max_n)
        .into_iter()
        .map(|p| enumerator.cell(p))
        .collect::<Result<Vec<_>, _>>()?;
    let cells = cells
        .par_iter()
        .map(|cell| verify_cell_from(cell, ledger))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BoundsReport { max_n, cells })
}
