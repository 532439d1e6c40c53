//! Structural statements about clean-type ideals as executable checks.
//!
//! Each law scans concrete rings and ideals and returns a [`LawReport`]. On
//! finite rings most laws hold for the trivial reason that every ideal of a
//! finite ring is clean; those reports are tagged `degenerate`. Laws over the
//! localized integers can genuinely fail on the hypothesis side and are
//! tagged `discriminating`.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::clean::VerdictWitness;
use crate::ideals::IdealSet;
use crate::ring::FiniteRing;

mod catalog;
mod constructed;
mod generic;
mod local;

pub use catalog::{catalog_jobs, catalog_rings, run_catalog, CatalogRun, Job};
pub use constructed::{
    law_det_cofactor, law_idealization, law_matrix_ideal, law_morita, law_product, law_series,
    law_tri3, DetMode,
};
pub use generic::{
    law_all_ideals_clean, law_central_equivalence, law_lifting, law_peirce, law_proper_ideals,
    law_radical, law_radical_quotient, law_reduced_exchange, law_sign_symmetry,
    law_subset_monotone, law_sum_with_radical, law_unique_central,
    law_weakly_clean_implies_exchange, GENERIC_LAWS,
};
pub use local::{law_localized_criterion, law_product_localized};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Biconditional,
    Forward,
    Converse,
    Identity,
    Property,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strength {
    Degenerate,
    Discriminating,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped { reason: String },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

/// Static description of a law.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LawInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub direction: Direction,
    pub strength: Strength,
}

pub const LAWS: &[LawInfo] = &[
    LawInfo {
        id: "proper-ideals",
        statement: "R is weakly clean (clean) iff every proper ideal of R is weakly clean (clean)",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "all-ideals-clean",
        statement: "every ideal of a finite ring is clean, verified by exhaustive decomposition search",
        direction: Direction::Property,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "sign-symmetry",
        statement: "x = u - e iff -x = (-u) + e, so x is minus-clean iff -x is plus-clean",
        direction: Direction::Property,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "weakly-clean-implies-exchange",
        statement: "a weakly clean ideal is weakly exchange (idempotent taken in I; the reading with any idempotent of R is compared)",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "central-equivalence",
        statement: "if every idempotent in I is central, I is weakly clean iff I is weakly exchange",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "reduced-exchange",
        statement: "in a ring without nonzero nilpotents, a weakly exchange ideal is weakly clean",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "det-cofactor",
        statement: "det(x E_ij + A) = x C_ij(A) + det(A) over a commutative ring",
        direction: Direction::Identity,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "matrix-ideal",
        statement: "I is clean in R iff M_k(I) is weakly clean in M_k(R); x clean implies x E_11 - x E_22 weakly clean",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "product",
        statement: "a finite product of ideals is weakly clean iff each factor is weakly clean and at most one is not clean",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "product-localized",
        statement: "a finite product of ideals is weakly clean iff each factor is weakly clean and at most one is not clean",
        direction: Direction::Biconditional,
        strength: Strength::Discriminating,
    },
    LawInfo {
        id: "localized-criterion",
        statement: "the valuation case table for ideals of Z_P agrees with the bounded witness search",
        direction: Direction::Biconditional,
        strength: Strength::Discriminating,
    },
    LawInfo {
        id: "unique-central",
        statement: "every idempotent lying in a uniquely weakly clean ideal is central",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "subset-monotone",
        statement: "if I is contained in I' and I' is weakly clean then I is weakly clean",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "morita",
        statement: "I, J weakly clean with one of them clean implies [[I, M], [N, J]] weakly clean in a zero-pairing Morita context",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "tri3",
        statement: "diagonal ideals weakly clean with at least two clean implies the 3x3 triangular ideal is weakly clean",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "tri3-converse",
        statement: "a weakly clean 3x3 triangular ideal has weakly clean diagonal ideals",
        direction: Direction::Converse,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "peirce",
        statement: "corner ideals e_i I e_i weakly clean with at most one not clean implies I weakly clean",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "series",
        statement: "I is weakly clean iff I[x]/(x^k) is; f is plus (minus) clean iff its constant term is",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "idealization",
        statement: "(r, m) is a unit iff r is, idempotents are (e, 0); I is weakly clean (clean) iff I(N) is",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "radical",
        statement: "J(R) is an ideal, 1 - a x b is a unit for x in J(R), 1 + J(R) consists of units, J(R) has no nonzero idempotent, R/J(R) has zero radical",
        direction: Direction::Property,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "lifting",
        statement: "every idempotent of R/J(R) lifts to an idempotent of R",
        direction: Direction::Property,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "radical-quotient",
        statement: "for J(R) inside I, I is weakly clean (clean) iff I/J(R) is weakly clean (clean) in R/J(R)",
        direction: Direction::Biconditional,
        strength: Strength::Degenerate,
    },
    LawInfo {
        id: "sum-with-radical",
        statement: "I weakly clean and J inside J(R) implies I + J weakly clean",
        direction: Direction::Forward,
        strength: Strength::Degenerate,
    },
];

pub fn law_info(id: &str) -> Option<&'static LawInfo> {
    LAWS.iter().find(|l| l.id == id)
}

fn law_rank(id: &str) -> usize {
    LAWS.iter().position(|l| l.id == id).unwrap_or(LAWS.len())
}

/// A structured counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicate: Option<VerdictWitness>,
    pub detail: String,
}

impl LawWitness {
    pub fn new(ring: &str, detail: impl Into<String>) -> Self {
        Self {
            ring: ring.to_string(),
            ideal: None,
            element: None,
            predicate: None,
            detail: detail.into(),
        }
    }

    pub fn ideal(mut self, ideal: &IdealSet) -> Self {
        self.ideal = Some(ideal.members().to_vec());
        self
    }

    pub fn element(mut self, x: impl ToString) -> Self {
        self.element = Some(x.to_string());
        self
    }

    pub fn predicate(mut self, w: Option<VerdictWitness>) -> Self {
        self.predicate = w;
        self
    }

    /// Re-runs the recorded predicate failure in `ring`. `None` when the
    /// witness carries no predicate trace.
    pub fn replay(&self, ring: &FiniteRing) -> Option<bool> {
        let w = self.predicate.as_ref()?;
        let ideal = IdealSet::from_members(ring, self.ideal.clone()?).ok()?;
        Some(w.replay(ring, &ideal))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LawStats {
    pub instances: u64,
    pub skipped_instances: u64,
    pub elements_scanned: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: &'static str,
    pub statement: &'static str,
    pub direction: Direction,
    pub instance_strength: Strength,
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LawWitness>,
    pub stats: LawStats,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Accumulates counts, skips and the first failure while a law runs.
pub(crate) struct Tally {
    info: &'static LawInfo,
    inputs: Vec<String>,
    stats: LawStats,
    skip_reasons: Vec<String>,
    notes: Vec<String>,
    failure: Option<LawWitness>,
    start: Instant,
}

impl Tally {
    pub(crate) fn new(id: &str, inputs: Vec<String>) -> Self {
        Self {
            info: law_info(id).unwrap_or_else(|| panic!("unknown law id {id}")),
            inputs,
            stats: LawStats::default(),
            skip_reasons: Vec::new(),
            notes: Vec::new(),
            failure: None,
            start: Instant::now(),
        }
    }

    pub(crate) fn scanned(&mut self, n: usize) {
        self.stats.elements_scanned += n as u64;
    }

    pub(crate) fn instance(&mut self) {
        self.stats.instances += 1;
    }

    pub(crate) fn skip(&mut self, reason: impl Into<String>) {
        self.stats.skipped_instances += 1;
        let reason = reason.into();
        if !self.skip_reasons.contains(&reason) {
            self.skip_reasons.push(reason);
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn fail(&mut self, w: LawWitness) {
        if self.failure.is_none() {
            self.failure = Some(w);
        }
    }

    pub(crate) fn failed(&self) -> bool {
        self.failure.is_some()
    }

    pub(crate) fn finish(mut self) -> LawReport {
        self.stats.elapsed = self.start.elapsed();
        let verdict = if self.failure.is_some() {
            Verdict::Fail
        } else if self.stats.instances == 0 {
            Verdict::Skipped {
                reason: self
                    .skip_reasons
                    .first()
                    .cloned()
                    .unwrap_or_else(|| "no instances".to_string()),
            }
        } else {
            Verdict::Pass
        };
        if self.stats.instances > 0 && self.stats.skipped_instances > 0 {
            for r in &self.skip_reasons {
                self.notes.push(format!("skipped: {r}"));
            }
        }
        LawReport {
            law: self.info.id,
            statement: self.info.statement,
            direction: self.info.direction,
            instance_strength: self.info.strength,
            inputs: self.inputs,
            verdict,
            witness: self.failure,
            stats: self.stats,
            notes: self.notes,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub reports: usize,
    pub laws: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub elements_scanned: u64,
}

impl Summary {
    pub fn of(reports: &[LawReport]) -> Self {
        let mut ids: Vec<&str> = reports.iter().map(|r| r.law).collect();
        ids.sort_unstable();
        ids.dedup();
        Self {
            reports: reports.len(),
            laws: ids.len(),
            passed: reports
                .iter()
                .filter(|r| r.verdict == Verdict::Pass)
                .count(),
            failed: reports.iter().filter(|r| r.verdict.is_fail()).count(),
            skipped: reports
                .iter()
                .filter(|r| matches!(r.verdict, Verdict::Skipped { .. }))
                .count(),
            elements_scanned: reports.iter().map(|r| r.stats.elements_scanned).sum(),
        }
    }
}

/// Runs independent jobs on the rayon pool and returns reports in law
/// order, then job order.
pub fn run_jobs(jobs: &[Job<'_>]) -> Vec<LawReport> {
    let mut reports: Vec<(usize, LawReport)> = jobs.par_iter().map(|j| j()).enumerate().collect();
    reports.sort_by_key(|(i, r)| (law_rank(r.law), *i));
    reports.into_iter().map(|(_, r)| r).collect()
}

/// One JSON object per line, then a summary line.
pub fn to_json_lines(reports: &[LawReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        out.push('\n');
    }
    let summary = serde_json::json!({ "summary": Summary::of(reports) });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

/// Fixed-width table followed by summary counts.
pub fn to_table(reports: &[LawReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.law.to_string(),
                r.inputs.join(" ; "),
                format!("{:?}", r.instance_strength).to_lowercase(),
                r.verdict.label().to_string(),
                r.stats.elements_scanned.to_string(),
            ]
        })
        .collect();
    let header = ["law", "inputs", "strength", "verdict", "scanned"];
    let mut width = header.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: [&str; 5], out: &mut String| {
        let parts: Vec<String> = cells
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header, &mut out);
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&rule.join("  "));
    out.push('\n');
    for (row, r) in rows.iter().zip(reports) {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]], &mut out);
        if let Verdict::Skipped { reason } = &r.verdict {
            let _ = writeln!(out, "    reason: {reason}");
        }
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "    witness: {} ({})", w.detail, w.ring);
        }
    }
    let s = Summary::of(reports);
    let _ = writeln!(
        out,
        "\n{} reports over {} laws: {} passed, {} failed, {} skipped",
        s.reports, s.laws, s.passed, s.failed, s.skipped
    );
    out
}
