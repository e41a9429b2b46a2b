//! Cross-check of every transcribed branch against the engine, the BGG
//! transpose and the structural invariants of flags.
//!
//! Each problem becomes a [`LedgerEntry`]. An entry is *explained* when the
//! displayed sum is visibly defective on its own terms: an unreadable or
//! repeated term, or a term that no flag of this kind can contain. Anything
//! else, in particular disagreement on a clean branch, is unexplained and
//! makes the report fail.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::formula::{FormulaIssue, Params};
use super::{branch_formula, family_weight, matching_branches, Table};
use crate::bgg::{candidate_heads, composition_series, DEFAULT_WINDOW};
use crate::engine::{Engine, Outcome};
use crate::flags::VermaFlag;
use crate::jantzen::certified_weights;
use crate::lattice::Weight;
use crate::linkage::{bruhat_leq, degree, is_linked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscrepancyKind {
    MalformedTerm,
    DuplicatedTerm,
    /// A displayed term breaks a property every such flag or series has.
    InvariantViolation,
    /// Engine or BGG transpose disagrees with the displayed sum.
    DerivedMismatch,
    /// The engine could not close the case.
    DerivedAmbiguous,
    /// Two applicable branches give different sums.
    BranchOverlap,
    /// No branch covers an in-range weight.
    Uncovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub case: String,
    pub table: Table,
    pub kind: DiscrepancyKind,
    pub detail: String,
    pub formula: String,
    pub params: Params,
    pub weight: Weight,
    /// The displayed sum at `params`, well-formed terms only.
    pub displayed: Option<VermaFlag>,
    /// Engine flag (projective tables) or BGG transpose (composition table).
    pub derived: Option<VermaFlag>,
    pub derived_invariants_hold: bool,
    pub explained: bool,
    /// Number of grid weights showing this problem.
    pub occurrences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub entries: Vec<LedgerEntry>,
    pub weights_checked: usize,
    pub branches_checked: usize,
    /// Branches never selected by the grid.
    pub unhit_branches: Vec<String>,
}

impl ValidationReport {
    pub fn unexplained(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.iter().filter(|e| !e.explained)
    }

    pub fn passed(&self) -> bool {
        self.unexplained().next().is_none() && self.unhit_branches.is_empty()
    }

    pub fn entries_for(&self, case: &str) -> impl Iterator<Item = &LedgerEntry> {
        let case = case.to_string();
        self.entries.iter().filter(move |e| e.case == case)
    }
}

/// Parameter grid for a table: every `(a, b, c)` with `a ≥ b` in range.
pub fn grid(table: Table) -> Vec<Params> {
    let mut out = Vec::new();
    match table {
        Table::Gl31 => {
            for c in [-1, 0, 2] {
                for a in c - 4..=c + 4 {
                    for b in c - 4..=a {
                        out.push(Params::new(a, b, c));
                    }
                }
            }
        }
        Table::Gl22 | Table::Composition => {
            for a in [-2, 0, 1, 5] {
                for b in a - 4..=a {
                    out.push(Params::new(a, b, 0));
                }
            }
        }
    }
    out
}

/// Problems found in a projective flag claimed for `lam`.
pub fn projective_violations(lam: &Weight, flag: &VermaFlag) -> Vec<String> {
    let mut out = Vec::new();
    if flag.mult(lam) != 1 {
        out.push(format!("head {lam} has multiplicity {}", flag.mult(lam)));
    }
    for (w, _) in flag.iter() {
        if !is_linked(w, lam).unwrap_or(false) {
            out.push(format!("{w} is not linked to {lam}"));
        } else if !bruhat_leq(lam, w).unwrap_or(false) {
            out.push(format!("{w} is not above {lam}"));
        }
    }
    let cert = certified_weights(lam).flag();
    let missing = cert.minus(flag);
    if !missing.is_empty() {
        out.push(format!("certified {} missing", missing.to_sum_string("M")));
    }
    out
}

/// Problems found in a composition series claimed for `M_μ`.
pub fn composition_violations(mu: &Weight, factors: &VermaFlag) -> Vec<String> {
    let mut out = Vec::new();
    if factors.mult(mu) != 1 {
        out.push(format!("L_{{{mu}}} has multiplicity {}", factors.mult(mu)));
    }
    for (w, _) in factors.iter() {
        if !is_linked(w, mu).unwrap_or(false) {
            out.push(format!("{w} is not linked to {mu}"));
        } else if !bruhat_leq(w, mu).unwrap_or(false) {
            out.push(format!("{w} is not below {mu}"));
        }
    }
    // M_μ certified in P_λ forces L_λ into M_μ by reciprocity.
    let forced: Vec<String> = candidate_heads(mu, DEFAULT_WINDOW)
        .into_iter()
        .filter(|lam| factors.mult(lam) == 0 && certified_weights(lam).contains(mu))
        .map(|lam| format!("L_{{{lam}}}"))
        .collect();
    if !forced.is_empty() {
        out.push(format!("forced factors {} missing", forced.join(" + ")));
    }
    out
}

struct Collector {
    entries: BTreeMap<(String, DiscrepancyKind), LedgerEntry>,
}

impl Collector {
    fn push(&mut self, entry: LedgerEntry) {
        self.entries
            .entry((entry.case.clone(), entry.kind))
            .and_modify(|e| e.occurrences += 1)
            .or_insert(entry);
    }
}

struct Derived {
    flag: Option<VermaFlag>,
    ok: bool,
    note: String,
}

fn derive(table: Table, engine: &Engine, lam: &Weight) -> Derived {
    match table {
        Table::Composition => match composition_series(lam, DEFAULT_WINDOW) {
            Ok(s) => {
                let ok = composition_violations(lam, s.factors()).is_empty();
                Derived {
                    flag: Some(s.factors().clone()),
                    ok,
                    note: String::new(),
                }
            }
            Err(e) => Derived {
                flag: None,
                ok: false,
                note: e.to_string(),
            },
        },
        _ => match engine.deduce(lam) {
            Ok(Outcome::Closed(d)) => {
                let ok = projective_violations(lam, &d.flag).is_empty();
                Derived {
                    flag: Some(d.flag),
                    ok,
                    note: String::new(),
                }
            }
            Ok(Outcome::Ambiguous(a)) => Derived {
                flag: None,
                ok: false,
                note: format!(
                    "bounds {} .. {}",
                    a.lower,
                    a.upper.map_or("none".to_string(), |u| u.to_string())
                ),
            },
            Err(e) => Derived {
                flag: None,
                ok: false,
                note: e.to_string(),
            },
        },
    }
}

/// Runs every branch of every table over its grid.
pub fn validate_tables() -> ValidationReport {
    let engine = Engine::new();
    let mut col = Collector {
        entries: BTreeMap::new(),
    };
    let mut weights_checked = 0;
    let mut branches_checked = 0;
    let mut unhit = Vec::new();

    for table in Table::ALL {
        let shape = table.shape();
        let label = if table == Table::Composition {
            "L"
        } else {
            "M"
        };
        for branch in table.branches() {
            branches_checked += 1;
            let formula = branch_formula(table, branch);
            let mut hit = false;
            for p in grid(table) {
                if !branch.applies(&p) {
                    continue;
                }
                let lam = family_weight(shape, branch.family, &p);
                if degree(&lam) != table.degree() {
                    continue;
                }
                hit = true;
                weights_checked += 1;
                let displayed = formula.instantiate(shape, &p);
                let derived = derive(table, &engine, &lam);
                let violations = match table {
                    Table::Composition => composition_violations(&lam, &displayed),
                    _ => projective_violations(&lam, &displayed),
                };
                let defective = formula.is_defective() || !violations.is_empty();
                let entry = |kind, detail: String| LedgerEntry {
                    case: branch.id.to_string(),
                    table,
                    kind,
                    detail,
                    formula: branch.formula.to_string(),
                    params: p,
                    weight: lam.clone(),
                    displayed: Some(displayed.clone()),
                    derived: derived.flag.clone(),
                    derived_invariants_hold: derived.ok,
                    explained: defective,
                    occurrences: 1,
                };

                for issue in &formula.issues {
                    match issue {
                        FormulaIssue::Malformed { term } => col.push(entry(
                            DiscrepancyKind::MalformedTerm,
                            format!("unreadable term {term}"),
                        )),
                        FormulaIssue::Duplicated { term, times } => col.push(entry(
                            DiscrepancyKind::DuplicatedTerm,
                            format!("{term} written {times} times"),
                        )),
                        FormulaIssue::MissingPlus { .. } => {}
                    }
                }
                if !violations.is_empty() {
                    col.push(entry(
                        DiscrepancyKind::InvariantViolation,
                        violations.join("; "),
                    ));
                }
                match &derived.flag {
                    Some(f) if *f != displayed => col.push(entry(
                        DiscrepancyKind::DerivedMismatch,
                        format!(
                            "displayed {} but derived {}",
                            displayed.to_sum_string(label),
                            f.to_sum_string(label)
                        ),
                    )),
                    Some(_) => {}
                    None => col.push(entry(
                        DiscrepancyKind::DerivedAmbiguous,
                        derived.note.clone(),
                    )),
                }
                for other in matching_branches(table, &lam) {
                    if other.branch.id != branch.id && other.flag != displayed {
                        let other_defective = other.formula.is_defective();
                        let mut e = entry(
                            DiscrepancyKind::BranchOverlap,
                            format!("{} also applies and gives {}", other.branch.id, other.flag),
                        );
                        e.explained = defective || other_defective;
                        col.push(e);
                    }
                }
            }
            if !hit {
                unhit.push(branch.id.to_string());
            }
        }
    }

    for table in [Table::Gl31, Table::Gl22] {
        for lam in coverage_box(table) {
            if matching_branches(table, &lam).is_empty() {
                col.push(LedgerEntry {
                    case: format!("{table:?}"),
                    table,
                    kind: DiscrepancyKind::Uncovered,
                    detail: format!("no branch covers {lam}"),
                    formula: String::new(),
                    params: Params::new(0, 0, 0),
                    weight: lam.clone(),
                    displayed: None,
                    derived: None,
                    derived_invariants_hold: false,
                    explained: false,
                    occurrences: 1,
                });
            }
        }
    }

    ValidationReport {
        entries: col.entries.into_values().collect(),
        weights_checked,
        branches_checked,
        unhit_branches: unhit,
    }
}

/// All weights of the table's degree with coordinates in `[-3, 3]`.
fn coverage_box(table: Table) -> Vec<Weight> {
    let shape = table.shape();
    let len = shape.m() + shape.n();
    let mut out = Vec::new();
    let mut cur = vec![-3i64; len];
    loop {
        let w = Weight::from_flat(shape, &cur).expect("shape-sized vector");
        if degree(&w) == table.degree() {
            out.push(w);
        }
        let mut i = 0;
        while i < len && cur[i] == 3 {
            cur[i] = -3;
            i += 1;
        }
        if i == len {
            break;
        }
        cur[i] += 1;
    }
    out
}
