//! Closed-form flag tables for gl(3|1) and gl(2|2), and the gl(2|2)
//! composition series, transcribed as printed and checked by [`validate_tables`].
//!
//! A weight is matched against the family patterns in the order the cases
//! are stated; the first family with an applicable branch wins.

mod data;
pub mod formula;
mod ledger;

use serde::{Deserialize, Serialize};

pub use data::Branch;
pub use formula::{parse_formula, Formula, FormulaIssue, Params, Sym, SymTerm};
pub use ledger::{validate_tables, DiscrepancyKind, LedgerEntry, ValidationReport};

use crate::bgg::CompositionSeries;
use crate::error::{Error, Result};
use crate::flags::VermaFlag;
use crate::lattice::{AlgebraShape, Weight};
use crate::linkage::degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Table {
    /// Projective flags, gl(3|1), degree 1.
    Gl31,
    /// Projective flags, gl(2|2), degree 2.
    Gl22,
    /// Composition series of Verma modules, gl(2|2), degree 2.
    Composition,
}

impl Table {
    pub const ALL: [Table; 3] = [Table::Gl31, Table::Gl22, Table::Composition];

    pub fn shape(self) -> AlgebraShape {
        match self {
            Table::Gl31 => AlgebraShape::GL31,
            Table::Gl22 | Table::Composition => AlgebraShape::GL22,
        }
    }

    pub fn degree(self) -> usize {
        match self {
            Table::Gl31 => 1,
            Table::Gl22 | Table::Composition => 2,
        }
    }

    pub fn branches(self) -> &'static [Branch] {
        match self {
            Table::Gl31 => data::gl31(),
            Table::Gl22 => data::gl22(),
            Table::Composition => data::composition(),
        }
    }
}

/// Reads the symbols off a family pattern, requiring `a ≥ b`.
fn solve_family(pattern: &str, lam: &Weight) -> Option<Params> {
    let pat: Weight = pattern
        .replace(['a', 'b', 'c'], "0")
        .parse()
        .ok()
        .filter(|p: &Weight| p.shape() == lam.shape())?;
    let vars: Vec<char> = pattern
        .chars()
        .filter(|c| c.is_ascii_alphabetic())
        .collect();
    debug_assert_eq!(vars.len(), pat.flat().len());
    let mut vals: [Option<i64>; 3] = [None; 3];
    for (var, x) in vars.into_iter().zip(lam.coords()) {
        let slot = &mut vals[(var as u8 - b'a') as usize];
        match slot {
            Some(v) if *v != x => return None,
            _ => *slot = Some(x),
        }
    }
    let p = Params::new(vals[0]?, vals[1]?, vals[2].unwrap_or(0));
    (p.a >= p.b).then_some(p)
}

/// The head weight of a family at the given parameters.
pub fn family_weight(shape: AlgebraShape, pattern: &str, p: &Params) -> Weight {
    let s: String = pattern
        .chars()
        .map(|ch| match ch {
            'a' => p.a.to_string(),
            'b' => p.b.to_string(),
            'c' => p.c.to_string(),
            other => other.to_string(),
        })
        .collect();
    Weight::parse(shape, &s).expect("family patterns are well formed")
}

/// A branch selected for a weight, with the displayed sum instantiated.
#[derive(Debug, Clone)]
pub struct TableHit {
    pub branch: &'static Branch,
    pub params: Params,
    pub formula: Formula,
    /// Sum of the well-formed terms.
    pub flag: VermaFlag,
}

impl TableHit {
    /// The instantiated sum, or an error if a displayed term is unreadable.
    pub fn strict_flag(&self) -> Result<VermaFlag> {
        match self.formula.issues.iter().find_map(|i| match i {
            FormulaIssue::Malformed { term } => Some(term.clone()),
            _ => None,
        }) {
            Some(term) => Err(Error::MalformedTerm {
                case: self.branch.id.to_string(),
                term,
            }),
            None => Ok(self.flag.clone()),
        }
    }
}

pub fn branch_formula(table: Table, branch: &Branch) -> Formula {
    parse_formula(table.shape(), branch.formula).expect("transcribed formulas parse")
}

fn check_input(table: Table, lam: &Weight) -> Result<()> {
    if lam.shape() != table.shape() {
        return Err(Error::ShapeMismatch {
            left: table.shape(),
            right: lam.shape(),
        });
    }
    match degree(lam) {
        0 => Err(Error::Typical(lam.clone())),
        d if d == table.degree() => Ok(()),
        _ => Err(Error::NoBranch(lam.clone())),
    }
}

/// Every `(family, branch)` whose pattern and guard fit `lam`, in stated order.
pub fn matching_branches(table: Table, lam: &Weight) -> Vec<TableHit> {
    let mut out = Vec::new();
    if lam.shape() != table.shape() {
        return out;
    }
    for branch in table.branches() {
        if let Some(p) = solve_family(branch.family, lam) {
            if branch.applies(&p) {
                let formula = branch_formula(table, branch);
                let flag = formula.instantiate(table.shape(), &p);
                out.push(TableHit {
                    branch,
                    params: p,
                    formula,
                    flag,
                });
            }
        }
    }
    out
}

/// The canonical branch for `lam`: the first match in stated order.
pub fn lookup(table: Table, lam: &Weight) -> Result<TableHit> {
    check_input(table, lam)?;
    matching_branches(table, lam)
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoBranch(lam.clone()))
}

pub fn table_gl31(lam: &Weight) -> Result<VermaFlag> {
    lookup(Table::Gl31, lam)?.strict_flag()
}

pub fn table_gl22(lam: &Weight) -> Result<VermaFlag> {
    lookup(Table::Gl22, lam)?.strict_flag()
}

/// Projective flag from whichever table covers `lam`.
pub fn table_projective(lam: &Weight) -> Result<VermaFlag> {
    if lam.shape() == AlgebraShape::GL31 {
        table_gl31(lam)
    } else if lam.shape() == AlgebraShape::GL22 {
        table_gl22(lam)
    } else {
        Err(Error::NoBranch(lam.clone()))
    }
}

pub fn composition_gl22(mu: &Weight) -> Result<CompositionSeries> {
    let flag = lookup(Table::Composition, mu)?.strict_flag()?;
    Ok(CompositionSeries::new(mu.clone(), flag))
}
