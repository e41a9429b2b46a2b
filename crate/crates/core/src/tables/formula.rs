//! Parser for displayed sums such as `M_{a,b,c+1|c+1} + 2M_{c,b,a|c}`.
//!
//! Coordinates are a symbol `a`, `b` or `c` plus an integer offset, or a bare
//! integer. Problems in the display are collected as [`FormulaIssue`]s rather
//! than repaired: a term whose subscript does not split into the right
//! number of coordinates on each side of one bar is kept out of the sum and
//! reported, two adjacent terms without a `+` between them are still read as
//! a sum, and a term written out twice is counted twice.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::VermaFlag;
use crate::lattice::{AlgebraShape, Weight};

/// Values of the symbols `a`, `b`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Params {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    fn get(&self, var: char) -> i64 {
        match var {
            'a' => self.a,
            'b' => self.b,
            _ => self.c,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, b={}, c={}", self.a, self.b, self.c)
    }
}

/// `var + offset`, or a constant when `var` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sym {
    pub var: Option<char>,
    pub offset: i64,
}

impl Sym {
    pub fn eval(&self, p: &Params) -> i64 {
        self.var.map_or(0, |v| p.get(v)) + self.offset
    }

    fn parse(s: &str) -> Option<Sym> {
        let s = s.trim().replace('−', "-");
        if let Ok(k) = s.parse::<i64>() {
            return Some(Sym {
                var: None,
                offset: k,
            });
        }
        let mut chars = s.chars();
        let var = chars.next().filter(|v| matches!(v, 'a' | 'b' | 'c'))?;
        let rest: String = chars.filter(|c| !c.is_whitespace()).collect();
        let offset = if rest.is_empty() {
            0
        } else {
            let (sign, digits) = rest.split_at(1);
            let k: i64 = digits.parse().ok()?;
            match sign {
                "+" => k,
                "-" => -k,
                _ => return None,
            }
        };
        Some(Sym {
            var: Some(var),
            offset,
        })
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.var, self.offset) {
            (None, k) => write!(f, "{k}"),
            (Some(v), 0) => write!(f, "{v}"),
            (Some(v), k) if k > 0 => write!(f, "{v}+{k}"),
            (Some(v), k) => write!(f, "{v}{k}"),
        }
    }
}

/// One well-formed summand `k·X_{q|r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymTerm {
    pub coeff: u32,
    pub label: char,
    pub q: Vec<Sym>,
    pub r: Vec<Sym>,
    /// The term as displayed.
    pub text: String,
}

impl SymTerm {
    pub fn weight(&self, shape: AlgebraShape, p: &Params) -> Weight {
        let q = self.q.iter().map(|s| s.eval(p)).collect();
        let r = self.r.iter().map(|s| s.eval(p)).collect();
        Weight::new(shape, q, r).expect("arity checked at parse time")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum FormulaIssue {
    /// Subscript without exactly one bar or with the wrong number of coordinates.
    Malformed { term: String },
    /// The same symbolic term is written more than once.
    Duplicated { term: String, times: u32 },
    /// Two terms with no `+` between them.
    MissingPlus { before: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formula {
    pub terms: Vec<SymTerm>,
    pub issues: Vec<FormulaIssue>,
}

impl Formula {
    /// Does the display have a defect that makes the sum itself suspect?
    /// A missing `+` is a typesetting slip and does not count.
    pub fn is_defective(&self) -> bool {
        self.issues
            .iter()
            .any(|i| !matches!(i, FormulaIssue::MissingPlus { .. }))
    }

    pub fn has_malformed(&self) -> bool {
        self.issues
            .iter()
            .any(|i| matches!(i, FormulaIssue::Malformed { .. }))
    }

    /// The sum of the well-formed terms at `p`.
    pub fn instantiate(&self, shape: AlgebraShape, p: &Params) -> VermaFlag {
        let mut flag = VermaFlag::new(shape);
        for t in &self.terms {
            flag.insert(t.weight(shape, p), t.coeff);
        }
        flag
    }
}

fn parse_side(s: &str, len: usize) -> Option<Vec<Sym>> {
    let syms: Option<Vec<Sym>> = s.split(',').map(Sym::parse).collect();
    syms.filter(|v| v.len() == len)
}

/// Parses a displayed sum for an algebra of the given shape.
pub fn parse_formula(shape: AlgebraShape, s: &str) -> Result<Formula> {
    let err = |reason: String| Error::Parse {
        what: "formula",
        input: s.to_string(),
        reason,
    };
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    let mut terms: Vec<SymTerm> = Vec::new();
    let mut issues = Vec::new();
    let mut last_text: Option<String> = None;

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        let mut saw_plus = false;
        if chars[pos] == '+' {
            saw_plus = true;
            pos += 1;
            skip_ws(&mut pos);
        }
        if let Some(prev) = &last_text {
            if !saw_plus {
                issues.push(FormulaIssue::MissingPlus {
                    before: prev.clone(),
                });
            }
        } else if saw_plus {
            return Err(err("leading '+'".into()));
        }

        let start = pos;
        let mut coeff_digits = String::new();
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            coeff_digits.push(chars[pos]);
            pos += 1;
        }
        let coeff: u32 = if coeff_digits.is_empty() {
            1
        } else {
            coeff_digits
                .parse()
                .map_err(|_| err("bad coefficient".into()))?
        };
        let label = *chars
            .get(pos)
            .filter(|c| matches!(c, 'M' | 'L' | 'P'))
            .ok_or_else(|| err(format!("expected M_{{..}} at offset {pos}")))?;
        pos += 1;
        if chars.get(pos) != Some(&'_') || chars.get(pos + 1) != Some(&'{') {
            return Err(err(format!("expected '_{{' at offset {pos}")));
        }
        pos += 2;
        let body_start = pos;
        while pos < chars.len() && chars[pos] != '}' {
            pos += 1;
        }
        if pos >= chars.len() {
            return Err(err("unterminated subscript".into()));
        }
        let body: String = chars[body_start..pos].iter().collect();
        pos += 1;
        let text: String = chars[start..pos].iter().collect();
        last_text = Some(text.clone());

        let parsed = body.split_once('|').and_then(|(l, r)| {
            if r.contains('|') {
                return None;
            }
            Some((parse_side(l, shape.m())?, parse_side(r, shape.n())?))
        });
        match parsed {
            Some((q, r)) => terms.push(SymTerm {
                coeff,
                label,
                q,
                r,
                text,
            }),
            None => issues.push(FormulaIssue::Malformed { term: text }),
        }
    }

    for (i, t) in terms.iter().enumerate() {
        let same = |u: &SymTerm| u.label == t.label && u.q == t.q && u.r == t.r;
        if terms[..i].iter().any(same) {
            continue;
        }
        let times = terms.iter().filter(|u| same(u)).count() as u32;
        if times > 1 {
            issues.push(FormulaIssue::Duplicated {
                term: t.text.clone(),
                times,
            });
        }
    }
    Ok(Formula { terms, issues })
}
