//! Automated translation-functor deduction of projective flags.
//!
//! For an atypical `λ` the engine walks a fixed list of candidates
//! `(μ = λ − ν, W)` with `ν` a weight of `W`, builds
//! `F = Pr_λ(P_μ ⊗ W)` and, whenever `λ` is minimal in `F` with multiplicity
//! `k`, uses that `k·P_λ` is a direct summand of `F`. Three closing tactics:
//!
//! * T1: `F` holds `k` copies of the certified weights and nothing else.
//! * T2: the remainder `R = F − k·certified` contains no weight `θ` whose own
//!   certified set fits inside `R`, so no further summand can exist.
//! * T3: the intersection of `⌊F/k⌋` over all candidates collapses onto the
//!   certified set.
//!
//! `P_μ` comes from the Weyl orbit when `μ` is typical. In a second pass,
//! atypical `μ` are admitted when their own deduction closes by T1 or T2,
//! with the recursion capped at [`MAX_DEPTH`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flags::{has_lower, project_block, tensor_flag, typical_projective, VermaFlag};
use crate::jantzen::certified_weights;
use crate::lattice::Weight;
use crate::linkage::{block_id, is_typical};
use crate::reps::{rep_weights, RepKind};

/// Nesting limit for atypical intermediates.
pub const MAX_DEPTH: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tactic {
    #[serde(rename = "T1_ALL_CERTIFIED")]
    AllCertified,
    #[serde(rename = "T2_REMAINDER_EXCLUSION")]
    RemainderExclusion,
    #[serde(rename = "T3_CROSS_PROJECTION")]
    CrossProjection,
}

impl fmt::Display for Tactic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tactic::AllCertified => "T1_ALL_CERTIFIED",
            Tactic::RemainderExclusion => "T2_REMAINDER_EXCLUSION",
            Tactic::CrossProjection => "T3_CROSS_PROJECTION",
        })
    }
}

/// One candidate projection `Pr_λ(P_μ ⊗ W)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub mu: Weight,
    pub rep: RepKind,
    pub projection: VermaFlag,
    /// Multiplicity of `λ` in the projection.
    pub head_mult: u32,
    /// Set when `μ` is atypical: how its own flag was obtained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intermediate: Option<Box<Deduction>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tactic: Option<Tactic>,
    pub notes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deduction {
    pub lam: Weight,
    pub flag: VermaFlag,
    pub tactic: Tactic,
    pub trace: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambiguous {
    pub lam: Weight,
    pub lower: VermaFlag,
    /// Intersection of `⌊F/k⌋` over every usable candidate, if there was one.
    pub upper: Option<VermaFlag>,
    pub candidates_tried: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Closed(Deduction),
    Ambiguous(Ambiguous),
}

impl Outcome {
    pub fn flag(&self) -> Option<&VermaFlag> {
        match self {
            Outcome::Closed(d) => Some(&d.flag),
            Outcome::Ambiguous(_) => None,
        }
    }

    pub fn into_deduction(self) -> Option<Deduction> {
        match self {
            Outcome::Closed(d) => Some(d),
            Outcome::Ambiguous(_) => None,
        }
    }
}

/// Deduction engine with a shared memo table.
#[derive(Debug, Default)]
pub struct Engine {
    memo: Mutex<HashMap<(Weight, usize), Outcome>>,
}

struct Candidate {
    step: Step,
    /// `⌊F/k⌋`, an upper bound for the flag of `P_λ`.
    bound: VermaFlag,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Flag of `P_λ` for atypical `λ`.
    pub fn deduce(&self, lam: &Weight) -> Result<Outcome> {
        if is_typical(lam) {
            return Err(Error::Typical(lam.clone()));
        }
        let mut stack = Vec::new();
        self.deduce_at(lam, 0, &mut stack)
    }

    /// Flag of `P_μ`, typical or not. Ambiguity is reported as
    /// [`Error::Unavailable`].
    pub fn projective(&self, mu: &Weight) -> Result<VermaFlag> {
        if is_typical(mu) {
            return typical_projective(mu);
        }
        match self.deduce(mu)? {
            Outcome::Closed(d) => Ok(d.flag),
            Outcome::Ambiguous(_) => Err(Error::Unavailable(mu.clone())),
        }
    }

    /// The raw projection `Pr_λ(P_μ ⊗ W)` for a chosen `(μ, W)`.
    pub fn projection(&self, lam: &Weight, mu: &Weight, rep: RepKind) -> Result<VermaFlag> {
        let p_mu = self.projective(mu)?;
        let f = project_block(&tensor_flag(&p_mu, rep), &block_id(lam));
        if !f.contains(lam) {
            return Err(Error::NotInFlag {
                weight: lam.clone(),
            });
        }
        Ok(f)
    }

    fn deduce_at(&self, lam: &Weight, depth: usize, stack: &mut Vec<Weight>) -> Result<Outcome> {
        let key = (lam.clone(), depth);
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        stack.push(lam.clone());
        let out = self.search(lam, depth, stack);
        stack.pop();
        let out = out?;
        self.memo
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        Ok(out)
    }

    fn search(&self, lam: &Weight, depth: usize, stack: &mut Vec<Weight>) -> Result<Outcome> {
        let cert = certified_weights(lam).flag();
        let target = block_id(lam);
        let mut candidates: Vec<Candidate> = Vec::new();
        let mut tried = 0;

        // Pass 0 uses typical μ only; pass 1 admits atypical μ.
        for pass in 0..2 {
            if pass == 1 && depth >= MAX_DEPTH {
                break;
            }
            for rep in RepKind::SEARCH_ORDER {
                for (nu, _) in rep_weights(lam.shape(), rep).entries() {
                    let mu = lam - nu;
                    if is_typical(&mu) != (pass == 0) || stack.contains(&mu) {
                        continue;
                    }
                    tried += 1;
                    let (p_mu, intermediate) = if pass == 0 {
                        (typical_projective(&mu)?, None)
                    } else {
                        match self.deduce_at(&mu, depth + 1, stack)? {
                            Outcome::Closed(d) if d.tactic != Tactic::CrossProjection => {
                                (d.flag.clone(), Some(Box::new(d)))
                            }
                            _ => continue,
                        }
                    };
                    let f = project_block(&tensor_flag(&p_mu, rep), &target);
                    let k = f.mult(lam);
                    if k == 0 || has_lower(&f, lam)? {
                        continue;
                    }
                    let mut step = Step {
                        mu,
                        rep,
                        projection: f.clone(),
                        head_mult: k,
                        intermediate,
                        tactic: None,
                        notes: String::new(),
                    };
                    if let Some((tactic, flag, notes)) = close_single(&f, k, &cert) {
                        step.tactic = Some(tactic);
                        step.notes = notes;
                        return Ok(Outcome::Closed(Deduction {
                            lam: lam.clone(),
                            flag,
                            tactic,
                            trace: vec![step],
                        }));
                    }
                    let bound = f.floor_div(k);
                    candidates.push(Candidate { step, bound });
                }
            }
            if depth == 0 {
                if let Some(d) = cross_projection(lam, &cert, &candidates) {
                    return Ok(Outcome::Closed(d));
                }
            }
        }

        let upper = candidates
            .iter()
            .map(|c| c.bound.clone())
            .reduce(|a, b| a.meet(&b));
        Ok(Outcome::Ambiguous(Ambiguous {
            lam: lam.clone(),
            lower: cert,
            upper,
            candidates_tried: tried,
        }))
    }
}

/// T1 and T2 on a single projection `F` with head multiplicity `k`.
fn close_single(f: &VermaFlag, k: u32, cert: &VermaFlag) -> Option<(Tactic, VermaFlag, String)> {
    let kc = cert.scaled(k);
    if !kc.is_subflag_of(f) {
        return None;
    }
    let rest = f.minus(&kc);
    if rest.is_empty() {
        return Some((Tactic::AllCertified, cert.clone(), String::new()));
    }
    let head = rest.weights().find(|theta| {
        let c = certified_weights(theta).flag();
        c.is_subflag_of(&rest)
    });
    match head {
        None => {
            let flag = f.exact_div(k)?;
            let notes = format!(
                "remainder {} admits no further summand",
                rest.to_sum_string("M")
            );
            Some((Tactic::RemainderExclusion, flag, notes))
        }
        Some(_) => None,
    }
}

/// T3: the flags `⌊F/k⌋` of all candidates intersect exactly in the certified set.
fn cross_projection(lam: &Weight, cert: &VermaFlag, candidates: &[Candidate]) -> Option<Deduction> {
    let mut bound: Option<VermaFlag> = None;
    let mut used = Vec::new();
    for c in candidates {
        let next = match &bound {
            None => c.bound.clone(),
            Some(b) => b.meet(&c.bound),
        };
        if Some(&next) != bound.as_ref() {
            used.push(c.step.clone());
        }
        if next == *cert {
            let n = used.len();
            for (i, s) in used.iter_mut().enumerate() {
                s.tactic = Some(Tactic::CrossProjection);
                if i + 1 == n {
                    s.notes = format!("intersection of {n} bounds equals the certified set");
                }
            }
            return Some(Deduction {
                lam: lam.clone(),
                flag: cert.clone(),
                tactic: Tactic::CrossProjection,
                trace: used,
            });
        }
        bound = Some(next);
    }
    None
}

/// Deduces `P_λ` with a fresh engine.
pub fn deduce_projective(lam: &Weight) -> Result<Outcome> {
    Engine::new().deduce(lam)
}

/// `Pr_λ(P_μ ⊗ W)` before any closing argument.
pub fn deduce_with_hint(lam: &Weight, mu: &Weight, rep: RepKind) -> Result<VermaFlag> {
    Engine::new().projection(lam, mu, rep)
}
