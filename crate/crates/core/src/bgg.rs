//! Composition series of Verma modules by BGG reciprocity:
//! `[M_μ : L_λ] = (P_λ : M_μ)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::flags::{typical_projective, VermaFlag};
use crate::lattice::Weight;
use crate::linkage::{block_id, bruhat_leq, is_typical};
use crate::tables::table_projective;

pub const DEFAULT_WINDOW: i64 = 3;

/// Simple constituents `L_λ` of `M_μ` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSeries {
    mu: Weight,
    factors: VermaFlag,
}

impl CompositionSeries {
    pub fn new(mu: Weight, factors: VermaFlag) -> Self {
        Self { mu, factors }
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// The multiset of labels `λ`; the flag type is reused as a multiset.
    pub fn factors(&self) -> &VermaFlag {
        &self.factors
    }

    pub fn mult(&self, lam: &Weight) -> u32 {
        self.factors.mult(lam)
    }
}

impl fmt::Display for CompositionSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{{{}}} = {}", self.mu, self.factors.to_sum_string("L"))
    }
}

/// Flag of `P_λ` from the tables, falling back to the engine for weights the
/// tables do not cover or cannot read.
pub fn projective_flag(engine: &Engine, lam: &Weight) -> Result<VermaFlag> {
    if is_typical(lam) {
        return typical_projective(lam);
    }
    match table_projective(lam) {
        Ok(flag) => Ok(flag),
        Err(Error::NoBranch(_) | Error::MalformedTerm { .. } | Error::ShapeMismatch { .. }) => {
            engine.projective(lam)
        }
        Err(e) => Err(e),
    }
}

/// Linked weights `λ ≤ μ` with every coordinate within `window` of the
/// coordinate range of `μ`.
pub fn candidate_heads(mu: &Weight, window: i64) -> Vec<Weight> {
    let lo = mu.coords().min().unwrap_or(0) - window;
    let hi = mu.coords().max().unwrap_or(0) + window;
    let shape = mu.shape();
    let target = block_id(mu);
    let len = shape.m() + shape.n();
    let mut out = Vec::new();
    let mut cur = vec![lo; len];
    loop {
        let w = Weight::from_flat(shape, &cur).expect("shape-sized vector");
        if block_id(&w) == target && bruhat_leq(&w, mu).expect("same shape") {
            out.push(w);
        }
        let mut i = 0;
        while i < len && cur[i] == hi {
            cur[i] = lo;
            i += 1;
        }
        if i == len {
            break;
        }
        cur[i] += 1;
    }
    out
}

/// `[M_μ : L_λ]` read off the flags of `P_λ` over a window, with a source.
pub fn composition_series_with(
    mu: &Weight,
    window: i64,
    source: &mut dyn FnMut(&Weight) -> Result<VermaFlag>,
) -> Result<CompositionSeries> {
    let mut factors = VermaFlag::new(mu.shape());
    for lam in candidate_heads(mu, window) {
        let k = source(&lam)?.mult(mu);
        factors.insert(lam, k);
    }
    Ok(CompositionSeries::new(mu.clone(), factors))
}

/// Composition series of `M_μ`, asserting that widening the window by one
/// adds nothing.
pub fn composition_series(mu: &Weight, window: i64) -> Result<CompositionSeries> {
    let engine = Engine::new();
    let mut source = |lam: &Weight| projective_flag(&engine, lam);
    let narrow = composition_series_with(mu, window, &mut source)?;
    let wide = composition_series_with(mu, window + 1, &mut source)?;
    if narrow != wide {
        return Err(Error::Unstable {
            weight: mu.clone(),
            window,
        });
    }
    Ok(narrow)
}
