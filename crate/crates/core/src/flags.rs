//! Verma flags as multisets of weights, and the three flag transformations
//! used by translation functors: typical projectives, tensoring with a
//! finite-dimensional representation, and projection onto a block.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{act, weyl_elements, AlgebraShape, Weight};
use crate::linkage::{block_id, bruhat_leq, is_typical, BlockId};
use crate::reps::{rep_weights, RepKind};

/// Multiset of Verma labels. Entries are kept sorted by `(q, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VermaFlag {
    shape: AlgebraShape,
    entries: BTreeMap<Weight, u32>,
}

impl VermaFlag {
    pub fn new(shape: AlgebraShape) -> Self {
        Self {
            shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn singleton(lam: &Weight) -> Self {
        let mut flag = Self::new(lam.shape());
        flag.insert(lam.clone(), 1);
        flag
    }

    pub fn from_weights<'a>(
        shape: AlgebraShape,
        weights: impl IntoIterator<Item = &'a Weight>,
    ) -> Self {
        let mut flag = Self::new(shape);
        for w in weights {
            flag.insert(w.clone(), 1);
        }
        flag
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    /// Adds `mult` copies of `w`. Panics if `w` has another shape.
    pub fn insert(&mut self, w: Weight, mult: u32) {
        assert_eq!(
            w.shape(),
            self.shape,
            "weight shape differs from flag shape"
        );
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &Weight) -> u32 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.contains_key(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u32)> {
        self.entries.iter().map(|(w, k)| (w, *k))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct weights.
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Length of the flag, counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().map(|&k| u64::from(k)).sum()
    }

    /// Multiset containment.
    pub fn is_subflag_of(&self, other: &VermaFlag) -> bool {
        self.entries.iter().all(|(w, &k)| other.mult(w) >= k)
    }

    /// Multiset difference, truncated at zero.
    pub fn minus(&self, other: &VermaFlag) -> VermaFlag {
        let mut out = VermaFlag::new(self.shape);
        for (w, &k) in &self.entries {
            out.insert(w.clone(), k.saturating_sub(other.mult(w)));
        }
        out
    }

    /// Multiset intersection (pointwise minimum).
    pub fn meet(&self, other: &VermaFlag) -> VermaFlag {
        let mut out = VermaFlag::new(self.shape);
        for (w, &k) in &self.entries {
            out.insert(w.clone(), k.min(other.mult(w)));
        }
        out
    }

    pub fn scaled(&self, factor: u32) -> VermaFlag {
        let mut out = VermaFlag::new(self.shape);
        for (w, &k) in &self.entries {
            out.insert(w.clone(), k * factor);
        }
        out
    }

    /// Pointwise floor division of multiplicities.
    pub fn floor_div(&self, divisor: u32) -> VermaFlag {
        assert!(divisor > 0);
        let mut out = VermaFlag::new(self.shape);
        for (w, &k) in &self.entries {
            out.insert(w.clone(), k / divisor);
        }
        out
    }

    /// `Some(G)` when `self = divisor · G` exactly.
    pub fn exact_div(&self, divisor: u32) -> Option<VermaFlag> {
        self.entries
            .values()
            .all(|&k| k % divisor == 0)
            .then(|| self.floor_div(divisor))
    }

    /// Human-readable sum such as `M_{5,3,1|1} + 2M_{5,3,2|2}`.
    pub fn to_sum_string(&self, label: &str) -> String {
        if self.entries.is_empty() {
            return "0".into();
        }
        self.entries
            .iter()
            .map(|(w, &k)| {
                if k == 1 {
                    format!("{label}_{{{w}}}")
                } else {
                    format!("{k}{label}_{{{w}}}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for VermaFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sum_string("M"))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    weight: Vec<i64>,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct FlagRepr {
    algebra: AlgebraShape,
    entries: Vec<EntryRepr>,
}

impl Serialize for VermaFlag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FlagRepr {
            algebra: self.shape,
            entries: self
                .entries
                .iter()
                .map(|(w, &mult)| EntryRepr {
                    weight: w.flat(),
                    mult,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VermaFlag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FlagRepr::deserialize(d)?;
        let shape = repr.algebra;
        let mut flag = VermaFlag::new(shape);
        for e in repr.entries {
            if e.mult == 0 {
                return Err(serde::de::Error::custom("multiplicity must be positive"));
            }
            let w = Weight::from_flat(shape, &e.weight).map_err(serde::de::Error::custom)?;
            flag.insert(w, e.mult);
        }
        Ok(flag)
    }
}

/// Verma flag of `P_λ` for typical `λ`: the distinct Weyl images `wλ ≥ λ`,
/// each once. Valid for `m, n ≤ 3`.
pub fn typical_projective(lam: &Weight) -> Result<VermaFlag> {
    if !is_typical(lam) {
        return Err(Error::Atypical(lam.clone()));
    }
    let mut flag = VermaFlag::new(lam.shape());
    for w in weyl_elements(lam.shape()) {
        let image = act(&w, lam);
        if !flag.contains(&image) && bruhat_leq(lam, &image)? {
            flag.insert(image, 1);
        }
    }
    Ok(flag)
}

/// `Σ_ν Σ_μ M_{ν+μ}` over flag entries `ν` and representation weights `μ`.
pub fn tensor_flag(flag: &VermaFlag, kind: RepKind) -> VermaFlag {
    let weights = rep_weights(flag.shape(), kind);
    let mut out = VermaFlag::new(flag.shape());
    for (nu, k) in flag.iter() {
        for (mu, d) in weights.entries() {
            out.insert(nu + mu, k * d);
        }
    }
    out
}

pub fn project_block(flag: &VermaFlag, target: &BlockId) -> VermaFlag {
    let mut out = VermaFlag::new(flag.shape());
    for (w, k) in flag.iter() {
        if &block_id(w) == target {
            out.insert(w.clone(), k);
        }
    }
    out
}

/// `λ` occurs once and nothing else in the flag lies at or below it.
pub fn unique_minimum(flag: &VermaFlag, lam: &Weight) -> Result<bool> {
    match flag.mult(lam) {
        0 => Err(Error::NotInFlag {
            weight: lam.clone(),
        }),
        1 => Ok(!has_lower(flag, lam)?),
        _ => Ok(false),
    }
}

/// Is some other entry `ν ≠ λ` of the flag `ν ≤ λ`?
pub fn has_lower(flag: &VermaFlag, lam: &Weight) -> Result<bool> {
    for w in flag.weights() {
        if w != lam && bruhat_leq(w, lam)? {
            return Ok(true);
        }
    }
    Ok(false)
}
