//! Atypicality, blocks and the Bruhat order.
//!
//! In tuple coordinates a weight is atypical exactly when some `qᵢ` equals
//! some `r_j`; the degree is the size of the multiset intersection of the two
//! sides. Cancelling one maximal set of matched pairs leaves the *core*, and
//! two weights are linked iff they have the same degree and the same core.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{act, simple_root_coefficients, weyl_elements, AlgebraShape, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtypicalityData {
    pub degree: usize,
    /// Matched `(q-index, r-index)` pairs, 0-based.
    pub pairs: Vec<(usize, usize)>,
}

/// Canonical name of a linkage class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub shape: AlgebraShape,
    pub degree: usize,
    pub core_q: Vec<i64>,
    pub core_r: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct BlockIdRepr {
    degree: usize,
    core_q: Vec<i64>,
    core_r: Vec<i64>,
}

impl Serialize for BlockId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BlockIdRepr {
            degree: self.degree,
            core_q: self.core_q.clone(),
            core_r: self.core_r.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlockId {
    /// The shape is recovered from `|core| + degree` on each side.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = BlockIdRepr::deserialize(d)?;
        let shape = AlgebraShape::new(
            repr.core_q.len() + repr.degree,
            repr.core_r.len() + repr.degree,
        )
        .map_err(serde::de::Error::custom)?;
        let mut core_q = repr.core_q;
        let mut core_r = repr.core_r;
        core_q.sort_unstable();
        core_r.sort_unstable();
        Ok(BlockId {
            shape,
            degree: repr.degree,
            core_q,
            core_r,
        })
    }
}

/// Greedy matching: each `qᵢ` in index order takes the lowest free `r_j` of
/// equal value. Any maximum matching has the same size and leftovers.
pub fn atypicality(lam: &Weight) -> AtypicalityData {
    let mut used = vec![false; lam.r().len()];
    let mut pairs = Vec::new();
    for (i, &qi) in lam.q().iter().enumerate() {
        if let Some(j) = (0..used.len()).find(|&j| !used[j] && lam.r()[j] == qi) {
            used[j] = true;
            pairs.push((i, j));
        }
    }
    AtypicalityData {
        degree: pairs.len(),
        pairs,
    }
}

pub fn degree(lam: &Weight) -> usize {
    atypicality(lam).degree
}

pub fn is_typical(lam: &Weight) -> bool {
    degree(lam) == 0
}

pub fn block_id(lam: &Weight) -> BlockId {
    let data = atypicality(lam);
    let matched_q: HashSet<usize> = data.pairs.iter().map(|p| p.0).collect();
    let matched_r: HashSet<usize> = data.pairs.iter().map(|p| p.1).collect();
    let mut core_q: Vec<i64> = lam
        .q()
        .iter()
        .enumerate()
        .filter(|(i, _)| !matched_q.contains(i))
        .map(|(_, &x)| x)
        .collect();
    let mut core_r: Vec<i64> = lam
        .r()
        .iter()
        .enumerate()
        .filter(|(j, _)| !matched_r.contains(j))
        .map(|(_, &x)| x)
        .collect();
    core_q.sort_unstable();
    core_r.sort_unstable();
    BlockId {
        shape: lam.shape(),
        degree: data.degree,
        core_q,
        core_r,
    }
}

pub fn is_linked(a: &Weight, b: &Weight) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(block_id(a) == block_id(b))
}

/// `mu ≤ lam`: linked, and `lam − mu` is a nonnegative combination of simple roots.
pub fn bruhat_leq(mu: &Weight, lam: &Weight) -> Result<bool> {
    if !is_linked(mu, lam)? {
        return Ok(false);
    }
    Ok(root_cone_leq(mu, lam))
}

/// The cone half of [`bruhat_leq`], for callers that already know the two
/// weights share a block.
pub(crate) fn root_cone_leq(mu: &Weight, lam: &Weight) -> bool {
    simple_root_coefficients(&(lam - mu)).is_some_and(|c| c.iter().all(|&x| x >= 0))
}

pub fn bruhat_lt(mu: &Weight, lam: &Weight) -> Result<bool> {
    Ok(mu != lam && bruhat_leq(mu, lam)?)
}

/// Brute-force linkage: breadth-first closure of `a` under Weyl moves and
/// shifts `λ ↦ λ ± β` along odd roots `β = δᵢ − ε_j` with `(λ, β) = 0`, all
/// coordinates confined to `[min − window, max + window]` over both inputs.
///
/// Independent of [`block_id`]; it exists to check it.
pub fn linkage_oracle(a: &Weight, b: &Weight, window: i64) -> bool {
    if a.shape() != b.shape() {
        return false;
    }
    let shape = a.shape();
    let lo = a.coords().chain(b.coords()).min().unwrap_or(0) - window;
    let hi = a.coords().chain(b.coords()).max().unwrap_or(0) + window;
    let in_box = |w: &Weight| w.coords().all(|x| (lo..=hi).contains(&x));
    let group = weyl_elements(shape);

    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == b {
            return true;
        }
        let mut next = Vec::new();
        for w in &group {
            next.push(act(w, &cur));
        }
        for i in 0..shape.m() {
            for j in 0..shape.n() {
                // (cur, δᵢ − ε_j) = qᵢ − r_j
                if cur.q()[i] != cur.r()[j] {
                    continue;
                }
                for step in [-1, 1] {
                    let mut q = cur.q().to_vec();
                    let mut r = cur.r().to_vec();
                    q[i] += step;
                    r[j] += step;
                    next.push(Weight::new(shape, q, r).expect("same shape"));
                }
            }
        }
        for nb in next {
            if in_box(&nb) && seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn atypicality_degrees() {
        assert_eq!(atypicality(&w("2,1|1,2")).degree, 2);
        assert_eq!(atypicality(&w("3,3|5,5")).degree, 0);
        assert_eq!(atypicality(&w("2,1,3|1")).degree, 1);
        let data = atypicality(&w("4,4|4,4"));
        assert_eq!(data.pairs, vec![(0, 0), (1, 1)]);
        // no reuse: one r can match only one q
        assert_eq!(atypicality(&w("4,4,4|4")).degree, 1);
    }

    #[test]
    fn block_ids() {
        let b = block_id(&w("5,0,2|2"));
        assert_eq!(
            (b.degree, b.core_q.clone(), b.core_r.clone()),
            (1, vec![0, 5], vec![])
        );
        let b = block_id(&w("7,3|3,7"));
        assert_eq!(
            (b.degree, b.core_q.is_empty(), b.core_r.is_empty()),
            (2, true, true)
        );
        let b = block_id(&w("4,1|2,9"));
        assert_eq!(
            (b.degree, b.core_q.clone(), b.core_r.clone()),
            (0, vec![1, 4], vec![2, 9])
        );
    }

    #[test]
    fn block_id_json() {
        let b = block_id(&w("5,0,2|2"));
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"degree":1,"core_q":[0,5],"core_r":[]}"#);
        let back: BlockId = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn linked_examples() {
        assert!(is_linked(&w("2,1,3|1"), &w("4,3,2|4")).unwrap());
        assert!(is_linked(&w("2,1|1,2"), &w("3,5|5,3")).unwrap());
        assert!(!is_linked(&w("2,1|1,2"), &w("3,3|5,5")).unwrap());
        assert!(is_linked(&w("2,1|1,2"), &w("5,8|5,8")).unwrap());
        assert!(is_linked(&w("2,1|1,2"), &w("3,3|5,5")).is_ok());
        assert!(is_linked(&w("2,1|1,2"), &w("2,1,3|1")).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert!(linkage_oracle(&w("2,1,3|1"), &w("4,3,2|4"), 2));
        assert!(linkage_oracle(&w("2,1|1,2"), &w("3,5|5,3"), 2));
        assert!(!linkage_oracle(&w("2,1|1,2"), &w("3,3|5,5"), 2));
        assert!(linkage_oracle(&w("3,3|5,5"), &w("3,3|5,5"), 1));
        assert!(!linkage_oracle(&w("1,1|1,1"), &w("1,2|1,3"), 3));
    }

    #[test]
    fn bruhat_examples() {
        let (a, b, c) = (7, 4, 2);
        let lo = Weight::from_parts(&[a, b, c], &[c]).unwrap();
        let hi = Weight::from_parts(&[a, b, c + 1], &[c + 1]).unwrap();
        assert!(bruhat_leq(&lo, &hi).unwrap());
        assert!(!bruhat_leq(&hi, &lo).unwrap());
        assert!(bruhat_leq(&lo, &lo).unwrap());
        let swapped = Weight::from_parts(&[b, a, c], &[c]).unwrap();
        assert!(bruhat_leq(&swapped, &lo).unwrap());
        assert!(!bruhat_leq(&lo, &swapped).unwrap());
        // unlinked weights are incomparable even if the cone test passes
        assert!(!bruhat_leq(&w("1,1,1|5"), &w("2,1,1|6")).unwrap());
    }
}
