//! Sufficient conditions for a Verma module to occur in the flag of `P_λ`.
//!
//! Six rules are applied: negative-pairing reflection chains from `λ`
//! (C1 for one step, C2 for longer chains), one isotropic shift `λ + β` with
//! `(λ, β) = 0` (C3) and its chain images (C4), and two successive shifts
//! `λ + β + γ` with `ht β < ht γ` (C5) and their chain images (C6).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::flags::VermaFlag;
use crate::lattice::{
    coroot_pairing, form_unchecked, positive_even_roots, positive_odd_roots, reflect, root_height,
    Root, Weight,
};

/// Why a weight was certified. Ordered by preference when several apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "SELF")]
    SelfWeight,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::SelfWeight => "SELF",
            Condition::C1 => "C1",
            Condition::C2 => "C2",
            Condition::C3 => "C3",
            Condition::C4 => "C4",
            Condition::C5 => "C5",
            Condition::C6 => "C6",
        };
        f.write_str(s)
    }
}

/// Weights known to occur in the flag of `P_λ`, each once, with a tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedSet {
    pub lam: Weight,
    pub tags: BTreeMap<Weight, Condition>,
}

impl CertifiedSet {
    /// The certified weights as a flag with every multiplicity 1.
    pub fn flag(&self) -> VermaFlag {
        VermaFlag::from_weights(self.lam.shape(), self.tags.keys())
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.tags.contains_key(w)
    }

    pub fn tag(&self, w: &Weight) -> Option<Condition> {
        self.tags.get(w).copied()
    }

    fn add(&mut self, w: Weight, tag: Condition) {
        self.tags
            .entry(w)
            .and_modify(|t| *t = (*t).min(tag))
            .or_insert(tag);
    }
}

/// Every weight reachable from `start` by a chain of at least one reflection
/// `s_α` with `⟨·, α∨⟩ < 0` at each step, together with the chain length of
/// its first discovery. Chains are cut at `|W|` steps.
fn negative_chains(start: &Weight, even: &[Root]) -> Vec<(Weight, usize)> {
    let limit = start.shape().weyl_order();
    let mut seen: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut frontier = vec![start.clone()];
    for depth in 1..=limit {
        let mut next = Vec::new();
        for cur in &frontier {
            for alpha in even {
                if coroot_pairing(cur, alpha).expect("even root") < 0 {
                    let img = reflect(alpha, cur).expect("even root");
                    if img != *start && !seen.contains_key(&img) {
                        seen.insert(img.clone(), depth);
                        next.push(img);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn odd_shifts(lam: &Weight, odd: &[Root]) -> Vec<(Weight, i64)> {
    odd.iter()
        .filter_map(|beta| {
            let v = beta.vector();
            (form_unchecked(lam, &v) == 0).then(|| (lam + &v, root_height(beta)))
        })
        .collect()
}

pub fn certified_weights(lam: &Weight) -> CertifiedSet {
    let shape = lam.shape();
    let even = positive_even_roots(shape);
    let odd = positive_odd_roots(shape);
    let mut set = CertifiedSet {
        lam: lam.clone(),
        tags: BTreeMap::new(),
    };
    set.add(lam.clone(), Condition::SelfWeight);

    for (w, depth) in negative_chains(lam, &even) {
        set.add(
            w,
            if depth == 1 {
                Condition::C1
            } else {
                Condition::C2
            },
        );
    }

    for (first, ht_beta) in odd_shifts(lam, &odd) {
        for (second, ht_gamma) in odd_shifts(&first, &odd) {
            if ht_beta < ht_gamma {
                for (w, _) in negative_chains(&second, &even) {
                    set.add(w, Condition::C6);
                }
                set.add(second, Condition::C5);
            }
        }
        for (w, _) in negative_chains(&first, &even) {
            set.add(w, Condition::C4);
        }
        set.add(first, Condition::C3);
    }
    set
}

/// Lower bound on the length of the Verma flag of `P_λ`.
pub fn min_flag_length(lam: &Weight) -> usize {
    certified_weights(lam).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::{bruhat_leq, is_typical};

    fn wt(q: &[i64], r: &[i64]) -> Weight {
        Weight::from_parts(q, r).unwrap()
    }

    #[test]
    fn gl22_all_equal_has_four_c3() {
        let a = 3;
        let set = certified_weights(&wt(&[a, a], &[a, a]));
        for w in [
            wt(&[a + 1, a], &[a, a + 1]),
            wt(&[a, a + 1], &[a + 1, a]),
            wt(&[a + 1, a], &[a + 1, a]),
            wt(&[a, a + 1], &[a, a + 1]),
        ] {
            assert_eq!(set.tag(&w), Some(Condition::C3), "{w}");
        }
        assert_eq!(set.tag(&wt(&[a, a], &[a, a])), Some(Condition::SelfWeight));
    }

    #[test]
    fn gl22_condition_five() {
        let a = 4;
        let set = certified_weights(&wt(&[a, a - 1], &[a, a - 1]));
        assert_eq!(set.tag(&wt(&[a + 1, a], &[a, a + 1])), Some(Condition::C5));
        assert_eq!(
            set.tag(&wt(&[a + 1, a - 1], &[a - 1, a + 1])),
            Some(Condition::C4)
        );
        assert_eq!(set.tag(&wt(&[a, a - 1], &[a - 1, a])), Some(Condition::C1));
        assert_eq!(set.tag(&wt(&[a, a], &[a, a])), Some(Condition::C3));
    }

    #[test]
    fn typical_dominant_is_alone() {
        let lam = wt(&[7, 4, 2], &[5]);
        assert!(is_typical(&lam));
        assert_eq!(min_flag_length(&lam), 1);
        assert_eq!(min_flag_length(&wt(&[6, 2], &[3, 9])), 1);
    }

    #[test]
    fn gl22_generic_class_has_six() {
        let (a, b) = (6, 2);
        let set = certified_weights(&wt(&[a, b], &[a, b]));
        assert!(set.len() >= 6);
        assert_eq!(set.tag(&wt(&[a, b], &[b, a])), Some(Condition::C1));
        assert_eq!(set.tag(&wt(&[a + 1, b], &[b, a + 1])), Some(Condition::C4));
    }

    #[test]
    fn certified_weights_lie_above() {
        for lam in [
            wt(&[2, 2, 1], &[2]),
            wt(&[1, 3], &[3, 1]),
            wt(&[0, 0], &[0, 0]),
        ] {
            let set = certified_weights(&lam);
            assert!(set.len() >= 2);
            for w in set.tags.keys() {
                assert!(bruhat_leq(&lam, w).unwrap(), "{w} not above {lam}");
            }
        }
    }

    #[test]
    fn json_tags() {
        let set = certified_weights(&wt(&[1, 1], &[1, 1]));
        let json = serde_json::to_string(&set).unwrap();
        assert!(json.contains("\"SELF\""));
        let back: CertifiedSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, set);
    }
}
