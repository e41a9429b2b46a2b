//! Weight multisets of the translation representations `V`, `V*` and their
//! super exterior powers `∧^k = ⊕_{i+j=k} Λ^i(V₀) ⊗ S^j(V₁)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{AlgebraShape, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Base {
    Natural,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepKind {
    pub base: Base,
    pub power: u32,
}

impl RepKind {
    pub const V: RepKind = RepKind {
        base: Base::Natural,
        power: 1,
    };
    pub const V_DUAL: RepKind = RepKind {
        base: Base::Dual,
        power: 1,
    };
    pub const L2V: RepKind = RepKind {
        base: Base::Natural,
        power: 2,
    };
    pub const L2V_DUAL: RepKind = RepKind {
        base: Base::Dual,
        power: 2,
    };
    pub const L3V: RepKind = RepKind {
        base: Base::Natural,
        power: 3,
    };
    pub const L3V_DUAL: RepKind = RepKind {
        base: Base::Dual,
        power: 3,
    };

    /// The fixed order in which the engine tries representations.
    pub const SEARCH_ORDER: [RepKind; 6] = [
        Self::V,
        Self::V_DUAL,
        Self::L2V,
        Self::L2V_DUAL,
        Self::L3V,
        Self::L3V_DUAL,
    ];

    pub fn new(base: Base, power: u32) -> Result<Self> {
        if power == 0 {
            return Err(Error::Parse {
                what: "representation",
                input: format!("{base:?}^{power}"),
                reason: "power must be at least 1".into(),
            });
        }
        Ok(Self { base, power })
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let star = if self.base == Base::Dual { "*" } else { "" };
        if self.power == 1 {
            write!(f, "V{star}")
        } else {
            write!(f, "L{}V{star}", self.power)
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    /// `V`, `V*`, `L2V`, `L3V`, `L2V*`, `L3V*` (any `LkV` with `k ≥ 1`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, base) = match t.strip_suffix('*') {
            Some(body) => (body, Base::Dual),
            None => (t, Base::Natural),
        };
        let power = if body == "V" {
            Some(1)
        } else {
            body.strip_prefix('L')
                .and_then(|x| x.strip_suffix('V'))
                .and_then(|k| k.parse::<u32>().ok())
        };
        match power {
            Some(k) if k >= 1 => RepKind::new(base, k),
            _ => Err(Error::Parse {
                what: "representation",
                input: s.to_string(),
                reason: "expected V, V*, LkV or LkV*".into(),
            }),
        }
    }
}

impl Serialize for RepKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RepKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Weights of a representation with multiplicities, in generation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: Vec<(Weight, u32)>,
}

impl WeightMultiset {
    pub fn entries(&self) -> &[(Weight, u32)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|(w, _)| w)
    }

    /// Total count with multiplicity, i.e. the dimension.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, k)| u64::from(*k)).sum()
    }

    pub fn to_counts(&self) -> BTreeMap<Weight, u32> {
        let mut out = BTreeMap::new();
        for (w, k) in &self.entries {
            *out.entry(w.clone()).or_insert(0) += k;
        }
        out
    }
}

/// Enumerates `i` distinct δ-indices and a `j`-multiset of ε-indices for each
/// `i + j = k`, largest `i` first.
pub fn rep_weights(shape: AlgebraShape, kind: RepKind) -> WeightMultiset {
    let k = kind.power as usize;
    let sign = match kind.base {
        Base::Natural => 1,
        Base::Dual => -1,
    };
    let mut counts: BTreeMap<Weight, u32> = BTreeMap::new();
    let mut order: Vec<Weight> = Vec::new();
    for i in (0..=k.min(shape.m())).rev() {
        let j = k - i;
        for deltas in (0..shape.m()).combinations(i) {
            for epsilons in (0..shape.n()).combinations_with_replacement(j) {
                let mut wt = shape.zero();
                for &d in &deltas {
                    wt = &wt + &Weight::delta(shape, d);
                }
                for &e in &epsilons {
                    wt = &wt + &Weight::epsilon(shape, e);
                }
                let wt = wt.scaled(sign);
                let slot = counts.entry(wt.clone()).or_insert(0);
                if *slot == 0 {
                    order.push(wt);
                }
                *slot += 1;
            }
        }
    }
    let entries = order
        .into_iter()
        .map(|w| {
            let k = counts[&w];
            (w, k)
        })
        .collect();
    WeightMultiset { entries }
}

/// `Σ_{i+j=k} C(m, i)·C(n+j−1, j)`.
pub fn rep_dim(shape: AlgebraShape, kind: RepKind) -> u64 {
    let k = u64::from(kind.power);
    let (m, n) = (shape.m() as u64, shape.n() as u64);
    (0..=k.min(m))
        .map(|i| {
            let j = k - i;
            binomial(m, i) * binomial(n + j - 1, j)
        })
        .sum()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl31() -> AlgebraShape {
        AlgebraShape::GL31
    }

    fn gl22() -> AlgebraShape {
        AlgebraShape::GL22
    }

    #[test]
    fn names_round_trip() {
        for name in ["V", "V*", "L2V", "L3V", "L2V*", "L3V*"] {
            let kind: RepKind = name.parse().unwrap();
            assert_eq!(kind.to_string(), name);
        }
        assert_eq!("L1V".parse::<RepKind>().unwrap(), RepKind::V);
        assert!("W".parse::<RepKind>().is_err());
        assert!("L0V".parse::<RepKind>().is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(rep_dim(gl31(), RepKind::L2V), 7);
        assert_eq!(rep_dim(gl22(), RepKind::L2V), 8);
        assert_eq!(rep_dim(gl22(), RepKind::L3V), 12);
        assert_eq!(rep_dim(gl31(), RepKind::V), 4);
        assert_eq!(rep_dim(gl22(), RepKind::V_DUAL), 4);
    }

    #[test]
    fn natural_is_basis() {
        let ws = rep_weights(gl22(), RepKind::V);
        assert_eq!(ws.total(), 4);
        assert!(ws.entries().iter().all(|(_, k)| *k == 1));
        assert!(ws.iter().any(|w| *w == Weight::epsilon(gl22(), 1)));
    }

    #[test]
    fn dual_negates() {
        for shape in [gl31(), gl22()] {
            for k in 1..=3 {
                let nat = rep_weights(shape, RepKind::new(Base::Natural, k).unwrap());
                let dual = rep_weights(shape, RepKind::new(Base::Dual, k).unwrap());
                let neg: Vec<Weight> = nat.iter().map(|w| -w).collect();
                assert_eq!(neg, dual.iter().cloned().collect::<Vec<_>>());
            }
        }
    }
}
