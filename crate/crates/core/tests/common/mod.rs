#![allow(dead_code, unused_imports)]

pub mod proof_steps;

use supero_core::tables::{parse_formula, Params};
use supero_core::{AlgebraShape, Weight};

pub use proof_steps::{ProofStep, PROOF_STEPS};

pub fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

/// Instantiates a symbolic weight pattern such as `c+1,a,b|c`.
pub fn pattern_weight(shape: AlgebraShape, pattern: &str, p: &Params) -> Weight {
    let f = parse_formula(shape, &format!("M_{{{pattern}}}")).expect("pattern parses");
    assert_eq!(f.terms.len(), 1, "bad pattern {pattern}");
    f.terms[0].weight(shape, p)
}
