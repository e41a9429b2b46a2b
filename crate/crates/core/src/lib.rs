//! Verma-flag multiplicities of projective covers in atypical blocks of
//! category O for gl(3|1) and gl(2|2).

pub mod bgg;
pub mod engine;
pub mod error;
pub mod flags;
pub mod jantzen;
pub mod lattice;
pub mod linkage;
pub mod reps;
pub mod suites;
pub mod tables;

pub use bgg::{composition_series, CompositionSeries};
pub use engine::{deduce_projective, deduce_with_hint, Deduction, Engine, Outcome, Tactic};
pub use error::{Error, Result};
pub use flags::VermaFlag;
pub use jantzen::{certified_weights, CertifiedSet, Condition};
pub use lattice::{AlgebraShape, Root, RootKind, Weight, WeylElement};
pub use linkage::{block_id, bruhat_leq, degree, is_linked, BlockId};
pub use reps::RepKind;
pub use tables::{composition_gl22, table_gl22, table_gl31, validate_tables, ValidationReport};
