//! Exact computational algebra for rational-function pairs (f, g) with f∘g
//! real whose image curve g(ℝ̂) is a Jordan curve but not a circle.
//!
//! The pipeline runs over number fields with a designated order-2
//! conjugation automorphism: elliptic-curve isogenies produce the pair,
//! Sturm-sequence and resultant machinery certifies injectivity and the
//! circle dichotomy, and a permutation-group harness cross-checks the
//! block-theoretic statement underlying the construction.

pub mod field;
pub mod interval;
pub mod parse;
pub mod numfield;
pub mod poly;
pub mod ratfn;
pub mod moebius;
pub mod bipoly;
pub mod sturm;
pub mod elliptic;
pub mod construction;
pub mod permcheck;
pub mod families;

pub use numfield::{FieldElement, NumberField};
pub use poly::Polynomial;
pub use ratfn::RatFn;
