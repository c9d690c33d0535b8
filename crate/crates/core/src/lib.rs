//! σ-LCD codes over finite fields.
//!
//! The crate computes σ-duals and hulls of linear codes under semi-linear
//! maps, builds maps that make any code σ-LCD, constructs linear
//! complementary pairs, tests generalized quasi-cyclic codes through their
//! constituents, and tests Abelian codes through idempotent generators.
//! Every formula-based predicate has a brute-force counterpart in
//! [`oracle`].

pub mod abelian;
pub mod algebra;
pub mod codes;
pub mod error;
pub mod gqc;
pub mod oracle;

pub use error::{Error, Result};
