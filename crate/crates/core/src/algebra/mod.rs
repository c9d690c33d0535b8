//! Exact arithmetic: finite fields, matrices and polynomials over them.

pub mod embedding;
pub mod field;
pub mod matrix;
pub mod poly;

pub use embedding::Embedding;
pub use field::{parse_field, parse_u32_list, ArithOp, Field, FieldElement, FieldRef};
pub use matrix::{dot, Matrix, Rref};
pub use poly::Poly;
