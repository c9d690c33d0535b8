//! Linear codes, semi-linear maps, σ-duals and hulls.

pub mod hull;
pub mod lcp;
pub mod linear;
pub mod sigma;

pub use hull::{
    apply_sigma, euclidean_hull, hull_dim, is_sigma_lcd, is_sigma_self_dual, is_sigma_self_orthogonal,
    make_lcd_sigma, normalize_hull, sigma_dual, HullNormalForm, LcdWitness,
};
pub use lcp::{build_lcp, build_lcp_with_budget, LcpPair};
pub use linear::LinearCode;
pub use sigma::SemiLinearMap;

use crate::error::Result;
use crate::oracle::{brute_min_distance, EnumerationBudget};

/// Minimum distance by full enumeration under the default budget.
pub fn min_distance(c: &LinearCode) -> Result<usize> {
    brute_min_distance(c, &EnumerationBudget::default())
}
