//! Generalized quasi-cyclic codes: submodules of `∏_j F_q[x]/(x^{m_j} − 1)`
//! studied through their constituents at powers of a primitive root of
//! unity.

pub mod code;
pub mod constituent;
pub mod criteria;
pub mod cyclotomic;
pub mod product;

pub use code::{mu_a_map, GqcCode};
pub use constituent::{constituent, constituents, Constituent};
pub use criteria::{
    all_cyclic_codes, cross_block_lcd, disjoint_support_lcd, flat_mua_hull, is_mua_lcd, is_mua_lcd_over,
    is_mua_self_dual, is_mua_self_orthogonal, maximal_one_gen_check, maximal_qc_census, one_gen_lcd,
    one_gen_lcd_gcd, one_gen_self_orthogonal, one_gen_self_orthogonal_gcd, reversal_sigma_lcd, supports,
    trivial_constituent_lcd, MaximalCensus, MaximalCheck, OneGenerator,
};
pub use cyclotomic::{cyclotomic_cosets, CyclotomicContext, GammaPartition};
pub use product::{product_lcd_gqc, product_lcd_gqc_with_budget, ProductCode, ProductComponent};
