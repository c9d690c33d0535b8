//! μ₋₁-LCD GQC codes assembled from Euclidean LCD codes over the fields
//! `GF(q)[ξ^{m/m_j}]`, each realised inside the minimal ideal of
//! `F_q[x]/(x^{m_j} − 1)` generated by `H_j = (x^{m_j} − 1)/M_{ξ^{m/m_j}}`.

use std::collections::HashMap;

use super::code::GqcCode;
use super::criteria::is_mua_lcd;
use super::cyclotomic::{gcd, lcm, CyclotomicContext};
use crate::algebra::{Embedding, FieldRef, Poly};
use crate::codes::{is_sigma_lcd, LinearCode, SemiLinearMap};
use crate::error::{Error, Result};
use crate::oracle::{brute_min_distance, EnumerationBudget};

/// A component: block length `m_j` and an `[r_j, k_j]` code over
/// `GF(q^{d_j})`, `d_j = ord_{m_j}(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductComponent {
    pub m: usize,
    pub code: LinearCode,
}

/// The assembled code with its dimension and distance bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCode {
    pub code: GqcCode,
    /// `Σ k_j d_j`.
    pub dimension: usize,
    /// `d_j` per component, when enumerable.
    pub component_distances: Vec<Option<usize>>,
    /// Minimum distance of the cyclic code generated by `H_j`.
    pub ideal_distances: Vec<Option<usize>>,
    /// `min_j d_j · d_{H_j}` over nonzero components.
    pub distance_bound: Option<usize>,
}

impl ProductCode {
    /// `R = Σ k_j d_j / Σ m_j r_j`.
    pub fn rate(&self) -> f64 {
        if self.code.n() == 0 {
            return 0.0;
        }
        self.dimension as f64 / self.code.n() as f64
    }
}

pub fn product_lcd_gqc(base: &FieldRef, components: &[ProductComponent]) -> Result<ProductCode> {
    product_lcd_gqc_with_budget(base, components, &EnumerationBudget::default())
}

pub fn product_lcd_gqc_with_budget(
    base: &FieldRef,
    components: &[ProductComponent],
    budget: &EnumerationBudget,
) -> Result<ProductCode> {
    let ms: Vec<usize> = components.iter().map(|c| c.m).collect();
    for x in 0..ms.len() {
        for y in x + 1..ms.len() {
            if ms[x] == ms[y] {
                return Err(Error::BlocksNotDistinct);
            }
        }
    }
    let q = base.order() as u64;
    for &mj in &ms {
        if mj == 0 || gcd(q, mj as u64) != 1 {
            return Err(Error::GcdNotOne(mj as i64, q as i64));
        }
    }
    let m = lcm(&ms);
    let ctx = CyclotomicContext::new(base, m)?;
    let blocks: Vec<usize> = components
        .iter()
        .flat_map(|c| std::iter::repeat(c.m).take(c.code.n()))
        .collect();

    let mut generators = Vec::new();
    let mut dimension = 0;
    let mut component_distances = Vec::new();
    let mut ideal_distances = Vec::new();
    let mut start = 0;
    for (j, comp) in components.iter().enumerate() {
        let mhat = (m / comp.m) as i64;
        let d = ctx.coset_of(mhat).len();
        let kf = comp.code.field();
        if kf.characteristic() != base.characteristic() || kf.degree() != base.degree() * d as u32 {
            return Err(Error::FieldMismatch);
        }
        if !is_sigma_lcd(&comp.code, &SemiLinearMap::identity(kf, comp.code.n()))? {
            return Err(Error::ComponentNotLcd(j));
        }
        let h = Poly::x_pow_minus_one(base, comp.m)
            .div_rem(&ctx.minimal_polynomial(mhat)?)?
            .0;
        let lift = lift_table(&ctx, &h, comp.m, d, ctx.xi_pow(mhat))?;
        let iota = Embedding::new(kf, ctx.ext())?;
        let g = comp.code.generator();
        for r in 0..g.rows() {
            let mut tuple = vec![Poly::zero(base); blocks.len()];
            for (k, &x) in g.row(r).iter().enumerate() {
                tuple[start + k] = lift
                    .get(&iota.map(x))
                    .cloned()
                    .ok_or(Error::VerificationFailed("element outside GF(q)[ξ^{m/m_j}]"))?;
            }
            generators.push(tuple);
        }
        dimension += comp.code.k() * d;
        component_distances.push(brute_min_distance(&comp.code, budget).ok());
        let hcode = GqcCode::cyclic(&h, comp.m)?;
        ideal_distances.push(brute_min_distance(hcode.flat(), budget).ok());
        start += comp.code.n();
    }
    let code = GqcCode::from_generators(base, &blocks, generators)?;
    if code.flat().k() != dimension {
        return Err(Error::VerificationFailed("product dimension"));
    }
    if !is_mua_lcd(&code, &ctx, -1)? {
        return Err(Error::VerificationFailed("product is not μ₋₁-LCD"));
    }
    let mut bound: Option<usize> = None;
    let mut known = true;
    for (j, comp) in components.iter().enumerate() {
        if comp.code.k() == 0 {
            continue;
        }
        match (component_distances[j], ideal_distances[j]) {
            (Some(a), Some(b)) => bound = Some(bound.map_or(a * b, |x| x.min(a * b))),
            _ => known = false,
        }
    }
    Ok(ProductCode {
        code,
        dimension,
        component_distances,
        ideal_distances,
        distance_bound: if known { bound } else { None },
    })
}

/// `e(β) ↦ e(x)` over the minimal ideal `H·F_q[x] mod (x^m − 1)`, which
/// evaluation at β maps bijectively onto `GF(q)[β]`.
fn lift_table(ctx: &CyclotomicContext, h: &Poly, m: usize, d: usize, beta: u32) -> Result<HashMap<u32, Poly>> {
    let base = ctx.base();
    let q = base.order() as usize;
    let basis: Vec<Poly> = (0..d)
        .map(|s| Ok(Poly::monomial(base, 1, s).mul_cyclic(h, m)?))
        .collect::<Result<_>>()?;
    let size = q.pow(d as u32);
    let mut table = HashMap::with_capacity(size);
    for idx in 0..size {
        let mut e = Poly::zero(base);
        let mut rest = idx;
        for b in &basis {
            let coef = (rest % q) as u32;
            rest /= q;
            if coef != 0 {
                e = e.add(&b.scale(coef))?;
            }
        }
        table.insert(e.eval_ext(ctx.embedding(), beta)?, e);
    }
    if table.len() != size {
        return Err(Error::VerificationFailed("evaluation on the minimal ideal is not injective"));
    }
    Ok(table)
}
