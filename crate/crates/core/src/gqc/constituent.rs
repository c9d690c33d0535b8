//! Constituents: evaluations of a GQC code at powers of ξ.
//!
//! A constituent at `i` is a subspace of `V_i`, the coordinates `j` with
//! `ξ^{i·m_j} = 1`, over `GF(q)[ξ^i]`. It is stored by its span over the
//! full splitting field; spans of vectors with entries in a subfield keep
//! their dimension, intersections and duals under this extension, and the
//! reduced echelon basis of such a span has entries in the subfield.
//!
//! The pairing on `V_i` weights block `j` by `1/m_j`, the factor that
//! makes the flat Euclidean product split over constituents when block
//! lengths differ.

use super::code::GqcCode;
use super::cyclotomic::CyclotomicContext;
use crate::algebra::{FieldRef, Matrix};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::oracle::brute_intersection_dim;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    index: usize,
    degree: usize,
    active: Vec<bool>,
    weights: Vec<u32>,
    space: LinearCode,
}

impl Constituent {
    pub fn index(&self) -> usize {
        self.index
    }

    /// `[GF(q)[ξ^i] : GF(q)] = |C_i|`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Blocks `j` with `ξ^{i·m_j} = 1`.
    pub fn active(&self) -> &[bool] {
        &self.active
    }

    pub fn ambient_dim(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    pub fn dim(&self) -> usize {
        self.space.k()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Span over the splitting field, as a code of length `l`.
    pub fn space(&self) -> &LinearCode {
        &self.space
    }

    fn with_space(&self, space: LinearCode) -> Constituent {
        Constituent {
            space,
            ..self.clone()
        }
    }

    fn field(&self) -> &FieldRef {
        self.space.field()
    }

    /// `C_i^{⊥′} = {w ∈ V_i : Σ_j c_j w_j / m_j = 0 for all c ∈ C_i}`.
    pub fn v_dual(&self) -> Constituent {
        let f = self.field();
        let l = self.active.len();
        let act: Vec<usize> = (0..l).filter(|&j| self.active[j]).collect();
        let mut rows = Matrix::zeros(f, 0, l);
        if self.is_zero() {
            for &j in &act {
                let mut r = vec![0; l];
                r[j] = 1;
                rows.push_row(&r);
            }
        } else if !act.is_empty() {
            let g = self.space.generator();
            let mut weighted = Matrix::zeros(f, 0, act.len());
            for r in 0..g.rows() {
                let row: Vec<u32> = act.iter().map(|&j| f.mul(g.get(r, j), self.weights[j])).collect();
                weighted.push_row(&row);
            }
            let ns = weighted.nullspace();
            for r in 0..ns.rows() {
                let mut full = vec![0; l];
                for (k, &j) in act.iter().enumerate() {
                    full[j] = ns.get(r, k);
                }
                rows.push_row(&full);
            }
        }
        self.with_space(LinearCode::from_matrix(&rows))
    }

    /// Entry-wise `x ↦ x^{p^s}` applied to the stored basis.
    fn frobenius(&self, s: u32) -> Constituent {
        let f = self.field();
        let g = self.space.generator().map(|x| f.frobenius(x, s));
        self.with_space(LinearCode::from_matrix(&g))
    }

    /// `C_i^{q^k}`: entry-wise `q^k`-th powers.
    pub fn conjugate(&self, base_degree: u32, k: u32) -> Constituent {
        self.frobenius(base_degree * k)
    }

    /// Hermitian `V_i`-dual, `{w : Σ_j c_j w_j^{q^{d/2}} / m_j = 0}` with
    /// `d = |C_i|` even.
    pub fn hermitian_v_dual(&self, ctx: &CyclotomicContext) -> Result<Constituent> {
        if self.degree % 2 == 1 {
            return Err(Error::DegreeOdd(self.index));
        }
        // w ∈ herm-dual ⇔ w^{q^{d/2}} ∈ v_dual, and x^{q^{d/2}} is an
        // involution on GF(q)[ξ^i], which contains every basis entry.
        let s = ctx.base().degree() * (self.degree / 2) as u32;
        Ok(self.v_dual().frobenius(s))
    }

    pub fn intersection_dim(&self, other: &Constituent) -> Result<usize> {
        brute_intersection_dim(&self.space, &other.space)
    }

    pub fn is_subspace_of(&self, other: &Constituent) -> bool {
        self.space.is_subcode_of(&other.space)
    }
}

pub(crate) fn check_context(c: &GqcCode, ctx: &CyclotomicContext) -> Result<()> {
    if ctx.base() != c.field() {
        return Err(Error::FieldMismatch);
    }
    if c.m() != ctx.m() {
        return Err(Error::LengthMismatch {
            expected: c.m(),
            got: ctx.m(),
        });
    }
    Ok(())
}

/// `1/m_j` in the splitting field, per block.
pub(crate) fn block_weights(ctx: &CyclotomicContext, blocks: &[usize]) -> Vec<u32> {
    let base = ctx.base();
    blocks
        .iter()
        .map(|&m| {
            let inv = base.inv(base.from_int(m as i64)).expect("gcd(m_j, q) = 1");
            ctx.embedding().map(inv)
        })
        .collect()
}

/// Whether block `j` contributes at `i`: `(m / m_j) | i`.
pub(crate) fn active_blocks(ctx: &CyclotomicContext, blocks: &[usize], i: usize) -> Vec<bool> {
    blocks.iter().map(|&mj| i % (ctx.m() / mj) == 0).collect()
}

/// `C_i = {(c_1(ξ^i)δ_{1,i}, …, c_l(ξ^i)δ_{l,i}) : c ∈ C}`, from the flat
/// code's echelon rows.
pub fn constituent(c: &GqcCode, ctx: &CyclotomicContext, i: i64) -> Result<Constituent> {
    check_context(c, ctx)?;
    let idx = ctx.reduce(i);
    let ext = ctx.ext();
    let active = active_blocks(ctx, c.blocks(), idx);
    let alpha = ctx.xi_pow(idx as i64);
    let g = c.flat().generator();
    let mut rows = Matrix::zeros(ext, 0, c.l());
    for r in 0..g.rows() {
        let polys = c.split(g.row(r));
        let mut row = Vec::with_capacity(c.l());
        for (p, &on) in polys.iter().zip(&active) {
            row.push(if on { p.eval_ext(ctx.embedding(), alpha)? } else { 0 });
        }
        rows.push_row(&row);
    }
    Ok(Constituent {
        index: idx,
        degree: ctx.coset_of(idx as i64).len(),
        active,
        weights: block_weights(ctx, c.blocks()),
        space: LinearCode::from_matrix(&rows),
    })
}

/// Constituents at every coset leader, in leader order.
pub fn constituents(c: &GqcCode, ctx: &CyclotomicContext) -> Result<Vec<Constituent>> {
    ctx.leaders()
        .into_iter()
        .map(|i| constituent(c, ctx, i as i64))
        .collect()
}
