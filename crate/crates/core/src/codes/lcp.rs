//! Linear complementary pairs built from two codes of equal dimension.

use super::hull::front_permutation;
use super::linear::LinearCode;
use super::sigma::SemiLinearMap;
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::oracle::{self, next_permutation, EnumerationBudget};

/// A pair with `C₁ ∩ C₂ = {0}` and `dim C₁ + dim C₂ = n`.
///
/// `d1` is the minimum distance of `c1` and `d2` that of `c2^⊥`; either is
/// `None` when the code is zero or too large to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpPair {
    pub c1: LinearCode,
    pub c2: LinearCode,
    pub sigma: SemiLinearMap,
    pub n: usize,
    pub k: usize,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
}

/// `rank(G₁ · σ(G₂)ᵀ) = k`, i.e. `C₁ ∩ σ(C₂)^⊥ = {0}`.
fn complementary(c1: &LinearCode, c2: &LinearCode, sigma: &SemiLinearMap) -> bool {
    let mut img = Matrix::zeros(c2.field(), 0, c2.n());
    for r in 0..c2.k() {
        img.push_row(&sigma.apply(c2.generator().row(r)));
    }
    c1.generator().mul_transpose(&img).expect("same shape").rank() == c1.k()
}

/// Permutation carrying the information set of `c2` onto that of `c1`.
fn align(c1: &LinearCode, c2: &LinearCode) -> SemiLinearMap {
    let n = c1.n();
    // to_front(c2) followed by the inverse of to_front(c1).
    let p2 = front_permutation(n, c2.pivots());
    let p1 = front_permutation(n, c1.pivots());
    let mut inv1 = vec![0; n];
    for (i, &p) in p1.iter().enumerate() {
        inv1[p] = i;
    }
    let perm = p2.iter().map(|&p| inv1[p]).collect();
    SemiLinearMap::permutation(c1.field(), perm).expect("composition of bijections")
}

/// `M = A Bᵀ` where `G₁ = [I | A]` and `π(G₂) = [I | B]` on the information
/// set of `c1`.
fn cross_block(c1: &LinearCode, c2: &LinearCode, pi: &SemiLinearMap) -> Matrix {
    let f = c1.field();
    let k = c1.k();
    let info = c1.pivots();
    let mut m = Matrix::zeros(f, k, k);
    let g1 = c1.generator();
    let g2 = c2.generator();
    let rows2: Vec<Vec<u32>> = (0..k).map(|r| pi.apply(g2.row(r))).collect();
    for a in 0..k {
        for (b, row2) in rows2.iter().enumerate() {
            let mut s = 0;
            for c in (0..c1.n()).filter(|c| !info.contains(c)) {
                s = f.add(s, f.mul(g1.get(a, c), row2[c]));
            }
            m.set(a, b, s);
        }
    }
    m
}

/// Builds an LCP `(C₁, σ(C₂)^⊥)` for q > 2, or `({0}×C₁, σ({0}×C₂)^⊥)` of
/// length `n + 1` over GF(2).
pub fn build_lcp(c1: &LinearCode, c2: &LinearCode) -> Result<LcpPair> {
    build_lcp_with_budget(c1, c2, &EnumerationBudget::default())
}

pub fn build_lcp_with_budget(c1: &LinearCode, c2: &LinearCode, budget: &EnumerationBudget) -> Result<LcpPair> {
    c1.check_compatible(c2)?;
    if c1.k() != c2.k() {
        return Err(Error::DimensionMismatch(c1.k(), c2.k()));
    }
    let (a, b, sigma) = if c1.field().order() > 2 {
        (c1.clone(), c2.clone(), lcp_sigma_odd(c1, c2)?)
    } else {
        let (a, b) = (c1.prepend_zero(), c2.prepend_zero());
        let sigma = lcp_sigma_binary(&a, &b)?;
        (a, b, sigma)
    };
    let image = super::hull::apply_sigma(&sigma, &b)?;
    let second = image.dual();
    if a.k() + second.k() != a.n() || oracle::brute_intersection_dim(&a, &second)? != 0 {
        return Err(Error::VerificationFailed("pair is not complementary"));
    }
    let dist = |c: &LinearCode| oracle::brute_min_distance(c, budget).ok();
    Ok(LcpPair {
        n: a.n(),
        k: a.k(),
        d1: dist(&a),
        d2: dist(&image),
        c1: a,
        c2: second,
        sigma,
    })
}

/// Diagonal scaling on the information set of `c1` after aligning `c2`:
/// `G₁ (γπG₂)ᵀ = D + M`, and `D` is chosen entry by entry so every Schur
/// complement pivot stays nonzero.
fn lcp_sigma_odd(c1: &LinearCode, c2: &LinearCode) -> Result<SemiLinearMap> {
    let f = c1.field();
    let n = c1.n();
    let id = SemiLinearMap::identity(f, n);
    if complementary(c1, c2, &id) {
        return Ok(id);
    }
    let pi = align(c1, c2);
    let mut m = cross_block(c1, c2, &pi);
    let k = c1.k();
    let mut diag = vec![1; n];
    for i in 0..k {
        let mii = m.get(i, i);
        let d = (1..f.order())
            .find(|&d| f.add(d, mii) != 0)
            .expect("q > 2 leaves a nonzero choice");
        diag[c1.pivots()[i]] = d;
        let pivot_inv = f.inv(f.add(d, mii)).expect("nonzero pivot");
        for r in i + 1..k {
            let factor = f.mul(m.get(r, i), pivot_inv);
            if factor == 0 {
                continue;
            }
            for c in i + 1..k {
                let v = f.sub(m.get(r, c), f.mul(factor, m.get(i, c)));
                m.set(r, c, v);
            }
        }
    }
    let gamma = SemiLinearMap::diagonal(f, diag)?;
    let sigma = gamma.compose(&pi)?;
    if !complementary(c1, c2, &sigma) {
        return Err(Error::VerificationFailed("diagonal LCP map"));
    }
    Ok(sigma)
}

/// Over GF(2) the extra zero coordinate of `{0}×C₁` lets a permutation of
/// `{0} ∪ info(C₁)` act as a partial permutation matrix on the information
/// set; these are searched in lexicographic order, identity first.
fn lcp_sigma_binary(c1: &LinearCode, c2: &LinearCode) -> Result<SemiLinearMap> {
    let f = c1.field();
    let n = c1.n();
    let id = SemiLinearMap::identity(f, n);
    if complementary(c1, c2, &id) {
        return Ok(id);
    }
    let pi = align(c1, c2);
    let mut points = vec![0];
    points.extend_from_slice(c1.pivots());
    let mut order: Vec<usize> = (0..points.len()).collect();
    loop {
        let mut perm: Vec<usize> = (0..n).collect();
        for (i, &o) in order.iter().enumerate() {
            perm[points[i]] = points[o];
        }
        let tau = SemiLinearMap::permutation(f, perm)?;
        let sigma = tau.compose(&pi)?;
        if complementary(c1, c2, &sigma) {
            return Ok(sigma);
        }
        if !next_permutation(&mut order) {
            return Err(Error::VerificationFailed("no permutation completes the pair"));
        }
    }
}
