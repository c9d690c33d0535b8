//! q-cyclotomic cosets modulo m, the splitting field of `x^m − 1`, and
//! minimal polynomials of powers of a primitive m-th root of unity.

use std::sync::Arc;

use crate::algebra::{Embedding, Field, FieldRef, Poly};
use crate::error::{Error, Result};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(values: &[usize]) -> usize {
    values
        .iter()
        .fold(1, |acc, &v| acc / gcd(acc as u64, v as u64) as usize * v)
}

/// The element of exact order `m` with least encoding. Those elements are
/// the `h^k`, `gcd(k, m) = 1`, for `h = g^{(Q−1)/m}` and any primitive `g`.
fn least_of_order(f: &Field, m: u64) -> Option<u32> {
    let order = f.order() as u64 - 1;
    if m == 0 || order % m != 0 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let g = (1..f.order()).find(|&a| f.multiplicative_order(a) == Some(order))?;
    let h = f.pow(g, order / m);
    (1..m).filter(|&k| gcd(k, m) == 1).map(|k| f.pow(h, k)).min()
}

/// Partition of `Z_m` into orbits of `i ↦ q·i`, each listed from its least
/// element (the leader) in orbit order.
pub fn cyclotomic_cosets(q: u64, m: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = ((i as u64 * q) % m as u64) as usize;
        }
        out.push(coset);
    }
    out
}

/// Everything needed to evaluate polynomials over GF(q) at powers of ξ, a
/// primitive m-th root of unity in GF(q^t), `t = ord_m(q)`.
///
/// ξ is the element of exact order m with least integer encoding in the
/// default representation of GF(p^{e·t}).
#[derive(Debug, Clone)]
pub struct CyclotomicContext {
    base: FieldRef,
    ext: FieldRef,
    embedding: Embedding,
    m: usize,
    t: u32,
    xi_powers: Vec<u32>,
    cosets: Vec<Vec<usize>>,
    coset_index: Vec<usize>,
}

impl CyclotomicContext {
    pub fn new(base: &FieldRef, m: usize) -> Result<Self> {
        let q = base.order() as u64;
        if m == 0 || gcd(q, m as u64) != 1 {
            return Err(Error::GcdNotOne(q as i64, m as i64));
        }
        let mut t = 1u32;
        let mut r = q % m as u64;
        while r != 1 % m as u64 {
            r = r * q % m as u64;
            t += 1;
        }
        let ext = if t == 1 {
            Arc::clone(base)
        } else {
            Field::new(base.characteristic(), base.degree() * t, None)?
        };
        let embedding = Embedding::new(base, &ext)?;
        let xi = least_of_order(&ext, m as u64).ok_or(Error::VerificationFailed("no element of order m"))?;
        let mut xi_powers = Vec::with_capacity(m);
        let mut acc = 1;
        for _ in 0..m {
            xi_powers.push(acc);
            acc = ext.mul(acc, xi);
        }
        let cosets = cyclotomic_cosets(q, m);
        let mut coset_index = vec![0; m];
        for (k, c) in cosets.iter().enumerate() {
            for &i in c {
                coset_index[i] = k;
            }
        }
        Ok(CyclotomicContext {
            base: Arc::clone(base),
            ext,
            embedding,
            m,
            t,
            xi_powers,
            cosets,
            coset_index,
        })
    }

    pub fn base(&self) -> &FieldRef {
        &self.base
    }

    pub fn ext(&self) -> &FieldRef {
        &self.ext
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `[GF(q^t) : GF(q)]`.
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn xi(&self) -> u32 {
        self.xi_powers[1 % self.m]
    }

    /// `ξ^i` for any integer `i`.
    pub fn xi_pow(&self, i: i64) -> u32 {
        self.xi_powers[i.rem_euclid(self.m as i64) as usize]
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, i: i64) -> &[usize] {
        &self.cosets[self.coset_index[self.reduce(i)]]
    }

    pub fn leader(&self, i: i64) -> usize {
        self.coset_of(i)[0]
    }

    /// Coset leaders in increasing order.
    pub fn leaders(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub(crate) fn reduce(&self, i: i64) -> usize {
        i.rem_euclid(self.m as i64) as usize
    }

    /// `M_{ξ^i}(x) = ∏_{j ∈ C_i} (x − ξ^j)`, with coefficients pulled back
    /// into GF(q).
    pub fn minimal_polynomial(&self, i: i64) -> Result<Poly> {
        let ext = &self.ext;
        let mut acc = Poly::one(ext);
        for &j in self.coset_of(i) {
            let factor = Poly::new(ext, vec![ext.neg(self.xi_powers[j]), 1])?;
            acc = acc.mul(&factor)?;
        }
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|&c| {
                self.embedding
                    .preimage(c)
                    .ok_or(Error::VerificationFailed("minimal polynomial leaves GF(q)"))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::new(&self.base, coeffs)
    }

    /// Leaders split by how their cosets meet their negatives.
    pub fn gamma_partition(&self) -> GammaPartition {
        let m = self.m as i64;
        let mut out = GammaPartition::default();
        for leader in self.leaders() {
            let neg = self.leader(-(leader as i64));
            if neg == leader {
                if leader == 0 || 2 * leader as i64 == m {
                    out.zero_plus.push(leader);
                } else {
                    out.zero_minus.push(leader);
                }
            } else if leader < neg {
                out.one.push(leader);
                out.neg_one.push(neg);
            }
        }
        out
    }
}

/// `Γ₀,₊` (ξ^i = ±1), `Γ₀,₋` (other self-reciprocal cosets), `Γ₁` (the
/// smaller leader of each reciprocal pair) and the partners `−Γ₁`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaPartition {
    pub zero_plus: Vec<usize>,
    pub zero_minus: Vec<usize>,
    pub one: Vec<usize>,
    pub neg_one: Vec<usize>,
}
