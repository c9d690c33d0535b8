//! Univariate polynomials over a finite field.

use std::fmt;
use std::sync::Arc;

use super::embedding::Embedding;
use super::field::{parse_u32_list, FieldRef};
use crate::error::{Error, Result};

/// Little-endian coefficients with no trailing zeros; the zero polynomial
/// has no coefficients.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.to_text())
    }
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(Error::InvalidElement(bad as u64));
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(Poly {
            field: Arc::clone(field),
            coeffs,
        })
    }

    pub(crate) fn from_raw(field: &FieldRef, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: Arc::clone(field),
            coeffs,
        }
    }

    pub fn zero(field: &FieldRef) -> Self {
        Poly::from_raw(field, Vec::new())
    }

    pub fn one(field: &FieldRef) -> Self {
        Poly::from_raw(field, vec![1])
    }

    pub fn monomial(field: &FieldRef, coeff: u32, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = coeff;
        Poly::from_raw(field, c)
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(field: &FieldRef, m: usize) -> Self {
        let mut c = vec![0; m + 1];
        c[0] = field.neg(1);
        c[m] = 1;
        Poly::from_raw(field, c)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::from_raw(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::from_raw(f, c))
    }

    pub fn scale(&self, s: u32) -> Poly {
        let f = &self.field;
        Poly::from_raw(f, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    c[i + j] = f.add(c[i + j], f.mul(a, b));
                }
            }
        }
        Ok(Poly::from_raw(f, c))
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let top = r[k];
            if top == 0 {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quot[k - dd] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                if d != 0 {
                    let idx = k - dd + i;
                    r[idx] = f.sub(r[idx], f.mul(factor, d));
                }
            }
        }
        r.truncate(dd);
        Ok((Poly::from_raw(f, quot), Poly::from_raw(f, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).unwrap();
        self.scale(inv)
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended Euclid: returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1)?)?;
            let t = t0.sub(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = f.inv(r0.leading()).unwrap();
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Inverse modulo `modulus`, when it exists.
    pub fn inverse_mod(&self, modulus: &Poly) -> Result<Option<Poly>> {
        let (g, s, _) = self.rem(modulus)?.ext_gcd(modulus)?;
        if g.degree() != Some(0) {
            return Ok(None);
        }
        Ok(Some(s.rem(modulus)?))
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Horner evaluation at a point of an extension field, mapping the
    /// coefficients through `emb`.
    pub fn eval_ext(&self, emb: &Embedding, alpha: u32) -> Result<u32> {
        if emb.small() != &self.field {
            return Err(Error::EmbeddingMissing {
                small: self.field.order() as u64,
                big: emb.big().order() as u64,
            });
        }
        let big = emb.big();
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| big.add(big.mul(acc, alpha), emb.map(c))))
    }

    /// Reduction modulo `x^m - 1` by folding exponents.
    pub fn reduce_cyclic(&self, m: usize) -> Poly {
        let f = &self.field;
        let mut c = vec![0u32; m];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i % m] = f.add(c[i % m], a);
        }
        Poly::from_raw(f, c)
    }

    /// `self(x^a) mod (x^m - 1)` for any integer `a`.
    pub fn compose_power(&self, a: i64, m: usize) -> Poly {
        let f = &self.field;
        let mut c = vec![0u32; m];
        for (i, &v) in self.coeffs.iter().enumerate() {
            let idx = ((i as i64 * a).rem_euclid(m as i64)) as usize;
            c[idx] = f.add(c[idx], v);
        }
        Poly::from_raw(f, c)
    }

    /// Product modulo `x^m - 1`.
    pub fn mul_cyclic(&self, other: &Poly, m: usize) -> Result<Poly> {
        Ok(self.mul(other)?.reduce_cyclic(m))
    }

    /// Dense coefficient vector of length `n` (padding with zeros).
    pub fn to_dense(&self, n: usize) -> Vec<u32> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), 0);
        v.truncate(n);
        v
    }

    /// Comma-separated integer encodings, constant term first.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(field: &FieldRef, s: &str) -> Result<Poly> {
        Poly::new(field, parse_u32_list(s)?)
    }
}
