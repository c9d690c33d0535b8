//! Finite fields GF(p^e) with a fixed irreducible modulus.
//!
//! Elements are carried as their integer encoding `Σ c_i p^i`, where
//! `c_0, …, c_{e-1}` are the coefficients of the residue class modulo the
//! field polynomial. Arithmetic goes through the owning [`Field`]; the
//! [`FieldElement`] wrapper pairs a value with its field for checked use.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type FieldRef = Arc<Field>;

const MAX_DEGREE: u32 = 16;
const TABLE_LIMIT: u64 = 1 << 20;
const ADD_TABLE_LIMIT: u64 = 1 << 10;

pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.e, self.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)?;
        if self.e > 1 {
            let m: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, ":{}", m.join(","))?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut r, mut e) = (q, 0u32);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p as u32, e))
}

// Dense polynomial helpers over GF(p), little-endian, used only for the
// modulus search and irreducibility test.
fn prime_poly_rem(f: &[u32], d: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dd = d.len() - 1;
    let p = p as u64;
    let lead_inv = mod_pow(d[dd] as u64, p - 2, p);
    while r.len() > dd {
        let top = *r.last().unwrap() % p;
        if top != 0 {
            let factor = top * lead_inv % p;
            let shift = r.len() - 1 - dd;
            for (i, &c) in d.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p * p - factor * c as u64 % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| (c % p) as u32).collect()
}

fn mod_pow(mut b: u64, mut n: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        n >>= 1;
    }
    acc
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible_over_prime(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        for idx in 0..count {
            let mut v = idx;
            for c in divisor.iter_mut().take(d) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            if prime_poly_rem(f, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree `e`,
/// comparing coefficient tuples `(c_0, c_1, …, c_{e-1})` with `c_0` first.
pub fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    let total = (p as u64).pow(e as u32);
    let mut f = vec![0u32; e + 1];
    f[e] = 1;
    for idx in 0..total {
        // c_0 is the most significant digit of idx.
        let mut v = idx;
        for i in (0..e).rev() {
            f[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        if is_irreducible_over_prime(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds GF(p^e). Without a modulus the default one is selected.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<FieldRef> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::DegreeMismatch { expected: 1, got: 0 });
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= u32::MAX as u64 / 2);
        let q = match q {
            Some(q) if e <= MAX_DEGREE => q,
            _ => return Err(Error::FieldTooLarge { p, e }),
        };
        let modulus = match modulus {
            Some(m) => {
                let mut m = m.to_vec();
                while m.len() > 1 && *m.last().unwrap() == 0 {
                    m.pop();
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidElement(*m.iter().max().unwrap() as u64));
                }
                if m.len() != e as usize + 1 || m[e as usize] != 1 {
                    return Err(Error::DegreeMismatch {
                        expected: e as usize,
                        got: m.len().saturating_sub(1),
                    });
                }
                if !is_irreducible_over_prime(&m, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => default_modulus(p, e),
        };
        let mut field = Field {
            p,
            e,
            q: q as u32,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add: Vec::new(),
        };
        if q <= TABLE_LIMIT && e > 1 {
            field.build_tables();
        }
        if q <= ADD_TABLE_LIMIT && e > 1 && p != 2 {
            let mut add = vec![0u32; (q * q) as usize];
            for a in 0..q as u32 {
                for b in 0..q as u32 {
                    add[(a as u64 * q + b as u64) as usize] = field.add_digits(a, b);
                }
            }
            field.add = add;
        }
        Ok(Arc::new(field))
    }

    pub fn prime(p: u32) -> Result<FieldRef> {
        Field::new(p, 1, None)
    }

    /// GF(q) with the default modulus.
    pub fn with_order(q: u64) -> Result<FieldRef> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Field::new(p, e, None)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (2..self.q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_slow(g, order / r) != 1)
            })
            .unwrap_or(1);
        let n = order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut v = a;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + (d % self.p))
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..self.e {
            out += ((a % self.p + b % self.p) % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale = scale.wrapping_mul(self.p);
        }
        out
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if !self.add.is_empty() {
            self.add[(a as usize) * self.q as usize + b as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if self.e == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let digits: Vec<u32> = self
                .digits(a)
                .into_iter()
                .map(|d| (self.p - d) % self.p)
                .collect();
            self.from_digits(&digits)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if !self.log.is_empty() {
            let idx = self.log[a as usize] + self.log[b as usize];
            return self.exp[idx as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let e = self.e as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce with the monic modulus: x^e = -Σ m_i x^i.
        for k in (e..prod.len()).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            for i in 0..e {
                let sub = top * self.modulus[i] as u64 % p;
                prod[k - e + i] = (prod[k - e + i] + p - sub) % p;
            }
            prod[k] = 0;
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    fn pow_slow(&self, a: u32, mut n: u64) -> u32 {
        let (mut acc, mut b) = (1u32, a);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            n >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: u32, n: u64) -> u32 {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if !self.log.is_empty() {
            let order = (self.q - 1) as u64;
            let idx = (self.log[a as usize] as u64 * (n % order)) % order;
            return self.exp[idx as usize];
        }
        let (mut acc, mut b, mut n) = (1u32, a, n);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if !self.log.is_empty() {
            let order = self.q - 1;
            return Some(self.exp[((order - self.log[a as usize]) % order) as usize]);
        }
        Some(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    /// `a^(p^s)`.
    pub fn frobenius(&self, a: u32, s: u32) -> u32 {
        let mut x = a;
        for _ in 0..(s % self.e) {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut order = (self.q - 1) as u64;
        for r in prime_factors(order) {
            while order % r == 0 && self.pow(a, order / r) == 1 {
                order /= r;
            }
        }
        Some(order)
    }

    pub fn element(self: &Arc<Self>, value: u32) -> Result<FieldElement> {
        if value >= self.q {
            return Err(Error::InvalidElement(value as u64));
        }
        Ok(FieldElement {
            field: Arc::clone(self),
            value,
        })
    }

    pub fn element_from_coeffs(self: &Arc<Self>, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.e as usize {
            return Err(Error::LengthMismatch {
                expected: self.e as usize,
                got: coeffs.len(),
            });
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement(bad as u64));
        }
        self.element(self.from_digits(coeffs))
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Parses `p^e`, `p^e:c0,c1,…` or a bare prime power `q`.
impl FromStr for FieldSpecText {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, modulus) = match s.split_once(':') {
            Some((h, m)) => (h, Some(parse_u32_list(m)?)),
            None => (s, None),
        };
        let (p, e) = match head.split_once('^') {
            Some((p, e)) => (
                p.trim().parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?,
                e.trim().parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?,
            ),
            None => {
                let q: u64 = head.parse().map_err(|_| Error::Parse(format!("bad field '{s}'")))?;
                prime_power(q).ok_or(Error::NotPrime(q))?
            }
        };
        Ok(FieldSpecText { p, e, modulus })
    }
}

/// Parsed text form of a field description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpecText {
    pub p: u32,
    pub e: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpecText {
    pub fn build(&self) -> Result<FieldRef> {
        Field::new(self.p, self.e, self.modulus.as_deref())
    }
}

pub fn parse_field(s: &str) -> Result<FieldRef> {
    s.parse::<FieldSpecText>()?.build()
}

/// Integers separated by commas or whitespace.
pub fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad integer '{t}'")))
        })
        .collect()
}

/// A value paired with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldRef,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Little-endian coefficient vector of length `e`.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let value = match op {
            ArithOp::Add => f.add(self.value, other.value),
            ArithOp::Sub => f.sub(self.value, other.value),
            ArithOp::Mul => f.mul(self.value, other.value),
            ArithOp::Div => f.div(self.value, other.value)?,
        };
        Ok(FieldElement {
            field: Arc::clone(f),
            value,
        })
    }

    pub fn frobenius(&self, s: u32) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            value: self.field.frobenius(self.value, s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 1), vec![0, 1]);
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(3, 1), vec![0, 1]);
        // (1,0,1) precedes (1,1,0) when c_0 is compared first.
        assert_eq!(default_modulus(2, 3), vec![1, 0, 1, 1]);
        // x^2 + 1 is irreducible over GF(3) and comes first.
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn gf4_omega_squared() {
        let f = Field::new(2, 2, None).unwrap();
        let w = f.element_from_coeffs(&[0, 1]).unwrap();
        let w2 = w.arith(&w, ArithOp::Mul).unwrap();
        assert_eq!(w2.coeffs(), vec![1, 1]);
        assert_eq!(w.frobenius(1), w2);
        assert_eq!(w.frobenius(1).frobenius(1), w);
    }

    #[test]
    fn prime_field_examples() {
        let f3 = Field::prime(3).unwrap();
        let two = f3.element(2).unwrap();
        assert_eq!(two.arith(&two, ArithOp::Add).unwrap().value(), 1);
        let f2 = Field::prime(2).unwrap();
        let one = f2.element(1).unwrap();
        assert_eq!(one.arith(&one, ArithOp::Div).unwrap().value(), 1);
        let zero = f2.element(0).unwrap();
        assert_eq!(one.arith(&zero, ArithOp::Div), Err(Error::DivisionByZero));
        assert_eq!(one.arith(&two, ArithOp::Add), Err(Error::FieldMismatch));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert_eq!(
            Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus { p: 2 }
        );
        assert!(matches!(
            Field::new(2, 3, Some(&[1, 1, 1])),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(Field::new(2, 3, Some(&[1, 1, 0, 1])).is_ok());
    }

    #[test]
    fn slow_and_table_paths_agree() {
        let f = Field::new(3, 4, None).unwrap();
        for a in (0..f.order()).step_by(7) {
            for b in (0..f.order()).step_by(5) {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_field("2^2").unwrap().order(), 4);
        assert_eq!(parse_field("9").unwrap().degree(), 2);
        let f = parse_field("2^3:1,1,0,1").unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        assert!(parse_field("6").is_err());
    }
}
