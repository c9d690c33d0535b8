use std::fmt;
use std::sync::Arc;

use crate::algebra::FieldRef;
use crate::error::{Error, Result};

/// A semi-linear isometry of `F_q^n`: coordinate-wise Frobenius, then
/// diagonal scaling, then a coordinate permutation.
///
/// On `c`, coordinate `i` of the input becomes coordinate `perm[i]` of the
/// output, carrying the value `diag[i] · c_i^(p^frob)`.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiLinearMap {
    field: FieldRef,
    perm: Vec<usize>,
    diag: Vec<u32>,
    frob: u32,
}

impl fmt::Debug for SemiLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ(perm={:?}, diag={:?}, frob={})",
            self.perm, self.diag, self.frob
        )
    }
}

impl SemiLinearMap {
    pub fn new(field: &FieldRef, perm: Vec<usize>, diag: Vec<u32>, frob: u32) -> Result<Self> {
        let n = perm.len();
        if diag.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: diag.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidMap("perm is not a bijection"));
            }
            seen[p] = true;
        }
        if diag.iter().any(|&d| d == 0 || !field.contains(d)) {
            return Err(Error::InvalidMap("diagonal entries must be nonzero field elements"));
        }
        Ok(SemiLinearMap {
            field: Arc::clone(field),
            perm,
            diag,
            frob: frob % field.degree(),
        })
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        SemiLinearMap {
            field: Arc::clone(field),
            perm: (0..n).collect(),
            diag: vec![1; n],
            frob: 0,
        }
    }

    pub fn permutation(field: &FieldRef, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        SemiLinearMap::new(field, perm, vec![1; n], 0)
    }

    pub fn diagonal(field: &FieldRef, diag: Vec<u32>) -> Result<Self> {
        SemiLinearMap::new(field, (0..diag.len()).collect(), diag, 0)
    }

    /// Entry-wise `x ↦ x^(p^s)`; with `q = r^2` and `p^s = r` this gives the
    /// Hermitian inner product.
    pub fn frobenius(field: &FieldRef, n: usize, s: u32) -> Self {
        SemiLinearMap {
            field: Arc::clone(field),
            perm: (0..n).collect(),
            diag: vec![1; n],
            frob: s % field.degree(),
        }
    }

    /// `(c_0, …, c_{n-1}) ↦ (c_{n-1}, …, c_0)`.
    pub fn reversal(field: &FieldRef, n: usize) -> Self {
        SemiLinearMap {
            field: Arc::clone(field),
            perm: (0..n).map(|i| n - 1 - i).collect(),
            diag: vec![1; n],
            frob: 0,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[u32] {
        &self.diag
    }

    pub fn frob(&self) -> u32 {
        self.frob
    }

    pub fn is_identity(&self) -> bool {
        self.frob == 0
            && self.diag.iter().all(|&d| d == 1)
            && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// True for pure coordinate permutations.
    pub fn is_permutation(&self) -> bool {
        self.frob == 0 && self.diag.iter().all(|&d| d == 1)
    }

    /// True for monomial maps (no Frobenius part).
    pub fn is_monomial(&self) -> bool {
        self.frob == 0
    }

    pub fn apply(&self, c: &[u32]) -> Vec<u32> {
        assert_eq!(c.len(), self.n(), "vector length must match the map");
        let f = &self.field;
        let mut out = vec![0u32; c.len()];
        for (i, &x) in c.iter().enumerate() {
            let y = if self.frob == 0 { x } else { f.frobenius(x, self.frob) };
            out[self.perm[i]] = f.mul(self.diag[i], y);
        }
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &SemiLinearMap) -> Result<SemiLinearMap> {
        if self.n() != inner.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: inner.n(),
            });
        }
        if self.field != inner.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let n = self.n();
        let mut perm = vec![0; n];
        let mut diag = vec![0; n];
        for i in 0..n {
            let mid = inner.perm[i];
            perm[i] = self.perm[mid];
            diag[i] = f.mul(f.frobenius(inner.diag[i], self.frob), self.diag[mid]);
        }
        Ok(SemiLinearMap {
            field: Arc::clone(f),
            perm,
            diag,
            frob: (self.frob + inner.frob) % f.degree(),
        })
    }

    pub fn inverse(&self) -> SemiLinearMap {
        let f = &self.field;
        let n = self.n();
        let frob = (f.degree() - self.frob) % f.degree();
        let mut perm = vec![0; n];
        let mut diag = vec![0; n];
        for i in 0..n {
            let j = self.perm[i];
            perm[j] = i;
            diag[j] = f.frobenius(f.inv(self.diag[i]).unwrap(), frob);
        }
        SemiLinearMap {
            field: Arc::clone(f),
            perm,
            diag,
            frob,
        }
    }

    /// `(c_0, c) ↦ (c_0, self(c))` on `F_q^{n+1}`.
    pub fn extend_front(&self) -> SemiLinearMap {
        let mut perm = vec![0];
        perm.extend(self.perm.iter().map(|&p| p + 1));
        let mut diag = vec![1];
        diag.extend_from_slice(&self.diag);
        SemiLinearMap {
            field: Arc::clone(&self.field),
            perm,
            diag,
            frob: self.frob,
        }
    }

    /// Text form: `perm: …`, `diag: …`, `frob: s` lines.
    pub fn to_text(&self) -> String {
        let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let perm: Vec<u32> = self.perm.iter().map(|&p| p as u32).collect();
        format!(
            "perm: {}\ndiag: {}\nfrob: {}\n",
            join(&perm),
            join(&self.diag),
            self.frob
        )
    }

    pub fn parse(field: &FieldRef, text: &str) -> Result<SemiLinearMap> {
        let mut perm = None;
        let mut diag = None;
        let mut frob = 0;
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'key: value', got '{line}'")))?;
            let list = || crate::algebra::field::parse_u32_list(value);
            match key.trim() {
                "perm" => perm = Some(list()?.into_iter().map(|p| p as usize).collect::<Vec<_>>()),
                "diag" => diag = Some(list()?),
                "frob" => {
                    frob = value
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad frob '{value}'")))?
                }
                other => return Err(Error::Parse(format!("unknown key '{other}'"))),
            }
        }
        let perm = perm.ok_or_else(|| Error::Parse("missing 'perm'".into()))?;
        let diag = diag.unwrap_or_else(|| vec![1; perm.len()]);
        SemiLinearMap::new(field, perm, diag, frob)
    }
}
