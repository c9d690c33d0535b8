use std::fmt::Write as _;
use std::sync::Arc;

use super::cyclotomic::{gcd, lcm, CyclotomicContext};
use crate::algebra::{FieldRef, Matrix, Poly};
use crate::codes::{LinearCode, SemiLinearMap};
use crate::error::{Error, Result};

/// An `F_q[x]`-submodule of `∏_j F_q[x]/(x^{m_j} − 1)`, stored as its flat
/// linear code of length `Σ m_j` (block `j` holds the coefficients of
/// `c_j(x)`, constant term first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GqcCode {
    field: FieldRef,
    blocks: Vec<usize>,
    generators: Vec<Vec<Poly>>,
    flat: LinearCode,
}

fn check_blocks(field: &FieldRef, blocks: &[usize]) -> Result<()> {
    let q = field.order() as u64;
    for &m in blocks {
        if m == 0 || gcd(q, m as u64) != 1 {
            return Err(Error::GcdNotOne(m as i64, q as i64));
        }
    }
    Ok(())
}

fn offsets(blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(blocks.len());
    let mut acc = 0;
    for &m in blocks {
        out.push(acc);
        acc += m;
    }
    out
}

/// Cyclic shift of every block: multiplication by `x`.
fn shift(blocks: &[usize], v: &[u32]) -> Vec<u32> {
    let mut out = vec![0; v.len()];
    for (&m, off) in blocks.iter().zip(offsets(blocks)) {
        for k in 0..m {
            out[off + (k + 1) % m] = v[off + k];
        }
    }
    out
}

impl GqcCode {
    /// The module generated by the given tuples (one polynomial per block).
    pub fn from_generators(field: &FieldRef, blocks: &[usize], generators: Vec<Vec<Poly>>) -> Result<Self> {
        check_blocks(field, blocks)?;
        let n: usize = blocks.iter().sum();
        let period = lcm(blocks);
        let mut gens = Vec::with_capacity(generators.len());
        let mut rows = Matrix::zeros(field, 0, n);
        for g in generators {
            if g.len() != blocks.len() {
                return Err(Error::LengthMismatch {
                    expected: blocks.len(),
                    got: g.len(),
                });
            }
            let mut reduced = Vec::with_capacity(g.len());
            let mut row = Vec::with_capacity(n);
            for (p, &m) in g.iter().zip(blocks) {
                if p.field() != field {
                    return Err(Error::FieldMismatch);
                }
                let r = p.reduce_cyclic(m);
                row.extend(r.to_dense(m));
                reduced.push(r);
            }
            for _ in 0..period {
                rows.push_row(&row);
                row = shift(blocks, &row);
            }
            gens.push(reduced);
        }
        Ok(GqcCode {
            field: Arc::clone(field),
            blocks: blocks.to_vec(),
            generators: gens,
            flat: LinearCode::from_matrix(&rows),
        })
    }

    /// Wraps a flat code after checking it is closed under the block shift.
    pub fn from_flat(code: &LinearCode, blocks: &[usize]) -> Result<Self> {
        let field = code.field();
        check_blocks(field, blocks)?;
        let n: usize = blocks.iter().sum();
        if n != code.n() {
            return Err(Error::LengthMismatch {
                expected: n,
                got: code.n(),
            });
        }
        let g = code.generator();
        for r in 0..code.k() {
            if !code.contains(&shift(blocks, g.row(r))) {
                return Err(Error::NotShiftClosed);
            }
        }
        let generators = (0..code.k())
            .map(|r| split_row(field, blocks, g.row(r)))
            .collect();
        Ok(GqcCode {
            field: Arc::clone(field),
            blocks: blocks.to_vec(),
            generators,
            flat: code.clone(),
        })
    }

    pub fn cyclic(generator: &Poly, m: usize) -> Result<Self> {
        GqcCode::from_generators(generator.field(), &[m], vec![vec![generator.clone()]])
    }

    pub fn zero(field: &FieldRef, blocks: &[usize]) -> Result<Self> {
        GqcCode::from_generators(field, blocks, Vec::new())
    }

    pub fn full(field: &FieldRef, blocks: &[usize]) -> Result<Self> {
        let n: usize = blocks.iter().sum();
        GqcCode::from_flat(&LinearCode::full(field, n), blocks)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of blocks `l`.
    pub fn l(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.flat.n()
    }

    /// `lcm(m_1, …, m_l)`.
    pub fn m(&self) -> usize {
        lcm(&self.blocks)
    }

    pub fn flat(&self) -> &LinearCode {
        &self.flat
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.generators
    }

    pub fn is_quasi_cyclic(&self) -> bool {
        self.blocks.windows(2).all(|w| w[0] == w[1])
    }

    pub fn context(&self) -> Result<CyclotomicContext> {
        CyclotomicContext::new(&self.field, self.m())
    }

    /// Splits a flat vector into its block polynomials.
    pub fn split(&self, v: &[u32]) -> Vec<Poly> {
        split_row(&self.field, &self.blocks, v)
    }

    /// The permutation `c_j(x) ↦ c_j(x^a) mod (x^{m_j} − 1)` on every block.
    pub fn mu_a_map(&self, a: i64) -> Result<SemiLinearMap> {
        mu_a_map(&self.field, &self.blocks, a)
    }

    pub fn mu_a(&self, a: i64) -> Result<GqcCode> {
        let sigma = self.mu_a_map(a)?;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                g.iter()
                    .zip(&self.blocks)
                    .map(|(p, &m)| p.compose_power(a, m))
                    .collect()
            })
            .collect();
        Ok(GqcCode {
            field: Arc::clone(&self.field),
            blocks: self.blocks.clone(),
            generators,
            flat: crate::codes::apply_sigma(&sigma, &self.flat)?,
        })
    }

    /// The cyclic code `{c_j(x) : c ∈ C}` of block `j`.
    pub fn projection(&self, j: usize) -> Result<GqcCode> {
        let off = offsets(&self.blocks)[j];
        let m = self.blocks[j];
        let cols: Vec<usize> = (off..off + m).collect();
        let proj = LinearCode::from_matrix(&self.flat.generator().select_columns(&cols));
        GqcCode::from_flat(&proj, &[m])
    }

    /// File form: `q l`, the block lengths, then one generator per line with
    /// its block polynomials separated by `;`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.field, self.l());
        let blocks: Vec<String> = self.blocks.iter().map(|m| m.to_string()).collect();
        let _ = writeln!(s, "{}", blocks.join(" "));
        for g in &self.generators {
            let polys: Vec<String> = g.iter().map(Poly::to_text).collect();
            let _ = writeln!(s, "{}", polys.join(";"));
        }
        s
    }

    pub fn parse(text: &str) -> Result<GqcCode> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty GQC file".into()))?;
        let mut parts = header.split_whitespace();
        let field = crate::algebra::parse_field(parts.next().unwrap_or(""))?;
        let l: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header '{header}'")))?;
        let blocks: Vec<usize> = crate::algebra::field::parse_u32_list(
            lines.next().ok_or_else(|| Error::Parse("missing block lengths".into()))?,
        )?
        .into_iter()
        .map(|m| m as usize)
        .collect();
        if blocks.len() != l {
            return Err(Error::Parse(format!("expected {l} block lengths, got {}", blocks.len())));
        }
        let mut generators = Vec::new();
        for line in lines {
            let polys = line
                .split(';')
                .map(|p| Poly::parse(&field, p))
                .collect::<Result<Vec<_>>>()?;
            generators.push(polys);
        }
        GqcCode::from_generators(&field, &blocks, generators)
    }
}

fn split_row(field: &FieldRef, blocks: &[usize], v: &[u32]) -> Vec<Poly> {
    blocks
        .iter()
        .zip(offsets(blocks))
        .map(|(&m, off)| Poly::from_raw(field, v[off..off + m].to_vec()))
        .collect()
}

/// `μ_a` as a coordinate permutation of the flat space.
pub fn mu_a_map(field: &FieldRef, blocks: &[usize], a: i64) -> Result<SemiLinearMap> {
    let m = lcm(blocks);
    if gcd(a.unsigned_abs() % m as u64, m as u64) != 1 && m > 1 {
        return Err(Error::GcdNotOne(a, m as i64));
    }
    let mut perm = Vec::with_capacity(blocks.iter().sum());
    for (&mj, off) in blocks.iter().zip(offsets(blocks)) {
        for k in 0..mj {
            perm.push(off + (k as i64 * a).rem_euclid(mj as i64) as usize);
        }
    }
    SemiLinearMap::permutation(field, perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn p(f: &FieldRef, c: &[u32]) -> Poly {
        Poly::new(f, c.to_vec()).unwrap()
    }

    #[test]
    fn cyclic_hamming() {
        let f2 = Field::prime(2).unwrap();
        let c = GqcCode::cyclic(&p(&f2, &[1, 1, 0, 1]), 7).unwrap();
        assert_eq!((c.n(), c.flat().k(), c.m()), (7, 4, 7));
    }

    #[test]
    fn flat_shift_check() {
        let f2 = Field::prime(2).unwrap();
        let ok = LinearCode::from_rows(&f2, 3, &[vec![1, 1, 1]]).unwrap();
        assert!(GqcCode::from_flat(&ok, &[3]).is_ok());
        let bad = LinearCode::from_rows(&f2, 3, &[vec![1, 1, 0]]).unwrap();
        assert_eq!(GqcCode::from_flat(&bad, &[3]).unwrap_err(), Error::NotShiftClosed);
        assert!(matches!(
            GqcCode::from_flat(&ok, &[2]),
            Err(Error::GcdNotOne(2, 2))
        ));
    }

    #[test]
    fn mu_minus_one_reverses() {
        let f2 = Field::prime(2).unwrap();
        let c = GqcCode::cyclic(&p(&f2, &[1, 1, 0, 1]), 7).unwrap();
        let r = c.mu_a(-1).unwrap();
        // x^i ↦ x^{-i}: 1 + x + x^3 ↦ 1 + x^6 + x^4
        assert_eq!(r.generators()[0][0], p(&f2, &[1, 0, 0, 0, 1, 0, 1]));
        assert_eq!(c.mu_a(1).unwrap(), c);
        assert_eq!(c.mu_a(7).unwrap_err(), Error::GcdNotOne(7, 7));
        // μ_2 ∘ μ_3 = μ_6
        let lhs = c.mu_a(3).unwrap().mu_a(2).unwrap();
        assert_eq!(lhs.flat(), c.mu_a(6).unwrap().flat());
    }

    #[test]
    fn text_roundtrip() {
        let f3 = Field::prime(3).unwrap();
        let c = GqcCode::from_generators(
            &f3,
            &[2, 4],
            vec![vec![p(&f3, &[1, 1]), p(&f3, &[2, 0, 1])]],
        )
        .unwrap();
        let back = GqcCode::parse(&c.to_text()).unwrap();
        assert_eq!(back.flat(), c.flat());
        assert_eq!(back.blocks(), &[2, 4]);
    }
}
