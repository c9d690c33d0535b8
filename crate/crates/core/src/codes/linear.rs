use std::fmt;
use std::sync::Arc;

use crate::algebra::{FieldElement, FieldRef, Matrix};
use crate::error::{Error, Result};

/// A q-ary `[n, k]` linear code held by its reduced row-echelon generator
/// matrix, which is canonical: two codes are equal iff their generators are.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over GF({}): {:?}",
            self.n,
            self.k(),
            self.field().order(),
            self.gen.row_vecs()
        )
    }
}

impl LinearCode {
    /// The code spanned by `rows`; zero and dependent rows are dropped.
    pub fn from_rows(field: &FieldRef, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let m = Matrix::from_rows(field, n, rows)?;
        Ok(LinearCode::from_matrix(&m))
    }

    /// Like [`LinearCode::from_rows`], checking that every entry lives in `field`.
    pub fn from_field_elements(field: &FieldRef, n: usize, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let mut raw = Vec::with_capacity(rows.len());
        for r in rows {
            if r.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
            raw.push(r.iter().map(FieldElement::value).collect());
        }
        LinearCode::from_rows(field, n, &raw)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let rr = m.rref();
        let mut gen = Matrix::zeros(m.field(), 0, m.cols());
        for r in 0..rr.rank {
            gen.push_row(rr.matrix.row(r));
        }
        LinearCode {
            n: m.cols(),
            gen,
            pivots: rr.pivots,
        }
    }

    pub fn zero(field: &FieldRef, n: usize) -> Self {
        LinearCode {
            n,
            gen: Matrix::zeros(field, 0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldRef, n: usize) -> Self {
        LinearCode {
            n,
            gen: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn field(&self) -> &FieldRef {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Pivot (information set) columns of the canonical generator.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Euclidean dual `{b : <b, c> = 0 for all c}`.
    pub fn dual(&self) -> LinearCode {
        if self.k() == 0 {
            return LinearCode::full(self.field(), self.n);
        }
        LinearCode::from_matrix(&self.gen.nullspace())
    }

    /// Membership by reduction against the echelon generator.
    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let factor = w[c];
            if factor == 0 {
                continue;
            }
            for (j, x) in w.iter_mut().enumerate() {
                let g = self.gen.get(r, j);
                if g != 0 {
                    *x = f.sub(*x, f.mul(factor, g));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && (0..self.k()).all(|r| other.contains(self.gen.row(r)))
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(LinearCode::from_matrix(&self.gen.vstack(&other.gen)?))
    }

    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    pub(crate) fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    /// `msg · G`.
    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        self.gen.left_apply(msg)
    }

    /// `{0} × C`, a code of length `n + 1`.
    pub fn prepend_zero(&self) -> LinearCode {
        let rows: Vec<Vec<u32>> = self
            .gen
            .row_vecs()
            .into_iter()
            .map(|r| std::iter::once(0).chain(r).collect())
            .collect();
        LinearCode::from_rows(self.field(), self.n + 1, &rows).expect("rows have length n + 1")
    }

    pub fn same_field(&self, f: &FieldRef) -> bool {
        Arc::ptr_eq(self.field(), f) || self.field() == f
    }

    /// File form: `q n k`, then the `k` generator rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.field(), self.n, self.k());
        for r in self.gen.row_vecs() {
            let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Inverse of [`LinearCode::to_text`]. Rows need not be independent.
    pub fn parse(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [q, n, k] = parts[..] else {
            return Err(Error::Parse(format!("expected 'q n k', got '{header}'")));
        };
        let field = crate::algebra::parse_field(q)?;
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer '{t}'")));
        let (n, k) = (num(n)?, num(k)?);
        let rows = lines
            .map(crate::algebra::parse_u32_list)
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != k {
            return Err(Error::Parse(format!("expected {k} rows, got {}", rows.len())));
        }
        LinearCode::from_rows(&field, n, &rows)
    }
}
