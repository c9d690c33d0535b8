//! Dense matrices over a finite field.

use std::fmt;
use std::sync::Arc;

use super::field::FieldRef;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && self.field == other.field
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of reducing a matrix to reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &FieldRef, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            if let Some(&bad) = r.iter().find(|&&v| !field.contains(v)) {
                return Err(Error::InvalidElement(bad as u64));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field: Arc::clone(field),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · otherᵀ`, i.e. the matrix of pairwise row inner products.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(f, self.row(i), other.row(j)));
            }
        }
        Ok(out)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Reduced row-echelon form. The pivot row in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..m.cols {
                    let v = m.get(r, j);
                    m.set(r, j, f.mul(v, inv));
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(r, j);
                    if v != 0 {
                        let cur = m.get(i, j);
                        m.set(i, j, f.sub(cur, f.mul(factor, v)));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the reduced row-echelon form.
    pub fn row_basis(&self) -> Matrix {
        let rr = self.rref();
        let mut m = rr.matrix;
        m.data.truncate(rr.rank * m.cols);
        m.rows = rr.rank;
        m
    }

    /// Basis (as rows) of the right nullspace `{v : M v = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !rr.pivots.contains(c))
            .collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in rr.pivots.iter().enumerate() {
                let v = rr.matrix.get(r, fc);
                if v != 0 {
                    out.set(k, pc, f.neg(v));
                }
            }
        }
        out
    }

    /// Solves `x · self = target` for a row vector `x`, if consistent.
    pub fn solve_left(&self, target: &[u32]) -> Option<Vec<u32>> {
        // x·A = b  <=>  Aᵀ xᵀ = bᵀ
        let f = &self.field;
        let at = self.transpose();
        let mut aug = Matrix::zeros(f, at.rows, at.cols + 1);
        for r in 0..at.rows {
            for c in 0..at.cols {
                aug.set(r, c, at.get(r, c));
            }
            aug.set(r, at.cols, target[r]);
        }
        let rr = aug.rref();
        if rr.pivots.last() == Some(&at.cols) {
            return None;
        }
        let mut x = vec![0u32; at.cols];
        for (r, &pc) in rr.pivots.iter().enumerate() {
            x[pc] = rr.matrix.get(r, at.cols);
        }
        Some(x)
    }

    /// `x · self` for a row vector `x`.
    pub fn left_apply(&self, x: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let v = self.get(r, c);
                if v != 0 {
                    *o = f.add(*o, f.mul(xr, v));
                }
            }
        }
        out
    }

    /// Applies `g` to every entry.
    pub fn map(&self, g: impl Fn(u32) -> u32) -> Matrix {
        Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| g(v)).collect(),
        }
    }
}

pub fn dot(f: &FieldRef, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| {
        if x == 0 || y == 0 {
            acc
        } else {
            f.add(acc, f.mul(x, y))
        }
    })
}
