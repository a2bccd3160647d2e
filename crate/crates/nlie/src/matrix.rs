//! Dense matrices over a single field, and exact Gauss-Jordan reduction.
//!
//! `rref` is the canonicalization workhorse for the whole crate: it
//! returns the unique reduced row-echelon form of the row space with zero
//! rows dropped, so two matrices have equal row spaces exactly when their
//! reduced forms are byte-for-byte equal.

use std::fmt;

use crate::error::{NLieError, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Row-major construction. Every entry must belong to `field`.
    pub fn new(rows: usize, cols: usize, field: FieldSpec, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(NLieError::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        for s in &data {
            if s.field() != field {
                return Err(NLieError::FieldMismatch(
                    field.to_string(),
                    s.field().to_string(),
                ));
            }
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(NLieError::VectorLength {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Matrix::new(n, cols, field, data)
    }

    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field.clone(), );
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.at(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field.clone(),
            data,
        }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(NLieError::Shape(format!(
                "cannot stack {} columns on {} columns",
                other.cols, self.cols
            )));
        }
        if self.field != other.field {
            return Err(NLieError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field.clone(),
            data,
        })
    }

    /// The unique reduced row-echelon form of the row space: pivots are 1,
    /// pivot columns are otherwise zero, pivot columns strictly increase,
    /// and zero rows are dropped. Idempotent.
    pub fn rref(&self) -> Matrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // first nonzero entry at or below pivot_row
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m
                .at(pivot_row, col)
                .inv()
                .expect("nonzero field element is invertible");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).neg();
                    m.add_multiple(r, pivot_row, &factor);
                }
            }
            pivot_row += 1;
        }
        m.truncate_rows(pivot_row);
        m
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Pivot columns of a matrix already in reduced row-echelon form.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.rows);
        let mut col = 0;
        for r in 0..self.rows {
            while col < self.cols && self.at(r, col).is_zero() {
                col += 1;
            }
            if col < self.cols {
                out.push(col);
                col += 1;
            }
        }
        out
    }

    /// Basis of the right null space {x : M x = 0}, returned as rows in
    /// canonical (reduced echelon) form.
    pub fn kernel(&self) -> Matrix {
        let r = self.rref();
        let pivots = r.pivot_cols();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.at(i, f).neg();
            }
            rows.push(v);
        }
        Matrix::from_rows(self.field.clone(), self.cols, rows)
            .expect("kernel rows are well formed")
            .rref()
    }

    /// Determinant by fraction-free-enough elimination (entries are field
    /// elements, so plain division is exact).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(src) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return self.field.zero();
            };
            if src != col {
                m.swap_rows(col, src);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).mul(&inv).neg();
                    m.add_multiple(r, col, &factor);
                }
            }
        }
        det
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let mut aug = Matrix::zero(n, 2 * n, self.field.clone());
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, self.field.one());
        }
        let red = aug.rref();
        // invertible, left block reduced to the identity, exactly when all
        // pivots fall in the first n columns
        let pivots = red.pivot_cols();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(red.at(r, n + c).clone());
            }
        }
        Some(Matrix {
            rows: n,
            cols: n,
            field: self.field.clone(),
            data,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(NLieError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols, self.field.clone());
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(r, k).mul(other.at(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Image of a column vector under this matrix.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    if !v[c].is_zero() && !self.at(r, c).is_zero() {
                        acc = acc.add(&self.at(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.at(r, c).mul(factor);
            self.set(r, c, v);
        }
    }

    /// row[target] += factor * row[source]
    fn add_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            if !self.at(source, c).is_zero() {
                let v = self.at(target, c).add(&self.at(source, c).mul(factor));
                self.set(target, c, v);
            }
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.cols);
        self.rows = rows;
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Linear-combination helpers used throughout the crate; vectors are
/// plain `Vec<Scalar>` rows.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}
