//! Dense matrices over a finite field.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};

/// Row-major dense matrix over a [`FieldCtx`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.0).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input; zero rows sit at the bottom.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &FieldCtx, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::ONE;
        }
        m
    }

    /// Builds a matrix from rows of equal length, validating every entry.
    pub fn from_rows<R: AsRef<[FieldElement]>>(field: &FieldCtx, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {cols}-column matrix", row.len())));
            }
            for &e in row {
                field.element(e.0)?;
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Convenience constructor from raw integer encodings.
    pub fn from_u32_rows(field: &FieldCtx, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<FieldElement>> = rows.iter().map(|r| r.iter().map(|&v| FieldElement(v)).collect()).collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn to_u32_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.0).collect()).collect()
    }

    #[inline]
    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
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

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: FieldElement) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(s, a)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!("{} vs {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols, data })
    }

    /// Keeps the first `rows` rows.
    pub fn truncated(mut self, rows: usize) -> Matrix {
        let rows = rows.min(self.rows);
        self.data.truncate(rows * self.cols);
        self.rows = rows;
        self
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] -= factor * row[source]`, starting at column `from`.
    fn eliminate(&mut self, target: usize, source: usize, factor: FieldElement, from: usize) {
        let f = self.field.clone();
        let cols = self.cols;
        for c in from..cols {
            let s = self.data[source * cols + c];
            if !s.is_zero() {
                let idx = target * cols + c;
                self.data[idx] = f.sub(self.data[idx], f.mul(factor, s));
            }
        }
    }

    /// Reduces in place to RREF (leftmost pivots, scaled to one) and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(src) = (pr..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, src);
            let inv = f.inv(self.get(pr, c)).expect("pivot is nonzero");
            if inv != FieldElement::ONE {
                for j in c..self.cols {
                    let v = f.mul(inv, self.get(pr, j));
                    self.set(pr, j, v);
                }
            }
            for r in 0..self.rows {
                if r != pr {
                    let factor = self.get(r, c);
                    if !factor.is_zero() {
                        self.eliminate(r, pr, factor, c);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = FieldElement::ONE;
        for c in 0..n {
            let Some(src) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(FieldElement::ZERO);
            };
            if src != c {
                m.swap_rows(c, src);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for r in c + 1..n {
                let factor = f.mul(m.get(r, c), inv);
                if !factor.is_zero() {
                    m.eliminate(r, c, factor, c);
                }
            }
        }
        Ok(det)
    }

    /// Basis of the right null space; one kernel vector per row.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, rank, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, FieldElement::ONE);
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(i, pc, f.neg(r.get(row, fc)));
            }
        }
        out
    }
}

/// `rank(a - b)`.
pub fn rank_distance(a: &Matrix, b: &Matrix) -> Result<usize> {
    Ok(a.sub(b)?.rank())
}

/// Standard dot product of two vectors.
pub fn dot(field: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
