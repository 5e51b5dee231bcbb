use num_traits::{One, Zero};

use super::rational::Rational;
use super::vector::{Accumulator, SparseVec};
use crate::error::{Error, Result};

/// Dense rational matrix, row-major.
///
/// As a linear map, column `j` is the image of `e_j`: `M(e_j) = Σ_i M[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diag(values: &[Rational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, q) in values.iter().enumerate() {
            m.data[i * n + i] = q.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose column `j` is `columns[j]` (entries beyond `rows` rejected).
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.support_bound() > rows {
                return Err(Error::DimensionMismatch(format!("column {j} exceeds {rows} rows")));
            }
            for (i, q) in col.iter() {
                m.set(i, j, q.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Rational) {
        self.data[i * self.cols + j] = q;
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_pairs((0..self.rows).map(|i| (i, self.get(i, j).clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|q| q * c).collect() }
    }

    /// `k`-th power of a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self).expect("square");
        }
        out
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Applies the map to a sparse vector of length `cols`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.rows);
        self.apply_into(v, &mut acc);
        acc.take()
    }

    pub(crate) fn apply_into(&self, v: &SparseVec, acc: &mut Accumulator) {
        for (j, q) in v.iter() {
            for i in 0..self.rows {
                let m = self.get(i, j);
                if !m.is_zero() {
                    acc.add(i, m * q);
                }
            }
        }
    }

    pub fn apply_checked(&self, v: &SparseVec) -> Result<SparseVec> {
        if v.support_bound() > self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector index {} outside {} columns",
                v.support_bound() - 1,
                self.cols
            )));
        }
        Ok(self.apply(v))
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of non-square {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::SingularMatrix(format!("no pivot in column {col}")))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j) / &p;
                a.set(col, j, v);
                let w = inv.get(col, j) / &p;
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, v);
                    let w = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, w);
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, pivot);
            let p = a.get(rank, col).clone();
            for r in rank + 1..self.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col) / &p;
                for j in col..self.cols {
                    let v = a.get(r, j) - &f * a.get(rank, j);
                    a.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}
