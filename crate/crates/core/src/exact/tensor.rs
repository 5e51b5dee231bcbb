use super::matrix::Matrix;
use super::rational::Rational;
use super::vector::{Accumulator, SparseVec};
use crate::error::{Error, Result};

/// Structure constants of a bilinear product: `e_i ∘ e_j = Σ_k c_ijk e_k`.
///
/// Stored as one sparse image vector per basis pair, so lookups during
/// sweeps are O(1) while storage stays proportional to the nonzeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    cells: Vec<SparseVec>,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        Self { dim, cells: vec![SparseVec::zero(); dim * dim] }
    }

    /// Builds from `(i, j, k, value)` entries. Zero values are dropped;
    /// repeated `(i, j, k)` triples are rejected.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut pairs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, q) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!("entry ({i}, {j}, {k}) outside dimension {dim}")));
            }
            let cell = &mut pairs[i * dim + j];
            if cell.iter().any(|(kk, _)| *kk == k) {
                return Err(Error::Parse(format!("duplicate entry ({i}, {j}, {k})")));
            }
            cell.push((k, q));
        }
        Ok(Self { dim, cells: pairs.into_iter().map(SparseVec::from_pairs).collect() })
    }

    /// Tensor whose basis products are `f(i, j)`.
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> SparseVec) -> Self {
        let mut cells = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                debug_assert!(v.support_bound() <= dim);
                cells.push(v);
            }
        }
        Self { dim, cells }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_i ∘ e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.cells[i * self.dim + j]
    }

    /// Nonzero entries sorted by `(i, j, k)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, q) in self.basis_product(i, j).iter() {
                    out.push((i, j, k, q.clone()));
                }
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.cells.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(SparseVec::is_zero)
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        if x.support_bound() > self.dim || y.support_bound() > self.dim {
            return Err(Error::DimensionMismatch(format!("operand outside dimension {}", self.dim)));
        }
        let mut acc = Accumulator::new(self.dim);
        self.eval_into(x, y, &mut acc);
        Ok(acc.take())
    }

    pub(crate) fn eval_into(&self, x: &SparseVec, y: &SparseVec, acc: &mut Accumulator) {
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let cell = self.basis_product(i, j);
                if cell.is_zero() {
                    continue;
                }
                let ab = a * b;
                acc.add_vec(cell, &ab);
            }
        }
    }

    /// Dense-vector form of [`eval`](Self::eval).
    pub fn eval_dense(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "operands of length {} and {} for dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let v = self.eval(&SparseVec::from_dense(x), &SparseVec::from_dense(y))?;
        Ok(v.to_dense(self.dim))
    }

    fn check_square(&self, f: &Matrix, what: &str) -> Result<()> {
        if f.rows() != self.dim || f.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{what} is {}x{}, tensor has dimension {}",
                f.rows(),
                f.cols(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `x ∘' y = f(x ∘ y)`.
    pub fn push(&self, f: &Matrix) -> Result<Self> {
        self.check_square(f, "push map")?;
        Ok(Self { dim: self.dim, cells: self.cells.iter().map(|c| f.apply(c)).collect() })
    }

    /// `x ∘' y = g(x) ∘ g(y)`.
    pub fn conjugate(&self, g: &Matrix) -> Result<Self> {
        self.check_square(g, "conjugating map")?;
        self.compose_args(g, g)
    }

    /// `x ∘' y = f(x) ∘ g(y)`.
    pub fn compose_args(&self, f: &Matrix, g: &Matrix) -> Result<Self> {
        self.check_square(f, "left map")?;
        self.check_square(g, "right map")?;
        let fc: Vec<SparseVec> = (0..self.dim).map(|j| f.column(j)).collect();
        let gc: Vec<SparseVec> = (0..self.dim).map(|j| g.column(j)).collect();
        let mut acc = Accumulator::new(self.dim);
        let mut cells = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                self.eval_into(&fc[i], &gc[j], &mut acc);
                cells.push(acc.take());
            }
        }
        Ok(Self { dim: self.dim, cells })
    }

    /// `x ∘' y = f(x) ∘ y`.
    pub fn compose_left(&self, f: &Matrix) -> Result<Self> {
        self.compose_args(f, &Matrix::identity(self.dim))
    }

    /// `x ∘' y = x ∘ g(y)`.
    pub fn compose_right(&self, g: &Matrix) -> Result<Self> {
        self.compose_args(&Matrix::identity(self.dim), g)
    }

    /// `x ∘ᵒᵖ y = y ∘ x`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.basis_product(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, SparseVec::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, SparseVec::sub)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { dim: self.dim, cells: self.cells.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { dim: self.dim, cells: self.cells.iter().map(SparseVec::neg).collect() }
    }

    /// `x ∘ y − y ∘ x`.
    pub fn commutator(&self) -> Self {
        self.sub(&self.opposite()).expect("same dimension")
    }

    fn zip(&self, other: &Self, f: impl Fn(&SparseVec, &SparseVec) -> SparseVec) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("tensor dimensions {} and {}", self.dim, other.dim)));
        }
        Ok(Self { dim: self.dim, cells: self.cells.iter().zip(&other.cells).map(|(a, b)| f(a, b)).collect() })
    }

    /// Copy placed in a larger space at `offset`; `(i, j, k) -> (i+o, j+o, k+o)`.
    pub fn embed(&self, dim: usize, offset: usize) -> Self {
        let mut out = Self::zero(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.cells[(i + offset) * dim + j + offset] = self.basis_product(i, j).shifted(offset as isize);
            }
        }
        out
    }

    /// Restriction to the block `lo..hi` (products leaving the block are cut).
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        Self::from_fn(hi - lo, |i, j| self.basis_product(i + lo, j + lo).window(lo, hi))
    }

    pub fn is_skew(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.basis_product(i, j).add(self.basis_product(j, i)).is_zero()))
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> Rational {
        self.basis_product(i, j).get(k)
    }
}
