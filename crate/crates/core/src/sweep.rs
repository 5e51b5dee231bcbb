//! Exhaustive multilinear evaluation over basis tuples.
//!
//! An identity in variables `x_0 .. x_{k-1}` is evaluated once for every
//! assignment of basis vectors to the variables. Instead of looping over
//! tuples and re-evaluating the whole expression, every subexpression is a
//! [`Table`]: its value for each assignment of the variables it actually
//! depends on. Products broadcast over the union of their operands'
//! variables, so shared subterms such as `[x, y]` are computed once per
//! `(x, y)` pair rather than once per full tuple.
//!
//! Cells are ordered with variable 0 most significant, which makes the
//! flattened order the lexicographic order of tuples.

use std::sync::Arc;

use rayon::prelude::*;

use crate::exact::vector::Accumulator;
use crate::exact::{Matrix, Rational, SparseVec, StructureTensor};
use crate::structures::Violation;

const PAR_THRESHOLD: usize = 512;

#[derive(Debug)]
struct Layout {
    space: usize,
    offsets: Vec<usize>,
    sizes: Vec<usize>,
}

/// Variable domains for one identity family.
#[derive(Clone, Debug)]
pub struct Sweep {
    layout: Arc<Layout>,
}

/// Values of a subexpression for every assignment of its variables.
#[derive(Clone, Debug)]
pub struct Table {
    mask: u32,
    layout: Arc<Layout>,
    cells: Vec<SparseVec>,
}

impl Sweep {
    /// `domains[v] = (offset, len)`: variable `v` ranges over
    /// `e_offset .. e_{offset+len-1}` inside a space of dimension `space`.
    pub fn new(space: usize, domains: &[(usize, usize)]) -> Self {
        assert!(domains.len() <= 31, "too many variables");
        assert!(domains.iter().all(|(o, l)| o + l <= space), "domain outside space");
        Self {
            layout: Arc::new(Layout {
                space,
                offsets: domains.iter().map(|d| d.0).collect(),
                sizes: domains.iter().map(|d| d.1).collect(),
            }),
        }
    }

    /// `vars` variables, each over the whole space.
    pub fn uniform(space: usize, vars: usize) -> Self {
        Self::new(space, &vec![(0, space); vars])
    }

    pub fn space(&self) -> usize {
        self.layout.space
    }

    pub fn vars(&self) -> usize {
        self.layout.sizes.len()
    }

    /// Number of full tuples.
    pub fn tuple_count(&self) -> usize {
        self.layout.sizes.iter().product()
    }

    pub fn var(&self, v: usize) -> Table {
        let (off, len) = (self.layout.offsets[v], self.layout.sizes[v]);
        Table { mask: 1 << v, layout: self.layout.clone(), cells: (0..len).map(|i| SparseVec::unit(off + i)).collect() }
    }

    pub fn vars_array<const K: usize>(&self) -> [Table; K] {
        std::array::from_fn(|v| self.var(v))
    }

    pub fn constant(&self, v: SparseVec) -> Table {
        Table { mask: 0, layout: self.layout.clone(), cells: vec![v] }
    }

    pub fn zero(&self) -> Table {
        self.constant(SparseVec::zero())
    }

    /// Lists every tuple where `t` is nonzero, in lexicographic order. The
    /// reported residual is the window `out = (offset, len)` of the value.
    pub fn violations(&self, id: &str, t: &Table, out: (usize, usize)) -> Vec<Violation> {
        let full = (1u32 << self.vars()) - 1;
        let t = t.broadcast(full);
        let sizes = &self.layout.sizes;
        let mut found = Vec::new();
        for (c, cell) in t.cells.iter().enumerate() {
            if cell.is_zero() {
                continue;
            }
            let mut tuple = vec![0; sizes.len()];
            let mut rest = c;
            for v in (0..sizes.len()).rev() {
                tuple[v] = rest % sizes[v];
                rest /= sizes[v];
            }
            found.push(Violation {
                identity: id.to_string(),
                tuple,
                residual: cell.window(out.0, out.0 + out.1).to_dense(out.1),
            });
        }
        found
    }
}

fn vars_of(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |v| mask & (1 << v) != 0)
}

impl Layout {
    fn cell_count(&self, mask: u32) -> usize {
        vars_of(mask).map(|v| self.sizes[v]).product()
    }

    /// For each cell of `mask`, the index of the matching cell of `sub`.
    fn projection(&self, mask: u32, sub: u32) -> Vec<usize> {
        debug_assert_eq!(mask & sub, sub);
        let vars: Vec<usize> = vars_of(mask).collect();
        // stride of each var inside `sub`, 0 if absent
        let mut strides = vec![0usize; vars.len()];
        let mut s = 1;
        for (p, &v) in vars.iter().enumerate().rev() {
            if sub & (1 << v) != 0 {
                strides[p] = s;
                s *= self.sizes[v];
            }
        }
        let count = self.cell_count(mask);
        let mut out = Vec::with_capacity(count);
        let mut digits = vec![0usize; vars.len()];
        let mut idx = 0usize;
        for _ in 0..count {
            out.push(idx);
            // increment mixed-radix counter, last var fastest
            for p in (0..vars.len()).rev() {
                digits[p] += 1;
                idx += strides[p];
                if digits[p] < self.sizes[vars[p]] {
                    break;
                }
                idx -= strides[p] * digits[p];
                digits[p] = 0;
            }
        }
        out
    }
}

impl Table {
    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn cells(&self) -> &[SparseVec] {
        &self.cells
    }

    /// The single value of a variable-free table.
    pub fn scalar(&self) -> &SparseVec {
        assert_eq!(self.mask, 0, "table depends on variables");
        &self.cells[0]
    }

    fn broadcast(&self, mask: u32) -> Table {
        if mask == self.mask {
            return self.clone();
        }
        let proj = self.layout.projection(mask, self.mask);
        Table { mask, layout: self.layout.clone(), cells: proj.into_iter().map(|i| self.cells[i].clone()).collect() }
    }

    fn zip_with(&self, other: &Table, f: impl Fn(&SparseVec, &SparseVec) -> SparseVec) -> Table {
        let mask = self.mask | other.mask;
        let pa = self.layout.projection(mask, self.mask);
        let pb = self.layout.projection(mask, other.mask);
        let cells = pa.iter().zip(&pb).map(|(&a, &b)| f(&self.cells[a], &other.cells[b])).collect();
        Table { mask, layout: self.layout.clone(), cells }
    }

    pub fn add(&self, other: &Table) -> Table {
        self.zip_with(other, SparseVec::add)
    }

    pub fn sub(&self, other: &Table) -> Table {
        self.zip_with(other, SparseVec::sub)
    }

    pub fn neg(&self) -> Table {
        self.map_cells(SparseVec::neg)
    }

    pub fn scale(&self, c: &Rational) -> Table {
        self.map_cells(|v| v.scale(c))
    }

    fn map_cells(&self, f: impl Fn(&SparseVec) -> SparseVec + Sync + Send) -> Table {
        let cells = if self.cells.len() >= PAR_THRESHOLD {
            self.cells.par_iter().map(f).collect()
        } else {
            self.cells.iter().map(f).collect()
        };
        Table { mask: self.mask, layout: self.layout.clone(), cells }
    }

    /// Applies a linear map of the ambient space to every cell.
    pub fn apply(&self, m: &Matrix) -> Table {
        debug_assert_eq!(m.cols(), self.layout.space);
        if m.is_identity() {
            return self.clone();
        }
        let space = self.layout.space;
        let cells = if self.cells.len() >= PAR_THRESHOLD {
            self.cells
                .par_iter()
                .map_init(
                    || Accumulator::new(space),
                    |acc, v| {
                        m.apply_into(v, acc);
                        acc.take()
                    },
                )
                .collect()
        } else {
            let mut acc = Accumulator::new(space);
            self.cells
                .iter()
                .map(|v| {
                    m.apply_into(v, &mut acc);
                    acc.take()
                })
                .collect()
        };
        Table { mask: self.mask, layout: self.layout.clone(), cells }
    }

    /// Cellwise bilinear product `self ∘ other`.
    pub fn mul(&self, t: &StructureTensor, other: &Table) -> Table {
        debug_assert_eq!(t.dim(), self.layout.space);
        let mask = self.mask | other.mask;
        let pa = self.layout.projection(mask, self.mask);
        let pb = self.layout.projection(mask, other.mask);
        let space = self.layout.space;
        let cell = |acc: &mut Accumulator, c: usize| {
            t.eval_into(&self.cells[pa[c]], &other.cells[pb[c]], acc);
            acc.take()
        };
        let cells = if pa.len() >= PAR_THRESHOLD {
            (0..pa.len()).into_par_iter().map_init(|| Accumulator::new(space), cell).collect()
        } else {
            let mut acc = Accumulator::new(space);
            (0..pa.len()).map(|c| cell(&mut acc, c)).collect()
        };
        Table { mask, layout: self.layout.clone(), cells }
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(SparseVec::is_zero)
    }
}

/// Sum of tables.
pub fn sum(terms: &[Table]) -> Table {
    let (first, rest) = terms.split_first().expect("at least one term");
    rest.iter().fold(first.clone(), |acc, t| acc.add(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn variables_are_basis_vectors() {
        let sw = Sweep::new(5, &[(0, 2), (2, 3)]);
        let [x, v] = sw.vars_array();
        assert_eq!(x.cells().len(), 2);
        assert_eq!(v.cells()[0], SparseVec::unit(2));
        assert_eq!(sw.tuple_count(), 6);
    }

    #[test]
    fn broadcast_is_lexicographic() {
        let sw = Sweep::uniform(3, 2);
        let [x, y] = sw.vars_array();
        let s = x.sub(&y);
        // tuple (i, j) at cell i*3 + j holds e_i - e_j
        assert_eq!(s.cells()[1], SparseVec::from_pairs([(0, int(1)), (1, int(-1))]));
        let v = sw.violations("T", &s, (0, 3));
        let tuples: Vec<_> = v.iter().map(|v| v.tuple.clone()).collect();
        assert_eq!(tuples, vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 2], vec![2, 0], vec![2, 1]]);
    }

    #[test]
    fn product_matches_direct_eval() {
        let t = StructureTensor::from_entries(2, [(0, 1, 1, int(1)), (1, 0, 1, int(-1))]).unwrap();
        let sw = Sweep::uniform(2, 2);
        let [x, y] = sw.vars_array();
        let p = x.mul(&t, &y);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(&p.cells()[i * 2 + j], t.basis_product(i, j));
            }
        }
        // x appears twice: the table keeps one axis
        let q = x.mul(&t, &x);
        assert_eq!(q.mask(), 1);
        assert!(q.is_zero());
    }
}
