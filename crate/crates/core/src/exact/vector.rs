use num_traits::Zero;

use super::rational::Rational;

/// Sparse rational vector: sorted `(index, value)` pairs, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, super::rational::one())] }
    }

    /// Builds from arbitrary pairs; duplicates are summed, zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut v: Vec<(usize, Rational)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
        for (i, q) in v {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += q,
                _ => entries.push((i, q)),
            }
        }
        entries.retain(|(_, q)| !q.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self { entries: values.iter().enumerate().filter(|(_, q)| !q.is_zero()).map(|(i, q)| (i, q.clone())).collect() }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for (i, q) in &self.entries {
            out[*i] = q.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, q)| (*i, q))
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Largest index plus one, or 0 for the zero vector.
    pub fn support_bound(&self) -> usize {
        self.entries.last().map_or(0, |(i, _)| i + 1)
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, p)), Some((j, q))) => {
                    if i < j {
                        out.push((*i, p.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, q * c));
                        b.next();
                    } else {
                        let s = p + q * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, p)), None) => {
                    out.push((*i, p.clone()));
                    a.next();
                }
                (None, Some((j, q))) => {
                    out.push((*j, q * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &super::rational::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &super::rational::int(-1))
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec { entries: self.entries.iter().map(|(i, q)| (*i, q * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, q)| (*i, -q)).collect() }
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: isize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, q)| ((*i as isize + offset) as usize, q.clone())).collect() }
    }

    /// Keeps entries with index in `lo..hi`, re-based at `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, q)| (i - lo, q.clone()))
                .collect(),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        for (i, q) in &self.entries {
            let p = other.get(*i);
            if !p.is_zero() {
                acc += q * p;
            }
        }
        acc
    }
}

/// Dense scratch accumulator that compresses into a `SparseVec`.
pub(crate) struct Accumulator {
    dense: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(n: usize) -> Self {
        Self { dense: vec![Rational::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    pub fn add(&mut self, i: usize, q: Rational) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.dense[i] += q;
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Rational) {
        for (i, q) in v.iter() {
            self.add(i, q * c);
        }
    }

    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let q = std::mem::replace(&mut self.dense[i], Rational::zero());
            self.mark[i] = false;
            if !q.is_zero() {
                entries.push((i, q));
            }
        }
        self.touched.clear();
        SparseVec { entries }
    }
}
