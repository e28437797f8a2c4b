use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Rational;

/// Sparse rational vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Rational::one())] }
    }

    /// Builds a vector from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in pairs {
            *acc.entry(i).or_insert_with(Rational::zero) += c;
        }
        Self { entries: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
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
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Rational) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, _)), Some((ib, _))) if ia < ib => out.push(a.next().unwrap()),
                (Some((ia, _)), Some((ib, _))) if ia > ib => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, v * c));
                }
                (Some(_), Some(_)) => {
                    let (i, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let s = va + vb * c;
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (i, v) = b.next().unwrap();
                    out.push((*i, v * c));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.entries.iter().map(|(i, c)| c * &dense[*i]).sum()
    }

    /// Re-indexes entries with `f`; entries mapped to `None` are dropped.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }
}
