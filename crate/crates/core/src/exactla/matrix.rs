use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LinalgError, Rational, SparseVec};

/// Sparse rational matrix stored as sorted rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![SparseVec::zero(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    /// Rows must only reference columns below `cols`.
    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            if let Some(m) = r.max_index() {
                assert!(m < cols, "row entry {m} out of bounds for {cols} columns");
            }
        }
        Self { rows: rows.len(), cols, data: rows }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| super::rat(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(j)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        Ok(self.data.iter().map(|r| r.dot_dense(v)).collect())
    }

    pub fn rref(&self) -> Rref {
        rref(self)
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.cols, self.data.iter()).rank()
    }
}

/// Integer row, entries sorted by column, content-normalized.
type IntRow = Vec<(usize, BigInt)>;

fn to_int_row(v: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, c) in v.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: IntRow =
        v.iter().map(|(i, c)| (i, c.numer() * (&lcm / c.denom()))).collect();
    normalize(&mut row);
    row
}

/// Divides by the content and makes the leading entry positive.
fn normalize(row: &mut IntRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `row := a*row - b*piv`, the combination that clears the column where
/// `row` has `b` and `piv` has `a`.
fn combine(row: &IntRow, piv: &IntRow, col: usize) -> IntRow {
    let b = &row[row.binary_search_by_key(&col, |(j, _)| *j).unwrap()].1;
    let a = &row_entry(piv, col);
    let g = a.gcd(b);
    let (a, b) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = piv.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, &row[i].1 * &a));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&piv[j].1 * &b)));
            j += 1;
        } else {
            let v = &row[i].1 * &a - &piv[j].1 * &b;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    normalize(&mut out);
    out
}

fn row_entry(row: &IntRow, col: usize) -> BigInt {
    match row.binary_search_by_key(&col, |(j, _)| *j) {
        Ok(p) => row[p].1.clone(),
        Err(_) => BigInt::zero(),
    }
}

/// Incremental fraction-free row echelon form.
///
/// Each stored row has a distinct leading column. Rows are integer vectors
/// divided by their content after every combination, which keeps coefficient
/// growth in check.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    rows: Vec<IntRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    /// Builds the echelon form of the given rows. Rows are deduplicated and
    /// inserted sparsest first; the final reduced form does not depend on the
    /// insertion order.
    pub fn from_rows<'a, I: IntoIterator<Item = &'a SparseVec>>(cols: usize, rows: I) -> Self {
        let mut seen = HashSet::new();
        let mut ints: Vec<IntRow> = rows
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(to_int_row)
            .filter(|r| seen.insert(r.clone()))
            .collect();
        ints.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut ech = Self::new(cols);
        for r in ints {
            ech.insert_int(r);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if v.is_zero() {
            return false;
        }
        self.insert_int(to_int_row(v))
    }

    fn insert_int(&mut self, mut row: IntRow) -> bool {
        while let Some(&(lead, _)) = row.first() {
            match self.pivot_row[lead] {
                Some(p) => row = combine(&row, &self.rows[p], lead),
                None => {
                    self.pivot_row[lead] = Some(self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
        false
    }

    /// Tests membership of `v` in the row space without modifying it.
    pub fn contains(&self, v: &SparseVec) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut row = to_int_row(v);
        while let Some(&(lead, _)) = row.first() {
            match self.pivot_row[lead] {
                Some(p) => row = combine(&row, &self.rows[p], lead),
                None => return false,
            }
        }
        true
    }

    /// Completes back-substitution and returns the reduced row echelon form.
    pub fn into_rref(mut self) -> Rref {
        let mut pivots: Vec<usize> =
            (0..self.cols).filter(|&c| self.pivot_row[c].is_some()).collect();
        // Reduce from the last pivot backwards so every row used for
        // elimination is already fully reduced.
        for &c in pivots.iter().rev() {
            let p = self.pivot_row[c].unwrap();
            let mut row = std::mem::take(&mut self.rows[p]);
            loop {
                let next = row
                    .iter()
                    .skip(1)
                    .map(|(j, _)| *j)
                    .find(|&j| self.pivot_row[j].is_some() && j != c);
                match next {
                    Some(j) => {
                        let q = self.pivot_row[j].unwrap();
                        row = combine(&row, &self.rows[q], j);
                    }
                    None => break,
                }
            }
            self.rows[p] = row;
        }
        pivots.sort_unstable();
        let data: Vec<SparseVec> = pivots
            .iter()
            .map(|&c| {
                let row = &self.rows[self.pivot_row[c].unwrap()];
                let lead = row[0].1.clone();
                SparseVec::from_pairs(
                    row.iter().map(|(j, v)| (*j, Rational::new(v.clone(), lead.clone()))),
                )
            })
            .collect();
        let rank = data.len();
        Rref { matrix: RationalMatrix { rows: rank, cols: self.cols, data }, pivots, rank }
    }
}

/// Reduced row echelon form. Zero rows are dropped from the returned matrix,
/// so its row count equals the rank.
pub fn rref(m: &RationalMatrix) -> Rref {
    let mut r = Echelon::from_rows(m.cols, m.data.iter()).into_rref();
    // keep the caller's row count: pad with zero rows
    r.matrix.data.resize(m.rows.max(r.rank), SparseVec::zero());
    r.matrix.rows = r.matrix.data.len();
    r
}

/// Canonical nullspace basis: one vector per free column (increasing), with
/// a 1 in that column and pivot coordinates read off the RREF.
pub fn nullspace(m: &RationalMatrix) -> Vec<SparseVec> {
    nullspace_from_rref(&Echelon::from_rows(m.cols, m.data.iter()).into_rref())
}

pub fn nullspace_from_rref(r: &Rref) -> Vec<SparseVec> {
    let cols = r.matrix.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut pairs = vec![(f, Rational::one())];
        for (k, &p) in r.pivots.iter().enumerate() {
            let c = r.matrix.data[k].get(f);
            if !c.is_zero() {
                pairs.push((p, -c));
            }
        }
        basis.push(SparseVec::from_pairs(pairs));
    }
    basis
}

/// Some solution of `M x = b` with free variables set to zero, or `None`
/// when the system is inconsistent.
pub fn solve(m: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::DimensionMismatch { expected: m.rows, got: b.len() });
    }
    let n = m.cols;
    let aug: Vec<SparseVec> = m
        .data
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.add_scaled(&SparseVec::unit(n), bi);
            r
        })
        .collect();
    let red = Echelon::from_rows(n + 1, aug.iter()).into_rref();
    if red.pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (k, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.data[k].get(n);
    }
    Ok(Some(x))
}

/// Reduces `v` modulo the row space of an RREF so that every pivot coordinate
/// of the result is zero.
pub fn reduce_mod(r: &Rref, v: &SparseVec) -> SparseVec {
    let mut out = v.clone();
    for (k, &p) in r.pivots.iter().enumerate() {
        let c = out.get(p);
        if !c.is_zero() {
            out.add_scaled(&r.matrix.data[k], &-c);
        }
    }
    out
}

/// Rank of a list of vectors.
pub fn rank_of(cols: usize, vecs: &[SparseVec]) -> usize {
    Echelon::from_rows(cols, vecs.iter()).rank()
}

/// RREF basis of the span of `vecs`.
pub fn span_basis(cols: usize, vecs: &[SparseVec]) -> Rref {
    Echelon::from_rows(cols, vecs.iter()).into_rref()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    #[test]
    fn rref_identity_and_zero() {
        let r = rref(&RationalMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
        assert_eq!(r.matrix, RationalMatrix::identity(2));
        let z = rref(&RationalMatrix::zeros(3, 3));
        assert_eq!(z.rank, 0);
        assert!(z.pivots.is_empty());
        assert_eq!(z.matrix, RationalMatrix::zeros(3, 3));
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&RationalMatrix::from_i64(&[vec![1, 2], vec![2, 4]]));
        assert_eq!(r.matrix.to_dense(), vec![vec![rat(1), rat(2)], vec![rat(0), rat(0)]]);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_fractional() {
        let r = rref(&RationalMatrix::from_i64(&[vec![2, 1, 0], vec![0, 3, 1]]));
        assert_eq!(
            r.matrix.to_dense(),
            vec![vec![rat(1), rat(0), ratio(-1, 6)], vec![rat(0), rat(1), ratio(1, 3)]]
        );
    }

    #[test]
    fn nullspace_cases() {
        assert!(nullspace(&RationalMatrix::identity(4)).is_empty());
        assert_eq!(nullspace(&RationalMatrix::zeros(2, 3)).len(), 3);
        let m = RationalMatrix::from_i64(&[vec![1, 1, 0]]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(&v.to_dense(3)).unwrap().iter().all(|x| x.is_zero()));
        }
        assert_eq!(ns[0], SparseVec::from_pairs([(0, rat(-1)), (1, rat(1))]));
        assert_eq!(ns[1], SparseVec::unit(2));
    }

    #[test]
    fn solve_cases() {
        let b = vec![rat(3), ratio(1, 2)];
        assert_eq!(solve(&RationalMatrix::identity(2), &b).unwrap(), Some(b.clone()));
        let m = RationalMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(solve(&m, &[rat(1), rat(3)]).unwrap(), None);
        assert_eq!(solve(&m, &[rat(1), rat(2)]).unwrap(), Some(vec![rat(1), rat(0)]));
        let z = RationalMatrix::zeros(2, 3);
        assert_eq!(solve(&z, &[rat(0), rat(0)]).unwrap(), Some(vec![rat(0); 3]));
        assert!(solve(&z, &[rat(0)]).is_err());
    }

    #[test]
    fn echelon_contains() {
        let mut e = Echelon::new(3);
        e.insert(&SparseVec::from_pairs([(0, rat(1)), (1, rat(1))]));
        assert!(e.contains(&SparseVec::from_pairs([(0, rat(2)), (1, rat(2))])));
        assert!(!e.contains(&SparseVec::unit(1)));
    }
}
