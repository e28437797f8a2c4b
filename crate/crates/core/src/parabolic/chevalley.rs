//! Chevalley structure constants from extraspecial pairs.
//!
//! Roots are integer vectors in simple-root coordinates. Positive roots are
//! totally ordered by their index in [`RootSystem::positive_roots`] (height
//! first). For a positive non-simple root `ξ`, a special pair is `(α, β)`
//! with `0 < α < β` and `α + β = ξ`; the extraspecial pair has the smallest
//! `α`. Its constant is fixed to `+(p+1)`, every other constant follows from
//! the standard identities between the `N_{α,β}`.

use std::collections::HashMap;

use crate::exactla::{rat, SparseVec};
use crate::rootsys::RootSystem;

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    norms: Vec<i64>,
    simple_norms: Vec<i64>,
    /// `N_{α,β}` for special pairs, keyed by positive root indices.
    special: HashMap<(usize, usize), i64>,
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn is_positive(a: &[i64]) -> bool {
    a.iter().any(|&x| x > 0)
}

impl ChevalleyBasis {
    pub fn new(rs: &RootSystem) -> Self {
        let positive = rs.positive_roots().to_vec();
        let index: HashMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        let norms = positive.iter().map(|a| rs.root_norm(a)).collect();
        let simple_norms = (0..rs.rank()).map(|i| rs.form()[i][i]).collect();
        let mut cb = ChevalleyBasis {
            rank: rs.rank(),
            cartan: rs.cartan_matrix().to_vec(),
            positive,
            index,
            norms,
            simple_norms,
            special: HashMap::new(),
        };
        cb.fill_special();
        cb
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// `r + 2·|Φ⁺|`.
    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    pub fn is_root(&self, a: &[i64]) -> bool {
        if is_positive(a) {
            self.index.contains_key(a)
        } else {
            self.index.contains_key(&neg(a))
        }
    }

    fn norm(&self, a: &[i64]) -> i64 {
        let k = if is_positive(a) { self.index[a] } else { self.index[&neg(a)] };
        self.norms[k]
    }

    /// Largest `p` with `β − pα` a root.
    pub fn string_below(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut p = 0;
        let mut c = sub(b, a);
        while self.is_root(&c) {
            p += 1;
            c = sub(&c, a);
        }
        p
    }

    fn fill_special(&mut self) {
        for (k, xi) in self.positive.clone().iter().enumerate() {
            let pairs: Vec<(usize, usize)> = (0..k)
                .filter_map(|a| {
                    let b = self.index.get(&sub(xi, &self.positive[a]))?;
                    (a < *b).then_some((a, *b))
                })
                .collect();
            let Some(&(a1, b1)) = pairs.first() else { continue };
            let (ra1, rb1) = (self.positive[a1].clone(), self.positive[b1].clone());
            let n1 = self.string_below(&ra1, &rb1) + 1;
            self.special.insert((a1, b1), n1);
            let nx = self.norms[k];
            for &(a, b) in &pairs[1..] {
                let (ra, rb) = (self.positive[a].clone(), self.positive[b].clone());
                // four-root identity on α, β, −α₁, −β₁
                let mut acc = rat(0);
                let t = sub(&rb, &ra1);
                if self.is_root(&t) {
                    let c = self.n(&rb, &neg(&ra1)) * self.n(&ra, &neg(&rb1));
                    acc += crate::exactla::ratio(c, self.norm(&t));
                }
                let t = sub(&ra, &ra1);
                if self.is_root(&t) {
                    let c = self.n(&neg(&ra1), &ra) * self.n(&rb, &neg(&rb1));
                    acc += crate::exactla::ratio(c, self.norm(&t));
                }
                let v = acc * rat(nx) / rat(n1);
                assert!(v.is_integer(), "non-integral structure constant");
                self.special.insert((a, b), crate::exactla::to_i64(&v).unwrap());
            }
        }
    }

    /// `N_{α,β}` for arbitrary roots; zero when `α + β` is not a root.
    pub fn n(&self, a: &[i64], b: &[i64]) -> i64 {
        let c = add(a, b);
        if c.iter().all(|&x| x == 0) || !self.is_root(&c) {
            return 0;
        }
        match (is_positive(a), is_positive(b)) {
            (true, true) => {
                let (i, j) = (self.index[a], self.index[b]);
                if i < j {
                    self.special[&(i, j)]
                } else {
                    -self.special[&(j, i)]
                }
            }
            (false, false) => -self.n(&neg(a), &neg(b)),
            (false, true) => -self.n(b, a),
            (true, false) => {
                // α + β + γ = 0: N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β)
                let g = neg(&c);
                let gg = self.norm(&g);
                let (num, den) = if is_positive(&g) {
                    (self.n(&g, a) * gg, self.norm(b))
                } else {
                    (self.n(b, &g) * gg, self.norm(a))
                };
                assert_eq!(num % den, 0, "non-integral structure constant");
                num / den
            }
        }
    }

    /// `⟨α, α_i^∨⟩` (0-based `i`).
    pub fn pairing(&self, a: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| a[j] * self.cartan[i][j]).sum()
    }

    /// Coroot `α^∨` in the basis of simple coroots.
    pub fn coroot(&self, a: &[i64]) -> Vec<i64> {
        let na = self.norm(a);
        (0..self.rank)
            .map(|i| {
                let v = a[i] * self.simple_norms[i];
                assert_eq!(v % na, 0);
                v / na
            })
            .collect()
    }

    /// Basis of the full algebra: `h_1..h_r`, then `e_α` for positive roots,
    /// then `e_{−α}` in the same order.
    pub fn basis_root(&self, x: usize) -> Option<Vec<i64>> {
        let p = self.positive.len();
        match x {
            x if x < self.rank => None,
            x if x < self.rank + p => Some(self.positive[x - self.rank].clone()),
            x => Some(neg(&self.positive[x - self.rank - p])),
        }
    }

    fn basis_index(&self, a: &[i64]) -> usize {
        if is_positive(a) {
            self.rank + self.index[a]
        } else {
            self.rank + self.positive.len() + self.index[&neg(a)]
        }
    }

    /// `[x, y]` on basis elements of the full algebra.
    pub fn bracket_basis(&self, x: usize, y: usize) -> SparseVec {
        match (self.basis_root(x), self.basis_root(y)) {
            (None, None) => SparseVec::zero(),
            (None, Some(b)) => SparseVec::from_pairs([(y, rat(self.pairing(&b, x)))]),
            (Some(a), None) => SparseVec::from_pairs([(x, rat(-self.pairing(&a, y)))]),
            (Some(a), Some(b)) => {
                let c = add(&a, &b);
                if c.iter().all(|&v| v == 0) {
                    // [e_α, e_{−α}] = h_α
                    let h = self.coroot(&a);
                    SparseVec::from_pairs(h.into_iter().enumerate().map(|(i, v)| (i, rat(v))))
                } else if self.is_root(&c) {
                    SparseVec::from_pairs([(self.basis_index(&c), rat(self.n(&a, &b)))])
                } else {
                    SparseVec::zero()
                }
            }
        }
    }

    fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (x, a) in u.iter() {
            for (y, b) in v.iter() {
                out.add_scaled(&self.bracket_basis(x, y), &(a * b));
            }
        }
        out
    }

    /// Jacobi identity on every basis triple of the full algebra.
    pub fn check_jacobi(&self) -> bool {
        let d = self.dim();
        for x in 0..d {
            for y in x + 1..d {
                let xy = self.bracket_basis(x, y);
                for z in y + 1..d {
                    let t = self
                        .bracket(&xy, &SparseVec::unit(z))
                        .add(&self.bracket(&self.bracket_basis(y, z), &SparseVec::unit(x)))
                        .add(&self.bracket(&self.bracket_basis(z, x), &SparseVec::unit(y)));
                    if !t.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Series};

    #[test]
    fn a2_constants() {
        let cb = ChevalleyBasis::new(&build_root_system(Series::A, 2).unwrap());
        // α₂ precedes α₁ in the root order, so (α₂, α₁) is extraspecial
        assert_eq!(cb.n(&[0, 1], &[1, 0]), 1);
        assert_eq!(cb.n(&[1, 0], &[0, 1]), -1);
        assert_eq!(cb.n(&[0, -1], &[-1, 0]), -1);
        assert_eq!(cb.n(&[1, 1], &[-1, 0]), 1);
        assert!(cb.check_jacobi());
    }

    #[test]
    fn g2_long_strings() {
        let cb = ChevalleyBasis::new(&build_root_system(Series::G, 2).unwrap());
        let mut seen: Vec<i64> = Vec::new();
        for a in cb.positive_roots() {
            for b in cb.positive_roots() {
                seen.push(cb.n(a, b).abs());
            }
        }
        assert!(seen.contains(&2) && seen.contains(&3));
        assert!(cb.check_jacobi());
    }

    #[test]
    fn small_types_satisfy_jacobi() {
        for (s, r) in [(Series::A, 3), (Series::B, 2), (Series::B, 3), (Series::C, 3), (Series::D, 4), (Series::F, 4)] {
            let rs = build_root_system(s, r).unwrap();
            let cb = ChevalleyBasis::new(&rs);
            assert_eq!(cb.dim(), s.algebra_dim(r));
            assert!(cb.check_jacobi(), "{s:?}{r}");
        }
    }
}
