//! Root systems of types A–G and weight combinatorics.
//!
//! Simple roots follow Bourbaki numbering. Weights are integer vectors in the
//! fundamental-weight basis, `ω = Σ p_i π_i`. A [`RootSystem`] may also be a
//! product of simple components (Levi factors of parabolic subalgebras); all
//! algorithms here work componentwise without special cases.

mod characters;
mod freudenthal;
mod types;

pub use characters::{
    adams, exterior_cube_weights, exterior_square_weights, free_lie_module_weights, mobius,
    symmetric_square_weights, tensor_weights,
};
pub use types::{IrrepSum, Weight, WeightMultiset};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::exactla::{solve, RationalMatrix, Rational};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("invalid simple type {series}{rank}")]
    InvalidType { series: char, rank: usize },
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("negative multiplicity at weight {0}: input is not a character")]
    NegativeMultiplicity(Weight),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn is_valid(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dim(self, r: usize) -> usize {
        match self {
            Series::A => r * (r + 2),
            Series::B | Series::C => r * (2 * r + 1),
            Series::D => r * (2 * r - 1),
            Series::E => [78, 133, 248][r - 6],
            Series::F => 52,
            Series::G => 14,
        }
    }
}

/// A simple factor of a root system, occupying nodes `offset..offset+rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub series: Series,
    pub rank: usize,
    pub offset: usize,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Symmetric form `(α_i, α_j)` on simple roots, short roots of norm 2.
pub fn simple_form(series: Series, r: usize) -> Result<Vec<Vec<i64>>, RootSysError> {
    if !series.is_valid(r) {
        return Err(RootSysError::InvalidType { series: series.letter(), rank: r });
    }
    let mut s = vec![vec![0i64; r]; r];
    let link = |s: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        s[i][j] = v;
        s[j][i] = v;
    };
    match series {
        Series::A => {
            for i in 0..r {
                s[i][i] = 2;
            }
            for i in 1..r {
                link(&mut s, i - 1, i, -1);
            }
        }
        Series::B => {
            for i in 0..r - 1 {
                s[i][i] = 4;
            }
            s[r - 1][r - 1] = 2;
            for i in 1..r {
                link(&mut s, i - 1, i, -2);
            }
        }
        Series::C => {
            for i in 0..r - 1 {
                s[i][i] = 2;
            }
            s[r - 1][r - 1] = 4;
            for i in 1..r - 1 {
                link(&mut s, i - 1, i, -1);
            }
            link(&mut s, r - 2, r - 1, -2);
        }
        Series::D => {
            for i in 0..r {
                s[i][i] = 2;
            }
            for i in 1..r - 1 {
                link(&mut s, i - 1, i, -1);
            }
            link(&mut s, r - 3, r - 1, -1);
        }
        Series::E => {
            for i in 0..r {
                s[i][i] = 2;
            }
            link(&mut s, 0, 2, -1);
            link(&mut s, 1, 3, -1);
            for i in 3..r {
                link(&mut s, i - 1, i, -1);
            }
        }
        Series::F => {
            s[0][0] = 4;
            s[1][1] = 4;
            s[2][2] = 2;
            s[3][3] = 2;
            link(&mut s, 0, 1, -2);
            link(&mut s, 1, 2, -2);
            link(&mut s, 2, 3, -1);
        }
        Series::G => {
            s[0][0] = 2;
            s[1][1] = 6;
            link(&mut s, 0, 1, -3);
        }
    }
    Ok(s)
}

type DominantChar = Arc<Vec<(Weight, u64)>>;

/// Root system with its positive roots and cached characters.
pub struct RootSystem {
    components: Vec<Component>,
    form: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    root_weights: Vec<Weight>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Gram matrix of fundamental weights scaled by `gram_den`.
    gram: Vec<Vec<i64>>,
    gram_den: i64,
    /// Heights of fundamental weights scaled by `height_den`.
    heights: Vec<i64>,
    height_den: i64,
    cache: Mutex<HashMap<Weight, DominantChar>>,
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        Self {
            components: self.components.clone(),
            form: self.form.clone(),
            cartan: self.cartan.clone(),
            positive_roots: self.positive_roots.clone(),
            root_weights: self.root_weights.clone(),
            root_index: self.root_index.clone(),
            gram: self.gram.clone(),
            gram_den: self.gram_den,
            heights: self.heights.clone(),
            height_den: self.height_den,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.name())
    }
}

/// Builds the root system of a simple type.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem, RootSysError> {
    RootSystem::product(&[(series, rank)])
}

impl RootSystem {
    /// Product of simple root systems; node numbering concatenates the factors.
    pub fn product(factors: &[(Series, usize)]) -> Result<RootSystem, RootSysError> {
        let r: usize = factors.iter().map(|f| f.1).sum();
        let mut form = vec![vec![0i64; r]; r];
        let mut components = Vec::new();
        let mut offset = 0;
        for &(series, rank) in factors {
            let s = simple_form(series, rank)?;
            for i in 0..rank {
                for j in 0..rank {
                    form[offset + i][offset + j] = s[i][j];
                }
            }
            components.push(Component { series, rank, offset });
            offset += rank;
        }
        Ok(Self::from_form(components, form))
    }

    fn from_form(components: Vec<Component>, form: Vec<Vec<i64>>) -> RootSystem {
        let r = form.len();
        let cartan: Vec<Vec<i64>> =
            (0..r).map(|i| (0..r).map(|j| 2 * form[i][j] / form[i][i]).collect()).collect();
        let positive_roots = generate_positive_roots(&cartan);
        let root_index =
            positive_roots.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        let root_weights = positive_roots
            .iter()
            .map(|a| Weight::new((0..r).map(|j| (0..r).map(|i| a[i] * cartan[j][i]).sum()).collect()))
            .collect();

        // Inverse of the matrix whose columns are simple roots in the
        // fundamental-weight basis.
        let m = RationalMatrix::from_i64(&cartan);
        let mut minv = vec![vec![Rational::zero(); r]; r];
        for j in 0..r {
            let e: Vec<Rational> =
                (0..r).map(|i| if i == j { crate::exactla::rat(1) } else { Rational::zero() }).collect();
            let col = solve(&m, &e).unwrap().expect("Cartan matrix is invertible");
            for i in 0..r {
                minv[i][j] = col[i].clone();
            }
        }
        let half = |j: usize| crate::exactla::ratio(form[j][j], 2);
        let gram_q: Vec<Vec<Rational>> =
            (0..r).map(|i| (0..r).map(|j| &minv[j][i] * half(j)).collect()).collect();
        let height_q: Vec<Rational> =
            (0..r).map(|j| (0..r).map(|i| minv[i][j].clone()).sum()).collect();
        let (gram, gram_den) = clear_denominators(&gram_q.concat());
        let gram = gram.chunks(r.max(1)).map(|c| c.to_vec()).collect();
        let (heights, height_den) = clear_denominators(&height_q);

        RootSystem {
            components,
            form,
            cartan,
            positive_roots,
            root_weights,
            root_index,
            gram,
            gram_den,
            heights,
            height_den,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `"E8"`, `"A1xA2"`; the empty product is `"trivial"`.
    pub fn name(&self) -> String {
        if self.components.is_empty() {
            return "trivial".into();
        }
        self.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
    }

    /// `C[i][j] = 2(α_i, α_j)/(α_i, α_i) = ⟨α_j, α_i^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// Positive roots in simple-root coordinates, sorted by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Positive root `k` in the fundamental-weight basis.
    pub fn root_weight(&self, k: usize) -> &Weight {
        &self.root_weights[k]
    }

    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    /// Norm `(α, α)` of a root given in simple-root coordinates.
    pub fn root_norm(&self, a: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += a[i] * a[j] * self.form[i][j];
            }
        }
        s
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(vec![0; self.rank()])
    }

    pub fn fundamental(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Weight::new(c)
    }

    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// Height of a weight times a fixed positive constant; strictly increases
    /// when a positive root is added.
    pub fn height_key(&self, w: &Weight) -> i64 {
        w.coords().iter().zip(&self.heights).map(|(p, h)| p * h).sum()
    }

    pub fn height_denominator(&self) -> i64 {
        self.height_den
    }

    /// `(μ, ν)` scaled by [`Self::gram_denominator`].
    pub fn scaled_inner(&self, a: &Weight, b: &Weight) -> i64 {
        let r = self.rank();
        let (x, y) = (a.coords(), b.coords());
        let mut s = 0;
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += x[i] * y[j] * self.gram[i][j];
            }
        }
        s
    }

    pub fn gram_denominator(&self) -> i64 {
        self.gram_den
    }

    /// `(μ, α)` for a weight and a root in simple coordinates; always an integer.
    pub fn pair_root(&self, w: &Weight, a: &[i64]) -> i64 {
        w.coords()
            .iter()
            .zip(a)
            .enumerate()
            .map(|(j, (p, b))| p * b * self.form[j][j] / 2)
            .sum()
    }

    pub fn check_rank(&self, w: &Weight) -> Result<(), RootSysError> {
        if w.len() != self.rank() {
            return Err(RootSysError::RankMismatch { expected: self.rank(), got: w.len() });
        }
        Ok(())
    }

    /// Simple reflection `s_i` (0-based).
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let p = w.coords()[i];
        if p == 0 {
            return w.clone();
        }
        let c: Vec<i64> =
            w.coords().iter().enumerate().map(|(j, x)| x - p * self.cartan[j][i]).collect();
        Weight::new(c)
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.coords().iter().position(|&p| p < 0) {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    /// The Weyl orbit of a dominant weight.
    pub fn orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(dominant.clone());
        queue.push_back(dominant.clone());
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                if w.coords()[i] > 0 {
                    let v = self.reflect(&w, i);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
            out.push(w);
        }
        out
    }

    /// Weyl dimension formula `∏_{α>0} (λ+ρ, α^∨)/(ρ, α^∨)`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128, RootSysError> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(RootSysError::NonDominant(lambda.clone()));
        }
        let r = self.rank();
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for a in &self.positive_roots {
            // (μ, α^∨) = Σ_j a_j p_j (α_j,α_j) / (α,α); the common factor
            // 1/(α,α) cancels between numerator and denominator.
            let mut n = 0i64;
            let mut d = 0i64;
            for j in 0..r {
                let w = a[j] * self.form[j][j];
                n += w * (lambda.coords()[j] + 1);
                d += w;
            }
            num *= BigUint::from(n as u64);
            den *= BigUint::from(d as u64);
        }
        Ok((num / den).to_u128().expect("dimension fits in u128"))
    }

    /// Dominant part of the character of `Γ_λ`, sorted by decreasing height.
    pub fn dominant_character(&self, lambda: &Weight) -> Result<DominantChar, RootSysError> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(RootSysError::NonDominant(lambda.clone()));
        }
        if let Some(c) = self.cache.lock().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(freudenthal::dominant_multiplicities(self, lambda));
        self.cache.lock().unwrap().insert(lambda.clone(), c.clone());
        Ok(c)
    }

    /// Full weight multiset of the irreducible module `Γ_λ`.
    pub fn freudenthal_weights(&self, lambda: &Weight) -> Result<WeightMultiset, RootSysError> {
        let dom = self.dominant_character(lambda)?;
        let mut out = WeightMultiset::new(self.rank());
        for (mu, m) in dom.iter() {
            for w in self.orbit(mu) {
                out.insert(w, *m);
            }
        }
        Ok(out)
    }

    /// Decomposes a character into irreducibles by repeatedly peeling off the
    /// highest dominant weight (maximal height, ties broken lexicographically).
    pub fn decompose(&self, w: &WeightMultiset) -> Result<IrrepSum, RootSysError> {
        if w.rank() != self.rank() {
            return Err(RootSysError::RankMismatch { expected: self.rank(), got: w.rank() });
        }
        let mut rest: HashMap<Weight, i128> = w
            .iter()
            .filter(|(k, _)| k.is_dominant())
            .map(|(k, m)| (k.clone(), m as i128))
            .collect();
        let mut out = IrrepSum::new(self.rank());
        loop {
            let top = rest
                .iter()
                .filter(|(_, m)| **m != 0)
                .map(|(k, m)| (k, *m))
                .max_by(|(a, _), (b, _)| {
                    self.height_key(a).cmp(&self.height_key(b)).then_with(|| a.cmp(b))
                })
                .map(|(k, m)| (k.clone(), m));
            let Some((lambda, mult)) = top else { break };
            if mult < 0 {
                return Err(RootSysError::NegativeMultiplicity(lambda));
            }
            for (mu, m) in self.dominant_character(&lambda)?.iter() {
                let e = rest.entry(mu.clone()).or_insert(0);
                *e -= mult * (*m as i128);
                if *e < 0 {
                    return Err(RootSysError::NegativeMultiplicity(mu.clone()));
                }
            }
            rest.retain(|_, m| *m != 0);
            out.add(lambda, mult as u64);
        }
        Ok(out)
    }

    /// Total dimension `Σ m_ω dim Γ_ω`.
    pub fn irrep_sum_dim(&self, s: &IrrepSum) -> Result<u128, RootSysError> {
        let mut total = 0u128;
        for (w, m) in s.iter() {
            total += m as u128 * self.weyl_dim(w)?;
        }
        Ok(total)
    }

    /// Character of a formal sum of irreducibles.
    pub fn irrep_sum_weights(&self, s: &IrrepSum) -> Result<WeightMultiset, RootSysError> {
        let mut out = WeightMultiset::new(self.rank());
        for (w, m) in s.iter() {
            out.add_scaled(&self.freudenthal_weights(w)?, m);
        }
        Ok(out)
    }

    /// Formats a weight as `π1+2π3`, with component-local numbering when the
    /// system is a product.
    pub fn format_weight(&self, w: &Weight) -> String {
        if self.components.len() <= 1 {
            return w.to_string();
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let local = Weight::new(w.coords()[c.offset..c.offset + c.rank].to_vec());
                format!("{}:{}", c, local)
            })
            .collect();
        parts.join(",")
    }

    pub fn format_irrep_sum(&self, s: &IrrepSum) -> String {
        if s.is_empty() {
            return "0".into();
        }
        s.iter()
            .map(|(w, m)| {
                let g = format!("Γ[{}]", self.format_weight(w));
                if m == 1 {
                    g
                } else {
                    format!("{m}{g}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn clear_denominators(v: &[Rational]) -> (Vec<i64>, i64) {
    use num_integer::Integer;
    let mut den = num_bigint::BigInt::from(1);
    for q in v {
        den = den.lcm(q.denom());
    }
    let ints = v
        .iter()
        .map(|q| (q.numer() * (&den / q.denom())).to_i64().expect("small Gram entries"))
        .collect();
    (ints, den.to_i64().unwrap())
}

/// Closes the simple roots under root strings, height by height.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: std::collections::HashSet<Vec<i64>> = std::collections::HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut out = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        layer.dedup();
        for a in &layer {
            all.insert(a.clone());
        }
        let mut next = Vec::new();
        for a in &layer {
            for i in 0..r {
                // p: how far the α_i-string extends downwards from a
                let mut p = 0;
                let mut b = a.clone();
                loop {
                    b[i] -= 1;
                    if all.contains(&b) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| a[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut c = a.clone();
                    c[i] += 1;
                    next.push(c);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn positive_root_counts() {
        for (s, r) in [
            (Series::A, 2),
            (Series::A, 7),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::D, 7),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let rs = build_root_system(s, r).unwrap();
            assert_eq!(rs.positive_roots().len(), (s.algebra_dim(r) - r) / 2, "{s:?}{r}");
        }
        assert_eq!(build_root_system(Series::A, 2).unwrap().positive_roots().len(), 3);
        assert_eq!(build_root_system(Series::G, 2).unwrap().positive_roots().len(), 6);
        assert_eq!(build_root_system(Series::E, 8).unwrap().positive_roots().len(), 120);
    }

    #[test]
    fn invalid_types() {
        assert!(build_root_system(Series::C, 2).is_err());
        assert!(build_root_system(Series::D, 3).is_err());
        assert!(build_root_system(Series::E, 5).is_err());
        assert!(build_root_system(Series::G, 3).is_err());
        assert!(build_root_system(Series::A, 0).is_err());
    }

    #[test]
    fn cartan_conventions() {
        let g2 = build_root_system(Series::G, 2).unwrap();
        assert_eq!(g2.cartan_matrix(), &[vec![2, -3], vec![-1, 2]]);
        let b3 = build_root_system(Series::B, 3).unwrap();
        assert_eq!(b3.cartan_matrix()[2], vec![0, -2, 2]);
        // highest root of E8 is 2α1+3α2+4α3+6α4+5α5+4α6+3α7+2α8
        let e8 = build_root_system(Series::E, 8).unwrap();
        assert_eq!(e8.positive_roots().last().unwrap(), &vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn weyl_dimensions() {
        let a7 = build_root_system(Series::A, 7).unwrap();
        assert_eq!(a7.weyl_dim(&a7.fundamental(3)).unwrap(), 56);
        let d7 = build_root_system(Series::D, 7).unwrap();
        assert_eq!(d7.weyl_dim(&d7.fundamental(7)).unwrap(), 64);
        let e7 = build_root_system(Series::E, 7).unwrap();
        assert_eq!(e7.weyl_dim(&e7.fundamental(7)).unwrap(), 56);
        assert_eq!(e7.weyl_dim(&e7.zero_weight()).unwrap(), 1);
        let e8 = build_root_system(Series::E, 8).unwrap();
        assert_eq!(e8.weyl_dim(&e8.fundamental(8)).unwrap(), 248);
        assert!(matches!(
            a7.weyl_dim(&w(&[-1, 0, 0, 0, 0, 0, 1])),
            Err(RootSysError::NonDominant(_))
        ));
    }

    #[test]
    fn freudenthal_small() {
        let a1 = build_root_system(Series::A, 1).unwrap();
        let ch = a1.freudenthal_weights(&w(&[2])).unwrap();
        assert_eq!(ch.iter().map(|(k, m)| (k.coords()[0], m)).collect::<Vec<_>>(), vec![
            (-2, 1),
            (0, 1),
            (2, 1)
        ]);
        let a2 = build_root_system(Series::A, 2).unwrap();
        let adj = a2.freudenthal_weights(&w(&[1, 1])).unwrap();
        assert_eq!(adj.get(&w(&[0, 0])), 2);
        assert_eq!(adj.total(), 8);
        let g2 = build_root_system(Series::G, 2).unwrap();
        let adj = g2.freudenthal_weights(&w(&[0, 1])).unwrap();
        assert_eq!(adj.total(), 14);
        assert_eq!(adj.get(&w(&[0, 0])), 2);
    }

    #[test]
    fn decompose_single_and_errors() {
        let b3 = build_root_system(Series::B, 3).unwrap();
        let lam = w(&[1, 0, 1]);
        let s = b3.decompose(&b3.freudenthal_weights(&lam).unwrap()).unwrap();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![(&lam, 1)]);
        // the vector representation with its zero weight removed
        let top = b3.freudenthal_weights(&w(&[1, 0, 0])).unwrap();
        let mut broken = WeightMultiset::new(3);
        for (k, m) in top.iter() {
            if k != &w(&[0, 0, 0]) {
                broken.insert(k.clone(), m);
            }
        }
        assert!(matches!(b3.decompose(&broken), Err(RootSysError::NegativeMultiplicity(_))));
    }

    #[test]
    fn levi_product_dims() {
        let rs = RootSystem::product(&[(Series::A, 1), (Series::A, 2)]).unwrap();
        assert_eq!(rs.dim(), 3 + 8);
        assert_eq!(rs.weyl_dim(&w(&[1, 1, 0])).unwrap(), 6);
        assert_eq!(rs.name(), "A1xA2");
    }
}
