//! Tanaka prolongation: grading-preserving derivations, positive layers
//! `g_k`, and finite-type decisions.
//!
//! An element of degree `k ≥ 0` is a tuple `(u_j : g₋ⱼ → level k−j)`. Its
//! defining condition is the Leibniz rule on every basis pair of `m`,
//! which only involves brackets `[g_a, g₋ⱼ]` with `a ≥ 0`.

mod rank;
mod report;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactla::{nullspace_from_rref, rank_of, Echelon, Rational, SparseVec};
use crate::gnla::{derivation_commutator, grading_derivation, is_derivation, Derivation, Gnla};

pub use rank::{rank_one_analysis, rank_one_analysis_seeded, ad_matrix_rank, RankOneReport, Verdict};
pub use report::{prolong_report, ProlongReport};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ProlongError {
    #[error("g0 element {0} is not a derivation of m")]
    NotADerivation(usize),
    #[error("g0 is not closed under the commutator")]
    NotASubalgebra,
    #[error("max_degree must be at least 1")]
    ZeroDegree,
    #[error("prolongation is not known to be finite")]
    NotFiniteType,
}

/// A basis of grading-preserving derivations (or of a subalgebra of them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationLayer {
    pub basis: Vec<Derivation>,
}

impl DerivationLayer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// A degree-`k` element: `parts[j-1][a]` is the image of basis element `a`
/// of `g₋ⱼ`, in coordinates of level `k − j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProlongElement {
    pub parts: Vec<Vec<SparseVec>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProlongationLayer {
    pub degree: usize,
    pub basis: Vec<ProlongElement>,
}

impl ProlongationLayer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "snake_case")]
pub enum Status {
    /// `g_k = 0` at the given degree, hence for all higher degrees.
    StabilizedAtZero(usize),
    ReachedCap,
}

pub enum G0 {
    Full,
    Given(Vec<Derivation>),
}

#[derive(Clone, Debug)]
pub struct Prolongation {
    pub g0: DerivationLayer,
    pub layers: Vec<ProlongationLayer>,
    pub status: Status,
}

impl Prolongation {
    /// `(dim g₁, dim g₂, …)` including the terminating zero, if reached.
    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.dim()).collect()
    }

    pub fn positive_dim(&self) -> usize {
        self.layers.iter().map(|l| l.dim()).sum()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.status, Status::StabilizedAtZero(_))
    }

    /// `dim m + dim g₀ + Σ dim g_k`, once the layers have vanished.
    pub fn total_dim(&self, m: &Gnla) -> Result<usize, ProlongError> {
        if !self.is_finite() {
            return Err(ProlongError::NotFiniteType);
        }
        Ok(m.total_dim() + self.g0.dim() + self.positive_dim())
    }
}

/// `dim m + dim g₀ + Σ dim g_k` of a stabilized prolongation; equals
/// `n² + dim m` for a rigid sub-free algebra.
pub fn symmetry_bound(m: &Gnla, p: &Prolongation) -> Result<usize, ProlongError> {
    p.total_dim(m)
}

/// Levels `−s..=K` of the graded algebra under construction.
struct Levels<'a> {
    m: &'a Gnla,
    g0: Option<&'a [Derivation]>,
    layers: &'a [ProlongationLayer],
}

impl Levels<'_> {
    fn dim(&self, t: i64) -> usize {
        match t {
            t if t < 0 => self.m.dim((-t) as usize),
            0 => self.g0.map(|g| g.len()).unwrap_or(0),
            t => self.layers[t as usize - 1].dim(),
        }
    }

    /// `[b, e_y]` for basis element `b` of level `t` and global basis `y`,
    /// in coordinates of level `t − deg y`.
    fn act(&self, t: i64, b: usize, y: usize) -> SparseVec {
        let m = self.m;
        let j = m.degree(y);
        match t {
            t if t < 0 => {
                let k = (-t) as usize;
                if k + j > m.depth() {
                    return SparseVec::zero();
                }
                m.to_local(k + j, &m.bracket_basis(m.index(k, b), y))
            }
            0 => {
                let d = &self.g0.expect("level 0 requested without g0")[b];
                m.to_local(j, d.image(y))
            }
            t => self.layers[t as usize - 1].basis[b].parts[j - 1][y - m.offset(j)].clone(),
        }
    }
}

/// Solves the Leibniz system for degree-`k` tuples. Returns the canonical
/// nullspace basis reshaped into parts.
fn solve_degree(lv: &Levels, k: i64) -> Vec<ProlongElement> {
    let m = lv.m;
    let s = m.depth();
    let target_dim: Vec<usize> = (1..=s).map(|j| lv.dim(k - j as i64)).collect();
    let mut var_off = Vec::with_capacity(s);
    let mut nvars = 0;
    for j in 1..=s {
        var_off.push(nvars);
        nvars += m.dim(j) * target_dim[j - 1];
    }
    let var = |j: usize, src: usize, tgt: usize| var_off[j - 1] + src * target_dim[j - 1] + tgt;

    // cache of [b, e_y] per (level, y) to avoid recomputation across pairs
    let mut cache: BTreeMap<(i64, usize), Vec<SparseVec>> = BTreeMap::new();
    let mut column = |t: i64, y: usize| -> Vec<SparseVec> {
        cache
            .entry((t, y))
            .or_insert_with(|| (0..lv.dim(t)).map(|b| lv.act(t, b, y)).collect())
            .clone()
    };

    let mut ech = Echelon::new(nvars);
    let n = m.total_dim();
    for x in 0..n {
        let i = m.degree(x);
        for y in x + 1..n {
            let j = m.degree(y);
            let level = k - (i + j) as i64;
            if level < -(s as i64) {
                continue;
            }
            let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            if i + j <= s {
                let w = m.bracket_basis(x, y);
                for (z, c) in w.iter() {
                    let src = z - m.offset(i + j);
                    for tgt in 0..target_dim[i + j - 1] {
                        rows.entry(tgt).or_default().push((var(i + j, src, tgt), c.clone()));
                    }
                }
            }
            // − [u(x), y]
            let cy = column(k - i as i64, y);
            for (tgt, v) in cy.iter().enumerate() {
                for (z, c) in v.iter() {
                    rows.entry(z).or_default().push((var(i, x - m.offset(i), tgt), -c.clone()));
                }
            }
            // − [x, u(y)] = + [u(y), x]
            let cx = column(k - j as i64, x);
            for (tgt, v) in cx.iter().enumerate() {
                for (z, c) in v.iter() {
                    rows.entry(z).or_default().push((var(j, y - m.offset(j), tgt), c.clone()));
                }
            }
            for (_, r) in rows {
                ech.insert(&SparseVec::from_pairs(r));
            }
        }
    }
    let kernel = nullspace_from_rref(&ech.into_rref());
    kernel
        .into_iter()
        .map(|v| {
            let mut parts: Vec<Vec<Vec<(usize, Rational)>>> =
                (1..=s).map(|j| vec![Vec::new(); m.dim(j)]).collect();
            for (idx, c) in v.iter() {
                let j = var_off.partition_point(|&o| o <= idx);
                let local = idx - var_off[j - 1];
                let (src, tgt) = (local / target_dim[j - 1], local % target_dim[j - 1]);
                parts[j - 1][src].push((tgt, c.clone()));
            }
            ProlongElement {
                parts: parts
                    .into_iter()
                    .map(|p| p.into_iter().map(SparseVec::from_pairs).collect())
                    .collect(),
            }
        })
        .collect()
}

fn element_to_derivation(m: &Gnla, e: &ProlongElement) -> Derivation {
    let mut images = Vec::with_capacity(m.total_dim());
    for j in 1..=m.depth() {
        for v in &e.parts[j - 1] {
            images.push(m.to_global(j, v));
        }
    }
    Derivation::from_images(images)
}

/// Canonical basis of `der₀(m)`.
pub fn der0(m: &Gnla) -> DerivationLayer {
    let lv = Levels { m, g0: None, layers: &[] };
    let basis = solve_degree(&lv, 0).iter().map(|e| element_to_derivation(m, e)).collect();
    DerivationLayer { basis }
}

pub fn grading_element(m: &Gnla) -> Derivation {
    grading_derivation(m)
}

/// Fundamental with `dim der₀(m) = n²`.
pub fn is_subfree(m: &Gnla) -> bool {
    let n = m.dim(1);
    m.is_fundamental().fundamental && der0(m).dim() == n * n
}

/// Checks a user-supplied `g₀`: every element a derivation, span closed
/// under commutators. Returns an independent basis of the span.
pub fn check_g0(m: &Gnla, g0: &[Derivation]) -> Result<DerivationLayer, ProlongError> {
    for (i, d) in g0.iter().enumerate() {
        if !is_derivation(m, d) {
            return Err(ProlongError::NotADerivation(i));
        }
    }
    let width: usize = m.dims().iter().map(|d| d * d).sum();
    let mut ech = Echelon::new(width);
    let mut basis = Vec::new();
    for d in g0 {
        if ech.insert(&d.to_vector(m)) {
            basis.push(d.clone());
        }
    }
    for a in &basis {
        for b in &basis {
            if !ech.contains(&derivation_commutator(a, b).to_vector(m)) {
                return Err(ProlongError::NotASubalgebra);
            }
        }
    }
    Ok(DerivationLayer { basis })
}

/// Basis of the Lie subalgebra of `der₀(m)` generated by `gens`.
pub fn lie_closure(m: &Gnla, gens: &[Derivation]) -> DerivationLayer {
    let width: usize = m.dims().iter().map(|d| d * d).sum();
    let mut ech = Echelon::new(width);
    let mut basis: Vec<Derivation> = Vec::new();
    for d in gens {
        if ech.insert(&d.to_vector(m)) {
            basis.push(d.clone());
        }
    }
    let mut done = 0;
    while done < basis.len() {
        let a = basis[done].clone();
        for j in 0..=done {
            let c = derivation_commutator(&a, &basis[j]);
            if ech.insert(&c.to_vector(m)) {
                basis.push(c);
            }
        }
        done += 1;
    }
    DerivationLayer { basis }
}

/// `pr(m, g₀)` up to `max_degree`, stopping at the first zero layer.
pub fn prolong(m: &Gnla, g0: G0, max_degree: usize) -> Result<Prolongation, ProlongError> {
    if max_degree == 0 {
        return Err(ProlongError::ZeroDegree);
    }
    let g0 = match g0 {
        G0::Full => der0(m),
        G0::Given(ds) => check_g0(m, &ds)?,
    };
    let mut layers: Vec<ProlongationLayer> = Vec::new();
    let mut status = Status::ReachedCap;
    for k in 1..=max_degree {
        let basis = {
            let lv = Levels { m, g0: Some(&g0.basis), layers: &layers };
            solve_degree(&lv, k as i64)
        };
        let empty = basis.is_empty();
        layers.push(ProlongationLayer { degree: k, basis });
        if empty {
            status = Status::StabilizedAtZero(k);
            break;
        }
    }
    Ok(Prolongation { g0, layers, status })
}

/// Default degree cap `2·depth + 2`.
pub fn default_max_degree(m: &Gnla) -> usize {
    2 * m.depth() + 2
}

/// Elements of `g₀` annihilating every `g₋ₖ` with `k > 1`.
pub fn h0_ideal(m: &Gnla, g0: &DerivationLayer) -> DerivationLayer {
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for (b, d) in g0.basis.iter().enumerate() {
        for k in 2..=m.depth() {
            for y in m.layer_range(k) {
                for (z, c) in d.image(y).iter() {
                    rows.entry((y, z)).or_default().push((b, c.clone()));
                }
            }
        }
    }
    let mut ech = Echelon::new(g0.dim());
    for r in rows.into_values() {
        ech.insert(&SparseVec::from_pairs(r));
    }
    let basis = nullspace_from_rref(&ech.into_rref())
        .into_iter()
        .map(|v| {
            let mut d = Derivation::zero(m.total_dim());
            for (b, c) in v.iter() {
                d.add_scaled(&g0.basis[b], c);
            }
            d
        })
        .collect();
    DerivationLayer { basis }
}

/// Restriction of a positive-degree element to `g₋₁` vanishes.
pub fn vanishes_on_generators(e: &ProlongElement) -> bool {
    e.parts[0].iter().all(|v| v.is_zero())
}

/// Rank of the restriction map `g_k → Hom(g₋₁, g_{k−1})` on a layer.
pub fn restriction_rank(m: &Gnla, layer: &ProlongationLayer, prev_dim: usize) -> usize {
    let d1 = m.dim(1);
    let vecs: Vec<SparseVec> = layer
        .basis
        .iter()
        .map(|e| {
            SparseVec::from_pairs(
                e.parts[0]
                    .iter()
                    .enumerate()
                    .flat_map(|(a, v)| v.iter().map(move |(t, c)| (a * prev_dim + t, c.clone()))),
            )
        })
        .collect();
    rank_of(d1 * prev_dim, &vecs)
}
