//! Graded nilpotent Lie algebras given by structure constants.
//!
//! Basis elements are numbered globally: layer `k` (the space `g₋ₖ`)
//! occupies the indices `offset(k) .. offset(k) + dims[k-1]`. Brackets are
//! stored for `x < y` only and may, before validation, land anywhere.

mod checks;
mod derivation;
mod io;
mod quotient;

use std::collections::BTreeMap;

use crate::exactla::{Rational, SparseVec};

pub use checks::{BranchingReport, FundamentalReport, LayerRank, ValidationReport, Violation};
pub use derivation::{
    derivation_commutator, elementary_gl, extend_from_generators, gl_action, grading_derivation,
    highest_weight_vectors, is_derivation, isotypic_submodule, submodule_generated,
    weight_vectors, Derivation,
};
pub use io::{derivations_from_json, derivations_to_json, subspace_from_json, subspace_to_json, LeviAction, NamedDerivation, Provenance};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GnlaError {
    #[error("subspace is not an ideal: [{basis}, h] leaves h in layer {layer}")]
    NotAnIdeal { basis: String, layer: usize },
    #[error("ideal meets g₋₁")]
    MeetsDegreeOne,
    #[error("malformed algebra spec: {0}")]
    Spec(String),
    #[error("algebra has no quotient provenance")]
    NoProvenance,
    #[error("total dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
}

/// Graded subspace given by spanning vectors in layer-local coordinates.
/// `layers[k-1]` lives in `g₋ₖ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSubspace {
    pub layers: Vec<Vec<SparseVec>>,
}

impl GradedSubspace {
    pub fn zero(depth: usize) -> Self {
        Self { layers: vec![Vec::new(); depth] }
    }

    pub fn layer(&self, k: usize) -> &[SparseVec] {
        self.layers.get(k - 1).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Per-layer dimensions of the span.
    pub fn dims(&self, m: &Gnla) -> Vec<usize> {
        (1..=m.depth())
            .map(|k| crate::exactla::rank_of(m.dim(k), self.layer(k)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gnla {
    name: String,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    brackets: BTreeMap<(usize, usize), SparseVec>,
    provenance: Option<Provenance>,
    levi_action: Option<LeviAction>,
}

/// `(x, y, [x, y])` with basis vectors as `(layer, position)`, layers from 1
/// and positions from 0.
pub type LayerBracket = ((usize, usize), (usize, usize), Vec<((usize, usize), Rational)>);

impl Gnla {
    /// Builds an algebra from global-index brackets `(x, y) ↦ [x, y]` with
    /// `x < y`. Zero values are dropped.
    pub fn new(
        name: impl Into<String>,
        dims: Vec<usize>,
        brackets: BTreeMap<(usize, usize), SparseVec>,
    ) -> Self {
        let mut offsets = Vec::with_capacity(dims.len());
        let mut acc = 0;
        for d in &dims {
            offsets.push(acc);
            acc += d;
        }
        let brackets = brackets
            .into_iter()
            .filter(|(k, v)| {
                assert!(k.0 < k.1, "brackets are stored for x < y");
                !v.is_zero()
            })
            .collect();
        Self { name: name.into(), dims, offsets, brackets, provenance: None, levi_action: None }
    }

    /// Convenience constructor from `((i,a), (j,b), [((k,c), q), …])` with
    /// 1-based layers and 0-based positions.
    pub fn from_layer_brackets(
        name: impl Into<String>,
        dims: Vec<usize>,
        entries: &[LayerBracket],
    ) -> Self {
        let shell = Self::new("", dims.clone(), BTreeMap::new());
        let mut map = BTreeMap::new();
        for (l, r, value) in entries {
            let mut x = shell.index(l.0, l.1);
            let mut y = shell.index(r.0, r.1);
            let v = SparseVec::from_pairs(
                value.iter().map(|((k, c), q)| (shell.index(*k, *c), q.clone())),
            );
            let v = if x > y {
                std::mem::swap(&mut x, &mut y);
                v.neg()
            } else {
                v
            };
            let e: &mut SparseVec = map.entry((x, y)).or_default();
            *e = e.add(&v);
        }
        Self::new(name, dims, map)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_provenance(mut self, p: Option<Provenance>) -> Self {
        self.provenance = p;
        self
    }

    pub fn with_levi_action(mut self, a: Option<LeviAction>) -> Self {
        self.levi_action = a;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn levi_action(&self) -> Option<&LeviAction> {
        self.levi_action.as_ref()
    }

    pub fn depth(&self) -> usize {
        self.dims.len()
    }

    /// `dim g₋ₖ`; zero outside `1..=depth`.
    pub fn dim(&self, k: usize) -> usize {
        if k == 0 || k > self.dims.len() {
            0
        } else {
            self.dims[k - 1]
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn growth_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k - 1]
    }

    /// Global index of basis element `a` (0-based) of `g₋ₖ`.
    pub fn index(&self, k: usize, a: usize) -> usize {
        assert!(a < self.dim(k), "basis position out of range");
        self.offsets[k - 1] + a
    }

    pub fn layer_range(&self, k: usize) -> std::ops::Range<usize> {
        let o = self.offset(k);
        o..o + self.dim(k)
    }

    /// `(k, a)` for a global index.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        let k = self.offsets.partition_point(|&o| o <= x);
        (k, x - self.offsets[k - 1])
    }

    pub fn degree(&self, x: usize) -> usize {
        self.locate(x).0
    }

    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &SparseVec)> + '_ {
        self.brackets.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[e_x, e_y]` in global coordinates.
    pub fn bracket_basis(&self, x: usize, y: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match x.cmp(&y) {
            Equal => SparseVec::zero(),
            Less => self.brackets.get(&(x, y)).cloned().unwrap_or_default(),
            Greater => self.brackets.get(&(y, x)).map(|v| v.neg()).unwrap_or_default(),
        }
    }

    /// Bilinear extension of the bracket to global vectors.
    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (x, a) in u.iter() {
            for (y, b) in v.iter() {
                if x == y {
                    continue;
                }
                let (lo, hi, sign) = if x < y { (x, y, true) } else { (y, x, false) };
                if let Some(w) = self.brackets.get(&(lo, hi)) {
                    let c = a * b;
                    out.add_scaled(w, &if sign { c } else { -c });
                }
            }
        }
        out
    }

    /// Layer-local coordinates of the `g₋ₖ` component of a global vector.
    pub fn to_local(&self, k: usize, v: &SparseVec) -> SparseVec {
        let r = self.layer_range(k);
        SparseVec::from_pairs(v.iter().filter(|(i, _)| r.contains(i)).map(|(i, c)| (i - r.start, c.clone())))
    }

    pub fn to_global(&self, k: usize, v: &SparseVec) -> SparseVec {
        let o = self.offset(k);
        v.remap(|i| Some(i + o))
    }

    /// Matrix columns of `ad_{e_x}` restricted to `g₋ₖ`, as local vectors in
    /// `g₋₍ₖ₊deg x₎` (empty target when beyond the depth).
    pub fn ad_on_layer(&self, v: &SparseVec, k: usize) -> Vec<SparseVec> {
        self.layer_range(k).map(|y| self.bracket(v, &SparseVec::unit(y))).collect()
    }

    /// Layered name: `e^k_a` using 1-based positions.
    pub fn basis_label(&self, x: usize) -> String {
        let (k, a) = self.locate(x);
        format!("e{}_{}", k, a + 1)
    }

    /// `m / (g₋₍ₜ₊₁₎ ⊕ … ⊕ g₋ₛ)`, keeping provenance and Levi action.
    pub fn truncated(&self, t: usize) -> Gnla {
        let t = t.min(self.depth());
        let n = self.dims[..t].iter().sum::<usize>();
        let brackets = self
            .brackets
            .iter()
            .filter(|((x, y), _)| *x < n && *y < n)
            .map(|(&k, v)| (k, SparseVec::from_pairs(v.iter().filter(|(z, _)| *z < n).map(|(z, c)| (z, c.clone())))))
            .collect();
        let cut = |d: &Derivation| {
            Derivation::from_images(
                d.images()[..n]
                    .iter()
                    .map(|v| SparseVec::from_pairs(v.iter().filter(|(z, _)| *z < n).map(|(z, c)| (z, c.clone()))))
                    .collect(),
            )
        };
        let provenance = self.provenance.as_ref().map(|p| Provenance {
            n: p.n,
            s: t,
            ideal: GradedSubspace { layers: p.ideal.layers.iter().take(t).cloned().collect() },
        });
        let levi_action = self.levi_action.as_ref().map(|a| LeviAction {
            generators: a
                .generators
                .iter()
                .map(|g| NamedDerivation { name: g.name.clone(), derivation: cut(&g.derivation) })
                .collect(),
            ..a.clone()
        });
        let mut m = Gnla::new(self.name.clone(), self.dims[..t].to_vec(), brackets);
        m.provenance = provenance;
        m.levi_action = levi_action;
        m
    }

    /// Drops trailing zero layers.
    pub(crate) fn trimmed(mut self) -> Self {
        while self.dims.last() == Some(&0) {
            self.dims.pop();
            self.offsets.pop();
        }
        if let Some(p) = self.provenance.as_mut() {
            p.ideal.layers.truncate(self.dims.len());
            p.s = self.dims.len();
        }
        self
    }
}

/// `heis(2m+1)`: generators `x_1..x_m, y_1..y_m` with `[x_i, y_i] = z`.
pub fn heisenberg(m: usize) -> Gnla {
    let mut br = BTreeMap::new();
    for i in 0..m {
        br.insert((i, m + i), SparseVec::unit(2 * m));
    }
    Gnla::new(format!("heis({})", 2 * m + 1), vec![2 * m, 1], br)
}

/// Abelian algebra `m = g₋₁` of dimension `n`.
pub fn abelian(n: usize) -> Gnla {
    Gnla::new(format!("abelian({n})"), vec![n], BTreeMap::new())
}
