//! Gradations of simple Lie algebras by crossed Dynkin nodes, and the
//! negative nilradical `m_I` as a graded nilpotent algebra.
//!
//! The grade of a root is the sum of its coefficients on the crossed simple
//! roots. `g₋ₖ` is spanned by `e_{−α}` for the positive roots `α` of grade
//! `k`, ordered as in [`RootSystem::positive_roots`].

mod chevalley;

use std::collections::BTreeMap;

use serde::Serialize;

pub use chevalley::ChevalleyBasis;

use crate::exactla::{rat, to_i64, SparseVec};
use crate::gnla::{Gnla, LeviAction, NamedDerivation, Derivation};
use crate::rootsys::{build_root_system, IrrepSum, RootSysError, RootSystem, Series, Weight, WeightMultiset};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParabolicError {
    #[error("node {node} is not in 1..={rank}")]
    InvalidNode { node: usize, rank: usize },
    #[error("no nodes crossed")]
    NothingCrossed,
    #[error("degree {k} outside 1..={depth}")]
    InvalidDegree { k: usize, depth: usize },
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error("algebra carries no diagonal Cartan action")]
    NoCartanAction,
}

/// A simple factor of the Levi subalgebra. `nodes[t]` is the node of the
/// ambient diagram playing the role of Bourbaki node `t + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviComponent {
    pub series: Series,
    pub rank: usize,
    pub nodes: Vec<usize>,
}

impl serde::Serialize for Series {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.letter().to_string())
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicGrading {
    root_system: RootSystem,
    crossed: Vec<usize>,
    grades: Vec<usize>,
    layers: Vec<Vec<usize>>,
    levi: Vec<LeviComponent>,
}

/// Summary used by reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingSummary {
    pub algebra: String,
    pub crossed: Vec<usize>,
    pub growth: Vec<usize>,
    pub levi_type: String,
    pub levi_components: Vec<LeviComponent>,
    pub center_dim: usize,
    pub g0_dim: usize,
    pub gl_rank: Option<usize>,
    pub maximal: bool,
}

pub fn parabolic_grading(series: Series, rank: usize, crossed: &[usize]) -> Result<ParabolicGrading, ParabolicError> {
    let rs = build_root_system(series, rank)?;
    let mut crossed = crossed.to_vec();
    crossed.sort_unstable();
    crossed.dedup();
    if crossed.is_empty() {
        return Err(ParabolicError::NothingCrossed);
    }
    if let Some(&node) = crossed.iter().find(|&&i| i == 0 || i > rank) {
        return Err(ParabolicError::InvalidNode { node, rank });
    }
    let grades: Vec<usize> = rs
        .positive_roots()
        .iter()
        .map(|a| crossed.iter().map(|&i| a[i - 1] as usize).sum())
        .collect();
    let depth = grades.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth];
    for (k, &g) in grades.iter().enumerate() {
        if g > 0 {
            layers[g - 1].push(k);
        }
    }
    let uncrossed: Vec<usize> = (1..=rank).filter(|i| !crossed.contains(i)).collect();
    let mut levi = identify_levi(rs.cartan_matrix(), &uncrossed);
    let first: Vec<&Vec<i64>> = layers.first().map(|l| l.iter().map(|&k| &rs.positive_roots()[k]).collect()).unwrap_or_default();
    for c in levi.iter_mut().filter(|c| c.series == Series::A && c.rank > 1) {
        orient_chain(rs.cartan_matrix(), c, &first)?;
    }
    Ok(ParabolicGrading { root_system: rs, crossed, grades, layers, levi })
}

/// Splits the uncrossed subdiagram into connected components and matches
/// each with a Bourbaki diagram, choosing the lexicographically smallest
/// node assignment.
fn identify_levi(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<LeviComponent> {
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![nodes[start]];
        seen[start] = true;
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            for (t, &v) in nodes.iter().enumerate() {
                if !seen[t] && cartan[u - 1][v - 1] != 0 {
                    seen[t] = true;
                    comp.push(v);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(match_component(cartan, &comp));
    }
    out
}

/// A type-A chain has two Bourbaki numberings. Picks the one whose
/// `g₋₁` highest weights are lexicographically largest, i.e. supported
/// nearest node 1; ties keep the ambient order.
fn orient_chain(cartan: &[Vec<i64>], c: &mut LeviComponent, first: &[&Vec<i64>]) -> Result<(), ParabolicError> {
    let model = build_root_system(Series::A, c.rank)?;
    let ws = WeightMultiset::from_weights(
        c.rank,
        first.iter().map(|a| {
            Weight::new(c.nodes.iter().map(|&i| -(0..a.len()).map(|j| a[j] * cartan[i - 1][j]).sum::<i64>()).collect())
        }),
    );
    let dec = model.decompose(&ws)?;
    let mut fwd: Vec<Vec<i64>> = Vec::new();
    for (w, m) in dec.iter() {
        fwd.extend(std::iter::repeat_n(w.coords().to_vec(), m as usize));
    }
    let mut rev: Vec<Vec<i64>> = fwd.iter().map(|w| w.iter().rev().copied().collect()).collect();
    fwd.sort_unstable_by(|a, b| b.cmp(a));
    rev.sort_unstable_by(|a, b| b.cmp(a));
    if rev > fwd {
        c.nodes.reverse();
    }
    Ok(())
}

fn match_component(cartan: &[Vec<i64>], comp: &[usize]) -> LeviComponent {
    let r = comp.len();
    for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G] {
        if !series.is_valid(r) {
            continue;
        }
        let model = build_root_system(series, r).expect("valid type");
        let mc = model.cartan_matrix();
        let mut assign: Vec<usize> = Vec::with_capacity(r);
        if search(cartan, comp, mc, &mut assign) {
            return LeviComponent { series, rank: r, nodes: assign };
        }
    }
    unreachable!("every connected subdiagram of a Dynkin diagram is of finite type")
}

fn search(cartan: &[Vec<i64>], comp: &[usize], model: &[Vec<i64>], assign: &mut Vec<usize>) -> bool {
    let t = assign.len();
    if t == comp.len() {
        return true;
    }
    for &v in comp {
        if assign.contains(&v) {
            continue;
        }
        let ok = (0..t).all(|u| {
            cartan[v - 1][assign[u] - 1] == model[t][u] && cartan[assign[u] - 1][v - 1] == model[u][t]
        });
        if ok {
            assign.push(v);
            if search(cartan, comp, model, assign) {
                return true;
            }
            assign.pop();
        }
    }
    false
}

impl ParabolicGrading {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn algebra_name(&self) -> String {
        self.root_system.name()
    }

    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Grade of a root in simple coordinates (negative for negative roots).
    pub fn grade(&self, a: &[i64]) -> i64 {
        self.crossed.iter().map(|&i| a[i - 1]).sum()
    }

    /// Positive root indices of grade `k`.
    pub fn layer_roots(&self, k: usize) -> &[usize] {
        &self.layers[k - 1]
    }

    pub fn growth_vector(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    pub fn levi_components(&self) -> &[LeviComponent] {
        &self.levi
    }

    /// `"A7"`, `"A1xA2"`, or `"trivial"`.
    pub fn levi_type(&self) -> String {
        if self.levi.is_empty() {
            return "trivial".into();
        }
        self.levi.iter().map(|c| format!("{}{}", c.series.letter(), c.rank)).collect::<Vec<_>>().join("x")
    }

    /// Levi nodes in the order used for Levi weights.
    pub fn levi_nodes(&self) -> Vec<usize> {
        self.levi.iter().flat_map(|c| c.nodes.iter().copied()).collect()
    }

    pub fn levi_root_system(&self) -> RootSystem {
        let factors: Vec<(Series, usize)> = self.levi.iter().map(|c| (c.series, c.rank)).collect();
        RootSystem::product(&factors).expect("identified types are valid")
    }

    pub fn center_dim(&self) -> usize {
        self.crossed.len()
    }

    /// `r + 2·#{positive roots of grade 0}`.
    pub fn g0_dim(&self) -> usize {
        self.root_system.rank() + 2 * self.grades.iter().filter(|&&g| g == 0).count()
    }

    /// `Some(k)` when `g₀ ≅ gl(k)`: one crossed node and Levi `A_{k−1}`.
    pub fn gl_rank(&self) -> Option<usize> {
        if self.crossed.len() != 1 {
            return None;
        }
        match self.levi.as_slice() {
            [] => Some(1),
            [c] if c.series == Series::A => Some(c.rank + 1),
            _ => None,
        }
    }

    pub fn is_maximal(&self) -> bool {
        self.crossed.len() == 1
    }

    pub fn summary(&self) -> GradingSummary {
        GradingSummary {
            algebra: self.algebra_name(),
            crossed: self.crossed.clone(),
            growth: self.growth_vector(),
            levi_type: self.levi_type(),
            levi_components: self.levi.clone(),
            center_dim: self.center_dim(),
            g0_dim: self.g0_dim(),
            gl_rank: self.gl_rank(),
            maximal: self.is_maximal(),
        }
    }

    /// Levi weight of `e_{−α}`: its pairings with the Levi simple coroots.
    pub fn levi_weight_of_negative(&self, a: &[i64]) -> Weight {
        let c = self.root_system.cartan_matrix();
        let r = a.len();
        Weight::new(self.levi_nodes().iter().map(|&i| -(0..r).map(|j| a[j] * c[i - 1][j]).sum::<i64>()).collect())
    }

    /// Levi weights of `g₋ₖ`.
    pub fn levi_weights(&self, k: usize) -> Result<WeightMultiset, ParabolicError> {
        if k == 0 || k > self.depth() {
            return Err(ParabolicError::InvalidDegree { k, depth: self.depth() });
        }
        let roots = self.root_system.positive_roots();
        let rank = self.levi_nodes().len();
        Ok(WeightMultiset::from_weights(
            rank,
            self.layers[k - 1].iter().map(|&i| self.levi_weight_of_negative(&roots[i])),
        ))
    }
}

/// `g₋ₖ` as a module over the semisimple part of the Levi factor.
pub fn layer_decomposition(pg: &ParabolicGrading, k: usize) -> Result<IrrepSum, ParabolicError> {
    let w = pg.levi_weights(k)?;
    Ok(pg.levi_root_system().decompose(&w)?)
}

pub fn chevalley_basis(rs: &RootSystem) -> ChevalleyBasis {
    ChevalleyBasis::new(rs)
}

/// `m_I` with brackets `[e_{−α}, e_{−β}] = N_{−α,−β} e_{−α−β}` and the
/// Levi action attached.
pub fn negative_nilradical(pg: &ParabolicGrading) -> Gnla {
    let cb = ChevalleyBasis::new(&pg.root_system);
    negative_nilradical_with(pg, &cb)
}

pub fn negative_nilradical_with(pg: &ParabolicGrading, cb: &ChevalleyBasis) -> Gnla {
    let roots = pg.root_system.positive_roots();
    let mut position: BTreeMap<usize, usize> = BTreeMap::new();
    let mut order: Vec<usize> = Vec::new();
    for layer in &pg.layers {
        for &i in layer {
            position.insert(i, order.len());
            order.push(i);
        }
    }
    let neg = |a: &[i64]| a.iter().map(|x| -x).collect::<Vec<i64>>();
    let index_of = |a: &[i64]| pg.root_system.root_index(a).and_then(|i| position.get(&i).copied());
    let mut br = BTreeMap::new();
    for (x, &i) in order.iter().enumerate() {
        for (y, &j) in order.iter().enumerate().skip(x + 1) {
            let s: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
            if let Some(z) = index_of(&s) {
                let c = cb.n(&neg(&roots[i]), &neg(&roots[j]));
                br.insert((x, y), SparseVec::from_pairs([(z, rat(c))]));
            }
        }
    }
    let nodes: String = pg.crossed.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    let m = Gnla::new(format!("m({},{{{}}})", pg.algebra_name(), nodes), pg.growth_vector(), br);

    // grade-zero generators: e_i, f_i for Levi nodes, h_i for all nodes
    let r = pg.root_system.rank();
    let unit = |i: usize| {
        let mut v = vec![0i64; r];
        v[i - 1] = 1;
        v
    };
    let act = |g: &[i64]| -> Derivation {
        let images = order
            .iter()
            .map(|&i| {
                let t: Vec<i64> = g.iter().zip(&roots[i]).map(|(a, b)| a - b).collect();
                match index_of(&neg(&t)) {
                    Some(z) => SparseVec::from_pairs([(z, rat(cb.n(g, &neg(&roots[i]))))]),
                    None => SparseVec::zero(),
                }
            })
            .collect();
        Derivation::from_images(images)
    };
    let mut generators = Vec::new();
    let mut cartan = Vec::new();
    for &i in &pg.levi_nodes() {
        generators.push(NamedDerivation { name: format!("e{i}"), derivation: act(&unit(i)) });
        generators.push(NamedDerivation { name: format!("f{i}"), derivation: act(&neg(&unit(i))) });
    }
    for i in 1..=r {
        let images = order
            .iter()
            .enumerate()
            .map(|(x, &k)| SparseVec::from_pairs([(x, rat(-cb.pairing(&roots[k], i - 1)))]))
            .collect();
        generators.push(NamedDerivation { name: format!("h{i}"), derivation: Derivation::from_images(images) });
    }
    for &i in &pg.levi_nodes() {
        cartan.push(generators.iter().position(|g| g.name == format!("h{i}")).unwrap());
    }
    m.with_levi_action(Some(LeviAction { levi_type: pg.levi_type(), cartan, generators }))
}

/// Per-layer weights of an algebra under a diagonal Cartan action: the
/// attached Levi Cartan if present, otherwise `gl(n)` weights converted to
/// `A_{n−1}` fundamental coordinates.
pub fn cartan_weights(m: &Gnla) -> Result<Vec<WeightMultiset>, ParabolicError> {
    if let Some(a) = m.levi_action() {
        let hs: Vec<&Derivation> = a.cartan.iter().map(|&c| &a.generators[c].derivation).collect();
        let mut out = Vec::with_capacity(m.depth());
        for k in 1..=m.depth() {
            let mut ws = WeightMultiset::new(hs.len());
            for x in m.layer_range(k) {
                let mut w = Vec::with_capacity(hs.len());
                for h in &hs {
                    let img = h.image(x);
                    let c = img.get(x);
                    if img.nnz() > usize::from(!num_traits::Zero::is_zero(&c)) {
                        return Err(ParabolicError::NoCartanAction);
                    }
                    w.push(to_i64(&c).ok_or(ParabolicError::NoCartanAction)?);
                }
                ws.insert(Weight::new(w), 1);
            }
            out.push(ws);
        }
        return Ok(out);
    }
    let n = m.dim(1);
    let mut out = Vec::with_capacity(m.depth());
    for k in 1..=m.depth() {
        let gl = crate::gnla::weight_vectors(m, k).ok_or(ParabolicError::NoCartanAction)?;
        out.push(WeightMultiset::from_weights(
            n - 1,
            gl.iter().map(|w| Weight::new((0..n - 1).map(|i| w[i] - w[i + 1]).collect())),
        ));
    }
    Ok(out)
}

/// Decomposes every layer of `m` with respect to `rs` using [`cartan_weights`].
pub fn decompose_layers(m: &Gnla, rs: &RootSystem) -> Result<Vec<IrrepSum>, ParabolicError> {
    cartan_weights(m)?.iter().map(|w| Ok(rs.decompose(w)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_first_node() {
        let pg = parabolic_grading(Series::G, 2, &[1]).unwrap();
        assert_eq!(pg.growth_vector(), vec![2, 1, 2]);
        assert_eq!(pg.gl_rank(), Some(2));
        let m = negative_nilradical(&pg);
        assert!(m.validate().is_valid());
        assert!(m.is_fundamental().fundamental);
        let a = m.levi_action().unwrap();
        assert!(a.generators.iter().all(|g| crate::gnla::is_derivation(&m, &g.derivation)));
    }

    #[test]
    fn levi_identification() {
        let pg = parabolic_grading(Series::E, 8, &[1]).unwrap();
        assert_eq!(pg.levi_type(), "D7");
        assert_eq!(pg.levi_components()[0].nodes, vec![8, 7, 6, 5, 4, 2, 3]);
        let pg = parabolic_grading(Series::E, 8, &[2]).unwrap();
        assert_eq!(pg.levi_components()[0].nodes, vec![1, 3, 4, 5, 6, 7, 8]);
        assert_eq!(pg.levi_type(), "A7");
        let pg = parabolic_grading(Series::B, 3, &[2]).unwrap();
        assert_eq!(pg.levi_type(), "A1xA1");
        let pg = parabolic_grading(Series::B, 4, &[4]).unwrap();
        assert_eq!(pg.levi_components()[0].nodes, vec![3, 2, 1]);
        assert!(parabolic_grading(Series::B, 3, &[4]).is_err());
    }

    #[test]
    fn abelian_grading() {
        let pg = parabolic_grading(Series::A, 3, &[1]).unwrap();
        assert_eq!(pg.growth_vector(), vec![3]);
        assert!(negative_nilradical(&pg).is_abelian());
    }
}
