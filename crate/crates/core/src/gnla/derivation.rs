//! Grading-preserving linear maps, the Leibniz rule, and the `gl(n)` action
//! on algebras whose derivations restrict to all of `gl(g₋₁)`.

use num_traits::{One, Zero};

use super::Gnla;
use crate::exactla::{rat, solve, Echelon, Rational, RationalMatrix, SparseVec};

/// Degree-preserving linear map stored by columns: `images[x] = D(e_x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    images: Vec<SparseVec>,
}

impl Derivation {
    pub fn from_images(images: Vec<SparseVec>) -> Self {
        Self { images }
    }

    pub fn zero(dim: usize) -> Self {
        Self { images: vec![SparseVec::zero(); dim] }
    }

    pub fn image(&self, x: usize) -> &SparseVec {
        &self.images[x]
    }

    pub fn images(&self) -> &[SparseVec] {
        &self.images
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero();
        for (x, c) in v.iter() {
            out.add_scaled(&self.images[x], c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|v| v.is_zero())
    }

    pub fn add_scaled(&mut self, other: &Derivation, c: &Rational) {
        for (a, b) in self.images.iter_mut().zip(&other.images) {
            a.add_scaled(b, c);
        }
    }

    /// Flattened coordinates: for each layer `k`, the `dim(k)²` block of
    /// entries `(row, col)` at `block + col·dim(k) + row`.
    pub fn to_vector(&self, m: &Gnla) -> SparseVec {
        let mut pairs = Vec::new();
        let mut block = 0;
        for k in 1..=m.depth() {
            let d = m.dim(k);
            for (col, x) in m.layer_range(k).enumerate() {
                for (y, c) in self.images[x].iter() {
                    pairs.push((block + col * d + (y - m.offset(k)), c.clone()));
                }
            }
            block += d * d;
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn from_vector(m: &Gnla, v: &SparseVec) -> Derivation {
        let mut images = vec![Vec::new(); m.total_dim()];
        let mut block = 0;
        let mut k = 1;
        for (i, c) in v.iter() {
            while i >= block + m.dim(k) * m.dim(k) {
                block += m.dim(k) * m.dim(k);
                k += 1;
            }
            let d = m.dim(k);
            let local = i - block;
            let (col, row) = (local / d, local % d);
            images[m.index(k, col)].push((m.index(k, row), c.clone()));
        }
        Derivation { images: images.into_iter().map(SparseVec::from_pairs).collect() }
    }
}

/// The grading element `Z`: multiplication by `k` on `g₋ₖ`.
pub fn grading_derivation(m: &Gnla) -> Derivation {
    let images = (0..m.total_dim())
        .map(|x| SparseVec::from_pairs([(x, rat(m.degree(x) as i64))]))
        .collect();
    Derivation { images }
}

/// `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs.
pub fn is_derivation(m: &Gnla, d: &Derivation) -> bool {
    let n = m.total_dim();
    for x in 0..n {
        for y in x + 1..n {
            let lhs = d.apply(&m.bracket_basis(x, y));
            let rhs = m
                .bracket(d.image(x), &SparseVec::unit(y))
                .add(&m.bracket(&SparseVec::unit(x), d.image(y)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn derivation_commutator(a: &Derivation, b: &Derivation) -> Derivation {
    let images = (0..a.images.len())
        .map(|x| a.apply(b.image(x)).sub(&b.apply(a.image(x))))
        .collect();
    Derivation { images }
}

/// Extends a linear map on `g₋₁` (images in local coordinates) to a
/// derivation, layer by layer through `g₋ₖ₋₁ = [g₋₁, g₋ₖ]`. Returns `None`
/// if some layer is not generated or the extension is not a derivation.
pub fn extend_from_generators(m: &Gnla, on_generators: &[SparseVec]) -> Option<Derivation> {
    assert_eq!(on_generators.len(), m.dim(1));
    let mut images = vec![SparseVec::zero(); m.total_dim()];
    for (a, v) in on_generators.iter().enumerate() {
        images[m.index(1, a)] = m.to_global(1, v);
    }
    for k in 1..m.depth() {
        let d = m.dim(k + 1);
        let mut ech = Echelon::new(d);
        let mut chosen = Vec::new();
        'outer: for x in m.layer_range(1) {
            for y in m.layer_range(k) {
                let p = m.to_local(k + 1, &m.bracket_basis(x, y));
                if ech.insert(&p) {
                    chosen.push((x, y, p));
                    if chosen.len() == d {
                        break 'outer;
                    }
                }
            }
        }
        if chosen.len() < d {
            return None;
        }
        // columns of `a` are the chosen products
        let mut rows = vec![Vec::new(); d];
        for (c, (_, _, p)) in chosen.iter().enumerate() {
            for (r, q) in p.iter() {
                rows[r].push((c, q.clone()));
            }
        }
        let a = RationalMatrix::from_rows(d, rows.into_iter().map(SparseVec::from_pairs).collect());
        let dx: Vec<SparseVec> = chosen
            .iter()
            .map(|(x, y, _)| {
                m.bracket(&images[*x], &SparseVec::unit(*y))
                    .add(&m.bracket(&SparseVec::unit(*x), &images[*y]))
            })
            .collect();
        for z in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[z] = Rational::one();
            let coef = solve(&a, &e).ok()??;
            let mut img = SparseVec::zero();
            for (c, q) in coef.iter().enumerate() {
                img.add_scaled(&dx[c], q);
            }
            images[m.index(k + 1, z)] = img;
        }
    }
    let d = Derivation { images };
    is_derivation(m, &d).then_some(d)
}

/// `E_ij` (0-based) on `g₋₁`, extended to a derivation.
pub fn elementary_gl(m: &Gnla, i: usize, j: usize) -> Option<Derivation> {
    let mut gens = vec![SparseVec::zero(); m.dim(1)];
    gens[j] = SparseVec::unit(i);
    extend_from_generators(m, &gens)
}

/// `gl(n)` weights of the basis of `g₋ₖ`, provided every basis vector is
/// an eigenvector of each `E_ii`; `None` otherwise.
pub fn weight_vectors(m: &Gnla, k: usize) -> Option<Vec<Vec<i64>>> {
    let n = m.dim(1);
    let diag: Vec<Derivation> = (0..n).map(|i| elementary_gl(m, i, i)).collect::<Option<_>>()?;
    let mut out = Vec::with_capacity(m.dim(k));
    for x in m.layer_range(k) {
        let mut w = Vec::with_capacity(n);
        for d in &diag {
            let img = d.image(x);
            let c = img.get(x);
            if img.nnz() > usize::from(!c.is_zero()) || !c.is_integer() {
                return None;
            }
            w.push(crate::exactla::to_i64(&c)?);
        }
        out.push(w);
    }
    Some(out)
}

/// Smallest subspace of `g₋ₖ` containing `seeds` and stable under `ops`,
/// as an RREF basis in local coordinates.
pub fn submodule_generated(m: &Gnla, k: usize, ops: &[Derivation], seeds: &[SparseVec]) -> Vec<SparseVec> {
    let d = m.dim(k);
    let mut ech = Echelon::new(d);
    let mut queue: Vec<SparseVec> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        let g = m.to_global(k, &v);
        for op in ops {
            let w = m.to_local(k, &op.apply(&g));
            if ech.insert(&w) {
                queue.push(w);
            }
        }
    }
    let r = ech.into_rref();
    r.matrix.row_vecs()[..r.rank].to_vec()
}

/// All `E_ij` as derivations, or `None` if `gl(g₋₁)` does not act.
pub fn gl_action(m: &Gnla) -> Option<Vec<Derivation>> {
    let n = m.dim(1);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(elementary_gl(m, i, j)?);
        }
    }
    Some(out)
}

/// Highest-weight vectors of `gl(n)`-weight `weight` in `g₋ₖ`: the weight
/// space intersected with the kernels of the raising operators `E_{i,i+1}`.
pub fn highest_weight_vectors(m: &Gnla, k: usize, weight: &[i64]) -> Option<Vec<SparseVec>> {
    let n = m.dim(1);
    let weights = weight_vectors(m, k)?;
    let cols: Vec<usize> = (0..m.dim(k)).filter(|&a| weights[a] == weight).collect();
    let mut rows: Vec<SparseVec> = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let e = elementary_gl(m, i, i + 1)?;
        let mut block = vec![Vec::new(); m.dim(k)];
        for (c, &a) in cols.iter().enumerate() {
            for (r, q) in m.to_local(k, e.image(m.index(k, a))).iter() {
                block[r].push((c, q.clone()));
            }
        }
        rows.extend(block.into_iter().map(SparseVec::from_pairs).filter(|v| !v.is_zero()));
    }
    let kernel = crate::exactla::nullspace(&RationalMatrix::from_rows(cols.len(), rows));
    Some(kernel.into_iter().map(|v| v.remap(|c| Some(cols[c]))).collect())
}

/// The `gl(n)`-submodule of `g₋ₖ` generated by the highest-weight vectors
/// of the given weight.
pub fn isotypic_submodule(m: &Gnla, k: usize, weight: &[i64]) -> Option<Vec<SparseVec>> {
    let seeds = highest_weight_vectors(m, k, weight)?;
    let ops = gl_action(m)?;
    Some(submodule_generated(m, k, &ops, &seeds))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnla::heisenberg;

    #[test]
    fn grading_element_is_derivation() {
        let h = heisenberg(1);
        let z = grading_derivation(&h);
        assert!(is_derivation(&h, &z));
        assert_eq!(Derivation::from_vector(&h, &z.to_vector(&h)), z);
    }

    #[test]
    fn heisenberg_gl2() {
        let h = heisenberg(1);
        let e12 = elementary_gl(&h, 0, 1).unwrap();
        assert!(e12.image(2).is_zero());
        let e11 = elementary_gl(&h, 0, 0).unwrap();
        assert_eq!(e11.image(2), &SparseVec::unit(2));
        assert_eq!(weight_vectors(&h, 2).unwrap(), vec![vec![1, 1]]);
        let c = derivation_commutator(&e12, &elementary_gl(&h, 1, 0).unwrap());
        assert!(is_derivation(&h, &c));
    }
}
