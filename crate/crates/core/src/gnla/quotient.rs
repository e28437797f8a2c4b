use std::collections::BTreeMap;

use super::{GnlaError, GradedSubspace, Gnla, Provenance};
use crate::exactla::{reduce_mod, span_basis, Rref, SparseVec};

fn complement(dim: usize, r: &Rref) -> Vec<usize> {
    let mut is_pivot = vec![false; dim];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    (0..dim).filter(|&c| !is_pivot[c]).collect()
}

impl Gnla {
    /// `m / h` on the complement of the RREF pivot coordinates of each
    /// layer of `h`. Trailing zero layers are trimmed. Quotient provenance,
    /// when present, is composed so the result is again `f_s(n)/ĥ`.
    pub fn quotient(&self, h: &GradedSubspace) -> Result<Gnla, GnlaError> {
        let s = self.depth();
        if h.layers.len() > s
            && h.layers[s..].iter().flatten().any(|v| !v.is_zero()) {
                return Err(GnlaError::Spec("ideal has layers beyond the depth".into()));
            }
        let rrefs: Vec<Rref> = (1..=s).map(|k| span_basis(self.dim(k), h.layer(k))).collect();
        if rrefs[0].rank > 0 {
            return Err(GnlaError::MeetsDegreeOne);
        }
        for k in 2..=s {
            for row in rrefs[k - 1].matrix.row_vecs().iter().take(rrefs[k - 1].rank) {
                let g = self.to_global(k, row);
                for x in 0..self.total_dim() {
                    let w = self.bracket(&SparseVec::unit(x), &g);
                    if w.is_zero() {
                        continue;
                    }
                    let t = k + self.degree(x);
                    if t > s || !reduce_mod(&rrefs[t - 1], &self.to_local(t, &w)).is_zero() {
                        return Err(GnlaError::NotAnIdeal { basis: self.basis_label(x), layer: t });
                    }
                }
            }
        }

        let comps: Vec<Vec<usize>> =
            (1..=s).map(|k| complement(self.dim(k), &rrefs[k - 1])).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        let mut new_index = vec![None; self.total_dim()];
        let mut next = 0;
        for k in 1..=s {
            for &c in &comps[k - 1] {
                new_index[self.index(k, c)] = Some(next);
                next += 1;
            }
        }
        let kept: Vec<usize> = (0..self.total_dim()).filter(|&x| new_index[x].is_some()).collect();
        let mut brackets = BTreeMap::new();
        for (i, &x) in kept.iter().enumerate() {
            for &y in &kept[i + 1..] {
                let v = self.bracket_basis(x, y);
                if v.is_zero() {
                    continue;
                }
                let mut out = SparseVec::zero();
                for t in 1..=s {
                    let local = self.to_local(t, &v);
                    if local.is_zero() {
                        continue;
                    }
                    let red = reduce_mod(&rrefs[t - 1], &local);
                    out = out.add(&self.to_global(t, &red).remap(|z| new_index[z]));
                }
                brackets.insert((new_index[x].unwrap(), new_index[y].unwrap()), out);
            }
        }

        let provenance = self.provenance().map(|p| {
            let layers = (1..=s)
                .map(|k| {
                    let old = p.ideal.layer(k);
                    let free_dim = p.free_dim(k);
                    let old_rref = span_basis(free_dim, old);
                    let lift = complement(free_dim, &old_rref);
                    let mut rows: Vec<SparseVec> = old_rref.matrix.row_vecs()[..old_rref.rank].to_vec();
                    rows.extend(
                        rrefs[k - 1].matrix.row_vecs()[..rrefs[k - 1].rank]
                            .iter()
                            .map(|r| r.remap(|c| Some(lift[c]))),
                    );
                    rows
                })
                .collect();
            Provenance { n: p.n, s: p.s, ideal: GradedSubspace { layers } }
        });

        Ok(Gnla::new(format!("{}/h", self.name()), dims, brackets)
            .with_provenance(provenance)
            .trimmed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::gnla::heisenberg;

    #[test]
    fn zero_quotient_is_identity() {
        let h = heisenberg(1);
        let q = h.quotient(&GradedSubspace::zero(2)).unwrap();
        assert_eq!(q.dims(), h.dims());
        assert_eq!(q.bracket_basis(0, 1), h.bracket_basis(0, 1));
    }

    #[test]
    fn quotient_errors() {
        let h = heisenberg(1);
        let bad = GradedSubspace { layers: vec![vec![SparseVec::unit(0)], vec![]] };
        assert_eq!(h.quotient(&bad), Err(GnlaError::MeetsDegreeOne));
        let top = GradedSubspace { layers: vec![vec![], vec![SparseVec::from_pairs([(0, rat(3))])]] };
        let q = h.quotient(&top).unwrap();
        assert_eq!(q.dims(), &[2]);
        assert!(q.is_abelian());
    }
}
