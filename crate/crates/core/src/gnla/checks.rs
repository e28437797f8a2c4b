use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{GradedSubspace, Gnla};
use crate::exactla::{nullspace, rank_of, RationalMatrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `[left, right]` has a component `stray` outside `g₋₍ᵢ₊ⱼ₎`.
    Grading { left: (usize, usize), right: (usize, usize), stray: (usize, usize) },
    Jacobi { triple: [(usize, usize); 3] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = |(k, a): (usize, usize)| format!("e{k}_{}", a + 1);
        match self {
            Violation::Grading { left, right, stray } => write!(
                f,
                "grading: [{}, {}] has a component along {}",
                p(*left),
                p(*right),
                p(*stray)
            ),
            Violation::Jacobi { triple } => write!(
                f,
                "jacobi fails on ({}, {}, {})",
                p(triple[0]),
                p(triple[1]),
                p(triple[2])
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub grading_ok: bool,
    pub jacobi_ok: bool,
    pub triples_checked: usize,
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.grading_ok && self.jacobi_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerRank {
    /// Target layer `k+1` of `g₋₁ ⊗ g₋ₖ → g₋ₖ₋₁`.
    pub layer: usize,
    pub rank: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingReport {
    pub layers: Vec<LayerRank>,
    pub first_failure: Option<usize>,
}

impl BranchingReport {
    pub fn surjective(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalReport {
    pub fundamental: bool,
    pub reason: String,
}

impl Gnla {
    /// Grading additivity on every stored bracket, then the Jacobi identity
    /// on every basis triple `x < y < z` whose degrees can produce a nonzero
    /// result.
    pub fn validate(&self) -> ValidationReport {
        for (&(x, y), v) in self.brackets() {
            let target = self.degree(x) + self.degree(y);
            if let Some((z, _)) = v.iter().find(|(z, _)| self.degree(*z) != target) {
                return ValidationReport {
                    grading_ok: false,
                    jacobi_ok: false,
                    triples_checked: 0,
                    violation: Some(Violation::Grading {
                        left: self.locate(x),
                        right: self.locate(y),
                        stray: self.locate(z),
                    }),
                };
            }
        }
        let s = self.depth();
        let n = self.total_dim();
        let mut checked = 0;
        for x in 0..n {
            let dx = self.degree(x);
            for y in x + 1..n {
                let dy = self.degree(y);
                if dx + dy + 1 > s {
                    break;
                }
                let xy = self.bracket_basis(x, y);
                for z in y + 1..n {
                    if dx + dy + self.degree(z) > s {
                        break;
                    }
                    checked += 1;
                    let ez = SparseVec::unit(z);
                    let mut j = self.bracket(&SparseVec::unit(x), &self.bracket_basis(y, z));
                    j = j.add(&self.bracket(&SparseVec::unit(y), &self.bracket_basis(z, x)));
                    j = j.add(&self.bracket(&ez, &xy));
                    if !j.is_zero() {
                        return ValidationReport {
                            grading_ok: true,
                            jacobi_ok: false,
                            triples_checked: checked,
                            violation: Some(Violation::Jacobi {
                                triple: [self.locate(x), self.locate(y), self.locate(z)],
                            }),
                        };
                    }
                }
            }
        }
        ValidationReport { grading_ok: true, jacobi_ok: true, triples_checked: checked, violation: None }
    }

    /// Basis of the center, layer by layer.
    pub fn center(&self) -> GradedSubspace {
        let n = self.total_dim();
        let layers = (1..=self.depth())
            .map(|k| {
                // rows indexed by (y, output coordinate)
                let mut rows: BTreeMap<(usize, usize), Vec<(usize, crate::exactla::Rational)>> =
                    BTreeMap::new();
                for (col, x) in self.layer_range(k).enumerate() {
                    for y in 0..n {
                        for (z, c) in self.bracket_basis(x, y).iter() {
                            rows.entry((y, z)).or_default().push((col, c.clone()));
                        }
                    }
                }
                let m = RationalMatrix::from_rows(
                    self.dim(k),
                    rows.into_values().map(SparseVec::from_pairs).collect(),
                );
                nullspace(&m)
            })
            .collect();
        GradedSubspace { layers }
    }

    /// Rank of `g₋₁ ⊗ g₋ₖ → g₋ₖ₋₁` for each `k`.
    pub fn check_branching(&self) -> BranchingReport {
        let mut layers = Vec::new();
        let mut first_failure = None;
        for k in 1..self.depth() {
            let mut image = Vec::new();
            for x in self.layer_range(1) {
                for y in self.layer_range(k) {
                    let v = self.bracket_basis(x, y);
                    if !v.is_zero() {
                        image.push(self.to_local(k + 1, &v));
                    }
                }
            }
            let rank = rank_of(self.dim(k + 1), &image);
            if rank < self.dim(k + 1) && first_failure.is_none() {
                first_failure = Some(k + 1);
            }
            layers.push(LayerRank { layer: k + 1, rank, dim: self.dim(k + 1) });
        }
        BranchingReport { layers, first_failure }
    }

    /// `g₋₁` generates everything and meets the center trivially.
    pub fn is_fundamental(&self) -> FundamentalReport {
        let b = self.check_branching();
        if let Some(k) = b.first_failure {
            let lr = &b.layers[k - 2];
            return FundamentalReport {
                fundamental: false,
                reason: format!("g₋₁ does not generate g₋{k} (rank {} < {})", lr.rank, lr.dim),
            };
        }
        let z = self.center();
        let z1 = rank_of(self.dim(1), z.layer(1));
        if z1 > 0 {
            return FundamentalReport {
                fundamental: false,
                reason: format!("center meets g₋₁ in dimension {z1}"),
            };
        }
        FundamentalReport { fundamental: true, reason: "generated by g₋₁, no central generators".into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::gnla::{abelian, heisenberg};

    #[test]
    fn heisenberg_checks() {
        let h = heisenberg(1);
        assert!(h.validate().is_valid());
        assert!(h.is_fundamental().fundamental);
        assert_eq!(h.center().dims(&h), vec![0, 1]);
    }

    #[test]
    fn grading_violation_detected() {
        let mut br = std::collections::BTreeMap::new();
        br.insert((0, 1), SparseVec::unit(2));
        br.insert((0, 2), SparseVec::unit(1));
        let bad = Gnla::new("bad", vec![2, 1], br);
        let r = bad.validate();
        assert!(!r.grading_ok);
        assert!(matches!(r.violation, Some(Violation::Grading { .. })));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [e1,e2]=f, [e1,f]=g1, [e2,f]=g2 and [e1,e3]... build a broken depth-3 case
        let m = Gnla::from_layer_brackets(
            "broken",
            vec![3, 3, 1],
            &[
                ((1, 0), (1, 1), vec![((2, 0), rat(1))]),
                ((1, 0), (1, 2), vec![((2, 1), rat(1))]),
                ((1, 1), (1, 2), vec![((2, 2), rat(1))]),
                ((1, 0), (2, 2), vec![((3, 0), rat(1))]),
            ],
        );
        let r = m.validate();
        assert!(r.grading_ok && !r.jacobi_ok);
    }

    #[test]
    fn abelian_is_not_fundamental() {
        let a = abelian(2);
        assert!(a.validate().is_valid());
        let f = a.is_fundamental();
        assert!(!f.fundamental);
        assert_eq!(a.center().dims(&a), vec![2]);
    }

    #[test]
    fn branching_failure_layer() {
        let mut br = std::collections::BTreeMap::new();
        br.insert((0, 1), SparseVec::unit(2));
        let m = Gnla::new("ext", vec![2, 1, 1], br);
        let b = m.check_branching();
        assert_eq!(b.first_failure, Some(3));
    }
}
