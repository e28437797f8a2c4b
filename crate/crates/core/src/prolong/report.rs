use serde::Serialize;

use super::{rank_one_analysis, Prolongation, RankOneReport, Status};
use crate::gnla::Gnla;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProlongReport {
    pub algebra: String,
    pub hash: String,
    pub growth: Vec<usize>,
    pub g0_dim: usize,
    pub g0_is_gl: bool,
    /// `(dim g₁, dim g₂, …)` up to and including the first zero.
    pub layers: Vec<usize>,
    pub status: Status,
    pub rank_one: RankOneReport,
    pub symmetry_bound: Option<usize>,
}

/// Assembles the JSON-facing report. `user_g0` marks a prolongation of a
/// pair `(m, g₀)` rather than of `m`.
pub fn prolong_report(m: &Gnla, p: &Prolongation, user_g0: bool) -> ProlongReport {
    let n = m.dim(1);
    let rank_one = rank_one_analysis(m, user_g0.then_some(&p.g0), Some(p));
    ProlongReport {
        algebra: m.name().to_string(),
        hash: m.hash(),
        growth: m.growth_vector(),
        g0_dim: p.g0.dim(),
        g0_is_gl: p.g0.dim() == n * n,
        layers: p.dims(),
        status: p.status,
        rank_one,
        symmetry_bound: super::symmetry_bound(m, p).ok(),
    }
}
