use std::collections::{HashMap, HashSet, VecDeque};

use super::{RootSystem, Weight};

/// Dominant weights of `Γ_λ` with multiplicities, by decreasing height.
///
/// Freudenthal's recursion
/// `m(μ)·((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)(μ+kα, α)`
/// evaluated only on dominant μ; non-dominant terms are looked up through
/// their dominant Weyl representative.
pub(super) fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Vec<(Weight, u64)> {
    let mut dominant = dominant_weights_below(rs, lambda);
    dominant.sort_by(|a, b| rs.height_key(b).cmp(&rs.height_key(a)).then_with(|| b.cmp(a)));

    let rho = rs.rho();
    let lr = lambda.add(&rho);
    let top = rs.scaled_inner(&lr, &lr);
    let den = rs.gram_denominator();
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    let mut out = Vec::with_capacity(dominant.len());
    for mu in dominant {
        if &mu == lambda {
            mult.insert(mu.clone(), 1);
            out.push((mu, 1));
            continue;
        }
        let mr = mu.add(&rho);
        let gap = top - rs.scaled_inner(&mr, &mr);
        debug_assert!(gap > 0);
        let mut sum: i128 = 0;
        for (k_root, root) in rs.positive_roots().iter().enumerate() {
            let alpha = rs.root_weight(k_root);
            let mut shifted = mu.add(alpha);
            loop {
                let rep = rs.dominant_rep(&shifted);
                let Some(&m) = mult.get(&rep) else { break };
                sum += m as i128 * rs.pair_root(&shifted, root) as i128;
                shifted = shifted.add(alpha);
            }
        }
        let num = 2 * sum * den as i128;
        assert_eq!(num % gap as i128, 0, "Freudenthal recursion produced a fraction");
        let m = (num / gap as i128) as u64;
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}

/// Dominant μ with λ − μ a nonnegative combination of simple roots. Every
/// such μ is reached from λ by subtracting positive roots through dominant
/// weights only.
fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(w) = queue.pop_front() {
        for k in 0..rs.positive_roots().len() {
            let v = w.sub(rs.root_weight(k));
            if v.is_dominant() && seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().collect()
}
