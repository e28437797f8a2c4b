//! Rank-one (finite type) decisions.
//!
//! `pr(m)` is infinite exactly when some nonzero `x ∈ g₋₁` has
//! `rank(ad_x|m) = 1`; `pr(m, g₀)` is infinite exactly when `h₀` contains
//! an element of rank one on `g₋₁`. Both questions live over the complex
//! numbers. They are decided exactly when the unknowns form a binary form,
//! and otherwise only by finding a witness.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{der0, h0_ideal, DerivationLayer, Prolongation};
use crate::exactla::{format_rational, rank_of, rat, Poly, Rational, SparseVec};
use crate::gnla::{Derivation, Gnla};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    FiniteType,
    InfiniteType,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankOneReport {
    pub verdict: Verdict,
    pub method: String,
    /// `"g-1"` for `x ∈ g₋₁`, `"h0"` for coordinates in the `h₀` basis.
    pub witness_space: Option<String>,
    pub witness: Option<Vec<String>>,
    /// For binary forms without a rational root: the gcd whose roots give
    /// the witnesses `x = t·b₁ + b₂`.
    pub witness_form: Option<String>,
}

impl RankOneReport {
    fn plain(verdict: Verdict, method: &str) -> Self {
        Self { verdict, method: method.into(), witness_space: None, witness: None, witness_form: None }
    }

    fn with_vector(verdict: Verdict, method: &str, space: &str, v: &[Rational]) -> Self {
        Self {
            witness_space: Some(space.into()),
            witness: Some(v.iter().map(format_rational).collect()),
            ..Self::plain(verdict, method)
        }
    }

    /// Witness coordinates, when a rational witness was found.
    pub fn witness_vector(&self) -> Option<Vec<Rational>> {
        self.witness.as_ref().map(|w| {
            w.iter().map(|s| crate::exactla::parse_rational(s).expect("own output")).collect()
        })
    }
}

fn format_poly(p: &Poly) -> String {
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let coef = if i > 0 && c.is_one() { String::new() } else { format_rational(c) };
        terms.push(format!("{coef}{mono}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Dense `rows × cols` matrix pair `(A, B)`; rank ≤ 1 of `tA + B` on the
/// affine line, plus the point at infinity `A` itself.
enum PencilResult {
    AtInfinity,
    Everywhere,
    Root(Rational),
    Irrational(Poly),
    None,
}

fn matrix_rank(rows: usize, cols: usize, a: &[Vec<Rational>]) -> usize {
    let vecs: Vec<SparseVec> = (0..rows).map(|r| SparseVec::from_dense(&a[r])).collect();
    rank_of(cols, &vecs)
}

fn pencil_rank_one(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> PencilResult {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    if matrix_rank(rows, cols, a) <= 1 {
        return PencilResult::AtInfinity;
    }
    let live_rows: Vec<usize> =
        (0..rows).filter(|&r| (0..cols).any(|c| !a[r][c].is_zero() || !b[r][c].is_zero())).collect();
    let live_cols: Vec<usize> =
        (0..cols).filter(|&c| (0..rows).any(|r| !a[r][c].is_zero() || !b[r][c].is_zero())).collect();
    let entry = |r: usize, c: usize| Poly::new(vec![b[r][c].clone(), a[r][c].clone()]);
    let mut g = Poly::zero();
    for (i, &r1) in live_rows.iter().enumerate() {
        for &r2 in &live_rows[i + 1..] {
            for (j, &c1) in live_cols.iter().enumerate() {
                for &c2 in &live_cols[j + 1..] {
                    let minor = entry(r1, c1)
                        .mul(&entry(r2, c2))
                        .add(&entry(r1, c2).mul(&entry(r2, c1)).scale(&-Rational::one()));
                    g = g.gcd(&minor);
                    if g.degree() == Some(0) {
                        return PencilResult::None;
                    }
                }
            }
        }
    }
    if g.is_zero() {
        return PencilResult::Everywhere;
    }
    match g.rational_root() {
        Some(t) => PencilResult::Root(t),
        None => PencilResult::Irrational(g),
    }
}

/// Matrix of `ad_x` on all of `m` (rows, columns over the global basis).
fn ad_dense(m: &Gnla, x: &SparseVec) -> Vec<Vec<Rational>> {
    let n = m.total_dim();
    let gx = m.to_global(1, x);
    let mut out = vec![vec![Rational::zero(); n]; n];
    for y in 0..n {
        for (z, c) in m.bracket(&gx, &SparseVec::unit(y)).iter() {
            out[z][y] = c.clone();
        }
    }
    out
}

/// `rank(ad_x|m)` for `x ∈ g₋₁` given in local coordinates.
pub fn ad_matrix_rank(m: &Gnla, x: &SparseVec) -> usize {
    let gx = m.to_global(1, x);
    let cols: Vec<SparseVec> =
        (0..m.total_dim()).map(|y| m.bracket(&gx, &SparseVec::unit(y))).collect();
    rank_of(m.total_dim(), &cols)
}

fn on_generators(m: &Gnla, d: &Derivation) -> Vec<Vec<Rational>> {
    let n = m.dim(1);
    let mut out = vec![vec![Rational::zero(); n]; n];
    for (col, x) in m.layer_range(1).enumerate() {
        for (z, c) in m.to_local(1, d.image(x)).iter() {
            out[z][col] = c.clone();
        }
    }
    out
}

fn pencil_report(res: PencilResult, method: &str, space: &str, dim: usize) -> RankOneReport {
    let at = |t: Rational, u: Rational| {
        let mut v = vec![Rational::zero(); dim];
        v[0] = t;
        v[1] = u;
        v
    };
    let found = |v: Vec<Rational>| RankOneReport::with_vector(Verdict::InfiniteType, method, space, &v);
    match res {
        PencilResult::AtInfinity => found(at(rat(1), rat(0))),
        PencilResult::Everywhere => found(at(rat(0), rat(1))),
        PencilResult::Root(t) => found(at(t, rat(1))),
        PencilResult::Irrational(g) => RankOneReport {
            witness_space: Some(space.into()),
            witness_form: Some(format_poly(&g)),
            ..RankOneReport::plain(Verdict::InfiniteType, method)
        },
        PencilResult::None => RankOneReport::plain(Verdict::FiniteType, method),
    }
}

/// Tanaka's criterion on `h₀`; `None` when undecided.
fn tier_h0(m: &Gnla, g0: &DerivationLayer, rng: &mut ChaCha8Rng, trials: usize) -> Option<RankOneReport> {
    let h0 = h0_ideal(m, g0);
    let mats: Vec<Vec<Vec<Rational>>> = h0.basis.iter().map(|d| on_generators(m, d)).collect();
    let n = m.dim(1);
    match mats.len() {
        0 => return Some(RankOneReport::plain(Verdict::FiniteType, "h0 = 0")),
        1 => {
            let r = matrix_rank(n, n, &mats[0]);
            return Some(if r == 1 {
                RankOneReport::with_vector(Verdict::InfiniteType, "rank-one element in h0", "h0", &[rat(1)])
            } else {
                RankOneReport::plain(Verdict::FiniteType, "h0 is one-dimensional without rank-one elements")
            });
        }
        d if d == 2 || n == 2 => {
            let res = pencil_rank_one(&mats[0], &mats[1]);
            if d == 2 || !matches!(res, PencilResult::None) {
                return Some(pencil_report(res, "binary form gcd on h0", "h0", d));
            }
        }
        _ => {}
    }
    let d = mats.len();
    for _ in 0..trials {
        let c: Vec<Rational> = (0..d).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if c.iter().all(|q| q.is_zero()) {
            continue;
        }
        let mut a = vec![vec![Rational::zero(); n]; n];
        for (k, q) in c.iter().enumerate() {
            for r in 0..n {
                for col in 0..n {
                    a[r][col] += q * &mats[k][r][col];
                }
            }
        }
        if matrix_rank(n, n, &a) == 1 {
            return Some(RankOneReport::with_vector(Verdict::InfiniteType, "random search in h0", "h0", &c));
        }
    }
    None
}

pub fn rank_one_analysis(
    m: &Gnla,
    g0: Option<&DerivationLayer>,
    prior: Option<&Prolongation>,
) -> RankOneReport {
    rank_one_analysis_seeded(m, g0, prior, 0x5eed, 256)
}

pub fn rank_one_analysis_seeded(
    m: &Gnla,
    g0: Option<&DerivationLayer>,
    prior: Option<&Prolongation>,
    seed: u64,
    trials: usize,
) -> RankOneReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let Some(p) = prior {
        if p.is_finite() {
            return RankOneReport::plain(Verdict::FiniteType, "prolongation vanished");
        }
    }
    let n = m.dim(1);
    if let Some(g0) = g0 {
        return tier_h0(m, g0, &mut rng, trials)
            .unwrap_or_else(|| RankOneReport::plain(Verdict::Unknown, "no tier decided"));
    }
    if n == 2 {
        let a = ad_dense(m, &SparseVec::unit(0));
        let b = ad_dense(m, &SparseVec::unit(1));
        return pencil_report(pencil_rank_one(&a, &b), "binary form gcd on ad_x", "g-1", 2);
    }
    // pr(m) = pr(m, der₀(m)), so Tanaka's criterion applies with the full g₀
    if let Some(r) = tier_h0(m, &der0(m), &mut rng, trials) {
        return r;
    }
    for _ in 0..trials {
        let c: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if c.iter().all(|q| q.is_zero()) {
            continue;
        }
        if ad_matrix_rank(m, &SparseVec::from_dense(&c)) == 1 {
            return RankOneReport::with_vector(Verdict::InfiniteType, "random search in g-1", "g-1", &c);
        }
    }
    RankOneReport::plain(Verdict::Unknown, "no tier decided")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::free_truncated;
    use crate::gnla::heisenberg;

    #[test]
    fn heisenberg_is_infinite() {
        let h = heisenberg(1);
        let r = rank_one_analysis(&h, None, None);
        assert_eq!(r.verdict, Verdict::InfiniteType);
        let x = SparseVec::from_dense(&r.witness_vector().unwrap());
        assert_eq!(ad_matrix_rank(&h, &x), 1);
    }

    #[test]
    fn g2_symbol_is_finite() {
        let f = free_truncated(2, 3).unwrap();
        assert_eq!(rank_one_analysis(&f, None, None).verdict, Verdict::FiniteType);
    }

    #[test]
    fn irrational_pencil() {
        // tA + B = [[t, 2], [1, t]] has determinant t² − 2
        let a = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let b = vec![vec![rat(0), rat(2)], vec![rat(1), rat(0)]];
        match pencil_rank_one(&a, &b) {
            PencilResult::Irrational(g) => assert_eq!(format_poly(&g), "t^2 + -2"),
            _ => panic!("expected an irrational root"),
        }
    }
}
