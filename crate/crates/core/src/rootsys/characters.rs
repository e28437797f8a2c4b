//! Character arithmetic on weight multisets: tensor products, Adams
//! operations and the plethysms used for exterior powers and free Lie
//! algebra layers.

use std::collections::HashMap;

use super::{RootSysError, RootSystem, Weight, WeightMultiset};

type Signed = HashMap<Weight, i128>;

fn signed(v: &WeightMultiset) -> Signed {
    v.iter().map(|(w, m)| (w.clone(), m as i128)).collect()
}

fn mul(a: &Signed, b: &Signed) -> Signed {
    let mut out = Signed::with_capacity(a.len() * 2);
    for (wa, ma) in a {
        for (wb, mb) in b {
            *out.entry(wa.add(wb)).or_insert(0) += ma * mb;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

fn axpy(acc: &mut Signed, x: &Signed, c: i128) {
    for (w, m) in x {
        *acc.entry(w.clone()).or_insert(0) += c * m;
    }
    acc.retain(|_, m| *m != 0);
}

fn psi(v: &Signed, t: i64) -> Signed {
    v.iter().map(|(w, m)| (w.scale(t), *m)).collect()
}

/// Divides by `d` and converts to a multiset; the division must be exact
/// and the result nonnegative, or the input was not a genuine character.
fn finish(rank: usize, v: Signed, d: i128) -> WeightMultiset {
    let mut out = WeightMultiset::new(rank);
    for (w, m) in v {
        assert!(m % d == 0 && m >= 0, "plethysm did not produce a character at {w}");
        out.insert(w, (m / d) as u64);
    }
    out
}

fn check(rs: &RootSystem, v: &WeightMultiset) -> Result<(), RootSysError> {
    if v.rank() != rs.rank() {
        return Err(RootSysError::RankMismatch { expected: rs.rank(), got: v.rank() });
    }
    Ok(())
}

/// Character of `A ⊗ B`: all pairwise sums, multiplicities multiplied.
pub fn tensor_weights(
    rs: &RootSystem,
    a: &WeightMultiset,
    b: &WeightMultiset,
) -> Result<WeightMultiset, RootSysError> {
    check(rs, a)?;
    check(rs, b)?;
    Ok(finish(rs.rank(), mul(&signed(a), &signed(b)), 1))
}

/// Adams operation `ψ^t`: every weight scaled by `t`.
pub fn adams(v: &WeightMultiset, t: i64) -> WeightMultiset {
    let mut out = WeightMultiset::new(v.rank());
    for (w, m) in v.iter() {
        out.insert(w.scale(t), m);
    }
    out
}

/// `χ_{Λ²V} = (χ_V² − ψ²χ_V)/2`.
pub fn exterior_square_weights(
    rs: &RootSystem,
    v: &WeightMultiset,
) -> Result<WeightMultiset, RootSysError> {
    check(rs, v)?;
    let s = signed(v);
    let mut acc = mul(&s, &s);
    axpy(&mut acc, &psi(&s, 2), -1);
    Ok(finish(rs.rank(), acc, 2))
}

/// `χ_{S²V} = (χ_V² + ψ²χ_V)/2`.
pub fn symmetric_square_weights(
    rs: &RootSystem,
    v: &WeightMultiset,
) -> Result<WeightMultiset, RootSysError> {
    check(rs, v)?;
    let s = signed(v);
    let mut acc = mul(&s, &s);
    axpy(&mut acc, &psi(&s, 2), 1);
    Ok(finish(rs.rank(), acc, 2))
}

/// `χ_{Λ³V} = (p₁³ − 3p₁p₂ + 2p₃)/6` with `p_t = ψ^t χ_V`.
pub fn exterior_cube_weights(
    rs: &RootSystem,
    v: &WeightMultiset,
) -> Result<WeightMultiset, RootSysError> {
    check(rs, v)?;
    let p1 = signed(v);
    let mut acc = mul(&mul(&p1, &p1), &p1);
    axpy(&mut acc, &mul(&p1, &psi(&p1, 2)), -3);
    axpy(&mut acc, &psi(&p1, 3), 2);
    Ok(finish(rs.rank(), acc, 6))
}

pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Character of the degree-`k` layer of the free Lie algebra on `V`:
/// `(1/k) Σ_{t|k} μ(t) (ψ^t χ_V)^{k/t}`.
pub fn free_lie_module_weights(
    rs: &RootSystem,
    v: &WeightMultiset,
    k: u32,
) -> Result<WeightMultiset, RootSysError> {
    check(rs, v)?;
    assert!(k >= 1, "degree must be positive");
    let base = signed(v);
    let mut acc = Signed::new();
    for t in 1..=k {
        if !k.is_multiple_of(t) {
            continue;
        }
        let mu = mobius(t as u64);
        if mu == 0 {
            continue;
        }
        let pt = psi(&base, t as i64);
        let mut power: Signed = std::iter::once((rs.zero_weight(), 1)).collect();
        for _ in 0..k / t {
            power = mul(&power, &pt);
        }
        axpy(&mut acc, &power, mu as i128);
    }
    Ok(finish(rs.rank(), acc, k as i128))
}
