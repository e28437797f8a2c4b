//! Named algebras used throughout the examples, tests and `replay`.
//!
//! Explicit structure constants are written as `((i, a), (j, b), value)`
//! with 1-based layers and 0-based positions.

use crate::exactla::{ratio, Rational};
use crate::freelie::{free_truncated, maximal_extension};
use crate::gnla::{heisenberg, isotypic_submodule, GradedSubspace, Gnla, GnlaError};
use crate::parabolic::{negative_nilradical, parabolic_grading};
use crate::rootsys::Series;

type Entry = crate::gnla::LayerBracket;

fn q(n: i64) -> Rational {
    ratio(n, 1)
}

fn m4_entries() -> Vec<Entry> {
    // g₋₁: e1_1, e1_2; g₋₂: e2; g₋₃: e3_1, e3_2; g₋₄: e4_11, e4_12, e4_22
    vec![
        ((1, 0), (1, 1), vec![((2, 0), q(1))]),
        ((1, 0), (2, 0), vec![((3, 0), q(1))]),
        ((1, 1), (2, 0), vec![((3, 1), q(1))]),
        ((1, 0), (3, 0), vec![((4, 0), q(1))]),
        ((1, 0), (3, 1), vec![((4, 1), q(1))]),
        ((1, 1), (3, 0), vec![((4, 1), q(1))]),
        ((1, 1), (3, 1), vec![((4, 2), q(1))]),
    ]
}

/// Common relations of `m′₅` and `m″₅`; growth (2,1,2,3).
pub fn m4() -> Gnla {
    Gnla::from_layer_brackets("m4", vec![2, 1, 2, 3], &m4_entries())
}

/// Growth (2,1,2,3,2), with the fractional constants 2/3 and 4/3.
pub fn m5_prime() -> Gnla {
    let mut e = m4_entries();
    e.extend([
        ((1, 0), (4, 1), vec![((5, 0), ratio(2, 3))]),
        ((1, 0), (4, 2), vec![((5, 1), ratio(4, 3))]),
        ((1, 1), (4, 0), vec![((5, 0), ratio(-4, 3))]),
        ((1, 1), (4, 1), vec![((5, 1), ratio(-2, 3))]),
        ((2, 0), (3, 0), vec![((5, 0), q(2))]),
        ((2, 0), (3, 1), vec![((5, 1), q(2))]),
    ]);
    Gnla::from_layer_brackets("m5'", vec![2, 1, 2, 3, 2], &e)
}

/// Growth (2,1,2,3,4); `g₋₅` has basis e5_111, e5_112, e5_122, e5_222.
pub fn m5_double_prime() -> Gnla {
    let mut e = m4_entries();
    e.extend([
        ((1, 0), (4, 0), vec![((5, 0), q(1))]),
        ((1, 0), (4, 1), vec![((5, 1), q(1))]),
        ((1, 1), (4, 0), vec![((5, 1), q(1))]),
        ((1, 0), (4, 2), vec![((5, 2), q(1))]),
        ((1, 1), (4, 1), vec![((5, 2), q(1))]),
        ((1, 1), (4, 2), vec![((5, 3), q(1))]),
    ]);
    Gnla::from_layer_brackets("m5''", vec![2, 1, 2, 3, 4], &e)
}

fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `e2_{jk}` as a signed position (0-based indices).
fn e2(j: usize, k: usize) -> Vec<(usize, i64)> {
    let pos = |a: usize, b: usize| match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        _ => 2,
    };
    match j.cmp(&k) {
        std::cmp::Ordering::Equal => vec![],
        std::cmp::Ordering::Less => vec![(pos(j, k), 1)],
        std::cmp::Ordering::Greater => vec![(pos(k, j), -1)],
    }
}

/// Basis of `g₋₃` in `m′₄`: `e3_{i,jk}` with `j < k`, except that
/// `e3_{3,12} = −e3_{1,23} + e3_{2,13}` is eliminated by the cyclic
/// constraint.
const M4P_G3: [(usize, usize, usize); 8] =
    [(0, 0, 1), (0, 0, 2), (0, 1, 2), (1, 0, 1), (1, 0, 2), (1, 1, 2), (2, 0, 2), (2, 1, 2)];

fn e3(i: usize, j: usize, k: usize) -> Vec<(usize, i64)> {
    if j == k {
        return vec![];
    }
    let (j0, k0, sign) = if j < k { (j, k, 1) } else { (k, j, -1) };
    if (i, j0, k0) == (2, 0, 1) {
        // e3_{1,23} at position 2, e3_{2,13} at position 4
        return vec![(2, -sign), (4, sign)];
    }
    let p = M4P_G3.iter().position(|&t| t == (i, j0, k0)).unwrap();
    vec![(p, sign)]
}

/// `m′₄`, growth (3,3,8,3), from the ε/δ relations as printed:
/// `[e1_l, e3_ijk] = ε_ljk e4_i − δ_il ε_rjk e4_r`.
pub fn m4_prime_printed() -> Gnla {
    m4_prime_with(false).with_name("m4'(printed)")
}

/// `m′₄` with the trace correction in equivariant form:
/// `[e1_l, e3_ijk] = ¾ ε_ljk e4_i − ¼ ε_ijk e4_l`.
pub fn m4_prime() -> Gnla {
    m4_prime_with(true)
}

fn m4_prime_with(equivariant: bool) -> Gnla {
    let mut e: Vec<Entry> = Vec::new();
    let lift = |layer: usize, v: Vec<(usize, i64)>| v.into_iter().map(|(p, c)| ((layer, p), q(c))).collect::<Vec<_>>();
    let liftq = |v: Vec<Rational>| {
        v.into_iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(c)).map(|(r, c)| ((4, r), c)).collect::<Vec<_>>()
    };
    for i in 0..3 {
        for j in i + 1..3 {
            e.push(((1, i), (1, j), lift(2, e2(i, j))));
        }
    }
    let g2 = [(0, 1), (0, 2), (1, 2)];
    for i in 0..3 {
        for (b, &(j, k)) in g2.iter().enumerate() {
            e.push(((1, i), (2, b), lift(3, e3(i, j, k))));
        }
    }
    for l in 0..3 {
        for (b, &(i, j, k)) in M4P_G3.iter().enumerate() {
            let mut v = vec![q(0); 3];
            if equivariant {
                v[i] += ratio(3 * epsilon(l, j, k), 4);
                v[l] -= ratio(epsilon(i, j, k), 4);
            } else {
                v[i] += q(epsilon(l, j, k));
                if i == l {
                    for (r, c) in v.iter_mut().enumerate() {
                        *c -= q(epsilon(r, j, k));
                    }
                }
            }
            e.push(((1, l), (3, b), liftq(v)));
        }
    }
    for (a, &(i, j)) in g2.iter().enumerate() {
        for (b, &(k, l)) in g2.iter().enumerate().skip(a + 1) {
            let mut v = [0i64; 3];
            v[j] += epsilon(i, k, l);
            v[i] -= epsilon(j, k, l);
            let val = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(r, &c)| (r, c)).collect();
            e.push(((2, a), (2, b), lift(4, val)));
        }
    }
    Gnla::from_layer_brackets("m4'", vec![3, 3, 8, 3], &e)
}

/// `f_s(n)` modulo the `gl(n)`-isotypic submodule of the given highest
/// weight in its top layer.
pub fn free_quotient(n: usize, s: usize, weight: &[i64]) -> Result<Gnla, GnlaError> {
    let f = free_truncated(n, s)?;
    quotient_isotypic(&f, weight)
}

/// Quotient of the top layer by an isotypic `gl(n)` component.
pub fn quotient_isotypic(m: &Gnla, weight: &[i64]) -> Result<Gnla, GnlaError> {
    let s = m.depth();
    let h = isotypic_submodule(m, s, weight).ok_or_else(|| GnlaError::Spec("gl(n) does not act".into()))?;
    let mut ideal = GradedSubspace::zero(s);
    ideal.layers[s - 1] = h;
    m.quotient(&ideal)
}

/// `f₅(2)` with `Γ₃` removed from `g₋₅`: growth (2,1,2,3,2).
pub fn m5_prime_quotient() -> Gnla {
    free_quotient(2, 5, &[4, 1]).expect("gl(2) acts on f5(2)").with_name("f5(2)/G3")
}

/// `f₅(2)` with `Γ₁` removed from `g₋₅`: growth (2,1,2,3,4).
pub fn m5_double_prime_quotient() -> Gnla {
    free_quotient(2, 5, &[3, 2]).expect("gl(2) acts on f5(2)").with_name("f5(2)/G1")
}

/// `m″₄ = f₄(3)/Γ_{π₁}`: growth (3,3,8,15).
pub fn m4_double_prime() -> Gnla {
    free_quotient(3, 4, &[2, 1, 1]).expect("gl(3) acts on f4(3)").with_name("m4''")
}

/// Maximal extension of `m′₅`; its `g₋₆` is the single `Γ₀`.
pub fn m6_prime() -> Gnla {
    maximal_extension(&m5_prime_quotient()).expect("provenance attached").with_name("m6'")
}

/// Maximal extension of `m″₅`, with `g₋₆ ⊂ Γ₂ + Γ₄`.
pub fn m6_double_prime() -> Gnla {
    maximal_extension(&m5_double_prime_quotient()).expect("provenance attached").with_name("m6''")
}

/// Negative nilradical for a single crossed node.
pub fn m_parabolic(series: Series, rank: usize, node: usize) -> Gnla {
    negative_nilradical(&parabolic_grading(series, rank, &[node]).expect("valid node"))
}

/// Names accepted by [`fixture`].
pub const NAMES: &[&str] = &[
    "heis3",
    "m4",
    "m5prime",
    "m5dprime",
    "m5prime_q",
    "m5dprime_q",
    "m4prime",
    "m4dprime",
    "m6prime",
    "m6dprime",
    "m4prime_printed",
    "f2_3",
    "f2_4",
    "f3_2",
    "f4_2",
    "f3_3",
    "f4_3",
    "mI_G2_1",
    "mI_G2_2",
    "mI_B3_3",
    "mI_B4_4",
    "mI_E6_2",
    "mI_E7_2",
    "mI_E8_2",
    "mI_E8_1",
    "mI_E8_8",
];

pub fn fixture(name: &str) -> Option<Gnla> {
    let free = |n, s| free_truncated(n, s).expect("small free algebra");
    Some(match name {
        "heis3" => heisenberg(1).with_name("heis(3)"),
        "m4" => m4(),
        "m5prime" => m5_prime(),
        "m5dprime" => m5_double_prime(),
        "m5prime_q" => m5_prime_quotient(),
        "m5dprime_q" => m5_double_prime_quotient(),
        "m4prime" => m4_prime(),
        "m4dprime" => m4_double_prime(),
        "m6prime" => m6_prime(),
        "m6dprime" => m6_double_prime(),
        "m4prime_printed" => m4_prime_printed(),
        "f2_3" => free(3, 2),
        "f2_4" => free(4, 2),
        "f3_2" => free(2, 3),
        "f4_2" => free(2, 4),
        "f3_3" => free(3, 3),
        "f4_3" => free(3, 4),
        "mI_G2_1" => m_parabolic(Series::G, 2, 1),
        "mI_G2_2" => m_parabolic(Series::G, 2, 2),
        "mI_B3_3" => m_parabolic(Series::B, 3, 3),
        "mI_B4_4" => m_parabolic(Series::B, 4, 4),
        "mI_E6_2" => m_parabolic(Series::E, 6, 2),
        "mI_E7_2" => m_parabolic(Series::E, 7, 2),
        "mI_E8_2" => m_parabolic(Series::E, 8, 2),
        "mI_E8_1" => m_parabolic(Series::E, 8, 1),
        "mI_E8_8" => m_parabolic(Series::E, 8, 8),
        _ => return None,
    })
}

/// Parabolic data behind an `mI_*` fixture name.
pub fn parabolic_of(name: &str) -> Option<(Series, usize, usize)> {
    let rest = name.strip_prefix("mI_")?;
    let (ty, node) = rest.split_once('_')?;
    let series = Series::from_letter(ty.chars().next()?)?;
    Some((series, ty[1..].parse().ok()?, node.parse().ok()?))
}
