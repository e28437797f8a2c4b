use num_traits::Zero;
use tanaka::exactla::{rat, Rational};
use tanaka::gnla::Gnla;

/// Rank by plain Gaussian elimination on dense rational rows.
pub fn dense_rank(mut rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / &pivot;
                for j in c..cols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim g₁` from the Leibniz rule written out densely. A degree-one
/// element sends `a ∈ g₋₁` to a grade-preserving endomorphism `D_a` that is
/// a derivation, and `b ∈ g₋ⱼ` (`j ≥ 2`) to `φ(b) ∈ g₋ⱼ₊₁`, subject to
/// `φ[a,b] = [φ a, b] + [a, φ b]`.
pub fn naive_g1(m: &Gnla) -> usize {
    let n = m.total_dim();
    let s = m.depth();
    let d1 = m.dim(1);
    // unknown index of (D_a)_{y,x}: coefficient of y in D_a(x), same layer
    let mut var = std::collections::HashMap::new();
    for a in 0..d1 {
        for x in 0..n {
            for y in m.layer_range(m.degree(x)) {
                let id = var.len();
                var.insert((0usize, a, x, y), id);
            }
        }
    }
    // unknown index of φ(b)_y for b ∈ g₋ⱼ, j ≥ 2, y ∈ g₋ⱼ₊₁
    for b in m.dim(1)..n {
        for y in m.layer_range(m.degree(b) - 1) {
            let id = var.len();
            var.insert((1usize, 0, b, y), id);
        }
    }
    let nv = var.len();
    let bracket = |x: usize, y: usize| m.bracket_basis(x, y);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // D_a is a derivation: D[x,y] - [Dx,y] - [x,Dy] = 0, coordinate z
    for a in 0..d1 {
        for x in 0..n {
            for y in x + 1..n {
                if m.degree(x) + m.degree(y) > s {
                    continue;
                }
                let mut eq: std::collections::BTreeMap<usize, Vec<Rational>> = Default::default();
                let xy = bracket(x, y);
                for (w, c) in xy.iter() {
                    for z in m.layer_range(m.degree(w)) {
                        eq.entry(z).or_insert_with(|| vec![rat(0); nv])[var[&(0, a, w, z)]] += c;
                    }
                }
                for xp in m.layer_range(m.degree(x)) {
                    for (z, c) in bracket(xp, y).iter() {
                        eq.entry(z).or_insert_with(|| vec![rat(0); nv])[var[&(0, a, x, xp)]] -= c;
                    }
                }
                for yp in m.layer_range(m.degree(y)) {
                    for (z, c) in bracket(x, yp).iter() {
                        eq.entry(z).or_insert_with(|| vec![rat(0); nv])[var[&(0, a, y, yp)]] -= c;
                    }
                }
                rows.extend(eq.into_values());
            }
        }
    }
    // φ[a,b] − [φa, b] − [a, φb] = 0 on every basis pair
    for a in 0..n {
        for b in a + 1..n {
            let (i, j) = (m.degree(a), m.degree(b));
            if i + j > s + 1 {
                continue;
            }
            let mut eq: std::collections::BTreeMap<usize, Vec<Rational>> = Default::default();
            let mut add = |z: usize, v: usize, c: &Rational| {
                eq.entry(z).or_insert_with(|| vec![rat(0); nv])[v] += c;
            };
            // φ[a,b]; the bracket lies in g₋₍ᵢ₊ⱼ₎ (zero beyond the depth)
            if i + j <= s {
                for (w, c) in bracket(a, b).iter() {
                    // φ(w) is a vector in g₋₍ᵢ₊ⱼ₋₁₎ for i + j ≥ 2
                    for z in m.layer_range(i + j - 1) {
                        add(z, var[&(1, 0, w, z)], c);
                    }
                }
            }
            // −[φa, b]
            if i == 1 {
                // [D_a, b] = D_a b
                for z in m.layer_range(j) {
                    add(z, var[&(0, a, b, z)], &rat(-1));
                }
            } else {
                for ap in m.layer_range(i - 1) {
                    for (z, c) in bracket(ap, b).iter() {
                        add(z, var[&(1, 0, a, ap)], &-c);
                    }
                }
            }
            // −[a, φb]
            if j == 1 {
                // [a, D_b] = −D_b a
                for z in m.layer_range(i) {
                    add(z, var[&(0, b, a, z)], &rat(1));
                }
            } else {
                for bp in m.layer_range(j - 1) {
                    for (z, c) in bracket(a, bp).iter() {
                        add(z, var[&(1, 0, b, bp)], &-c);
                    }
                }
            }
            rows.extend(eq.into_values());
        }
    }
    nv - dense_rank(rows, nv)
}

