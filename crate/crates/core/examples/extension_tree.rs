//! Builds sub-free algebras by alternating maximal extension with a
//! quotient of the new top layer, and checks rigidity of each node:
//! `der₀ = gl(n)` and `g₁ = 0`.
//!
//! ```text
//! cargo run --release --example extension_tree
//! ```

use tanaka::fixtures::quotient_isotypic;
use tanaka::freelie::{free_truncated, maximal_extension};
use tanaka::gnla::{highest_weight_vectors, weight_vectors, Gnla};
use tanaka::prolong::{prolong, G0};

fn report(m: &Gnla) {
    let p = prolong(m, G0::Full, 1).unwrap();
    let n = m.dim(1);
    println!(
        "{:<22} growth {:<22} der0 {:>3} (n² = {:>2})  g1 {}",
        m.name(),
        format!("{:?}", m.growth_vector()),
        p.g0.dim(),
        n * n,
        p.dims()[0]
    );
}

/// Highest weights of `gl(n)` occurring in the top layer, with multiplicity.
fn top_weights(m: &Gnla) -> Vec<Vec<i64>> {
    let s = m.depth();
    let mut ws = weight_vectors(m, s).expect("gl(n) acts");
    ws.sort();
    ws.dedup();
    ws.into_iter()
        .filter(|w| w.windows(2).all(|p| p[0] >= p[1]))
        .filter(|w| highest_weight_vectors(m, s, w).is_some_and(|v| !v.is_empty()))
        .collect()
}

fn main() {
    let f4 = free_truncated(2, 4).unwrap();
    report(&f4);
    let f5 = maximal_extension(&f4).unwrap();
    println!("top layer of {} has highest weights {:?}", f5.name(), top_weights(&f5));
    for w in top_weights(&f5) {
        let q = quotient_isotypic(&f5, &w).unwrap().with_name(format!("f5(2)/{w:?}"));
        report(&q);
        let e = maximal_extension(&q).unwrap();
        report(&e);
    }

    let f3 = free_truncated(3, 3).unwrap();
    report(&f3);
    let f4 = maximal_extension(&f3).unwrap();
    println!("top layer of {} has highest weights {:?}", f4.name(), top_weights(&f4));
    for w in top_weights(&f4) {
        let q = quotient_isotypic(&f4, &w).unwrap().with_name(format!("f4(3)/{w:?}"));
        report(&q);
    }
}
