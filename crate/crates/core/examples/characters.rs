//! Weights and characters: Weyl dimensions, Freudenthal multiplicities,
//! tensor and exterior powers, and decomposition into irreducibles.
//!
//! ```text
//! cargo run --release --example characters
//! ```

use tanaka::rootsys::{
    build_root_system, exterior_square_weights, free_lie_module_weights, tensor_weights, RootSystem,
    Series, Weight,
};

fn pi(rank: usize, terms: &[(usize, i64)]) -> Weight {
    let mut v = vec![0; rank];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    Weight::new(v)
}

fn irrep(rs: &RootSystem, w: &Weight) -> tanaka::rootsys::WeightMultiset {
    rs.freudenthal_weights(w).unwrap()
}

fn main() {
    let g2 = build_root_system(Series::G, 2).unwrap();
    for w in [pi(2, &[(1, 1)]), pi(2, &[(2, 1)]), pi(2, &[(1, 1), (2, 1)])] {
        let chi = irrep(&g2, &w);
        println!("G2 {:<8} dim {:>3}, {} distinct weights", g2.format_weight(&w), g2.weyl_dim(&w).unwrap(), chi.distinct());
    }

    // free layers of gl(n) modules
    for n in 2..=5usize {
        let rs = build_root_system(Series::A, n - 1).unwrap();
        let v = irrep(&rs, &pi(n - 1, &[(1, 1)]));
        for k in 2..=5 {
            let layer = free_lie_module_weights(&rs, &v, k).unwrap();
            println!("n={n} g-{k} = {}", rs.format_irrep_sum(&rs.decompose(&layer).unwrap()));
        }
    }

    let a3 = build_root_system(Series::A, 3).unwrap();
    let t = tensor_weights(&a3, &irrep(&a3, &pi(3, &[(1, 1)])), &irrep(&a3, &pi(3, &[(1, 1), (2, 1)]))).unwrap();
    println!("\nA3: Γ[π1] ⊗ Γ[π1+π2] = {}", a3.format_irrep_sum(&a3.decompose(&t).unwrap()));

    let d7 = build_root_system(Series::D, 7).unwrap();
    let l2 = exterior_square_weights(&d7, &irrep(&d7, &pi(7, &[(7, 1)]))).unwrap();
    println!("D7: Λ²Γ[π7] = {}", d7.format_irrep_sum(&d7.decompose(&l2).unwrap()));
}
