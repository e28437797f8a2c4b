//! Rank-one analysis: `pr(m)` is infinite exactly when some `x ∈ g₋₁` has
//! `ad_x` of rank one, and `pr(m, g₀)` when `h₀` holds an element of rank
//! one on `g₋₁`.
//!
//! ```text
//! cargo run --release --example finite_type
//! ```

use tanaka::fixtures::fixture;
use tanaka::prolong::{ad_matrix_rank, check_g0, lie_closure, rank_one_analysis, RankOneReport};

fn show(label: &str, r: &RankOneReport) {
    print!("{label:<26} {:?} via {}", r.verdict, r.method);
    if let Some(w) = &r.witness {
        print!(", witness in {} = ({})", r.witness_space.as_deref().unwrap_or("?"), w.join(", "));
    }
    if let Some(f) = &r.witness_form {
        print!(", roots of {f}");
    }
    println!();
}

fn main() {
    for name in ["heis3", "f3_2", "f2_3", "m5prime", "mI_G2_2"] {
        let m = fixture(name).unwrap();
        let r = rank_one_analysis(&m, None, None);
        show(m.name(), &r);
        if let (Some(w), "g-1") = (r.witness_vector(), r.witness_space.as_deref().unwrap_or("")) {
            let x = tanaka::exactla::SparseVec::from_dense(&w);
            println!("{:<26} rank ad_x = {}", "", ad_matrix_rank(&m, &x));
        }
    }

    // the contact grading of G2 with its Levi factor as g0
    let m = fixture("mI_G2_2").unwrap();
    let gens: Vec<_> = m.levi_action().unwrap().generators.iter().map(|g| g.derivation.clone()).collect();
    let g0 = check_g0(&m, &lie_closure(&m, &gens).basis).unwrap();
    show("m(G2,{2}) with Levi g0", &rank_one_analysis(&m, Some(&g0), None));
}
