//! Layer dimensions of free Lie algebras, counted three ways.
//!
//! ```text
//! cargo run --example witt_tables
//! ```

use tanaka::freelie::{lyndon_basis, witt_dim};
use tanaka::rootsys::{build_root_system, free_lie_module_weights, Series};

fn main() {
    for (n, upto) in [(2u64, 20u32), (3, 15), (4, 12)] {
        let dims: Vec<String> = (1..=upto).map(|k| witt_dim(n, k).to_string()).collect();
        println!("n = {n}: {}", dims.join(", "));
    }

    println!("\n n  k  witt  lyndon  character");
    for n in 2..=4usize {
        let basis = lyndon_basis(n, 8);
        let rs = build_root_system(Series::A, n - 1).unwrap();
        let mut top = vec![0; n - 1];
        top[0] = 1;
        let v = rs.freudenthal_weights(&tanaka::rootsys::Weight::new(top)).unwrap();
        for k in 1..=8u32 {
            let chi = free_lie_module_weights(&rs, &v, k).unwrap().total();
            println!("{n:>2} {k:>2} {:>5} {:>7} {:>10}", witt_dim(n as u64, k), basis[k as usize - 1].len(), chi);
        }
    }
}
