//! Tanaka prolongations: the exceptional free algebras whose prolongation
//! is simple, a rigid depth-five algebra, and the Heisenberg algebra whose
//! layers never vanish.
//!
//! ```text
//! cargo run --release --example prolongation
//! ```

use tanaka::fixtures::fixture;
use tanaka::prolong::{default_max_degree, prolong, symmetry_bound, G0};

fn main() {
    for name in ["f3_2", "f2_3", "f2_4", "m5prime", "m4prime", "heis3"] {
        let m = fixture(name).unwrap();
        let p = prolong(&m, G0::Full, default_max_degree(&m)).unwrap();
        let total = symmetry_bound(&m, &p).map_or("infinite?".to_string(), |d| d.to_string());
        println!(
            "{:<10} growth {:<16} g0 {:>2}  g1.. {:<28} dim pr {}",
            m.name(),
            format!("{:?}", m.growth_vector()),
            p.g0.dim(),
            format!("{:?}", p.dims()),
            total
        );
    }
}
