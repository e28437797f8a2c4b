//! The algebras given by explicit structure constants: the common
//! relations of depth four, the two depth-five algebras on two generators,
//! and the depth-four algebra on three generators with its ε relations.
//!
//! ```text
//! cargo run --example explicit_algebras
//! ```

use tanaka::fixtures::{m4, m4_prime, m4_prime_printed, m5_double_prime, m5_prime};
use tanaka::gnla::Gnla;
use tanaka::prolong::der0;

fn show(m: &Gnla) {
    let v = m.validate();
    println!(
        "{:<14} growth {:<18} jacobi {:<6} fundamental {:<5} der0 {}",
        m.name(),
        format!("{:?}", m.growth_vector()),
        if v.is_valid() { "ok" } else { "FAIL" },
        m.is_fundamental().fundamental,
        der0(m).dim()
    );
}

fn main() {
    for m in [m4(), m5_prime(), m5_double_prime(), m4_prime(), m4_prime_printed()] {
        show(&m);
    }

    println!("\nbrackets of m5' landing in g-5:");
    let m = m5_prime();
    for (&(x, y), v) in m.brackets() {
        if m.degree(x) + m.degree(y) == 5 {
            let terms: Vec<String> = v.iter().map(|(z, c)| format!("{c} {}", m.basis_label(z))).collect();
            println!("  [{}, {}] = {}", m.basis_label(x), m.basis_label(y), terms.join(" + "));
        }
    }
}
