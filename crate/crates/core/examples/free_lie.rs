//! Lyndon words, their standard bracketing, and the truncated free algebra.
//!
//! ```text
//! cargo run --example free_lie [N] [S]
//! ```

use tanaka::freelie::{free_truncated, lyndon_basis};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(2);
    let s = args.next().unwrap_or(5);

    for (k, words) in lyndon_basis(n, s).iter().enumerate() {
        let shown: Vec<String> = words.iter().map(|w| w.bracketed()).collect();
        println!("g-{}  ({})  {}", k + 1, words.len(), shown.join("  "));
    }

    let f = free_truncated(n, s).unwrap();
    let v = f.validate();
    println!("\n{}: growth {:?}, dim {}", f.name(), f.growth_vector(), f.total_dim());
    println!("jacobi on {} triples: {}", v.triples_checked, if v.is_valid() { "ok" } else { "FAILED" });
    println!("fundamental: {}", f.is_fundamental().fundamental);

    let x = f.index(1, 0);
    let y = f.index(2, 0);
    let b = f.bracket_basis(x, y);
    let terms: Vec<String> = b.iter().map(|(z, c)| format!("{c}·{}", f.basis_label(z))).collect();
    println!("[{}, {}] = {}", f.basis_label(x), f.basis_label(y), terms.join(" + "));
}
