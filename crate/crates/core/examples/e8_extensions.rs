//! Extensions of the E8 gradings crossed at nodes 2, 1 and 8.
//!
//! For `m = g₋₂ ⊕ g₋₁` with `g₋₂` a summand of `Λ²g₋₁`, the candidates
//! for `g₋₃` are the summands of `g₋₁ ⊗ g₋₂` outside `Λ³g₋₁`. The last
//! column is the dimension of the new layer forced by the Jacobi identity
//! on the actual nilradical truncated to depth two.
//!
//! ```text
//! cargo run --release --example e8_extensions
//! ```

use tanaka::freelie::generic_extension_dim;
use tanaka::parabolic::{negative_nilradical, parabolic_grading};
use tanaka::rootsys::{exterior_cube_weights, exterior_square_weights, tensor_weights, Series};

fn main() {
    for node in [2, 1, 8] {
        let pg = parabolic_grading(Series::E, 8, &[node]).unwrap();
        let rs = pg.levi_root_system();
        let v = pg.levi_weights(1).unwrap();
        let l2 = rs.decompose(&exterior_square_weights(&rs, &v).unwrap()).unwrap();
        let l3 = rs.decompose(&exterior_cube_weights(&rs, &v).unwrap()).unwrap();
        println!("E8 {{{node}}}: Levi {}, g-1 = {}", pg.levi_type(), rs.format_irrep_sum(&rs.decompose(&v).unwrap()));
        println!("  Λ²g-1 = {}", rs.format_irrep_sum(&l2));
        for (w, _) in l2.iter() {
            let g2 = rs.freudenthal_weights(w).unwrap();
            let t = rs.decompose(&tensor_weights(&rs, &v, &g2).unwrap()).unwrap();
            let ext = t.saturating_sub(&l3);
            println!("  g-2 = Γ[{}]: g-1 ⊗ g-2 = {}", rs.format_weight(w), rs.format_irrep_sum(&t));
            println!("      candidates for g-3: {}", rs.format_irrep_sum(&ext));
        }
        let m2 = negative_nilradical(&pg).truncated(2);
        println!("  nilradical truncated to depth 2: new layer of dim {}", generic_extension_dim(&m2));
    }
}
