//! Gradings of simple Lie algebras by one crossed node whose grade-zero
//! part is `gl(n)`, with their layers as Levi modules.
//!
//! ```text
//! cargo run --release --example parabolic_table
//! ```

use tanaka::parabolic::{layer_decomposition, parabolic_grading, ParabolicGrading};
use tanaka::rootsys::Series;

fn row(pg: &ParabolicGrading) {
    let lrs = pg.levi_root_system();
    let layers: Vec<String> =
        (1..=pg.depth()).map(|k| lrs.format_irrep_sum(&layer_decomposition(pg, k).unwrap())).collect();
    let g0 = pg.gl_rank().map_or_else(|| format!("{} + center", pg.levi_type()), |n| format!("gl({n})"));
    println!(
        "{:<4} {{{}}}  growth {:<14} g0 {:<14} {}",
        pg.algebra_name(),
        pg.crossed()[0],
        format!("{:?}", pg.growth_vector()),
        g0,
        layers.join(" | ")
    );
}

fn main() {
    println!("single crosses with g0 = gl(n) and depth > 1:");
    let all = [(Series::B, 2), (Series::B, 3), (Series::B, 4), (Series::C, 3), (Series::D, 4), (Series::G, 2), (Series::F, 4), (Series::E, 6), (Series::E, 7), (Series::E, 8)];
    for (s, r) in all {
        for i in 1..=r {
            let pg = parabolic_grading(s, r, &[i]).unwrap();
            if pg.gl_rank().is_some() && pg.depth() > 1 {
                row(&pg);
            }
        }
    }
    println!("\nother rows:");
    for (s, r, i) in [(Series::G, 2, 2), (Series::E, 6, 2), (Series::E, 8, 1), (Series::E, 8, 8), (Series::F, 4, 1), (Series::F, 4, 4)] {
        row(&parabolic_grading(s, r, &[i]).unwrap());
    }
}
