//! Writes the fixture corpus as spec files.
//!
//! ```text
//! cargo run --example export_fixtures [DIR]
//! ```
//!
//! Besides one `<name>.json` per named fixture, `DIR` gets `f5_2.json`
//! with two ideal files that cut it down to the two quotients of depth five,
//! and a `g0` file holding only the grading element of `heis(3)`.

use std::path::PathBuf;

use tanaka::fixtures::{fixture, NAMES};
use tanaka::freelie::free_truncated;
use tanaka::gnla::{derivations_to_json, grading_derivation, isotypic_submodule, subspace_to_json, GradedSubspace, NamedDerivation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    for name in NAMES {
        let m = fixture(name).expect("listed fixture");
        std::fs::write(dir.join(format!("{name}.json")), m.to_json() + "\n")?;
        println!("{name:<16} {:?}", m.growth_vector());
    }

    let f = free_truncated(2, 5)?;
    std::fs::write(dir.join("f5_2.json"), f.to_json() + "\n")?;
    for (label, weight) in [("G3", [4, 1]), ("G1", [3, 2])] {
        let mut h = GradedSubspace::zero(5);
        h.layers[4] = isotypic_submodule(&f, 5, &weight).expect("gl(2) acts");
        std::fs::write(dir.join(format!("ideal_f5_2_{label}.json")), subspace_to_json(&h) + "\n")?;
    }

    let heis = fixture("heis3").unwrap();
    let z = NamedDerivation { name: "Z".into(), derivation: grading_derivation(&heis) };
    std::fs::write(dir.join("g0_heis3_grading.json"), derivations_to_json(&heis, &[z]) + "\n")?;
    println!("written to {}", dir.display());
    Ok(())
}
