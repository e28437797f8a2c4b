//! JSON spec files.
//!
//! ```json
//! {"name": "heis(3)", "dims": [2, 1],
//!  "brackets": [{"left": [1, 1], "right": [1, 2], "value": [[1, "1"]]}]}
//! ```
//!
//! Positions are 1-based. A value index is either a bare position inside
//! `g₋₍ᵢ₊ⱼ₎` or an explicit `[layer, position]` pair; the writer emits the
//! bare form whenever the bracket respects the grading.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{Derivation, GnlaError, GradedSubspace, Gnla};
use crate::exactla::{format_rational, parse_rational, Rational, SparseVec};

/// `m = f_s(n) / ideal`, the ideal given in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub n: usize,
    pub s: usize,
    pub ideal: GradedSubspace,
}

impl Provenance {
    pub fn free(n: usize, s: usize) -> Self {
        Self { n, s, ideal: GradedSubspace::zero(s) }
    }

    pub fn free_dim(&self, k: usize) -> usize {
        crate::freelie::witt_dim(self.n as u64, k as u32) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedDerivation {
    pub name: String,
    pub derivation: Derivation,
}

/// Grade-zero action attached to a parabolic nilradical. `cartan` lists the
/// generators spanning the Cartan subalgebra of the Levi factor, in the
/// Levi's own node order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviAction {
    pub levi_type: String,
    pub cartan: Vec<usize>,
    pub generators: Vec<NamedDerivation>,
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug)]
#[serde(untagged)]
enum Target {
    Pair([usize; 2]),
    Bare(usize),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketFile {
    left: [usize; 2],
    right: [usize; 2],
    value: Vec<(Target, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FreeFile {
    n: usize,
    s: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProvenanceFile {
    free: FreeFile,
    ideal: Vec<Vec<Vec<(usize, String)>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    name: String,
    layers: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LeviFile {
    #[serde(rename = "type")]
    levi_type: String,
    cartan: Vec<String>,
    generators: Vec<GeneratorFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    name: String,
    dims: Vec<usize>,
    brackets: Vec<BracketFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<ProvenanceFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    levi_action: Option<LeviFile>,
}

fn spec_err(msg: impl Into<String>) -> GnlaError {
    GnlaError::Spec(msg.into())
}

fn parse_q(s: &str) -> Result<Rational, GnlaError> {
    parse_rational(s).map_err(|e| spec_err(e.to_string()))
}

fn sparse_to_file(v: &SparseVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, c)| (i + 1, format_rational(c))).collect()
}

fn sparse_from_file(entries: &[(usize, String)], dim: usize) -> Result<SparseVec, GnlaError> {
    let mut pairs = Vec::with_capacity(entries.len());
    for (i, q) in entries {
        if *i == 0 || *i > dim {
            return Err(spec_err(format!("coordinate {i} outside 1..={dim}")));
        }
        pairs.push((i - 1, parse_q(q)?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

fn derivation_to_file(m: &Gnla, name: &str, d: &Derivation) -> GeneratorFile {
    let layers = (1..=m.depth())
        .map(|k| {
            let mut out = Vec::new();
            for (col, x) in m.layer_range(k).enumerate() {
                for (y, c) in d.image(x).iter() {
                    out.push((y - m.offset(k) + 1, col + 1, format_rational(c)));
                }
            }
            out.sort_by_key(|a| (a.0, a.1));
            out
        })
        .collect();
    GeneratorFile { name: name.to_string(), layers }
}

fn derivation_from_file(m: &Gnla, g: &GeneratorFile) -> Result<Derivation, GnlaError> {
    if g.layers.len() != m.depth() {
        return Err(spec_err(format!("generator {} has {} layers", g.name, g.layers.len())));
    }
    let mut images = vec![Vec::new(); m.total_dim()];
    for (k, entries) in g.layers.iter().enumerate() {
        let k = k + 1;
        let d = m.dim(k);
        for (row, col, q) in entries {
            if *row == 0 || *row > d || *col == 0 || *col > d {
                return Err(spec_err(format!("generator {} entry outside layer {k}", g.name)));
            }
            images[m.index(k, col - 1)].push((m.index(k, row - 1), parse_q(q)?));
        }
    }
    Ok(Derivation::from_images(images.into_iter().map(SparseVec::from_pairs).collect()))
}

impl Gnla {
    fn to_file(&self) -> SpecFile {
        let mut brackets = Vec::new();
        for (&(x, y), v) in self.brackets() {
            let (i, a) = self.locate(x);
            let (j, b) = self.locate(y);
            let value = v
                .iter()
                .map(|(z, c)| {
                    let (k, p) = self.locate(z);
                    let t = if k == i + j { Target::Bare(p + 1) } else { Target::Pair([k, p + 1]) };
                    (t, format_rational(c))
                })
                .collect();
            brackets.push(BracketFile { left: [i, a + 1], right: [j, b + 1], value });
        }
        let provenance = self.provenance().map(|p| ProvenanceFile {
            free: FreeFile { n: p.n, s: p.s },
            ideal: (1..=p.s).map(|k| p.ideal.layer(k).iter().map(sparse_to_file).collect()).collect(),
        });
        let levi_action = self.levi_action().map(|a| LeviFile {
            levi_type: a.levi_type.clone(),
            cartan: a.cartan.iter().map(|&i| a.generators[i].name.clone()).collect(),
            generators: a
                .generators
                .iter()
                .map(|g| derivation_to_file(self, &g.name, &g.derivation))
                .collect(),
        });
        SpecFile { name: self.name().to_string(), dims: self.dims().to_vec(), brackets, provenance, levi_action }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("spec serializes")
    }

    /// SHA-256 of the compact canonical JSON.
    pub fn hash(&self) -> String {
        let s = serde_json::to_string(&self.to_file()).expect("spec serializes");
        hex::encode(Sha256::digest(s.as_bytes()))
    }

    pub fn from_json(text: &str) -> Result<Gnla, GnlaError> {
        let f: SpecFile = serde_json::from_str(text).map_err(|e| spec_err(e.to_string()))?;
        if f.dims.is_empty() || f.dims.contains(&0) {
            return Err(spec_err("dims must be a nonempty list of positive integers"));
        }
        let shell = Gnla::new(f.name.clone(), f.dims.clone(), BTreeMap::new());
        let s = f.dims.len();
        let pos = |p: [usize; 2], what: &str| -> Result<usize, GnlaError> {
            let [k, a] = p;
            if k == 0 || k > s || a == 0 || a > f.dims[k - 1] {
                return Err(spec_err(format!("{what} index [{k},{a}] out of range")));
            }
            Ok(shell.index(k, a - 1))
        };
        let mut brackets = BTreeMap::new();
        for b in &f.brackets {
            let x = pos(b.left, "left")?;
            let y = pos(b.right, "right")?;
            if x >= y {
                return Err(spec_err(format!(
                    "bracket pair {:?}, {:?} must be listed with the left index first",
                    b.left, b.right
                )));
            }
            let mut pairs = Vec::new();
            for (t, q) in &b.value {
                let z = match *t {
                    Target::Pair(p) => pos(p, "value")?,
                    Target::Bare(c) => pos([b.left[0] + b.right[0], c], "value")?,
                };
                pairs.push((z, parse_q(q)?));
            }
            if brackets.insert((x, y), SparseVec::from_pairs(pairs)).is_some() {
                return Err(spec_err(format!("duplicate bracket {:?}, {:?}", b.left, b.right)));
            }
        }
        let mut m = Gnla::new(f.name.clone(), f.dims.clone(), brackets);
        if let Some(p) = &f.provenance {
            if p.free.s != s || p.ideal.len() != s {
                return Err(spec_err("provenance depth differs from dims"));
            }
            let prov = Provenance::free(p.free.n, p.free.s);
            let mut layers = Vec::with_capacity(s);
            for (k, vs) in p.ideal.iter().enumerate() {
                let fd = prov.free_dim(k + 1);
                let rows = vs.iter().map(|v| sparse_from_file(v, fd)).collect::<Result<Vec<_>, _>>()?;
                let rank = crate::exactla::rank_of(fd, &rows);
                if fd - rank != f.dims[k] {
                    return Err(spec_err(format!("provenance ideal inconsistent with dims at layer {}", k + 1)));
                }
                layers.push(rows);
            }
            m = m.with_provenance(Some(Provenance { ideal: GradedSubspace { layers }, ..prov }));
        }
        if let Some(l) = &f.levi_action {
            let generators = l
                .generators
                .iter()
                .map(|g| Ok(NamedDerivation { name: g.name.clone(), derivation: derivation_from_file(&m, g)? }))
                .collect::<Result<Vec<_>, GnlaError>>()?;
            let cartan = l
                .cartan
                .iter()
                .map(|c| {
                    generators
                        .iter()
                        .position(|g| &g.name == c)
                        .ok_or_else(|| spec_err(format!("unknown cartan generator {c}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            m = m.with_levi_action(Some(LeviAction { levi_type: l.levi_type.clone(), cartan, generators }));
        }
        Ok(m)
    }
}

/// Reads a graded subspace file: `{"layers": [[[[c, "p/q"], …], …], …]}`
/// with one list of vectors per layer, coordinates 1-based.
pub fn subspace_from_json(m: &Gnla, text: &str) -> Result<GradedSubspace, GnlaError> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct SubFile {
        layers: Vec<Vec<Vec<(usize, String)>>>,
    }
    let f: SubFile = serde_json::from_str(text).map_err(|e| spec_err(e.to_string()))?;
    if f.layers.len() > m.depth() {
        return Err(spec_err("subspace has more layers than the algebra"));
    }
    let layers = f
        .layers
        .iter()
        .enumerate()
        .map(|(k, vs)| vs.iter().map(|v| sparse_from_file(v, m.dim(k + 1))).collect())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GradedSubspace { layers })
}

pub fn subspace_to_json(h: &GradedSubspace) -> String {
    #[derive(Serialize)]
    struct SubFile {
        layers: Vec<Vec<Vec<(usize, String)>>>,
    }
    let f = SubFile { layers: h.layers.iter().map(|vs| vs.iter().map(sparse_to_file).collect()).collect() };
    serde_json::to_string_pretty(&f).expect("subspace serializes")
}

/// Reads a `g₀` file, `{"generators": [{"name": …, "layers": …}, …]}`, with
/// the per-layer `(row, column, value)` matrices used by `levi_action`.
pub fn derivations_from_json(m: &Gnla, text: &str) -> Result<Vec<NamedDerivation>, GnlaError> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct G0File {
        generators: Vec<GeneratorFile>,
    }
    let f: G0File = serde_json::from_str(text).map_err(|e| spec_err(e.to_string()))?;
    f.generators
        .iter()
        .map(|g| Ok(NamedDerivation { name: g.name.clone(), derivation: derivation_from_file(m, g)? }))
        .collect()
}

pub fn derivations_to_json(m: &Gnla, ds: &[NamedDerivation]) -> String {
    #[derive(Serialize)]
    struct G0File {
        generators: Vec<GeneratorFile>,
    }
    let f = G0File { generators: ds.iter().map(|d| derivation_to_file(m, &d.name, &d.derivation)).collect() };
    serde_json::to_string_pretty(&f).expect("g0 serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnla::heisenberg;

    #[test]
    fn round_trip() {
        let h = heisenberg(1);
        let text = h.to_json();
        assert!(text.contains("\"value\""));
        let back = Gnla::from_json(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.hash(), h.hash());
    }

    #[test]
    fn rejects_bad_specs() {
        let unknown = r#"{"name":"x","dims":[2,1],"brackets":[],"extra":1}"#;
        assert!(Gnla::from_json(unknown).is_err());
        let reversed = r#"{"name":"x","dims":[2,1],"brackets":[{"left":[1,2],"right":[1,1],"value":[[1,"1"]]}]}"#;
        assert!(Gnla::from_json(reversed).is_err());
        let range = r#"{"name":"x","dims":[2,1],"brackets":[{"left":[1,1],"right":[1,2],"value":[[2,"1"]]}]}"#;
        assert!(Gnla::from_json(range).is_err());
        let badq = r#"{"name":"x","dims":[2,1],"brackets":[{"left":[1,1],"right":[1,2],"value":[[1,"1/0"]]}]}"#;
        assert!(Gnla::from_json(badq).is_err());
    }

    #[test]
    fn explicit_layer_targets() {
        let text = r#"{"name":"x","dims":[2,1],"brackets":[{"left":[1,1],"right":[2,1],"value":[[[1,2],"-1/2"]]}]}"#;
        let m = Gnla::from_json(text).unwrap();
        assert!(!m.validate().grading_ok);
        assert!(m.to_json().contains("[\n"));
    }

    #[test]
    fn g0_file_round_trip() {
        let h = heisenberg(1);
        let z = NamedDerivation { name: "z".into(), derivation: crate::gnla::grading_derivation(&h) };
        let text = derivations_to_json(&h, std::slice::from_ref(&z));
        let back = derivations_from_json(&h, &text).unwrap();
        assert_eq!(back, vec![z]);
        assert!(derivations_from_json(&h, r#"{"generators":[{"name":"x","layers":[[]]}]}"#).is_err());
    }
}
