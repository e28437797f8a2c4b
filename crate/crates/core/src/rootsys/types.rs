use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Weight in the fundamental-weight basis: `ω = Σ p_i π_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, t: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * t).collect())
    }
}

impl fmt::Display for Weight {
    /// `π1+2π3`, or `0` for the zero weight.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &p) in self.0.iter().enumerate() {
            if p == 0 {
                continue;
            }
            if !first && p > 0 {
                write!(f, "+")?;
            }
            match p {
                1 => write!(f, "π{}", i + 1)?,
                -1 => write!(f, "-π{}", i + 1)?,
                _ => write!(f, "{}π{}", p, i + 1)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Finite multiset of weights with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiset {
    rank: usize,
    map: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new(rank: usize) -> Self {
        Self { rank, map: BTreeMap::new() }
    }

    /// The trivial one-dimensional character `{0 ↦ 1}`.
    pub fn trivial(rank: usize) -> Self {
        let mut m = Self::new(rank);
        m.insert(Weight::new(vec![0; rank]), 1);
        m
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(rank: usize, ws: I) -> Self {
        let mut m = Self::new(rank);
        for w in ws {
            m.insert(w, 1);
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insert(&mut self, w: Weight, mult: u64) {
        assert_eq!(w.len(), self.rank, "weight rank");
        if mult > 0 {
            *self.map.entry(w).or_insert(0) += mult;
        }
    }

    pub fn add_scaled(&mut self, other: &WeightMultiset, t: u64) {
        for (w, m) in other.iter() {
            self.insert(w.clone(), m * t);
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.map.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity (the dimension of the module).
    pub fn total(&self) -> u64 {
        self.map.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.map.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> + '_ {
        self.map.iter().map(|(w, m)| (w, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Multiset difference; `None` if some multiplicity would go negative.
    pub fn checked_sub(&self, other: &WeightMultiset) -> Option<WeightMultiset> {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            let e = out.map.get_mut(w)?;
            *e = e.checked_sub(m)?;
            if *e == 0 {
                out.map.remove(w);
            }
        }
        Some(out)
    }
}

/// Formal sum `Σ m_ω Γ_ω` over dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IrrepSum {
    rank: usize,
    map: BTreeMap<Weight, u64>,
}

impl IrrepSum {
    pub fn new(rank: usize) -> Self {
        Self { rank, map: BTreeMap::new() }
    }

    /// Builds a sum from `(coords, multiplicity)` pairs.
    pub fn from_terms(rank: usize, terms: &[(&[i64], u64)]) -> Self {
        let mut s = Self::new(rank);
        for (c, m) in terms {
            s.add(Weight::new(c.to_vec()), *m);
        }
        s
    }

    pub fn add(&mut self, w: Weight, mult: u64) {
        assert!(w.is_dominant(), "irreducible summands have dominant highest weights");
        assert_eq!(w.len(), self.rank, "weight rank");
        if mult > 0 {
            *self.map.entry(w).or_insert(0) += mult;
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.map.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> + '_ {
        self.map.iter().map(|(w, m)| (w, *m))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn merge(&self, other: &IrrepSum) -> IrrepSum {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.add(w.clone(), m);
        }
        out
    }

    /// Multiplicity-wise truncated difference `max(0, a_ω − b_ω)`.
    pub fn saturating_sub(&self, other: &IrrepSum) -> IrrepSum {
        let mut out = IrrepSum::new(self.rank);
        for (w, m) in self.iter() {
            out.add(w.clone(), m.saturating_sub(other.get(w)));
        }
        out
    }

    /// Multiplicity-wise minimum.
    pub fn intersect(&self, other: &IrrepSum) -> IrrepSum {
        let mut out = IrrepSum::new(self.rank);
        for (w, m) in self.iter() {
            out.add(w.clone(), m.min(other.get(w)));
        }
        out
    }

    /// True when every summand of `self` occurs in `other` at least as often.
    pub fn is_submodule_of(&self, other: &IrrepSum) -> bool {
        self.iter().all(|(w, m)| other.get(w) >= m)
    }
}

impl fmt::Display for IrrepSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(w, m)| if m == 1 { format!("Γ[{w}]") } else { format!("{m}Γ[{w}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_display() {
        assert_eq!(Weight::new(vec![1, 0, 2]).to_string(), "π1+2π3");
        assert_eq!(Weight::new(vec![0, 0]).to_string(), "0");
        assert_eq!(Weight::new(vec![-1, 1]).to_string(), "-π1+π2");
    }

    #[test]
    fn irrep_sum_ops() {
        let a = IrrepSum::from_terms(2, &[(&[1, 0], 2), (&[0, 1], 1)]);
        let b = IrrepSum::from_terms(2, &[(&[1, 0], 1), (&[2, 0], 1)]);
        assert_eq!(a.saturating_sub(&b), IrrepSum::from_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(a.intersect(&b), IrrepSum::from_terms(2, &[(&[1, 0], 1)]));
        assert!(IrrepSum::from_terms(2, &[(&[1, 0], 1)]).is_submodule_of(&a));
        assert!(!b.is_submodule_of(&a));
    }
}
