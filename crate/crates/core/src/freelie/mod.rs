//! Truncated free graded nilpotent Lie algebras on Lyndon bases.

use std::collections::{BTreeMap, HashMap};

use crate::exactla::{rat, SparseVec};
use crate::gnla::{GnlaError, GradedSubspace, Gnla, Provenance};
use crate::rootsys::mobius;

/// Default cap on the total dimension of constructed free algebras.
pub const DEFAULT_DIM_CAP: usize = 5000;

/// `d_k = (1/k) Σ_{t|k} μ(t) n^{k/t}`.
pub fn witt_dim(n: u64, k: u32) -> u128 {
    assert!(k >= 1, "degree must be positive");
    let mut acc: i128 = 0;
    for t in 1..=k {
        if k.is_multiple_of(t) {
            acc += mobius(t as u64) as i128 * (n as i128).pow(k / t);
        }
    }
    (acc / k as i128) as u128
}

/// A Lyndon word over `1..=n` with its standard factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord {
    letters: Vec<u8>,
}

impl LyndonWord {
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_lyndon(w: &[u8]) -> bool {
        !w.is_empty() && (1..w.len()).all(|i| w < &w[i..] && w[..] < [&w[i..], &w[..i]].concat()[..])
    }

    /// `(u, v)` with `v` the longest proper Lyndon suffix; `None` for letters.
    pub fn factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.letters.len() < 2 {
            return None;
        }
        let cut = (1..self.letters.len()).find(|&i| Self::is_lyndon(&self.letters[i..]))?;
        Some((
            LyndonWord { letters: self.letters[..cut].to_vec() },
            LyndonWord { letters: self.letters[cut..].to_vec() },
        ))
    }

    /// Bracketed form such as `[1,[1,2]]`.
    pub fn bracketed(&self) -> String {
        match self.factorization() {
            None => self.letters[0].to_string(),
            Some((u, v)) => format!("[{},{}]", u.bracketed(), v.bracketed()),
        }
    }
}

impl std::fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Lyndon words of length `1..=s`, per degree, lexicographically sorted.
/// Generated with Duval's successor algorithm.
pub fn lyndon_basis(n: usize, s: usize) -> Vec<Vec<LyndonWord>> {
    assert!(n >= 1 && n <= u8::MAX as usize);
    let mut out = vec![Vec::new(); s];
    if s == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![1];
    loop {
        out[w.len() - 1].push(LyndonWord { letters: w.clone() });
        let m = w.len();
        while w.len() < s {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(n as u8)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    for layer in &mut out {
        layer.sort();
    }
    out
}

struct Rewriter {
    s: usize,
    words: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    split: Vec<Option<(usize, usize)>>,
    memo: HashMap<(usize, usize), BTreeMap<usize, i128>>,
}

impl Rewriter {
    fn new(n: usize, s: usize) -> Self {
        let basis = lyndon_basis(n, s);
        let words: Vec<Vec<u8>> = basis.into_iter().flatten().map(|w| w.letters).collect();
        let index: HashMap<Vec<u8>, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let split = words
            .iter()
            .map(|w| {
                LyndonWord { letters: w.clone() }
                    .factorization()
                    .map(|(u, v)| (index[&u.letters], index[&v.letters]))
            })
            .collect();
        Self { s, words, index, split, memo: HashMap::new() }
    }

    fn combine(acc: &mut BTreeMap<usize, i128>, v: &BTreeMap<usize, i128>, c: i128) {
        for (&i, &x) in v {
            let e = acc.entry(i).or_insert(0);
            *e += c * x;
            if *e == 0 {
                acc.remove(&i);
            }
        }
    }

    fn bracket_with(&mut self, a: usize, v: &BTreeMap<usize, i128>) -> BTreeMap<usize, i128> {
        let mut out = BTreeMap::new();
        for (&b, &c) in v {
            let r = self.bracket(a, b);
            Self::combine(&mut out, &r, c);
        }
        out
    }

    /// `[P(a), P(b)]` in the Lyndon basis, truncated above degree `s`.
    fn bracket(&mut self, a: usize, b: usize) -> BTreeMap<usize, i128> {
        if a == b || self.words[a].len() + self.words[b].len() > self.s {
            return BTreeMap::new();
        }
        if self.words[a] > self.words[b] {
            let mut r = self.bracket(b, a);
            r.values_mut().for_each(|c| *c = -*c);
            return r;
        }
        if let Some(r) = self.memo.get(&(a, b)) {
            return r.clone();
        }
        let result = match self.split[a] {
            Some((u1, u2)) if self.words[u2] < self.words[b] => {
                // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
                let t = self.bracket(u2, b);
                let mut r = self.bracket_with(u1, &t);
                let t = self.bracket(u1, b);
                let r2 = self.bracket_with(u2, &t);
                Self::combine(&mut r, &r2, -1);
                r
            }
            _ => {
                let uv = [self.words[a].as_slice(), self.words[b].as_slice()].concat();
                BTreeMap::from([(self.index[&uv], 1)])
            }
        };
        self.memo.insert((a, b), result.clone());
        result
    }
}

/// `f_s(n)` with the default dimension cap.
pub fn free_truncated(n: usize, s: usize) -> Result<Gnla, GnlaError> {
    free_truncated_capped(n, s, DEFAULT_DIM_CAP)
}

pub fn free_truncated_capped(n: usize, s: usize, cap: usize) -> Result<Gnla, GnlaError> {
    assert!(n >= 2 && s >= 1, "need n ≥ 2 generators and depth s ≥ 1");
    let dims: Vec<usize> = (1..=s).map(|k| witt_dim(n as u64, k as u32) as usize).collect();
    let total: usize = dims.iter().sum();
    if total > cap {
        return Err(GnlaError::TooLarge { dim: total, cap });
    }
    let mut rw = Rewriter::new(n, s);
    let mut brackets = BTreeMap::new();
    for x in 0..total {
        for y in x + 1..total {
            if rw.words[x].len() + rw.words[y].len() > s {
                break;
            }
            let r = rw.bracket(x, y);
            if !r.is_empty() {
                brackets.insert((x, y), SparseVec::from_pairs(r.into_iter().map(|(i, c)| (i, rat(c as i64)))));
            }
        }
    }
    Ok(Gnla::new(format!("f{s}({n})"), dims, brackets).with_provenance(Some(Provenance::free(n, s))))
}

/// `f_{s+1}(n)/ĥ` for `m = f_s(n)/h`, where `ĥ` is the ideal generated by
/// `h` inside `f_{s+1}(n)`.
pub fn maximal_extension(m: &Gnla) -> Result<Gnla, GnlaError> {
    maximal_extension_capped(m, DEFAULT_DIM_CAP)
}

pub fn maximal_extension_capped(m: &Gnla, cap: usize) -> Result<Gnla, GnlaError> {
    let p = m.provenance().ok_or(GnlaError::NoProvenance)?;
    if p.s != m.depth() {
        return Err(GnlaError::NoProvenance);
    }
    let s = p.s;
    let f = free_truncated_capped(p.n, s + 1, cap)?;
    let mut layers: Vec<Vec<SparseVec>> = (1..=s).map(|k| p.ideal.layer(k).to_vec()).collect();
    let mut top = Vec::new();
    for j in 2..=s {
        let i = s + 1 - j;
        for h in p.ideal.layer(j) {
            let g = f.to_global(j, h);
            for x in f.layer_range(i) {
                let w = f.bracket(&SparseVec::unit(x), &g);
                if !w.is_zero() {
                    top.push(f.to_local(s + 1, &w));
                }
            }
        }
    }
    layers.push(top);
    let q = f.quotient(&GradedSubspace { layers })?;
    Ok(q.with_name(format!("{}+", m.name())))
}

/// New layer of the maximal extension of an arbitrary GNLA: the space of
/// formal brackets `[a, b]` with `deg a + deg b = s + 1` modulo the Jacobi
/// identity, returned as its dimension.
pub fn generic_extension_dim(m: &Gnla) -> usize {
    let s = m.depth();
    // symbols: pairs (x, y) with x < y and deg x + deg y = s + 1
    let mut sym: HashMap<(usize, usize), usize> = HashMap::new();
    let n = m.total_dim();
    for x in 0..n {
        for y in x + 1..n {
            if m.degree(x) + m.degree(y) == s + 1 {
                let id = sym.len();
                sym.insert((x, y), id);
            }
        }
    }
    // [u, v] with u, v vectors, expanded into symbols
    let expand = |u: usize, v: &SparseVec, acc: &mut Vec<(usize, crate::exactla::Rational)>, sign: i64| {
        for (y, c) in v.iter() {
            if y == u {
                continue;
            }
            let (key, sg) = if u < y { ((u, y), sign) } else { ((y, u), -sign) };
            if let Some(&id) = sym.get(&key) {
                acc.push((id, c * rat(sg)));
            }
        }
    };
    let mut ech = crate::exactla::Echelon::new(sym.len());
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                if m.degree(x) + m.degree(y) + m.degree(z) != s + 1 {
                    continue;
                }
                let mut acc = Vec::new();
                expand(x, &m.bracket_basis(y, z), &mut acc, 1);
                expand(y, &m.bracket_basis(z, x), &mut acc, 1);
                expand(z, &m.bracket_basis(x, y), &mut acc, 1);
                ech.insert(&SparseVec::from_pairs(acc));
            }
        }
    }
    sym.len() - ech.rank()
}
