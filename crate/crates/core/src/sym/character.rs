use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::sym::Weight;

/// The character of a representation of `GL(b_1) × … × GL(b_m)`, stored as a
/// multiset of weights. `blocks` lists the `b_i`; weights are concatenations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    blocks: Vec<usize>,
    terms: BTreeMap<Weight, u64>,
}

impl Character {
    /// The zero character.
    pub fn new(blocks: Vec<usize>) -> Self {
        Character { blocks, terms: BTreeMap::new() }
    }

    /// The character of the trivial one-dimensional representation.
    pub fn trivial(blocks: Vec<usize>) -> Self {
        let len = blocks.iter().sum();
        let mut c = Character::new(blocks);
        c.insert(Weight::zero(len), 1);
        c
    }

    /// The standard representation of a single `GL(r)`.
    pub fn standard(r: usize) -> Self {
        let mut c = Character::new(alloc::vec![r]);
        for i in 0..r {
            c.insert(Weight::unit(r, i), 1);
        }
        c
    }

    pub fn from_terms(blocks: Vec<usize>, terms: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut c = Character::new(blocks);
        for (w, m) in terms {
            if w.len() != c.len() {
                return Err(Error::invalid(alloc::format!(
                    "weight {w} has length {}, expected {}",
                    w.len(),
                    c.len()
                )));
            }
            c.insert(w, m);
        }
        Ok(c)
    }

    /// The character of the irreducible representation with the given
    /// highest weight, dominant within each block.
    pub fn irreducible(blocks: Vec<usize>, highest: &Weight) -> Result<Self> {
        if highest.len() != blocks.iter().sum::<usize>() || !highest.is_dominant_in_blocks(&blocks) {
            return Err(Error::invalid(alloc::format!(
                "{highest} is not a dominant weight for blocks {blocks:?}"
            )));
        }
        let mut acc: Vec<(Vec<i64>, u64)> = alloc::vec![(Vec::new(), 1)];
        for part in highest.split_blocks(&blocks) {
            let block = schur_monomials(part.entries());
            let mut next = Vec::with_capacity(acc.len() * block.len());
            for (prefix, m) in &acc {
                for (w, n) in &block {
                    let mut v = prefix.clone();
                    v.extend_from_slice(w);
                    next.push((v, m * n));
                }
            }
            acc = next;
        }
        let mut c = Character::new(blocks);
        for (w, m) in acc {
            c.insert(Weight::new(w), m);
        }
        Ok(c)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Total number of coordinates.
    pub fn len(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.terms.entry(w).or_insert(0) += m;
        }
    }

    /// Removes `m` copies of `w`, failing if fewer are present.
    pub fn remove(&mut self, w: &Weight, m: u64) -> Result<()> {
        let have = self.multiplicity(w);
        if have < m {
            return Err(Error::InconsistentCharacter(alloc::format!(
                "cannot remove {m} copies of {w}: only {have} present"
            )));
        }
        if have == m {
            self.terms.remove(w);
        } else {
            self.terms.insert(w.clone(), have - m);
        }
        Ok(())
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct weights.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Dimension of the representation (total multiplicity).
    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn dual(&self) -> Character {
        Character {
            blocks: self.blocks.clone(),
            terms: self.terms.iter().map(|(w, &m)| (w.negated(), m)).collect(),
        }
    }

    pub fn sum(&self, other: &Character) -> Character {
        debug_assert_eq!(self.blocks, other.blocks);
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.insert(w.clone(), m);
        }
        out
    }

    pub fn tensor(&self, other: &Character) -> Character {
        debug_assert_eq!(self.blocks, other.blocks);
        let mut out = Character::new(self.blocks.clone());
        for (a, m) in self.iter() {
            for (b, n) in other.iter() {
                out.insert(a.add(b), m * n);
            }
        }
        out
    }

    /// Tensor with a one-dimensional character of weight `w`.
    pub fn twisted(&self, w: &Weight) -> Character {
        Character {
            blocks: self.blocks.clone(),
            terms: self.terms.iter().map(|(v, &m)| (v.add(w), m)).collect(),
        }
    }

    /// Multiplies every multiplicity by `c`.
    pub fn scaled(&self, c: u64) -> Character {
        let mut out = Character::new(self.blocks.clone());
        for (w, m) in self.iter() {
            out.insert(w.clone(), m * c);
        }
        out
    }

    /// Invariance under permuting coordinates inside each block. A multiset
    /// is invariant iff every weight has the multiplicity of its sorted form.
    pub fn is_symmetric(&self) -> bool {
        let mut seen: BTreeMap<Weight, u128> = BTreeMap::new();
        for (w, &m) in &self.terms {
            let d = w.sorted_in_blocks(&self.blocks);
            if self.multiplicity(&d) != m {
                return false;
            }
            *seen.entry(d).or_insert(0) += 1;
        }
        seen.iter().all(|(d, &count)| orbit_size(d, &self.blocks) == Some(count))
    }

    /// The dominant weights with their multiplicities.
    pub fn dominant_terms(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.iter().filter(|(w, _)| w.is_dominant_in_blocks(&self.blocks))
    }
}

/// Number of distinct block-wise permutations of `w`, if it fits in `u128`.
fn orbit_size(w: &Weight, blocks: &[usize]) -> Option<u128> {
    let mut total: u128 = 1;
    for part in w.split_blocks(blocks) {
        let mut remaining: u128 = 0;
        let e = part.entries();
        let mut i = 0;
        while i < e.len() {
            let mut j = i;
            while j < e.len() && e[j] == e[i] {
                j += 1;
            }
            for t in 1..=(j - i) as u128 {
                remaining += 1;
                total = total.checked_mul(remaining)? / t;
            }
            i = j;
        }
    }
    Some(total)
}

/// Monomials of the Schur polynomial `s_λ(x_1, …, x_r)` for a dominant
/// (possibly negative) `λ`, by Gelfand–Tsetlin branching.
pub(crate) fn schur_monomials(lambda: &[i64]) -> Vec<(Vec<i64>, u64)> {
    let r = lambda.len();
    let mut exps = alloc::vec![0i64; r];
    let mut out = BTreeMap::new();
    branch(lambda, &mut exps, &mut out);
    out.into_iter().collect()
}

fn branch(lambda: &[i64], exps: &mut [i64], out: &mut BTreeMap<Vec<i64>, u64>) {
    let r = lambda.len();
    match r {
        0 => *out.entry(exps.to_vec()).or_insert(0) += 1,
        1 => {
            exps[0] = lambda[0];
            *out.entry(exps.to_vec()).or_insert(0) += 1;
        }
        _ => {
            let total: i64 = lambda.iter().sum();
            let mut mu = alloc::vec![0i64; r - 1];
            interlace(lambda, 0, &mut mu, &mut |mu: &[i64]| {
                exps[r - 1] = total - mu.iter().sum::<i64>();
                branch(mu, exps, out);
            });
        }
    }
}

/// Calls `f` for every `μ` with `λ_i ≥ μ_i ≥ λ_{i+1}`.
fn interlace(lambda: &[i64], i: usize, mu: &mut [i64], f: &mut dyn FnMut(&[i64])) {
    if i == mu.len() {
        f(mu);
        return;
    }
    for v in lambda[i + 1]..=lambda[i] {
        mu[i] = v;
        interlace(lambda, i + 1, mu, f);
    }
}
