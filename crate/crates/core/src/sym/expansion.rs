use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sym::{block_dimension, Character, Weight};

/// A finite sum of irreducible characters with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    blocks: Vec<usize>,
    terms: BTreeMap<Weight, u64>,
}

impl SchurExpansion {
    pub fn new(blocks: Vec<usize>) -> Self {
        SchurExpansion { blocks, terms: BTreeMap::new() }
    }

    pub fn from_terms(blocks: Vec<usize>, terms: impl IntoIterator<Item = (Weight, u64)>) -> Result<Self> {
        let mut e = SchurExpansion::new(blocks);
        for (w, m) in terms {
            if w.len() != e.blocks.iter().sum::<usize>() || !w.is_dominant_in_blocks(&e.blocks) {
                return Err(Error::invalid(alloc::format!("{w} is not a dominant weight")));
            }
            e.insert(w, m);
        }
        Ok(e)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.terms.entry(w).or_insert(0) += m;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of the highest weight.
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct irreducibles.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `Σ multiplicity × dim`.
    pub fn dimension(&self) -> BigUint {
        self.iter()
            .map(|(w, m)| block_dimension(w, &self.blocks).expect("dominant by construction") * m)
            .sum()
    }

    /// The character of the whole sum.
    pub fn character(&self) -> Character {
        let mut c = Character::new(self.blocks.clone());
        for (w, m) in self.iter() {
            let irr = Character::irreducible(self.blocks.clone(), w).expect("dominant by construction");
            c = c.sum(&irr.scaled(m));
        }
        c
    }
}

/// Expands a signed combination of monomial-symmetric functions, given by
/// its coefficients on dominant weights, into Schur functions. Repeatedly
/// removes the irreducible whose highest weight is the lexicographically
/// largest remaining weight.
pub fn expand_dominant(
    coeffs: BTreeMap<Weight, BigInt>,
    blocks: &[usize],
) -> Result<BTreeMap<Weight, BigInt>> {
    let mut rem: BTreeMap<Weight, BigInt> = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let mut out = BTreeMap::new();
    while let Some((w, c)) = rem.pop_last() {
        if !w.is_dominant_in_blocks(blocks) {
            return Err(Error::InconsistentCharacter(alloc::format!(
                "non-dominant weight {w} among dominant coefficients"
            )));
        }
        let irr = Character::irreducible(blocks.to_vec(), &w)?;
        for (v, m) in irr.dominant_terms() {
            if *v == w {
                continue;
            }
            let e = rem.entry(v.clone()).or_insert_with(BigInt::zero);
            *e -= &c * m;
            if e.is_zero() {
                rem.remove(v);
            }
        }
        out.insert(w, c);
    }
    Ok(out)
}

/// Decomposes a symmetric character into irreducibles.
pub fn schur_expand(character: &Character) -> Result<SchurExpansion> {
    if !character.is_symmetric() {
        return Err(Error::InconsistentCharacter(
            "character is not invariant under permutations within blocks".into(),
        ));
    }
    let coeffs = character
        .dominant_terms()
        .map(|(w, m)| (w.clone(), BigInt::from(m)))
        .collect();
    let signed = expand_dominant(coeffs, character.blocks())?;
    let mut out = SchurExpansion::new(character.blocks().to_vec());
    for (w, c) in signed {
        if c.is_negative() {
            return Err(Error::InconsistentCharacter(alloc::format!(
                "negative multiplicity {c} for {w} during expansion"
            )));
        }
        let m = c.to_u64().ok_or_else(|| Error::internal("multiplicity overflow"))?;
        out.insert(w, m);
    }
    Ok(out)
}
