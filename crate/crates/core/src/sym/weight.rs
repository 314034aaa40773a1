use alloc::vec::Vec;
use core::fmt;

use crate::sym::Partition;

/// An integer weight of fixed length. Used both for highest weights
/// (dominant, i.e. weakly decreasing) and for raw character monomials.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(len: usize) -> Self {
        Weight(alloc::vec![0; len])
    }

    pub fn constant(len: usize, value: i64) -> Self {
        Weight(alloc::vec![value; len])
    }

    /// The `i`-th unit vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = alloc::vec![0; len];
        v[i] = 1;
        Weight(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominant within each consecutive block of the given sizes.
    pub fn is_dominant_in_blocks(&self, blocks: &[usize]) -> bool {
        let mut start = 0;
        blocks.iter().all(|&b| {
            let ok = self.0[start..start + b].windows(2).all(|w| w[0] >= w[1]);
            start += b;
            ok
        })
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Highest weight of the dual representation: negate and reverse.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// Dual within each block separately.
    pub fn dual_in_blocks(&self, blocks: &[usize]) -> Weight {
        let mut out = Vec::with_capacity(self.len());
        for part in self.split_blocks(blocks) {
            out.extend(part.dual().0);
        }
        Weight(out)
    }

    pub fn negated(&self) -> Weight {
        Weight(self.0.iter().map(|&x| -x).collect())
    }

    pub fn shifted(&self, by: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x + by).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|&x| x * c).collect())
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Weight(v)
    }

    pub fn split_blocks(&self, blocks: &[usize]) -> Vec<Weight> {
        let mut start = 0;
        blocks
            .iter()
            .map(|&b| {
                let w = Weight(self.0[start..start + b].to_vec());
                start += b;
                w
            })
            .collect()
    }

    /// Sorts each block in decreasing order.
    pub fn sorted_in_blocks(&self, blocks: &[usize]) -> Weight {
        let mut v = self.0.clone();
        let mut start = 0;
        for &b in blocks {
            v[start..start + b].sort_unstable_by(|a, b| b.cmp(a));
            start += b;
        }
        Weight(v)
    }

    /// The partition obtained after subtracting the last entry; returns it
    /// together with that shift. Requires a dominant weight.
    pub fn to_shifted_partition(&self) -> (Partition, i64) {
        debug_assert!(self.is_dominant());
        let shift = self.0.last().copied().unwrap_or(0);
        let parts = self.0.iter().map(|&x| (x - shift) as u32).collect();
        (Partition::new(parts).expect("dominant weight"), shift)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
