use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::sym::Weight;

/// A partition, stored as its weakly decreasing non-zero parts.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(alloc::format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(p)`.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Self::empty()
        } else {
            Partition(alloc::vec![p])
        }
    }

    /// The one-column partition `(1^p)`.
    pub fn column(p: usize) -> Self {
        Partition(alloc::vec![1; p])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.get(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Whether the Young diagram fits in a box with `rows` rows and `cols` columns.
    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.get(0) <= cols
    }

    /// Pads with zeros to a weight of length `len`; `None` if there are too many parts.
    pub fn to_weight(&self, len: usize) -> Option<Weight> {
        if self.len() > len {
            return None;
        }
        let mut entries: Vec<i64> = self.0.iter().map(|&p| i64::from(p)).collect();
        entries.resize(len, 0);
        Some(Weight::new(entries))
    }

    /// All partitions of `size` with at most `max_parts` parts, each at most
    /// `max_part`, in decreasing lexicographic order.
    pub fn all_of_size(size: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
        fn rec(rest: u32, max_parts: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_parts {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, max_parts, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_parts, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting in a `rows × cols` box, ordered by size and then
    /// decreasing lexicographically.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let top = rows as u32 * cols;
        (0..=top).flat_map(|d| Self::all_of_size(d, rows, cols)).collect()
    }

    /// The partition complementary to `self` inside the `rows × cols` box.
    pub fn complement(&self, rows: usize, cols: u32) -> Option<Partition> {
        if !self.fits_in(rows, cols) {
            return None;
        }
        let parts = (0..rows).rev().map(|i| cols - self.get(i)).collect();
        Partition::new(parts).ok()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
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
