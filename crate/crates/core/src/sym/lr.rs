use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::sym::{Partition, SchurExpansion, Weight};

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν` with at most
/// `max_rows` rows.
///
/// LR tableaux of shape `ν/λ` and content `μ` are built one letter at a time:
/// the boxes labelled `i` form a horizontal strip, and the reading word
/// (rows top to bottom, each right to left) must stay a lattice word, i.e.
/// for every row `j`, the number of `i+1`s in rows `≤ j` is at most the
/// number of `i`s in rows `< j`.
pub fn lr_coefficients(lam: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if lam.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let mut shape: Vec<u32> = lam.parts().to_vec();
    let mut counts: Vec<Vec<u32>> = Vec::new();
    add_letter(0, mu.parts(), &mut shape, &mut counts, max_rows, &mut out);
    out
}

fn add_letter(
    letter: usize,
    mu: &[u32],
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    max_rows: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == mu.len() {
        let nu = Partition::new(shape.clone()).expect("strips keep the shape a partition");
        *out.entry(nu).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let rows = max_rows.min(old.len() + 1);
    let prev = if letter > 0 { Some(counts[letter - 1].clone()) } else { None };
    let mut added = alloc::vec![0u32; rows];
    let ctx = StripCtx { old: &old, prev: prev.as_deref(), rows };
    let mut strips = Vec::new();
    ctx.enumerate(0, mu[letter], 0, 0, &mut added, &mut strips);
    for strip in strips {
        shape.clear();
        for (j, &add) in strip.iter().enumerate().take(rows) {
            shape.push(old.get(j).copied().unwrap_or(0) + add);
        }
        while shape.last() == Some(&0) {
            shape.pop();
        }
        counts.push(strip);
        add_letter(letter + 1, mu, shape, counts, max_rows, out);
        counts.pop();
    }
    *shape = old;
}

struct StripCtx<'a> {
    old: &'a [u32],
    prev: Option<&'a [u32]>,
    rows: usize,
}

impl StripCtx<'_> {
    fn enumerate(
        &self,
        row: usize,
        remaining: u32,
        cum_added: u32,
        cum_prev: u32,
        added: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if remaining == 0 {
            let mut strip = added.clone();
            for a in strip.iter_mut().skip(row) {
                *a = 0;
            }
            out.push(strip);
            return;
        }
        if row == self.rows {
            return;
        }
        let here = self.old.get(row).copied().unwrap_or(0);
        let room = if row == 0 {
            remaining
        } else {
            self.old[row - 1] - here
        };
        let mut max_here = remaining.min(room);
        if self.prev.is_some() {
            max_here = max_here.min(cum_prev.saturating_sub(cum_added));
        }
        let prev_here = self.prev.map_or(0, |p| p.get(row).copied().unwrap_or(0));
        for a in 0..=max_here {
            added[row] = a;
            self.enumerate(row + 1, remaining - a, cum_added + a, cum_prev + prev_here, added, out);
        }
        added[row] = 0;
    }
}

/// `s_λ · s_μ` restricted to partitions with at most `r` rows.
pub fn lr_product(lam: &Partition, mu: &Partition, r: usize) -> SchurExpansion {
    let mut e = SchurExpansion::new(alloc::vec![r]);
    for (nu, c) in lr_coefficients(lam, mu, r) {
        e.insert(nu.to_weight(r).expect("at most r rows"), c);
    }
    e
}

/// Tensor product of two irreducible `GL(r)` representations given by
/// dominant weights that may have negative entries.
pub fn lr_weights(a: &Weight, b: &Weight) -> BTreeMap<Weight, u64> {
    debug_assert_eq!(a.len(), b.len());
    let r = a.len();
    let (pa, sa) = a.to_shifted_partition();
    let (pb, sb) = b.to_shifted_partition();
    lr_coefficients(&pa, &pb, r)
        .into_iter()
        .map(|(nu, c)| (nu.to_weight(r).expect("at most r rows").shifted(sa + sb), c))
        .collect()
}
