use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::sym::Weight;

/// Dimension of the irreducible `GL(n)` representation with highest weight
/// `weight`, `n = weight.len()`: `∏_{i<j} (w_i − w_j + j − i) / (j − i)`.
pub fn weyl_dim(weight: &Weight) -> Result<BigUint> {
    if !weight.is_dominant() {
        return Err(Error::invalid(alloc::format!("weight {weight} is not dominant")));
    }
    let w = weight.entries();
    let n = w.len();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..n {
        for j in i + 1..n {
            num *= w[i] - w[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    let q = num / den;
    debug_assert!(!q.is_negative());
    Ok(q.magnitude().clone())
}

/// Dimension of an irreducible of `GL(b_1) × … × GL(b_m)`.
pub fn block_dimension(weight: &Weight, blocks: &[usize]) -> Result<BigUint> {
    let mut d = BigUint::from(1u32);
    for part in weight.split_blocks(blocks) {
        d *= weyl_dim(&part)?;
    }
    Ok(d)
}
