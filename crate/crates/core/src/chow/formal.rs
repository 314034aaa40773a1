//! Discriminant scaling laws for Schur functors of a formal bundle.
//!
//! For a bundle of rank `r` with Chern roots `x_1, …, x_r`, the degree-two
//! part of any symmetric expression is `a·Σx_i² + b·Σ_{i<j} x_i x_j`, so it
//! is determined by its values at the root specialisations `e_1` and
//! `e_1 + e_2`. The roots of `∧^p` are the sums over `p`-subsets, those of
//! `Sym^p` the sums over `p`-multisets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Subsets,
    Multisets,
}

/// Counts of `p`-element sub(multi)sets of the roots by the value of their
/// sum, for integer root values `v`.
fn sum_distribution(v: &[i64], p: usize, kind: Kind) -> BTreeMap<i64, BigInt> {
    let mut dp: Vec<BTreeMap<i64, BigInt>> = alloc::vec![BTreeMap::new(); p + 1];
    dp[0].insert(0, BigInt::one());
    for &x in v {
        let mut next = dp.clone();
        for j in 0..p {
            let max_take = if kind == Kind::Subsets { 1 } else { p - j };
            for c in 1..=max_take {
                for (s, n) in &dp[j] {
                    *next[j + c].entry(s + c as i64 * x).or_insert_with(BigInt::zero) += n;
                }
            }
        }
        dp = next;
    }
    dp.swap_remove(p)
}

/// `Δ = ch_1² − 2R·ch_2` of the functor applied to a formal bundle with
/// integer roots `v`, where `R` is the rank of the result.
fn functor_discriminant(v: &[i64], p: usize, kind: Kind) -> BigInt {
    let dist = sum_distribution(v, p, kind);
    let mut rank = BigInt::zero();
    let mut s1 = BigInt::zero();
    let mut s2 = BigInt::zero();
    for (s, n) in dist {
        let s = BigInt::from(s);
        rank += &n;
        s1 += &n * &s;
        s2 += n * &s * &s;
    }
    &s1 * &s1 - rank * s2
}

fn probes(r: usize) -> [Vec<i64>; 2] {
    let mut a = alloc::vec![0i64; r];
    a[0] = 1;
    let mut b = a.clone();
    b[1] = 1;
    [a, b]
}

/// Checks `Δ(functor(F)) = coefficient · Δ(F)` as an identity of degree-two
/// symmetric functions in the roots.
fn verify(r: usize, p: usize, kind: Kind, coefficient: &Rational) -> Result<()> {
    for v in probes(r) {
        let lhs = Rational::from_integer(functor_discriminant(&v, p, kind));
        let rhs = coefficient * Rational::from_integer(functor_discriminant(&v, 1, Kind::Subsets));
        if lhs != rhs {
            return Err(Error::internal(alloc::format!(
                "discriminant law fails for r={r}, p={p}: {lhs} != {rhs} at roots {v:?}"
            )));
        }
    }
    Ok(())
}

/// `λ_p` with `Δ(∧^p F) = λ_p · Δ(F)` for `F` of rank `r`.
pub fn wedge_discriminant_coefficient(r: u64, p: u64) -> Result<Rational> {
    if p < 1 || p > r {
        return Err(Error::invalid(alloc::format!("need 1 <= p <= r, got r={r}, p={p}")));
    }
    if p == 1 {
        return Ok(Rational::one());
    }
    let (rb, pb) = (BigInt::from(r), BigInt::from(p));
    let value = Rational::new(
        binomial(rb.clone() - 1, pb.clone()) * binomial(rb - 2, pb.clone() - 2),
        pb - 1,
    );
    if p < r {
        verify(r as usize, p as usize, Kind::Subsets, &value)?;
    } else if !value.is_zero() {
        return Err(Error::internal("top exterior power must have zero discriminant"));
    }
    Ok(value)
}

/// `Δ(Sym² F) = C(r+2, 2) · Δ(F)` for `F` of rank `r ≥ 2`.
pub fn sym2_discriminant_coefficient(r: u64) -> Result<Rational> {
    if r < 2 {
        return Err(Error::invalid("the symmetric-square law needs r >= 2"));
    }
    let value = Rational::from_integer(binomial(BigInt::from(r + 2), BigInt::from(2)));
    verify(r as usize, 2, Kind::Multisets, &value)?;
    Ok(value)
}
