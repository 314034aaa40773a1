use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::sym::{schur_expand, Character, Partition, SchurExpansion, Weight};

/// A Schur functor applied on the outside of a plethysm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Functor {
    Wedge(u32),
    Sym(u32),
    Schur(Partition),
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::Wedge(p) => write!(f, "wedge^{p}"),
            Functor::Sym(p) => write!(f, "sym^{p}"),
            Functor::Schur(l) => write!(f, "schur{l}"),
        }
    }
}

/// Character of `outer(V)` where `inner` is the character of `V`.
pub fn plethysm_character(outer: &Functor, inner: &Character) -> Result<Character> {
    match outer {
        Functor::Wedge(p) => Ok(graded_powers(inner, *p, Kind::Exterior).pop().expect("p + 1 levels")),
        Functor::Sym(p) => Ok(graded_powers(inner, *p, Kind::Symmetric).pop().expect("p + 1 levels")),
        Functor::Schur(lam) => jacobi_trudi(lam, inner),
    }
}

/// Decomposes `outer(V)` into irreducibles.
pub fn plethysm_apply(outer: &Functor, inner: &Character) -> Result<SchurExpansion> {
    schur_expand(&plethysm_character(outer, inner)?)
}

#[derive(Clone, Copy)]
enum Kind {
    Exterior,
    Symmetric,
}

/// Characters of `∧^j V` (or `Sym^j V`) for `j = 0..=p`, read off the
/// generating function `∏_w (1 + t·x^w)^{m_w}` (resp. `∏_w (1 − t·x^w)^{−m_w}`).
fn graded_powers(inner: &Character, p: u32, kind: Kind) -> Vec<Character> {
    let p = p as usize;
    let len = inner.len();
    let mut levels: Vec<BTreeMap<Weight, u64>> = alloc::vec![BTreeMap::new(); p + 1];
    levels[0].insert(Weight::zero(len), 1);
    for (w, m) in inner.iter() {
        let mut next = levels.clone();
        for c in 1..=p {
            let coeff = match kind {
                Kind::Exterior if c as u64 > m => break,
                Kind::Exterior => binomial(m, c as u64),
                Kind::Symmetric => binomial(m + c as u64 - 1, c as u64),
            };
            let shift = w.scaled(c as i64);
            for j in 0..=p - c {
                for (s, &x) in &levels[j] {
                    *next[j + c].entry(s.add(&shift)).or_insert(0) += x * coeff;
                }
            }
        }
        levels = next;
    }
    levels
        .into_iter()
        .map(|terms| {
            let mut c = Character::new(inner.blocks().to_vec());
            for (w, m) in terms {
                c.insert(w, m);
            }
            c
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflow")
}

type SignedChar = BTreeMap<Weight, BigInt>;

fn signed_mul(a: &SignedChar, b: &SignedChar) -> SignedChar {
    let mut out = SignedChar::new();
    for (x, c) in a {
        for (y, d) in b {
            let e = out.entry(x.add(y)).or_insert_with(BigInt::zero);
            *e += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `s_λ(V) = det(h_{λ_i − i + j}(V))`, expanded along the first row.
fn jacobi_trudi(lam: &Partition, inner: &Character) -> Result<Character> {
    let l = lam.len();
    let len = inner.len();
    let mut out = Character::new(inner.blocks().to_vec());
    if l == 0 {
        out.insert(Weight::zero(len), 1);
        return Ok(out);
    }
    let top = lam.get(0) as usize + l;
    let h: Vec<SignedChar> = graded_powers(inner, top as u32, Kind::Symmetric)
        .into_iter()
        .map(|c| c.iter().map(|(w, m)| (w.clone(), BigInt::from(m))).collect())
        .collect();
    let entry = |i: usize, j: usize| -> Option<&SignedChar> {
        let idx = lam.get(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            None
        } else {
            h.get(idx as usize)
        }
    };
    let mut memo: BTreeMap<(usize, u32), SignedChar> = BTreeMap::new();
    let det = minor(0, (1u32 << l) - 1, l, &entry, &mut memo, len);
    for (w, c) in det {
        if c.is_negative() {
            return Err(Error::internal(alloc::format!(
                "Jacobi–Trudi produced a negative multiplicity at {w}"
            )));
        }
        out.insert(w, c.to_u64().ok_or_else(|| Error::internal("multiplicity overflow"))?);
    }
    Ok(out)
}

/// Determinant of rows `row..l` against the columns in `cols`.
fn minor<'a>(
    row: usize,
    cols: u32,
    l: usize,
    entry: &dyn Fn(usize, usize) -> Option<&'a SignedChar>,
    memo: &mut BTreeMap<(usize, u32), SignedChar>,
    len: usize,
) -> SignedChar {
    if row == l {
        let mut one = SignedChar::new();
        one.insert(Weight::zero(len), BigInt::from(1));
        return one;
    }
    if let Some(v) = memo.get(&(row, cols)) {
        return v.clone();
    }
    let mut acc = SignedChar::new();
    let mut sign_pos = 0;
    for j in 0..l {
        if cols & (1 << j) == 0 {
            continue;
        }
        let negative = sign_pos % 2 == 1;
        sign_pos += 1;
        let Some(e) = entry(row, j) else { continue };
        let rest = minor(row + 1, cols & !(1 << j), l, entry, memo, len);
        for (w, c) in signed_mul(e, &rest) {
            let slot = acc.entry(w).or_insert_with(BigInt::zero);
            if negative {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    memo.insert((row, cols), acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn wedge2_of_rank4() -> Character {
        plethysm_character(&Functor::Wedge(2), &Character::standard(4)).unwrap()
    }

    fn sym3_of_rank2() -> Character {
        plethysm_character(&Functor::Sym(3), &Character::standard(2)).unwrap()
    }

    fn terms(e: &SchurExpansion) -> Vec<(Weight, u64)> {
        e.iter().map(|(w, m)| (w.clone(), m)).collect()
    }

    #[test]
    fn wedge_wedge_is_schur_211() {
        let e = plethysm_apply(&Functor::Wedge(2), &wedge2_of_rank4()).unwrap();
        assert_eq!(terms(&e), vec![(w(&[2, 1, 1, 0]), 1)]);
    }

    #[test]
    fn sym_wedge_splits_off_the_determinant() {
        let e = plethysm_apply(&Functor::Sym(2), &wedge2_of_rank4()).unwrap();
        assert_eq!(terms(&e), vec![(w(&[1, 1, 1, 1]), 1), (w(&[2, 2, 0, 0]), 1)]);
    }

    #[test]
    fn exterior_powers_of_sym_cube() {
        let s3 = sym3_of_rank2();
        let e2 = plethysm_apply(&Functor::Wedge(2), &s3).unwrap();
        assert_eq!(terms(&e2), vec![(w(&[3, 3]), 1), (w(&[5, 1]), 1)]);
        let e3 = plethysm_apply(&Functor::Wedge(3), &s3).unwrap();
        assert_eq!(terms(&e3), vec![(w(&[6, 3]), 1)]);
        let e5 = plethysm_apply(&Functor::Wedge(5), &s3).unwrap();
        assert!(e5.is_empty());
    }

    #[test]
    fn zeroth_powers_are_trivial() {
        for f in [Functor::Wedge(0), Functor::Sym(0), Functor::Schur(Partition::empty())] {
            let e = plethysm_apply(&f, &sym3_of_rank2()).unwrap();
            assert_eq!(terms(&e), vec![(w(&[0, 0]), 1)]);
        }
    }

    #[test]
    fn jacobi_trudi_agrees_with_wedge_and_sym() {
        let v = Character::irreducible(vec![3], &w(&[1, 0, -1])).unwrap();
        let col = Functor::Schur(Partition::column(2));
        let row = Functor::Schur(Partition::row(2));
        assert_eq!(plethysm_character(&col, &v).unwrap(), plethysm_character(&Functor::Wedge(2), &v).unwrap());
        assert_eq!(plethysm_character(&row, &v).unwrap(), plethysm_character(&Functor::Sym(2), &v).unwrap());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
