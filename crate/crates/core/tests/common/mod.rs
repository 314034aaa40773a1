//! Test-side oracles, written independently of the library algorithms.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial in `r` variables with integer exponents allowed to be
/// negative: exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<i64>, BigInt>;

/// Monomials of `s_λ(x_1..x_r)` by enumerating semistandard tableaux.
pub fn schur_poly(lambda: &[u32], r: usize) -> Poly {
    let rows: Vec<usize> = lambda.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    let mut out = Poly::new();
    if rows.len() > r {
        return out;
    }
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut filling: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    fn rec(idx: usize, cells: &[(usize, usize)], filling: &mut Vec<Vec<usize>>, r: usize, out: &mut Poly) {
        if idx == cells.len() {
            let mut e = vec![0i64; r];
            for row in filling.iter() {
                for &v in row {
                    e[v] += 1;
                }
            }
            *out.entry(e).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 0 { filling[i][j - 1] } else { 0 };
        let lo_col = if i > 0 { filling[i - 1][j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..r {
            filling[i][j] = v;
            rec(idx + 1, cells, filling, r, out);
        }
    }
    rec(0, &cells, &mut filling, r, &mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expands a symmetric polynomial with nonnegative exponents in Schur
/// polynomials, by subtracting the Schur polynomial of the largest
/// remaining exponent vector.
pub fn naive_schur_expansion(p: &Poly, r: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let mut rem = p.clone();
    rem.retain(|_, c| !c.is_zero());
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        assert!(e.windows(2).all(|w| w[0] >= w[1]), "leading exponent {e:?} not dominant");
        let lam: Vec<u32> = e.iter().map(|&x| x as u32).collect();
        for (m, k) in schur_poly(&lam, r) {
            let entry = rem.entry(m).or_insert_with(BigInt::zero);
            *entry -= &c * k;
        }
        rem.retain(|_, c| !c.is_zero());
        let key: Vec<u32> = lam.into_iter().filter(|&x| x > 0).collect();
        out.insert(key, c);
    }
    out
}

/// Substitutes the monomials `vars[i]` (exponent vectors) for the variables
/// of `p`.
pub fn substitute(p: &Poly, vars: &[Vec<i64>]) -> Poly {
    let len = vars[0].len();
    let mut out = Poly::new();
    for (e, c) in p {
        let mut m = vec![0i64; len];
        for (i, &k) in e.iter().enumerate() {
            for (t, v) in m.iter_mut().zip(&vars[i]) {
                *t += k * v;
            }
        }
        *out.entry(m).or_insert_with(BigInt::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// All `p`-subsets of `0..r`.
pub fn subsets(r: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..r {
            cur.push(i);
            rec(i + 1, r, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, r, p, &mut Vec::new(), &mut out);
    out
}

/// `(ch_1, 2·ch_2, rank)` of a bundle with explicit integer Chern roots.
pub fn ch12(roots: &[i64]) -> (BigInt, BigInt, BigInt) {
    let s1: BigInt = roots.iter().map(|&x| BigInt::from(x)).sum();
    let s2: BigInt = roots.iter().map(|&x| BigInt::from(x) * x).sum();
    (s1, s2, BigInt::from(roots.len()))
}

/// `Δ = ch_1² − 2r·ch_2` from explicit roots.
pub fn discriminant_from_roots(roots: &[i64]) -> BigInt {
    let (s1, s2, r) = ch12(roots);
    &s1 * &s1 - r * s2
}

pub fn wedge_roots(roots: &[i64], p: usize) -> Vec<i64> {
    subsets(roots.len(), p).into_iter().map(|s| s.iter().map(|&i| roots[i]).sum()).collect()
}

pub fn sym2_roots(roots: &[i64]) -> Vec<i64> {
    let mut out = Vec::new();
    for i in 0..roots.len() {
        for j in i..roots.len() {
            out.push(roots[i] + roots[j]);
        }
    }
    out
}
