use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ring::{ChowClass, SchubertRing};
use crate::bundle::{normalize, rank, BundleExpr};
use crate::error::{Error, Result};
use crate::sym::{expand_dominant, Character, Partition, Weight};
use crate::Rational;

fn factorial(d: u64) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, i| acc * i)
}

fn rational(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Dominant exponent vectors `(λ | μ)` of total degree `d`.
fn dominant_exponents(d: u32, a: usize, b: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for d1 in 0..=d {
        for lam in Partition::all_of_size(d1, a, d1) {
            for mu in Partition::all_of_size(d - d1, b, d - d1) {
                out.push(lam.to_weight(a).expect("fits").concat(&mu.to_weight(b).expect("fits")));
            }
        }
    }
    out
}

fn exponent_partition(w: &Weight) -> Partition {
    Partition::new(w.entries().iter().map(|&x| x as u32).collect()).expect("dominant exponents")
}

/// `Σ_w m_w (w · z)^d` for the Chern roots `z = (x | y)` of `Q` and `U`,
/// by symmetrizing and expanding in Schur functions. Cost grows quickly
/// with `d`; [`chern_character`] is the fast route.
fn power_sum(ring: &SchubertRing, ch: &Character, d: u32) -> Result<ChowClass> {
    let g = ring.grassmannian();
    let (a, b) = (g.rank_q(), g.rank_u());
    if d == 0 {
        return Ok(ChowClass::constant(rational(ch.dimension())));
    }
    let df = factorial(u64::from(d));
    let mut coeffs: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for e in dominant_exponents(d, a, b) {
        let denom: BigInt = e.entries().iter().map(|&x| factorial(x as u64)).product();
        let multinomial = &df / denom;
        let mut total = BigInt::zero();
        for (w, m) in ch.iter() {
            let mut term = BigInt::from(m);
            for (&wi, &ei) in w.entries().iter().zip(e.entries()) {
                if ei > 0 {
                    term *= BigInt::from(wi).pow(ei as u32);
                }
            }
            total += term;
        }
        if !total.is_zero() {
            coeffs.insert(e, total * &multinomial);
        }
    }
    let schur = expand_dominant(coeffs, &[a, b])?;
    let mut out = ChowClass::zero();
    for (w, c) in schur {
        let parts = w.split_blocks(&[a, b]);
        let lam = exponent_partition(&parts[0]);
        let mu = exponent_partition(&parts[1]);
        let class = ring.mul(&ring.schur_q(&lam), &ring.schur_u(&mu));
        out = &out + &class.scaled(&Rational::from_integer(c));
    }
    Ok(out)
}

/// Power sums `p_0, …, p_max` of the Chern roots of a character.
pub fn power_sums(ring: &SchubertRing, ch: &Character, max: u32) -> Result<Vec<ChowClass>> {
    (0..=max).map(|d| power_sum(ring, ch, d)).collect()
}

fn clamp(ring: &SchubertRing, truncation: u32) -> u32 {
    truncation.min(ring.dimension() as u32)
}

/// `ch = Σ p_d / d!` of a character, through degree `truncation`.
pub fn chern_character_of(ring: &SchubertRing, ch: &Character, truncation: u32) -> Result<ChowClass> {
    let mut out = ChowClass::zero();
    for (d, p) in power_sums(ring, ch, clamp(ring, truncation))?.into_iter().enumerate() {
        out = &out + &p.scaled(&Rational::new(BigInt::one(), factorial(d as u64)));
    }
    Ok(out)
}

/// Total Chern class of a character, through degree `truncation`.
pub fn total_chern_of(ring: &SchubertRing, ch: &Character, truncation: u32) -> Result<ChowClass> {
    Ok(chern_from_ch(ring, &chern_character_of(ring, ch, truncation)?, truncation))
}

/// `log td` of a character.
pub fn log_todd_of(ring: &SchubertRing, ch: &Character) -> Result<ChowClass> {
    Ok(log_todd_from_ch(&chern_character_of(ring, ch, ring.dimension() as u32)?, ring.dimension()))
}

/// Power sums `p_d = d!·ch_d` of the roots of a Chern character.
fn power_sums_from_ch(ch: &ChowClass, top: u64) -> Vec<ChowClass> {
    (0..=top).map(|d| ch.degree_part(d).scaled(&rational(factorial(d)))).collect()
}

/// Total Chern class from a Chern character by Newton's identities.
pub fn chern_from_ch(ring: &SchubertRing, ch: &ChowClass, truncation: u32) -> ChowClass {
    let top = u64::from(clamp(ring, truncation));
    let p = power_sums_from_ch(ch, top);
    let mut e: Vec<ChowClass> = alloc::vec![ChowClass::one()];
    for d in 1..=top as usize {
        let mut acc = ChowClass::zero();
        for i in 1..=d {
            let t = ring.mul(&e[d - i], &p[i]);
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        e.push(acc.scaled(&Rational::new(BigInt::one(), BigInt::from(d))));
    }
    e.iter().fold(ChowClass::zero(), |acc, x| &acc + x)
}

/// Chern character from a total Chern class and rank, by Newton's identities.
fn ch_from_chern(ring: &SchubertRing, rank: u64, c: &ChowClass) -> ChowClass {
    let top = ring.dimension();
    let e: Vec<ChowClass> = (0..=top).map(|d| c.degree_part(d)).collect();
    let mut p: Vec<ChowClass> = alloc::vec![ChowClass::constant(rational(rank))];
    for d in 1..=top as usize {
        // p_d = Σ_{i<d} (−1)^{i−1} e_i p_{d−i} + (−1)^{d−1} d e_d
        let mut acc = e[d].scaled(&rational(d as u64));
        if d % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..d {
            let t = ring.mul(&e[i], &p[d - i]);
            acc = if i % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        p.push(acc);
    }
    p.iter()
        .enumerate()
        .fold(ChowClass::zero(), |acc, (d, pd)| &acc + &pd.scaled(&Rational::new(BigInt::one(), factorial(d as u64))))
}

/// Bernoulli numbers `B_0, …, B_m` with `B_1 = −1/2`.
pub fn bernoulli(m: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = alloc::vec![Rational::one()];
    for k in 1..=m {
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * Rational::from_integer(binom.clone());
            binom = binom * (k + 1 - j) / (j + 1);
        }
        b.push(-acc / rational(k as u64 + 1));
    }
    b
}

/// `log td = ch_1/2 − Σ_{k≥1} B_{2k}/(2k) · ch_{2k}`.
pub fn log_todd_from_ch(ch: &ChowClass, top: u64) -> ChowClass {
    let b = bernoulli(top as usize);
    let mut out = ch.degree_part(1).scaled(&Rational::new(1.into(), 2.into()));
    for k in 1..=(top as usize / 2) {
        let coeff = -&b[2 * k] / rational(2 * k as u64);
        out = &out + &ch.degree_part(2 * k as u64).scaled(&coeff);
    }
    out
}

/// The Adams operation `ψ^k`, which scales degree `d` by `k^d`.
fn adams(ch: &ChowClass, k: i64) -> ChowClass {
    let mut out = ChowClass::zero();
    for (lam, c) in ch.terms() {
        out.add_term(lam.clone(), c * rational(BigInt::from(k).pow(lam.size() as u32)));
    }
    out
}

/// `ch` of `∧^j` (or `Sym^j`) for `j = 0..=p`, from Newton's identities in
/// the λ-ring.
fn graded_powers(ring: &SchubertRing, ch: &ChowClass, p: u32, exterior: bool) -> Vec<ChowClass> {
    let psi: Vec<ChowClass> = (0..=p).map(|i| adams(ch, i64::from(i))).collect();
    let mut out: Vec<ChowClass> = alloc::vec![ChowClass::one()];
    for j in 1..=p as usize {
        let mut acc = ChowClass::zero();
        for i in 1..=j {
            let t = ring.mul(&psi[i], &out[j - i]);
            acc = if exterior && i % 2 == 0 { &acc - &t } else { &acc + &t };
        }
        out.push(acc.scaled(&Rational::new(BigInt::one(), BigInt::from(j))));
    }
    out
}

/// `det(h_{λ_i − i + j})` with `h` given by `sym`, expanded along rows.
fn jacobi_trudi(ring: &SchubertRing, lam: &Partition, sym: &[ChowClass]) -> ChowClass {
    fn minor(
        ring: &SchubertRing,
        lam: &Partition,
        sym: &[ChowClass],
        row: usize,
        cols: u32,
        memo: &mut BTreeMap<(usize, u32), ChowClass>,
    ) -> ChowClass {
        let l = lam.len();
        if row == l {
            return ChowClass::one();
        }
        if let Some(v) = memo.get(&(row, cols)) {
            return v.clone();
        }
        let mut acc = ChowClass::zero();
        let mut sign_pos = 0;
        for j in 0..l {
            if cols & (1 << j) == 0 {
                continue;
            }
            let negative = sign_pos % 2 == 1;
            sign_pos += 1;
            let idx = lam.get(row) as i64 - row as i64 + j as i64;
            if idx < 0 {
                continue;
            }
            let t = ring.mul(&sym[idx as usize], &minor(ring, lam, sym, row + 1, cols & !(1 << j), memo));
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        memo.insert((row, cols), acc.clone());
        acc
    }
    let l = lam.len();
    minor(ring, lam, sym, 0, ((1u64 << l) - 1) as u32, &mut BTreeMap::new())
}

fn dual_ch(ch: &ChowClass) -> ChowClass {
    adams(ch, -1)
}

/// `ch(expr)` evaluated structurally: `⊗` is the ring product, functors go
/// through Adams operations, and `Q`, `U` come from their Chern classes.
/// Degrees above `dim G` vanish in the ring, so the result is exact.
fn ch_expr(ring: &SchubertRing, expr: &BundleExpr) -> Result<ChowClass> {
    let g = ring.grassmannian();
    Ok(match expr {
        BundleExpr::Q => {
            let c = (0..=g.rank_q() as u32).fold(ChowClass::zero(), |acc, i| &acc + &ring.c_q(i));
            ch_from_chern(ring, g.rank_q() as u64, &c)
        }
        BundleExpr::U => {
            let c = (0..=g.rank_q() as u32).fold(ChowClass::zero(), |acc, i| &acc + &ring.c_q(i));
            ch_from_chern(ring, g.rank_u() as u64, &ring.inverse(&c)?)
        }
        BundleExpr::Line(t) => ring.exp(&ring.h().scaled(&rational(*t)))?,
        BundleExpr::Dual(e) => dual_ch(&ch_expr(ring, e)?),
        BundleExpr::Tensor(a, b) => ring.mul(&ch_expr(ring, a)?, &ch_expr(ring, b)?),
        BundleExpr::Sum(a, b) => &ch_expr(ring, a)? + &ch_expr(ring, b)?,
        BundleExpr::Wedge(p, e) => graded_powers(ring, &ch_expr(ring, e)?, *p, true).pop().expect("p + 1 levels"),
        BundleExpr::Sym(p, e) => graded_powers(ring, &ch_expr(ring, e)?, *p, false).pop().expect("p + 1 levels"),
        BundleExpr::Schur(lam, e) => {
            let top = lam.get(0) + lam.len() as u32;
            let sym = graded_powers(ring, &ch_expr(ring, e)?, top, false);
            jacobi_trudi(ring, lam, &sym)
        }
        BundleExpr::End0(e) => {
            // Schur's lemma: the trivial multiplicity of E ⊗ E∨ is Σ m_i².
            let found: u64 = normalize(e, g)?.iter().map(|s| s.multiplicity * s.multiplicity).sum();
            if found != 1 {
                return Err(Error::End0Multiplicity { found });
            }
            let c = ch_expr(ring, e)?;
            &ring.mul(&c, &dual_ch(&c)) - &ChowClass::one()
        }
    })
}

/// `ch(expr)` through degree `truncation`.
pub fn chern_character(ring: &SchubertRing, expr: &BundleExpr, truncation: u32) -> Result<ChowClass> {
    Ok(ch_expr(ring, expr)?.truncated(u64::from(clamp(ring, truncation))))
}

/// `c(expr)` through degree `truncation`.
pub fn total_chern(ring: &SchubertRing, expr: &BundleExpr, truncation: u32) -> Result<ChowClass> {
    Ok(chern_from_ch(ring, &ch_expr(ring, expr)?, truncation))
}

/// `log td(expr)`.
pub fn log_todd(ring: &SchubertRing, expr: &BundleExpr) -> Result<ChowClass> {
    Ok(log_todd_from_ch(&ch_expr(ring, expr)?, ring.dimension()))
}

/// `Δ = ch_1² − 2r·ch_2`.
pub fn discriminant(ring: &SchubertRing, expr: &BundleExpr) -> Result<ChowClass> {
    let r = rank(expr, ring.grassmannian());
    if r.is_zero() {
        return Err(Error::invalid("discriminant of a rank-zero bundle"));
    }
    let ch = ch_expr(ring, expr)?;
    let c1 = ch.degree_part(1);
    Ok(&ring.mul(&c1, &c1) - &ch.degree_part(2).scaled(&Rational::from_integer(BigInt::from(r) * 2)))
}
