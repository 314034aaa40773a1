//! Bundle expressions over the tautological bundles of a Grassmannian and
//! their decomposition into irreducible homogeneous summands.
//!
//! An irreducible homogeneous bundle is `Σ_α Q ⊗ Σ_β U`, recorded by the
//! concatenated weight `(α | β)` of `GL(n−k) × GL(k)`. Since
//! `det Q ⊗ det U = det V` is trivial, `(α | β)` and `(α − c | β − c)` give
//! the same bundle; the twist-normal form picks the one with `α_{n−k} = 0`,
//! so that line-bundle twists live in `β` (`O(−1) = det U`).

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sym::{
    block_dimension, lr_weights, plethysm_apply, plethysm_character, schur_expand, weyl_dim, Character, Functor,
    Partition, SchurExpansion, Weight,
};

/// `Gr(k, n)`, with tautological subbundle `U` of rank `k` and quotient `Q`
/// of rank `n − k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Grassmannian {
    k: usize,
    n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::invalid(alloc::format!("Gr({k},{n}) needs 0 < k < n")));
        }
        Ok(Grassmannian { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_u(&self) -> usize {
        self.k
    }

    pub fn rank_q(&self) -> usize {
        self.n - self.k
    }

    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }

    /// Block sizes `[n − k, k]` of the Levi factor `GL(n−k) × GL(k)`.
    pub fn blocks(&self) -> Vec<usize> {
        alloc::vec![self.n - self.k, self.k]
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

/// An expression built from `U`, `Q` and line bundles `O(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    U,
    Q,
    /// `O(t)`, with `O(1)` the Plücker line bundle.
    Line(i64),
    Dual(Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sum(Box<BundleExpr>, Box<BundleExpr>),
    Wedge(u32, Box<BundleExpr>),
    Sym(u32, Box<BundleExpr>),
    Schur(Partition, Box<BundleExpr>),
    /// Traceless endomorphisms: `E ⊗ E∨` with one trivial summand removed.
    End0(Box<BundleExpr>),
}

impl BundleExpr {
    pub fn line(t: i64) -> Self {
        BundleExpr::Line(t)
    }

    pub fn dual(e: BundleExpr) -> Self {
        BundleExpr::Dual(Box::new(e))
    }

    pub fn tensor(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: BundleExpr, b: BundleExpr) -> Self {
        BundleExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn wedge(p: u32, e: BundleExpr) -> Self {
        BundleExpr::Wedge(p, Box::new(e))
    }

    pub fn sym(p: u32, e: BundleExpr) -> Self {
        BundleExpr::Sym(p, Box::new(e))
    }

    pub fn schur(lam: Partition, e: BundleExpr) -> Self {
        BundleExpr::Schur(lam, Box::new(e))
    }

    pub fn end0(e: BundleExpr) -> Self {
        BundleExpr::End0(Box::new(e))
    }

    /// `E ⊗ E∨`.
    pub fn end(e: BundleExpr) -> Self {
        BundleExpr::tensor(e.clone(), BundleExpr::dual(e))
    }

    /// `E^{⊕m}` for `m ≥ 1`.
    pub fn copies(e: BundleExpr, m: usize) -> Self {
        assert!(m >= 1);
        (1..m).fold(e.clone(), |acc, _| BundleExpr::sum(acc, e.clone()))
    }

    pub fn twisted(self, t: i64) -> Self {
        BundleExpr::tensor(self, BundleExpr::Line(t))
    }

    fn fmt_prec(&self, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BundleExpr::Sum(a, b) => {
                if prec > 1 {
                    f.write_str("(")?;
                }
                a.fmt_prec(1, f)?;
                f.write_str(" + ")?;
                b.fmt_prec(2, f)?;
                if prec > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            BundleExpr::Tensor(a, b) => {
                if prec > 2 {
                    f.write_str("(")?;
                }
                a.fmt_prec(2, f)?;
                f.write_str(" * ")?;
                b.fmt_prec(3, f)?;
                if prec > 2 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            BundleExpr::U => f.write_str("U"),
            BundleExpr::Q => f.write_str("Q"),
            BundleExpr::Line(t) => write!(f, "O({t})"),
            BundleExpr::Dual(e) => write!(f, "dual({e})"),
            BundleExpr::Wedge(p, e) => write!(f, "wedge({p}, {e})"),
            BundleExpr::Sym(p, e) => write!(f, "sym({p}, {e})"),
            BundleExpr::End0(e) => write!(f, "end0({e})"),
            BundleExpr::Schur(l, e) => {
                f.write_str("schur([")?;
                for (i, part) in l.parts().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, "], {e})")
            }
        }
    }
}

/// Prints the expression in the DSL accepted by the command-line parser.
impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(0, f)
    }
}

/// `multiplicity` copies of `Σ_α Q ⊗ Σ_β U`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrSummand {
    pub alpha: Weight,
    pub beta: Weight,
    pub multiplicity: u64,
}

impl IrrSummand {
    pub fn new(alpha: Weight, beta: Weight, multiplicity: u64) -> Self {
        IrrSummand { alpha, beta, multiplicity }
    }

    /// Splits a concatenated `(α | β)` weight.
    pub fn from_weight(w: &Weight, g: &Grassmannian, multiplicity: u64) -> Self {
        let mut parts = w.split_blocks(&g.blocks()).into_iter();
        let alpha = parts.next().expect("two blocks");
        let beta = parts.next().expect("two blocks");
        IrrSummand { alpha, beta, multiplicity }
    }

    /// The concatenated weight `(α | β)`.
    pub fn weight(&self) -> Weight {
        self.alpha.concat(&self.beta)
    }

    /// Moves `det Q^c` into the `U` part so that `α` ends in zero.
    pub fn twist_normal(&self) -> IrrSummand {
        let c = self.alpha.entries().last().copied().unwrap_or(0);
        IrrSummand {
            alpha: self.alpha.shifted(-c),
            beta: self.beta.shifted(-c),
            multiplicity: self.multiplicity,
        }
    }

    /// The dual summand, with `α` and `β` replaced by their negated
    /// reverses. The result is not twist-normalised.
    pub fn dual(&self) -> IrrSummand {
        IrrSummand {
            alpha: self.alpha.dual(),
            beta: self.beta.dual(),
            multiplicity: self.multiplicity,
        }
    }

    pub fn is_trivial(&self) -> bool {
        let t = self.twist_normal();
        t.alpha.is_zero() && t.beta.is_zero()
    }

    /// Rank of one copy.
    pub fn rank(&self) -> BigUint {
        weyl_dim(&self.alpha).expect("dominant") * weyl_dim(&self.beta).expect("dominant")
    }
}

impl fmt::Display for IrrSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.twist_normal();
        if s.multiplicity != 1 {
            write!(f, "{} x ", s.multiplicity)?;
        }
        let (alpha, _) = s.alpha.to_shifted_partition();
        let b = s.beta.entries();
        let constant_beta = b.windows(2).all(|w| w[0] == w[1]);
        let mut wrote = false;
        if !alpha.is_empty() {
            write!(f, "Σ{alpha}Q")?;
            wrote = true;
        }
        if !constant_beta {
            if wrote {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "Σ{}U", s.beta)?;
            wrote = true;
        }
        let twist = if constant_beta { -b.first().copied().unwrap_or(0) } else { 0 };
        match (wrote, twist) {
            (false, 0) => f.write_str("O"),
            (false, t) => write!(f, "O({t})"),
            (true, 0) => Ok(()),
            (true, t) => write!(f, "({t})"),
        }
    }
}

/// Irreducible decomposition keyed by twist-normal weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Decomposition {
    g: Grassmannian,
    terms: BTreeMap<Weight, u64>,
}

impl Decomposition {
    fn new(g: Grassmannian) -> Self {
        Decomposition { g, terms: BTreeMap::new() }
    }

    fn single(g: Grassmannian, w: Weight) -> Self {
        let mut d = Decomposition::new(g);
        d.insert(&w, 1);
        d
    }

    fn insert(&mut self, w: &Weight, m: u64) {
        if m == 0 {
            return;
        }
        let s = IrrSummand::from_weight(w, &self.g, m).twist_normal();
        *self.terms.entry(s.weight()).or_insert(0) += m;
    }

    fn from_expansion(g: Grassmannian, e: &SchurExpansion) -> Self {
        let mut d = Decomposition::new(g);
        for (w, m) in e.iter() {
            d.insert(w, m);
        }
        d
    }

    pub(crate) fn summands(&self) -> Vec<IrrSummand> {
        self.terms
            .iter()
            .map(|(w, &m)| IrrSummand::from_weight(w, &self.g, m))
            .collect()
    }

    fn character(&self) -> Character {
        let blocks = self.g.blocks();
        let mut c = Character::new(blocks.clone());
        for (w, &m) in &self.terms {
            let irr = Character::irreducible(blocks.clone(), w).expect("dominant by construction");
            c = c.sum(&irr.scaled(m));
        }
        c
    }

    fn tensor(&self, other: &Decomposition) -> Decomposition {
        let mut out = Decomposition::new(self.g);
        let blocks = self.g.blocks();
        for (a, &m) in &self.terms {
            let pa = a.split_blocks(&blocks);
            for (b, &n) in &other.terms {
                let pb = b.split_blocks(&blocks);
                let q_part = lr_weights(&pa[0], &pb[0]);
                let u_part = lr_weights(&pa[1], &pb[1]);
                for (qa, c1) in &q_part {
                    for (ua, c2) in &u_part {
                        out.insert(&qa.concat(ua), m * n * c1 * c2);
                    }
                }
            }
        }
        out
    }

    fn trivial_multiplicity(&self) -> u64 {
        self.terms.get(&Weight::zero(self.g.n())).copied().unwrap_or(0)
    }
}

fn leaf_weight(expr: &BundleExpr, g: &Grassmannian) -> Option<Weight> {
    let (a, b) = (g.rank_q(), g.rank_u());
    match expr {
        BundleExpr::Q => Some(Weight::unit(a, 0).concat(&Weight::zero(b))),
        BundleExpr::U => Some(Weight::zero(a).concat(&Weight::unit(b, 0))),
        BundleExpr::Line(t) => Some(Weight::zero(a).concat(&Weight::constant(b, -t))),
        _ => None,
    }
}

fn functor_of(expr: &BundleExpr) -> Option<(Functor, &BundleExpr)> {
    match expr {
        BundleExpr::Wedge(p, e) => Some((Functor::Wedge(*p), e)),
        BundleExpr::Sym(p, e) => Some((Functor::Sym(*p), e)),
        BundleExpr::Schur(l, e) => Some((Functor::Schur(l.clone()), e)),
        _ => None,
    }
}

pub(crate) fn decompose(expr: &BundleExpr, g: &Grassmannian) -> Result<Decomposition> {
    if let Some(w) = leaf_weight(expr, g) {
        return Ok(Decomposition::single(*g, w));
    }
    if let Some((functor, inner)) = functor_of(expr) {
        let ch = decompose(inner, g)?.character();
        return Ok(Decomposition::from_expansion(*g, &plethysm_apply(&functor, &ch)?));
    }
    match expr {
        BundleExpr::Dual(e) => {
            let d = decompose(e, g)?;
            let mut out = Decomposition::new(*g);
            for s in d.summands() {
                out.insert(&s.dual().weight(), s.multiplicity);
            }
            Ok(out)
        }
        BundleExpr::Sum(a, b) => {
            let mut out = decompose(a, g)?;
            for s in decompose(b, g)?.summands() {
                out.insert(&s.weight(), s.multiplicity);
            }
            Ok(out)
        }
        BundleExpr::Tensor(a, b) => Ok(decompose(a, g)?.tensor(&decompose(b, g)?)),
        BundleExpr::End0(e) => {
            let mut d = decompose(&BundleExpr::end((**e).clone()), g)?;
            let found = d.trivial_multiplicity();
            if found != 1 {
                return Err(Error::End0Multiplicity { found });
            }
            d.terms.remove(&Weight::zero(g.n()));
            Ok(d)
        }
        _ => unreachable!("leaves and functors handled above"),
    }
}

/// Decomposes `expr` into irreducible summands in twist-normal form, sorted
/// lexicographically by `(α, β)`.
pub fn normalize(expr: &BundleExpr, g: &Grassmannian) -> Result<Vec<IrrSummand>> {
    Ok(decompose(expr, g)?.summands())
}

/// Irreducible decomposition of `a ⊗ b` for two lists of summands.
pub fn tensor_summands(a: &[IrrSummand], b: &[IrrSummand], g: &Grassmannian) -> Vec<IrrSummand> {
    let collect = |xs: &[IrrSummand]| {
        let mut d = Decomposition::new(*g);
        for s in xs {
            d.insert(&s.weight(), s.multiplicity);
        }
        d
    };
    collect(a).tensor(&collect(b)).summands()
}

/// The character of `expr` as a `GL(n−k) × GL(k)` representation, built
/// directly from characters (convolution for `⊗`, plethysm for functors)
/// without passing through irreducible decompositions.
pub fn character(expr: &BundleExpr, g: &Grassmannian) -> Result<Character> {
    let blocks = g.blocks();
    if let Some(w) = leaf_weight(expr, g) {
        return Character::irreducible(blocks, &w);
    }
    if let Some((functor, inner)) = functor_of(expr) {
        return plethysm_character(&functor, &character(inner, g)?);
    }
    match expr {
        BundleExpr::Dual(e) => Ok(character(e, g)?.dual()),
        BundleExpr::Sum(a, b) => Ok(character(a, g)?.sum(&character(b, g)?)),
        BundleExpr::Tensor(a, b) => Ok(character(a, g)?.tensor(&character(b, g)?)),
        BundleExpr::End0(e) => {
            let mut ch = character(&BundleExpr::end((**e).clone()), g)?;
            let trivial: Vec<(Weight, u64)> = schur_expand(&ch)?
                .iter()
                .filter(|(w, _)| IrrSummand::from_weight(w, g, 1).is_trivial())
                .map(|(w, m)| (w.clone(), m))
                .collect();
            let found: u64 = trivial.iter().map(|(_, m)| m).sum();
            if found != 1 {
                return Err(Error::End0Multiplicity { found });
            }
            ch.remove(&trivial[0].0, 1)?;
            Ok(ch)
        }
        _ => unreachable!("leaves and functors handled above"),
    }
}

/// Rank computed functorially, without decomposing.
pub fn rank(expr: &BundleExpr, g: &Grassmannian) -> BigUint {
    match expr {
        BundleExpr::U => BigUint::from(g.rank_u()),
        BundleExpr::Q => BigUint::from(g.rank_q()),
        BundleExpr::Line(_) => BigUint::one(),
        BundleExpr::Dual(e) => rank(e, g),
        BundleExpr::Sum(a, b) => rank(a, g) + rank(b, g),
        BundleExpr::Tensor(a, b) => rank(a, g) * rank(b, g),
        BundleExpr::Wedge(p, e) => big_binomial(&rank(e, g), u64::from(*p)),
        BundleExpr::Sym(p, e) => {
            let r = rank(e, g);
            if r.is_zero() {
                return BigUint::from(u32::from(*p == 0));
            }
            big_binomial(&(r + *p - 1u32), u64::from(*p))
        }
        BundleExpr::Schur(l, e) => {
            let r = rank(e, g);
            match usize::try_from(&r).ok().and_then(|r| l.to_weight(r)) {
                Some(w) => weyl_dim(&w).expect("partitions are dominant"),
                None => BigUint::zero(),
            }
        }
        BundleExpr::End0(e) => {
            let r = rank(e, g);
            let sq = &r * &r;
            if sq.is_zero() {
                sq
            } else {
                sq - 1u32
            }
        }
    }
}

fn big_binomial(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Total rank of a list of summands.
pub fn summands_rank(summands: &[IrrSummand], g: &Grassmannian) -> BigUint {
    summands
        .iter()
        .map(|s| block_dimension(&s.weight(), &g.blocks()).expect("dominant") * s.multiplicity)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn gr26() -> Grassmannian {
        Grassmannian::new(2, 6).unwrap()
    }

    fn summand(alpha: &[i64], beta: &[i64], m: u64) -> IrrSummand {
        IrrSummand::new(Weight::new(alpha.to_vec()), Weight::new(beta.to_vec()), m)
    }

    #[test]
    fn grassmannian_bounds() {
        assert!(Grassmannian::new(0, 3).is_err());
        assert!(Grassmannian::new(3, 3).is_err());
        let g = gr26();
        assert_eq!((g.rank_q(), g.rank_u(), g.dimension()), (4, 2, 8));
    }

    #[test]
    fn leaves() {
        let g = gr26();
        assert_eq!(normalize(&BundleExpr::U, &g).unwrap(), vec![summand(&[0, 0, 0, 0], &[1, 0], 1)]);
        assert_eq!(normalize(&BundleExpr::Q, &g).unwrap(), vec![summand(&[1, 0, 0, 0], &[0, 0], 1)]);
        assert_eq!(normalize(&BundleExpr::Line(-3), &g).unwrap(), vec![summand(&[0, 0, 0, 0], &[3, 3], 1)]);
    }

    #[test]
    fn end_of_wedge2_q() {
        let g = gr26();
        let f = BundleExpr::wedge(2, BundleExpr::Q);
        let got = normalize(&BundleExpr::end(f), &g).unwrap();
        assert_eq!(
            got,
            vec![
                summand(&[0, 0, 0, 0], &[0, 0], 1),
                summand(&[2, 1, 1, 0], &[1, 1], 1),
                summand(&[2, 2, 0, 0], &[1, 1], 1),
            ]
        );
    }

    #[test]
    fn end0_requires_a_single_trivial_summand() {
        let g = gr26();
        let e = BundleExpr::copies(BundleExpr::Q, 2);
        assert_eq!(normalize(&BundleExpr::end0(e.clone()), &g), Err(Error::End0Multiplicity { found: 4 }));
        assert_eq!(character(&BundleExpr::end0(e), &g), Err(Error::End0Multiplicity { found: 4 }));
    }

    #[test]
    fn dual_summand_is_negated_reverse() {
        let s = summand(&[2, 2, 0, 0], &[1, 1], 1);
        assert_eq!(s.dual(), summand(&[0, 0, -2, -2], &[-1, -1], 1));
        let t = summand(&[2, 1, 1, 0], &[1, 1], 1);
        assert_eq!(t.dual().twist_normal(), t);
        let o = summand(&[0, 0, 0, 0], &[0, 0], 1);
        assert_eq!(o.dual(), o);
    }

    #[test]
    fn ranks() {
        let g = gr26();
        let f = BundleExpr::wedge(2, BundleExpr::Q);
        assert_eq!(rank(&f, &g), BigUint::from(6u32));
        assert_eq!(rank(&BundleExpr::wedge(2, f.clone()), &g), BigUint::from(15u32));
        assert_eq!(rank(&BundleExpr::Line(7), &g), BigUint::one());
        assert_eq!(rank(&BundleExpr::end0(f), &g), BigUint::from(35u32));
        let s = BundleExpr::schur(Partition::new(vec![2, 2]).unwrap(), BundleExpr::Q);
        assert_eq!(rank(&s, &g), BigUint::from(20u32));
        assert_eq!(rank(&BundleExpr::schur(Partition::column(3), BundleExpr::U), &g), BigUint::zero());
    }

    #[test]
    fn printing() {
        let e = BundleExpr::tensor(
            BundleExpr::sum(BundleExpr::Q, BundleExpr::U),
            BundleExpr::schur(Partition::new(vec![2, 1, 1]).unwrap(), BundleExpr::dual(BundleExpr::Line(-1))),
        );
        assert_eq!(e.to_string(), "(Q + U) * schur([2,1,1], dual(O(-1)))");
        let s = summand(&[2, 2, 0, 0], &[1, 1], 1);
        assert_eq!(s.to_string(), "Σ(2,2)Q(-1)");
        assert_eq!(summand(&[2, 2, 0, 0], &[7, 4], 1).to_string(), "Σ(2,2)Q ⊗ Σ(7,4)U");
        assert_eq!(summand(&[0, 0, 0, 0], &[0, 0], 1).to_string(), "O");
    }
}
