use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bundle::Grassmannian;
use crate::error::{Error, Result};
use crate::sym::{lr_coefficients, Partition};
use crate::Rational;

/// A rational combination of Schubert classes `σ_λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChowClass {
    terms: BTreeMap<Partition, Rational>,
}

impl ChowClass {
    pub fn zero() -> Self {
        ChowClass::default()
    }

    pub fn one() -> Self {
        ChowClass::sigma(Partition::empty())
    }

    pub fn sigma(lam: Partition) -> Self {
        ChowClass::term(lam, Rational::one())
    }

    pub fn term(lam: Partition, c: Rational) -> Self {
        let mut out = ChowClass::zero();
        out.add_term(lam, c);
        out
    }

    pub fn constant(c: Rational) -> Self {
        ChowClass::term(Partition::empty(), c)
    }

    pub fn add_term(&mut self, lam: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, lam: &Partition) -> Rational {
        self.terms.get(lam).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the unit class.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Partition::empty())
    }

    pub fn degree_part(&self, d: u64) -> ChowClass {
        self.filtered(|l| l.size() == d)
    }

    /// Drops every term of degree above `d`.
    pub fn truncated(&self, d: u64) -> ChowClass {
        self.filtered(|l| l.size() <= d)
    }

    fn filtered(&self, keep: impl Fn(&Partition) -> bool) -> ChowClass {
        ChowClass { terms: self.terms.iter().filter(|(l, _)| keep(l)).map(|(l, c)| (l.clone(), c.clone())).collect() }
    }

    pub fn scaled(&self, c: &Rational) -> ChowClass {
        if c.is_zero() {
            return ChowClass::zero();
        }
        ChowClass { terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect() }
    }

    /// Largest degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<u64> {
        self.terms.keys().map(Partition::size).max()
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass { terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect() }
    }
}

impl Mul<&Rational> for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &Rational) -> ChowClass {
        self.scaled(rhs)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        for (i, l) in keys.into_iter().enumerate() {
            let c = &self.terms[l];
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if l.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "σ{l}")?;
            } else {
                write!(f, "{a}σ{l}")?;
            }
        }
        Ok(())
    }
}

/// The Chow ring of `Gr(k, n)` in the Schubert basis, with `σ_λ` indexed by
/// partitions with at most `k` rows and parts at most `n − k`, so that
/// `c_i(Q) = σ_i`. All structure constants are computed on construction.
#[derive(Clone, Debug)]
pub struct SchubertRing {
    g: Grassmannian,
    table: BTreeMap<(Partition, Partition), Vec<(Partition, u64)>>,
}

impl SchubertRing {
    pub fn new(g: Grassmannian) -> Self {
        let (rows, cols) = (g.k(), g.rank_q() as u32);
        let basis = Partition::all_in_box(rows, cols);
        let dim = g.dimension() as u64;
        let mut table = BTreeMap::new();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i..] {
                if a.size() + b.size() > dim || a.is_empty() || b.is_empty() {
                    continue;
                }
                let prod: Vec<(Partition, u64)> = lr_coefficients(a, b, rows)
                    .into_iter()
                    .filter(|(nu, _)| nu.fits_in(rows, cols))
                    .collect();
                let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                table.insert(key, prod);
            }
        }
        SchubertRing { g, table }
    }

    pub fn grassmannian(&self) -> &Grassmannian {
        &self.g
    }

    pub fn dimension(&self) -> u64 {
        self.g.dimension() as u64
    }

    /// Schubert partitions of size `d`.
    pub fn basis(&self, d: u64) -> Vec<Partition> {
        let Ok(d) = u32::try_from(d) else {
            return Vec::new();
        };
        Partition::all_of_size(d, self.g.k(), self.g.rank_q() as u32)
    }

    /// `σ_λ`, or zero outside the box.
    pub fn sigma(&self, lam: Partition) -> ChowClass {
        if lam.fits_in(self.g.k(), self.g.rank_q() as u32) {
            ChowClass::sigma(lam)
        } else {
            ChowClass::zero()
        }
    }

    /// The hyperplane class `σ_1 = c_1(O(1))`.
    pub fn h(&self) -> ChowClass {
        self.sigma(Partition::row(1))
    }

    /// `c_i(Q) = σ_i`.
    pub fn c_q(&self, i: u32) -> ChowClass {
        self.sigma(Partition::row(i))
    }

    /// The point class `σ_{box}`.
    pub fn point(&self) -> Partition {
        Partition::new(alloc::vec![self.g.rank_q() as u32; self.g.k()]).expect("constant rows")
    }

    /// `s_λ` of the Chern roots of `Q`, which is `σ_{λ'}`.
    pub fn schur_q(&self, lam: &Partition) -> ChowClass {
        self.sigma(lam.conjugate())
    }

    /// `s_μ` of the Chern roots of `U`, which is `(−1)^{|μ|} σ_μ`.
    pub fn schur_u(&self, mu: &Partition) -> ChowClass {
        let s = self.sigma(mu.clone());
        if mu.size() % 2 == 1 {
            -&s
        } else {
            s
        }
    }

    fn basis_product(&self, a: &Partition, b: &Partition) -> Option<&[(Partition, u64)]> {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        self.table.get(&key).map(Vec::as_slice)
    }

    pub fn mul(&self, a: &ChowClass, b: &ChowClass) -> ChowClass {
        let mut out = ChowClass::zero();
        for (la, ca) in a.terms() {
            for (lb, cb) in b.terms() {
                let c = ca * cb;
                if la.is_empty() {
                    out.add_term(lb.clone(), c);
                } else if lb.is_empty() {
                    out.add_term(la.clone(), c);
                } else if let Some(prod) = self.basis_product(la, lb) {
                    for (nu, m) in prod {
                        out.add_term(nu.clone(), &c * Rational::from_integer(BigInt::from(*m)));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &ChowClass, e: u32) -> ChowClass {
        (0..e).fold(ChowClass::one(), |acc, _| self.mul(&acc, a))
    }

    /// Degree of the zero-cycle part.
    pub fn integrate(&self, a: &ChowClass) -> Rational {
        a.coefficient(&self.point())
    }

    /// `exp(a)` for `a` without constant term.
    pub fn exp(&self, a: &ChowClass) -> Result<ChowClass> {
        if !a.constant_term().is_zero() {
            return Err(Error::invalid("exp needs a class without constant term"));
        }
        let mut out = ChowClass::one();
        let mut power = ChowClass::one();
        for j in 1..=self.dimension() {
            power = self.mul(&power, a).scaled(&Rational::new(BigInt::one(), BigInt::from(j)));
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// Multiplicative inverse of a class with nonzero constant term.
    pub fn inverse(&self, a: &ChowClass) -> Result<ChowClass> {
        let c0 = a.constant_term();
        if c0.is_zero() {
            return Err(Error::invalid("class with zero constant term is not invertible"));
        }
        let inv0 = c0.recip();
        // b_d = −b_0 · Σ_{i=1}^d a_i b_{d−i}, on homogeneous parts.
        let top = self.dimension();
        let parts: Vec<ChowClass> = (0..=top).map(|d| a.degree_part(d)).collect();
        let mut b: Vec<ChowClass> = alloc::vec![ChowClass::constant(inv0.clone())];
        for d in 1..=top as usize {
            let mut acc = ChowClass::zero();
            for i in 1..=d {
                if !parts[i].is_zero() && !b[d - i].is_zero() {
                    acc = &acc + &self.mul(&parts[i], &b[d - i]);
                }
            }
            b.push(-&acc.scaled(&inv0));
        }
        Ok(b.iter().fold(ChowClass::zero(), |acc, x| &acc + x))
    }
}
