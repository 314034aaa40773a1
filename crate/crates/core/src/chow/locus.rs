use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::classes::{chern_character, chern_from_ch, discriminant, log_todd_from_ch};
use super::ring::{ChowClass, SchubertRing};
use crate::bundle::{rank, BundleExpr};
use crate::error::{Error, Result};
use crate::koszul::ZeroLocus;
use crate::linalg::express;
use crate::sym::Partition;
use crate::Rational;

/// Ambient classes attached to a zero locus `X ⊂ G`.
#[derive(Clone, Debug)]
pub struct ZeroLocusChow {
    locus: ZeroLocus,
    ring: SchubertRing,
    c_tx: ChowClass,
    ctop_n: ChowClass,
    log_todd_tx: ChowClass,
}

/// Result of comparing `Δ(E)` with `c_2(X)` on `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityCertificate {
    pub lambda: Rational,
    pub certified: bool,
    /// `(w, ∫_X Δ·w, ∫_X c_2(X)·w)` for every Schubert class `w` of
    /// complementary degree.
    pub pairings: Vec<(Partition, Rational, Rational)>,
    /// Certification only sees pairings with ambient classes; it treats the
    /// restriction to `X` as injective on the classes involved.
    pub restriction_injectivity_assumed: bool,
}

/// One coordinate of a class written in a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTerm {
    pub degree: usize,
    pub label: String,
    pub coefficient: Rational,
}

/// A class written numerically on `X` in a named basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisExpansion {
    pub terms: Vec<BasisTerm>,
}

impl BasisExpansion {
    /// Coefficient of `label`, zero when absent.
    pub fn coefficient(&self, label: &str) -> Rational {
        self.terms
            .iter()
            .find(|t| t.label == label)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coefficient.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = t.coefficient.abs();
            match (t.label.as_str(), a.is_one()) {
                ("1", _) => write!(f, "{a}")?,
                (l, true) => f.write_str(l)?,
                (l, false) => write!(f, "{a} {l}")?,
            }
        }
        Ok(())
    }
}

type Candidates = Vec<(String, ChowClass)>;

impl ZeroLocusChow {
    pub fn new(locus: ZeroLocus) -> Result<Self> {
        let g = *locus.grassmannian();
        let ring = SchubertRing::new(g);
        let top = ring.dimension() as u32;
        let tg = BundleExpr::tensor(BundleExpr::dual(BundleExpr::U), BundleExpr::Q);
        let n = locus.normal();
        let (ch_tg, ch_n) = (chern_character(&ring, &tg, top)?, chern_character(&ring, &n, top)?);
        let c_n = chern_from_ch(&ring, &ch_n, top);
        let c_tx = ring.mul(&chern_from_ch(&ring, &ch_tg, top), &ring.inverse(&c_n)?);
        let ctop_n = c_n.degree_part(locus.codim() as u64);
        let log_todd_tx = &log_todd_from_ch(&ch_tg, top.into()) - &log_todd_from_ch(&ch_n, top.into());
        Ok(ZeroLocusChow { locus, ring, c_tx, ctop_n, log_todd_tx })
    }

    pub fn locus(&self) -> &ZeroLocus {
        &self.locus
    }

    pub fn ring(&self) -> &SchubertRing {
        &self.ring
    }

    pub fn dimension(&self) -> usize {
        self.locus.dimension()
    }

    /// `c(T_X) = c(T_G) · c(N)^{-1}` as an ambient class.
    pub fn chern_tx(&self) -> &ChowClass {
        &self.c_tx
    }

    /// `c_i(T_X)`.
    pub fn c_x(&self, i: u64) -> ChowClass {
        self.c_tx.degree_part(i)
    }

    pub fn c2x(&self) -> ChowClass {
        self.c_x(2)
    }

    pub fn c4x(&self) -> ChowClass {
        self.c_x(4)
    }

    /// `c_top(N)`, the class of `X` in `G`.
    pub fn ctop_n(&self) -> &ChowClass {
        &self.ctop_n
    }

    pub fn h(&self) -> ChowClass {
        self.ring.h()
    }

    /// `h_i = c_i(Q)`.
    pub fn h_i(&self, i: u32) -> ChowClass {
        self.ring.c_q(i)
    }

    /// `∫_X a = ∫_G a · c_top(N)`.
    pub fn integrate(&self, a: &ChowClass) -> Rational {
        self.ring.integrate(&self.ring.mul(a, &self.ctop_n))
    }

    /// `∫_X h^{dim X}`.
    pub fn degree(&self) -> Rational {
        self.integrate(&self.ring.pow(&self.h(), self.dimension() as u32))
    }

    /// Pairings of the degree-`d` part of `a` with every Schubert class of
    /// complementary degree on `X`.
    fn pairing_vector(&self, a: &ChowClass, d: usize) -> Vec<Rational> {
        let part = a.degree_part(d as u64);
        self.ring
            .basis((self.dimension() - d) as u64)
            .into_iter()
            .map(|w| self.integrate(&self.ring.mul(&part, &ChowClass::sigma(w))))
            .collect()
    }

    /// Tests whether `Δ(expr)` is a multiple of `c_2(X)` on `X`.
    pub fn modularity_check(&self, expr: &BundleExpr) -> Result<ModularityCertificate> {
        if self.dimension() < 2 {
            return Err(Error::invalid("modularity needs dim X >= 2"));
        }
        let g = self.locus.grassmannian();
        let r = rank(expr, g);
        if r.is_zero() {
            return Err(Error::invalid("modularity needs positive rank"));
        }
        let delta = discriminant(&self.ring, expr)?;
        let c2 = self.c2x();
        let basis = self.ring.basis((self.dimension() - 2) as u64);
        let pairings: Vec<(Partition, Rational, Rational)> = basis
            .into_iter()
            .map(|w| {
                let s = ChowClass::sigma(w.clone());
                let pd = self.integrate(&self.ring.mul(&delta, &s));
                let pc = self.integrate(&self.ring.mul(&c2, &s));
                (w, pd, pc)
            })
            .collect();
        let Some((_, pd, pc)) = pairings.iter().find(|(_, _, pc)| !pc.is_zero()) else {
            return Err(Error::Degenerate("c2(X) pairs to zero with every complementary class".into()));
        };
        let lambda = pd / pc;
        let certified = pairings.iter().all(|(_, pd, pc)| *pd == &lambda * pc);
        Ok(ModularityCertificate { lambda, certified, pairings, restriction_injectivity_assumed: true })
    }

    /// `χ(X, expr|_X) = ∫_X ch(expr) · td(T_X)`.
    pub fn hrr_euler(&self, expr: &BundleExpr) -> Result<BigInt> {
        let d = self.dimension() as u64;
        let ch = chern_character(&self.ring, expr, d as u32)?;
        // Only degrees up to dim X survive against c_top(N).
        let a = self.log_todd_tx.truncated(d);
        let mut td = ChowClass::one();
        let mut power = ChowClass::one();
        for j in 1..=d {
            power = self.ring.mul(&power, &a).truncated(d).scaled(&Rational::new(BigInt::one(), BigInt::from(j)));
            td = &td + &power;
        }
        let value = self.integrate(&self.ring.mul(&ch, &td));
        if !value.is_integer() {
            return Err(Error::internal(alloc::format!("Riemann-Roch gave a non-integer {value}")));
        }
        Ok(value.to_integer())
    }

    fn monomial(&self, factors: &[(ChowClass, u32)]) -> ChowClass {
        factors
            .iter()
            .fold(ChowClass::one(), |acc, (c, e)| self.ring.mul(&acc, &self.ring.pow(c, *e)))
    }

    fn h_candidates(&self, d: usize) -> Candidates {
        let h = self.h();
        let power = |e: usize| match e {
            0 => String::new(),
            1 => String::from("h"),
            e => alloc::format!("h^{e}"),
        };
        let mut out: Candidates = Vec::new();
        let max_index = self.locus.grassmannian().rank_q().min(d);
        let top = d == self.dimension() && d > 1;
        for j in (2..=max_index).rev() {
            let label = |a: usize| {
                if a == 0 {
                    alloc::format!("h{j}")
                } else {
                    alloc::format!("{}*h{j}", power(a))
                }
            };
            out.push((label(d - j), self.monomial(&[(h.clone(), (d - j) as u32), (self.h_i(j as u32), 1)])));
        }
        if top {
            out.rotate_left(1);
        }
        out.push((if d == 0 { String::from("1") } else { power(d) }, self.ring.pow(&h, d as u32)));
        out
    }

    fn intrinsic_candidates(&self, d: usize) -> Candidates {
        let h = self.h();
        let power = |e: usize| match e {
            0 => String::new(),
            1 => String::from("h*"),
            e => alloc::format!("h^{e}*"),
        };
        let mut out: Candidates = Vec::new();
        for j in (2..=d).rev() {
            out.push((
                alloc::format!("{}c{j}(X)", power(d - j)),
                self.ring.mul(&self.ring.pow(&h, (d - j) as u32), &self.c_x(j as u64)),
            ));
        }
        let label = match d {
            0 => String::from("1"),
            1 => String::from("h"),
            d => alloc::format!("h^{d}"),
        };
        out.push((label, self.ring.pow(&h, d as u32)));
        out
    }

    fn to_basis(&self, a: &ChowClass, candidates: impl Fn(usize) -> Candidates) -> Result<BasisExpansion> {
        let mut terms = Vec::new();
        for d in 0..=self.dimension() {
            let target = self.pairing_vector(a, d);
            if target.iter().all(Zero::is_zero) {
                continue;
            }
            let cands = candidates(d);
            let vectors: Vec<Vec<Rational>> = cands.iter().map(|(_, c)| self.pairing_vector(c, d)).collect();
            let e = express(&target, &vectors);
            if e.residual.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotExpressible {
                    degree: d,
                    residual: e.residual.iter().map(|x| alloc::format!("{x}")).collect(),
                });
            }
            for ((label, _), c) in cands.into_iter().zip(e.coefficients) {
                if !c.is_zero() {
                    terms.push(BasisTerm { degree: d, label, coefficient: c });
                }
            }
        }
        Ok(BasisExpansion { terms })
    }

    /// Writes `a|_X` numerically in monomials of `h` and `h_i = c_i(Q|_X)`.
    /// Top-degree classes are written as multiples of `h·h_{d−1}`.
    pub fn to_h_basis(&self, a: &ChowClass) -> Result<BasisExpansion> {
        self.to_basis(a, |d| self.h_candidates(d))
    }

    /// Writes `a|_X` numerically in `h` and the Chern classes of `X`,
    /// preferring `c_d(X)`, then `h·c_{d−1}(X)`, and so on, then `h^d`.
    pub fn to_intrinsic_basis(&self, a: &ChowClass) -> Result<BasisExpansion> {
        self.to_basis(a, |d| self.intrinsic_candidates(d))
    }
}
