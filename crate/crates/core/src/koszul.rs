//! Cohomology of restrictions to the zero locus `X ⊂ Gr(k, n)` of a general
//! section of a homogeneous bundle `N`, through the Koszul resolution
//! `0 → ∧^c N∨ → … → N∨ → O → O_X → 0`.
//!
//! Tensoring with `B` gives a first-quadrant-style page
//! `E_1^{−q,p} = H^p(G, ∧^q N∨ ⊗ B)` converging to `H^{p−q}(X, B|_X)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::bbw::{bbw, euler_char_ambient, BbwResult, CohomologyTable, CohomologyTerm};
use crate::bundle::{normalize, rank, tensor_summands, BundleExpr, Grassmannian, IrrSummand};
use crate::error::{Error, Result};
use crate::sym::{weyl_dim, Weight};

/// A Koszul cell index `(q, p)`: `H^p(G, ∧^q N∨ ⊗ B)`.
pub type Cell = (usize, usize);

/// Zero locus of a general section of `N = conormal∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocus {
    g: Grassmannian,
    conormal: BundleExpr,
    codim: usize,
}

impl ZeroLocus {
    /// Set-up from the conormal bundle `N∨`.
    pub fn new(g: Grassmannian, conormal: BundleExpr) -> Result<Self> {
        let codim = rank(&conormal, &g)
            .to_usize()
            .ok_or_else(|| Error::invalid("conormal rank does not fit in usize"))?;
        if codim == 0 || codim >= g.dimension() {
            return Err(Error::invalid(alloc::format!(
                "codimension {codim} must lie strictly between 0 and dim {g} = {}",
                g.dimension()
            )));
        }
        Ok(ZeroLocus { g, conormal, codim })
    }

    /// Set-up from the bundle `N` whose section cuts out `X`.
    pub fn from_section_bundle(g: Grassmannian, normal: BundleExpr) -> Result<Self> {
        ZeroLocus::new(g, BundleExpr::dual(normal))
    }

    pub fn grassmannian(&self) -> &Grassmannian {
        &self.g
    }

    pub fn conormal(&self) -> &BundleExpr {
        &self.conormal
    }

    pub fn normal(&self) -> BundleExpr {
        BundleExpr::dual(self.conormal.clone())
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn dimension(&self) -> usize {
        self.g.dimension() - self.codim
    }

    /// Number of terms `∧^0 N∨, …, ∧^c N∨` of the Koszul complex.
    pub fn koszul_length(&self) -> usize {
        self.codim + 1
    }

    /// `∧^q N∨` for a single `q`.
    pub fn koszul_factor(&self, q: usize) -> Result<Vec<IrrSummand>> {
        let q = u32::try_from(q).map_err(|_| Error::invalid("Koszul index too large"))?;
        normalize(&BundleExpr::wedge(q, self.conormal.clone()), &self.g)
    }

    /// `∧^q N∨` for `q = 0..=codim`.
    pub fn koszul_factors(&self) -> Result<Vec<Vec<IrrSummand>>> {
        (0..=self.codim).map(|q| self.koszul_factor(q)).collect()
    }

    /// The full `E_1` page for `target`.
    pub fn e1_page(&self, target: &BundleExpr) -> Result<E1Page> {
        let factors = self.koszul_factors()?;
        let mut page = E1Page::default();
        for s in normalize(target, &self.g)? {
            page.absorb(&self.summand_page(&factors, &s)?);
        }
        Ok(page)
    }

    fn summand_page(&self, factors: &[Vec<IrrSummand>], s: &IrrSummand) -> Result<E1Page> {
        let mut page = E1Page::default();
        for (q, factor) in factors.iter().enumerate() {
            for t in tensor_summands(factor, core::slice::from_ref(s), &self.g) {
                if let BbwResult::Nonzero { degree, weight, .. } = bbw(&t, &self.g)? {
                    page.add((q, degree), weight, t.multiplicity);
                }
            }
        }
        Ok(page)
    }

    /// `H^•(X, target|_X)` when no differential can be nonzero.
    ///
    /// The Koszul complex tensored with a direct sum splits, so potential
    /// differentials are only searched within the page of each irreducible
    /// summand of `target`.
    pub fn restrict_cohomology(&self, target: &BundleExpr) -> Result<Restriction> {
        let factors = self.koszul_factors()?;
        let mut page = E1Page::default();
        let mut conflicts = BTreeSet::new();
        for s in normalize(target, &self.g)? {
            let sub = self.summand_page(&factors, &s)?;
            conflicts.extend(sub.potential_differentials());
            page.absorb(&sub);
        }
        let table = page.abutment(self.dimension(), conflicts.is_empty())?;
        let support = page.support();
        if conflicts.is_empty() {
            Ok(Restriction::Exact { table, support })
        } else {
            Ok(Restriction::Indeterminate { upper_bounds: table, conflicts: conflicts.into_iter().collect() })
        }
    }

    /// `χ(X, target|_X) = Σ_q (−1)^q χ(G, ∧^q N∨ ⊗ target)`.
    pub fn euler_characteristic(&self, target: &BundleExpr) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for q in 0..=self.codim {
            let term = BundleExpr::tensor(BundleExpr::wedge(q as u32, self.conormal.clone()), target.clone());
            let chi = euler_char_ambient(&term, &self.g)?;
            if q % 2 == 0 {
                total += chi;
            } else {
                total -= chi;
            }
        }
        Ok(total)
    }
}

/// Nonzero cells of the `E_1` page, each with its `GL(n)` decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E1Page {
    cells: BTreeMap<Cell, BTreeMap<Weight, u64>>,
}

impl E1Page {
    fn add(&mut self, cell: Cell, w: Weight, m: u64) {
        *self.cells.entry(cell).or_default().entry(w).or_insert(0) += m;
    }

    fn absorb(&mut self, other: &E1Page) {
        for (&cell, terms) in &other.cells {
            for (w, &m) in terms {
                self.add(cell, w.clone(), m);
            }
        }
    }

    /// Nonzero cells in increasing `(q, p)` order.
    pub fn support(&self) -> Vec<Cell> {
        self.cells.keys().copied().collect()
    }

    pub fn cell(&self, q: usize, p: usize) -> Vec<CohomologyTerm> {
        self.cells
            .get(&(q, p))
            .into_iter()
            .flatten()
            .map(|(w, &m)| CohomologyTerm { weight: w.clone(), multiplicity: m, dimension: weyl_dim(w).expect("dominant") })
            .collect()
    }

    pub fn cell_dim(&self, q: usize, p: usize) -> BigUint {
        self.cell(q, p).iter().map(CohomologyTerm::total_dim).sum()
    }

    /// Pairs of nonzero cells `(q, p) → (q − r, p − r + 1)` with `r ≥ 1`.
    pub fn potential_differentials(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for &(q, p) in self.cells.keys() {
            for r in 1..=q {
                if p + 1 < r {
                    break;
                }
                let target = (q - r, p + 1 - r);
                if self.cells.contains_key(&target) {
                    out.push(((q, p), target));
                }
            }
        }
        out
    }

    fn abutment(&self, dim_x: usize, exact: bool) -> Result<CohomologyTable> {
        let mut table = CohomologyTable::new(dim_x);
        for (&(q, p), terms) in &self.cells {
            if p < q || p - q > dim_x {
                if exact {
                    return Err(Error::internal(alloc::format!(
                        "cell ({q},{p}) survives but contributes to degree {} outside [0,{dim_x}]",
                        p as i64 - q as i64
                    )));
                }
                continue;
            }
            for (w, &m) in terms {
                table.add(p - q, w.clone(), m);
            }
        }
        Ok(table)
    }
}

/// Result of restricting to the zero locus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// The page degenerates; `support` lists the nonzero cells `(q, p)`.
    Exact { table: CohomologyTable, support: Vec<Cell> },
    /// Some differential might be nonzero; dimensions are upper bounds.
    Indeterminate { upper_bounds: CohomologyTable, conflicts: Vec<(Cell, Cell)> },
}

impl Restriction {
    pub fn table(&self) -> &CohomologyTable {
        match self {
            Restriction::Exact { table, .. } => table,
            Restriction::Indeterminate { upper_bounds, .. } => upper_bounds,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Restriction::Exact { .. })
    }
}
