//! Borel–Bott–Weil cohomology on `Gr(k, n)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bundle::{normalize, BundleExpr, Grassmannian, IrrSummand};
use crate::error::{Error, Result};
use crate::sym::{weyl_dim, Weight};

/// Cohomology of one irreducible homogeneous bundle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BbwResult {
    Acyclic,
    /// `H^degree ≅ Σ_weight V` and all other groups vanish.
    Nonzero { degree: usize, weight: Weight, dimension: BigUint },
}

impl BbwResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BbwResult::Acyclic => None,
            BbwResult::Nonzero { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> BigUint {
        match self {
            BbwResult::Acyclic => BigUint::zero(),
            BbwResult::Nonzero { dimension, .. } => dimension.clone(),
        }
    }
}

/// Pairs `i < j` with `v_i < v_j`.
pub fn inversions(v: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                count += 1;
            }
        }
    }
    count
}

/// Adjacent transpositions used by bubble sort to put `v` in decreasing order.
pub fn adjacent_swaps(v: &[i64]) -> usize {
    let mut w = v.to_vec();
    let mut swaps = 0;
    for end in (1..w.len()).rev() {
        for i in 0..end {
            if w[i] < w[i + 1] {
                w.swap(i, i + 1);
                swaps += 1;
            }
        }
    }
    swaps
}

/// BBW for a raw `GL(n)` weight `λ = (α | β)`.
pub fn bbw_weight(lambda: &Weight) -> BbwResult {
    let n = lambda.len();
    let shifted: Vec<i64> = lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x + (n - 1 - i) as i64)
        .collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BbwResult::Acyclic;
    }
    let degree = inversions(&shifted);
    debug_assert_eq!(degree, adjacent_swaps(&shifted));
    let mu = Weight::new(sorted.iter().enumerate().map(|(i, &x)| x - (n - 1 - i) as i64).collect());
    let dimension = weyl_dim(&mu).expect("sorted minus rho is dominant");
    BbwResult::Nonzero { degree, weight: mu, dimension }
}

/// BBW for one copy of an irreducible summand.
pub fn bbw(summand: &IrrSummand, g: &Grassmannian) -> Result<BbwResult> {
    if summand.alpha.len() != g.rank_q() || summand.beta.len() != g.rank_u() {
        return Err(Error::invalid(alloc::format!(
            "summand {} does not live on {g}",
            summand.weight()
        )));
    }
    if !summand.alpha.is_dominant() || !summand.beta.is_dominant() {
        return Err(Error::invalid(alloc::format!("summand {} is not dominant", summand.weight())));
    }
    Ok(bbw_weight(&summand.weight()))
}

/// One isotypic piece of a cohomology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTerm {
    pub weight: Weight,
    pub multiplicity: u64,
    /// Dimension of one copy.
    pub dimension: BigUint,
}

impl CohomologyTerm {
    pub fn total_dim(&self) -> BigUint {
        &self.dimension * self.multiplicity
    }
}

/// Cohomology groups indexed by degree, with their `GL(n)` decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    max_degree: usize,
    degrees: BTreeMap<usize, BTreeMap<Weight, u64>>,
}

impl CohomologyTable {
    pub fn new(max_degree: usize) -> Self {
        CohomologyTable { max_degree, degrees: BTreeMap::new() }
    }

    /// Adds `multiplicity` copies of `Σ_weight V` in `degree`.
    pub fn add(&mut self, degree: usize, weight: Weight, multiplicity: u64) {
        if multiplicity > 0 {
            *self.degrees.entry(degree).or_default().entry(weight).or_insert(0) += multiplicity;
        }
    }

    pub fn merge(&mut self, other: &CohomologyTable) {
        for (&d, terms) in &other.degrees {
            for (w, &m) in terms {
                self.add(d, w.clone(), m);
            }
        }
        self.max_degree = self.max_degree.max(other.max_degree);
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Degrees carrying nonzero cohomology.
    pub fn nonzero_degrees(&self) -> Vec<usize> {
        self.degrees.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn terms(&self, degree: usize) -> Vec<CohomologyTerm> {
        self.degrees
            .get(&degree)
            .into_iter()
            .flatten()
            .map(|(w, &m)| CohomologyTerm {
                weight: w.clone(),
                multiplicity: m,
                dimension: weyl_dim(w).expect("dominant"),
            })
            .collect()
    }

    pub fn total_dim(&self, degree: usize) -> BigUint {
        self.terms(degree).iter().map(CohomologyTerm::total_dim).sum()
    }

    /// Total dimensions in degrees `0..=max_degree`.
    pub fn dims(&self) -> Vec<BigUint> {
        (0..=self.max_degree).map(|d| self.total_dim(d)).collect()
    }

    pub fn euler(&self) -> BigInt {
        self.degrees
            .keys()
            .map(|&d| {
                let t = BigInt::from(self.total_dim(d));
                if d % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }
}

/// Cohomology of every summand of `expr` on the Grassmannian.
pub fn cohomology_table(expr: &BundleExpr, g: &Grassmannian) -> Result<CohomologyTable> {
    summands_cohomology(&normalize(expr, g)?, g)
}

pub(crate) fn summands_cohomology(summands: &[IrrSummand], g: &Grassmannian) -> Result<CohomologyTable> {
    let mut table = CohomologyTable::new(g.dimension());
    for s in summands {
        if let BbwResult::Nonzero { degree, weight, .. } = bbw(s, g)? {
            table.add(degree, weight, s.multiplicity);
        }
    }
    Ok(table)
}

/// `χ(Gr(k, n), expr)`.
pub fn euler_char_ambient(expr: &BundleExpr, g: &Grassmannian) -> Result<BigInt> {
    Ok(cohomology_table(expr, g)?.euler())
}
