//! Exact rational linear algebra for expressing a vector in the span of
//! candidate vectors.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::Rational;

/// Row-echelon basis that remembers, for each stored row, its expression in
/// the original candidates.
struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    candidates: usize,
}

impl Echelon {
    fn new(width: usize, candidates: usize) -> Self {
        Echelon { width, rows: Vec::new(), candidates }
    }

    /// Reduces `v` against the stored rows. Returns the remainder and the
    /// combination of candidates that was subtracted.
    fn reduce(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut rem = v.to_vec();
        let mut combo = alloc::vec![Rational::zero(); self.candidates];
        for (pivot, row, row_combo) in &self.rows {
            if rem[*pivot].is_zero() {
                continue;
            }
            let f = rem[*pivot].clone() / &row[*pivot];
            for i in 0..self.width {
                rem[i] -= &f * &row[i];
            }
            for i in 0..self.candidates {
                combo[i] += &f * &row_combo[i];
            }
        }
        (rem, combo)
    }

    /// Adds candidate `index` if it is independent of the stored rows.
    fn try_insert(&mut self, index: usize, v: &[Rational]) -> bool {
        let (rem, combo) = self.reduce(v);
        let Some(pivot) = rem.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let mut own: Vec<Rational> = combo.into_iter().map(|c| -c).collect();
        own[index] += Rational::from_integer(1.into());
        self.rows.push((pivot, rem, own));
        true
    }
}

/// Outcome of [`express`].
pub(crate) struct Expression {
    /// One coefficient per candidate; unselected candidates get zero.
    pub coefficients: Vec<Rational>,
    /// `target − Σ coefficients · candidates`.
    pub residual: Vec<Rational>,
}

/// Greedily selects candidates in order, keeping those independent of the
/// earlier selections, and writes `target` in the span of the selection.
pub(crate) fn express(target: &[Rational], candidates: &[Vec<Rational>]) -> Expression {
    let width = target.len();
    let mut ech = Echelon::new(width, candidates.len());
    for (i, c) in candidates.iter().enumerate() {
        debug_assert_eq!(c.len(), width);
        ech.try_insert(i, c);
    }
    let (residual, coefficients) = ech.reduce(target);
    Expression { coefficients, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn solves_in_span() {
        let cands = vec![v(&[1, 1]), v(&[2, 2]), v(&[0, 1])];
        let e = express(&v(&[3, 5]), &cands);
        assert_eq!(e.coefficients, v(&[3, 0, 2]));
        assert!(e.residual.iter().all(Zero::is_zero));
    }

    #[test]
    fn reports_residual() {
        let e = express(&v(&[3, 5]), &[v(&[1, 1])]);
        assert!(e.residual.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn fractional_coefficients() {
        let e = express(&v(&[1, 0]), &[v(&[2, 0]), v(&[1, 3])]);
        assert_eq!(e.coefficients, vec![Rational::new(1.into(), 2.into()), q(0)]);
    }
}
