//! Exact linear solving by fraction-free (Bareiss) elimination.
//!
//! Elimination stays in integers; rationals appear only at
//! back-substitution. Rank deficiency and inconsistency are reported as
//! errors rather than resolved silently.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number (reduced, positive denominator).
pub type Rational = BigRational;

/// A vector of exact rationals, the output of [`solve_exact_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalVector {
    entries: Vec<Rational>,
}

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RationalVector { entries }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// If every entry is an integer, returns them as such.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("system is inconsistent: no solution exists")]
    Inconsistent,
    #[error("system is rank deficient: columns are linearly dependent")]
    RankDeficient,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}

/// Solves `A x = b` exactly for a full-column-rank `A`.
///
/// `A` may have more rows than columns; every row is treated as a hard
/// constraint. Returns the unique exact solution, or an error when the
/// constraints are contradictory ([`SolveError::Inconsistent`]) or the
/// columns are dependent ([`SolveError::RankDeficient`]).
pub fn solve_exact_linear(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<RationalVector, SolveError> {
    let nrows = a.len();
    if nrows != b.len() {
        return Err(SolveError::Shape(format!(
            "{} rows in A but {} entries in b",
            nrows,
            b.len()
        )));
    }
    let ncols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != ncols) {
        return Err(SolveError::Shape("ragged matrix".to_string()));
    }
    if ncols == 0 {
        return if b.iter().all(Zero::is_zero) {
            Ok(RationalVector::new(Vec::new()))
        } else {
            Err(SolveError::Inconsistent)
        };
    }
    if nrows < ncols {
        return Err(SolveError::RankDeficient);
    }

    // Augmented working matrix.
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full = row.clone();
            full.push(rhs.clone());
            full
        })
        .collect();

    let mut prev_pivot = BigInt::one();
    let mut rank = 0usize;
    let mut free_column = false;

    for col in 0..ncols {
        // Smallest nonzero pivot keeps intermediate entries small.
        let pivot_row = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(pivot_row) = pivot_row else {
            free_column = true;
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..nrows {
            if m[r][col].is_zero() && m[rank][col].is_one() && prev_pivot.is_one() {
                continue;
            }
            for c in col + 1..=ncols {
                let val = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = val.div_rem(&prev_pivot);
                debug_assert!(
                    rem.is_zero(),
                    "fraction-free elimination must divide exactly"
                );
                assert!(
                    rem.is_zero(),
                    "fraction-free elimination must divide exactly"
                );
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = m[rank][col].clone();
        rank += 1;
    }

    // Leftover rows are zero in every column; a nonzero right-hand side
    // there means the constraints contradict each other.
    if m[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    if free_column || rank < ncols {
        return Err(SolveError::RankDeficient);
    }

    // Back-substitution over the rationals on the echelon form.
    let mut x = vec![Rational::zero(); ncols];
    for row in (0..ncols).rev() {
        let mut acc = Rational::from(m[row][ncols].clone());
        for c in row + 1..ncols {
            acc -= Rational::from(m[row][c].clone()) * &x[c];
        }
        x[row] = acc / Rational::from(m[row][row].clone());
    }
    Ok(RationalVector::new(x))
}

/// Exact binomial coefficient with the convention that out-of-range
/// arguments (k < 0, k > n or n < 0) give 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for r in 1..=k {
        acc = acc * BigInt::from(n - k + r) / BigInt::from(r);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn vec_i(entries: &[i64]) -> Vec<BigInt> {
        entries.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn one_by_one() {
        let x = solve_exact_linear(&mat(&[&[1]]), &vec_i(&[7])).unwrap();
        assert_eq!(x.entries(), &[rat(7, 1)]);
    }

    #[test]
    fn diagonal_with_rational_solution() {
        let x = solve_exact_linear(&mat(&[&[2, 0], &[0, 4]]), &vec_i(&[1, 2])).unwrap();
        assert_eq!(x.entries(), &[rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn overdetermined_consistent() {
        // x = 2, y = 3 seen through three constraints.
        let a = mat(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = solve_exact_linear(&a, &vec_i(&[2, 3, 5])).unwrap();
        assert_eq!(x.entries(), &[rat(2, 1), rat(3, 1)]);
    }

    #[test]
    fn inconsistent_detected() {
        let a = mat(&[&[1], &[1]]);
        assert_eq!(
            solve_exact_linear(&a, &vec_i(&[1, 2])),
            Err(SolveError::Inconsistent)
        );
    }

    #[test]
    fn rank_deficiency_detected() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            solve_exact_linear(&a, &vec_i(&[1, 2])),
            Err(SolveError::RankDeficient)
        );
    }

    #[test]
    fn wide_system_is_rank_deficient() {
        let a = mat(&[&[1, 2]]);
        assert_eq!(
            solve_exact_linear(&a, &vec_i(&[1])),
            Err(SolveError::RankDeficient)
        );
    }

    #[test]
    fn residual_is_exactly_zero() {
        let a = mat(&[&[3, -2, 4], &[7, 5, 1], &[-2, 9, 6], &[8, 1, -3]]);
        // b = A * (1, -2, 3)
        let x_true = [1i64, -2, 3];
        let b: Vec<BigInt> = a
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x_true)
                    .map(|(c, x)| c * BigInt::from(x))
                    .sum()
            })
            .collect();
        let x = solve_exact_linear(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let acc: Rational = row
                .iter()
                .zip(x.entries())
                .map(|(c, xi)| Rational::from(c.clone()) * xi)
                .sum();
            assert_eq!(acc, Rational::from(rhs.clone()));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(2, 2), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }
}
