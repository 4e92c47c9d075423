//! Exact Gaussian elimination over `Q`.

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolveError {
    Inconsistent,
    Underdetermined,
}

/// One equation `Σ_j coeffs[j] * y_j = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEquation {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

/// Solves a (possibly overdetermined) system for `unknowns` variables.
/// Redundant rows must be consistent; every variable must be pinned down.
pub fn solve_exact(
    equations: &[LinearEquation],
    unknowns: usize,
) -> Result<Vec<BigRational>, LinearSolveError> {
    let mut rows: Vec<Vec<BigRational>> = equations
        .iter()
        .map(|eq| {
            let mut row = eq.coeffs.clone();
            row.resize(unknowns, BigRational::zero());
            row.push(eq.rhs.clone());
            row
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            return Err(LinearSolveError::Underdetermined);
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot) {
                *v -= &factor * pv;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(LinearSolveError::Inconsistent);
    }
    Ok(pivots
        .into_iter()
        .map(|r| rows[r][unknowns].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn eq(coeffs: &[(i64, i64)], rhs: (i64, i64)) -> LinearEquation {
        LinearEquation {
            coeffs: coeffs.iter().map(|&(n, d)| rat(n, d)).collect(),
            rhs: rat(rhs.0, rhs.1),
        }
    }

    #[test]
    fn square_system() {
        // x + y = 3, x - y = 1
        let sol = solve_exact(
            &[
                eq(&[(1, 1), (1, 1)], (3, 1)),
                eq(&[(1, 1), (-1, 1)], (1, 1)),
            ],
            2,
        );
        assert_eq!(sol.unwrap(), vec![rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let base = [eq(&[(0, 1), (2, 1)], (1, 3)), eq(&[(1, 2), (0, 1)], (1, 1))];
        let mut rows = base.to_vec();
        rows.push(eq(&[(1, 1), (1, 1)], (13, 6)));
        assert_eq!(solve_exact(&rows, 2).unwrap(), vec![rat(2, 1), rat(1, 6)]);
        rows.push(eq(&[(1, 1), (0, 1)], (0, 1)));
        assert_eq!(solve_exact(&rows, 2), Err(LinearSolveError::Inconsistent));
    }

    #[test]
    fn underdetermined() {
        let rows = [eq(&[(1, 1), (1, 1)], (1, 1))];
        assert_eq!(
            solve_exact(&rows, 2),
            Err(LinearSolveError::Underdetermined)
        );
    }
}
