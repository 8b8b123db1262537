//! Exact rank of column subsets of a rational matrix.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::set::ElementSet;

/// A matrix over the rationals whose columns are the ground-set elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
    columns: usize,
    /// The same entries when all are machine-size integers.
    integers: Option<Vec<Vec<i64>>>,
}

impl RationalMatrix {
    /// Builds a matrix from row-major entries. All rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, columns: usize) -> Option<Self> {
        if !rows.iter().all(|r| r.len() == columns) {
            return None;
        }
        let integers = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| q.is_integer().then(|| q.to_integer().to_i64()).flatten())
                    .collect::<Option<Vec<i64>>>()
            })
            .collect();
        Some(RationalMatrix {
            rows,
            columns,
            integers,
        })
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns
    }

    pub fn entry(&self, row: usize, column: usize) -> &BigRational {
        &self.rows[row][column]
    }

    pub fn column_is_zero(&self, column: usize) -> bool {
        self.rows.iter().all(|r| r[column].is_zero())
    }

    /// Rank of the submatrix formed by the columns in `cols`.
    ///
    /// Columns are reduced one at a time against the pivots found so far, so
    /// each column costs `O(rows * rank)` rational operations.
    pub fn column_rank(&self, cols: ElementSet) -> usize {
        self.integers
            .as_ref()
            .and_then(|m| integer_rank(m, cols))
            .unwrap_or_else(|| self.rational_rank(cols))
    }

    fn rational_rank(&self, cols: ElementSet) -> usize {
        let height = self.rows.len();
        // each pivot: (pivot row, fully reduced column vector)
        let mut pivots: Vec<(usize, Vec<BigRational>)> = Vec::new();
        for c in cols {
            let mut v: Vec<BigRational> = self.rows.iter().map(|r| r[c].clone()).collect();
            for (p_row, p_vec) in &pivots {
                if v[*p_row].is_zero() {
                    continue;
                }
                let factor = &v[*p_row] / &p_vec[*p_row];
                for i in 0..height {
                    if !p_vec[i].is_zero() {
                        let delta = &factor * &p_vec[i];
                        v[i] -= delta;
                    }
                }
            }
            if let Some(p_row) = v.iter().position(|x| !x.is_zero()) {
                pivots.push((p_row, v));
                if pivots.len() == height {
                    break;
                }
            }
        }
        pivots.len()
    }
}

/// Fraction-free elimination in `i128`, each reduced column divided by the
/// gcd of its entries. `None` on overflow.
fn integer_rank(rows: &[Vec<i64>], cols: ElementSet) -> Option<usize> {
    let height = rows.len();
    let mut pivots: Vec<(usize, Vec<i128>)> = Vec::new();
    for c in cols {
        let mut v: Vec<i128> = rows.iter().map(|r| i128::from(r[c])).collect();
        for (p_row, p_vec) in &pivots {
            let a = v[*p_row];
            if a == 0 {
                continue;
            }
            let b = p_vec[*p_row];
            for i in 0..height {
                v[i] = v[i].checked_mul(b)?.checked_sub(p_vec[i].checked_mul(a)?)?;
            }
            let g = v.iter().fold(0i128, |g, &x| gcd(g, x));
            if g > 1 {
                v.iter_mut().for_each(|x| *x /= g);
            }
        }
        if let Some(p_row) = v.iter().position(|&x| x != 0) {
            pivots.push((p_row, v));
            if pivots.len() == height {
                break;
            }
        }
    }
    Some(pivots.len())
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn q2(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_of_dependent_columns() {
        // columns: e1, e2, e1+e2, 2*e1
        let m = RationalMatrix::from_rows(
            vec![vec![q(1), q(0), q(1), q(2)], vec![q(0), q(1), q(1), q(0)]],
            4,
        )
        .unwrap();
        assert_eq!(m.column_rank(ElementSet::full(4)), 2);
        assert_eq!(m.column_rank(ElementSet::from_elements([0, 3])), 1);
        assert_eq!(m.column_rank(ElementSet::from_elements([2, 3])), 2);
        assert_eq!(m.column_rank(ElementSet::EMPTY), 0);
    }

    #[test]
    fn fractional_entries_are_exact() {
        // (1/3, 1/7) and (7, 3) are parallel: 21 * first == second
        let m =
            RationalMatrix::from_rows(vec![vec![q2(1, 3), q(7)], vec![q2(1, 7), q(3)]], 2).unwrap();
        assert_eq!(m.column_rank(ElementSet::full(2)), 1);
    }

    #[test]
    fn distinct_prime_two_by_two_is_nonsingular() {
        let m = RationalMatrix::from_rows(vec![vec![q(2), q(3)], vec![q(5), q(7)]], 2).unwrap();
        assert_eq!(m.column_rank(ElementSet::full(2)), 2);
    }

    #[test]
    fn integer_path_agrees_with_rational_path() {
        let rows: Vec<Vec<BigRational>> = (0..4)
            .map(|r| {
                (0..6)
                    .map(|c| q(((r * 7 + c * 3) % 5) as i64 - 2))
                    .collect()
            })
            .collect();
        let m = RationalMatrix::from_rows(rows, 6).unwrap();
        assert!(m.integers.is_some());
        for cols in ElementSet::full(6).subsets() {
            assert_eq!(m.column_rank(cols), m.rational_rank(cols), "{cols}");
        }
    }

    #[test]
    fn huge_entries_fall_back() {
        let big = BigRational::from_integer(BigInt::from(i64::MAX) * BigInt::from(4));
        let m =
            RationalMatrix::from_rows(vec![vec![big.clone(), q(1)], vec![q(1), big]], 2).unwrap();
        assert!(m.integers.is_none());
        assert_eq!(m.column_rank(ElementSet::full(2)), 2);
        let near = q(i64::MAX);
        let m = RationalMatrix::from_rows(
            vec![
                vec![near.clone(), q(1), near.clone()],
                vec![q(1), near.clone(), near],
            ],
            3,
        )
        .unwrap();
        assert_eq!(
            m.column_rank(ElementSet::full(3)),
            m.rational_rank(ElementSet::full(3))
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RationalMatrix::from_rows(vec![vec![q(1)], vec![]], 1).is_none());
    }
}
