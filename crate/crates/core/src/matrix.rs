//! Exact rational matrices with the predicates the polarity theory needs:
//! row orthogonality, stochasticity, rank, and columnwise lexicographic sign.

use num::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::gamble::Gamble;
use crate::rational::Rational;

/// An m x n matrix of exact rationals, stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct RMatrix {
    rows: Vec<Gamble>,
}

impl RMatrix {
    /// Builds a matrix from rows; at least one row, all of equal dimension.
    pub fn from_rows(rows: Vec<Gamble>) -> Result<Self> {
        let first = rows.first().ok_or(Error::Empty("matrix"))?;
        let ncols = first.dim();
        for r in &rows {
            if r.dim() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.dim(),
                });
            }
        }
        Ok(RMatrix { rows })
    }

    /// Convenience constructor from integer literals.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        RMatrix::from_rows(rows.iter().map(|r| Gamble::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RMatrix {
            rows: (0..n).map(|i| Gamble::basis(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].dim()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn rows(&self) -> &[Gamble] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gamble {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.rows[i].get(j)
    }

    pub fn col(&self, j: usize) -> Gamble {
        Gamble::new(self.rows.iter().map(|r| r.get(j).clone()).collect())
    }

    /// Matrix-vector product `A g`.
    pub fn mul_gamble(&self, g: &Gamble) -> Result<Gamble> {
        if g.dim() != self.ncols() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols(),
                got: g.dim(),
            });
        }
        Ok(Gamble::new(self.rows.iter().map(|r| r.inner(g)).collect()))
    }

    /// Lexicographic sign of `A g` against the zero vector.
    pub fn mul_lex_sign(&self, g: &Gamble) -> Result<Ordering> {
        Ok(self.mul_gamble(g)?.lex_sign())
    }

    /// Matrix product `A B`.
    pub fn matmul(&self, other: &RMatrix) -> Result<RMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.ncols(),
                got: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                Gamble::new(
                    (0..other.ncols())
                        .map(|j| {
                            (0..other.nrows())
                                .map(|k| r.get(k) * other.entry(k, j))
                                .sum()
                        })
                        .collect(),
                )
            })
            .collect();
        RMatrix::from_rows(rows)
    }

    pub fn transpose(&self) -> RMatrix {
        RMatrix {
            rows: (0..self.ncols()).map(|j| self.col(j)).collect(),
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            })
        }
    }

    /// True iff every column is lexicographically greater than the zero
    /// vector. Requires a square matrix.
    pub fn cols_lex_positive(&self) -> Result<bool> {
        self.require_square()?;
        Ok((0..self.ncols()).all(|j| self.col(j).lex_sign() == Ordering::Greater))
    }

    /// Companion of [`cols_lex_positive`](Self::cols_lex_positive) allowing
    /// zero columns.
    pub fn cols_lex_nonneg(&self) -> Result<bool> {
        self.require_square()?;
        Ok((0..self.ncols()).all(|j| self.col(j).lex_sign() != Ordering::Less))
    }

    /// Index of the first column that is not lexicographically positive.
    pub(crate) fn first_non_lex_positive_col(&self) -> Option<usize> {
        (0..self.ncols()).find(|&j| self.col(j).lex_sign() != Ordering::Greater)
    }

    /// Pairwise-zero row inner products with no zero row: the exact-rational
    /// surrogate of a matrix with orthonormal rows (normalization replaced by
    /// positive row scaling, which every predicate here is invariant under).
    pub fn is_row_orthogonal(&self) -> bool {
        if self.rows.iter().any(Gamble::is_zero) {
            return false;
        }
        for i in 0..self.nrows() {
            for j in i + 1..self.nrows() {
                if !self.rows[i].inner(&self.rows[j]).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Every row a probability mass function.
    pub fn is_stochastic(&self) -> bool {
        self.rows.iter().all(Gamble::is_pmf)
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let (m, n) = (self.nrows(), self.ncols());
        let mut rank = 0;
        for col in 0..n {
            if rank == m {
                break;
            }
            let Some(pivot) = (rank..m).find(|&i| !work[i][col].is_zero()) else {
                continue;
            };
            work.swap(rank, pivot);
            let inv = work[rank][col].clone().recip();
            for j in col..n {
                work[rank][j] = &work[rank][j] * &inv;
            }
            for i in 0..m {
                if i != rank && !work[i][col].is_zero() {
                    let factor = work[i][col].clone();
                    for j in col..n {
                        let delta = &factor * &work[rank][j];
                        work[i][j] = &work[i][j] - &delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.nrows().min(self.ncols())
    }

    /// Canonical form under positive row scaling: each nonzero row scaled so
    /// its first nonzero entry has absolute value one.
    pub fn canonical_row_scaled(&self) -> RMatrix {
        RMatrix::from_rows(self.rows.iter().map(Gamble::canonical_ray).collect())
            .expect("row count unchanged")
    }

    /// Checks the precondition bundle shared by the semispace operations:
    /// square, row-orthogonal, full-rank, lexicographically positive columns.
    pub(crate) fn require_lexpos_orthogonal(&self) -> Result<()> {
        self.require_square()?;
        if !self.is_row_orthogonal() {
            return Err(Error::NotRowOrthogonal);
        }
        if !self.is_full_rank() {
            return Err(Error::RankDeficient {
                rank: self.rank(),
                need: self.nrows(),
            });
        }
        if let Some(column) = self.first_non_lex_positive_col() {
            return Err(Error::ColumnNotLexPositive { column });
        }
        Ok(())
    }

    /// Checks the precondition bundle for lexicographic-probability matrices:
    /// square, stochastic, full-rank.
    pub(crate) fn require_full_rank_stochastic(&self) -> Result<()> {
        self.require_square()?;
        if !self.is_stochastic() {
            return Err(Error::NotStochastic);
        }
        if !self.is_full_rank() {
            return Err(Error::RankDeficient {
                rank: self.rank(),
                need: self.nrows(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in &self.rows {
            writeln!(f, "  {:?}", r)?;
        }
        write!(f, "]")
    }
}

/// Positive diagonal scaling `diag(d) * A`; panics unless `d` has one entry
/// per row and all entries are positive.
pub fn scale_rows(a: &RMatrix, d: &[Rational]) -> RMatrix {
    assert_eq!(a.nrows(), d.len(), "one scale per row");
    assert!(d.iter().all(Signed::is_positive), "row scales must be positive");
    RMatrix::from_rows(
        a.rows()
            .iter()
            .zip(d)
            .map(|(r, s)| r.scale(s))
            .collect(),
    )
    .expect("row count unchanged")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn m(rows: &[&[i64]]) -> RMatrix {
        RMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn cols_lex_positive_examples() {
        assert!(RMatrix::identity(3).cols_lex_positive().unwrap());
        let a = m(&[&[0, 1, 1], &[0, -1, 1], &[1, 0, 0]]);
        assert!(a.cols_lex_positive().unwrap());
        let zero_col = m(&[&[1, 0], &[2, 0]]);
        assert!(!zero_col.cols_lex_positive().unwrap());
        assert!(zero_col.cols_lex_nonneg().unwrap());
    }

    #[test]
    fn cols_lex_positive_requires_square() {
        assert!(m(&[&[1, 0, 0]]).cols_lex_positive().is_err());
    }

    #[test]
    fn row_orthogonality() {
        let a = m(&[&[0, 1, 1], &[0, -1, 1], &[1, 0, 0]]);
        assert!(a.is_row_orthogonal());
        assert!(!m(&[&[1, 1], &[1, 0]]).is_row_orthogonal());
        assert!(!m(&[&[1, 0], &[0, 0]]).is_row_orthogonal());
    }

    #[test]
    fn stochastic_predicate() {
        let p = RMatrix::from_rows(vec![
            Gamble::new(vec![rat(1, 2), rat(1, 2)]),
            Gamble::new(vec![rat(0, 1), rat(1, 1)]),
        ])
        .unwrap();
        assert!(p.is_stochastic());
        assert!(!m(&[&[1, 1], &[0, 1]]).is_stochastic());
        assert!(!m(&[&[2, -1], &[0, 1]]).is_stochastic());
    }

    #[test]
    fn rank_and_full_rank() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert!(m(&[&[1, 2, 3], &[0, 1, 1]]).is_full_rank());
        assert!(!m(&[&[1, 1], &[1, 1]]).is_full_rank());
    }

    #[test]
    fn matmul_and_mul_gamble() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.matmul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        let g = Gamble::from_ints(&[1, -1]);
        assert_eq!(a.mul_gamble(&g).unwrap(), Gamble::from_ints(&[-1, -1]));
        assert!(a.mul_gamble(&Gamble::from_ints(&[1])).is_err());
    }

    #[test]
    fn canonical_row_scaling_preserves_column_lex_sign() {
        let a = m(&[&[0, 2, 2], &[0, -3, 3], &[5, 0, 0]]);
        let c = a.canonical_row_scaled();
        assert_eq!(c, m(&[&[0, 1, 1], &[0, -1, 1], &[1, 0, 0]]));
        assert_eq!(
            a.cols_lex_positive().unwrap(),
            c.cols_lex_positive().unwrap()
        );
    }

    #[test]
    fn scale_rows_positive_diagonal() {
        let a = m(&[&[1, -1], &[0, 1]]);
        let d = vec![rat(1, 2), rat(3, 1)];
        let s = scale_rows(&a, &d);
        assert_eq!(s.entry(0, 0), &rat(1, 2));
        assert_eq!(s.entry(1, 1), &rat(3, 1));
        assert_eq!(
            a.cols_lex_positive().unwrap(),
            s.cols_lex_positive().unwrap()
        );
    }
}
