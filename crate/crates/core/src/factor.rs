//! Structural matrix factorizations connecting the stochastic and the
//! row-orthogonal descriptions of the same maximal cone.
//!
//! A square matrix has lex-positive columns exactly when it factors as a
//! unit-lower-triangular matrix times a componentwise-nonnegative one.
//! Row-normalizing the nonnegative factor of a row-orthogonal input yields
//! a full-rank stochastic matrix describing the same cone; exact
//! Gram-Schmidt plus canonical scaling inverts the conversion up to
//! positive row scaling.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::gamble::Gamble;
use crate::lex::semispace_equal;
use crate::matrix::RMatrix;
use crate::rational::Rational;

/// Factorization `A = L * P` with `L` unit-lower-triangular and `P`
/// componentwise nonnegative with no zero column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpDecomposition {
    lower: RMatrix,
    nonneg: RMatrix,
}

impl LpDecomposition {
    /// The unit-lower-triangular factor.
    pub fn lower(&self) -> &RMatrix {
        &self.lower
    }

    /// The nonnegative factor.
    pub fn nonneg(&self) -> &RMatrix {
        &self.nonneg
    }
}

/// Factors a column-lex-positive square matrix as unit-lower-triangular
/// times nonnegative.
///
/// Row `i` of the nonnegative factor is the input row minus multiples of
/// the earlier factor rows, processed from row `i - 1` down to row `1`.
/// Each multiple is the smallest entry ratio over the support of the
/// earlier row: the subtraction zeroes the tightest column and never drives
/// a nonnegative entry negative, while columns untouched by every earlier
/// row are nonnegative by column lex-positivity.
pub fn lp_decompose(a: &RMatrix) -> Result<LpDecomposition> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if let Some(column) = a.first_non_lex_positive_col() {
        return Err(Error::ColumnNotLexPositive { column });
    }
    let n = a.nrows();
    let mut nonneg_rows: Vec<Gamble> = Vec::with_capacity(n);
    let mut lower_rows: Vec<Gamble> = Vec::with_capacity(n);
    for i in 0..n {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i] = Rational::one();
        let mut remainder = a.row(i).clone();
        for j in (0..i).rev() {
            let earlier = &nonneg_rows[j];
            let mut ratio: Option<Rational> = None;
            for c in 0..n {
                if !earlier[c].is_zero() {
                    let cand = &remainder[c] / &earlier[c];
                    ratio = Some(match ratio {
                        Some(best) if best <= cand => best,
                        _ => cand,
                    });
                }
            }
            // A zero earlier row (possible for singular inputs) constrains
            // nothing and keeps coefficient zero.
            let multiple = ratio.unwrap_or_else(Rational::zero);
            if !multiple.is_zero() {
                remainder = remainder.sub(&earlier.scale(&multiple));
            }
            coeffs[j] = multiple;
        }
        assert!(
            remainder.is_nonneg(),
            "column-lex-positive input must reduce to nonnegative rows"
        );
        nonneg_rows.push(remainder);
        lower_rows.push(Gamble::new(coeffs));
    }
    Ok(LpDecomposition {
        lower: RMatrix::from_rows(lower_rows).expect("square by construction"),
        nonneg: RMatrix::from_rows(nonneg_rows).expect("square by construction"),
    })
}

/// Converts a row-orthogonal lex-positive-column matrix into a full-rank
/// stochastic matrix describing the same maximal cone, by decomposing and
/// dividing each nonnegative row by its sum.
pub fn stochastic_from_orthogonal(a: &RMatrix) -> Result<RMatrix> {
    a.require_lexpos_orthogonal()?;
    let nonneg = lp_decompose(a)?.nonneg;
    let rows = nonneg
        .rows()
        .iter()
        .map(|r| {
            r.scaled_to_sum_one()
                .expect("full-rank factor rows are nonnegative and nonzero")
        })
        .collect();
    let p = RMatrix::from_rows(rows).expect("row count unchanged");
    p.require_full_rank_stochastic()
        .map_err(|_| Error::Defect("stochastic conversion lost rank or stochasticity"))?;
    Ok(p)
}

/// Exact Gram-Schmidt on rows in order, without normalization. Rows that
/// depend linearly on earlier rows come out zero.
pub(crate) fn gram_schmidt_rows(rows: &[Gamble]) -> Vec<Gamble> {
    let mut basis: Vec<Gamble> = Vec::new();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let mut b = row.clone();
        for u in &basis {
            let coeff = b.inner(u) / u.inner(u);
            if !coeff.is_zero() {
                b = b.sub(&u.scale(&coeff));
            }
        }
        if !b.is_zero() {
            basis.push(b.clone());
        }
        out.push(b);
    }
    out
}

/// Converts a full-rank stochastic matrix into the row-orthogonal
/// lex-positive-column representative of the same maximal cone: exact
/// Gram-Schmidt on rows in order, then canonical positive row scaling.
pub fn orthogonal_from_stochastic(p: &RMatrix) -> Result<RMatrix> {
    p.require_full_rank_stochastic()?;
    let rows = gram_schmidt_rows(p.rows());
    let a = RMatrix::from_rows(rows)
        .expect("row count unchanged")
        .canonical_row_scaled();
    a.require_lexpos_orthogonal()
        .map_err(|_| Error::Defect("orthogonalization lost a required property"))?;
    Ok(a)
}

/// Does the full-rank stochastic matrix describe the same maximal cone as
/// the row-orthogonal lex-positive-column matrix?
pub fn equiv_class_member(p: &RMatrix, a: &RMatrix) -> Result<bool> {
    a.require_lexpos_orthogonal()?;
    semispace_equal(&orthogonal_from_stochastic(p)?, a)
}
