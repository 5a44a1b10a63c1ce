//! Gambles: exact rational vectors with the componentwise and lexicographic
//! order relations used throughout the crate.

use num::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, rational_to_string, Rational};

/// An n-dimensional vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gamble {
    coords: Vec<Rational>,
}

impl Gamble {
    /// Builds a gamble from coordinates; the dimension must be positive.
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "gamble needs at least one coordinate");
        Gamble { coords }
    }

    /// Convenience constructor from integer literals.
    pub fn from_ints(coords: &[i64]) -> Self {
        Gamble::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Gamble::new(vec![Rational::zero(); dim])
    }

    /// The all-minus-ones gamble, a uniform sure loss.
    pub fn neg_ones(dim: usize) -> Self {
        Gamble::new(vec![int(-1); dim])
    }

    /// The i-th canonical basis vector (0-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        let mut coords = vec![Rational::zero(); dim];
        coords[i] = int(1);
        Gamble { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// Standard inner product. Panics on dimension mismatch; callers at API
    /// boundaries check dimensions first.
    pub fn inner(&self, other: &Gamble) -> Rational {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &Gamble) -> Gamble {
        assert_eq!(self.dim(), other.dim(), "addition dimension mismatch");
        Gamble {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Gamble) -> Gamble {
        assert_eq!(self.dim(), other.dim(), "subtraction dimension mismatch");
        Gamble {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Gamble {
        Gamble {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Gamble {
        Gamble {
            coords: self.coords.iter().map(|a| a * r).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Componentwise `>= 0`.
    pub fn is_nonneg(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Componentwise `>= 0` and not the zero vector (the partial order `g > 0`).
    pub fn is_positive(&self) -> bool {
        self.is_nonneg() && !self.is_zero()
    }

    /// Componentwise partial order `g <= f`.
    pub fn le(&self, other: &Gamble) -> bool {
        assert_eq!(self.dim(), other.dim(), "comparison dimension mismatch");
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    /// Strict partial order `g < f`: `g <= f` and `g != f`.
    pub fn lt(&self, other: &Gamble) -> bool {
        self.le(other) && self != other
    }

    /// Lexicographic comparison against the zero vector: the sign of the
    /// first nonzero coordinate, or `Equal` for the zero vector.
    pub fn lex_sign(&self) -> Ordering {
        for c in &self.coords {
            if c.is_positive() {
                return Ordering::Greater;
            }
            if c.is_negative() {
                return Ordering::Less;
            }
        }
        Ordering::Equal
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    /// True iff the gamble is a probability mass function: nonnegative
    /// coordinates summing to one.
    pub fn is_pmf(&self) -> bool {
        self.is_nonneg() && self.sum() == int(1)
    }

    /// Scales to sum one; `None` when the sum is zero.
    pub fn scaled_to_sum_one(&self) -> Option<Gamble> {
        let s = self.sum();
        if s.is_zero() {
            None
        } else {
            Some(self.scale(&s.recip()))
        }
    }

    /// Canonical representative of the open ray through the gamble: positively
    /// scaled so the first nonzero coordinate has absolute value one. The zero
    /// vector is returned unchanged.
    pub fn canonical_ray(&self) -> Gamble {
        match self.coords.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(first) => self.scale(&first.abs().recip()),
        }
    }
}

impl std::ops::Index<usize> for Gamble {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.coords[i]
    }
}

impl fmt::Debug for Gamble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational_to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Lexicographic comparison of two gambles of equal dimension.
///
/// `Less` iff the first differing coordinate of `g` is below that of `f`.
pub fn lex_cmp(g: &Gamble, f: &Gamble) -> Result<Ordering> {
    if g.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            got: f.dim(),
        });
    }
    for (a, b) in g.coords().iter().zip(f.coords()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// Total lexicographic order used for canonical sorting of vector lists.
pub(crate) fn lex_total_cmp(g: &Gamble, f: &Gamble) -> Ordering {
    lex_cmp(g, f).expect("sorted vectors share a dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn g(v: &[i64]) -> Gamble {
        Gamble::from_ints(v)
    }

    #[test]
    fn lex_cmp_first_component_decides() {
        assert_eq!(lex_cmp(&g(&[0, 1]), &g(&[1, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn lex_cmp_reflexive_equal() {
        let x = g(&[2, -3, 5]);
        assert_eq!(lex_cmp(&x, &x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn lex_cmp_later_component_decides() {
        assert_eq!(
            lex_cmp(&g(&[1, 0, -5]), &g(&[1, 2, 0])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn lex_cmp_rejects_dimension_mismatch() {
        assert!(lex_cmp(&g(&[1]), &g(&[1, 2])).is_err());
    }

    #[test]
    fn lex_sign_examples() {
        assert_eq!(g(&[0, 1, -7]).lex_sign(), Ordering::Greater);
        assert_eq!(g(&[0, 0, -1]).lex_sign(), Ordering::Less);
        assert_eq!(Gamble::zeros(3).lex_sign(), Ordering::Equal);
    }

    #[test]
    fn standard_ops() {
        assert_eq!(
            Gamble::basis(2, 0).inner(&Gamble::basis(2, 1)),
            int(0)
        );
        assert_eq!(g(&[1, 2, 3]).inner(&g(&[1, 1, 1])), int(6));
        assert!(g(&[1, 2]).lt(&g(&[1, 3])));
        assert!(!g(&[1, 2]).lt(&g(&[1, 2])));
        assert!(g(&[1, 2]).le(&g(&[1, 2])));
    }

    #[test]
    fn partial_order_is_not_total() {
        assert!(!g(&[1, 0]).le(&g(&[0, 1])));
        assert!(!g(&[0, 1]).le(&g(&[1, 0])));
    }

    #[test]
    fn pmf_and_normalization() {
        assert!(g(&[1, 0]).is_pmf());
        assert!(!g(&[1, 1]).is_pmf());
        let n = Gamble::new(vec![rat(1, 2), rat(1, 4), rat(1, 4)]);
        assert!(n.is_pmf());
        assert_eq!(g(&[2, 1, 1]).scaled_to_sum_one().unwrap(), n);
        assert_eq!(g(&[1, -1]).scaled_to_sum_one(), None);
    }

    #[test]
    fn canonical_ray_scales_first_nonzero_to_unit() {
        let x = Gamble::new(vec![int(0), rat(-1, 2), int(3)]);
        assert_eq!(
            x.canonical_ray(),
            Gamble::new(vec![int(0), int(-1), int(6)])
        );
        assert_eq!(Gamble::zeros(2).canonical_ray(), Gamble::zeros(2));
    }

    #[test]
    #[should_panic(expected = "at least one coordinate")]
    fn empty_gamble_rejected() {
        let _ = Gamble::new(vec![]);
    }

    proptest! {
        #[test]
        fn lex_cmp_is_a_strict_total_order(
            a in proptest::collection::vec(-6i64..=6, 3),
            b in proptest::collection::vec(-6i64..=6, 3),
            c in proptest::collection::vec(-6i64..=6, 3),
        ) {
            let (a, b, c) = (g(&a), g(&b), g(&c));
            let ab = lex_cmp(&a, &b).unwrap();
            let ba = lex_cmp(&b, &a).unwrap();
            prop_assert_eq!(ab, ba.reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            // Transitivity.
            let bc = lex_cmp(&b, &c).unwrap();
            if ab == bc {
                prop_assert_eq!(lex_cmp(&a, &c).unwrap(), ab);
            }
        }

        #[test]
        fn lex_positive_vectors_form_a_convex_cone(
            a in proptest::collection::vec(-6i64..=6, 4),
            b in proptest::collection::vec(-6i64..=6, 4),
            lam in 1i64..=5,
            mu in 1i64..=5,
        ) {
            let (a, b) = (g(&a), g(&b));
            prop_assume!(a.lex_sign() == Ordering::Greater);
            prop_assume!(b.lex_sign() == Ordering::Greater);
            let combo = a.scale(&int(lam)).add(&b.scale(&int(mu)));
            prop_assert_eq!(combo.lex_sign(), Ordering::Greater);
        }
    }
}
