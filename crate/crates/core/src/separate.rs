//! Constructive separation of a non-member gamble from a coherent cone.
//!
//! Almost-desirable cones are separated by a single nonnegative direction
//! with strictly negative inner product against the excluded gamble.
//! Desirable cones need the lexicographic analogue: a row-orthogonal
//! matrix mapping every member lex-positive and the excluded gamble
//! lex-nonpositive. Every witness is re-verified against its defining
//! inequalities before it is returned.

use std::cmp::Ordering;

use num::{One, Signed, Zero};

use crate::cones::{GeneratorCone, HalfspaceCone};
use crate::dd::{halfspaces_to_generators, GeneratorForm};
use crate::error::{Error, Result};
use crate::factor::gram_schmidt_rows;
use crate::gamble::Gamble;
use crate::matrix::RMatrix;
use crate::rational::Rational;
use crate::simplex::{self, Constraint, Outcome, Rel};

/// A verified separation certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationWitness {
    /// A nonnegative direction `v` with unit coordinate sum: members score
    /// `>= 0` against it, the separated gamble scores `< 0`.
    Classical(Gamble),
    /// A row-orthogonal full-rank matrix with lex-positive columns mapping
    /// members lex-positive and the separated gamble lex-nonpositive.
    Lexicographic(RMatrix),
}

impl SeparationWitness {
    pub fn direction(&self) -> Option<&Gamble> {
        match self {
            SeparationWitness::Classical(v) => Some(v),
            SeparationWitness::Lexicographic(_) => None,
        }
    }

    pub fn matrix(&self) -> Option<&RMatrix> {
        match self {
            SeparationWitness::Classical(_) => None,
            SeparationWitness::Lexicographic(a) => Some(a),
        }
    }
}

/// Separates `gbar` from a coherent almost-desirable cone.
///
/// Coherence forces every normal to be nonnegative, and a gamble outside
/// the cone violates some normal; that normal, scaled to unit sum, already
/// satisfies every requirement on the witness. The postcondition is still
/// re-checked against the cone's generator form before returning.
pub fn separate_almost(k: &HalfspaceCone, gbar: &Gamble) -> Result<SeparationWitness> {
    if let Some(violation) = k.is_coherent_almost().violation() {
        return Err(Error::Incoherent {
            axiom: violation.axiom(),
        });
    }
    if gbar.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: gbar.dim(),
        });
    }
    let violated = k
        .normals()
        .iter()
        .find(|v| v.inner(gbar).is_negative())
        .ok_or(Error::NoSeparation)?;
    let witness = violated
        .scaled_to_sum_one()
        .expect("coherent normals are nonnegative; a violated one is nonzero");

    if !witness.is_nonneg() || !witness.inner(gbar).is_negative() {
        return Err(Error::Defect("classical witness failed verification"));
    }
    if let GeneratorForm::Cone(cone) = halfspaces_to_generators(k) {
        for r in cone.generators() {
            if witness.inner(r).is_negative() {
                return Err(Error::Defect("classical witness failed verification"));
            }
        }
    }
    Ok(SeparationWitness::Classical(witness))
}

/// Separates `gbar` from a coherent desirable cone by a maximal cone
/// containing it: builds the rows of the witness matrix one stage at a
/// time, each row orthogonal to the earlier ones.
///
/// A generator is settled once some row scores it strictly positive;
/// until then every row must score it zero or better, which pins its
/// earlier scores to exactly zero. The excluded gamble is held at
/// nonpositive scores until some row scores it strictly negative. Each
/// stage maximizes the number of strict scores it achieves by an exact LP
/// over the orthogonal complement; once nothing is left to settle the
/// matrix is completed to an orthogonal basis.
pub fn separate_lex(k: &GeneratorCone, gbar: &Gamble) -> Result<SeparationWitness> {
    if let Some(violation) = k.is_coherent_desirable().violation() {
        return Err(Error::Incoherent {
            axiom: violation.axiom(),
        });
    }
    if gbar.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: gbar.dim(),
        });
    }
    if k.contains(gbar)? {
        return Err(Error::NoSeparation);
    }

    let n = k.dim();
    let generators = k.generators();
    let mut rows: Vec<Gamble> = Vec::with_capacity(n);
    let mut open_targets: Vec<usize> = (0..generators.len()).collect();
    let mut gbar_open = true;

    while rows.len() < n {
        let complement = complement_basis(&rows, n);
        if complement.is_empty() {
            break;
        }
        let v = if open_targets.is_empty() {
            let candidate = complement[0].clone();
            if gbar_open && candidate.inner(gbar).is_positive() {
                candidate.neg()
            } else {
                candidate
            }
        } else {
            stage_direction(&complement, generators, &open_targets, gbar, gbar_open)?
        };
        open_targets.retain(|&j| v.inner(&generators[j]).is_zero());
        if gbar_open && v.inner(gbar).is_negative() {
            gbar_open = false;
        }
        rows.push(v);
    }

    if rows.len() != n || !open_targets.is_empty() {
        return Err(Error::Defect("lexicographic separation did not complete"));
    }
    let a = RMatrix::from_rows(rows)
        .expect("square by construction")
        .canonical_row_scaled();

    a.require_lexpos_orthogonal()
        .map_err(|_| Error::Defect("lexicographic witness failed verification"))?;
    for g in generators {
        if a.mul_lex_sign(g)? != Ordering::Greater {
            return Err(Error::Defect("lexicographic witness failed verification"));
        }
    }
    if a.mul_lex_sign(gbar)? == Ordering::Greater {
        return Err(Error::Defect("lexicographic witness failed verification"));
    }
    Ok(SeparationWitness::Lexicographic(a))
}

/// An orthogonal basis of the complement of the chosen rows, from exact
/// Gram-Schmidt over the rows followed by the standard basis.
fn complement_basis(rows: &[Gamble], n: usize) -> Vec<Gamble> {
    let mut seed: Vec<Gamble> = rows.to_vec();
    for i in 0..n {
        seed.push(Gamble::basis(n, i));
    }
    gram_schmidt_rows(&seed)
        .into_iter()
        .skip(rows.len())
        .filter(|b| !b.is_zero())
        .collect()
}

/// One stage of the construction: the direction in the current complement
/// that settles as many open scores as possible, found by maximizing a sum
/// of capped strictness slacks.
fn stage_direction(
    complement: &[Gamble],
    generators: &[Gamble],
    open_targets: &[usize],
    gbar: &Gamble,
    gbar_open: bool,
) -> Result<Gamble> {
    let w = complement.len();
    let slots = open_targets.len() + usize::from(gbar_open);
    // Variables: positive and negative parts of the complement coordinates,
    // then one strictness slack per open score.
    let nvars = 2 * w + slots;
    let mut constraints = Vec::new();
    let mut objective = vec![Rational::zero(); nvars];

    let projected = |target: &Gamble| -> Vec<Rational> {
        complement.iter().map(|b| b.inner(target)).collect()
    };
    for (slot, &j) in open_targets.iter().enumerate() {
        let coeffs_b = projected(&generators[j]);
        let mut coeffs = vec![Rational::zero(); nvars];
        for t in 0..w {
            coeffs[t] = coeffs_b[t].clone();
            coeffs[w + t] = -coeffs_b[t].clone();
        }
        coeffs[2 * w + slot] = -Rational::one();
        constraints.push(Constraint::new(coeffs, Rel::Ge, Rational::zero()));
    }
    if gbar_open {
        let coeffs_b = projected(gbar);
        let mut coeffs = vec![Rational::zero(); nvars];
        for t in 0..w {
            coeffs[t] = coeffs_b[t].clone();
            coeffs[w + t] = -coeffs_b[t].clone();
        }
        coeffs[nvars - 1] = Rational::one();
        constraints.push(Constraint::new(coeffs, Rel::Le, Rational::zero()));
    }
    for slot in 0..slots {
        let mut cap = vec![Rational::zero(); nvars];
        cap[2 * w + slot] = Rational::one();
        constraints.push(Constraint::new(cap, Rel::Le, Rational::one()));
        objective[2 * w + slot] = Rational::one();
    }

    match simplex::maximize(&objective, &constraints) {
        Outcome::Optimal { value, x } if value.is_positive() => {
            let mut v = Gamble::zeros(complement[0].dim());
            for t in 0..w {
                let coeff = &x[t] - &x[w + t];
                if !coeff.is_zero() {
                    v = v.add(&complement[t].scale(&coeff));
                }
            }
            Ok(v)
        }
        _ => Err(Error::Defect("separation stage made no progress")),
    }
}
