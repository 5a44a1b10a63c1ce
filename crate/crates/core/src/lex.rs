//! The lexicographic polarity between desirable-gamble cones and families
//! of matrices.
//!
//! A matrix belongs to the lex polar of a cone when it maps every member to
//! a lex-positive vector; dually a family of matrices carves out the cone
//! of gambles mapped lex-positive by all of them. Full-rank stochastic
//! members of the polar play the role the credal set plays classically.

use std::cmp::Ordering;

use num::{One, Signed, Zero};

use crate::cones::{natural_extension, GeneratorCone};
use crate::error::{Error, Result};
use crate::gamble::Gamble;
use crate::matrix::RMatrix;
use crate::rational::Rational;
use crate::simplex::{self, Constraint, Outcome, Rel};

/// Largest dimension accepted by the sign-pattern enumeration in
/// [`lex_hull_member`].
pub const LEX_HULL_DIM_BOUND: usize = 6;

/// The set `{g : A g >_L 0 for every A in the family}`: an intersection of
/// maximal cones when the matrices are row-orthogonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemispaceFamily {
    dim: usize,
    matrices: Vec<RMatrix>,
}

impl SemispaceFamily {
    pub fn new(dim: usize, matrices: Vec<RMatrix>) -> Result<Self> {
        if matrices.is_empty() {
            return Err(Error::Empty("semispace family"));
        }
        for m in &matrices {
            if !m.is_square() {
                return Err(Error::NotSquare {
                    rows: m.nrows(),
                    cols: m.ncols(),
                });
            }
            if m.nrows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: m.nrows(),
                });
            }
        }
        Ok(SemispaceFamily { dim, matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[RMatrix] {
        &self.matrices
    }

    /// Membership: every matrix must map `g` to a lex-positive vector.
    pub fn contains(&self, g: &Gamble) -> Result<bool> {
        for m in &self.matrices {
            if m.mul_lex_sign(g)? != Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Is `a` in the lex polar of the cone: does it map every generator, and
/// hence every member, to a lex-positive vector?
///
/// Sufficiency on generators holds because lex-positive vectors are closed
/// under positive combinations.
pub fn lex_polar_member(k: &GeneratorCone, a: &RMatrix) -> Result<bool> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    if a.ncols() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: a.ncols(),
        });
    }
    for g in k.generators() {
        if a.mul_lex_sign(g)? != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of `p` in the stochastic slice of the lex polar of a coherent
/// cone: `p` must be row-stochastic, of full rank, and in the lex polar.
pub fn lcredal_member(k: &GeneratorCone, p: &RMatrix) -> Result<bool> {
    if let Some(violation) = k.is_coherent_desirable().violation() {
        return Err(Error::Incoherent {
            axiom: violation.axiom(),
        });
    }
    Ok(p.is_stochastic() && p.is_full_rank() && lex_polar_member(k, p)?)
}

/// An L-credal set given intensionally: the full-rank stochastic matrices
/// mapping every defining gamble lex-positive, plus optional explicit
/// sample members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCredalWitness {
    dim: usize,
    defining_gambles: Vec<Gamble>,
    sample_members: Vec<RMatrix>,
}

impl LCredalWitness {
    pub fn new(
        dim: usize,
        defining_gambles: Vec<Gamble>,
        sample_members: Vec<RMatrix>,
    ) -> Result<Self> {
        for g in &defining_gambles {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroVector("defining gamble"));
            }
        }
        for p in &sample_members {
            if !p.is_square() || p.nrows() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.nrows(),
                });
            }
            if !p.is_stochastic() {
                return Err(Error::NotStochastic);
            }
            if !p.is_full_rank() {
                return Err(Error::RankDeficient {
                    rank: p.rank(),
                    need: dim,
                });
            }
            for g in &defining_gambles {
                if p.mul_lex_sign(g)? != Ordering::Greater {
                    return Err(Error::InvalidWitness(
                        "sample member fails a defining gamble",
                    ));
                }
            }
        }
        Ok(LCredalWitness {
            dim,
            defining_gambles,
            sample_members,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn defining_gambles(&self) -> &[Gamble] {
        &self.defining_gambles
    }

    pub fn sample_members(&self) -> &[RMatrix] {
        &self.sample_members
    }

    /// Membership of `g` in the cone dual to this L-credal set: the cone
    /// generated by the defining gambles together with the basis.
    pub fn dual_contains(&self, g: &Gamble) -> Result<bool> {
        natural_extension(&self.defining_gambles, self.dim)?.contains(g)
    }
}

/// Verdict of the lex conic hull test, with a separating gamble when the
/// candidate lies outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullVerdict {
    Member,
    /// `witness` is mapped lex-positive by every family matrix but not by
    /// the candidate.
    Outside { witness: Gamble },
}

impl HullVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, HullVerdict::Member)
    }
}

/// Does `b` belong to the lex conic hull of the family? Equivalently, is
/// there no gamble `g` with `A g >_L 0` for every family member while
/// `B g <=_L 0`?
///
/// Every lex condition is a disjunction over the level at which strictness
/// first occurs, so the search enumerates one level per family matrix and
/// one level (or all-zero) for `b`, and settles each sign pattern by an
/// exact LP maximizing the strictness margin.
pub fn lex_hull_member(family: &[RMatrix], b: &RMatrix) -> Result<HullVerdict> {
    if family.is_empty() {
        return Err(Error::Empty("matrix family"));
    }
    let n = b.ncols();
    if !b.is_square() {
        return Err(Error::NotSquare {
            rows: b.nrows(),
            cols: b.ncols(),
        });
    }
    for a in family {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.nrows(),
                cols: a.ncols(),
            });
        }
        if a.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.ncols(),
            });
        }
    }
    if n > LEX_HULL_DIM_BOUND {
        return Err(Error::DimensionCap {
            dim: n,
            bound: LEX_HULL_DIM_BOUND,
        });
    }

    // Candidate levels: for each family matrix the row where its product
    // turns strictly positive; for b either the row where it turns strictly
    // negative or the all-zero outcome (encoded as level == n).
    let mut levels = vec![0usize; family.len()];
    loop {
        for b_level in 0..=n {
            if let Some(witness) = pattern_witness(family, &levels, b, b_level, n) {
                return Ok(HullVerdict::Outside { witness });
            }
        }
        let mut pos = family.len();
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            levels[pos] += 1;
            if levels[pos] < n {
                done = false;
                break;
            }
            levels[pos] = 0;
        }
        if done {
            return Ok(HullVerdict::Member);
        }
    }
}

/// Feasibility of one joint sign pattern, solved as an LP over `g` split
/// into nonnegative parts plus a strictness margin bounded by one. Returns
/// the witness gamble when the margin can be made positive.
fn pattern_witness(
    family: &[RMatrix],
    levels: &[usize],
    b: &RMatrix,
    b_level: usize,
    n: usize,
) -> Option<Gamble> {
    // Variables: u_0..u_{n-1}, w_0..w_{n-1} with g = u - w, then the margin.
    let nvars = 2 * n + 1;
    let margin = 2 * n;
    let mut constraints: Vec<Constraint> = Vec::new();
    let mut row_constraint = |row: &Gamble, rel: Rel, with_margin: bool| {
        let mut coeffs = vec![Rational::zero(); nvars];
        for j in 0..n {
            coeffs[j] = row[j].clone();
            coeffs[n + j] = -row[j].clone();
        }
        if with_margin {
            coeffs[margin] = match rel {
                Rel::Ge => -Rational::one(),
                Rel::Le => Rational::one(),
                Rel::Eq => unreachable!("margin rows are strict"),
            };
        }
        constraints.push(Constraint::new(coeffs, rel, Rational::zero()));
    };

    for (a, &level) in family.iter().zip(levels) {
        for i in 0..level {
            row_constraint(a.row(i), Rel::Eq, false);
        }
        row_constraint(a.row(level), Rel::Ge, true);
    }
    for i in 0..b_level.min(n) {
        row_constraint(b.row(i), Rel::Eq, false);
    }
    if b_level < n {
        row_constraint(b.row(b_level), Rel::Le, true);
    } else {
        row_constraint(b.row(n - 1), Rel::Eq, false);
    }

    let mut bound = vec![Rational::zero(); nvars];
    bound[margin] = Rational::one();
    constraints.push(Constraint::new(bound, Rel::Le, Rational::one()));

    let mut objective = vec![Rational::zero(); nvars];
    objective[margin] = Rational::one();
    match simplex::maximize(&objective, &constraints) {
        Outcome::Optimal { value, x } if value.is_positive() => Some(Gamble::new(
            (0..n).map(|j| &x[j] - &x[n + j]).collect(),
        )),
        Outcome::Optimal { .. } | Outcome::Infeasible => None,
        Outcome::Unbounded => unreachable!("objective is bounded by the margin cap"),
    }
}

/// Membership in the maximal cone described by a single row-orthogonal
/// matrix with lex-positive columns: `A g >_L 0`.
pub fn maximal_desirable_member(a: &RMatrix, g: &Gamble) -> Result<bool> {
    a.require_lexpos_orthogonal()?;
    Ok(a.mul_lex_sign(g)? == Ordering::Greater)
}

/// Do two row-orthogonal lex-positive matrices describe the same maximal
/// cone? Exactly when corresponding rows are positive multiples of each
/// other, the exact-rational counterpart of unit-norm uniqueness.
pub fn semispace_equal(a: &RMatrix, b: &RMatrix) -> Result<bool> {
    a.require_lexpos_orthogonal()?;
    b.require_lexpos_orthogonal()?;
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            got: b.nrows(),
        });
    }
    for (ra, rb) in a.rows().iter().zip(b.rows()) {
        let lead = ra
            .coords()
            .iter()
            .position(|c| !c.is_zero())
            .expect("orthogonal matrices have no zero rows");
        if rb[lead].is_zero() {
            return Ok(false);
        }
        let ratio = &rb[lead] / &ra[lead];
        if !ratio.is_positive() || ra.scale(&ratio) != *rb {
            return Ok(false);
        }
    }
    Ok(true)
}
