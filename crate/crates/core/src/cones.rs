//! Finitely generated gamble cones, membership, and coherence checking.
//!
//! A `GeneratorCone` is the set of nonnegative, not-all-zero combinations of
//! its generators; the apex is excluded unless it is reachable by a nonzero
//! combination. A `HalfspaceCone` is the closed cone cut out by finitely
//! many nonnegative-inner-product constraints.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gamble::{lex_total_cmp, Gamble};
use crate::rational::Rational;
use crate::simplex::{self, Constraint, Outcome, Rel};

/// Conic hull of finitely many nonzero generators, apex excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCone {
    dim: usize,
    generators: Vec<Gamble>,
}

impl GeneratorCone {
    pub fn new(dim: usize, generators: Vec<Gamble>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Empty("generator list"));
        }
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroVector("cone generator"));
            }
        }
        Ok(GeneratorCone { dim, generators })
    }

    /// The least-committal coherent cone: all basis gambles.
    pub fn vacuous(dim: usize) -> Self {
        GeneratorCone {
            dim,
            generators: (0..dim).map(|i| Gamble::basis(dim, i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Gamble] {
        &self.generators
    }

    /// Exact membership: is `g` a nonnegative, not-all-zero combination of
    /// the generators?
    pub fn contains(&self, g: &Gamble) -> Result<bool> {
        Ok(self.conic_coefficients(g)?.is_some())
    }

    /// Membership with an explicit combination as witness.
    ///
    /// For nonzero `g` this is feasibility of `{G λ = g, λ >= 0}`; any
    /// solution is automatically nonzero. For the origin the weights are
    /// boxed into `[0,1]` and their sum maximized; the origin belongs to the
    /// cone exactly when that optimum is positive.
    pub fn conic_coefficients(&self, g: &Gamble) -> Result<Option<Vec<Rational>>> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: g.dim(),
            });
        }
        let k = self.generators.len();
        if g.is_zero() {
            let mut constraints = Vec::with_capacity(self.dim + k);
            for i in 0..self.dim {
                constraints.push(Constraint::new(
                    self.generators.iter().map(|h| h[i].clone()).collect(),
                    Rel::Eq,
                    Rational::zero(),
                ));
            }
            for j in 0..k {
                let mut coeffs = vec![Rational::zero(); k];
                coeffs[j] = Rational::one();
                constraints.push(Constraint::new(coeffs, Rel::Le, Rational::one()));
            }
            match simplex::maximize(&vec![Rational::one(); k], &constraints) {
                Outcome::Optimal { value, x } => {
                    Ok(if value.is_positive() { Some(x) } else { None })
                }
                Outcome::Infeasible => unreachable!("zero weights are always feasible"),
                Outcome::Unbounded => unreachable!("weights are boxed"),
            }
        } else {
            let rows: Vec<(Vec<Rational>, Rational)> = (0..self.dim)
                .map(|i| {
                    (
                        self.generators.iter().map(|h| h[i].clone()).collect(),
                        g[i].clone(),
                    )
                })
                .collect();
            Ok(simplex::feasible_point(&rows))
        }
    }

    /// Checks the desirability axioms: every basis gamble must be a member
    /// (accepting partial gain) and the origin must not be (no null gamble).
    /// Nonnegative-combination closure holds by representation.
    pub fn is_coherent_desirable(&self) -> Coherence {
        for i in 0..self.dim {
            let e = Gamble::basis(self.dim, i);
            if !self.contains(&e).expect("dimensions match by construction") {
                return Coherence::Incoherent(CoherenceViolation::MissingBasis { index: i });
            }
        }
        if let Some(coefficients) = self
            .conic_coefficients(&Gamble::zeros(self.dim))
            .expect("dimensions match by construction")
        {
            return Coherence::Incoherent(CoherenceViolation::OriginReachable { coefficients });
        }
        Coherence::Coherent
    }

    /// Generators in canonical form: scaled so the first nonzero coordinate
    /// has absolute value one, pruned of members redundant for the hull,
    /// deduplicated, and sorted lexicographically. Two cones with equal
    /// canonical generators denote the same set.
    pub fn canonical_generators(&self) -> Vec<Gamble> {
        let mut gens: Vec<Gamble> = self
            .generators
            .iter()
            .map(|g| g.canonical_ray())
            .collect();
        gens.sort_by(lex_total_cmp);
        gens.dedup();
        let mut keep: Vec<bool> = vec![true; gens.len()];
        for j in 0..gens.len() {
            let rest: Vec<Gamble> = gens
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j && keep[*i])
                .map(|(_, g)| g.clone())
                .collect();
            if rest.is_empty() {
                continue;
            }
            let rest_cone = GeneratorCone {
                dim: self.dim,
                generators: rest,
            };
            if rest_cone
                .contains(&gens[j])
                .expect("dimensions match by construction")
            {
                keep[j] = false;
            }
        }
        gens.into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(g, _)| g)
            .collect()
    }
}

/// Intersection of the halfspaces `{g : <normal, g> >= 0}`. An empty normal
/// list denotes the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceCone {
    dim: usize,
    normals: Vec<Gamble>,
}

impl HalfspaceCone {
    pub fn new(dim: usize, normals: Vec<Gamble>) -> Result<Self> {
        for v in &normals {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
        }
        Ok(HalfspaceCone { dim, normals })
    }

    pub fn whole_space(dim: usize) -> Self {
        HalfspaceCone {
            dim,
            normals: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Gamble] {
        &self.normals
    }

    pub fn contains(&self, g: &Gamble) -> Result<bool> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: g.dim(),
            });
        }
        Ok(self.normals.iter().all(|v| !v.inner(g).is_negative()))
    }

    /// Checks the almost-desirability axioms. Closure and convexity hold by
    /// representation; every basis gamble must be a member, which forces all
    /// normals nonnegative, and the uniform sure loss must be excluded,
    /// which fails exactly when every normal is zero.
    pub fn is_coherent_almost(&self) -> Coherence {
        for i in 0..self.dim {
            if self
                .normals
                .iter()
                .any(|v| v[i].is_negative())
            {
                return Coherence::Incoherent(CoherenceViolation::MissingBasis { index: i });
            }
        }
        if self.normals.iter().all(|v| v.is_zero()) {
            return Coherence::Incoherent(CoherenceViolation::SureLoss {
                witness: Gamble::neg_ones(self.dim),
            });
        }
        Coherence::Coherent
    }

    /// Normals in canonical form: zero normals dropped, each scaled so its
    /// first nonzero coordinate has absolute value one, redundant normals
    /// (conic combinations of the others) pruned, deduplicated, sorted.
    pub fn canonical_normals(&self) -> Vec<Gamble> {
        let mut normals: Vec<Gamble> = self
            .normals
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.canonical_ray())
            .collect();
        normals.sort_by(lex_total_cmp);
        normals.dedup();
        let mut keep: Vec<bool> = vec![true; normals.len()];
        for j in 0..normals.len() {
            let rest: Vec<Gamble> = normals
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j && keep[*i])
                .map(|(_, v)| v.clone())
                .collect();
            if rest.is_empty() {
                continue;
            }
            let rest_cone = GeneratorCone {
                dim: self.dim,
                generators: rest,
            };
            if rest_cone
                .contains(&normals[j])
                .expect("dimensions match by construction")
            {
                keep[j] = false;
            }
        }
        normals
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Closes a list of assessed gambles under the structural axioms by
/// adjoining every basis gamble; the empty list yields the vacuous cone.
pub fn natural_extension(assessments: &[Gamble], dim: usize) -> Result<GeneratorCone> {
    let mut generators = Vec::with_capacity(assessments.len() + dim);
    for a in assessments {
        if a.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: a.dim(),
            });
        }
        if a.is_zero() {
            return Err(Error::ZeroVector("assessment"));
        }
        generators.push(a.clone());
    }
    for i in 0..dim {
        generators.push(Gamble::basis(dim, i));
    }
    GeneratorCone::new(dim, generators)
}

/// Verdict of a coherence check, carrying a certificate on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coherence {
    Coherent,
    Incoherent(CoherenceViolation),
}

impl Coherence {
    pub fn is_coherent(&self) -> bool {
        matches!(self, Coherence::Coherent)
    }

    pub fn violation(&self) -> Option<&CoherenceViolation> {
        match self {
            Coherence::Coherent => None,
            Coherence::Incoherent(v) => Some(v),
        }
    }
}

/// Why a cone fails coherence, with a checkable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoherenceViolation {
    /// The basis gamble with this index is not a member.
    MissingBasis { index: usize },
    /// The origin is reachable: these weights combine the generators to
    /// zero without all vanishing.
    OriginReachable { coefficients: Vec<Rational> },
    /// The cone accepts this sure loss.
    SureLoss { witness: Gamble },
}

impl CoherenceViolation {
    /// Conventional label of the violated axiom.
    pub fn axiom(&self) -> &'static str {
        match self {
            CoherenceViolation::MissingBasis { .. } => "A3",
            CoherenceViolation::OriginReachable { .. } => "A4",
            CoherenceViolation::SureLoss { .. } => "A6",
        }
    }
}
