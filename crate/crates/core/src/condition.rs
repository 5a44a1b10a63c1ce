//! Conditioning on an event for every representation in the crate: gamble
//! cones in generator or halfspace form, credal polytopes, stochastic
//! matrices, and row-orthogonal matrices.
//!
//! Conditioning restricts a model over `n` outcomes to the outcomes in a
//! proper nonempty subset. A gamble on the event is judged by lifting it
//! with zero payoff outside the event; probabilistic representations
//! renormalize mass on the event instead.

use num::Zero;

use crate::classic::CredalPolytope;
use crate::cones::{Coherence, CoherenceViolation, GeneratorCone, HalfspaceCone};
use crate::dd::{generators_to_halfspaces, halfspaces_to_generators, GeneratorForm};
use crate::error::{Error, Result};
use crate::factor::gram_schmidt_rows;
use crate::gamble::Gamble;
use crate::matrix::RMatrix;
use crate::rational::Rational;

/// A nonempty proper subset of the outcome space, stored as strictly
/// increasing zero-based coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventSubset {
    ambient: usize,
    indices: Vec<usize>,
}

impl EventSubset {
    pub fn new(ambient: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidEvent("event must be nonempty".into()));
        }
        if indices.len() >= ambient {
            return Err(Error::InvalidEvent(format!(
                "event must be a proper subset of the {ambient} outcomes"
            )));
        }
        for pair in indices.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidEvent(
                    "event indices must be strictly increasing".into(),
                ));
            }
        }
        if *indices.last().expect("nonempty") >= ambient {
            return Err(Error::InvalidEvent(format!(
                "event index {} out of range for {ambient} outcomes",
                indices.last().expect("nonempty")
            )));
        }
        Ok(EventSubset { ambient, indices })
    }

    /// Builds the event from one-based outcome labels.
    pub fn from_one_based(ambient: usize, labels: &[usize]) -> Result<Self> {
        let mut indices = Vec::with_capacity(labels.len());
        for &l in labels {
            if l == 0 {
                return Err(Error::InvalidEvent(
                    "outcome labels are one-based; 0 is not a label".into(),
                ));
            }
            indices.push(l - 1);
        }
        EventSubset::new(ambient, indices)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of outcomes in the event.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// One-based outcome labels of the event.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    /// The complement's zero-based indices, in increasing order.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|i| !self.indices.contains(i))
            .collect()
    }
}

/// Extends a gamble on the event to the ambient space with zero payoff
/// outside the event.
pub fn lift_gamble(g: &Gamble, event: &EventSubset) -> Result<Gamble> {
    if g.dim() != event.len() {
        return Err(Error::DimensionMismatch {
            expected: event.len(),
            got: g.dim(),
        });
    }
    let mut coords = vec![Rational::zero(); event.ambient()];
    for (j, &i) in event.indices().iter().enumerate() {
        coords[i] = g[j].clone();
    }
    Ok(Gamble::new(coords))
}

/// Keeps only the event coordinates of an ambient gamble.
pub fn restrict_gamble(g: &Gamble, event: &EventSubset) -> Result<Gamble> {
    if g.dim() != event.ambient() {
        return Err(Error::DimensionMismatch {
            expected: event.ambient(),
            got: g.dim(),
        });
    }
    Ok(Gamble::new(
        event.indices().iter().map(|&i| g[i].clone()).collect(),
    ))
}

/// Conditions a halfspace cone: a lifted gamble satisfies an ambient
/// constraint exactly when the gamble satisfies the restricted normal, so
/// the result keeps the restricted nonzero normals. The coherence verdict
/// of the result accompanies it; conditioning can destroy coherence.
pub fn condition_halfspace_cone(
    k: &HalfspaceCone,
    event: &EventSubset,
) -> Result<(HalfspaceCone, Coherence)> {
    if event.ambient() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: event.ambient(),
        });
    }
    let normals: Vec<Gamble> = k
        .normals()
        .iter()
        .map(|v| restrict_gamble(v, event))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|v| !v.is_zero())
        .collect();
    let conditioned = if normals.is_empty() {
        HalfspaceCone::whole_space(event.len())
    } else {
        HalfspaceCone::new(event.len(), normals)?
    };
    let coherence = conditioned.is_coherent_almost();
    Ok((conditioned, coherence))
}

/// The conditioned set of a generator cone, which may lose every member or
/// keep only the zero gamble.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionedGenerators {
    /// No gamble lifts into the cone.
    Empty,
    /// Only the zero gamble lifts into the cone.
    Origin,
    /// The positive span of the returned generators. When the input cone
    /// contains the origin the conditioned set also contains the origin;
    /// the generator form does not record that single point.
    Cone(GeneratorCone),
}

/// Conditions a generator cone: the set of gambles on the event whose lift
/// belongs to the cone, computed by slicing the closed cone with the
/// hyperplanes that zero the complement coordinates.
///
/// The coherence verdict is evaluated against the source cone (each lifted
/// basis gamble must be a member and the origin must not be reachable), so
/// it is exact even when the sliced form cannot express the boundary.
pub fn condition_generator_cone(
    k: &GeneratorCone,
    event: &EventSubset,
) -> Result<(ConditionedGenerators, Coherence)> {
    if event.ambient() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: event.ambient(),
        });
    }
    let mut normals = generators_to_halfspaces(k).normals().to_vec();
    for c in event.complement() {
        let axis = Gamble::basis(k.dim(), c);
        normals.push(axis.neg());
        normals.push(axis);
    }
    let sliced = halfspaces_to_generators(&HalfspaceCone::new(k.dim(), normals)?);
    let origin_reachable = k.conic_coefficients(&Gamble::zeros(k.dim()))?;

    let conditioned = match sliced {
        GeneratorForm::Origin => {
            if origin_reachable.is_some() {
                ConditionedGenerators::Origin
            } else {
                ConditionedGenerators::Empty
            }
        }
        GeneratorForm::Cone(c) => {
            let generators = c
                .generators()
                .iter()
                .map(|g| restrict_gamble(g, event))
                .collect::<Result<Vec<_>>>()?;
            ConditionedGenerators::Cone(GeneratorCone::new(event.len(), generators)?)
        }
    };

    let mut coherence = Coherence::Coherent;
    for j in 0..event.len() {
        let lifted = lift_gamble(&Gamble::basis(event.len(), j), event)?;
        if !k.contains(&lifted)? {
            coherence = Coherence::Incoherent(CoherenceViolation::MissingBasis { index: j });
            break;
        }
    }
    if coherence.is_coherent() {
        if let Some(coefficients) = origin_reachable {
            coherence = Coherence::Incoherent(CoherenceViolation::OriginReachable { coefficients });
        }
    }
    Ok((conditioned, coherence))
}

/// Conditions a credal polytope vertex-wise: every vertex with positive
/// event mass is renormalized on the event. Returns `None` when no vertex
/// puts mass on the event, leaving the conditioned set undefined.
pub fn condition_credal(
    p: &CredalPolytope,
    event: &EventSubset,
) -> Result<Option<CredalPolytope>> {
    if event.ambient() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: event.ambient(),
        });
    }
    let mut vertices = Vec::new();
    for v in p.vertices() {
        let restricted = restrict_gamble(v, event)?;
        if let Some(normalized) = restricted.scaled_to_sum_one() {
            vertices.push(normalized);
        }
    }
    if vertices.is_empty() {
        return Ok(None);
    }
    Ok(Some(CredalPolytope::new(event.len(), vertices)?))
}

/// Keeps each row that lies outside the span of the rows kept before it,
/// scanning top-down; zero rows are always discarded.
pub fn drop_dependent_rows(m: &RMatrix) -> Result<RMatrix> {
    let mut kept: Vec<Gamble> = Vec::new();
    let mut basis: Vec<Gamble> = Vec::new();
    for row in m.rows() {
        let mut b = row.clone();
        for u in &basis {
            let coeff = b.inner(u) / u.inner(u);
            if !coeff.is_zero() {
                b = b.sub(&u.scale(&coeff));
            }
        }
        if !b.is_zero() {
            kept.push(row.clone());
            basis.push(b);
        }
    }
    if kept.is_empty() {
        return Err(Error::Empty("matrix after dependent-row removal"));
    }
    RMatrix::from_rows(kept)
}

/// Conditions a full-rank stochastic matrix: each row is renormalized on
/// the event (or zeroed when the row puts no mass on it), then dependent
/// rows are dropped. The output is full-rank stochastic on the event.
pub fn condition_stochastic(p: &RMatrix, event: &EventSubset) -> Result<RMatrix> {
    p.require_full_rank_stochastic()?;
    if event.ambient() != p.nrows() {
        return Err(Error::DimensionMismatch {
            expected: p.nrows(),
            got: event.ambient(),
        });
    }
    let rows: Vec<Gamble> = p
        .rows()
        .iter()
        .map(|row| {
            let restricted = restrict_gamble(row, event)?;
            Ok(restricted
                .scaled_to_sum_one()
                .unwrap_or_else(|| Gamble::zeros(event.len())))
        })
        .collect::<Result<Vec<_>>>()?;
    let reduced = drop_dependent_rows(&RMatrix::from_rows(rows)?)?;
    reduced
        .require_full_rank_stochastic()
        .map_err(|_| Error::Defect("conditioned stochastic matrix lost a required property"))?;
    Ok(reduced)
}

/// Conditions a row-orthogonal lex-positive-column matrix: keep the event
/// columns, drop dependent rows, then re-orthogonalize exactly and scale
/// canonically. The output describes the conditioned maximal cone.
pub fn condition_orthogonal(a: &RMatrix, event: &EventSubset) -> Result<RMatrix> {
    a.require_lexpos_orthogonal()?;
    if event.ambient() != a.nrows() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            got: event.ambient(),
        });
    }
    let restricted: Vec<Gamble> = a
        .rows()
        .iter()
        .map(|row| restrict_gamble(row, event))
        .collect::<Result<Vec<_>>>()?;
    let reduced = drop_dependent_rows(&RMatrix::from_rows(restricted)?)?;
    let orthogonal = RMatrix::from_rows(gram_schmidt_rows(reduced.rows()))
        .expect("row count unchanged")
        .canonical_row_scaled();
    if orthogonal.nrows() != event.len() {
        return Err(Error::Defect(
            "conditioned orthogonal matrix is not square on the event",
        ));
    }
    orthogonal
        .require_lexpos_orthogonal()
        .map_err(|_| Error::Defect("conditioned orthogonal matrix lost a required property"))?;
    Ok(orthogonal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::to_credal;
    use crate::factor::{equiv_class_member, orthogonal_from_stochastic, stochastic_from_orthogonal};
    use crate::lex::maximal_desirable_member;
    use crate::rational::{int, rat};
    use crate::testkit::{self, SampleConfig, SetComparison};

    fn g(v: &[i64]) -> Gamble {
        Gamble::from_ints(v)
    }

    fn m(rows: &[&[i64]]) -> RMatrix {
        RMatrix::from_int_rows(rows).unwrap()
    }

    fn ev(ambient: usize, one_based: &[usize]) -> EventSubset {
        EventSubset::from_one_based(ambient, one_based).unwrap()
    }

    fn sample_orthogonal() -> RMatrix {
        m(&[&[0, 1, 1], &[0, -1, 1], &[1, 0, 0]])
    }

    fn stochastic_family(t: i64) -> RMatrix {
        let row1 = Gamble::new(vec![int(0), int(-1 - t), int(1 - t)])
            .scaled_to_sum_one()
            .unwrap();
        RMatrix::from_rows(vec![
            Gamble::new(vec![int(0), rat(1, 2), rat(1, 2)]),
            row1,
            Gamble::new(vec![int(1), int(0), int(0)]),
        ])
        .unwrap()
    }

    #[test]
    fn event_validation() {
        assert!(EventSubset::new(3, vec![0, 2]).is_ok());
        assert!(matches!(
            EventSubset::new(3, vec![]),
            Err(Error::InvalidEvent(_))
        ));
        assert!(matches!(
            EventSubset::new(3, vec![0, 1, 2]),
            Err(Error::InvalidEvent(_))
        ));
        assert!(matches!(
            EventSubset::new(3, vec![1, 1]),
            Err(Error::InvalidEvent(_))
        ));
        assert!(matches!(
            EventSubset::new(3, vec![0, 3]),
            Err(Error::InvalidEvent(_))
        ));
        assert!(matches!(
            EventSubset::from_one_based(3, &[0, 1]),
            Err(Error::InvalidEvent(_))
        ));
        let e = ev(3, &[2, 3]);
        assert_eq!(e.indices(), &[1, 2]);
        assert_eq!(e.one_based(), vec![2, 3]);
        assert_eq!(e.complement(), vec![0]);
    }

    #[test]
    fn lift_and_restrict_round_trip() {
        let e = ev(2, &[2]);
        assert_eq!(lift_gamble(&g(&[5]), &e).unwrap(), g(&[0, 5]));
        assert_eq!(
            lift_gamble(&Gamble::zeros(1), &e).unwrap(),
            Gamble::zeros(2)
        );
        let e2 = ev(4, &[1, 3]);
        let x = g(&[7, -2]);
        assert_eq!(
            restrict_gamble(&lift_gamble(&x, &e2).unwrap(), &e2).unwrap(),
            x
        );
        assert!(matches!(
            lift_gamble(&g(&[1, 2]), &e),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn halfspace_conditioning_can_destroy_coherence() {
        // All gambles nonnegative on the first outcome, conditioned on the
        // second outcome only: every gamble qualifies, including sure loss.
        let k = HalfspaceCone::new(2, vec![g(&[1, 0])]).unwrap();
        let (conditioned, coherence) = condition_halfspace_cone(&k, &ev(2, &[2])).unwrap();
        assert!(conditioned.normals().is_empty());
        assert!(conditioned.contains(&g(&[-7])).unwrap());
        match coherence.violation() {
            Some(CoherenceViolation::SureLoss { witness }) => {
                assert_eq!(witness, &g(&[-1]));
            }
            other => panic!("expected sure-loss violation, got {other:?}"),
        }
        assert_eq!(coherence.violation().unwrap().axiom(), "A6");
    }

    #[test]
    fn halfspace_conditioning_agrees_with_credal_conditioning() {
        let uniform = Gamble::new(vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        let k = HalfspaceCone::new(3, vec![uniform]).unwrap();
        let e = ev(3, &[1, 2]);
        let (conditioned, coherence) = condition_halfspace_cone(&k, &e).unwrap();
        assert!(coherence.is_coherent());
        let lhs = to_credal(&conditioned).unwrap();
        let rhs = condition_credal(&to_credal(&k).unwrap(), &e).unwrap().unwrap();
        assert_eq!(lhs.vertices(), rhs.vertices());
        assert_eq!(
            lhs.vertices(),
            &[Gamble::new(vec![rat(1, 2), rat(1, 2)])]
        );

        let two = HalfspaceCone::new(
            3,
            vec![
                Gamble::new(vec![rat(1, 2), rat(1, 4), rat(1, 4)]),
                Gamble::new(vec![int(0), rat(1, 2), rat(1, 2)]),
            ],
        )
        .unwrap();
        let e23 = ev(3, &[2, 3]);
        let (ctwo, _) = condition_halfspace_cone(&two, &e23).unwrap();
        assert_eq!(
            to_credal(&ctwo).unwrap().vertices(),
            condition_credal(&to_credal(&two).unwrap(), &e23)
                .unwrap()
                .unwrap()
                .vertices()
        );
    }

    #[test]
    fn generator_conditioning_examples() {
        let (vac, coh) = condition_generator_cone(&GeneratorCone::vacuous(3), &ev(3, &[2, 3])).unwrap();
        match vac {
            ConditionedGenerators::Cone(c) => {
                assert_eq!(c.canonical_generators(), vec![g(&[0, 1]), g(&[1, 0])]);
            }
            other => panic!("vacuous conditions to vacuous, got {other:?}"),
        }
        assert!(coh.is_coherent());

        let wedge = GeneratorCone::new(2, vec![g(&[1, -1]), g(&[1, 0]), g(&[0, 1])]).unwrap();
        let (slice, coh) = condition_generator_cone(&wedge, &ev(2, &[1])).unwrap();
        match slice {
            ConditionedGenerators::Cone(c) => {
                assert_eq!(c.canonical_generators(), vec![g(&[1])]);
            }
            other => panic!("expected the positive ray, got {other:?}"),
        }
        assert!(coh.is_coherent());

        let ray = GeneratorCone::new(2, vec![g(&[1, 0])]).unwrap();
        let (empty, coh) = condition_generator_cone(&ray, &ev(2, &[2])).unwrap();
        assert_eq!(empty, ConditionedGenerators::Empty);
        assert!(matches!(
            coh.violation(),
            Some(CoherenceViolation::MissingBasis { index: 0 })
        ));

        let line = GeneratorCone::new(2, vec![g(&[1, 0]), g(&[-1, 0])]).unwrap();
        let (all, coh) = condition_generator_cone(&line, &ev(2, &[1])).unwrap();
        match all {
            ConditionedGenerators::Cone(c) => {
                assert_eq!(c.canonical_generators(), vec![g(&[-1]), g(&[1])]);
            }
            other => panic!("expected the full line, got {other:?}"),
        }
        assert!(matches!(
            coh.violation(),
            Some(CoherenceViolation::OriginReachable { .. })
        ));

        let planar = GeneratorCone::new(3, vec![g(&[1, 0, 0]), g(&[-1, 0, 0]), g(&[0, 0, 1])])
            .unwrap();
        let (origin, _) = condition_generator_cone(&planar, &ev(3, &[2])).unwrap();
        assert_eq!(origin, ConditionedGenerators::Origin);
    }

    #[test]
    fn generator_conditioning_matches_lifted_membership_on_samples() {
        let cfg = SampleConfig::new(250);
        let cases = [
            GeneratorCone::vacuous(3),
            GeneratorCone::new(3, vec![g(&[0, -1, 1]), g(&[1, 0, 0]), g(&[0, 1, 0]), g(&[0, 0, 1])])
                .unwrap(),
            GeneratorCone::new(3, vec![g(&[2, -1, 0]), g(&[0, 0, 1])]).unwrap(),
        ];
        for (i, k) in cases.iter().enumerate() {
            for e in [ev(3, &[1]), ev(3, &[2, 3]), ev(3, &[1, 3])] {
                let (conditioned, _) = condition_generator_cone(k, &e).unwrap();
                let direct = |x: &Gamble| k.contains(&lift_gamble(x, &e).unwrap()).unwrap();
                let through = |x: &Gamble| match &conditioned {
                    ConditionedGenerators::Empty => false,
                    ConditionedGenerators::Origin => x.is_zero(),
                    ConditionedGenerators::Cone(c) => c.contains(x).unwrap(),
                };
                assert!(
                    matches!(
                        testkit::sampled_set_equal(&direct, &through, e.len(), &cfg),
                        SetComparison::Agree
                    ),
                    "case {i}, event {:?}",
                    e.one_based()
                );
            }
        }
    }

    #[test]
    fn credal_conditioning_examples() {
        let p = CredalPolytope::new(3, vec![Gamble::new(vec![rat(1, 2), rat(1, 4), rat(1, 4)])])
            .unwrap();
        let conditioned = condition_credal(&p, &ev(3, &[2, 3])).unwrap().unwrap();
        assert_eq!(
            conditioned.vertices(),
            &[Gamble::new(vec![rat(1, 2), rat(1, 2)])]
        );

        let point = CredalPolytope::new(3, vec![g(&[1, 0, 0])]).unwrap();
        assert!(condition_credal(&point, &ev(3, &[2, 3])).unwrap().is_none());

        // Vertices without event mass are skipped, not fatal.
        let mixed = CredalPolytope::new(
            3,
            vec![
                g(&[1, 0, 0]),
                Gamble::new(vec![int(0), rat(1, 2), rat(1, 2)]),
            ],
        )
        .unwrap();
        let conditioned = condition_credal(&mixed, &ev(3, &[2, 3])).unwrap().unwrap();
        assert_eq!(
            conditioned.vertices(),
            &[Gamble::new(vec![rat(1, 2), rat(1, 2)])]
        );
    }

    #[test]
    fn dependent_row_removal_examples() {
        assert_eq!(
            drop_dependent_rows(&RMatrix::identity(3)).unwrap(),
            RMatrix::identity(3)
        );
        assert_eq!(
            drop_dependent_rows(&m(&[&[1, 0], &[1, 0], &[0, 1]])).unwrap(),
            m(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(
            drop_dependent_rows(&m(&[&[1, 1], &[0, 0], &[2, 2], &[1, 0]])).unwrap(),
            m(&[&[1, 1], &[1, 0]])
        );
        assert!(matches!(
            drop_dependent_rows(&m(&[&[0, 0]])),
            Err(Error::Empty(_))
        ));
    }

    #[test]
    fn stochastic_conditioning_examples() {
        let p = stochastic_family(-1);
        let conditioned = condition_stochastic(&p, &ev(3, &[2, 3])).unwrap();
        assert_eq!(
            conditioned,
            RMatrix::from_rows(vec![
                Gamble::new(vec![rat(1, 2), rat(1, 2)]),
                Gamble::new(vec![int(0), int(1)]),
            ])
            .unwrap()
        );
        assert_eq!(
            condition_stochastic(&RMatrix::identity(3), &ev(3, &[1])).unwrap(),
            RMatrix::identity(1)
        );
        assert!(matches!(
            condition_stochastic(&m(&[&[1, 1], &[0, 1]]), &ev(2, &[1])),
            Err(Error::NotStochastic)
        ));
    }

    #[test]
    fn stochastic_conditioning_has_tower_property() {
        // Conditioning on {2,3} and then on the second event outcome equals
        // conditioning on {3} directly.
        let p = stochastic_family(-1);
        let step = condition_stochastic(&p, &ev(3, &[2, 3])).unwrap();
        assert_eq!(
            condition_stochastic(&step, &ev(2, &[2])).unwrap(),
            condition_stochastic(&p, &ev(3, &[3])).unwrap()
        );

        let cfg = SampleConfig::new(251);
        let mut rng = cfg.rng();
        for i in 0..40 {
            let n = 3 + i % 2;
            let q = testkit::random_full_rank_stochastic(&mut rng, n, &cfg).unwrap();
            let outer = ev(n, &[2, 3]);
            let conditioned = condition_stochastic(&q, &outer).unwrap();
            assert!(conditioned.is_stochastic() && conditioned.is_full_rank());
            assert_eq!(
                condition_stochastic(&conditioned, &ev(2, &[2])).unwrap(),
                condition_stochastic(&q, &ev(n, &[3])).unwrap(),
                "q = {q:?}"
            );
        }
    }

    #[test]
    fn orthogonal_conditioning_examples() {
        assert_eq!(
            condition_orthogonal(&RMatrix::identity(3), &ev(3, &[1, 2])).unwrap(),
            RMatrix::identity(2)
        );
        let a = sample_orthogonal();
        assert_eq!(
            condition_orthogonal(&a, &ev(3, &[2, 3])).unwrap(),
            m(&[&[1, 1], &[-1, 1]])
        );
    }

    #[test]
    fn orthogonal_conditioning_commutes_with_class_membership() {
        let a = sample_orthogonal();
        let e = ev(3, &[2, 3]);
        let conditioned = condition_orthogonal(&a, &e).unwrap();
        for t in [-1, -2, -5] {
            let p = stochastic_family(t);
            assert!(equiv_class_member(&p, &a).unwrap(), "t = {t}");
            assert!(
                equiv_class_member(&condition_stochastic(&p, &e).unwrap(), &conditioned).unwrap(),
                "t = {t}"
            );
        }
        // Membership transfers forward only: conditioning can merge rows
        // that distinguished a non-member from the class. The contrapositive
        // still holds, so a conditioned non-member certifies a non-member.
        let merged = RMatrix::from_rows(vec![
            Gamble::new(vec![rat(1, 3), rat(1, 3), rat(1, 3)]),
            Gamble::new(vec![int(0), int(0), int(1)]),
            Gamble::new(vec![int(1), int(0), int(0)]),
        ])
        .unwrap();
        assert!(!equiv_class_member(&merged, &a).unwrap());
        assert!(
            equiv_class_member(&condition_stochastic(&merged, &e).unwrap(), &conditioned).unwrap()
        );
        let outsider = m(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert!(
            !equiv_class_member(&condition_stochastic(&outsider, &e).unwrap(), &conditioned)
                .unwrap()
        );
        assert!(!equiv_class_member(&outsider, &a).unwrap());
    }

    #[test]
    fn orthogonal_conditioning_matches_lifted_semispace_membership() {
        let cfg = SampleConfig::new(252);
        let mut rng = cfg.rng();
        let a = sample_orthogonal();
        for e in [ev(3, &[1]), ev(3, &[2, 3]), ev(3, &[1, 3]), ev(3, &[1, 2])] {
            let conditioned = condition_orthogonal(&a, &e).unwrap();
            for _ in 0..60 {
                let x = testkit::random_gamble(&mut rng, e.len(), &cfg);
                assert_eq!(
                    maximal_desirable_member(&conditioned, &x).unwrap(),
                    maximal_desirable_member(&a, &lift_gamble(&x, &e).unwrap()).unwrap(),
                    "event {:?}, gamble {x:?}",
                    e.one_based()
                );
            }
        }
        let round =
            orthogonal_from_stochastic(&stochastic_from_orthogonal(&a).unwrap()).unwrap();
        assert_eq!(
            condition_orthogonal(&round, &ev(3, &[2, 3])).unwrap(),
            condition_orthogonal(&a, &ev(3, &[2, 3])).unwrap()
        );
    }
}
