//! The classical polarity between almost-desirable cones and credal sets.
//!
//! A coherent halfspace cone has nonnegative normals; intersecting its polar
//! with the probability simplex yields a polytope of mass functions, and the
//! map is a bijection whose inverse reads the vertices back as normals.


use crate::cones::{GeneratorCone, HalfspaceCone};
use crate::error::{Error, Result};
use crate::gamble::{lex_total_cmp, Gamble};
use crate::rational::Rational;
use crate::simplex::{self, Constraint, Rel};

/// Convex hull of finitely many probability mass functions, stored as its
/// unique extreme points in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CredalPolytope {
    dim: usize,
    vertices: Vec<Gamble>,
}

impl CredalPolytope {
    /// Validates and canonicalizes: every input must be a mass function;
    /// duplicates and convex-redundant points are dropped and the remainder
    /// sorted, so equal sets compare equal.
    pub fn new(dim: usize, vertices: Vec<Gamble>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Empty("credal polytope"));
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
            if !v.is_pmf() {
                return Err(Error::NotProbability);
            }
        }
        let mut vs = vertices;
        vs.sort_by(lex_total_cmp);
        vs.dedup();
        let mut j = 0;
        while j < vs.len() {
            let target = vs[j].clone();
            let others: Vec<Gamble> = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != j)
                .map(|(_, v)| v.clone())
                .collect();
            if !others.is_empty() && in_convex_hull(&target, &others) {
                vs.remove(j);
            } else {
                j += 1;
            }
        }
        Ok(CredalPolytope { dim, vertices: vs })
    }

    /// The full probability simplex: all basis mass functions.
    pub fn simplex(dim: usize) -> Self {
        CredalPolytope {
            dim,
            vertices: {
                let mut vs: Vec<Gamble> = (0..dim).map(|i| Gamble::basis(dim, i)).collect();
                vs.sort_by(lex_total_cmp);
                vs
            },
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Gamble] {
        &self.vertices
    }

    /// Exact membership of a point in the hull.
    pub fn contains(&self, p: &Gamble) -> Result<bool> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        Ok(in_convex_hull(p, &self.vertices))
    }

    /// Lower expectation of a gamble: the minimum of `<p, g>` over the
    /// polytope, attained at a vertex.
    pub fn lower_expectation(&self, g: &Gamble) -> Result<Rational> {
        if g.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: g.dim(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| v.inner(g))
            .min()
            .expect("vertex list is nonempty"))
    }
}

fn in_convex_hull(p: &Gamble, points: &[Gamble]) -> bool {
    let k = points.len();
    let mut constraints: Vec<Constraint> = (0..p.dim())
        .map(|i| {
            Constraint::new(
                points.iter().map(|v| v[i].clone()).collect(),
                Rel::Eq,
                p[i].clone(),
            )
        })
        .collect();
    constraints.push(Constraint::new(
        vec![crate::rational::int(1); k],
        Rel::Eq,
        crate::rational::int(1),
    ));
    matches!(
        simplex::maximize(&vec![Rational::from_integer(0.into()); k], &constraints),
        simplex::Outcome::Optimal { .. }
    )
}

/// The polar of a generated cone in halfspace form: membership in the polar
/// means a nonnegative inner product against every generator, so the
/// generators become the normals.
pub fn polar_of_generators(k: &GeneratorCone) -> HalfspaceCone {
    HalfspaceCone::new(k.dim(), k.generators().to_vec()).expect("dimension preserved")
}

/// Intersects the polar of a coherent halfspace cone with the probability
/// simplex. The polar is spanned by the normals, which coherence forces to
/// be nonnegative and not all zero, so the vertices are the sum-normalized
/// nonzero normals after convex pruning.
pub fn to_credal(k: &HalfspaceCone) -> Result<CredalPolytope> {
    if let Some(violation) = k.is_coherent_almost().violation() {
        return Err(Error::Incoherent {
            axiom: violation.axiom(),
        });
    }
    let vertices: Vec<Gamble> = k
        .normals()
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            v.scaled_to_sum_one()
                .expect("coherent normals are nonnegative and nonzero")
        })
        .collect();
    CredalPolytope::new(k.dim(), vertices)
}

/// The inverse polarity: the halfspace cone polar to a credal polytope. Its
/// normals are the vertices, and the result is always coherent.
pub fn from_credal(p: &CredalPolytope) -> HalfspaceCone {
    HalfspaceCone::new(p.dim(), p.vertices().to_vec()).expect("dimension preserved")
}

/// The maximal coherent almost-desirable cone committed to a single mass
/// function: one halfspace through the origin with that normal.
pub fn maximal_almost_from_pmf(p: &Gamble) -> Result<HalfspaceCone> {
    if !p.is_pmf() {
        return Err(Error::NotProbability);
    }
    HalfspaceCone::new(p.dim(), vec![p.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::testkit::{self, SampleConfig};

    fn g(v: &[i64]) -> Gamble {
        Gamble::from_ints(v)
    }

    fn h(dim: usize, normals: &[&[i64]]) -> HalfspaceCone {
        HalfspaceCone::new(dim, normals.iter().map(|r| Gamble::from_ints(r)).collect())
            .unwrap()
    }

    fn pmf(v: &[(i64, i64)]) -> Gamble {
        Gamble::new(v.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn polytope_canonicalizes_vertices() {
        let p = CredalPolytope::new(
            2,
            vec![
                g(&[1, 0]),
                g(&[0, 1]),
                pmf(&[(1, 2), (1, 2)]),
                g(&[1, 0]),
            ],
        )
        .unwrap();
        // The midpoint is inside the segment and must be pruned.
        assert_eq!(p.vertices(), &[g(&[0, 1]), g(&[1, 0])]);
        assert_eq!(p, CredalPolytope::simplex(2));
    }

    #[test]
    fn polytope_rejects_non_probabilities() {
        assert!(matches!(
            CredalPolytope::new(2, vec![g(&[1, 1])]),
            Err(Error::NotProbability)
        ));
        assert!(matches!(
            CredalPolytope::new(2, vec![]),
            Err(Error::Empty(_))
        ));
    }

    #[test]
    fn hull_membership() {
        let p = CredalPolytope::simplex(3);
        assert!(p.contains(&pmf(&[(1, 3), (1, 3), (1, 3)])).unwrap());
        let q = CredalPolytope::new(3, vec![g(&[1, 0, 0]), g(&[0, 1, 0])]).unwrap();
        assert!(q.contains(&pmf(&[(1, 2), (1, 2), (0, 1)])).unwrap());
        assert!(!q.contains(&pmf(&[(1, 2), (0, 1), (1, 2)])).unwrap());
    }

    #[test]
    fn polar_of_generators_swaps_roles() {
        let k = GeneratorCone::vacuous(3);
        let polar = polar_of_generators(&k);
        assert_eq!(polar.normals(), k.generators());
        let ray = GeneratorCone::new(2, vec![g(&[3, 4])]).unwrap();
        assert_eq!(polar_of_generators(&ray).normals(), &[g(&[3, 4])]);
    }

    #[test]
    fn quadrant_maps_to_the_full_simplex() {
        let k = h(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(to_credal(&k).unwrap(), CredalPolytope::simplex(3));
    }

    #[test]
    fn maximal_cone_maps_to_its_normalized_normal() {
        let v = Gamble::new(vec![rat(3, 5), rat(4, 5)]);
        let k = HalfspaceCone::new(2, vec![v]).unwrap();
        let p = to_credal(&k).unwrap();
        assert_eq!(p.vertices(), &[pmf(&[(3, 7), (4, 7)])]);
    }

    #[test]
    fn degenerate_halfplane_maps_to_a_single_vertex() {
        let k = h(2, &[&[1, 0]]);
        let p = to_credal(&k).unwrap();
        assert_eq!(p.vertices(), &[g(&[1, 0])]);
    }

    #[test]
    fn incoherent_input_is_rejected() {
        assert!(matches!(
            to_credal(&h(2, &[&[1, -1]])),
            Err(Error::Incoherent { axiom: "A3" })
        ));
        assert!(matches!(
            to_credal(&HalfspaceCone::whole_space(2)),
            Err(Error::Incoherent { axiom: "A6" })
        ));
    }

    #[test]
    fn from_credal_reads_vertices_as_normals() {
        let simplex = CredalPolytope::simplex(2);
        let k = from_credal(&simplex);
        assert_eq!(k.normals(), &[g(&[0, 1]), g(&[1, 0])]);
        assert!(k.is_coherent_almost().is_coherent());

        let single = CredalPolytope::new(2, vec![pmf(&[(3, 7), (4, 7)])]).unwrap();
        let ray = from_credal(&single);
        // Same halfspace as 3g_1 + 4g_2 >= 0.
        assert!(ray.contains(&g(&[4, -3])).unwrap());
        assert!(ray.contains(&g(&[-4, 3])).unwrap());
        assert!(!ray.contains(&g(&[-2, 1])).unwrap());
    }

    #[test]
    fn segment_between_axes_gives_back_the_quadrant() {
        let p = CredalPolytope::new(2, vec![g(&[1, 0]), g(&[0, 1])]).unwrap();
        let k = from_credal(&p);
        assert_eq!(k.normals(), &[g(&[0, 1]), g(&[1, 0])]);
    }

    #[test]
    fn maximal_from_pmf_examples() {
        let k = maximal_almost_from_pmf(&g(&[1, 0])).unwrap();
        assert!(k.contains(&g(&[0, -5])).unwrap());
        assert!(!k.contains(&g(&[-1, 5])).unwrap());

        let half = maximal_almost_from_pmf(&pmf(&[(1, 2), (1, 2)])).unwrap();
        assert!(half.contains(&g(&[-1, 1])).unwrap());
        assert!(half.contains(&g(&[1, -1])).unwrap());
        assert!(!half.contains(&g(&[-1, 0])).unwrap());

        assert!(matches!(
            maximal_almost_from_pmf(&g(&[1, 1])),
            Err(Error::NotProbability)
        ));
    }

    #[test]
    fn maximal_cones_round_trip_through_their_mass_function() {
        let p = pmf(&[(1, 6), (1, 3), (1, 2)]);
        let k = maximal_almost_from_pmf(&p).unwrap();
        let back = to_credal(&k).unwrap();
        assert_eq!(back.vertices(), &[p]);
    }

    #[test]
    fn round_trips_and_antitonicity_on_fixed_cases() {
        let cases: Vec<HalfspaceCone> = vec![
            h(2, &[&[1, 0], &[0, 1]]),
            h(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 0]]),
            h(3, &[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]),
            h(4, &[&[1, 0, 0, 0], &[1, 1, 1, 1], &[0, 0, 1, 1]]),
        ];
        let cfg = SampleConfig::new(402).with_samples(80);
        for k in &cases {
            let p = to_credal(k).unwrap();
            let back = from_credal(&p);
            let a = |x: &Gamble| k.contains(x).unwrap();
            let b = |x: &Gamble| back.contains(x).unwrap();
            assert!(testkit::sampled_set_equal(&a, &b, k.dim(), &cfg).agreed());
            let again = to_credal(&back).unwrap();
            assert_eq!(p, again);
        }

        // Fewer constraints give a larger cone and a smaller credal set.
        let narrow = h(2, &[&[1, 0], &[0, 1], &[1, 3]]);
        let wide = h(2, &[&[1, 0], &[0, 1]]);
        let p_narrow = to_credal(&narrow).unwrap();
        let p_wide = to_credal(&wide).unwrap();
        for v in p_narrow.vertices() {
            assert!(p_wide.contains(v).unwrap());
        }
    }
}
