//! Exact double description: converting between halfspace and generator
//! descriptions of polyhedral cones.
//!
//! Constraints are processed in their given order. The intermediate
//! representation keeps lineality directions separate from rays: while a
//! constraint cuts a line the cone loses one lineality dimension and gains a
//! ray; once every line lies inside the constraint hyperplane the classic
//! ray-splitting step runs. Redundant rays are pruned by exact LP after
//! every step, which keeps the description minimal and deterministic.

use num::{Signed, Zero};

use crate::cones::{GeneratorCone, HalfspaceCone};
use crate::gamble::{lex_total_cmp, Gamble};
use crate::rational::Rational;
use crate::simplex;

/// Generator description of a halfspace cone; the cone `{0_n}` has no
/// nonzero generator and gets its own marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorForm {
    Origin,
    Cone(GeneratorCone),
}

impl GeneratorForm {
    pub fn is_origin(&self) -> bool {
        matches!(self, GeneratorForm::Origin)
    }

    pub fn cone(&self) -> Option<&GeneratorCone> {
        match self {
            GeneratorForm::Origin => None,
            GeneratorForm::Cone(k) => Some(k),
        }
    }
}

/// Rays and lines spanning `{g : <normal, g> >= 0 for all normals}`: the
/// cone is the set of nonnegative ray combinations plus arbitrary line
/// combinations.
pub(crate) fn extreme_rays(normals: &[Gamble], dim: usize) -> (Vec<Gamble>, Vec<Gamble>) {
    let mut lines: Vec<Gamble> = (0..dim).map(|i| Gamble::basis(dim, i)).collect();
    let mut rays: Vec<Gamble> = Vec::new();

    for v in normals.iter().filter(|v| !v.is_zero()) {
        if let Some(idx) = lines.iter().position(|l| !v.inner(l).is_zero()) {
            // A line still crosses the constraint hyperplane: project
            // everything else onto the hyperplane along it and keep its
            // feasible half as a ray.
            let l0 = lines.remove(idx);
            let d0 = v.inner(&l0);
            for l in lines.iter_mut() {
                let c = v.inner(l) / &d0;
                if !c.is_zero() {
                    *l = l.sub(&l0.scale(&c));
                }
            }
            for r in rays.iter_mut() {
                let c = v.inner(r) / &d0;
                if !c.is_zero() {
                    *r = r.sub(&l0.scale(&c));
                }
            }
            rays.push(if d0.is_positive() { l0 } else { l0.neg() });
        } else {
            let mut plus: Vec<(Gamble, Rational)> = Vec::new();
            let mut minus: Vec<(Gamble, Rational)> = Vec::new();
            let mut kept: Vec<Gamble> = Vec::new();
            for r in rays.drain(..) {
                let d = v.inner(&r);
                if d.is_positive() {
                    plus.push((r, d));
                } else if d.is_negative() {
                    minus.push((r, d));
                } else {
                    kept.push(r);
                }
            }
            for (p, dp) in &plus {
                for (m, dm) in &minus {
                    let w = p.scale(&-dm.clone()).add(&m.scale(dp));
                    if !w.is_zero() {
                        kept.push(w);
                    }
                }
            }
            kept.extend(plus.into_iter().map(|(p, _)| p));
            rays = kept;
        }
        prune_rays(&mut rays, &lines);
    }
    (rays, lines)
}

/// Drops rays expressible from the others and the lines; mutates in place,
/// scanning in a fixed order for determinism.
fn prune_rays(rays: &mut Vec<Gamble>, lines: &[Gamble]) {
    rays.sort_by(lex_total_cmp);
    rays.dedup();
    let mut j = 0;
    while j < rays.len() {
        let target = rays[j].clone();
        let others: Vec<Gamble> = rays
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, r)| r.clone())
            .collect();
        if in_span_plus_cone(&target, lines, &others) {
            rays.remove(j);
        } else {
            j += 1;
        }
    }
}

/// Is `g` in `span(lines) + cone(rays)`? Lines contribute free weights,
/// realized as differences of nonnegative ones.
pub(crate) fn in_span_plus_cone(g: &Gamble, lines: &[Gamble], rays: &[Gamble]) -> bool {
    if g.is_zero() {
        return true;
    }
    if lines.is_empty() && rays.is_empty() {
        return false;
    }
    let dim = g.dim();
    let nvars = 2 * lines.len() + rays.len();
    let rows: Vec<(Vec<Rational>, Rational)> = (0..dim)
        .map(|i| {
            let mut coeffs = Vec::with_capacity(nvars);
            for l in lines {
                coeffs.push(l[i].clone());
            }
            for l in lines {
                coeffs.push(-l[i].clone());
            }
            for r in rays {
                coeffs.push(r[i].clone());
            }
            (coeffs, g[i].clone())
        })
        .collect();
    simplex::feasible_point(&rows).is_some()
}

/// Enumerates a generator description of a halfspace cone. Lines appear as
/// a pair of opposite generators.
pub fn halfspaces_to_generators(k: &HalfspaceCone) -> GeneratorForm {
    let (rays, lines) = extreme_rays(k.normals(), k.dim());
    assemble(rays, lines, k.dim())
}

pub(crate) fn assemble(rays: Vec<Gamble>, lines: Vec<Gamble>, dim: usize) -> GeneratorForm {
    let mut gens: Vec<Gamble> = rays.iter().map(|r| r.canonical_ray()).collect();
    for l in &lines {
        let c = l.canonical_ray();
        gens.push(c.neg());
        gens.push(c);
    }
    if gens.is_empty() {
        return GeneratorForm::Origin;
    }
    let cone = GeneratorCone::new(dim, gens).expect("rays and lines are nonzero");
    let canonical = cone.canonical_generators();
    GeneratorForm::Cone(
        GeneratorCone::new(dim, canonical).expect("canonical form of a nonempty cone"),
    )
}

/// Halfspace description of the closure of a generated cone: the polar's
/// extreme rays become the normals.
pub fn generators_to_halfspaces(k: &GeneratorCone) -> HalfspaceCone {
    let (rays, lines) = extreme_rays(k.generators(), k.dim());
    let mut normals: Vec<Gamble> = rays.iter().map(|r| r.canonical_ray()).collect();
    for l in &lines {
        let c = l.canonical_ray();
        normals.push(c.neg());
        normals.push(c);
    }
    normals.sort_by(lex_total_cmp);
    normals.dedup();
    HalfspaceCone::new(k.dim(), normals).expect("dimension preserved")
}
