//! Independent brute-force oracles and seeded random instance generators.
//!
//! Everything here deliberately avoids the main-path simplex: feasibility
//! questions are answered by Fourier-Motzkin elimination and exhaustive
//! small-denominator grid search, so agreement between oracle and main path
//! is evidence rather than tautology. All randomness flows through seeded
//! generators and failing cases replay from literals.

use num::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classic::CredalPolytope;
use crate::cones::{GeneratorCone, HalfspaceCone};
use crate::error::{Error, Result};
use crate::gamble::Gamble;
use crate::matrix::RMatrix;
use crate::rational::Rational;

/// A uniform index below `bound`.
pub fn rng_usize(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    rng.gen_range(0..bound)
}

/// Bounds and seed for sampling-based checks.
#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Absolute bound on sampled coordinate values.
    pub coord_bound: i64,
    /// Largest denominator drawn for sampled coordinates.
    pub denom_bound: i64,
    /// Number of random points per comparison.
    pub samples: usize,
    /// Seed for the deterministic stream.
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(seed: u64) -> Self {
        SampleConfig {
            coord_bound: 3,
            denom_bound: 4,
            samples: 64,
            seed,
        }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        assert!(samples > 0, "sample count must be positive");
        self.samples = samples;
        self
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// One linear inequality `coeffs . x <= rhs` for the elimination oracle.
type Ineq = (Vec<Rational>, Rational);

/// Decides feasibility of a system of `coeffs . x <= rhs` rows by
/// eliminating every variable in turn. Variables leave in the order that
/// minimizes the number of freshly combined rows, and rows are canonicalized
/// and deduplicated between rounds to keep growth in check.
pub fn fm_feasible(system: &[Ineq], nvars: usize) -> bool {
    let mut rows: Vec<Ineq> = system.to_vec();
    let mut remaining: Vec<usize> = (0..nvars).collect();
    while !remaining.is_empty() {
        match tidy(rows) {
            Some(t) => rows = t,
            None => return false,
        }
        let (pick, _) = remaining
            .iter()
            .enumerate()
            .map(|(slot, &v)| {
                let pos = rows.iter().filter(|(c, _)| c[v].is_positive()).count();
                let neg = rows.iter().filter(|(c, _)| c[v].is_negative()).count();
                (slot, pos * neg + pos + neg)
            })
            .min_by_key(|&(_, cost)| cost)
            .expect("remaining is nonempty");
        let v = remaining.swap_remove(pick);

        let mut kept: Vec<Ineq> = Vec::new();
        let mut pos: Vec<Ineq> = Vec::new();
        let mut neg: Vec<Ineq> = Vec::new();
        for (coeffs, rhs) in rows {
            if coeffs[v].is_zero() {
                kept.push((coeffs, rhs));
            } else if coeffs[v].is_positive() {
                pos.push((coeffs, rhs));
            } else {
                neg.push((coeffs, rhs));
            }
        }
        for (pc, pr) in &pos {
            let pa = &pc[v];
            for (nc, nr) in &neg {
                let na = -&nc[v];
                let coeffs: Vec<Rational> = pc
                    .iter()
                    .zip(nc)
                    .map(|(p, n)| p / pa + n / &na)
                    .collect();
                let rhs = pr / pa + nr / &na;
                kept.push((coeffs, rhs));
                assert!(kept.len() <= 50_000, "elimination blow-up beyond test sizes");
            }
        }
        rows = kept;
    }
    rows.iter().all(|(_, rhs)| !rhs.is_negative())
}

/// Scales every row so its first nonzero coefficient has absolute value
/// one, drops rows with no coefficients left that are trivially satisfied,
/// and deduplicates. Returns `None` on a row `0 <= rhs` with negative rhs.
fn tidy(rows: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut out: Vec<Ineq> = Vec::with_capacity(rows.len());
    for (coeffs, rhs) in rows {
        match coeffs.iter().find(|c| !c.is_zero()) {
            None => {
                if rhs.is_negative() {
                    return None;
                }
            }
            Some(lead) => {
                let s = lead.abs();
                let scaled: Vec<Rational> = coeffs.iter().map(|c| c / &s).collect();
                let row = (scaled, &rhs / &s);
                if !out.contains(&row) {
                    out.push(row);
                }
            }
        }
    }
    Some(out)
}

fn push_eq(system: &mut Vec<Ineq>, coeffs: Vec<Rational>, rhs: Rational) {
    system.push((coeffs.iter().map(|c| -c).collect(), -&rhs));
    system.push((coeffs, rhs));
}

/// Oracle membership of `g` in the conic hull of `generators`
/// (nonnegative combinations with at least one positive weight).
///
/// The verdict comes from Fourier-Motzkin elimination; when the generator
/// count admits it, an exhaustive grid search over small-denominator weights
/// cross-checks every positive it can reach.
pub fn oracle_conic_member(generators: &[Gamble], g: &Gamble) -> bool {
    assert!(!generators.is_empty(), "need at least one generator");
    let dim = g.dim();
    assert!(
        generators.iter().all(|h| h.dim() == dim),
        "generator dimension mismatch"
    );
    let k = generators.len();

    let mut system: Vec<Ineq> = Vec::new();
    for i in 0..dim {
        let coeffs: Vec<Rational> = generators.iter().map(|h| h[i].clone()).collect();
        push_eq(&mut system, coeffs, g[i].clone());
    }
    if g.is_zero() {
        // Normalize the weights to sum to one so the zero combination is
        // excluded; conic membership of the origin is scale invariant.
        push_eq(&mut system, vec![Rational::one(); k], Rational::one());
    }
    for j in 0..k {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs[j] = -Rational::one();
        system.push((coeffs, Rational::zero()));
    }
    let verdict = fm_feasible(&system, k);

    if k <= 3 {
        if let Some(witness) = grid_conic_witness(generators, g) {
            assert!(
                verdict,
                "grid witness {witness:?} contradicts elimination verdict"
            );
        }
    }
    verdict
}

/// Exhaustive search for conic weights with small denominators realizing
/// `g`: each weight runs over the nonnegative grid with denominators up to 4
/// and values up to 3.
pub fn grid_conic_witness(generators: &[Gamble], g: &Gamble) -> Option<Vec<Rational>> {
    let values = nonneg_grid_values(3, 4);
    let k = generators.len();
    let mut idx = vec![0usize; k];
    loop {
        let lambda: Vec<Rational> = idx.iter().map(|&i| values[i].clone()).collect();
        if lambda.iter().any(|l| !l.is_zero()) {
            let mut acc = Gamble::zeros(g.dim());
            for (l, h) in lambda.iter().zip(generators) {
                acc = acc.add(&h.scale(l));
            }
            if acc == *g {
                return Some(lambda);
            }
        }
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            if pos == 0 {
                return None;
            }
        }
    }
}

/// All distinct rationals in `[0, bound]` whose reduced denominator is at
/// most `denom_bound`, ascending.
pub fn nonneg_grid_values(bound: i64, denom_bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for q in 1..=denom_bound {
        for p in 0..=bound * q {
            let v = crate::rational::rat(p, q);
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// Outcome of comparing two membership predicates on sampled points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetComparison {
    Agree,
    /// First sampled point where the predicates differ.
    Disagree(Gamble),
}

impl SetComparison {
    pub fn agreed(&self) -> bool {
        matches!(self, SetComparison::Agree)
    }
}

/// Compares two membership predicates over `R^dim` on the deterministic
/// integer grid `{-1,0,1}^dim` (ascending lexicographic order) followed by
/// seeded random rational points. Returns the first disagreement found.
pub fn sampled_set_equal(
    a: &dyn Fn(&Gamble) -> bool,
    b: &dyn Fn(&Gamble) -> bool,
    dim: usize,
    cfg: &SampleConfig,
) -> SetComparison {
    let mut idx = vec![0usize; dim];
    loop {
        let g = Gamble::new(
            idx.iter()
                .map(|&i| crate::rational::int(i as i64 - 1))
                .collect(),
        );
        if a(&g) != b(&g) {
            return SetComparison::Disagree(g);
        }
        let mut pos = dim;
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < 3 {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
        if done {
            break;
        }
    }

    let mut rng = cfg.rng();
    for _ in 0..cfg.samples {
        let g = random_gamble(&mut rng, dim, cfg);
        if a(&g) != b(&g) {
            return SetComparison::Disagree(g);
        }
    }
    SetComparison::Agree
}

/// One random coordinate: denominator up to `denom_bound`, value bounded by
/// `coord_bound` in absolute value.
pub fn random_rational(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Rational {
    let den = rng.gen_range(1..=cfg.denom_bound);
    let num = rng.gen_range(-cfg.coord_bound * den..=cfg.coord_bound * den);
    crate::rational::rat(num, den)
}

pub fn random_gamble(rng: &mut ChaCha8Rng, dim: usize, cfg: &SampleConfig) -> Gamble {
    Gamble::new((0..dim).map(|_| random_rational(rng, cfg)).collect())
}

pub fn random_nonzero_gamble(rng: &mut ChaCha8Rng, dim: usize, cfg: &SampleConfig) -> Gamble {
    for _ in 0..256 {
        let g = random_gamble(rng, dim, cfg);
        if !g.is_zero() {
            return g;
        }
    }
    unreachable!("256 consecutive zero draws")
}

/// A coordinate from the nonnegative half of the sampling range.
pub fn random_nonneg_rational(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Rational {
    let den = rng.gen_range(1..=cfg.denom_bound);
    let num = rng.gen_range(0..=cfg.coord_bound * den);
    crate::rational::rat(num, den)
}

/// A nonzero gamble with all coordinates nonnegative.
pub fn random_nonneg_nonzero_gamble(rng: &mut ChaCha8Rng, dim: usize, cfg: &SampleConfig) -> Gamble {
    for _ in 0..256 {
        let g = Gamble::new((0..dim).map(|_| random_nonneg_rational(rng, cfg)).collect());
        if !g.is_zero() {
            return g;
        }
    }
    unreachable!("256 consecutive zero draws")
}

pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, cfg: &SampleConfig) -> RMatrix {
    RMatrix::from_rows((0..n).map(|_| random_gamble(rng, n, cfg)).collect())
        .expect("square shape by construction")
}

/// A random row-stochastic matrix of full rank, by rejection.
pub fn random_full_rank_stochastic(
    rng: &mut ChaCha8Rng,
    n: usize,
    cfg: &SampleConfig,
) -> Result<RMatrix> {
    for _ in 0..64 {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let raw = Gamble::new((0..n).map(|_| random_nonneg_rational(rng, cfg)).collect());
            if let Some(normalized) = raw.scaled_to_sum_one() {
                rows.push(normalized);
            }
        }
        if rows.len() < n {
            continue;
        }
        let m = RMatrix::from_rows(rows).expect("square shape by construction");
        if m.is_full_rank() {
            debug_assert!(m.is_stochastic());
            return Ok(m);
        }
    }
    Err(Error::SamplingExhausted("full-rank stochastic matrix"))
}

/// A random row-orthogonal full-rank matrix with lex-positive columns,
/// obtained by orthogonalizing a random full-rank stochastic matrix.
pub fn random_lexpos_orthogonal(
    rng: &mut ChaCha8Rng,
    n: usize,
    cfg: &SampleConfig,
) -> Result<RMatrix> {
    let p = random_full_rank_stochastic(rng, n, cfg)?;
    crate::factor::orthogonal_from_stochastic(&p)
}

/// A random coherent almost-desirable cone in halfspace form: a few
/// nonnegative nonzero normals, which always satisfy the axioms.
pub fn random_coherent_halfspace_cone(
    rng: &mut ChaCha8Rng,
    dim: usize,
    cfg: &SampleConfig,
) -> HalfspaceCone {
    let count = 1 + rng_usize(rng, 3);
    let normals = (0..count)
        .map(|_| random_nonneg_nonzero_gamble(rng, dim, cfg))
        .collect();
    let cone = HalfspaceCone::new(dim, normals).expect("dimensions match by construction");
    debug_assert!(cone.is_coherent_almost().is_coherent());
    cone
}

/// A random credal polytope: the convex hull of a few random probability
/// mass functions.
pub fn random_credal_polytope(
    rng: &mut ChaCha8Rng,
    dim: usize,
    cfg: &SampleConfig,
) -> CredalPolytope {
    let count = 1 + rng_usize(rng, 3);
    let vertices: Vec<Gamble> = (0..count)
        .map(|_| {
            random_nonneg_nonzero_gamble(rng, dim, cfg)
                .scaled_to_sum_one()
                .expect("nonnegative nonzero gambles have positive sum")
        })
        .collect();
    CredalPolytope::new(dim, vertices).expect("probability vertices by construction")
}

/// A random coherent cone: the closure of a couple of random assessments
/// together with the basis, by rejection on the coherence check.
pub fn random_coherent_cone(
    rng: &mut ChaCha8Rng,
    dim: usize,
    cfg: &SampleConfig,
) -> Result<GeneratorCone> {
    for _ in 0..64 {
        let extra = rng.gen_range(0..=2);
        let assessments: Vec<Gamble> = (0..extra)
            .map(|_| random_nonzero_gamble(rng, dim, cfg))
            .collect();
        let cone = crate::cones::natural_extension(&assessments, dim)
            .expect("assessments are nonzero with matching dimension");
        if cone.is_coherent_desirable().is_coherent() {
            return Ok(cone);
        }
    }
    Err(Error::SamplingExhausted("coherent cone"))
}
