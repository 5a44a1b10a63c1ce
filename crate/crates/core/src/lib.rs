//! Exact-rational cones of desirable gambles and their dual credal sets.
//!
//! The crate models finitely generated gamble cones over a finite possibility
//! space, the polarity that pairs almost-desirable cones with credal
//! polytopes, and the lexicographic refinement that pairs strictly desirable
//! cones with families of full-rank stochastic matrices. Everything runs on
//! `BigRational`, so results are exact and reproducible byte for byte.

mod classic;
mod condition;
mod cones;
mod dd;
mod error;
mod factor;
mod gamble;
mod lex;
mod matrix;
mod rational;
mod separate;
mod simplex;
pub mod testkit;

pub use classic::{from_credal, maximal_almost_from_pmf, polar_of_generators, to_credal, CredalPolytope};
pub use condition::{
    condition_credal, condition_generator_cone, condition_halfspace_cone, condition_orthogonal,
    condition_stochastic, drop_dependent_rows, lift_gamble, restrict_gamble, ConditionedGenerators,
    EventSubset,
};
pub use cones::{natural_extension, Coherence, CoherenceViolation, GeneratorCone, HalfspaceCone};
pub use dd::{generators_to_halfspaces, halfspaces_to_generators, GeneratorForm};
pub use error::{Error, Result};
pub use factor::{
    equiv_class_member, lp_decompose, orthogonal_from_stochastic, stochastic_from_orthogonal,
    LpDecomposition,
};
pub use gamble::{lex_cmp, Gamble};
pub use lex::{
    lcredal_member, lex_hull_member, lex_polar_member, maximal_desirable_member, semispace_equal,
    HullVerdict, LCredalWitness, SemispaceFamily, LEX_HULL_DIM_BOUND,
};
pub use matrix::{scale_rows, RMatrix};
pub use rational::{int, rat, rational_from_str, rational_to_string, Rational};
pub use separate::{separate_almost, separate_lex, SeparationWitness};
