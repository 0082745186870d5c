//! Left Gröbner bases, truncated bases, minimal homogeneous generating sets,
//! presentation minimization, syzygies and minimal graded free resolutions for
//! finitely generated graded modules over weighted N-graded solvable
//! polynomial algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`]: exact coefficient fields (rationals, prime fields);
//! - [`algebra`]: PBW monomials, graded orderings, product normalization and
//!   the solvability/gradedness checks;
//! - [`freemod`]: graded free modules, module orderings (TOP, POT, Schreyer),
//!   the left division algorithm and left S-polynomials;
//! - [`groebner`]: the Buchberger engine plus its truncated and minimizing
//!   variants, with transition matrices and reduction traces;
//! - [`presentation`]: elimination of redundant basis vectors from a graded
//!   presentation;
//! - [`syzygy`]: Schreyer generators of `Syz(G)` and generators of `Syz(U)`
//!   transported through the transition matrices;
//! - [`resolution`]: the minimal graded free resolution pipeline with Betti
//!   data and an independent verifier.
//!
//! All arithmetic is exact; nothing in the crate uses floating point.

pub mod algebra;
pub mod algebras;
pub mod error;
pub mod freemod;
pub mod groebner;
pub mod presentation;
pub mod resolution;
pub mod scalar;
pub mod syzygy;

pub use algebra::{Monomial, OrderingFamily, OrderingSpec, Polynomial, RelationSpec, SolvableAlgebra};
pub use error::{Error, Result, ValidationReport};
pub use freemod::{Division, GradedFreeModule, ModuleElement, ModuleMonomial, ModuleOrdering};
pub use groebner::{GbKind, GroebnerBasis, MinimalGenerators, SpairTrace, TransitionMatrices};
pub use presentation::{MinimizedPresentation, PivotRecord, Presentation};
pub use resolution::{BettiRow, BettiTable, Resolution, ResolutionStep};
pub use scalar::{Coefficient, FieldSpec};
pub use syzygy::{Provenance, SyzygyBasis, SyzygyGenerator};
