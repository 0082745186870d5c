//! Deterministic random instances for the randomized suites: three algebra
//! families over a choice of field, and homogeneous module elements of
//! prescribed degree.

use std::sync::Arc;

use rand::Rng;
use spa_core::algebras;
use spa_core::{
    Coefficient, FieldSpec, GradedFreeModule, ModuleElement, ModuleMonomial, ModuleOrdering,
    SolvableAlgebra,
};

use crate::monomials_of_degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Commutative K[x, y, z].
    Commutative3,
    /// Quantum affine 3-space with scalars from {2, 1/2}.
    Quantum3,
    /// The coordinate ring of quantum 2x2 matrices at q = 2.
    QuantumMatrix2,
}

pub const ALGEBRA_KINDS: [AlgebraKind; 3] =
    [AlgebraKind::Commutative3, AlgebraKind::Quantum3, AlgebraKind::QuantumMatrix2];

pub fn algebra(kind: AlgebraKind, field: FieldSpec) -> SolvableAlgebra {
    match kind {
        AlgebraKind::Commutative3 => algebras::commutative_ring(&["x", "y", "z"], field).unwrap(),
        AlgebraKind::Quantum3 => {
            let two = field.integer(2);
            let half = field.fraction(1, 2).unwrap();
            algebras::quantum_affine_space(&["x", "y", "z"], field, &[two.clone(), half, two])
                .unwrap()
        }
        AlgebraKind::QuantumMatrix2 => {
            algebras::quantum_matrix_2x2(field, field.integer(2)).unwrap()
        }
    }
}

pub fn rank1_module(algebra: SolvableAlgebra) -> Arc<GradedFreeModule> {
    GradedFreeModule::new(Arc::new(algebra), vec![0], ModuleOrdering::Top).unwrap()
}

pub fn nonzero_coefficient<R: Rng>(rng: &mut R, field: &FieldSpec) -> Coefficient {
    match field {
        FieldSpec::Rationals => {
            let n = loop {
                let v = rng.gen_range(-4i64..=4);
                if v != 0 {
                    break v;
                }
            };
            let d = rng.gen_range(1i64..=3);
            field.fraction(n, d).unwrap()
        }
        FieldSpec::PrimeField(p) => Coefficient::Prime {
            value: rng.gen_range(1..*p),
            modulus: *p,
        },
    }
}

/// A random nonzero homogeneous element of the given degree: a few distinct
/// module monomials `a^α e_i` with `d(a^α) + b_i = degree` and random nonzero
/// coefficients. Returns `None` when no monomial of that degree exists.
pub fn random_homogeneous<R: Rng>(
    rng: &mut R,
    module: &Arc<GradedFreeModule>,
    degree: u64,
    max_terms: usize,
) -> Option<ModuleElement> {
    let algebra = module.algebra();
    let mut pool: Vec<ModuleMonomial> = Vec::new();
    for (index, &shift) in module.shifts().iter().enumerate() {
        if shift > degree {
            continue;
        }
        for mono in monomials_of_degree(algebra.weights(), degree - shift) {
            pool.push(ModuleMonomial::new(mono, index));
        }
    }
    if pool.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=max_terms.min(pool.len()));
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let pick = rng.gen_range(0..pool.len());
        terms.push((nonzero_coefficient(rng, algebra.field()), pool.swap_remove(pick)));
    }
    let element = ModuleElement::from_terms(terms, module).unwrap();
    if element.is_zero() {
        None
    } else {
        Some(element)
    }
}

/// A corpus instance: a rank-1 or rank-2 module over one of the three algebra
/// families plus 1..=max_gens homogeneous generators of degree 1..=max_degree.
pub struct Instance {
    pub module: Arc<GradedFreeModule>,
    pub generators: Vec<ModuleElement>,
}

pub fn random_instance<R: Rng>(
    rng: &mut R,
    kind: AlgebraKind,
    field: FieldSpec,
    max_gens: usize,
    max_degree: u64,
) -> Instance {
    let algebra = Arc::new(algebra(kind, field));
    let rank = rng.gen_range(1..=2usize);
    let shifts: Vec<u64> = (0..rank).map(|_| rng.gen_range(0..=1u64)).collect();
    let module = GradedFreeModule::new(algebra, shifts, ModuleOrdering::Top).unwrap();
    let count = rng.gen_range(1..=max_gens);
    let mut generators = Vec::new();
    for _ in 0..count {
        let degree = rng.gen_range(1..=max_degree);
        if let Some(e) = random_homogeneous(rng, &module, degree, 3) {
            generators.push(e);
        }
    }
    if generators.is_empty() {
        let e = random_homogeneous(rng, &module, max_degree, 2).expect("degree slice nonempty");
        generators.push(e);
    }
    Instance { module, generators }
}
