//! Randomized syzygy invariants: the Schreyer leading-monomial law, exact
//! annihilation, the Gröbner property of the Schreyer set, and completeness
//! against a brute-force linear-algebra search on small commutative
//! instances.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spa_core::freemod::{combine, divide};
use spa_core::groebner::{buchberger, is_groebner};
use spa_core::syzygy::{schreyer_syzygies, syzygies_of_generators};
use spa_core::{
    Coefficient, FieldSpec, GradedFreeModule, ModuleElement, ModuleMonomial, ModuleOrdering,
    Polynomial,
};
use spa_testkit::gen::{self, ALGEBRA_KINDS};
use spa_testkit::linalg;
use spa_testkit::monomials_of_degree;

fn corpus(seed: u64, count: usize) -> Vec<gen::Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let kind = ALGEBRA_KINDS[k % ALGEBRA_KINDS.len()];
            let field = if k % 4 == 0 { FieldSpec::Rationals } else { FieldSpec::prime_field(32003).unwrap() };
            gen::random_instance(&mut rng, kind, field, 3, 3)
        })
        .collect()
}

#[test]
fn schreyer_generators_satisfy_the_leading_monomial_law() {
    for instance in corpus(71, 16) {
        let (gb, matrices) = buchberger(&instance.generators, &instance.module).unwrap();
        let syzygies = schreyer_syzygies(&gb, &matrices).unwrap();
        for generator in &syzygies.generators {
            let spa_core::Provenance::Schreyer { i, j } = generator.provenance else {
                panic!("unexpected provenance")
            };
            let lm_i = gb.elements[i].leading().unwrap().1.clone();
            let lm_j = gb.elements[j].leading().unwrap().1.clone();
            let gamma = lm_i.mono.lcm(&lm_j.mono);
            let expected = ModuleMonomial::new(lm_j.mono.quotient_into(&gamma), j);
            assert_eq!(generator.element.leading().unwrap().1, &expected);
            // Exact annihilation of the basis column.
            let row = generator.element.components(&syzygies.module);
            assert!(combine(&row, &gb.elements, &instance.module).unwrap().is_zero());
        }
        // The Schreyer set is a Gröbner basis of Syz(G) in L_1.
        let elements: Vec<ModuleElement> =
            syzygies.generators.iter().map(|g| g.element.clone()).collect();
        if !elements.is_empty() {
            assert!(is_groebner(&elements, &syzygies.module).unwrap());
        }
    }
}

#[test]
fn generator_syzygies_annihilate_exactly() {
    for instance in corpus(83, 16) {
        let (gb, matrices) = buchberger(&instance.generators, &instance.module).unwrap();
        let syzygies = syzygies_of_generators(&instance.generators, &gb, &matrices).unwrap();
        for generator in &syzygies.generators {
            let row = generator.element.components(&syzygies.module);
            let image = combine(&row, &instance.generators, &instance.module).unwrap();
            assert!(image.is_zero(), "row must annihilate the input exactly");
        }
    }
}

/// Brute force: homogeneous syzygies of degree ≤ bound found by solving
/// linear systems over the graded pieces reduce to zero against the Schreyer
/// basis of Syz(G).
#[test]
fn brute_force_syzygies_reduce_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let algebra = Arc::new(
        spa_core::algebras::commutative_ring(&["x", "y"], FieldSpec::Rationals).unwrap(),
    );
    let module = GradedFreeModule::new(algebra.clone(), vec![0], ModuleOrdering::Top).unwrap();
    for _ in 0..6 {
        let mut generators = Vec::new();
        for _ in 0..2 {
            if let Some(e) = gen::random_homogeneous(&mut rng, &module, 2, 2) {
                generators.push(e);
            }
        }
        if generators.is_empty() {
            continue;
        }
        let (gb, matrices) = buchberger(&generators, &module).unwrap();
        let syzygies = schreyer_syzygies(&gb, &matrices).unwrap();
        let schreyer_elements: Vec<ModuleElement> =
            syzygies.generators.iter().map(|g| g.element.clone()).collect();
        let degrees: Vec<u64> =
            gb.elements.iter().map(|g| g.weighted_degree(&module).unwrap()).collect();
        let bound = degrees.iter().max().unwrap() + 3;
        for degree in 1..=bound {
            for row in brute_force_syzygies(&gb.elements, &degrees, degree, &algebra) {
                let elem = ModuleElement::from_components(&row, &syzygies.module).unwrap();
                if elem.is_zero() {
                    continue;
                }
                if schreyer_elements.is_empty() {
                    panic!("found a syzygy but the Schreyer set is empty");
                }
                let division = divide(&elem, &schreyer_elements, &syzygies.module).unwrap();
                assert!(division.remainder.is_zero(), "brute-force syzygy escapes the Schreyer basis");
            }
        }
    }
}

/// Solves `Σ h_k g_k = 0` for homogeneous `h_k` of degree `degree − d(g_k)`
/// by exact linear algebra over the degree-`degree` piece; commutative
/// rank-one case. Returns the coefficient rows.
fn brute_force_syzygies(
    basis: &[ModuleElement],
    degrees: &[u64],
    degree: u64,
    algebra: &Arc<spa_core::SolvableAlgebra>,
) -> Vec<Vec<Polynomial>> {
    let weights = algebra.weights();
    // Unknown blocks: for each k, the monomial basis of A_{degree - d_k}.
    let mut blocks: Vec<Vec<spa_core::Monomial>> = Vec::new();
    for &d in degrees {
        if d > degree {
            blocks.push(Vec::new());
        } else {
            blocks.push(monomials_of_degree(weights, degree - d));
        }
    }
    let width: usize = blocks.iter().map(|b| b.len()).sum();
    if width == 0 {
        return Vec::new();
    }
    // Equations: coefficients of each monomial of the target degree piece.
    let target = monomials_of_degree(weights, degree);
    let index: std::collections::BTreeMap<Vec<u32>, usize> = target
        .iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    let field = algebra.field();
    let mut matrix = vec![vec![field.zero(); width]; target.len()];
    let mut col = 0;
    for (k, block) in blocks.iter().enumerate() {
        for mono in block {
            // Commutative product: exponent addition against each basis term.
            for (c, m) in basis[k].terms() {
                let prod = mono.mul(&m.mono);
                let row = index[&prod.exponents().to_vec()];
                matrix[row][col] = matrix[row][col].checked_add(c).unwrap();
            }
            col += 1;
        }
    }
    let kernel = linalg::nullspace(&matrix, width, field);
    let mut rows = Vec::new();
    for vector in kernel {
        let mut row: Vec<Polynomial> = Vec::with_capacity(basis.len());
        let mut offset = 0;
        for block in &blocks {
            let mut terms: Vec<(Coefficient, spa_core::Monomial)> = Vec::new();
            for (slot, mono) in block.iter().enumerate() {
                let c = vector[offset + slot].clone();
                if !c.is_zero() {
                    terms.push((c, mono.clone()));
                }
            }
            offset += block.len();
            row.push(Polynomial::from_terms(terms, algebra).unwrap());
        }
        rows.push(row);
    }
    rows
}
