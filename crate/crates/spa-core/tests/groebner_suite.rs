//! Randomized invariants of the basis engines, plus equivalence with an
//! independent commutative Buchberger oracle.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spa_core::groebner::{buchberger, contains, is_groebner, min_gens_gb, truncated_buchberger};
use spa_core::freemod::{combine, divide};
use spa_core::{FieldSpec, GradedFreeModule, ModuleElement, ModuleOrdering, Monomial, Polynomial};
use spa_testkit::commutative::{reduced_lm_set, CPoly};
use spa_testkit::gen::{self, ALGEBRA_KINDS};
use spa_testkit::monomials_of_degree;

fn corpus(seed: u64, count: usize) -> Vec<gen::Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let kind = ALGEBRA_KINDS[k % ALGEBRA_KINDS.len()];
            let field = if k % 5 == 0 { FieldSpec::Rationals } else { FieldSpec::prime_field(32003).unwrap() };
            gen::random_instance(&mut rng, kind, field, 3, 4)
        })
        .collect()
}

#[test]
fn buchberger_outputs_pass_the_criterion() {
    for instance in corpus(11, 24) {
        let (basis, matrices) = buchberger(&instance.generators, &instance.module).unwrap();
        assert!(is_groebner(&basis.elements, &instance.module).unwrap());
        assert!(basis.homogeneous);
        // Inputs reduce to zero and the transition identities hold exactly.
        for (row, xi) in matrices.u.iter().zip(&instance.generators) {
            let division = divide(xi, &basis.elements, &instance.module).unwrap();
            assert!(division.remainder.is_zero());
            assert_eq!(&combine(row, &basis.elements, &instance.module).unwrap(), xi);
        }
        for (row, g) in matrices.v.iter().zip(&basis.elements) {
            assert_eq!(&combine(row, &instance.generators, &instance.module).unwrap(), g);
        }
        // The interreduced form generates the same leading-monomial data.
        assert!(is_groebner(&basis.reduced, &instance.module).unwrap());
    }
}

#[test]
fn truncation_agrees_with_full_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for instance in corpus(17, 18) {
        let module = &instance.module;
        let (full, _) = buchberger(&instance.generators, module).unwrap();
        let max_degree = instance
            .generators
            .iter()
            .map(|g| g.weighted_degree(module).unwrap())
            .max()
            .unwrap();
        for n0 in 1..=(max_degree + 2) {
            let truncated = truncated_buchberger(&instance.generators, module, n0).unwrap();
            // Degrees non-decreasing in the produced order.
            let degrees: Vec<u64> = truncated
                .elements
                .iter()
                .map(|g| g.weighted_degree(module).unwrap())
                .collect();
            assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
            assert!(degrees.iter().all(|&d| d <= n0));
            // Membership decisions agree for homogeneous elements of degree ≤ n0.
            for degree in 1..=n0 {
                for _ in 0..3 {
                    let Some(probe) = probe_element(&mut rng, module, &instance.generators, degree)
                    else {
                        continue;
                    };
                    let full_answer = divide(&probe, &full.elements, module).unwrap().remainder.is_zero();
                    let truncated_answer = if truncated.elements.is_empty() {
                        false
                    } else {
                        divide(&probe, &truncated.elements, module).unwrap().remainder.is_zero()
                    };
                    assert_eq!(full_answer, truncated_answer);
                }
            }
        }
    }
}

/// Either a random homogeneous element or a random homogeneous combination of
/// the generators (a guaranteed member), so both answers occur.
fn probe_element<R: Rng>(
    rng: &mut R,
    module: &Arc<GradedFreeModule>,
    generators: &[ModuleElement],
    degree: u64,
) -> Option<ModuleElement> {
    if rng.gen_bool(0.5) {
        gen::random_homogeneous(rng, module, degree, 2).filter(|e| !e.is_zero())
    } else {
        let algebra = module.algebra();
        let mut acc = ModuleElement::zero();
        for g in generators {
            let gd = g.weighted_degree(module).unwrap();
            if gd > degree {
                continue;
            }
            let slice = monomials_of_degree(algebra.weights(), degree - gd);
            if slice.is_empty() {
                continue;
            }
            let mono = slice[rng.gen_range(0..slice.len())].clone();
            let coeff = gen::nonzero_coefficient(rng, algebra.field());
            let multiplied = g
                .mul_poly_left(&Polynomial::monomial(coeff, mono), module)
                .unwrap();
            acc = acc.add(&multiplied, module).unwrap();
        }
        if acc.is_zero() {
            None
        } else {
            Some(acc)
        }
    }
}

#[test]
fn minimal_generators_are_minimal() {
    for instance in corpus(31, 18) {
        let module = &instance.module;
        let minimal = min_gens_gb(&instance.generators, module, false).unwrap();
        let selected: Vec<ModuleElement> =
            minimal.selected.iter().map(|&l| instance.generators[l].clone()).collect();
        // (a) every input is generated by the selection;
        for xi in &instance.generators {
            assert!(contains(&selected, xi, module).unwrap());
        }
        // (b) no selected element is generated by the others.
        for k in 0..selected.len() {
            let others: Vec<ModuleElement> = selected
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, e)| e.clone())
                .collect();
            assert!(!contains(&others, &selected[k], module).unwrap());
        }
        // The returned basis is a Gröbner basis containing the selection's span.
        assert!(is_groebner(&minimal.basis.elements, module).unwrap());
        let degrees: Vec<u64> = minimal
            .basis
            .elements
            .iter()
            .map(|g| g.weighted_degree(module).unwrap())
            .collect();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn early_stop_matches_the_full_selection() {
    for instance in corpus(47, 12) {
        let module = &instance.module;
        let full = min_gens_gb(&instance.generators, module, false).unwrap();
        let stopped = min_gens_gb(&instance.generators, module, true).unwrap();
        assert_eq!(full.selected, stopped.selected);
    }
}

#[test]
fn monomial_selection_matches_divisibility_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let algebra = Arc::new(
        spa_core::algebras::commutative_ring(&["x", "y", "z"], FieldSpec::Rationals).unwrap(),
    );
    let module = GradedFreeModule::new(algebra.clone(), vec![0], ModuleOrdering::Top).unwrap();
    for _ in 0..40 {
        let count = rng.gen_range(1..=5);
        let mut gens_list = Vec::new();
        for _ in 0..count {
            let d = rng.gen_range(1..=4u64);
            let slice = monomials_of_degree(&[1, 1, 1], d);
            let mono = slice[rng.gen_range(0..slice.len())].clone();
            gens_list.push(
                ModuleElement::from_terms(
                    vec![(
                        FieldSpec::Rationals.integer(1),
                        spa_core::ModuleMonomial::new(mono, 0),
                    )],
                    &module,
                )
                .unwrap(),
            );
        }
        let minimal = min_gens_gb(&gens_list, &module, false).unwrap();
        // Oracle: process by non-decreasing degree (stable); keep a monomial
        // iff no predecessor divides it.
        let mut order: Vec<usize> = (0..gens_list.len()).collect();
        order.sort_by_key(|&l| (gens_list[l].weighted_degree(&module).unwrap(), l));
        let mut kept: Vec<usize> = Vec::new();
        for &l in &order {
            let m = &gens_list[l].leading().unwrap().1.mono;
            if !kept.iter().any(|&k| gens_list[k].leading().unwrap().1.mono.divides(m)) {
                kept.push(l);
            }
        }
        assert_eq!(minimal.selected.len(), kept.len());
        assert_eq!(minimal.selected, kept);
    }
}

#[test]
fn commutative_oracle_equivalence() {
    // All ideals generated by ≤3 homogeneous polynomials of degree ≤3 in ≤3
    // variables, sampled deterministically.
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for vars in 2..=3usize {
        let names: Vec<&str> = ["x", "y", "z"][..vars].to_vec();
        let algebra = Arc::new(
            spa_core::algebras::commutative_ring(&names, FieldSpec::Rationals).unwrap(),
        );
        let module = GradedFreeModule::new(algebra.clone(), vec![0], ModuleOrdering::Top).unwrap();
        let precedence: Vec<usize> = (0..vars).collect();
        for _ in 0..25 {
            let count = rng.gen_range(1..=3);
            let mut ours = Vec::new();
            let mut oracle = Vec::new();
            for _ in 0..count {
                let degree = rng.gen_range(1..=3u64);
                let slice = monomials_of_degree(&vec![1; vars], degree);
                let terms = rng.gen_range(1..=3usize);
                let mut poly_terms = Vec::new();
                for _ in 0..terms {
                    let mono = slice[rng.gen_range(0..slice.len())].clone();
                    let coeff = gen::nonzero_coefficient(&mut rng, &FieldSpec::Rationals);
                    poly_terms.push((coeff, mono));
                }
                let p = Polynomial::from_terms(poly_terms.clone(), &algebra).unwrap();
                if p.is_zero() {
                    continue;
                }
                oracle.push(CPoly::from_terms(
                    poly_terms.into_iter().map(|(c, m)| (c, m.exponents().to_vec())).collect(),
                ));
                ours.push(
                    ModuleElement::from_terms(
                        p.terms()
                            .iter()
                            .map(|(c, m)| (c.clone(), spa_core::ModuleMonomial::new(m.clone(), 0)))
                            .collect(),
                        &module,
                    )
                    .unwrap(),
                );
            }
            if ours.is_empty() {
                continue;
            }
            let (basis, _) = buchberger(&ours, &module).unwrap();
            let mut our_lms: Vec<Vec<u32>> = basis
                .reduced
                .iter()
                .map(|g| g.leading().unwrap().1.mono.exponents().to_vec())
                .collect();
            our_lms.sort();
            let oracle_lms = reduced_lm_set(&oracle, &precedence);
            assert_eq!(our_lms, oracle_lms);
        }
    }
}

#[test]
fn homogeneity_is_preserved() {
    for instance in corpus(59, 12) {
        let (basis, _) = buchberger(&instance.generators, &instance.module).unwrap();
        for g in &basis.elements {
            assert!(g.is_homogeneous(&instance.module));
        }
    }
}

#[test]
fn truncation_below_the_smallest_degree_is_empty() {
    let algebra = Arc::new(
        spa_core::algebras::commutative_ring(&["x", "y"], FieldSpec::Rationals).unwrap(),
    );
    let module = GradedFreeModule::new(algebra.clone(), vec![0], ModuleOrdering::Top).unwrap();
    let x2 = ModuleElement::from_terms(
        vec![(FieldSpec::Rationals.integer(1), spa_core::ModuleMonomial::new(Monomial::new(vec![2, 0]), 0))],
        &module,
    )
    .unwrap();
    let basis = truncated_buchberger(&[x2], &module, 1).unwrap();
    assert!(basis.elements.is_empty());
}
