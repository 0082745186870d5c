//! Syzygy computation.
//!
//! For a left Gröbner basis `G = {g_1, …, g_t}` the Schreyer generators
//!
//! ```text
//! s_ij = Σ_k f_k ε_k − (1/LC(a^{γ-α(i)} g_i)) a^{γ-α(i)} ε_i
//!                    + (1/LC(a^{γ-α(j)} g_j)) a^{γ-α(j)} ε_j
//! ```
//!
//! (with `S_ℓ(g_i, g_j) = Σ_k f_k g_k` the logged Gröbner representation)
//! form a left Gröbner basis of `Syz(G)` under the Schreyer ordering, with
//! `LM(s_ij) = a^{γ-α(j)} ε_j`. Generators of `Syz(U)` for the original input
//! are obtained by transporting the `s_ij` through `V` and adding the rows of
//! `D = U·V − E`.
//!
//! Conventions: generators are column vectors, syzygies are rows; `U` is m×t
//! and `V` is t×m.

use std::sync::Arc;

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::freemod::{GradedFreeModule, ModuleElement, ModuleMonomial, ModuleOrdering};
use crate::groebner::{GroebnerBasis, SpairTrace, TransitionMatrices};

/// Where a syzygy generator came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The Schreyer generator `s_ij` of a basis pair.
    Schreyer { i: usize, j: usize },
    /// A Schreyer generator transported through `V` (row index into the
    /// Schreyer list).
    Transported { row: usize },
    /// A row of the diagonal defect `D = U·V − E`.
    Diagonal { row: usize },
}

#[derive(Debug, Clone)]
pub struct SyzygyGenerator {
    pub element: ModuleElement,
    pub provenance: Provenance,
}

/// A generating set of a syzygy module together with the free module it lives
/// in.
#[derive(Debug, Clone)]
pub struct SyzygyBasis {
    pub module: Arc<GradedFreeModule>,
    pub generators: Vec<SyzygyGenerator>,
}

fn element_degree_or_zero(elem: &ModuleElement, module: &GradedFreeModule) -> u64 {
    elem.weighted_degree(module).unwrap_or(0)
}

/// The free module `⊕ A ε_k` over a reference sequence, with Schreyer
/// ordering and shifts `d_gr(ε_k) = d_gr(reference_k)`.
pub fn syzygy_module(
    reference: &[ModuleElement],
    parent: &Arc<GradedFreeModule>,
) -> Result<Arc<GradedFreeModule>> {
    let shifts = reference
        .iter()
        .map(|g| element_degree_or_zero(g, parent))
        .collect();
    let ordering = ModuleOrdering::schreyer(reference.to_vec(), parent.clone())?;
    GradedFreeModule::new(parent.algebra().clone(), shifts, ordering)
}

/// Looks up the trace of the pair `(i, j)`.
fn trace_for<'t>(traces: &'t [SpairTrace], i: usize, j: usize) -> Result<&'t SpairTrace> {
    traces
        .iter()
        .find(|t| (t.i, t.j) == (i, j) || (t.i, t.j) == (j, i))
        .ok_or(Error::MissingTrace { i, j })
}

/// Builds `s_ij` from a logged (or recomputed) set of reduction quotients.
fn schreyer_generator(
    gb: &GroebnerBasis,
    l1: &Arc<GradedFreeModule>,
    i: usize,
    j: usize,
    quotients: &[(usize, Polynomial)],
) -> Result<ModuleElement> {
    let module = &gb.module;
    let one = module.algebra().field().one();
    let (_, lm_i) = gb.elements[i].leading()?;
    let (_, lm_j) = gb.elements[j].leading()?;
    debug_assert_eq!(lm_i.index, lm_j.index);
    let gamma = lm_i.mono.lcm(&lm_j.mono);
    let mono_i = lm_i.mono.quotient_into(&gamma);
    let mono_j = lm_j.mono.quotient_into(&gamma);
    let ci = gb.elements[i].mul_mono_left(&one, &mono_i, module)?.leading()?.0.inv();
    let cj = gb.elements[j].mul_mono_left(&one, &mono_j, module)?.leading()?.0.inv();
    let mut terms = Vec::new();
    for (k, q) in quotients {
        for (c, m) in q.terms() {
            terms.push((c.clone(), ModuleMonomial::new(m.clone(), *k)));
        }
    }
    terms.push((ci.neg(), ModuleMonomial::new(mono_i, i)));
    terms.push((cj, ModuleMonomial::new(mono_j.clone(), j)));
    let element = ModuleElement::from_terms(terms, l1)?;
    debug_assert_eq!(
        element.leading()?.1,
        &ModuleMonomial::new(mono_j, j),
        "Schreyer leading monomial law"
    );
    Ok(element)
}

fn schreyer_from_traces(
    gb: &GroebnerBasis,
    lookup: impl Fn(usize, usize) -> Result<Vec<(usize, Polynomial)>>,
) -> Result<SyzygyBasis> {
    let l1 = syzygy_module(&gb.elements, &gb.module)?;
    let mut generators = Vec::new();
    for j in 1..gb.elements.len() {
        for i in 0..j {
            let lm_i = gb.elements[i].leading()?.1;
            let lm_j = gb.elements[j].leading()?.1;
            if lm_i.index != lm_j.index {
                continue;
            }
            let quotients = lookup(i, j)?;
            let element = schreyer_generator(gb, &l1, i, j, &quotients)?;
            generators.push(SyzygyGenerator { element, provenance: Provenance::Schreyer { i, j } });
        }
    }
    Ok(SyzygyBasis { module: l1, generators })
}

/// Schreyer generators of `Syz(G)` from the reduction traces logged during
/// the basis computation.
pub fn schreyer_syzygies(gb: &GroebnerBasis, matrices: &TransitionMatrices) -> Result<SyzygyBasis> {
    schreyer_from_traces(gb, |i, j| Ok(trace_for(&matrices.traces, i, j)?.quotients.clone()))
}

/// Fallback for a bare basis: recomputes each Gröbner representation by
/// dividing the S-polynomial by `G`. Requires `G` to be a full left Gröbner
/// basis.
pub fn schreyer_syzygies_recomputed(gb: &GroebnerBasis) -> Result<SyzygyBasis> {
    schreyer_from_traces(gb, |i, j| {
        let s = crate::freemod::s_polynomial(&gb.elements[i], &gb.elements[j], &gb.module)?;
        let division = crate::freemod::divide(&s, &gb.elements, &gb.module)?;
        if !division.remainder.is_zero() {
            return Err(Error::MissingTrace { i, j });
        }
        Ok(division
            .quotients
            .into_iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .collect())
    })
}

/// Left product of polynomial row `row` (1×t) with matrix `m` (t×k): entry
/// `l` is `Σ_k row_k · m[k][l]`.
fn row_times_matrix(
    row: &[Polynomial],
    matrix: &[Vec<Polynomial>],
    width: usize,
    algebra: &crate::algebra::SolvableAlgebra,
) -> Result<Vec<Polynomial>> {
    if row.len() != matrix.len() {
        return Err(Error::ShapeError(format!(
            "row of length {} against matrix with {} rows",
            row.len(),
            matrix.len()
        )));
    }
    let mut out = vec![Polynomial::zero(); width];
    for (k, entry) in row.iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        if matrix[k].len() != width {
            return Err(Error::ShapeError("ragged matrix".into()));
        }
        for (l, target) in out.iter_mut().enumerate() {
            *target = target.add(&entry.mul(&matrix[k][l], algebra)?, algebra)?;
        }
    }
    Ok(out)
}

fn row_of_element(elem: &ModuleElement, module: &GradedFreeModule) -> Vec<Polynomial> {
    elem.components(module)
}

fn element_of_row(row: &[Polynomial], module: &Arc<GradedFreeModule>) -> Result<ModuleElement> {
    ModuleElement::from_components(row, module)
}

/// Generators of `Syz(U)` for the input generators of a basis computation:
/// the transported Schreyer rows `S_i · V` and the diagonal-defect rows of
/// `D = U·V − E`. Zero rows are dropped.
///
/// The result lives in `⊕ A ω_i` over the inputs, with shifts `d_gr(ξ_i)` and
/// the Schreyer ordering induced by the inputs; the inputs must therefore be
/// nonzero.
pub fn syzygies_of_generators(
    inputs: &[ModuleElement],
    gb: &GroebnerBasis,
    matrices: &TransitionMatrices,
) -> Result<SyzygyBasis> {
    let target = syzygy_module(inputs, &gb.module)?;
    syzygies_of_generators_in(inputs, gb, matrices, target)
}

/// As [`syzygies_of_generators`], but into a caller-supplied module (the
/// resolution pipeline shares the module with the next step).
pub fn syzygies_of_generators_in(
    inputs: &[ModuleElement],
    gb: &GroebnerBasis,
    matrices: &TransitionMatrices,
    target: Arc<GradedFreeModule>,
) -> Result<SyzygyBasis> {
    let m = inputs.len();
    let t = gb.elements.len();
    let algebra = gb.module.algebra();
    if matrices.u.len() != m || matrices.v.len() != t {
        return Err(Error::ShapeError(format!(
            "expected U {m}×{t} and V {t}×{m}; got U with {} rows and V with {} rows",
            matrices.u.len(),
            matrices.v.len()
        )));
    }
    let schreyer = schreyer_syzygies(gb, matrices)?;
    let mut generators = Vec::new();
    for (row_index, generator) in schreyer.generators.iter().enumerate() {
        let row = row_of_element(&generator.element, &schreyer.module);
        let transported = row_times_matrix(&row, &matrices.v, m, algebra)?;
        let element = element_of_row(&transported, &target)?;
        if !element.is_zero() {
            generators.push(SyzygyGenerator {
                element,
                provenance: Provenance::Transported { row: row_index },
            });
        }
    }
    for (row_index, u_row) in matrices.u.iter().enumerate() {
        let mut d_row = row_times_matrix(u_row, &matrices.v, m, algebra)?;
        let one = algebra.field().one();
        let arity = algebra.generator_count();
        d_row[row_index] =
            d_row[row_index].sub(&Polynomial::constant(one, arity), algebra)?;
        let element = element_of_row(&d_row, &target)?;
        if !element.is_zero() {
            generators.push(SyzygyGenerator {
                element,
                provenance: Provenance::Diagonal { row: row_index },
            });
        }
    }
    #[cfg(debug_assertions)]
    for generator in &generators {
        let row = row_of_element(&generator.element, &target);
        let pairing = crate::freemod::combine(&row, inputs, &gb.module)?;
        debug_assert!(pairing.is_zero(), "syzygy row must annihilate the input");
    }
    Ok(SyzygyBasis { module: target, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use crate::algebras::commutative_ring;
    use crate::freemod::{combine, ModuleMonomial};
    use crate::groebner::buchberger;
    use crate::scalar::{Coefficient, FieldSpec};

    fn qq(n: i64) -> Coefficient {
        FieldSpec::Rationals.integer(n)
    }

    fn rank1_kxy() -> Arc<GradedFreeModule> {
        let algebra = Arc::new(commutative_ring(&["x", "y"], FieldSpec::Rationals).unwrap());
        GradedFreeModule::new(algebra, vec![0], ModuleOrdering::Top).unwrap()
    }

    fn elem(terms: &[(i64, &[u32], usize)], l: &GradedFreeModule) -> ModuleElement {
        ModuleElement::from_terms(
            terms
                .iter()
                .map(|&(n, e, i)| (qq(n), ModuleMonomial::new(Monomial::new(e.to_vec()), i)))
                .collect(),
            l,
        )
        .unwrap()
    }

    #[test]
    fn koszul_pair_has_one_schreyer_generator() {
        let l = rank1_kxy();
        let xe = elem(&[(1, &[1, 0], 0)], &l);
        let ye = elem(&[(1, &[0, 1], 0)], &l);
        let (gb, matrices) = buchberger(&[xe, ye], &l).unwrap();
        let syzygies = schreyer_syzygies(&gb, &matrices).unwrap();
        assert_eq!(syzygies.generators.len(), 1);
        let s12 = &syzygies.generators[0];
        assert_eq!(s12.provenance, Provenance::Schreyer { i: 0, j: 1 });
        // The defining formula gives -y ε_1 + x ε_2; its Schreyer leading
        // monomial is x ε_2 = a^{γ-α(2)} ε_2.
        let expected = elem(&[(-1, &[0, 1], 0), (1, &[1, 0], 1)], &syzygies.module);
        assert_eq!(s12.element, expected);
        let (_, lm) = s12.element.leading().unwrap();
        assert_eq!(lm, &ModuleMonomial::new(Monomial::new(vec![1, 0]), 1));
        // Exact annihilation of the basis.
        let row = s12.element.components(&syzygies.module);
        assert!(combine(&row, &gb.elements, &l).unwrap().is_zero());
    }

    #[test]
    fn single_element_basis_has_no_syzygies() {
        let l = rank1_kxy();
        let xe = elem(&[(1, &[1, 0], 0)], &l);
        let (gb, matrices) = buchberger(&[xe], &l).unwrap();
        assert!(schreyer_syzygies(&gb, &matrices).unwrap().generators.is_empty());
    }

    #[test]
    fn distinct_components_contribute_nothing() {
        let algebra = Arc::new(commutative_ring(&["x", "y"], FieldSpec::Rationals).unwrap());
        let l = GradedFreeModule::new(algebra, vec![0, 0], ModuleOrdering::Top).unwrap();
        let a = elem(&[(1, &[1, 0], 0)], &l);
        let b = elem(&[(1, &[0, 1], 1)], &l);
        let (gb, matrices) = buchberger(&[a, b], &l).unwrap();
        assert!(schreyer_syzygies(&gb, &matrices).unwrap().generators.is_empty());
    }

    #[test]
    fn recomputed_traces_agree_with_logged_ones() {
        let l = rank1_kxy();
        let u1 = elem(&[(1, &[2, 0], 0)], &l);
        let u2 = elem(&[(1, &[1, 1], 0), (1, &[0, 2], 0)], &l);
        let (gb, matrices) = buchberger(&[u1, u2], &l).unwrap();
        let logged = schreyer_syzygies(&gb, &matrices).unwrap();
        let recomputed = schreyer_syzygies_recomputed(&gb).unwrap();
        assert_eq!(logged.generators.len(), recomputed.generators.len());
        for generator in logged.generators.iter().chain(&recomputed.generators) {
            let row = generator.element.components(&logged.module);
            assert!(combine(&row, &gb.elements, &l).unwrap().is_zero());
        }
    }

    #[test]
    fn generator_syzygies_of_the_koszul_pair() {
        let l = rank1_kxy();
        let xe = elem(&[(1, &[1, 0], 0)], &l);
        let ye = elem(&[(1, &[0, 1], 0)], &l);
        let inputs = vec![xe, ye];
        let (gb, matrices) = buchberger(&inputs, &l).unwrap();
        let syzygies = syzygies_of_generators(&inputs, &gb, &matrices).unwrap();
        // Identity transition: Schreyer generators only, no diagonal rows.
        assert_eq!(syzygies.generators.len(), 1);
        assert_eq!(syzygies.generators[0].provenance, Provenance::Transported { row: 0 });
        let expected = elem(&[(-1, &[0, 1], 0), (1, &[1, 0], 1)], &syzygies.module);
        assert_eq!(syzygies.generators[0].element, expected);
    }

    #[test]
    fn duplicate_input_yields_a_diagonal_witness() {
        let l = rank1_kxy();
        let xi = elem(&[(1, &[1, 1], 0), (2, &[0, 2], 0)], &l);
        let inputs = vec![xi.clone(), xi];
        let (gb, matrices) = buchberger(&inputs, &l).unwrap();
        let syzygies = syzygies_of_generators(&inputs, &gb, &matrices).unwrap();
        let diagonal: Vec<_> = syzygies
            .generators
            .iter()
            .filter(|g| matches!(g.provenance, Provenance::Diagonal { .. }))
            .collect();
        assert_eq!(diagonal.len(), 1);
        let expected = elem(&[(1, &[0, 0], 0), (-1, &[0, 0], 1)], &syzygies.module);
        assert_eq!(diagonal[0].element, expected);
        // Every row annihilates the input exactly.
        for generator in &syzygies.generators {
            let row = generator.element.components(&syzygies.module);
            assert!(combine(&row, &inputs, &l).unwrap().is_zero());
        }
    }
}
