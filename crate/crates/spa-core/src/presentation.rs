//! Minimization of a graded presentation `M = L₀/N`.
//!
//! A relation with a unit (nonzero constant) entry at component `i` lets the
//! basis vector `e_i` be eliminated: substitute it out of every other
//! relation and drop the component. The loop fires until no relation carries a
//! unit entry; the surviving basis vectors then map onto a minimal homogeneous
//! generating set of `M`.

use std::sync::Arc;

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::freemod::{GradedFreeModule, ModuleElement, ModuleOrdering};

/// A graded quotient `M = L₀/N`, with `N` spanned by homogeneous relations.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub module: Arc<GradedFreeModule>,
    pub relations: Vec<ModuleElement>,
}

impl Presentation {
    /// Validates homogeneity; zero relations are dropped.
    pub fn new(module: Arc<GradedFreeModule>, relations: Vec<ModuleElement>) -> Result<Self> {
        let mut kept = Vec::with_capacity(relations.len());
        for (l, rel) in relations.into_iter().enumerate() {
            module.check_element(&rel)?;
            if !rel.is_homogeneous(&module) {
                return Err(Error::HomogeneityError(format!("relation {} is not homogeneous", l + 1)));
            }
            if !rel.is_zero() {
                kept.push(rel);
            }
        }
        Ok(Presentation { module, relations: kept })
    }
}

/// One elimination step: relation `relation` (stable input position) had a
/// unit entry at `component`; each other relation `ℓ` was replaced by
/// `ξ_ℓ − (1/f_ij) f_iℓ ξ_j` with the logged multiplier.
#[derive(Debug, Clone)]
pub struct PivotRecord {
    pub relation: usize,
    pub component: usize,
    /// `(relation position, multiplier (1/f_ij)·f_iℓ)` for each substitution
    /// actually applied.
    pub substitutions: Vec<(usize, Polynomial)>,
    /// Relations that became zero and were dropped in this step.
    pub dropped: usize,
}

/// The minimized presentation `L₀′/N′` together with the audit trail.
#[derive(Debug, Clone)]
pub struct MinimizedPresentation {
    /// Surviving component indices of the original `L₀`, in original order.
    pub kept: Vec<usize>,
    /// `L₀′ = ⊕_{kept} A e_k`.
    pub module: Arc<GradedFreeModule>,
    /// Relations re-indexed into `L₀′`; no entry is a nonzero constant.
    pub relations: Vec<ModuleElement>,
    pub log: Vec<PivotRecord>,
}

/// Algorithm: repeatedly pick the first relation with a unit entry (lowest
/// relation position, then lowest component), eliminate, and re-run. Any pivot
/// order yields gradedly isomorphic results; this one is deterministic.
pub fn minimize(presentation: &Presentation) -> Result<MinimizedPresentation> {
    let module = &presentation.module;
    let algebra = module.algebra();
    for (l, rel) in presentation.relations.iter().enumerate() {
        if !rel.is_homogeneous(module) {
            return Err(Error::HomogeneityError(format!("relation {} is not homogeneous", l + 1)));
        }
    }
    // (stable position, element in original coordinates)
    let mut relations: Vec<(usize, ModuleElement)> = presentation
        .relations
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, rel)| !rel.is_zero())
        .collect();
    let mut removed = vec![false; module.rank()];
    let mut log = Vec::new();
    loop {
        let mut pivot = None;
        'search: for (pos, (_, rel)) in relations.iter().enumerate() {
            let comps = rel.components(module);
            for (i, entry) in comps.iter().enumerate() {
                debug_assert!(!(removed[i] && !entry.is_zero()));
                if entry.as_constant().is_some() {
                    pivot = Some((pos, i, entry.clone()));
                    break 'search;
                }
            }
        }
        let Some((pos, i, unit)) = pivot else { break };
        let (stable_j, xi_j) = relations.remove(pos);
        let unit_inv = unit.as_constant().expect("pivot entry is a unit").inv();
        let mut substitutions = Vec::new();
        let mut dropped = 0;
        let mut next = Vec::with_capacity(relations.len());
        for (stable_l, xi_l) in relations {
            let f_il = &xi_l.components(module)[i];
            if f_il.is_zero() {
                next.push((stable_l, xi_l));
                continue;
            }
            let multiplier = f_il.scale(&unit_inv);
            let replaced = xi_l.sub(&xi_j.mul_poly_left(&multiplier, module)?, module)?;
            debug_assert!(replaced.components(module)[i].is_zero());
            substitutions.push((stable_l, multiplier));
            if replaced.is_zero() {
                dropped += 1;
            } else {
                next.push((stable_l, replaced));
            }
        }
        relations = next;
        removed[i] = true;
        log.push(PivotRecord { relation: stable_j, component: i, substitutions, dropped });
    }
    let kept: Vec<usize> = (0..module.rank()).filter(|&i| !removed[i]).collect();
    let shifts: Vec<u64> = kept.iter().map(|&i| module.shifts()[i]).collect();
    let ordering = restrict_ordering(module.ordering(), &kept)?;
    let new_module = GradedFreeModule::new(algebra.clone(), shifts, ordering)?;
    let mut new_relations = Vec::with_capacity(relations.len());
    for (_, rel) in &relations {
        let comps = rel.components(module);
        let projected: Vec<Polynomial> = kept.iter().map(|&i| comps[i].clone()).collect();
        new_relations.push(ModuleElement::from_components(&projected, &new_module)?);
    }
    Ok(MinimizedPresentation { kept, module: new_module, relations: new_relations, log })
}

/// Restricts a module ordering to a subset of components.
fn restrict_ordering(ordering: &ModuleOrdering, kept: &[usize]) -> Result<ModuleOrdering> {
    match ordering {
        ModuleOrdering::Top => Ok(ModuleOrdering::Top),
        ModuleOrdering::Pot => Ok(ModuleOrdering::Pot),
        ModuleOrdering::Schreyer(data) => ModuleOrdering::schreyer(
            kept.iter().map(|&i| data.reference[i].clone()).collect(),
            data.parent.clone(),
        ),
    }
}
