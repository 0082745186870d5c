//! Minimal graded free resolutions.
//!
//! The pipeline for `M = L₀/N`:
//!
//! 1. minimize the presentation (unit-entry elimination), so the images of the
//!    surviving basis vectors minimally generate `M`;
//! 2. run the minimizing Gröbner engine on the relations: the selected subset
//!    becomes the matrix of `φ_1`, the basis and transition data feed step 3;
//! 3. assemble generators of the syzygy module from the Schreyer rows and the
//!    diagonal defect;
//! 4. repeat on the syzygy generators until they vanish.
//!
//! Minimality is automatic from step 2 onward: syzygies of a minimal
//! generating set have no unit entries, so every differential matrix has
//! entries of positive degree. The length never exceeds the number of algebra
//! generators; running past that bound signals an internal bug, not an input
//! problem.

use std::sync::Arc;

use crate::algebra::Polynomial;
use crate::error::{Error, Result, ValidationReport};
use crate::freemod::{combine, GradedFreeModule, ModuleElement};
use crate::groebner::{buchberger, contains, min_gens_gb};
use crate::presentation::{minimize, MinimizedPresentation, Presentation};
use crate::syzygy::{syzygies_of_generators, syzygies_of_generators_in, syzygy_module};

/// One step of the resolution: the module `L_i` and, for `i ≥ 1`, the matrix
/// of `φ_i: L_i → L_{i-1}` (rows indexed by `L_{i-1}`, columns by `L_i`; the
/// columns are the chosen minimal generators).
#[derive(Debug, Clone)]
pub struct ResolutionStep {
    pub module: Arc<GradedFreeModule>,
    pub matrix: Vec<Vec<Polynomial>>,
}

/// A minimal graded free resolution `0 → L_d → … → L_0 → M → 0`.
#[derive(Debug, Clone)]
pub struct Resolution {
    /// The minimized presentation of `M` the resolution starts from.
    pub presentation: MinimizedPresentation,
    /// `steps[0]` is `L_0` (empty matrix); `steps[i]` carries `φ_i`.
    pub steps: Vec<ResolutionStep>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }
}

/// Betti data: per homological index the rank and the sorted shift multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiRow {
    pub rank: usize,
    pub shifts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub rows: Vec<BettiRow>,
}

/// Columns of a matrix interpreted as elements of the row module.
fn matrix_columns(
    matrix: &[Vec<Polynomial>],
    row_module: &Arc<GradedFreeModule>,
) -> Result<Vec<ModuleElement>> {
    let rows = matrix.len();
    if rows != row_module.rank() {
        return Err(Error::ShapeError(format!(
            "matrix with {rows} rows against a rank-{} module",
            row_module.rank()
        )));
    }
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut out = Vec::with_capacity(cols);
    for c in 0..cols {
        let column: Vec<Polynomial> = matrix
            .iter()
            .map(|row| row.get(c).cloned().unwrap_or_else(Polynomial::zero))
            .collect();
        out.push(ModuleElement::from_components(&column, row_module)?);
    }
    Ok(out)
}

/// Writes elements of a rank-s module as the columns of an s×k matrix.
fn columns_to_matrix(
    columns: &[ModuleElement],
    module: &GradedFreeModule,
) -> Vec<Vec<Polynomial>> {
    let mut matrix = vec![vec![Polynomial::zero(); columns.len()]; module.rank()];
    for (c, elem) in columns.iter().enumerate() {
        for (r, poly) in elem.components(module).into_iter().enumerate() {
            matrix[r][c] = poly;
        }
    }
    matrix
}

/// Applies the map with the given matrix to an element of the column module.
fn apply_map(
    matrix: &[Vec<Polynomial>],
    elem: &ModuleElement,
    column_module: &GradedFreeModule,
    row_module: &Arc<GradedFreeModule>,
) -> Result<ModuleElement> {
    let columns = matrix_columns(matrix, row_module)?;
    let row = elem.components(column_module);
    combine(&row, &columns, row_module)
}

/// Builds the minimal graded free resolution of a graded presentation.
pub fn minimal_free_resolution(presentation: &Presentation) -> Result<Resolution> {
    let algebra = presentation.module.algebra().clone();
    let minimized = minimize(presentation)?;
    let mut steps = vec![ResolutionStep { module: minimized.module.clone(), matrix: Vec::new() }];
    let mut current_module = minimized.module.clone();
    let mut current_gens: Vec<ModuleElement> =
        minimized.relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    let bound = algebra.generator_count();
    while !current_gens.is_empty() {
        if steps.len() > bound {
            return Err(Error::IterationOverrun);
        }
        let minimal = min_gens_gb(&current_gens, &current_module, false)?;
        let chosen: Vec<ModuleElement> =
            minimal.selected.iter().map(|&l| current_gens[l].clone()).collect();
        let matrix = columns_to_matrix(&chosen, &current_module);
        let next_module = syzygy_module(&chosen, &current_module)?;
        steps.push(ResolutionStep { module: next_module.clone(), matrix });
        let syzygies = syzygies_of_generators_in(
            &chosen,
            &minimal.basis,
            &minimal.matrices,
            next_module.clone(),
        )?;
        current_gens = syzygies
            .generators
            .into_iter()
            .map(|g| g.element)
            .filter(|e| !e.is_zero())
            .collect();
        current_module = next_module;
    }
    Ok(Resolution { presentation: minimized, steps })
}

/// Ranks and sorted shift multisets of the resolution's modules.
pub fn betti(resolution: &Resolution) -> BettiTable {
    let rows = resolution
        .steps
        .iter()
        .map(|step| {
            let mut shifts = step.module.shifts().to_vec();
            shifts.sort_unstable();
            BettiRow { rank: step.module.rank(), shifts }
        })
        .collect();
    BettiTable { rows }
}

/// Independent checks of a resolution:
///
/// - shape, homogeneity and degree-0 bookkeeping of every matrix entry;
/// - graded minimality (no nonzero constant entries);
/// - `φ_i ∘ φ_{i+1} = 0` exactly;
/// - the length bound;
/// - kernel coverage: the relations and the columns of `φ_1` span the same
///   submodule, every Schreyer syzygy of the step-i columns reduces to zero
///   against the step-(i+1) columns, and the last columns have no syzygies.
pub fn verify_resolution(resolution: &Resolution) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    let steps = &resolution.steps;
    if steps.is_empty() {
        report.fail("resolution has no modules");
        return Ok(report);
    }
    let algebra = steps[0].module.algebra().clone();
    if resolution.length() > algebra.generator_count() {
        report.fail(format!(
            "length {} exceeds the bound {}",
            resolution.length(),
            algebra.generator_count()
        ));
    }
    // Entry-level checks. Broken shapes abort the deeper checks.
    let mut shapes_ok = true;
    for i in 1..steps.len() {
        let (prev, step) = (&steps[i - 1], &steps[i]);
        if step.matrix.len() != prev.module.rank() {
            report.fail(format!("map {i}: expected {} rows", prev.module.rank()));
            shapes_ok = false;
            continue;
        }
        for (r, row) in step.matrix.iter().enumerate() {
            if row.len() != step.module.rank() {
                report.fail(format!("map {i}: row {r} has wrong length"));
                shapes_ok = false;
                continue;
            }
            for (c, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                if !entry.is_homogeneous(&algebra) {
                    report.fail(format!("map {i}: entry ({r}, {c}) is not homogeneous"));
                    continue;
                }
                let degree = entry.weighted_degree(&algebra)?;
                if degree == 0 {
                    report.fail(format!(
                        "map {i}: entry ({r}, {c}) is a unit; the resolution is not minimal"
                    ));
                }
                if degree + prev.module.shifts()[r] != step.module.shifts()[c] {
                    report.fail(format!(
                        "map {i}: entry ({r}, {c}) breaks the degree-0 bookkeeping"
                    ));
                }
            }
        }
    }
    if !shapes_ok {
        return Ok(report);
    }
    // Composition zero.
    for i in 1..steps.len().saturating_sub(1) {
        let columns = matrix_columns(&steps[i + 1].matrix, &steps[i].module)?;
        for (c, column) in columns.iter().enumerate() {
            let image = apply_map(&steps[i].matrix, column, &steps[i].module, &steps[i - 1].module)?;
            if !image.is_zero() {
                report.fail(format!("composition φ_{i} ∘ φ_{} is nonzero on column {c}", i + 1));
            }
        }
    }
    // Kernel coverage, step 0: the columns of φ_1 and the relations generate
    // the same submodule of L_0.
    let relations = &resolution.presentation.relations;
    if steps.len() > 1 {
        let columns = matrix_columns(&steps[1].matrix, &steps[0].module)?;
        for (c, column) in columns.iter().enumerate() {
            if !contains(relations, column, &steps[0].module)? {
                report.fail(format!("column {c} of φ_1 lies outside the relation module"));
            }
        }
        for (l, relation) in relations.iter().enumerate() {
            if !contains(&columns, relation, &steps[0].module)? {
                report.fail(format!("relation {l} is not generated by the columns of φ_1"));
            }
        }
    } else if !relations.is_empty() {
        report.fail("presentation has relations but the resolution stops at L_0");
    }
    // Kernel coverage, step i ≥ 1: syzygies of the step-i columns reduce to
    // zero against the step-(i+1) columns; the last step has none.
    for i in 1..steps.len() {
        let columns = matrix_columns(&steps[i].matrix, &steps[i - 1].module)?;
        if columns.is_empty() {
            continue;
        }
        let (gb, matrices) = buchberger(&columns, &steps[i - 1].module)?;
        let syzygies = syzygies_of_generators(&columns, &gb, &matrices)?;
        if i + 1 < steps.len() {
            let next_columns = matrix_columns(&steps[i + 1].matrix, &steps[i].module)?;
            for generator in &syzygies.generators {
                // Identify the syzygy module of the columns with L_i: same
                // rank, shifts and ordering by construction.
                let row = generator.element.components(&syzygies.module);
                let as_li = ModuleElement::from_components(&row, &steps[i].module)?;
                if !contains(&next_columns, &as_li, &steps[i].module)? {
                    report.fail(format!(
                        "a syzygy of the step-{i} columns escapes the image of φ_{}",
                        i + 1
                    ));
                }
            }
        } else if !syzygies.generators.is_empty() {
            report.fail(format!("the final map φ_{i} still has nonzero syzygies"));
        }
    }
    Ok(report)
}

/// Convenience: resolution of the quotient presented by the given relations
/// inside the given module.
pub fn resolve_quotient(
    module: &Arc<GradedFreeModule>,
    relations: Vec<ModuleElement>,
) -> Result<Resolution> {
    let presentation = Presentation::new(module.clone(), relations)?;
    minimal_free_resolution(&presentation)
}
