//! The Gröbner engines.
//!
//! Three entry points share the reduction machinery:
//!
//! - [`buchberger`]: the plain left Buchberger loop. The input elements seed
//!   the basis, S-pairs are reduced until none remains.
//! - [`truncated_buchberger`]: the degree-layered loop for homogeneous input.
//!   Work items are processed in ascending degree; S-pairs above the bound
//!   `n0` are never queued, and the output detects membership for every
//!   homogeneous element of degree at most `n0`.
//! - [`min_gens_gb`]: the same layered loop without a bound, additionally
//!   selecting the input elements with nonzero remainder. The selected subset
//!   is a minimal homogeneous generating set; the basis is a full homogeneous
//!   left Gröbner basis (or a truncated one under the early-stop option).
//!
//! Pair selection is deterministic: a queue keyed by (degree of the S-pair,
//! insertion index). Every engine logs the reduction quotients of each
//! processed S-pair and accumulates the transition data `input = U·G`,
//! `G = V·input` needed by the syzygy layer.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::freemod::{divide, s_polynomial, GradedFreeModule, ModuleElement};

/// Scope of a computed basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GbKind {
    Full,
    Truncated(u64),
}

/// A left Gröbner basis together with its canonical reduced form.
///
/// `elements` is the basis exactly as produced (inputs first for the plain
/// loop; degrees non-decreasing for the layered loops) — the transition data
/// refers to it. `reduced` is the interreduced monic form, unique for a fixed
/// ordering.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub module: Arc<GradedFreeModule>,
    pub elements: Vec<ModuleElement>,
    pub reduced: Vec<ModuleElement>,
    pub kind: GbKind,
    pub homogeneous: bool,
}

/// Reduction quotients of one processed S-pair `(i, j)` over the final basis,
/// sparse by basis index. When the reduction left a nonzero remainder that
/// joined the basis at index `t`, the trace carries the extra entry `(t, 1)`.
#[derive(Debug, Clone)]
pub struct SpairTrace {
    pub i: usize,
    pub j: usize,
    pub quotients: Vec<(usize, Polynomial)>,
}

/// Transition data between the input generators and the basis.
///
/// `u` is m×t with `input = u · basis`; `v` is t×m with `basis = v · input`;
/// both identities are exact. `traces` holds the logged S-pair reductions.
#[derive(Debug, Clone)]
pub struct TransitionMatrices {
    pub u: Vec<Vec<Polynomial>>,
    pub v: Vec<Vec<Polynomial>>,
    pub traces: Vec<SpairTrace>,
}

/// Output of [`min_gens_gb`].
#[derive(Debug, Clone)]
pub struct MinimalGenerators {
    /// Indices into the caller's input, in processing order (non-decreasing
    /// degree). The indexed elements form a minimal homogeneous generating
    /// set of the submodule the input generates.
    pub selected: Vec<usize>,
    pub basis: GroebnerBasis,
    /// Transition data relative to the selected generators: `u` is r×t,
    /// `v` is t×r.
    pub matrices: TransitionMatrices,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    degree: u64,
    counter: u64,
}

struct PairQueue {
    heap: BinaryHeap<Reverse<(PairKey, usize, usize)>>,
    counter: u64,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue { heap: BinaryHeap::new(), counter: 0 }
    }

    fn push(&mut self, degree: u64, i: usize, j: usize) {
        self.heap.push(Reverse((PairKey { degree, counter: self.counter }, i, j)));
        self.counter += 1;
    }

    fn peek_degree(&self) -> Option<u64> {
        self.heap.peek().map(|Reverse((key, _, _))| key.degree)
    }

    fn pop(&mut self) -> Option<(u64, usize, usize)> {
        self.heap.pop().map(|Reverse((key, i, j))| (key.degree, i, j))
    }
}

/// Degree of the S-pair of basis members `i`, `j`: `d(a^γ) + b_t` with
/// `γ = max(α_i, α_j)`. Equals `d_gr` of the S-polynomial for homogeneous
/// elements.
fn pair_degree(
    a: &ModuleElement,
    b: &ModuleElement,
    module: &GradedFreeModule,
) -> Result<Option<u64>> {
    let (_, lma) = a.leading()?;
    let (_, lmb) = b.leading()?;
    if lma.index != lmb.index {
        return Ok(None);
    }
    let gamma = lma.mono.lcm(&lmb.mono);
    Ok(Some(gamma.weighted_degree(module.algebra().weights()) + module.shifts()[lma.index]))
}

/// Divide, returning the sparse quotients over the current basis.
fn reduce_logged(
    xi: &ModuleElement,
    basis: &[ModuleElement],
    module: &GradedFreeModule,
) -> Result<(Vec<(usize, Polynomial)>, ModuleElement)> {
    let division = divide(xi, basis, module)?;
    let quotients = division
        .quotients
        .into_iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .collect();
    Ok((quotients, division.remainder))
}

/// Shared state of a running basis computation.
struct Engine<'m> {
    module: &'m Arc<GradedFreeModule>,
    basis: Vec<ModuleElement>,
    /// Row k expresses basis[k] over the input: basis[k] = Σ vrows[k][l] · ξ_l.
    vrows: Vec<Vec<Polynomial>>,
    traces: Vec<SpairTrace>,
    queue: PairQueue,
    truncation: Option<u64>,
}

impl<'m> Engine<'m> {
    fn new(module: &'m Arc<GradedFreeModule>, truncation: Option<u64>) -> Self {
        Engine {
            module,
            basis: Vec::new(),
            vrows: Vec::new(),
            traces: Vec::new(),
            queue: PairQueue::new(),
            truncation,
        }
    }

    fn queue_pairs_with(&mut self, t: usize) -> Result<()> {
        for l in 0..t {
            if let Some(degree) = pair_degree(&self.basis[l], &self.basis[t], self.module)? {
                if self.truncation.map_or(true, |n0| degree <= n0) {
                    self.queue.push(degree, l, t);
                }
            }
        }
        Ok(())
    }

    fn append(&mut self, element: ModuleElement, vrow: Vec<Polynomial>) -> Result<usize> {
        let t = self.basis.len();
        self.basis.push(element);
        self.vrows.push(vrow);
        self.queue_pairs_with(t)?;
        Ok(t)
    }

    /// Reduce the S-polynomial of the pair `(i, j)`, log the trace, append a
    /// nonzero remainder.
    fn process_pair(&mut self, i: usize, j: usize, input_count: usize) -> Result<()> {
        let module = self.module;
        let s = s_polynomial(&self.basis[i], &self.basis[j], module)?;
        let (mut quotients, remainder) = reduce_logged(&s, &self.basis, module)?;
        if !remainder.is_zero() {
            // vrow of the remainder: the S-pair combination minus the quotients.
            let one = module.algebra().field().one();
            let (_, lm_i) = self.basis[i].leading()?;
            let (_, lm_j) = self.basis[j].leading()?;
            let gamma = lm_i.mono.lcm(&lm_j.mono);
            let mono_i = lm_i.mono.quotient_into(&gamma);
            let mono_j = lm_j.mono.quotient_into(&gamma);
            let scaled_i = self.basis[i].mul_mono_left(&one, &mono_i, module)?;
            let scaled_j = self.basis[j].mul_mono_left(&one, &mono_j, module)?;
            let ci = scaled_i.leading()?.0.inv();
            let cj = scaled_j.leading()?.0.inv();
            let poly_i = Polynomial::monomial(ci, mono_i);
            let poly_j = Polynomial::monomial(cj.neg(), mono_j);
            let algebra = module.algebra();
            let mut vrow = vec![Polynomial::zero(); input_count];
            for (l, entry) in vrow.iter_mut().enumerate() {
                let mut acc = poly_i.mul(&self.vrows[i][l], algebra)?;
                acc = acc.add(&poly_j.mul(&self.vrows[j][l], algebra)?, algebra)?;
                for (k, q) in &quotients {
                    acc = acc.sub(&q.mul(&self.vrows[*k][l], algebra)?, algebra)?;
                }
                *entry = acc;
            }
            let t = self.append(remainder, vrow)?;
            quotients.push((t, Polynomial::constant(algebra.field().one(), algebra.generator_count())));
        }
        self.traces.push(SpairTrace { i, j, quotients });
        Ok(())
    }
}

fn unit_row(count: usize, index: usize, module: &GradedFreeModule) -> Vec<Polynomial> {
    let algebra = module.algebra();
    let mut row = vec![Polynomial::zero(); count];
    row[index] = Polynomial::constant(algebra.field().one(), algebra.generator_count());
    row
}

/// The noncommutative Buchberger loop for left modules.
///
/// Zero inputs never enter the basis but keep their (zero) transition rows, so
/// `u` and `v` are always m×t and t×m against the caller's list.
pub fn buchberger(
    inputs: &[ModuleElement],
    module: &Arc<GradedFreeModule>,
) -> Result<(GroebnerBasis, TransitionMatrices)> {
    let mut engine = Engine::new(module, None);
    for (l, xi) in inputs.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        module.check_element(xi)?;
        engine.append(xi.clone(), unit_row(inputs.len(), l, module))?;
    }
    while let Some((_, i, j)) = engine.queue.pop() {
        engine.process_pair(i, j, inputs.len())?;
    }
    finish(engine, inputs, GbKind::Full)
}

/// The degree-layered loop behind Algorithms 2 and 3. Processes S-pairs of
/// each degree before the input elements of that degree, exactly in the order
/// the paper's outer `n := min{…}` step induces.
fn layered_engine<'m>(
    inputs: &[ModuleElement],
    module: &'m Arc<GradedFreeModule>,
    truncation: Option<u64>,
    selected: Option<&mut Vec<usize>>,
) -> Result<Engine<'m>> {
    let mut degrees = Vec::with_capacity(inputs.len());
    for (l, xi) in inputs.iter().enumerate() {
        module.check_element(xi)?;
        if !xi.is_homogeneous(module) {
            return Err(Error::HomogeneityError(format!(
                "input element {} is not homogeneous",
                l + 1
            )));
        }
        if !xi.is_zero() {
            degrees.push((xi.weighted_degree(module)?, l));
        }
    }
    // Stable by construction: sorted by degree, ties in input order.
    degrees.sort_by_key(|&(d, l)| (d, l));
    let mut selected = selected;
    let mut engine = Engine::new(module, truncation);
    let mut w = degrees.into_iter().peekable();
    loop {
        let next_input = w.peek().map(|&(d, _)| d);
        let next_pair = engine.queue.peek_degree();
        let n = match (next_input, next_pair) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if truncation.map_or(false, |n0| n > n0) {
            break;
        }
        while engine.queue.peek_degree() == Some(n) {
            let (_, i, j) = engine.queue.pop().unwrap();
            engine.process_pair(i, j, inputs.len())?;
        }
        while w.peek().map(|&(d, _)| d) == Some(n) {
            let (_, l) = w.next().unwrap();
            let (quotients, remainder) = reduce_logged(&inputs[l], &engine.basis, module)?;
            if remainder.is_zero() {
                continue;
            }
            if let Some(sel) = selected.as_deref_mut() {
                sel.push(l);
            }
            let algebra = module.algebra();
            let mut vrow = unit_row(inputs.len(), l, module);
            for (input_col, entry) in vrow.iter_mut().enumerate() {
                let mut acc = entry.clone();
                for (k, q) in &quotients {
                    acc = acc.sub(&q.mul(&engine.vrows[*k][input_col], algebra)?, algebra)?;
                }
                *entry = acc;
            }
            engine.append(remainder, vrow)?;
        }
    }
    Ok(engine)
}

fn finish(
    engine: Engine<'_>,
    inputs: &[ModuleElement],
    kind: GbKind,
) -> Result<(GroebnerBasis, TransitionMatrices)> {
    let module = engine.module.clone();
    let homogeneous = engine.basis.iter().all(|g| g.is_homogeneous(&module));
    let reduced = interreduce(&engine.basis, &module)?;
    let u = division_matrix(inputs, &engine.basis, &module)?;
    let basis = GroebnerBasis { module, elements: engine.basis, reduced, kind, homogeneous };
    let matrices = TransitionMatrices { u, v: engine.vrows, traces: engine.traces };
    Ok((basis, matrices))
}

/// Expresses each element over the basis by division; rows of `input = U·G`.
fn division_matrix(
    elements: &[ModuleElement],
    basis: &[ModuleElement],
    module: &GradedFreeModule,
) -> Result<Vec<Vec<Polynomial>>> {
    let mut rows = Vec::with_capacity(elements.len());
    for xi in elements {
        if xi.is_zero() {
            rows.push(vec![Polynomial::zero(); basis.len()]);
            continue;
        }
        let division = divide(xi, basis, module)?;
        debug_assert!(division.remainder.is_zero(), "basis members must reduce their span to zero");
        rows.push(division.quotients);
    }
    Ok(rows)
}

/// n0-truncated left Gröbner basis of the graded submodule generated by
/// homogeneous inputs. Elements of degree above `n0` never contribute.
pub fn truncated_buchberger(
    inputs: &[ModuleElement],
    module: &Arc<GradedFreeModule>,
    n0: u64,
) -> Result<GroebnerBasis> {
    let engine = layered_engine(inputs, module, Some(n0), None)?;
    let homogeneous = true;
    let reduced = interreduce(&engine.basis, module)?;
    Ok(GroebnerBasis {
        module: module.clone(),
        elements: engine.basis,
        reduced,
        kind: GbKind::Truncated(n0),
        homogeneous,
    })
}

/// Minimal homogeneous generating set plus a homogeneous left Gröbner basis.
///
/// With `early_stop` the computation halts after the degree of the largest
/// input: the selection is already complete there and the basis is truncated
/// at that degree. By default the loop runs to completion and the basis is a
/// full Gröbner basis.
pub fn min_gens_gb(
    inputs: &[ModuleElement],
    module: &Arc<GradedFreeModule>,
    early_stop: bool,
) -> Result<MinimalGenerators> {
    let truncation = if early_stop {
        let mut max_degree = None;
        for xi in inputs {
            if !xi.is_zero() {
                module.check_element(xi)?;
                if !xi.is_homogeneous(module) {
                    return Err(Error::HomogeneityError("inputs must be homogeneous".into()));
                }
                let d = xi.weighted_degree(module)?;
                max_degree = Some(max_degree.map_or(d, |m: u64| m.max(d)));
            }
        }
        max_degree
    } else {
        None
    };
    let mut selected = Vec::new();
    let engine = layered_engine(inputs, module, truncation, Some(&mut selected))?;
    let kind = match truncation {
        Some(n0) => GbKind::Truncated(n0),
        None => GbKind::Full,
    };
    let reduced = interreduce(&engine.basis, module)?;
    let picked: Vec<ModuleElement> = selected.iter().map(|&l| inputs[l].clone()).collect();
    let u = division_matrix(&picked, &engine.basis, module)?;
    // Only selected inputs ever receive transition coefficients.
    let mut v = Vec::with_capacity(engine.vrows.len());
    for (k, row) in engine.vrows.iter().enumerate() {
        for (l, entry) in row.iter().enumerate() {
            debug_assert!(
                selected.contains(&l) || entry.is_zero(),
                "basis element {k} references unselected input {l}"
            );
        }
        v.push(selected.iter().map(|&l| row[l].clone()).collect());
    }
    let basis = GroebnerBasis {
        module: module.clone(),
        elements: engine.basis,
        reduced,
        kind,
        homogeneous: true,
    };
    Ok(MinimalGenerators {
        selected,
        basis,
        matrices: TransitionMatrices { u, v, traces: engine.traces },
    })
}

/// Buchberger's criterion: every same-component S-polynomial reduces to zero.
pub fn is_groebner(elements: &[ModuleElement], module: &GradedFreeModule) -> Result<bool> {
    for g in elements {
        if g.is_zero() {
            return Err(Error::ZeroElement);
        }
    }
    for j in 1..elements.len() {
        for i in 0..j {
            let s = s_polynomial(&elements[i], &elements[j], module)?;
            if s.is_zero() {
                continue;
            }
            let division = divide(&s, elements, module)?;
            if !division.remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Submodule membership via remainder against a Gröbner basis.
///
/// For homogeneous data the basis is only computed up to `d_gr(ξ)`; otherwise
/// a full basis is used.
pub fn contains(
    generators: &[ModuleElement],
    xi: &ModuleElement,
    module: &Arc<GradedFreeModule>,
) -> Result<bool> {
    if xi.is_zero() {
        return Ok(true);
    }
    let homogeneous_data = xi.is_homogeneous(module)
        && generators.iter().all(|g| g.is_homogeneous(module));
    let basis = if homogeneous_data {
        truncated_buchberger(generators, module, xi.weighted_degree(module)?)?
    } else {
        buchberger(generators, module)?.0
    };
    if basis.elements.is_empty() {
        return Ok(false);
    }
    let division = divide(xi, &basis.elements, module)?;
    Ok(division.remainder.is_zero())
}

/// Interreduces a basis into its canonical form: leading monomials pairwise
/// non-dividing, every tail fully reduced, all elements monic, sorted by
/// ascending leading monomial.
pub fn interreduce(
    elements: &[ModuleElement],
    module: &GradedFreeModule,
) -> Result<Vec<ModuleElement>> {
    let mut order: Vec<usize> = (0..elements.len()).filter(|&k| !elements[k].is_zero()).collect();
    let mut cmp_err = None;
    order.sort_by(|&a, &b| {
        let lma = elements[a].leading().unwrap().1;
        let lmb = elements[b].leading().unwrap().1;
        match module.compare(lma, lmb) {
            Ok(ord) => ord.then(a.cmp(&b)),
            Err(e) => {
                cmp_err.get_or_insert(e);
                std::cmp::Ordering::Equal
            }
        }
    });
    if let Some(e) = cmp_err {
        return Err(e);
    }
    // Ascending leading monomials: a divisor always precedes its multiples,
    // so one greedy sweep keeps exactly the minimal set.
    let mut kept: Vec<ModuleElement> = Vec::new();
    for &k in &order {
        let lm = elements[k].leading()?.1.clone();
        if kept.iter().any(|g| g.leading().unwrap().1.divides(&lm)) {
            continue;
        }
        kept.push(elements[k].clone());
    }
    // Tail-reduce to a fixpoint.
    loop {
        let mut changed = false;
        for k in 0..kept.len() {
            let others: Vec<ModuleElement> =
                kept.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, g)| g.clone()).collect();
            if others.is_empty() {
                break;
            }
            let division = divide(&kept[k], &others, module)?;
            if division.remainder != kept[k] {
                debug_assert!(!division.remainder.is_zero());
                kept[k] = division.remainder;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    for g in &mut kept {
        let lc = g.leading()?.0.inv();
        *g = g.scale(&lc);
    }
    Ok(kept)
}
