//! Graded free left modules `L = ⊕ A e_i` with degree shifts, module monomial
//! orderings, divisibility, the left division algorithm and left
//! S-polynomials.
//!
//! A module monomial is `a^α e_i`; it divides `a^β e_j` exactly when `i = j`
//! and `α ≤ β` exponentwise. The division algorithm is the total-reduction
//! loop: a leading term divisible by some divisor is cancelled, otherwise it
//! moves to the remainder and reduction continues on the tail.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::{Monomial, Polynomial, SolvableAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Module monomial orderings. TOP compares the ring monomial first, POT the
/// component; the Schreyer ordering compares images `LM(a^α g_i)` in a parent
/// module and falls back to the component index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleOrdering {
    Top,
    Pot,
    Schreyer(Arc<SchreyerData>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreyerData {
    pub reference: Vec<ModuleElement>,
    pub parent: Arc<GradedFreeModule>,
    reference_lm: Vec<ModuleMonomial>,
}

impl ModuleOrdering {
    /// Schreyer ordering induced by a reference sequence of nonzero elements
    /// of the parent module.
    pub fn schreyer(reference: Vec<ModuleElement>, parent: Arc<GradedFreeModule>) -> Result<Self> {
        let mut reference_lm = Vec::with_capacity(reference.len());
        for elem in &reference {
            parent.check_element(elem)?;
            let (_, lm) = elem.leading()?;
            reference_lm.push(lm.clone());
        }
        Ok(ModuleOrdering::Schreyer(Arc::new(SchreyerData { reference, parent, reference_lm })))
    }
}

/// A graded free left module with one degree shift per basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFreeModule {
    algebra: Arc<SolvableAlgebra>,
    shifts: Vec<u64>,
    ordering: ModuleOrdering,
}

impl GradedFreeModule {
    pub fn new(algebra: Arc<SolvableAlgebra>, shifts: Vec<u64>, ordering: ModuleOrdering) -> Result<Arc<Self>> {
        if let ModuleOrdering::Schreyer(data) = &ordering {
            if data.reference.len() != shifts.len() {
                return Err(Error::InvalidModule(
                    "Schreyer reference length must equal the module rank".into(),
                ));
            }
        }
        Ok(Arc::new(GradedFreeModule { algebra, shifts, ordering }))
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[u64] {
        &self.shifts
    }

    pub fn algebra(&self) -> &Arc<SolvableAlgebra> {
        &self.algebra
    }

    pub fn ordering(&self) -> &ModuleOrdering {
        &self.ordering
    }

    fn check_monomial(&self, m: &ModuleMonomial) -> Result<()> {
        if m.index >= self.rank() || m.mono.arity() != self.algebra.generator_count() {
            return Err(Error::ModuleMismatch);
        }
        Ok(())
    }

    pub fn check_element(&self, elem: &ModuleElement) -> Result<()> {
        for (c, m) in &elem.terms {
            self.check_monomial(m)?;
            if !self.algebra.field().contains(c) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(())
    }

    /// Total comparison of module monomials under the module ordering.
    pub fn compare(&self, u: &ModuleMonomial, v: &ModuleMonomial) -> Result<Ordering> {
        self.check_monomial(u)?;
        self.check_monomial(v)?;
        match &self.ordering {
            ModuleOrdering::Top => Ok(self
                .algebra
                .compare_monomials(&u.mono, &v.mono)?
                .then(u.index.cmp(&v.index))),
            ModuleOrdering::Pot => Ok(u
                .index
                .cmp(&v.index)
                .then(self.algebra.compare_monomials(&u.mono, &v.mono)?)),
            ModuleOrdering::Schreyer(data) => {
                // By (P2), LM(a^α g_i) is a^{α + lm(g_i)} in the component of
                // LM(g_i); no product normalization is needed.
                let iu = &data.reference_lm[u.index];
                let iv = &data.reference_lm[v.index];
                let image_u = ModuleMonomial { mono: u.mono.mul(&iu.mono), index: iu.index };
                let image_v = ModuleMonomial { mono: v.mono.mul(&iv.mono), index: iv.index };
                Ok(data.parent.compare(&image_u, &image_v)?.then(u.index.cmp(&v.index)))
            }
        }
    }

    /// Weighted degree of `a^α e_i`, i.e. `d(a^α) + b_i`.
    pub fn monomial_degree(&self, m: &ModuleMonomial) -> u64 {
        m.mono.weighted_degree(self.algebra.weights()) + self.shifts[m.index]
    }
}

/// A monomial `a^α e_i` of the free module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub index: usize,
}

impl ModuleMonomial {
    pub fn new(mono: Monomial, index: usize) -> Self {
        ModuleMonomial { mono, index }
    }

    /// `a^α e_i | a^β e_j` iff `i = j` and `α ≤ β` exponentwise.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }
}

/// A sparse module element in canonical form: terms strictly descending under
/// the module ordering, no zero coefficients; the empty sequence is 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    terms: Vec<(Coefficient, ModuleMonomial)>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    /// The basis vector `e_i`.
    pub fn unit(module: &GradedFreeModule, index: usize) -> Self {
        ModuleElement {
            terms: vec![(
                module.algebra().field().one(),
                ModuleMonomial::new(Monomial::one(module.algebra().generator_count()), index),
            )],
        }
    }

    pub fn from_terms(
        terms: Vec<(Coefficient, ModuleMonomial)>,
        module: &GradedFreeModule,
    ) -> Result<ModuleElement> {
        let mut terms = terms;
        for (c, m) in &terms {
            module.check_monomial(m)?;
            if !module.algebra().field().contains(c) {
                return Err(Error::FieldMismatch);
            }
        }
        let mut cmp_err = None;
        terms.sort_by(|a, b| match module.compare(&b.1, &a.1) {
            Ok(ord) => ord,
            Err(e) => {
                cmp_err.get_or_insert(e);
                Ordering::Equal
            }
        });
        if let Some(e) = cmp_err {
            return Err(e);
        }
        let mut out: Vec<(Coefficient, ModuleMonomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Ok(ModuleElement { terms: out })
    }

    /// Builds `Σ f_i e_i` from one polynomial per component.
    pub fn from_components(components: &[Polynomial], module: &GradedFreeModule) -> Result<ModuleElement> {
        if components.len() != module.rank() {
            return Err(Error::ModuleMismatch);
        }
        let mut terms = Vec::new();
        for (index, poly) in components.iter().enumerate() {
            for (c, m) in poly.terms() {
                terms.push((c.clone(), ModuleMonomial::new(m.clone(), index)));
            }
        }
        ModuleElement::from_terms(terms, module)
    }

    /// The component polynomials `(f_1, …, f_s)` with `self = Σ f_i e_i`.
    ///
    /// Within one component every module ordering restricts to the ring
    /// ordering, so the collected terms are already canonical.
    pub fn components(&self, module: &GradedFreeModule) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Coefficient, Monomial)>> = vec![Vec::new(); module.rank()];
        for (c, m) in &self.terms {
            buckets[m.index].push((c.clone(), m.mono.clone()));
        }
        buckets
            .into_iter()
            .map(|terms| {
                Polynomial::from_terms(terms, module.algebra()).expect("canonical component terms")
            })
            .collect()
    }

    pub fn terms(&self) -> &[(Coefficient, ModuleMonomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Result<(&Coefficient, &ModuleMonomial)> {
        self.terms.first().map(|(c, m)| (c, m)).ok_or(Error::ZeroElement)
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement { terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> ModuleElement {
        if c.is_zero() {
            return ModuleElement::zero();
        }
        ModuleElement { terms: self.terms.iter().map(|(tc, m)| (tc.mul(c), m.clone())).collect() }
    }

    pub fn add(&self, other: &ModuleElement, module: &GradedFreeModule) -> Result<ModuleElement> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match module.compare(ma, mb)? {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(ModuleElement { terms: out })
    }

    pub fn sub(&self, other: &ModuleElement, module: &GradedFreeModule) -> Result<ModuleElement> {
        self.add(&other.neg(), module)
    }

    /// Left multiplication by a single scaled monomial `c · a^γ`.
    pub fn mul_mono_left(
        &self,
        c: &Coefficient,
        gamma: &Monomial,
        module: &GradedFreeModule,
    ) -> Result<ModuleElement> {
        let algebra = module.algebra();
        let mut terms = Vec::new();
        for (tc, tm) in &self.terms {
            let prod = algebra.normalize_product(gamma, &tm.mono)?;
            let scale = c.mul(tc);
            for (pc, pm) in prod.terms() {
                terms.push((pc.mul(&scale), ModuleMonomial::new(pm.clone(), tm.index)));
            }
        }
        ModuleElement::from_terms(terms, module)
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly_left(&self, f: &Polynomial, module: &GradedFreeModule) -> Result<ModuleElement> {
        let mut acc = ModuleElement::zero();
        for (c, m) in f.terms() {
            acc = acc.add(&self.mul_mono_left(c, m, module)?, module)?;
        }
        Ok(acc)
    }

    /// Degree `d_gr` for homogeneous elements; for general elements the
    /// maximum of the term degrees.
    pub fn weighted_degree(&self, module: &GradedFreeModule) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.terms.iter().map(|(_, m)| module.monomial_degree(m)).max().unwrap())
    }

    /// True when all terms share one degree `d(a^α) + b_i` (vacuously for 0).
    pub fn is_homogeneous(&self, module: &GradedFreeModule) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| module.monomial_degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Renders as a bracketed vector of polynomials, e.g. `[x^2 + y^2, 0, x*y]`.
    pub fn render(&self, module: &GradedFreeModule) -> String {
        let comps: Vec<String> = self
            .components(module)
            .iter()
            .map(|p| p.render(module.algebra()))
            .collect();
        format!("[{}]", comps.join(", "))
    }
}

/// Result of dividing an element by a list of divisors:
/// `ξ = Σ quotients_j · U_j + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: ModuleElement,
}

/// The left division algorithm in total-reduction style.
///
/// No monomial of the remainder is divisible by any `LM(U_j)`; every quotient
/// term `q` satisfies `LM(q · U_j) ⪯ LM(ξ)`. Ties among eligible divisors go
/// to the lowest index. Remainders of homogeneous inputs under homogeneous
/// divisors stay homogeneous.
pub fn divide(
    xi: &ModuleElement,
    dividers: &[ModuleElement],
    module: &GradedFreeModule,
) -> Result<Division> {
    module.check_element(xi)?;
    let mut leading: Vec<(&Coefficient, &ModuleMonomial)> = Vec::with_capacity(dividers.len());
    for u in dividers {
        module.check_element(u)?;
        leading.push(u.leading()?);
    }
    let algebra = module.algebra();
    let mut quotients = vec![Polynomial::zero(); dividers.len()];
    let mut remainder = ModuleElement::zero();
    let mut work = xi.clone();
    #[cfg(debug_assertions)]
    let mut previous_lm: Option<ModuleMonomial> = None;
    while !work.is_zero() {
        let (wc, wm) = {
            let (c, m) = work.leading()?;
            (c.clone(), m.clone())
        };
        #[cfg(debug_assertions)]
        {
            if let Some(prev) = &previous_lm {
                debug_assert_eq!(
                    module.compare(&wm, prev)?,
                    Ordering::Less,
                    "division must strictly decrease the working leading monomial"
                );
            }
            previous_lm = Some(wm.clone());
        }
        match leading.iter().position(|(_, lm)| lm.divides(&wm)) {
            Some(j) => {
                let gamma = leading[j].1.mono.quotient_into(&wm.mono);
                let scaled = dividers[j].mul_mono_left(&algebra.field().one(), &gamma, module)?;
                let (sc, _) = scaled.leading()?;
                let coeff = wc.div(sc);
                quotients[j] = quotients[j].add(
                    &Polynomial::monomial(coeff.clone(), Monomial::new(gamma.exponents().to_vec())),
                    algebra,
                )?;
                work = work.sub(&scaled.scale(&coeff), module)?;
            }
            None => {
                let lead = ModuleElement::from_terms(vec![(wc, wm)], module)?;
                remainder = remainder.add(&lead, module)?;
                work = work.sub(&lead, module)?;
            }
        }
    }
    Ok(Division { quotients, remainder })
}

/// The left S-polynomial of two nonzero elements. Returns 0 when the leading
/// components differ; otherwise, with `γ = max(α_i, α_j)`,
///
/// ```text
/// S = (1/LC(a^{γ-α_i} ξ_i)) a^{γ-α_i} ξ_i − (1/LC(a^{γ-α_j} ξ_j)) a^{γ-α_j} ξ_j.
/// ```
pub fn s_polynomial(
    a: &ModuleElement,
    b: &ModuleElement,
    module: &GradedFreeModule,
) -> Result<ModuleElement> {
    let (_, lma) = a.leading().map_err(|_| Error::ZeroElement)?;
    let (_, lmb) = b.leading().map_err(|_| Error::ZeroElement)?;
    if lma.index != lmb.index {
        return Ok(ModuleElement::zero());
    }
    let gamma = lma.mono.lcm(&lmb.mono);
    let one = module.algebra().field().one();
    let left = a.mul_mono_left(&one, &lma.mono.quotient_into(&gamma), module)?;
    let right = b.mul_mono_left(&one, &lmb.mono.quotient_into(&gamma), module)?;
    let (lc, _) = left.leading()?;
    let (rc, _) = right.leading()?;
    let (lc, rc) = (lc.inv(), rc.inv());
    left.scale(&lc).sub(&right.scale(&rc), module)
}

/// `Σ row_k · elements_k`, the pairing used by syzygy and transition-matrix
/// identities.
pub fn combine(
    row: &[Polynomial],
    elements: &[ModuleElement],
    module: &GradedFreeModule,
) -> Result<ModuleElement> {
    if row.len() != elements.len() {
        return Err(Error::ShapeError(format!(
            "row of length {} against {} elements",
            row.len(),
            elements.len()
        )));
    }
    let mut acc = ModuleElement::zero();
    for (f, elem) in row.iter().zip(elements) {
        acc = acc.add(&elem.mul_poly_left(f, module)?, module)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderingFamily, OrderingSpec};
    use crate::algebras::{commutative_ring, quantum_plane};
    use crate::scalar::FieldSpec;
    use crate::SolvableAlgebra;

    fn qq(n: i64, d: i64) -> Coefficient {
        FieldSpec::Rationals.fraction(n, d).unwrap()
    }

    fn kxy() -> Arc<SolvableAlgebra> {
        Arc::new(commutative_ring(&["x", "y"], FieldSpec::Rationals).unwrap())
    }

    /// K[x, y] with x of higher precedence, so that LM(xy + y^2) = xy.
    fn kxy_xmajor() -> Arc<SolvableAlgebra> {
        Arc::new(
            SolvableAlgebra::commutative(
                vec!["x".into(), "y".into()],
                vec![1, 1],
                FieldSpec::Rationals,
                OrderingSpec::new(OrderingFamily::DegLex, vec![1, 0]).unwrap(),
            )
            .unwrap(),
        )
    }

    fn module(algebra: Arc<SolvableAlgebra>, shifts: &[u64], ordering: ModuleOrdering) -> Arc<GradedFreeModule> {
        GradedFreeModule::new(algebra, shifts.to_vec(), ordering).unwrap()
    }

    fn mm(exps: &[u32], index: usize) -> ModuleMonomial {
        ModuleMonomial::new(Monomial::new(exps.to_vec()), index)
    }

    fn elem(terms: &[(i64, i64, &[u32], usize)], l: &GradedFreeModule) -> ModuleElement {
        ModuleElement::from_terms(
            terms.iter().map(|&(n, d, e, i)| (qq(n, d), mm(e, i))).collect(),
            l,
        )
        .unwrap()
    }

    #[test]
    fn pot_orders_by_component_first() {
        let l = module(kxy(), &[0, 0], ModuleOrdering::Pot);
        assert_eq!(l.compare(&mm(&[3, 0], 0), &mm(&[1, 0], 1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn top_orders_by_monomial_first() {
        let l = module(kxy(), &[0, 0], ModuleOrdering::Top);
        assert_eq!(l.compare(&mm(&[3, 0], 0), &mm(&[1, 0], 1)).unwrap(), Ordering::Greater);
    }

    #[test]
    fn schreyer_breaks_ties_by_index() {
        // G = {x e, y e} in K[x, y]: LM(y·xe) = LM(x·ye) = xy e, so the index
        // decides: y ε_1 < x ε_2.
        let algebra = kxy();
        let parent = module(algebra.clone(), &[0], ModuleOrdering::Top);
        let g1 = elem(&[(1, 1, &[1, 0], 0)], &parent);
        let g2 = elem(&[(1, 1, &[0, 1], 0)], &parent);
        let ordering = ModuleOrdering::schreyer(vec![g1, g2], parent).unwrap();
        let l1 = module(algebra, &[1, 1], ordering);
        assert_eq!(l1.compare(&mm(&[0, 1], 0), &mm(&[1, 0], 1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn schreyer_rejects_zero_reference() {
        let parent = module(kxy(), &[0], ModuleOrdering::Top);
        assert!(ModuleOrdering::schreyer(vec![ModuleElement::zero()], parent).is_err());
    }

    #[test]
    fn divisibility_needs_matching_component() {
        assert!(mm(&[1, 0], 0).divides(&mm(&[2, 1], 0)));
        assert!(!mm(&[1, 0], 0).divides(&mm(&[2, 0], 1)));
        let u = mm(&[2, 3], 1);
        assert!(u.divides(&u));
    }

    #[test]
    fn self_division_is_exact() {
        let l = module(kxy(), &[0], ModuleOrdering::Top);
        let xi = elem(&[(1, 1, &[2, 0], 0), (1, 1, &[1, 1], 0)], &l);
        let division = divide(&xi, std::slice::from_ref(&xi), &l).unwrap();
        assert!(division.remainder.is_zero());
        assert_eq!(division.quotients[0], Polynomial::constant(qq(1, 1), 2));
    }

    #[test]
    fn exact_left_factor() {
        let l = module(kxy(), &[0], ModuleOrdering::Top);
        let x2 = elem(&[(1, 1, &[2, 0], 0)], &l);
        let x = elem(&[(1, 1, &[1, 0], 0)], &l);
        let division = divide(&x2, &[x], &l).unwrap();
        assert!(division.remainder.is_zero());
        assert_eq!(division.quotients[0], Polynomial::monomial(qq(1, 1), Monomial::new(vec![1, 0])));
    }

    #[test]
    fn quantum_division_scales_by_the_relation() {
        // y·(x e) = 2xy e in the quantum plane with q = 2; dividing it back by
        // {x e} gives quotient y, remainder 0.
        let algebra = Arc::new(quantum_plane(FieldSpec::Rationals, qq(2, 1)).unwrap());
        let l = module(algebra, &[0], ModuleOrdering::Top);
        let xe = elem(&[(1, 1, &[1, 0], 0)], &l);
        let xi = xe.mul_mono_left(&qq(1, 1), &Monomial::new(vec![0, 1]), &l).unwrap();
        assert_eq!(xi, elem(&[(2, 1, &[1, 1], 0)], &l));
        let division = divide(&xi, &[xe], &l).unwrap();
        assert!(division.remainder.is_zero());
        assert_eq!(division.quotients[0], Polynomial::monomial(qq(1, 1), Monomial::new(vec![0, 1])));
    }

    #[test]
    fn spoly_of_distinct_components_vanishes() {
        let l = module(kxy(), &[0, 0], ModuleOrdering::Top);
        let a = elem(&[(1, 1, &[1, 0], 0)], &l);
        let b = elem(&[(1, 1, &[0, 1], 1)], &l);
        assert!(s_polynomial(&a, &b, &l).unwrap().is_zero());
    }

    #[test]
    fn spoly_of_equal_elements_vanishes() {
        let l = module(kxy(), &[0], ModuleOrdering::Top);
        let a = elem(&[(1, 1, &[1, 1], 0), (1, 1, &[0, 2], 0)], &l);
        assert!(s_polynomial(&a, &a, &l).unwrap().is_zero());
        assert_eq!(s_polynomial(&a, &ModuleElement::zero(), &l), Err(Error::ZeroElement));
    }

    #[test]
    fn spoly_cancels_leading_terms() {
        // x-major deglex: LM(xy + y^2) = xy; gamma = (2, 1), and
        // S = y·x^2 e − x·(xy + y^2) e = −xy^2 e.
        let l = module(kxy_xmajor(), &[0], ModuleOrdering::Top);
        let xi1 = elem(&[(1, 1, &[2, 0], 0)], &l);
        let xi2 = elem(&[(1, 1, &[1, 1], 0), (1, 1, &[0, 2], 0)], &l);
        let s = s_polynomial(&xi1, &xi2, &l).unwrap();
        assert_eq!(s, elem(&[(-1, 1, &[1, 2], 0)], &l));
    }

    #[test]
    fn division_reconstructs_its_input() {
        let l = module(kxy_xmajor(), &[0], ModuleOrdering::Top);
        let u1 = elem(&[(1, 1, &[2, 0], 0)], &l);
        let u2 = elem(&[(1, 1, &[1, 1], 0), (1, 1, &[0, 2], 0)], &l);
        let xi = elem(&[(1, 1, &[2, 2], 0), (3, 1, &[1, 1], 0), (1, 2, &[0, 1], 0)], &l);
        let division = divide(&xi, &[u1.clone(), u2.clone()], &l).unwrap();
        let recombined = combine(&division.quotients, &[u1, u2], &l)
            .unwrap()
            .add(&division.remainder, &l)
            .unwrap();
        assert_eq!(recombined, xi);
        // No remainder monomial is divisible by a divisor leading monomial.
        for (_, m) in division.remainder.terms() {
            assert!(!mm(&[2, 0], 0).divides(m));
            assert!(!mm(&[1, 1], 0).divides(m));
        }
    }

    #[test]
    fn homogeneous_division_stays_homogeneous() {
        let l = module(kxy(), &[0, 1], ModuleOrdering::Top);
        let xi = elem(&[(1, 1, &[3, 0], 0), (2, 1, &[1, 1], 1)], &l);
        assert!(xi.is_homogeneous(&l));
        assert_eq!(xi.weighted_degree(&l).unwrap(), 3);
        let u = elem(&[(1, 1, &[1, 0], 0), (1, 1, &[0, 0], 1)], &l);
        let division = divide(&xi, &[u], &l).unwrap();
        assert!(division.remainder.is_homogeneous(&l));
    }

    #[test]
    fn render_is_a_bracketed_vector() {
        let l = module(kxy_xmajor(), &[0, 0, 0], ModuleOrdering::Top);
        let xi = elem(&[(1, 1, &[2, 0], 0), (1, 1, &[0, 2], 0), (1, 1, &[1, 1], 2)], &l);
        assert_eq!(xi.render(&l), "[x^2 + y^2, 0, x*y]");
    }
}
