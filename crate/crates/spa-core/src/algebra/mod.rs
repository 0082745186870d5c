//! Weighted N-graded solvable polynomial algebras.
//!
//! An algebra `A = K[a_1, …, a_n]` is described by generator names, positive
//! weights, a graded monomial ordering, and a commutation table
//! `a_j a_i = λ_ji a_i a_j + f_ji` for `j > i` with `λ_ji ∈ K*` and
//! `LM(f_ji) ≺ a_i a_j`. Pairs absent from the table commute. Products of PBW
//! monomials are normalized by rewriting the leftmost adjacent inversion
//! through the table; generator-power products `a_j^k a_i^l` are memoized.

mod monomial;
mod polynomial;

pub use monomial::{Monomial, OrderingFamily, OrderingSpec};
pub use polynomial::Polynomial;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result, ValidationReport};
use crate::scalar::{Coefficient, FieldSpec};

/// One commutation rule `a_j a_i = scalar · a_i a_j + tail`, `j > i`.
///
/// The tail is given as raw terms because the ambient algebra (which owns the
/// ordering needed to canonicalize polynomials) does not exist yet when rules
/// are written down.
#[derive(Debug, Clone)]
pub struct RelationSpec {
    pub higher: usize,
    pub lower: usize,
    pub scalar: Coefficient,
    pub tail: Vec<(Coefficient, Monomial)>,
}

impl RelationSpec {
    pub fn quasi(higher: usize, lower: usize, scalar: Coefficient) -> Self {
        RelationSpec { higher, lower, scalar, tail: Vec::new() }
    }
}

type PowKey = (usize, usize, u32, u32);

/// Memoized normal forms of `a_j^k a_i^l`. Behaves as one logical map under
/// concurrent use; correctness never depends on hits.
pub(crate) struct ProductCache {
    map: Mutex<HashMap<PowKey, Arc<Polynomial>>>,
}

impl ProductCache {
    fn new() -> Self {
        ProductCache { map: Mutex::new(HashMap::new()) }
    }

    fn get(&self, key: &PowKey) -> Option<Arc<Polynomial>> {
        self.map.lock().unwrap().get(key).cloned()
    }

    fn insert(&self, key: PowKey, value: Arc<Polynomial>) {
        self.map.lock().unwrap().insert(key, value);
    }
}

impl Clone for ProductCache {
    fn clone(&self) -> Self {
        ProductCache::new()
    }
}

impl PartialEq for ProductCache {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for ProductCache {}

impl fmt::Debug for ProductCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProductCache")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableAlgebra {
    names: Vec<String>,
    weights: Vec<u64>,
    field: FieldSpec,
    ordering: OrderingSpec,
    relations: HashMap<(usize, usize), (Coefficient, Polynomial)>,
    quasi_commutative: bool,
    commutative: bool,
    cache: ProductCache,
}

/// A word is a product of generator-power blocks, not necessarily sorted.
type Word = Vec<(usize, u32)>;

struct MulCtx {
    budget: u64,
    active: Vec<PowKey>,
}

fn word_of_monomial(m: &Monomial) -> Word {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i, e))
        .collect()
}

fn push_block(word: &mut Word, gen: usize, pow: u32) {
    if pow == 0 {
        return;
    }
    match word.last_mut() {
        Some((g, p)) if *g == gen => *p += pow,
        _ => word.push((gen, pow)),
    }
}

fn append_monomial(word: &mut Word, m: &Monomial) {
    for (i, &e) in m.exponents().iter().enumerate() {
        push_block(word, i, e);
    }
}

fn monomial_of_sorted_word(word: &Word, arity: usize) -> Monomial {
    let mut exps = vec![0u32; arity];
    for &(g, p) in word {
        exps[g] += p;
    }
    Monomial::new(exps)
}

impl SolvableAlgebra {
    pub fn new(
        names: Vec<String>,
        weights: Vec<u64>,
        field: FieldSpec,
        ordering: OrderingSpec,
        relations: Vec<RelationSpec>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("an algebra needs at least one generator".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlgebra("generator names must be nonempty".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlgebra(format!("duplicate generator name `{name}`")));
            }
        }
        if weights.len() != n {
            return Err(Error::InvalidAlgebra("one weight per generator is required".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidAlgebra(
                "weights must be positive (a positive-degree function)".into(),
            ));
        }
        if ordering.precedence.len() != n {
            return Err(Error::InvalidAlgebra("ordering must cover every generator".into()));
        }
        let mut algebra = SolvableAlgebra {
            names,
            weights,
            field,
            ordering,
            relations: HashMap::new(),
            quasi_commutative: true,
            commutative: true,
            cache: ProductCache::new(),
        };
        for spec in relations {
            let (j, i) = (spec.higher, spec.lower);
            if j >= n || i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "relation must rewrite a_j a_i with j > i; got ({j}, {i})"
                )));
            }
            if algebra.relations.contains_key(&(j, i)) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate relation for the pair ({}, {})",
                    algebra.names[j], algebra.names[i]
                )));
            }
            if !field.contains(&spec.scalar) {
                return Err(Error::FieldMismatch);
            }
            let tail = Polynomial::from_terms(spec.tail, &algebra)?;
            algebra.quasi_commutative &= tail.is_zero();
            algebra.commutative &= tail.is_zero() && spec.scalar.is_one();
            algebra.relations.insert((j, i), (spec.scalar, tail));
        }
        Ok(algebra)
    }

    /// The commutative polynomial algebra on the given data.
    pub fn commutative(
        names: Vec<String>,
        weights: Vec<u64>,
        field: FieldSpec,
        ordering: OrderingSpec,
    ) -> Result<Self> {
        SolvableAlgebra::new(names, weights, field, ordering, Vec::new())
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ordering(&self) -> &OrderingSpec {
        &self.ordering
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn generator_monomial(&self, i: usize) -> Monomial {
        Monomial::generator(self.generator_count(), i)
    }

    pub fn generator_polynomial(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.field.one(), self.generator_monomial(i))
    }

    /// The scalar and tail of `a_j a_i`, with the commutative default for
    /// pairs absent from the table.
    pub fn relation(&self, j: usize, i: usize) -> (Coefficient, Polynomial) {
        match self.relations.get(&(j, i)) {
            Some((s, t)) => (s.clone(), t.clone()),
            None => (self.field.one(), Polynomial::zero()),
        }
    }

    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.ordering.compare(a, b, &self.weights)
    }

    /// Normal form of `a_j a_i` as a polynomial: `λ a_i a_j + f`.
    fn relation_polynomial(&self, j: usize, i: usize) -> Polynomial {
        let (scalar, tail) = self.relation(j, i);
        let m = self.generator_monomial(i).mul(&self.generator_monomial(j));
        Polynomial::monomial(scalar, m)
            .add(&tail, self)
            .expect("relation tail is canonical")
    }

    /// PBW normal form of the product `a^α · a^β`.
    ///
    /// The leading term is `λ_{α,β} a^{α+β}`; every other monomial is strictly
    /// smaller, and for a graded algebra all monomials share the degree
    /// `d(a^α) + d(a^β)`.
    pub fn normalize_product(&self, alpha: &Monomial, beta: &Monomial) -> Result<Polynomial> {
        let n = self.generator_count();
        if alpha.arity() != n {
            return Err(Error::ArityError { expected: n, got: alpha.arity() });
        }
        if beta.arity() != n {
            return Err(Error::ArityError { expected: n, got: beta.arity() });
        }
        if self.quasi_commutative {
            return Ok(self.quasi_commutative_product(alpha, beta));
        }
        let degree = alpha.total_degree() + beta.total_degree();
        let mut ctx = MulCtx {
            budget: 1_000_000u64.saturating_add(10_000u64.saturating_mul(degree * degree)),
            active: Vec::new(),
        };
        let mut word = word_of_monomial(alpha);
        append_monomial(&mut word, beta);
        self.word_normal_form(self.field.one(), word, &mut ctx)
    }

    /// When every tail vanishes the product is a single term with scalar
    /// `Π λ_ji^{α_j β_i}` over the inverted pairs.
    fn quasi_commutative_product(&self, alpha: &Monomial, beta: &Monomial) -> Polynomial {
        let mut coeff = self.field.one();
        if !self.commutative {
            for (j, &aj) in alpha.exponents().iter().enumerate() {
                if aj == 0 {
                    continue;
                }
                for (i, &bi) in beta.exponents().iter().enumerate().take(j) {
                    if bi == 0 {
                        continue;
                    }
                    if let Some((scalar, _)) = self.relations.get(&(j, i)) {
                        coeff = coeff.mul(&scalar.pow(aj as u64 * bi as u64));
                    }
                }
            }
        }
        Polynomial::monomial(coeff, alpha.mul(beta))
    }

    fn word_normal_form(&self, coeff: Coefficient, word: Word, ctx: &mut MulCtx) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut stack: Vec<(Coefficient, Word)> = vec![(coeff, word)];
        while let Some((c, w)) = stack.pop() {
            if ctx.budget == 0 {
                return Err(Error::NormalizationDiverged);
            }
            ctx.budget -= 1;
            match w.windows(2).position(|pair| pair[0].0 > pair[1].0) {
                None => {
                    let m = monomial_of_sorted_word(&w, self.generator_count());
                    out = out.add(&Polynomial::monomial(c, m), self)?;
                }
                Some(p) => {
                    let (j, k) = w[p];
                    let (i, l) = w[p + 1];
                    let table = self.pow_product(j, i, k, l, ctx)?;
                    for (tc, tm) in table.terms() {
                        let mut next: Word = w[..p].to_vec();
                        append_monomial(&mut next, tm);
                        for &(g, pw) in &w[p + 2..] {
                            push_block(&mut next, g, pw);
                        }
                        stack.push((c.mul(tc), next));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Memoized normal form of `a_j^k a_i^l` for `j > i`.
    fn pow_product(&self, j: usize, i: usize, k: u32, l: u32, ctx: &mut MulCtx) -> Result<Arc<Polynomial>> {
        let key = (j, i, k, l);
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit);
        }
        if ctx.active.contains(&key) {
            // A self-referential rewrite means the table does not terminate.
            return Err(Error::NormalizationDiverged);
        }
        ctx.active.push(key);
        let computed = self.pow_product_uncached(j, i, k, l, ctx);
        ctx.active.pop();
        let value = Arc::new(computed?);
        self.cache.insert(key, value.clone());
        Ok(value)
    }

    fn pow_product_uncached(&self, j: usize, i: usize, k: u32, l: u32, ctx: &mut MulCtx) -> Result<Polynomial> {
        if k == 1 && l == 1 {
            return Ok(self.relation_polynomial(j, i));
        }
        let mut acc = Polynomial::zero();
        if l > 1 {
            // a_j^k a_i^l = (a_j^k a_i^{l-1}) · a_i
            let p = self.pow_product(j, i, k, l - 1, ctx)?;
            for (c, m) in p.terms() {
                let mut w = word_of_monomial(m);
                push_block(&mut w, i, 1);
                let nf = self.word_normal_form(c.clone(), w, ctx)?;
                acc = acc.add(&nf, self)?;
            }
        } else {
            // k > 1: a_j^k a_i = a_j^{k-1} · (a_j a_i)
            let r = self.relation_polynomial(j, i);
            for (c, m) in r.terms() {
                let mut w: Word = vec![(j, k - 1)];
                append_monomial(&mut w, m);
                let nf = self.word_normal_form(c.clone(), w, ctx)?;
                acc = acc.add(&nf, self)?;
            }
        }
        Ok(acc)
    }

    /// Product of two polynomials in PBW normal form.
    pub fn multiply(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        f.mul(g, self)
    }

    /// Checks the solvability conditions: every `λ_ji` nonzero, every tail
    /// leading monomial below `a_i a_j`, and associativity on generator
    /// triples (the diamond check `(a_k a_j) a_i = a_k (a_j a_i)`).
    pub fn check_solvable(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let mut keys: Vec<&(usize, usize)> = self.relations.keys().collect();
        keys.sort();
        for &&(j, i) in &keys {
            let (scalar, tail) = &self.relations[&(j, i)];
            let label = format!("{}*{}", self.names[j], self.names[i]);
            if scalar.is_zero() {
                report.fail(format!("relation {label}: λ_ji must be nonzero"));
            }
            if !tail.is_zero() {
                let product = self.generator_monomial(i).mul(&self.generator_monomial(j));
                let (_, lm) = tail.leading().expect("nonzero tail");
                match self.compare_monomials(lm, &product) {
                    Ok(Ordering::Less) => {}
                    Ok(_) => report.fail(format!(
                        "relation {label}: tail leading monomial must be below {}",
                        Polynomial::monomial(self.field.one(), product.clone()).render(self)
                    )),
                    Err(e) => report.fail(format!("relation {label}: {e}")),
                }
            }
        }
        let n = self.generator_count();
        for k in 2..n {
            for j in 1..k {
                for i in 0..j {
                    let ai = self.generator_polynomial(i);
                    let aj = self.generator_polynomial(j);
                    let ak = self.generator_polynomial(k);
                    let left = self
                        .multiply(&ak, &aj)
                        .and_then(|kj| self.multiply(&kj, &ai));
                    let right = self
                        .multiply(&aj, &ai)
                        .and_then(|ji| self.multiply(&ak, &ji));
                    match (left, right) {
                        (Ok(l), Ok(r)) => {
                            if l != r {
                                report.fail(format!(
                                    "associativity fails on ({}, {}, {}): ({} vs {})",
                                    self.names[k],
                                    self.names[j],
                                    self.names[i],
                                    l.render(self),
                                    r.render(self)
                                ));
                            }
                        }
                        _ => report.fail(format!(
                            "normalization diverged on the triple ({}, {}, {})",
                            self.names[k], self.names[j], self.names[i]
                        )),
                    }
                }
            }
        }
        report
    }

    /// Checks gradedness: every tail monomial of `f_ji` has weighted degree
    /// `d(a_i) + d(a_j)`.
    pub fn check_graded(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let mut keys: Vec<&(usize, usize)> = self.relations.keys().collect();
        keys.sort();
        for &&(j, i) in &keys {
            let (_, tail) = &self.relations[&(j, i)];
            let expected = self.weights[i] + self.weights[j];
            for (_, m) in tail.terms() {
                let d = m.weighted_degree(&self.weights);
                if d != expected {
                    report.fail(format!(
                        "relation {}*{}: tail monomial of degree {} breaks the degree-{} grading",
                        self.names[j], self.names[i], d, expected
                    ));
                }
            }
        }
        report
    }

    /// Both checks combined.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.check_solvable();
        report.merge(self.check_graded());
        report
    }
}
