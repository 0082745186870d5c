//! Sparse polynomials over a solvable polynomial algebra.
//!
//! A polynomial is a term sequence `(coefficient, monomial)` kept strictly
//! descending under the algebra's ordering, with no zero coefficients and no
//! duplicate monomials; the empty sequence is 0. Every constructor restores
//! this canonical form, so leading-term access is O(1).

use std::cmp::Ordering;

use crate::algebra::monomial::Monomial;
use crate::algebra::SolvableAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(Coefficient, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Coefficient, arity: usize) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, Monomial::one(arity))] }
        }
    }

    pub fn monomial(c: Coefficient, m: Monomial) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(c, m)] }
        }
    }

    /// Builds the canonical form from an arbitrary term list: sorts descending,
    /// merges duplicates, drops zeros.
    pub fn from_terms(
        terms: Vec<(Coefficient, Monomial)>,
        algebra: &SolvableAlgebra,
    ) -> Result<Polynomial> {
        let mut terms = terms;
        for (c, m) in &terms {
            if m.arity() != algebra.generator_count() {
                return Err(Error::ArityError { expected: algebra.generator_count(), got: m.arity() });
            }
            if !algebra.field().contains(c) {
                return Err(Error::FieldMismatch);
            }
        }
        let mut cmp_err = None;
        terms.sort_by(|a, b| match algebra.compare_monomials(&b.1, &a.1) {
            Ok(ord) => ord,
            Err(e) => {
                cmp_err.get_or_insert(e);
                Ordering::Equal
            }
        });
        if let Some(e) = cmp_err {
            return Err(e);
        }
        let mut out: Vec<(Coefficient, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Ok(Polynomial { terms: out })
    }

    pub fn terms(&self) -> &[(Coefficient, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading coefficient and monomial; the zero polynomial has neither.
    pub fn leading(&self) -> Result<(&Coefficient, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    /// `Some(c)` when the polynomial is the nonzero constant `c`.
    pub fn as_constant(&self) -> Option<&Coefficient> {
        match self.terms.as_slice() {
            [(c, m)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(tc, m)| (tc.mul(c), m.clone())).collect() }
    }

    /// Sum, by merging the two descending term sequences.
    pub fn add(&self, other: &Polynomial, algebra: &SolvableAlgebra) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match algebra.compare_monomials(ma, mb)? {
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
        Ok(Polynomial { terms: out })
    }

    pub fn sub(&self, other: &Polynomial, algebra: &SolvableAlgebra) -> Result<Polynomial> {
        self.add(&other.neg(), algebra)
    }

    /// Product in the algebra, normalized into the PBW basis.
    pub fn mul(&self, other: &Polynomial, algebra: &SolvableAlgebra) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let prod = algebra.normalize_product(ma, mb)?;
                acc = acc.add(&prod.scale(&ca.mul(cb)), algebra)?;
            }
        }
        Ok(acc)
    }

    /// Weighted degree `d(f) = max d(a^{α(i)})`; undefined for 0.
    pub fn weighted_degree(&self, algebra: &SolvableAlgebra) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self
            .terms
            .iter()
            .map(|(_, m)| m.weighted_degree(algebra.weights()))
            .max()
            .unwrap())
    }

    /// True when every term has the same weighted degree (vacuously for 0).
    pub fn is_homogeneous(&self, algebra: &SolvableAlgebra) -> bool {
        let mut degs = self.terms.iter().map(|(_, m)| m.weighted_degree(algebra.weights()));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Renders with `*` and `^`, terms in descending order, e.g.
    /// `2*x^2*y + 1/3*y^3`.
    pub fn render(&self, algebra: &SolvableAlgebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let (sign_negative, magnitude) = (c.is_negative(), c.abs());
            if k == 0 {
                if sign_negative {
                    out.push('-');
                }
            } else if sign_negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || m.is_one() {
                factors.push(magnitude.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(algebra.generator_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", algebra.generator_name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
