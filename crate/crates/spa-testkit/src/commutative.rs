//! A self-contained textbook commutative Buchberger implementation, used as
//! an oracle. Polynomials are exponent-vector maps; nothing here touches the
//! crate's normal-form engine or module machinery.

use std::collections::BTreeMap;

use spa_core::Coefficient;

pub type Exp = Vec<u32>;

/// Sparse commutative polynomial keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoly {
    pub terms: BTreeMap<Exp, Coefficient>,
}

/// Degree-lexicographic comparison; `precedence` lists variables from lowest
/// to highest.
pub fn deglex(a: &Exp, b: &Exp, precedence: &[usize]) -> std::cmp::Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for &v in precedence.iter().rev() {
            match a[v].cmp(&b[v]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    })
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: Vec<(Coefficient, Exp)>) -> Self {
        let mut out = CPoly::zero();
        for (c, e) in terms {
            out.insert(c, e);
        }
        out
    }

    pub fn insert(&mut self, c: Coefficient, e: Exp) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old.checked_add(&c).unwrap();
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self, precedence: &[usize]) -> (Exp, Coefficient) {
        let (e, c) = self
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| deglex(a, b, precedence))
            .expect("nonzero polynomial");
        (e.clone(), c.clone())
    }

    pub fn scale_mono(&self, c: &Coefficient, e: &Exp) -> CPoly {
        let mut out = CPoly::zero();
        for (te, tc) in &self.terms {
            let prod: Exp = te.iter().zip(e).map(|(&a, &b)| a + b).collect();
            out.insert(tc.checked_mul(c).unwrap(), prod);
        }
        out
    }

    pub fn sub(&self, other: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(c.neg(), e.clone());
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod: Exp = ea.iter().zip(eb).map(|(&a, &b)| a + b).collect();
                out.insert(ca.checked_mul(cb).unwrap(), prod);
            }
        }
        out
    }
}

fn divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

fn quotient(a: &Exp, b: &Exp) -> Exp {
    b.iter().zip(a).map(|(&y, &x)| y - x).collect()
}

fn lcm(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// Total-reduction normal form.
pub fn normal_form(f: &CPoly, basis: &[CPoly], precedence: &[usize]) -> CPoly {
    let mut work = f.clone();
    let mut remainder = CPoly::zero();
    let leads: Vec<(Exp, Coefficient)> = basis.iter().map(|g| g.leading(precedence)).collect();
    while !work.is_zero() {
        let (we, wc) = work.leading(precedence);
        match leads.iter().position(|(le, _)| divides(le, &we)) {
            Some(k) => {
                let q = quotient(&leads[k].0, &we);
                let factor = wc.checked_div(&leads[k].1).unwrap();
                work = work.sub(&basis[k].scale_mono(&factor, &q));
            }
            None => {
                remainder.insert(wc.clone(), we.clone());
                let mut lead = CPoly::zero();
                lead.insert(wc, we);
                work = work.sub(&lead);
            }
        }
    }
    remainder
}

/// Buchberger's algorithm; returns the reduced (minimal, monic, tail-reduced)
/// basis.
pub fn buchberger(generators: &[CPoly], precedence: &[usize]) -> Vec<CPoly> {
    let mut basis: Vec<CPoly> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ei, ci) = basis[i].leading(precedence);
        let (ej, cj) = basis[j].leading(precedence);
        let l = lcm(&ei, &ej);
        let si = basis[i].scale_mono(&ci.checked_inv().unwrap(), &quotient(&ei, &l));
        let sj = basis[j].scale_mono(&cj.checked_inv().unwrap(), &quotient(&ej, &l));
        let s = si.sub(&sj);
        let r = normal_form(&s, &basis, precedence);
        if !r.is_zero() {
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
        }
    }
    // Minimalize and reduce.
    let mut kept: Vec<CPoly> = Vec::new();
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| deglex(&basis[a].leading(precedence).0, &basis[b].leading(precedence).0, precedence));
    for k in order {
        let lm = basis[k].leading(precedence).0;
        if !kept.iter().any(|g: &CPoly| divides(&g.leading(precedence).0, &lm)) {
            kept.push(basis[k].clone());
        }
    }
    let snapshot = kept.clone();
    for (k, g) in kept.iter_mut().enumerate() {
        let others: Vec<CPoly> =
            snapshot.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, h)| h.clone()).collect();
        if !others.is_empty() {
            *g = normal_form(g, &others, precedence);
        }
        let lc = g.leading(precedence).1;
        *g = g.scale_mono(&lc.checked_inv().unwrap(), &vec![0; field_arity(g)]);
    }
    kept
}

fn field_arity(p: &CPoly) -> usize {
    p.terms.keys().next().map_or(0, |e| e.len())
}

/// Leading monomials of the reduced basis, sorted — the canonical signature
/// compared against the module engine.
pub fn reduced_lm_set(generators: &[CPoly], precedence: &[usize]) -> Vec<Exp> {
    let mut lms: Vec<Exp> = buchberger(generators, precedence)
        .iter()
        .map(|g| g.leading(precedence).0)
        .collect();
    lms.sort();
    lms
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(n: i64) -> Coefficient {
        spa_core::FieldSpec::Rationals.integer(n)
    }

    #[test]
    fn textbook_example() {
        // x-major deglex in K[x, y]: <x^2, xy + y^2> closes with y^3.
        let precedence = vec![1usize, 0];
        let g1 = CPoly::from_terms(vec![(qq(1), vec![2, 0])]);
        let g2 = CPoly::from_terms(vec![(qq(1), vec![1, 1]), (qq(1), vec![0, 2])]);
        let lms = reduced_lm_set(&[g1, g2], &precedence);
        assert_eq!(lms, vec![vec![0, 3], vec![1, 1], vec![2, 0]]);
    }
}
