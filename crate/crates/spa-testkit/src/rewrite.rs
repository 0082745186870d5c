//! A deliberately naive normal-form engine: flatten monomials to sequences of
//! single generators and rewrite one adjacent inversion at a time through the
//! relation table, with no memoization and no power-block shortcuts.

use spa_core::{Coefficient, Monomial, Polynomial, SolvableAlgebra};

fn flatten(m: &Monomial) -> Vec<usize> {
    let mut word = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        for _ in 0..e {
            word.push(i);
        }
    }
    word
}

fn monomial_of(word: &[usize], arity: usize) -> Monomial {
    let mut exps = vec![0u32; arity];
    for &g in word {
        exps[g] += 1;
    }
    Monomial::new(exps)
}

/// Normal form of `a^alpha · a^beta` by single-step rewriting.
pub fn naive_normal_form(
    algebra: &SolvableAlgebra,
    alpha: &Monomial,
    beta: &Monomial,
) -> Polynomial {
    let arity = algebra.generator_count();
    let mut word = flatten(alpha);
    word.extend(flatten(beta));
    let mut stack: Vec<(Coefficient, Vec<usize>)> = vec![(algebra.field().one(), word)];
    let mut result = Polynomial::zero();
    while let Some((c, w)) = stack.pop() {
        match (0..w.len().saturating_sub(1)).find(|&p| w[p] > w[p + 1]) {
            None => {
                let term = Polynomial::monomial(c, monomial_of(&w, arity));
                result = result.add(&term, algebra).unwrap();
            }
            Some(p) => {
                let (j, i) = (w[p], w[p + 1]);
                let (scalar, tail) = algebra.relation(j, i);
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                stack.push((c.checked_mul(&scalar).unwrap(), swapped));
                for (tc, tm) in tail.terms() {
                    let mut replaced = w[..p].to_vec();
                    replaced.extend(flatten(tm));
                    replaced.extend_from_slice(&w[p + 2..]);
                    stack.push((c.checked_mul(tc).unwrap(), replaced));
                }
            }
        }
    }
    result
}
