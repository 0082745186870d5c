//! Test-only oracles and generators for exercising `spa-core`.
//!
//! Everything here is deliberately independent of the implementation paths it
//! checks: the rewriter applies one adjacent swap at a time with no
//! memoization, the commutative Buchberger oracle has its own polynomial
//! representation, Betti numbers come from ranks of Koszul-complex strands
//! over the base field.

pub mod commutative;
pub mod gen;
pub mod koszul;
pub mod linalg;
pub mod rewrite;

use spa_core::Monomial;

/// All exponent vectors with `Σ w_i e_i = degree`.
pub fn monomials_of_degree(weights: &[u64], degree: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; weights.len()];
    fill(weights, degree, 0, &mut exps, &mut out);
    out
}

fn fill(weights: &[u64], remaining: u64, position: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if position == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    let w = weights[position];
    let mut used = 0u64;
    let mut e = 0u32;
    while used <= remaining {
        exps[position] = e;
        fill(weights, remaining - used, position + 1, exps, out);
        e += 1;
        used += w;
    }
    exps[position] = 0;
}
