//! Graded Betti numbers of a commutative monomial quotient `M = A/I` by
//! row-reducing the graded strands of the Koszul complex `K(x_1,…,x_n) ⊗ M`
//! over the base field: `β_{i,j} = dim_K H_i(K ⊗ M)_j`. Independent of the
//! resolution pipeline; needs only monomial divisibility and exact ranks.

use std::collections::BTreeMap;

use spa_core::{FieldSpec, Monomial};

use crate::linalg;
use crate::monomials_of_degree;

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.divides(b)
}

fn in_ideal(m: &Monomial, ideal: &[Monomial]) -> bool {
    ideal.iter().any(|g| divides(g, m))
}

/// Subsets of `{0..n}` of size `k`, each sorted ascending.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Basis of the degree-`j` strand of `Λ^i ⊗ M`: pairs (subset, monomial ∉ I).
fn strand_basis(n: usize, i: usize, j: u64, ideal: &[Monomial]) -> Vec<(Vec<usize>, Monomial)> {
    let mut basis = Vec::new();
    if (i as u64) > j {
        return basis;
    }
    let weights = vec![1u64; n];
    for s in subsets(n, i) {
        for m in monomials_of_degree(&weights, j - i as u64) {
            if !in_ideal(&m, ideal) {
                basis.push((s.clone(), m));
            }
        }
    }
    basis
}

/// Matrix of the Koszul differential `∂_i` on the degree-`j` strand.
fn differential(
    n: usize,
    i: usize,
    j: u64,
    ideal: &[Monomial],
    field: &FieldSpec,
) -> (Vec<Vec<spa_core::Coefficient>>, usize, usize) {
    let domain = strand_basis(n, i, j, ideal);
    let codomain = strand_basis(n, i - 1, j, ideal);
    let index: BTreeMap<(Vec<usize>, Vec<u32>), usize> = codomain
        .iter()
        .enumerate()
        .map(|(k, (s, m))| ((s.clone(), m.exponents().to_vec()), k))
        .collect();
    // Rows = codomain, columns = domain.
    let mut matrix = vec![vec![field.zero(); domain.len()]; codomain.len()];
    for (col, (s, m)) in domain.iter().enumerate() {
        for (pos, &var) in s.iter().enumerate() {
            let target = m.mul(&Monomial::generator(n, var));
            if in_ideal(&target, ideal) {
                continue;
            }
            let mut rest = s.clone();
            rest.remove(pos);
            let row = index[&(rest, target.exponents().to_vec())];
            let sign = if pos % 2 == 0 { field.one() } else { field.one().neg() };
            matrix[row][col] = sign;
        }
    }
    (matrix, domain.len(), codomain.len())
}

/// `β_{i,j}` for `0 ≤ i ≤ n`, as one sorted shift multiset per homological
/// index, scanning degrees `j ≤ bound`. Trailing all-zero rows are trimmed.
pub fn betti_table(n: usize, ideal: &[Monomial], field: &FieldSpec, bound: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 0..=n {
        let mut shifts = Vec::new();
        for j in 0..=bound {
            let dim_i = strand_basis(n, i, j, ideal).len();
            let rank_in = if i == 0 {
                0
            } else {
                let (m, _, _) = differential(n, i, j, ideal, field);
                linalg::rank(&m)
            };
            let rank_out = {
                let (m, _, _) = differential(n, i + 1, j, ideal, field);
                linalg::rank(&m)
            };
            let betti = dim_i - rank_in - rank_out;
            for _ in 0..betti {
                shifts.push(j);
            }
        }
        rows.push(shifts);
    }
    while rows.len() > 1 && rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    rows
}
