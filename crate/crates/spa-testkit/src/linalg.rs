//! Exact dense linear algebra over the coefficient field, for the oracles
//! that row-reduce graded pieces.

use spa_core::{Coefficient, FieldSpec};

/// Row-echelon reduction in place; returns the pivot columns.
fn echelonize(rows: &mut Vec<Vec<Coefficient>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let width = rows[0].len();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&p| !rows[p][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].checked_inv().unwrap();
        for entry in rows[r].iter_mut() {
            *entry = entry.checked_mul(&inv).unwrap();
        }
        for p in 0..rows.len() {
            if p != r && !rows[p][c].is_zero() {
                let factor = rows[p][c].clone();
                for col in 0..width {
                    let delta = factor.checked_mul(&rows[r][col]).unwrap();
                    rows[p][col] = rows[p][col].checked_sub(&delta).unwrap();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<Coefficient>]) -> usize {
    let mut rows = matrix.to_vec();
    echelonize(&mut rows).len()
}

/// A basis of `{x : matrix · x = 0}` (matrix rows are equations).
pub fn nullspace(matrix: &[Vec<Coefficient>], width: usize, field: &FieldSpec) -> Vec<Vec<Coefficient>> {
    let mut rows: Vec<Vec<Coefficient>> = matrix.to_vec();
    for row in &rows {
        assert_eq!(row.len(), width);
    }
    let pivots = echelonize(&mut rows);
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); width];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(n: i64) -> Coefficient {
        FieldSpec::Rationals.integer(n)
    }

    #[test]
    fn rank_and_kernel_of_a_singular_matrix() {
        let m = vec![vec![qq(1), qq(2), qq(3)], vec![qq(2), qq(4), qq(6)], vec![qq(0), qq(1), qq(1)]];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3, &FieldSpec::Rationals);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let mut acc = qq(0);
            for (a, b) in row.iter().zip(&ns[0]) {
                acc = acc.checked_add(&a.checked_mul(b).unwrap()).unwrap();
            }
            assert!(acc.is_zero());
        }
    }
}
