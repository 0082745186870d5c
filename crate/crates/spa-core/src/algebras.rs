//! Ready-made algebras: commutative rings, quantum affine spaces, the
//! coordinate ring of quantum 2x2 matrices, and a weighted enveloping-type
//! algebra with a nontrivial tail. Handy for tests and as construction
//! templates.

use crate::algebra::{Monomial, OrderingFamily, OrderingSpec, RelationSpec, SolvableAlgebra};
use crate::error::Result;
use crate::scalar::{Coefficient, FieldSpec};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `K[x_1, …, x_n]`, weights 1, deglex in declaration order.
pub fn commutative_ring(vars: &[&str], field: FieldSpec) -> Result<SolvableAlgebra> {
    let n = vars.len();
    SolvableAlgebra::commutative(
        names(vars),
        vec![1; n],
        field,
        OrderingSpec::default_for(OrderingFamily::DegLex, n),
    )
}

/// Quantum affine n-space: `a_j a_i = λ_ji a_i a_j` with the given scalars,
/// one per pair `(j, i)` with `j > i` in lexicographic pair order
/// `(1,0), (2,0), (2,1), (3,0), …`.
pub fn quantum_affine_space(
    vars: &[&str],
    field: FieldSpec,
    lambdas: &[Coefficient],
) -> Result<SolvableAlgebra> {
    let n = vars.len();
    let mut relations = Vec::new();
    let mut next = 0;
    for j in 1..n {
        for i in 0..j {
            relations.push(RelationSpec::quasi(j, i, lambdas[next].clone()));
            next += 1;
        }
    }
    SolvableAlgebra::new(
        names(vars),
        vec![1; n],
        field,
        OrderingSpec::default_for(OrderingFamily::DegLex, n),
        relations,
    )
}

/// The quantum plane `K_q[x, y]`, `y x = q x y`.
pub fn quantum_plane(field: FieldSpec, q: Coefficient) -> Result<SolvableAlgebra> {
    quantum_affine_space(&["x", "y"], field, &[q])
}

/// The coordinate ring `M_q(2) = K[a, b, c, d]` of quantum 2x2 matrices:
///
/// ```text
/// ba = q ab,        ca = ac,                      cb = q bc,
/// da = q^{-1} ad,   db = bd - (q - q^{-1}) ac,    dc = q cd,
/// ```
///
/// with every generator of degree 1 (the pair `{a, c}` is the commuting
/// antidiagonal, `{b, d}` the quantum-determinant diagonal). The deformation
/// parameter is a concrete field element.
pub fn quantum_matrix_2x2(field: FieldSpec, q: Coefficient) -> Result<SolvableAlgebra> {
    let q_inv = q.checked_inv()?;
    let one = field.one();
    // -(q - q^{-1})
    let tail_coeff = q.checked_sub(&q_inv)?.neg();
    let ac = Monomial::new(vec![1, 0, 1, 0]);
    let relations = vec![
        RelationSpec::quasi(1, 0, q.clone()),                      // b a
        RelationSpec::quasi(2, 0, one.clone()),                    // c a
        RelationSpec::quasi(2, 1, q.clone()),                      // c b
        RelationSpec::quasi(3, 0, q_inv),                          // d a
        RelationSpec { higher: 3, lower: 1, scalar: one, tail: vec![(tail_coeff, ac)] }, // d b
        RelationSpec::quasi(3, 2, q),                              // d c
    ];
    SolvableAlgebra::new(
        names(&["a", "b", "c", "d"]),
        vec![1; 4],
        field,
        OrderingSpec::default_for(OrderingFamily::DegLex, 4),
        relations,
    )
}

/// A weighted graded enveloping-type algebra on `x, y, z` with weights
/// `(1, 1, 2)` and the single noncommutative relation `z y = y z + x^3`.
pub fn weighted_heisenberg(field: FieldSpec) -> Result<SolvableAlgebra> {
    let relations = vec![RelationSpec {
        higher: 2,
        lower: 1,
        scalar: field.one(),
        tail: vec![(field.one(), Monomial::new(vec![3, 0, 0]))],
    }];
    SolvableAlgebra::new(
        names(&["x", "y", "z"]),
        vec![1, 1, 2],
        field,
        OrderingSpec::default_for(OrderingFamily::DegLex, 3),
        relations,
    )
}
