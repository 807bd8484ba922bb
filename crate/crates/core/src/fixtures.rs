//! Built-in example algebras and brackets. The same objects are shipped as
//! JSON fixtures for the command-line tool; these constructors are the
//! single source of truth for both.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::AssocAlgebra;
use crate::bracket::DoubleBracket;
use crate::scalar::Scalar;

fn build(
    name: &str,
    basis: &[&str],
    entries: &[(usize, usize, usize, i64)],
    unit: Option<Vec<i64>>,
) -> AssocAlgebra {
    let mut constants = BTreeMap::new();
    for &(i, j, k, c) in entries {
        constants.insert((i, j, k), Scalar::from_int(c));
    }
    AssocAlgebra::new(
        name,
        basis.iter().map(|s| s.to_string()).collect(),
        &constants,
        unit.map(|u| u.into_iter().map(Scalar::from_int).collect()),
    )
    .expect("fixture algebras are well-formed")
}

/// The ground field as a one-dimensional algebra.
pub fn scalars() -> AssocAlgebra {
    build("scalars", &["1"], &[(0, 0, 0, 1)], Some(vec![1]))
}

/// Dual numbers `Q[x]/(x^2)`, basis (1, x).
pub fn dual_numbers() -> AssocAlgebra {
    build(
        "dual-numbers",
        &["1", "x"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        Some(vec![1, 0]),
    )
}

/// The split algebra `Q × Q`, basis of orthogonal idempotents.
pub fn k_times_k() -> AssocAlgebra {
    build(
        "k-times-k",
        &["e1", "e2"],
        &[(0, 0, 0, 1), (1, 1, 1, 1)],
        Some(vec![1, 1]),
    )
}

/// Upper-triangular 2x2 matrices, basis (e11, e12, e22).
pub fn upper_triangular2() -> AssocAlgebra {
    build(
        "upper-triangular2",
        &["e11", "e12", "e22"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
        Some(vec![1, 0, 1]),
    )
}

/// Truncated polynomials `Q[x]/(x^3)`, basis (1, x, x^2). Used by the test
/// batteries as a dimension-3 algebra with a rich bracket family.
pub fn truncated_poly3() -> AssocAlgebra {
    build(
        "truncated-poly3",
        &["1", "x", "x2"],
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
        Some(vec![1, 0, 0]),
    )
}

/// The four algebras shipped as JSON fixtures.
pub fn bundled_algebras() -> Vec<AssocAlgebra> {
    vec![scalars(), dual_numbers(), k_times_k(), upper_triangular2()]
}

/// The zero bracket on any algebra.
pub fn zero_bracket(alg: &Arc<AssocAlgebra>) -> DoubleBracket {
    DoubleBracket::new(Arc::clone(alg), BTreeMap::new()).expect("zero bracket is well-formed")
}

/// The nontrivial bracket on the dual numbers: `[[x, x]] = x⊗1 − 1⊗x`.
pub fn dual_numbers_bracket(alg: &Arc<AssocAlgebra>) -> DoubleBracket {
    let mut entries = BTreeMap::new();
    entries.insert([1, 1, 1, 0], Scalar::one());
    entries.insert([1, 1, 0, 1], -Scalar::one());
    DoubleBracket::new(Arc::clone(alg), entries).expect("bracket is well-formed")
}

/// Antisymmetric, Leibniz-compatible bracket family on `Q[x]/(x^3)`:
/// `[[x, x]] = a (x⊗1 − 1⊗x) + b (x²⊗1 − 1⊗x²) + d (x²⊗x − x⊗x²)`,
/// propagated to the other basis pairs by the Leibniz rule. The double
/// Jacobi identity holds exactly on the `a`-axis.
pub fn truncated_poly3_bracket(alg: &Arc<AssocAlgebra>, a: i64, b: i64, d: i64) -> DoubleBracket {
    let a = Scalar::from_int(a);
    let b = Scalar::from_int(b);
    let d = Scalar::from_int(d);
    let mut entries: BTreeMap<[usize; 4], Scalar> = BTreeMap::new();
    let mut add = |i: usize, j: usize, k: usize, l: usize, c: Scalar| {
        if c.is_zero() {
            return;
        }
        let slot = entries.entry([i, j, k, l]).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            entries.remove(&[i, j, k, l]);
        }
    };
    // [[x, x]]
    add(1, 1, 1, 0, a.clone());
    add(1, 1, 0, 1, -&a);
    add(1, 1, 2, 0, b.clone());
    add(1, 1, 0, 2, -&b);
    add(1, 1, 2, 1, d.clone());
    add(1, 1, 1, 2, -&d);
    // [[x, x2]] = x[[x,x]] + [[x,x]]x
    add(1, 2, 2, 0, a.clone());
    add(1, 2, 0, 2, -&a);
    add(1, 2, 2, 1, b.clone());
    add(1, 2, 1, 2, -&b);
    // [[x2, x]] = −[[x, x2]] twisted (equals [[x, x2]] here)
    add(2, 1, 2, 0, a.clone());
    add(2, 1, 0, 2, -&a);
    add(2, 1, 2, 1, b.clone());
    add(2, 1, 1, 2, -&b);
    // [[x2, x2]] = x[[x2,x]] + [[x2,x]]x
    add(2, 2, 2, 1, a.clone());
    add(2, 2, 1, 2, -&a);
    DoubleBracket::new(Arc::clone(alg), entries).expect("bracket is well-formed")
}
