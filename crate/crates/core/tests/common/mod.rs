//! Shared instance generators for the test batteries: random sparse
//! brackets, exact solutions of the antisymmetry + Leibniz linear system,
//! and targeted mutation families with checker-verified classification.

// not every test target uses every generator
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use precy_core::fixtures;
use precy_core::linalg;
use precy_core::scalar::Scalar;
use precy_core::{AssocAlgebra, DoubleBracket};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-4i64..=4);
    let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
    Scalar::ratio(if num == 0 { 1 } else { num }, den)
}

/// Arbitrary sparse bracket with up to `max_entries` nonzero coefficients.
pub fn random_sparse_bracket(
    alg: &Arc<AssocAlgebra>,
    rng: &mut ChaCha8Rng,
    max_entries: usize,
) -> DoubleBracket {
    let n = alg.dim();
    let mut entries = BTreeMap::new();
    let count = rng.gen_range(1..=max_entries.max(1));
    for _ in 0..count {
        let key = [
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        ];
        entries.insert(key, small_scalar(rng));
    }
    DoubleBracket::new(Arc::clone(alg), entries).expect("indices in range")
}

/// Random bracket antisymmetrized by construction:
/// `D := T − twist(T)` for random sparse `T`.
pub fn random_antisymmetric_bracket(
    alg: &Arc<AssocAlgebra>,
    rng: &mut ChaCha8Rng,
    max_entries: usize,
) -> DoubleBracket {
    let raw = random_sparse_bracket(alg, rng, max_entries);
    let mut entries: BTreeMap<[usize; 4], Scalar> = BTreeMap::new();
    let mut add = |key: [usize; 4], v: Scalar| {
        if v.is_zero() {
            return;
        }
        let slot = entries.entry(key).or_insert_with(Scalar::zero);
        *slot += &v;
        if slot.is_zero() {
            entries.remove(&key);
        }
    };
    for (&[i, j, k, l], v) in raw.entries() {
        add([i, j, k, l], v.clone());
        add([j, i, l, k], -v);
    }
    DoubleBracket::new(Arc::clone(alg), entries).expect("indices in range")
}

/// Exact basis of the solution space of the linear system
/// "antisymmetry + outer Leibniz" over the `dim^4` bracket coefficients.
pub fn leibniz_kernel(alg: &AssocAlgebra) -> Vec<Vec<Scalar>> {
    let n = alg.dim();
    let unknowns = n * n * n * n;
    let flat = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // antisymmetry: D[i,j,k,l] + D[j,i,l,k] = 0
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let mut row = precy_core::scalar::zero_vec(unknowns);
                    row[flat(i, j, k, l)] += &Scalar::one();
                    row[flat(j, i, l, k)] += &Scalar::one();
                    rows.push(row);
                }
            }
        }
    }
    // outer Leibniz, componentwise at (p, q):
    // Σ_m c_{jk}^m D[i,m,p,q] − Σ_m D[i,k,m,q] c_{jm}^p − Σ_m D[i,j,p,m] c_{mk}^q
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        let mut row = precy_core::scalar::zero_vec(unknowns);
                        for m in 0..n {
                            let c = alg.constant(j, k, m);
                            if !c.is_zero() {
                                row[flat(i, m, p, q)] += c;
                            }
                            let c = alg.constant(j, m, p);
                            if !c.is_zero() {
                                row[flat(i, k, m, q)] -= c;
                            }
                            let c = alg.constant(m, k, q);
                            if !c.is_zero() {
                                row[flat(i, j, p, m)] -= c;
                            }
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    linalg::kernel_basis(&rows)
}

/// Random rational combination of kernel basis vectors as a bracket.
pub fn bracket_from_kernel_sample(
    alg: &Arc<AssocAlgebra>,
    basis: &[Vec<Scalar>],
    rng: &mut ChaCha8Rng,
) -> DoubleBracket {
    let n = alg.dim();
    let unknowns = n * n * n * n;
    let mut coeffs = precy_core::scalar::zero_vec(unknowns);
    for v in basis {
        let weight = Scalar::from_int(rng.gen_range(-3i64..=3));
        if weight.is_zero() {
            continue;
        }
        for (slot, x) in coeffs.iter_mut().zip(v) {
            let t = x * &weight;
            *slot += &t;
        }
    }
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = coeffs[((i * n + j) * n + k) * n + l].clone();
                    if !v.is_zero() {
                        entries.insert([i, j, k, l], v);
                    }
                }
            }
        }
    }
    DoubleBracket::new(Arc::clone(alg), entries).expect("indices in range")
}

/// Brackets supported on `[[1, e_i]]` (with the antisymmetric partner on
/// `[[e_i, 1]]`): these violate the Leibniz rule whenever nonzero, and many
/// of them still satisfy the double Jacobi identity. The caller filters
/// with the axiom checkers.
pub fn unit_coupling_bracket(
    alg: &Arc<AssocAlgebra>,
    unit_index: usize,
    rng: &mut ChaCha8Rng,
) -> DoubleBracket {
    let n = alg.dim();
    assert!(n >= 2, "unit coupling needs a second basis element");
    let mut entries: BTreeMap<[usize; 4], Scalar> = BTreeMap::new();
    let mut add = |key: [usize; 4], v: Scalar| {
        if v.is_zero() {
            return;
        }
        let slot = entries.entry(key).or_insert_with(Scalar::zero);
        *slot += &v;
        if slot.is_zero() {
            entries.remove(&key);
        }
    };
    let i = loop {
        let i = rng.gen_range(0..n);
        if i != unit_index {
            break i;
        }
    };
    for _ in 0..rng.gen_range(1..=2) {
        let (k, l) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let v = small_scalar(rng);
        add([unit_index, i, k, l], v.clone());
        add([i, unit_index, l, k], -v);
    }
    DoubleBracket::new(Arc::clone(alg), entries).expect("indices in range")
}

/// How an instance scores against the axiom checkers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomProfile {
    pub antisymmetry: bool,
    pub leibniz: bool,
    pub jacobi: bool,
}

impl AxiomProfile {
    pub fn of(d: &DoubleBracket) -> Self {
        AxiomProfile {
            antisymmetry: d.check_antisymmetry().pass,
            leibniz: d.check_leibniz_outer().pass,
            jacobi: d.check_double_jacobi().pass,
        }
    }

    pub fn all(&self) -> bool {
        self.antisymmetry && self.leibniz && self.jacobi
    }

    pub fn is_leibniz_only_mutation(&self) -> bool {
        self.antisymmetry && !self.leibniz && self.jacobi
    }

    pub fn is_jacobi_only_mutation(&self) -> bool {
        self.antisymmetry && self.leibniz && !self.jacobi
    }
}

/// The dimension-2 and dimension-3 algebras used by the batteries.
pub fn battery_algebras() -> Vec<Arc<AssocAlgebra>> {
    vec![
        Arc::new(fixtures::dual_numbers()),
        Arc::new(fixtures::k_times_k()),
        Arc::new(fixtures::truncated_poly3()),
        Arc::new(fixtures::upper_triangular2()),
    ]
}

/// A supply of checker-verified valid brackets across the battery algebras.
pub fn valid_brackets() -> Vec<(Arc<AssocAlgebra>, DoubleBracket)> {
    let mut out = Vec::new();
    for alg in battery_algebras() {
        out.push((Arc::clone(&alg), fixtures::zero_bracket(&alg)));
    }
    let dual = Arc::new(fixtures::dual_numbers());
    for gamma in [1i64, -1, 2, -2, 3, 5, -7, 9] {
        let mut entries = BTreeMap::new();
        entries.insert([1, 1, 1, 0], Scalar::from_int(gamma));
        entries.insert([1, 1, 0, 1], Scalar::from_int(-gamma));
        out.push((
            Arc::clone(&dual),
            DoubleBracket::new(Arc::clone(&dual), entries).unwrap(),
        ));
    }
    let trunc = Arc::new(fixtures::truncated_poly3());
    for a in [1i64, -1, 2, -3, 4, 6, -8, 10] {
        out.push((
            Arc::clone(&trunc),
            fixtures::truncated_poly3_bracket(&trunc, a, 0, 0),
        ));
    }
    for (_alg, d) in &out {
        assert!(AxiomProfile::of(d).all(), "valid supply must verify");
    }
    out
}

/// Sorts of a witness tuple, recovered from the rendered labels
/// (dual labels carry a `*` suffix).
pub fn witness_sorts(labels: &[String]) -> Vec<char> {
    labels
        .iter()
        .map(|l| if l.ends_with('*') { 'D' } else { 'A' })
        .collect()
}
