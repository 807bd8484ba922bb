//! Matrix representations of the algebra and the induced Poisson bracket on
//! coordinate functions of the representation space.

pub mod poisson;
pub mod poly;

pub use poisson::{
    check_coordinate_antisymmetry, check_gl_equivariance, check_ideal_compat_at_points,
    check_jacobi_at_points, check_restricted_polyderivation, induced_coordinate_bracket,
    poisson_eval, PointEvaluator,
};
pub use poly::{CoordPoly, Var};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::AssocAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// A point of the representation space: one `n × n` rational matrix per
/// basis element, satisfying the structure constants exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepPoint {
    pub n: usize,
    pub mats: Vec<Matrix>,
}

impl RepPoint {
    pub fn new(n: usize, mats: Vec<Matrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroMatrixSize);
        }
        for m in &mats {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: m.len(),
                });
            }
        }
        Ok(RepPoint { n, mats })
    }

    /// The zero representation of a given size.
    pub fn zero(dim: usize, n: usize) -> Self {
        RepPoint {
            n,
            mats: vec![linalg::zeros(n, n); dim],
        }
    }

    pub fn entry(&self, v: Var) -> Scalar {
        self.mats[v.basis][v.row][v.col].clone()
    }

    /// Conjugate every matrix by `g`.
    pub fn conjugated(&self, g: &Matrix, g_inv: &Matrix) -> RepPoint {
        RepPoint {
            n: self.n,
            mats: self
                .mats
                .iter()
                .map(|m| linalg::mat_mul(&linalg::mat_mul(g, m), g_inv))
                .collect(),
        }
    }
}

/// Exact homomorphism check: `X_i X_j = Σ_k c_{ij}^k X_k` for all pairs,
/// and the unit matrix is the identity when the algebra is unital.
pub fn validate_rep_point(alg: &AssocAlgebra, p: &RepPoint) -> CheckReport {
    let dim = alg.dim();
    let names = alg.basis_names();
    if p.mats.len() != dim {
        return CheckReport::fail(
            "representation-point",
            0,
            vec!["matrix count".to_string()],
            [(
                "expected".to_string(),
                format!("{dim} matrices, got {}", p.mats.len()),
            )]
            .into(),
        );
    }
    let mut checked = 0u64;
    for i in 0..dim {
        for j in 0..dim {
            checked += 1;
            let prod = linalg::mat_mul(&p.mats[i], &p.mats[j]);
            let mut expected = linalg::zeros(p.n, p.n);
            for k in 0..dim {
                let c = alg.constant(i, j, k);
                if !c.is_zero() {
                    expected = linalg::mat_add(&expected, &linalg::mat_scale(&p.mats[k], c));
                }
            }
            if prod != expected {
                let mut residual = std::collections::BTreeMap::new();
                for (r, row) in prod.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        let diff = v - &expected[r][c];
                        if !diff.is_zero() {
                            residual.insert(format!("({r},{c})"), diff.to_string());
                        }
                    }
                }
                return CheckReport::fail(
                    "representation-point",
                    checked,
                    vec![names[i].clone(), names[j].clone()],
                    residual,
                );
            }
        }
    }
    if let Some(unit) = alg.unit() {
        checked += 1;
        let mut unit_mat = linalg::zeros(p.n, p.n);
        for (k, c) in unit.iter().enumerate() {
            if !c.is_zero() {
                unit_mat = linalg::mat_add(&unit_mat, &linalg::mat_scale(&p.mats[k], c));
            }
        }
        if unit_mat != linalg::identity(p.n) {
            return CheckReport::fail(
                "representation-point",
                checked,
                vec!["unit".to_string()],
                [("unit matrix".to_string(), "is not the identity".to_string())].into(),
            );
        }
    }
    CheckReport::pass("representation-point", checked)
}

/// Random invertible integer matrix with entries in `[-3, 3]`; retries the
/// seeded generator until the determinant is nonzero.
fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let g: Matrix = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Scalar::from_int(rng.gen_range(-3i64..=3)))
                    .collect()
            })
            .collect();
        if let Ok(inv) = linalg::mat_inverse(&g) {
            return (g, inv);
        }
    }
}

/// Build `count` points of size `n` by conjugating random block-diagonal
/// combinations of the validated seeds. Fully determined by `rng_seed`.
pub fn sample_rep_points(
    alg: &AssocAlgebra,
    n: usize,
    seeds: &[RepPoint],
    count: usize,
    rng_seed: u64,
) -> Result<Vec<RepPoint>> {
    if n == 0 {
        return Err(Error::ZeroMatrixSize);
    }
    for seed in seeds {
        let report = validate_rep_point(alg, seed);
        if !report.pass {
            return Err(Error::InvalidSeed {
                reason: format!(
                    "seed of size {} fails at {:?}",
                    seed.n,
                    report.witness.unwrap_or_default()
                ),
            });
        }
    }
    let sizes: Vec<usize> = seeds.iter().map(|s| s.n).collect();
    // subset-sum feasibility over seed sizes with repetition
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for total in 1..=n {
        for &s in &sizes {
            if s <= total && reachable[total - s] {
                reachable[total] = true;
                break;
            }
        }
    }
    if !reachable[n] {
        return Err(Error::SeedSizesDoNotFit { sizes, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        // random walk over feasible remainders
        let mut remaining = n;
        let mut chosen: Vec<&RepPoint> = Vec::new();
        while remaining > 0 {
            let feasible: Vec<&RepPoint> = seeds
                .iter()
                .filter(|s| s.n <= remaining && reachable[remaining - s.n])
                .collect();
            let pick = feasible[rng.gen_range(0..feasible.len())];
            remaining -= pick.n;
            chosen.push(pick);
        }
        let dim = alg.dim();
        let mats: Vec<Matrix> = (0..dim)
            .map(|a| {
                let blocks: Vec<Matrix> = chosen.iter().map(|s| s.mats[a].clone()).collect();
                linalg::block_diag(&blocks)
            })
            .collect();
        let base = RepPoint { n, mats };
        let (g, g_inv) = random_invertible(&mut rng, n);
        let point = base.conjugated(&g, &g_inv);
        debug_assert!(validate_rep_point(alg, &point).pass);
        out.push(point);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// 1 ↦ I, x ↦ strictly upper shift: the standard nilpotent point.
    pub(crate) fn nilpotent_seed(n: usize) -> RepPoint {
        let mut x = linalg::zeros(n, n);
        for i in 0..n.saturating_sub(1) {
            x[i][i + 1] = Scalar::one();
        }
        RepPoint {
            n,
            mats: vec![linalg::identity(n), x],
        }
    }

    #[test]
    fn nilpotent_point_validates() {
        let alg = fixtures::dual_numbers();
        assert!(validate_rep_point(&alg, &nilpotent_seed(2)).pass);
    }

    #[test]
    fn identity_for_x_fails() {
        let alg = fixtures::dual_numbers();
        let p = RepPoint {
            n: 2,
            mats: vec![linalg::identity(2), linalg::identity(2)],
        };
        let report = validate_rep_point(&alg, &p);
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap(), vec!["x", "x"]);
    }

    #[test]
    fn size_one_zero_rep_validates_without_unit() {
        // the one-dimensional zero representation of the dual numbers:
        // 1 ↦ [1], x ↦ [0]
        let alg = fixtures::dual_numbers();
        let p = RepPoint {
            n: 1,
            mats: vec![linalg::identity(1), linalg::zeros(1, 1)],
        };
        assert!(validate_rep_point(&alg, &p).pass);
    }

    #[test]
    fn sampled_points_validate_and_are_deterministic() {
        let alg = fixtures::dual_numbers();
        let seeds = vec![nilpotent_seed(2)];
        let pts1 = sample_rep_points(&alg, 2, &seeds, 10, 7).unwrap();
        let pts2 = sample_rep_points(&alg, 2, &seeds, 10, 7).unwrap();
        assert_eq!(pts1, pts2);
        for p in &pts1 {
            assert!(validate_rep_point(&alg, p).pass);
        }
        let other = sample_rep_points(&alg, 2, &seeds, 10, 8).unwrap();
        assert_ne!(pts1, other);
    }

    #[test]
    fn block_assembly_covers_composite_sizes() {
        let alg = fixtures::dual_numbers();
        let seeds = vec![
            nilpotent_seed(2),
            RepPoint {
                n: 1,
                mats: vec![linalg::identity(1), linalg::zeros(1, 1)],
            },
        ];
        let pts = sample_rep_points(&alg, 3, &seeds, 5, 42).unwrap();
        for p in &pts {
            assert_eq!(p.n, 3);
            assert!(validate_rep_point(&alg, p).pass);
        }
    }

    #[test]
    fn impossible_size_is_rejected() {
        let alg = fixtures::dual_numbers();
        let seeds = vec![nilpotent_seed(2)];
        assert!(matches!(
            sample_rep_points(&alg, 3, &seeds, 1, 0),
            Err(Error::SeedSizesDoNotFit { .. })
        ));
    }
}
