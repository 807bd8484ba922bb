//! Finite-dimensional associative algebras over the rationals, presented by
//! a basis and structure constants `e_i · e_j = Σ_k c_{ij}^k e_k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalar::{vec_is_zero, zero_vec, Scalar};

/// An associative unital-or-not algebra. Immutable after construction;
/// structure constants are stored densely (dimensions here are tiny) and
/// exposed sparsely for serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocAlgebra {
    name: String,
    dim: usize,
    basis_names: Vec<String>,
    /// c[(i*dim + j)*dim + k] = coefficient of e_k in e_i e_j.
    constants: Vec<Scalar>,
    unit: Option<Vec<Scalar>>,
}

impl AssocAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis_names: Vec<String>,
        structure_constants: &BTreeMap<(usize, usize, usize), Scalar>,
        unit: Option<Vec<Scalar>>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut constants = zero_vec(dim * dim * dim);
        for (&(i, j, k), c) in structure_constants {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            constants[(i * dim + j) * dim + k] = c.clone();
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: u.len(),
                });
            }
        }
        Ok(AssocAlgebra {
            name: name.into(),
            dim,
            basis_names,
            constants,
            unit,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> Option<&[Scalar]> {
        self.unit.as_deref()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero structure constants in row-major order, for serialization.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Product of two basis elements as a coefficient vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|k| self.constant(i, j, k).clone())
            .collect()
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: w.len(),
                });
            }
        }
        let mut out = zero_vec(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        let t = &uv * c;
                        out[k] += &t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive associativity check: `(e_i e_j) e_k = e_i (e_j e_k)` for
    /// every index triple. On failure reports the first violating triple in
    /// row-major order and the residual vector.
    pub fn check_associativity(&self) -> CheckReport {
        let n = self.dim;
        let mut checked = 0u64;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    checked += 1;
                    let jk = self.basis_product(j, k);
                    let left = self.multiply(&ij, &crate::scalar::basis_vec(n, k)).unwrap();
                    let right = self.multiply(&crate::scalar::basis_vec(n, i), &jk).unwrap();
                    let residual: Vec<Scalar> =
                        left.iter().zip(&right).map(|(a, b)| a - b).collect();
                    if !vec_is_zero(&residual) {
                        return CheckReport::fail(
                            "associativity",
                            checked,
                            vec![
                                self.basis_names[i].clone(),
                                self.basis_names[j].clone(),
                                self.basis_names[k].clone(),
                            ],
                            self.render_vector(&residual),
                        );
                    }
                }
            }
        }
        CheckReport::pass("associativity", checked)
    }

    /// Two-sided unit law for the declared unit vector, if any. Vacuously
    /// passes for non-unital presentations.
    pub fn check_unit(&self) -> CheckReport {
        let Some(u) = &self.unit else {
            return CheckReport::pass("unit-law", 0);
        };
        let n = self.dim;
        for i in 0..n {
            let e = crate::scalar::basis_vec(n, i);
            let left = self.multiply(u, &e).unwrap();
            let right = self.multiply(&e, u).unwrap();
            for (label, prod) in [("unit·e", &left), ("e·unit", &right)] {
                let residual: Vec<Scalar> = prod.iter().zip(&e).map(|(a, b)| a - b).collect();
                if !vec_is_zero(&residual) {
                    return CheckReport::fail(
                        "unit-law",
                        (i + 1) as u64,
                        vec![label.to_string(), self.basis_names[i].clone()],
                        self.render_vector(&residual),
                    );
                }
            }
        }
        CheckReport::pass("unit-law", n as u64)
    }

    /// Render a coefficient vector as `basis name -> rational string`,
    /// dropping zeros.
    pub fn render_vector(&self, v: &[Scalar]) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.insert(self.basis_names[i].clone(), c.to_string());
            }
        }
        out
    }
}
