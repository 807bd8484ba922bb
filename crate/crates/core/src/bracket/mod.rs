//! Double brackets on an associative algebra: sparse rank-4 tensors
//! `[[e_i, e_j]] = Σ D[i,j,k,l] e_k ⊗ e_l` together with the axiom
//! checkers (antisymmetry, both Leibniz forms, the double Jacobi identity),
//! the left extension operator, and polyderivation checks.

mod convert;
mod identities;

pub use convert::{
    bracket_from_m3, check_defining_identity, m3_from_bracket, verify_correspondence,
    CorrespondenceReport,
};
pub use identities::{check_nested_bracket_via_m3, check_pairing_action_compat};

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::AssocAlgebra;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalar::{basis_vec, Scalar};

/// Sparse tensor over `A^{⊗rank}` with basis-index keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTensor {
    rank: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

/// Elements of `A ⊗ A`.
pub type TensorElement2 = SparseTensor;
/// Elements of `A ⊗ A ⊗ A`.
pub type TensorElement3 = SparseTensor;

impl SparseTensor {
    pub fn zero(rank: usize) -> Self {
        SparseTensor {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.entries
    }

    pub fn add_term(&mut self, key: Vec<usize>, value: Scalar) {
        debug_assert_eq!(key.len(), self.rank);
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(key) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
        }
    }

    pub fn add_assign(&mut self, other: &SparseTensor) {
        debug_assert_eq!(self.rank, other.rank);
        for (k, v) in &other.entries {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn negated(&self) -> SparseTensor {
        SparseTensor {
            rank: self.rank,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseTensor {
        if c.is_zero() {
            return SparseTensor::zero(self.rank);
        }
        SparseTensor {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Swap the two factors of a rank-2 tensor.
    pub fn swapped(&self) -> SparseTensor {
        debug_assert_eq!(self.rank, 2);
        SparseTensor {
            rank: 2,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (vec![k[1], k[0]], v.clone()))
                .collect(),
        }
    }

    /// Permute the factors of a rank-3 tensor by the key map `key -> perm(key)`.
    fn permuted3(&self, perm: impl Fn(&[usize]) -> Vec<usize>) -> SparseTensor {
        debug_assert_eq!(self.rank, 3);
        let mut out = SparseTensor::zero(3);
        for (k, v) in &self.entries {
            out.add_term(perm(k), v.clone());
        }
        out
    }

    /// `v1⊗v2⊗v3 -> v3⊗v1⊗v2`.
    pub fn tau_123(&self) -> SparseTensor {
        self.permuted3(|k| vec![k[2], k[0], k[1]])
    }

    /// `v1⊗v2⊗v3 -> v2⊗v3⊗v1`.
    pub fn tau_132(&self) -> SparseTensor {
        self.permuted3(|k| vec![k[1], k[2], k[0]])
    }

    pub fn render(&self, alg: &AssocAlgebra) -> BTreeMap<String, String> {
        let names = alg.basis_names();
        self.entries
            .iter()
            .map(|(k, v)| {
                let label = k
                    .iter()
                    .map(|&i| names[i].as_str())
                    .collect::<Vec<_>>()
                    .join("⊗");
                (label, v.to_string())
            })
            .collect()
    }
}

/// Outer bimodule action on `A ⊗ A`: `c·(u⊗v) = cu⊗v`, `(u⊗v)·c = u⊗vc`.
/// Inner action: `c⋆(u⊗v) = u⊗cv`, `(u⊗v)⋆c = uc⊗v`.
#[derive(Debug, Clone, Copy)]
pub enum Action {
    OuterLeft,
    OuterRight,
    InnerLeft,
    InnerRight,
}

pub fn act(alg: &AssocAlgebra, action: Action, c: &[Scalar], t: &TensorElement2) -> TensorElement2 {
    let n = alg.dim();
    let mut out = SparseTensor::zero(2);
    for (key, v) in t.entries() {
        let (k, l) = (key[0], key[1]);
        for (m, cm) in c.iter().enumerate() {
            if cm.is_zero() {
                continue;
            }
            let coeff = v * cm;
            for p in 0..n {
                let (sc, new_key) = match action {
                    Action::OuterLeft => (alg.constant(m, k, p), vec![p, l]),
                    Action::OuterRight => (alg.constant(l, m, p), vec![k, p]),
                    Action::InnerLeft => (alg.constant(m, l, p), vec![k, p]),
                    Action::InnerRight => (alg.constant(k, m, p), vec![p, l]),
                };
                if !sc.is_zero() {
                    out.add_term(new_key, &coeff * sc);
                }
            }
        }
    }
    out
}

/// A double bracket: sparse rank-4 coefficient tensor over a fixed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleBracket {
    algebra: Arc<AssocAlgebra>,
    entries: BTreeMap<[usize; 4], Scalar>,
}

impl DoubleBracket {
    /// Build from sparse entries; rejects out-of-range indices and drops
    /// explicit zeros so the stored form is canonical.
    pub fn new(algebra: Arc<AssocAlgebra>, entries: BTreeMap<[usize; 4], Scalar>) -> Result<Self> {
        let dim = algebra.dim();
        let mut clean = BTreeMap::new();
        for (key, value) in entries {
            for &idx in &key {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if !value.is_zero() {
                clean.insert(key, value);
            }
        }
        Ok(DoubleBracket {
            algebra,
            entries: clean,
        })
    }

    pub fn algebra(&self) -> &Arc<AssocAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn entries(&self) -> &BTreeMap<[usize; 4], Scalar> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficient(&self, key: [usize; 4]) -> Scalar {
        self.entries.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `[[e_i, e_j]]` as a rank-2 tensor.
    pub fn eval_basis(&self, i: usize, j: usize) -> TensorElement2 {
        let mut out = SparseTensor::zero(2);
        for (&[a, b, k, l], v) in &self.entries {
            if a == i && b == j {
                out.add_term(vec![k, l], v.clone());
            }
        }
        out
    }

    /// Bilinear extension of the bracket to coefficient vectors.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Result<TensorElement2> {
        for w in [u, v] {
            if w.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    got: w.len(),
                });
            }
        }
        let mut out = SparseTensor::zero(2);
        for (&[a, b, k, l], coeff) in &self.entries {
            let ua = &u[a];
            if ua.is_zero() {
                continue;
            }
            let vb = &v[b];
            if vb.is_zero() {
                continue;
            }
            out.add_term(vec![k, l], &(ua * vb) * coeff);
        }
        Ok(out)
    }

    /// Apply the bracket to `b` and the first factor of an n-fold tensor,
    /// leaving the remaining factors fixed.
    pub fn left_extended(&self, b: &[Scalar], t: &SparseTensor) -> SparseTensor {
        let mut out = SparseTensor::zero(t.rank() + 1);
        for (key, v) in t.entries() {
            let first = basis_vec(self.dim(), key[0]);
            let bracket = self.eval(b, &first).expect("dimensions agree");
            for (bk, bv) in bracket.entries() {
                let mut new_key = Vec::with_capacity(t.rank() + 1);
                new_key.extend_from_slice(bk);
                new_key.extend_from_slice(&key[1..]);
                out.add_term(new_key, bv * v);
            }
        }
        out
    }

    /// The left-hand side of the double Jacobi identity:
    /// `[[a,[[b,c]]]]_L + τ_(123) [[b,[[c,a]]]]_L + τ_(132) [[c,[[a,b]]]]_L`.
    pub fn jacobiator(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> TensorElement3 {
        let t1 = self.left_extended(a, &self.eval(b, c).expect("dimensions agree"));
        let t2 = self.left_extended(b, &self.eval(c, a).expect("dimensions agree"));
        let t3 = self.left_extended(c, &self.eval(a, b).expect("dimensions agree"));
        let mut out = t1;
        out.add_assign(&t2.tau_123());
        out.add_assign(&t3.tau_132());
        out
    }

    /// `D[i,j,k,l] = −D[j,i,l,k]` over the full index range.
    pub fn check_antisymmetry(&self) -> CheckReport {
        let n = self.dim();
        let mut checked = 0u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        checked += 1;
                        let lhs = self.coefficient([i, j, k, l]);
                        let rhs = -self.coefficient([j, i, l, k]);
                        if lhs != rhs {
                            let names = self.algebra.basis_names();
                            let mut residual = BTreeMap::new();
                            residual.insert(
                                "D[i,j,k,l] + D[j,i,l,k]".to_string(),
                                (&lhs - &rhs).to_string(),
                            );
                            return CheckReport::fail(
                                "antisymmetry",
                                checked,
                                vec![
                                    names[i].clone(),
                                    names[j].clone(),
                                    names[k].clone(),
                                    names[l].clone(),
                                ],
                                residual,
                            );
                        }
                    }
                }
            }
        }
        CheckReport::pass("antisymmetry", checked)
    }

    fn leibniz_residual(&self, slot_outer: bool, i: usize, j: usize, k: usize) -> SparseTensor {
        let alg = &self.algebra;
        let n = alg.dim();
        let e = |m: usize| basis_vec(n, m);
        if slot_outer {
            // [[e_i, e_j e_k]] − e_j·[[e_i,e_k]] − [[e_i,e_j]]·e_k
            let mut res = self.eval(&e(i), &alg.basis_product(j, k)).unwrap();
            res.add_assign(
                &act(
                    alg,
                    Action::OuterLeft,
                    &e(j),
                    &self.eval(&e(i), &e(k)).unwrap(),
                )
                .negated(),
            );
            res.add_assign(
                &act(
                    alg,
                    Action::OuterRight,
                    &e(k),
                    &self.eval(&e(i), &e(j)).unwrap(),
                )
                .negated(),
            );
            res
        } else {
            // [[e_j e_k, e_i]] − e_j⋆[[e_k,e_i]] − [[e_j,e_i]]⋆e_k
            let mut res = self.eval(&alg.basis_product(j, k), &e(i)).unwrap();
            res.add_assign(
                &act(
                    alg,
                    Action::InnerLeft,
                    &e(j),
                    &self.eval(&e(k), &e(i)).unwrap(),
                )
                .negated(),
            );
            res.add_assign(
                &act(
                    alg,
                    Action::InnerRight,
                    &e(k),
                    &self.eval(&e(j), &e(i)).unwrap(),
                )
                .negated(),
            );
            res
        }
    }

    fn leibniz_sweep(&self, name: &str, slot_outer: bool) -> CheckReport {
        let n = self.dim();
        let names = self.algebra.basis_names();
        let mut checked = 0u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    checked += 1;
                    let res = self.leibniz_residual(slot_outer, i, j, k);
                    if !res.is_zero() {
                        return CheckReport::fail(
                            name,
                            checked,
                            vec![names[i].clone(), names[j].clone(), names[k].clone()],
                            res.render(&self.algebra),
                        );
                    }
                }
            }
        }
        CheckReport::pass(name, checked)
    }

    /// Derivation property in the second slot with the outer bimodule
    /// structure: `[[a, bc]] = b·[[a,c]] + [[a,b]]·c`.
    pub fn check_leibniz_outer(&self) -> CheckReport {
        self.leibniz_sweep("leibniz-outer", true)
    }

    /// Derivation property in the first slot with the inner structure:
    /// `[[bc, a]] = b⋆[[c,a]] + [[b,a]]⋆c`.
    pub fn check_leibniz_inner(&self) -> CheckReport {
        self.leibniz_sweep("leibniz-inner", false)
    }

    /// Vanishing of the jacobiator on all basis triples.
    pub fn check_double_jacobi(&self) -> CheckReport {
        let n = self.dim();
        let names = self.algebra.basis_names();
        let e = |m: usize| basis_vec(n, m);
        let mut checked = 0u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    checked += 1;
                    let res = self.jacobiator(&e(i), &e(j), &e(k));
                    if !res.is_zero() {
                        return CheckReport::fail(
                            "double-jacobi",
                            checked,
                            vec![names[i].clone(), names[j].clone(), names[k].clone()],
                            res.render(&self.algebra),
                        );
                    }
                }
            }
        }
        CheckReport::pass("double-jacobi", checked)
    }

    /// Leibniz in each argument slot: the inner identity in slot 1 and the
    /// outer identity in slot 2, both swept exhaustively. Reports the first
    /// failing slot and triple.
    pub fn check_polyderivation(&self) -> CheckReport {
        let n = self.dim();
        let names = self.algebra.basis_names();
        let mut checked = 0u64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for (slot, slot_outer) in [("slot-1", false), ("slot-2", true)] {
                        checked += 1;
                        let res = self.leibniz_residual(slot_outer, i, j, k);
                        if !res.is_zero() {
                            return CheckReport::fail(
                                "polyderivation",
                                checked,
                                vec![
                                    slot.to_string(),
                                    names[i].clone(),
                                    names[j].clone(),
                                    names[k].clone(),
                                ],
                                res.render(&self.algebra),
                            );
                        }
                    }
                }
            }
        }
        CheckReport::pass("polyderivation", checked)
    }

    /// The four axiom checks in order.
    pub fn axiom_suite(&self) -> Vec<CheckReport> {
        vec![
            self.check_antisymmetry(),
            self.check_leibniz_outer(),
            self.check_leibniz_inner(),
            self.check_double_jacobi(),
        ]
    }
}
