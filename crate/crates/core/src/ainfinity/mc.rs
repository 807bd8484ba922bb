//! Maurer-Cartan residuals for the structure `m = m_2 + m_3` on `A ⊕ A*`.
//!
//! With operations of degree +1, the arity-k component of `[m, m] = 0` is
//! the signed sum over all ways of inserting one operation into another,
//! the sign being the parity of the shifted degrees in front of the
//! insertion point:
//!
//! * arity 3: `m2(m2(x1,x2),x3) + (−1)^{|x1|'} m2(x1,m2(x2,x3))`
//! * arity 4: the five `m2`/`m3` compositions
//! * arity 5: the three `m3∘m3` compositions (`m4 = 0` structurally)
//!
//! Arities 6 and up are identically zero for `m = m_2 + m_3` and are not
//! computed.

use rayon::prelude::*;

use crate::ainfinity::TernaryOperation;
use crate::algebra::AssocAlgebra;
use crate::extended::{prefix_sign, trivial_extension_product, ExtElement, ExtIndex, Sort};
use crate::report::{MCFailure, MCReport};

fn basis_el(alg: &AssocAlgebra, i: ExtIndex) -> ExtElement {
    ExtElement::basis(alg.dim(), i)
}

fn signed(el: ExtElement, sorts: &[Sort]) -> ExtElement {
    if prefix_sign(sorts) < 0 {
        el.negated()
    } else {
        el
    }
}

/// Arity-3 residual: graded associativity of the extension product.
pub fn mc_residual_3(alg: &AssocAlgebra, x: [ExtIndex; 3]) -> ExtElement {
    let e: Vec<ExtElement> = x.iter().map(|&i| basis_el(alg, i)).collect();
    let left = trivial_extension_product(alg, &trivial_extension_product(alg, &e[0], &e[1]), &e[2]);
    let right =
        trivial_extension_product(alg, &e[0], &trivial_extension_product(alg, &e[1], &e[2]));
    let mut residual = left;
    residual.add_assign(&signed(right, &[x[0].sort]));
    residual
}

/// Arity-4 residual: the five-term coupling of `m2` and `m3`.
pub fn mc_residual_4(alg: &AssocAlgebra, m3: &TernaryOperation, x: [ExtIndex; 4]) -> ExtElement {
    let e: Vec<ExtElement> = x.iter().map(|&i| basis_el(alg, i)).collect();
    let m2 = |a: &ExtElement, b: &ExtElement| trivial_extension_product(alg, a, b);
    let mut residual = ExtElement::zero(alg.dim());
    // m3 with m2 inserted at positions 1..3
    residual.add_assign(&m3.eval(&m2(&e[0], &e[1]), &e[2], &e[3]));
    residual.add_assign(&signed(
        m3.eval(&e[0], &m2(&e[1], &e[2]), &e[3]),
        &[x[0].sort],
    ));
    residual.add_assign(&signed(
        m3.eval(&e[0], &e[1], &m2(&e[2], &e[3])),
        &[x[0].sort, x[1].sort],
    ));
    // m2 with m3 inserted at positions 1 and 2
    residual.add_assign(&m2(&m3.eval(&e[0], &e[1], &e[2]), &e[3]));
    residual.add_assign(&signed(
        m2(&e[0], &m3.eval(&e[1], &e[2], &e[3])),
        &[x[0].sort],
    ));
    residual
}

/// Arity-5 residual: the three `m3∘m3` compositions.
pub fn mc_residual_5(alg: &AssocAlgebra, m3: &TernaryOperation, x: [ExtIndex; 5]) -> ExtElement {
    let e: Vec<ExtElement> = x.iter().map(|&i| basis_el(alg, i)).collect();
    let mut residual = m3.eval(&m3.eval(&e[0], &e[1], &e[2]), &e[3], &e[4]);
    residual.add_assign(&signed(
        m3.eval(&e[0], &m3.eval(&e[1], &e[2], &e[3]), &e[4]),
        &[x[0].sort],
    ));
    residual.add_assign(&signed(
        m3.eval(&e[0], &e[1], &m3.eval(&e[2], &e[3], &e[4])),
        &[x[0].sort, x[1].sort],
    ));
    residual
}

/// Reports for arities 3, 4 and 5.
#[derive(Debug, Clone, serde::Serialize)]
pub struct McSuite {
    pub arity3: MCReport,
    pub arity4: MCReport,
    pub arity5: MCReport,
}

impl McSuite {
    pub fn pass(&self) -> bool {
        self.arity3.pass && self.arity4.pass && self.arity5.pass
    }
}

fn sweep<const K: usize>(
    alg: &AssocAlgebra,
    residual: impl Fn([ExtIndex; K]) -> ExtElement + Sync,
) -> MCReport {
    let basis = ExtIndex::all(alg.dim());
    let total = (basis.len() as u64).pow(K as u32);
    // parallel over the first index; per-index sub-lists are collected in
    // index order and flattened sequentially, so the report is deterministic
    let per_first: Vec<Vec<MCFailure>> = basis
        .par_iter()
        .map(|&first| {
            let mut local = Vec::new();
            let mut tuple = [first; K];
            let mut odometer = vec![0usize; K - 1];
            loop {
                for (slot, &b) in odometer.iter().enumerate() {
                    tuple[slot + 1] = basis[b];
                }
                let r = residual(tuple);
                if !r.is_zero() {
                    local.push(MCFailure {
                        inputs: tuple.iter().map(|i| i.label(alg)).collect(),
                        residual: r.render(alg),
                    });
                }
                // advance the odometer in row-major order
                let mut pos = K - 1;
                loop {
                    if pos == 0 {
                        return local;
                    }
                    pos -= 1;
                    odometer[pos] += 1;
                    if odometer[pos] < basis.len() {
                        break;
                    }
                    odometer[pos] = 0;
                }
            }
        })
        .collect();
    let failures: Vec<MCFailure> = per_first.into_iter().flatten().collect();
    MCReport::new(K as u8, total, failures)
}

/// Run the Maurer-Cartan checks in arities 3, 4 and 5 over every extended
/// basis tuple.
pub fn check_maurer_cartan(alg: &AssocAlgebra, m3: &TernaryOperation) -> McSuite {
    McSuite {
        arity3: sweep::<3>(alg, |t| mc_residual_3(alg, t)),
        arity4: sweep::<4>(alg, |t| mc_residual_4(alg, m3, t)),
        arity5: sweep::<5>(alg, |t| mc_residual_5(alg, m3, t)),
    }
}
