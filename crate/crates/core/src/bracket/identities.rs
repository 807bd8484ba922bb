//! Executable pairing identities relating the bimodule actions on `A ⊗ A`
//! to multiplication of functionals on the extended space, and the nested
//! left-bracket identity that expresses `[[a, [[b, c]]]]_L` through two
//! composed ternary operations. These identities are what turn the
//! Maurer-Cartan rows into the bracket axioms, so they are kept as
//! standalone exhaustive checks.

use std::collections::BTreeMap;

use crate::algebra::AssocAlgebra;
use crate::bracket::{act, m3_from_bracket, Action, DoubleBracket, TensorElement2};
use crate::extended::{pairing, trivial_extension_product, ExtElement, ExtIndex};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// `⟨g⊗f, t⟩` for dual coefficient vectors `g`, `f` and `t ∈ A⊗A`,
/// evaluated factorwise (first with first). Both pairings are
/// dual-against-algebra, so no signs enter.
fn pair_two_functionals(g: &[Scalar], f: &[Scalar], t: &TensorElement2) -> Scalar {
    let mut acc = Scalar::zero();
    for (key, v) in t.entries() {
        let gk = &g[key[0]];
        if gk.is_zero() {
            continue;
        }
        let fl = &f[key[1]];
        if fl.is_zero() {
            continue;
        }
        let term = &(gk * fl) * v;
        acc += &term;
    }
    acc
}

/// The four compatibility identities between functional multiplication and
/// the bimodule actions, swept over all basis choices `(g, f, a, b, c)`:
///
/// ```text
/// ⟨g⊗(af), [[b,c]]⟩ =  ⟨g⊗f, [[b,c]]·a⟩      (outer-right)
/// ⟨(ga)⊗f, [[b,c]]⟩ = −⟨g⊗f, a·[[b,c]]⟩      (outer-left)
/// ⟨g⊗(fa), [[b,c]]⟩ = −⟨g⊗f, a⋆[[b,c]]⟩      (inner-left)
/// ⟨(ag)⊗f, [[b,c]]⟩ =  ⟨g⊗f, [[b,c]]⋆a⟩      (inner-right)
/// ```
///
/// Products like `af`, `ga` are taken in the extended space, so they carry
/// the action signs fixed there.
pub fn check_pairing_action_compat(alg: &AssocAlgebra, d: &DoubleBracket) -> Vec<CheckReport> {
    #[derive(Clone, Copy)]
    enum Side {
        First,
        Second,
    }
    #[derive(Clone, Copy)]
    enum Order {
        AlgDual, // a · functional
        DualAlg, // functional · a
    }
    let cases: [(&str, Side, Order, Action, bool); 4] = [
        // which functional gets multiplied, in which order, the matching
        // action on the tensor side, and whether the right side is negated
        (
            "pairing-outer-right",
            Side::Second,
            Order::AlgDual,
            Action::OuterRight,
            false,
        ),
        (
            "pairing-outer-left",
            Side::First,
            Order::DualAlg,
            Action::OuterLeft,
            true,
        ),
        (
            "pairing-inner-left",
            Side::Second,
            Order::DualAlg,
            Action::InnerLeft,
            true,
        ),
        (
            "pairing-inner-right",
            Side::First,
            Order::AlgDual,
            Action::InnerRight,
            false,
        ),
    ];

    let n = alg.dim();
    let names = alg.basis_names();
    let ext = |i: ExtIndex| ExtElement::basis(n, i);
    let m2 = |x: &ExtElement, y: &ExtElement| trivial_extension_product(alg, x, y);

    let mut reports = Vec::new();
    for (name, side, order, action, negate) in cases {
        let mut checked = 0u64;
        let mut failure: Option<(Vec<String>, Scalar)> = None;
        'sweep: for g in 0..n {
            for f in 0..n {
                for a in 0..n {
                    let target = match side {
                        Side::First => g,
                        Side::Second => f,
                    };
                    let product = match order {
                        Order::AlgDual => m2(&ext(ExtIndex::alg(a)), &ext(ExtIndex::dual(target))),
                        Order::DualAlg => m2(&ext(ExtIndex::dual(target)), &ext(ExtIndex::alg(a))),
                    };
                    let g_vec = crate::scalar::basis_vec(n, g);
                    let f_vec = crate::scalar::basis_vec(n, f);
                    let (first, second) = match side {
                        Side::First => (product.dual.as_slice(), f_vec.as_slice()),
                        Side::Second => (g_vec.as_slice(), product.dual.as_slice()),
                    };
                    let a_vec = crate::scalar::basis_vec(n, a);
                    for b in 0..n {
                        for c in 0..n {
                            checked += 1;
                            let t = d.eval_basis(b, c);
                            let lhs = pair_two_functionals(first, second, &t);
                            let acted = act(alg, action, &a_vec, &t);
                            let mut rhs = pair_two_functionals(&g_vec, &f_vec, &acted);
                            if negate {
                                rhs = -rhs;
                            }
                            if lhs != rhs {
                                failure = Some((
                                    vec![
                                        format!("{}*", names[g]),
                                        format!("{}*", names[f]),
                                        names[a].clone(),
                                        names[b].clone(),
                                        names[c].clone(),
                                    ],
                                    &lhs - &rhs,
                                ));
                                break 'sweep;
                            }
                        }
                    }
                }
            }
        }
        reports.push(match failure {
            Some((witness, diff)) => {
                let mut residual = BTreeMap::new();
                residual.insert("lhs - rhs".to_string(), diff.to_string());
                CheckReport::fail(name, checked, witness, residual)
            }
            None => CheckReport::pass(name, checked),
        });
    }
    reports
}

/// Nested left-bracket identity: for all basis choices of `a, b, c` in the
/// algebra and functionals `α, β, γ`,
///
/// ```text
/// ⟨α⊗β⊗γ, [[a, [[b, c]]]]_L⟩ + ⟨m3(m3(c, γ, b), β, a), α⟩ = 0
/// ```
///
/// with `m3` the ternary operation of the bracket and the second pairing
/// the extended one. The sign is forced by the pairing normalization
/// `⟨c, g⟩ = −g(c)`.
pub fn check_nested_bracket_via_m3(alg: &AssocAlgebra, d: &DoubleBracket) -> CheckReport {
    let n = alg.dim();
    let names = alg.basis_names();
    let m3 = m3_from_bracket(d);
    let e = |m: usize| crate::scalar::basis_vec(n, m);
    let mut checked = 0u64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let nested = d.left_extended(&e(a), &d.eval(&e(b), &e(c)).unwrap());
                for alpha in 0..n {
                    for beta in 0..n {
                        for gamma in 0..n {
                            checked += 1;
                            // factorwise evaluation of the three functionals
                            let lhs = nested
                                .entries()
                                .get(&vec![alpha, beta, gamma])
                                .cloned()
                                .unwrap_or_else(Scalar::zero);
                            let inner = m3.eval_basis(
                                ExtIndex::alg(c),
                                ExtIndex::dual(gamma),
                                ExtIndex::alg(b),
                            );
                            let outer = m3.eval(
                                &inner,
                                &ExtElement::basis(n, ExtIndex::dual(beta)),
                                &ExtElement::basis(n, ExtIndex::alg(a)),
                            );
                            let rhs = pairing(&outer, &ExtElement::basis(n, ExtIndex::dual(alpha)));
                            if !(&lhs + &rhs).is_zero() {
                                let mut residual = BTreeMap::new();
                                residual.insert("lhs + rhs".to_string(), (&lhs + &rhs).to_string());
                                return CheckReport::fail(
                                    "nested-bracket-pairing",
                                    checked,
                                    vec![
                                        format!("{}*", names[alpha]),
                                        format!("{}*", names[beta]),
                                        format!("{}*", names[gamma]),
                                        names[a].clone(),
                                        names[b].clone(),
                                        names[c].clone(),
                                    ],
                                    residual,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    CheckReport::pass("nested-bracket-pairing", checked)
}
