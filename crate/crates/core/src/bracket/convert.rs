//! Conversion between double brackets and type-B ternary operations.
//!
//! The two are tied together by the pairing identity
//!
//! ```text
//! ⟨g⊗f, [[b, a]]⟩ = ⟨m3(a, f, b), g⟩
//! ```
//!
//! read with the crate's pairing normalization (`⟨c, g⟩ = −g(c)` for
//! `c ∈ A`). On coefficient tables this pins `m3(e_i, e_j*, e_k)` to
//! `−Σ_m D[k,i,m,j] e_m`; the dual table follows by cyclic completion. The
//! closed-form signs are never trusted: [`check_defining_identity`] verifies
//! the pairing identity post hoc on every basis choice, and
//! [`m3_from_bracket`] asserts it in debug builds.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::ainfinity::ternary::{Table, TYPE_B_PRIMARY};
use crate::ainfinity::{
    check_cyclic_invariance, check_maurer_cartan, complete_cyclic_closure, McSuite,
    TernaryOperation,
};
use crate::algebra::AssocAlgebra;
use crate::bracket::DoubleBracket;
use crate::error::{Error, Result};
use crate::extended::{pairing, ExtElement, ExtIndex};
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// The type-B ternary operation encoding a double bracket.
pub fn m3_from_bracket(d: &DoubleBracket) -> TernaryOperation {
    let mut primary = Table::new();
    for (&[i, j, k, l], v) in d.entries() {
        // coefficient of e_k in m3(e_j, e_l*, e_i)
        primary.insert([j, l, i, k], -v);
    }
    let m3 = complete_cyclic_closure(d.dim(), &primary);
    debug_assert!(
        check_defining_identity(d, &m3).pass,
        "pairing identity must hold for the constructed operation"
    );
    m3
}

/// Verify `⟨g⊗f, [[b, a]]⟩ = ⟨m3(a, f, b), g⟩` over all basis choices of
/// `a, b` in the algebra and `f, g` in the dual.
pub fn check_defining_identity(d: &DoubleBracket, m3: &TernaryOperation) -> CheckReport {
    let alg = d.algebra();
    let n = alg.dim();
    let names = alg.basis_names();
    let mut checked = 0u64;
    for a in 0..n {
        for b in 0..n {
            let bracket = d.eval_basis(b, a);
            for f in 0..n {
                let m = m3.eval_basis(ExtIndex::alg(a), ExtIndex::dual(f), ExtIndex::alg(b));
                for g in 0..n {
                    checked += 1;
                    // ⟨g⊗f, [[b,a]]⟩ with factorwise dual-against-algebra
                    // evaluation
                    let lhs = bracket
                        .entries()
                        .get(&vec![g, f])
                        .cloned()
                        .unwrap_or_else(Scalar::zero);
                    let rhs = pairing(&m, &ExtElement::basis(n, ExtIndex::dual(g)));
                    if lhs != rhs {
                        let mut residual = BTreeMap::new();
                        residual.insert("lhs - rhs".to_string(), (&lhs - &rhs).to_string());
                        return CheckReport::fail(
                            "defining-pairing-identity",
                            checked,
                            vec![
                                names[a].clone(),
                                format!("{}*", names[f]),
                                names[b].clone(),
                                format!("{}*", names[g]),
                            ],
                            residual,
                        );
                    }
                }
            }
        }
    }
    CheckReport::pass("defining-pairing-identity", checked)
}

/// Invert [`m3_from_bracket`]. The input must be type-B-only with its dual
/// table the cyclic completion of the primary table.
pub fn bracket_from_m3(alg: &Arc<AssocAlgebra>, m3: &TernaryOperation) -> Result<DoubleBracket> {
    if let Some(pattern) = m3.first_non_type_b() {
        let out = crate::ainfinity::admissible_output(pattern).expect("stored patterns admissible");
        return Err(Error::NonTypeB {
            pattern: crate::ainfinity::SortPattern::operation(pattern, out).label(),
        });
    }
    let primary = m3.table(TYPE_B_PRIMARY).cloned().unwrap_or_default();
    if complete_cyclic_closure(m3.dim(), &primary) != *m3 {
        return Err(Error::InconsistentDualTable);
    }
    let mut entries = BTreeMap::new();
    for (&[a, f, b, c], v) in &primary {
        entries.insert([b, a, c, f], -v);
    }
    DoubleBracket::new(Arc::clone(alg), entries)
}

/// Both sides of the correspondence for one bracket: the double Poisson
/// axioms of `D` against cyclicity plus the Maurer-Cartan suite of the
/// associated ternary operation. The two verdicts must agree; a mixed
/// outcome would falsify the implementation and is flagged as inconsistent.
#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub axiom_reports: Vec<CheckReport>,
    pub cyclicity: CheckReport,
    pub mc: McSuite,
    pub axioms_pass: bool,
    pub mc_pass: bool,
    pub consistent: bool,
}

impl CorrespondenceReport {
    pub fn both_pass(&self) -> bool {
        self.axioms_pass && self.mc_pass
    }
}

/// Run the full two-sided verification of one bracket.
pub fn verify_correspondence(alg: &AssocAlgebra, d: &DoubleBracket) -> CorrespondenceReport {
    let axiom_reports = vec![
        d.check_antisymmetry(),
        d.check_leibniz_outer(),
        d.check_double_jacobi(),
    ];
    let axioms_pass = axiom_reports.iter().all(|r| r.pass);
    let m3 = m3_from_bracket(d);
    let cyclicity = check_cyclic_invariance(alg, &m3);
    let mc = check_maurer_cartan(alg, &m3);
    let mc_pass = cyclicity.pass && mc.pass();
    CorrespondenceReport {
        axiom_reports,
        cyclicity,
        mc,
        axioms_pass,
        mc_pass,
        consistent: axioms_pass == mc_pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfinity::ternary::TYPE_B_DUAL;
    use crate::fixtures;

    use crate::extended::Sort::{Alg as A, Dual as Du};

    #[test]
    fn zero_bracket_round_trip() {
        let alg = Arc::new(fixtures::dual_numbers());
        let d = fixtures::zero_bracket(&alg);
        let m3 = m3_from_bracket(&d);
        assert!(m3.is_zero());
        let back = bracket_from_m3(&alg, &m3).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn fixture_tables_are_as_expected() {
        let alg = Arc::new(fixtures::dual_numbers());
        let d = fixtures::dual_numbers_bracket(&alg);
        let m3 = m3_from_bracket(&d);
        // m3(x, 1*, x) = −x and m3(x, x*, x) = 1
        let primary = m3.table(TYPE_B_PRIMARY).unwrap();
        assert_eq!(primary[&[1, 0, 1, 1]], -Scalar::one());
        assert_eq!(primary[&[1, 1, 1, 0]], Scalar::one());
        assert_eq!(primary.len(), 2);
        // m3(1*, x, x*) = −x* and m3(x*, x, 1*) = +x*
        let dual = m3.table(TYPE_B_DUAL).unwrap();
        assert_eq!(dual[&[0, 1, 1, 1]], -Scalar::one());
        assert_eq!(dual[&[1, 1, 0, 1]], Scalar::one());
        assert_eq!(dual.len(), 2);
    }

    #[test]
    fn defining_identity_verified_post_hoc() {
        let alg = Arc::new(fixtures::dual_numbers());
        let d = fixtures::dual_numbers_bracket(&alg);
        let m3 = m3_from_bracket(&d);
        let report = check_defining_identity(&d, &m3);
        assert!(report.pass);
        assert_eq!(report.checked, 16);
    }

    #[test]
    fn fixture_round_trip_is_exact() {
        let alg = Arc::new(fixtures::dual_numbers());
        let d = fixtures::dual_numbers_bracket(&alg);
        let back = bracket_from_m3(&alg, &m3_from_bracket(&d)).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn type_a_component_is_rejected() {
        let alg = Arc::new(fixtures::dual_numbers());
        let mut tables = BTreeMap::new();
        let mut t = Table::new();
        t.insert([0, 0, 0, 0], Scalar::one());
        tables.insert([A, A, Du], t);
        let m3 = TernaryOperation::from_tables(2, tables);
        let err = bracket_from_m3(&alg, &m3).unwrap_err();
        match err {
            Error::NonTypeB { pattern } => assert!(pattern.contains("A, A, A*")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn inconsistent_dual_table_is_rejected() {
        let alg = Arc::new(fixtures::dual_numbers());
        let d = fixtures::dual_numbers_bracket(&alg);
        let m3 = m3_from_bracket(&d);
        let mut tables = m3.tables().clone();
        tables
            .get_mut(&TYPE_B_DUAL)
            .unwrap()
            .insert([0, 0, 0, 0], Scalar::one());
        let broken = TernaryOperation::from_tables(2, tables);
        assert!(matches!(
            bracket_from_m3(&alg, &broken),
            Err(Error::InconsistentDualTable)
        ));
    }

    #[test]
    fn correspondence_consistent_on_valid_and_invalid_instances() {
        let alg = Arc::new(fixtures::dual_numbers());
        let valid = fixtures::dual_numbers_bracket(&alg);
        let report = verify_correspondence(&alg, &valid);
        assert!(report.consistent && report.both_pass());

        let mut entries = BTreeMap::new();
        entries.insert([1, 1, 1, 1], Scalar::one());
        let invalid = DoubleBracket::new(Arc::clone(&alg), entries).unwrap();
        let report = verify_correspondence(&alg, &invalid);
        assert!(report.consistent);
        assert!(!report.axioms_pass && !report.mc_pass);
    }
}
