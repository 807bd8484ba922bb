//! The ternary component `m_3` of an A-infinity structure on `A ⊕ A*`,
//! stored as sparse coefficient tables keyed by input sort pattern. The
//! degree constraint leaves six possible tables (four type A, two type B);
//! the output sort of each is determined by the inputs.

use std::collections::BTreeMap;

use crate::ainfinity::{admissible_output, classify_component, ComponentType};
use crate::algebra::AssocAlgebra;
use crate::extended::{pairing, rotation_sign, ExtElement, ExtIndex, Sort};
use crate::report::CheckReport;
use crate::scalar::Scalar;

pub type Pattern = [Sort; 3];

/// Sparse table for one input pattern: `(i1, i2, i3, k) -> coefficient of
/// the k-th output basis element on inputs (b_{i1}, b_{i2}, b_{i3})`.
pub type Table = BTreeMap<[usize; 4], Scalar>;

/// A degree-(+1) ternary operation on `A ⊕ A*`. Immutable once built; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TernaryOperation {
    dim: usize,
    tables: BTreeMap<Pattern, Table>,
}

impl TernaryOperation {
    pub fn zero(dim: usize) -> Self {
        TernaryOperation {
            dim,
            tables: BTreeMap::new(),
        }
    }

    /// Panics on a pattern the degree constraint forbids or an index out
    /// of range; zero coefficients are dropped.
    pub fn from_tables(dim: usize, tables: BTreeMap<Pattern, Table>) -> Self {
        let mut clean: BTreeMap<Pattern, Table> = BTreeMap::new();
        for (pattern, table) in tables {
            assert!(
                admissible_output(pattern).is_some(),
                "pattern {pattern:?} violates the degree constraint"
            );
            let filtered: Table = table
                .into_iter()
                .inspect(|(key, _)| {
                    assert!(
                        key.iter().all(|&i| i < dim),
                        "index out of range in {key:?}"
                    )
                })
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !filtered.is_empty() {
                clean.insert(pattern, filtered);
            }
        }
        TernaryOperation { dim, tables: clean }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn tables(&self) -> &BTreeMap<Pattern, Table> {
        &self.tables
    }

    pub fn table(&self, pattern: Pattern) -> Option<&Table> {
        self.tables.get(&pattern)
    }

    /// Patterns whose table is nonzero.
    pub fn active_patterns(&self) -> Vec<Pattern> {
        self.tables.keys().copied().collect()
    }

    pub fn is_type_b_only(&self) -> bool {
        self.tables.keys().all(|&p| {
            let out = admissible_output(p).expect("stored patterns are admissible");
            classify_component(p, out) == ComponentType::TypeB
        })
    }

    /// First stored pattern that is not type B, if any.
    pub fn first_non_type_b(&self) -> Option<Pattern> {
        self.tables.keys().copied().find(|&p| {
            let out = admissible_output(p).expect("stored patterns are admissible");
            classify_component(p, out) != ComponentType::TypeB
        })
    }

    /// Evaluate on three extended basis elements. The output lands in the
    /// sort determined by the input pattern.
    pub fn eval_basis(&self, x1: ExtIndex, x2: ExtIndex, x3: ExtIndex) -> ExtElement {
        let mut out = ExtElement::zero(self.dim);
        let pattern = [x1.sort, x2.sort, x3.sort];
        let Some(out_sort) = admissible_output(pattern) else {
            return out;
        };
        let Some(table) = self.tables.get(&pattern) else {
            return out;
        };
        for k in 0..self.dim {
            if let Some(c) = table.get(&[x1.index, x2.index, x3.index, k]) {
                match out_sort {
                    Sort::Alg => out.alg[k] += c,
                    Sort::Dual => out.dual[k] += c,
                }
            }
        }
        out
    }

    /// Multilinear evaluation on arbitrary extended elements.
    pub fn eval(&self, x1: &ExtElement, x2: &ExtElement, x3: &ExtElement) -> ExtElement {
        let mut out = ExtElement::zero(self.dim);
        for (&pattern, table) in &self.tables {
            let out_sort = admissible_output(pattern).expect("admissible");
            let parts = [
                part(x1, pattern[0]),
                part(x2, pattern[1]),
                part(x3, pattern[2]),
            ];
            for (&[i1, i2, i3, k], c) in table {
                let c1 = &parts[0][i1];
                if c1.is_zero() {
                    continue;
                }
                let c2 = &parts[1][i2];
                if c2.is_zero() {
                    continue;
                }
                let c3 = &parts[2][i3];
                if c3.is_zero() {
                    continue;
                }
                let t = &(&(c1 * c2) * c3) * c;
                match out_sort {
                    Sort::Alg => out.alg[k] += &t,
                    Sort::Dual => out.dual[k] += &t,
                }
            }
        }
        out
    }

    /// Sum of two operations on the same dimension.
    pub fn add(&self, other: &TernaryOperation) -> TernaryOperation {
        let mut tables = self.tables.clone();
        for (&pattern, table) in &other.tables {
            let slot = tables.entry(pattern).or_default();
            for (idx, c) in table {
                let entry = slot.entry(*idx).or_insert_with(Scalar::zero);
                *entry += c;
                if entry.is_zero() {
                    slot.remove(idx);
                }
            }
            if slot.is_empty() {
                tables.remove(&pattern);
            }
        }
        TernaryOperation::from_tables(self.dim, tables)
    }
}

fn part(x: &ExtElement, sort: Sort) -> &[Scalar] {
    match sort {
        Sort::Alg => &x.alg,
        Sort::Dual => &x.dual,
    }
}

pub const TYPE_B_PRIMARY: Pattern = [Sort::Alg, Sort::Dual, Sort::Alg];
pub const TYPE_B_DUAL: Pattern = [Sort::Dual, Sort::Alg, Sort::Dual];

/// Zero every table except the two type-B ones. Idempotent.
pub fn project_type_b(m3: &TernaryOperation) -> TernaryOperation {
    let mut tables = BTreeMap::new();
    for pattern in [TYPE_B_PRIMARY, TYPE_B_DUAL] {
        if let Some(t) = m3.table(pattern) {
            tables.insert(pattern, t.clone());
        }
    }
    TernaryOperation::from_tables(m3.dim(), tables)
}

/// Extend a table on the pattern `(A, A*, A) -> A` to the unique type-B
/// operation whose `(A*, A, A*) -> A*` table is determined by one cyclic
/// rotation with respect to the pairing:
///
/// ```text
/// m3(f, b, g)(a) = g(m3(a, f, b))
/// ```
///
/// The result is genuinely cyclic exactly when the primary table satisfies
/// the antisymmetry-type compatibility; [`check_cyclic_invariance`] decides
/// that.
pub fn complete_cyclic_closure(dim: usize, primary: &Table) -> TernaryOperation {
    let mut dual_table: Table = BTreeMap::new();
    // primary[(a, f, b, g)] becomes dual[(f, b, g, a)]
    for (&[a, f, b, g], c) in primary {
        if !c.is_zero() {
            dual_table.insert([f, b, g, a], c.clone());
        }
    }
    let mut tables = BTreeMap::new();
    tables.insert(TYPE_B_PRIMARY, primary.clone());
    tables.insert(TYPE_B_DUAL, dual_table);
    TernaryOperation::from_tables(dim, tables)
}

/// Exhaustive cyclic-invariance sweep over all extended basis 4-tuples:
/// `⟨m3(x1,x2,x3), x4⟩ = (−1)^{|x1|'(|x2|'+|x3|'+|x4|')} ⟨m3(x2,x3,x4), x1⟩`.
pub fn check_cyclic_invariance(alg: &AssocAlgebra, m3: &TernaryOperation) -> CheckReport {
    let basis = ExtIndex::all(alg.dim());
    let mut checked = 0u64;
    for &x1 in &basis {
        for &x2 in &basis {
            for &x3 in &basis {
                let m = m3.eval_basis(x1, x2, x3);
                for &x4 in &basis {
                    checked += 1;
                    let lhs = pairing(&m, &ExtElement::basis(alg.dim(), x4));
                    let rotated = m3.eval_basis(x2, x3, x4);
                    let mut rhs = pairing(&rotated, &ExtElement::basis(alg.dim(), x1));
                    if rotation_sign(&[x1.sort, x2.sort, x3.sort, x4.sort]) < 0 {
                        rhs = -rhs;
                    }
                    if lhs != rhs {
                        let mut residual = BTreeMap::new();
                        residual.insert("lhs - rhs".to_string(), (&lhs - &rhs).to_string());
                        return CheckReport::fail(
                            "cyclic-invariance",
                            checked,
                            [x1, x2, x3, x4].iter().map(|i| i.label(alg)).collect(),
                            residual,
                        );
                    }
                }
            }
        }
    }
    CheckReport::pass("cyclic-invariance", checked)
}
