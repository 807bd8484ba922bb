//! Symbolic classification of the Maurer-Cartan equations by input row.
//!
//! For a fixed row of input sorts, every arity-5 term is a composition of
//! two ternary operations; each choice of insertion position, inner output
//! sort and final output sort tags the two operations with their component
//! classes. Components that violate the degree constraint are structurally
//! absent from the data model, so they are enumerated separately as the
//! `secondary` part and the equation proper consists of the main-type terms.
//!
//! The resulting labels: an equation is `pure-XX` when every main term is a
//! composition of two type-B operations, `contains-Y` when a main term
//! carries a type-A tag, and `secondary-only` when no main term survives at
//! all. In arity 5 the first two are exclusive in the strong sense: a row
//! with an XX term has no type-A-tagged term, and in a `contains-Y` row
//! every term carries the tag.

use serde::Serialize;

use crate::ainfinity::{admissible_output, classify_component, ComponentType, SortPattern};
use crate::extended::Sort;

/// One ternary operation occurring in a term: its input pattern, output
/// sort and component class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaggedOp {
    pub inputs: Vec<String>,
    pub output: String,
    pub class: ComponentType,
}

fn tag(inputs: [Sort; 3], output: Sort) -> TaggedOp {
    TaggedOp {
        inputs: inputs.iter().map(|s| s.label().to_string()).collect(),
        output: output.label().to_string(),
        class: classify_component(inputs, output),
    }
}

/// A formal composition term of a Maurer-Cartan equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SymbolicTerm {
    /// `m3(..., m3(inner), ...)` with the inner operation starting at
    /// `position` (0-based).
    M3InM3 {
        position: usize,
        inner: TaggedOp,
        outer: TaggedOp,
    },
    /// A composition of the binary product with one `m3`: either the
    /// product feeds an argument slot of `m3` or wraps around its output.
    M2M3 { description: String, m3: TaggedOp },
}

impl SymbolicTerm {
    pub fn classes(&self) -> Vec<ComponentType> {
        match self {
            SymbolicTerm::M3InM3 { inner, outer, .. } => vec![inner.class, outer.class],
            SymbolicTerm::M2M3 { m3, .. } => vec![m3.class],
        }
    }

    pub fn is_main(&self) -> bool {
        self.classes().iter().all(|c| c.is_main())
    }

    pub fn is_xx(&self) -> bool {
        self.classes().iter().all(|c| *c == ComponentType::TypeB)
            && matches!(self, SymbolicTerm::M3InM3 { .. })
    }

    pub fn has_type_a(&self) -> bool {
        self.classes().contains(&ComponentType::TypeA)
    }
}

/// Label of one equation (one input row).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EquationClass {
    /// Every surviving term is a composition of two type-B operations.
    PureXX,
    /// Some surviving term carries a type-A tag. For arity-5 equations
    /// this is in fact every term: pure type-B terms never share a row
    /// with type-A-tagged ones.
    ContainsY,
    /// No term survives the degree constraint; each sort-compatible
    /// composition involves a secondary-class component.
    SecondaryOnly,
}

impl EquationClass {
    pub fn label(self) -> &'static str {
        match self {
            EquationClass::PureXX => "pure-XX",
            EquationClass::ContainsY => "contains-Y",
            EquationClass::SecondaryOnly => "secondary-only",
        }
    }
}

/// The surviving terms of one Maurer-Cartan equation for a fixed input row,
/// together with the sort-compatible compositions that were dropped because
/// a component violates the degree constraint.
#[derive(Debug, Clone, Serialize)]
pub struct SymbolicEquation {
    pub row: Vec<String>,
    pub class: EquationClass,
    pub terms: Vec<SymbolicTerm>,
    pub secondary_terms: Vec<SymbolicTerm>,
}

fn classify_equation(terms: &[SymbolicTerm]) -> EquationClass {
    if terms.is_empty() {
        EquationClass::SecondaryOnly
    } else if terms.iter().all(SymbolicTerm::is_xx) {
        EquationClass::PureXX
    } else {
        EquationClass::ContainsY
    }
}

/// Enumerate the `m3∘m3` compositions compatible with a 5-input row. Terms
/// whose inner and outer components both satisfy the degree constraint form
/// the equation; the rest are reported as secondary.
pub fn enumerate_mc5_terms(pattern: &SortPattern) -> SymbolicEquation {
    assert_eq!(pattern.inputs.len(), 5, "arity-5 rows have five inputs");
    let row = &pattern.inputs;
    let sorts = [Sort::Alg, Sort::Dual];
    let mut main = Vec::new();
    let mut secondary = Vec::new();
    for position in 0..3 {
        let inner_inputs = [row[position], row[position + 1], row[position + 2]];
        for &inner_out in &sorts {
            let mut outer_inputs = [Sort::Alg; 3];
            let mut slot = 0;
            for (i, &s) in row.iter().enumerate() {
                if i == position {
                    outer_inputs[slot] = inner_out;
                    slot += 1;
                } else if i < position || i > position + 2 {
                    outer_inputs[slot] = s;
                    slot += 1;
                }
            }
            for &final_out in &sorts {
                let term = SymbolicTerm::M3InM3 {
                    position,
                    inner: tag(inner_inputs, inner_out),
                    outer: tag(outer_inputs, final_out),
                };
                let degree_ok = admissible_output(inner_inputs) == Some(inner_out)
                    && admissible_output(outer_inputs) == Some(final_out);
                if degree_ok {
                    main.push(term);
                } else {
                    secondary.push(term);
                }
            }
        }
    }
    let class = classify_equation(&main);
    SymbolicEquation {
        row: row.iter().map(|s| s.label().to_string()).collect(),
        class,
        terms: main,
        secondary_terms: secondary,
    }
}

/// The analogous enumeration for a 4-input row: the five compositions of
/// the binary product with one `m3`. A product of two duals is identically
/// zero, and a secondary-class `m3` is structurally absent; both kinds of
/// term are reported as secondary.
pub fn enumerate_mc4_terms(pattern: &SortPattern) -> SymbolicEquation {
    assert_eq!(pattern.inputs.len(), 4, "arity-4 rows have four inputs");
    let row = &pattern.inputs;
    let m2_out = |a: Sort, b: Sort| -> Option<Sort> {
        match (a, b) {
            (Sort::Alg, Sort::Alg) => Some(Sort::Alg),
            (Sort::Dual, Sort::Dual) => None,
            _ => Some(Sort::Dual),
        }
    };
    let mut main = Vec::new();
    let mut secondary = Vec::new();
    // the product feeding one slot of m3
    for position in 0..3 {
        let prod = m2_out(row[position], row[position + 1]);
        let mut inputs = [Sort::Alg; 3];
        let describe = |out: Sort| {
            format!(
                "m3 with the product of inputs {}..{} in slot {}, output {}",
                position + 1,
                position + 2,
                position + 1,
                out.label()
            )
        };
        match prod {
            None => {
                // dual·dual = 0: record with the would-be dual slot
                let mut slot = 0;
                for (i, &s) in row.iter().enumerate() {
                    if i == position {
                        inputs[slot] = Sort::Dual;
                        slot += 1;
                    } else if i != position + 1 {
                        inputs[slot] = s;
                        slot += 1;
                    }
                }
                for &out in &[Sort::Alg, Sort::Dual] {
                    secondary.push(SymbolicTerm::M2M3 {
                        description: format!("{} (vanishing product)", describe(out)),
                        m3: tag(inputs, out),
                    });
                }
            }
            Some(p) => {
                let mut slot = 0;
                for (i, &s) in row.iter().enumerate() {
                    if i == position {
                        inputs[slot] = p;
                        slot += 1;
                    } else if i != position + 1 {
                        inputs[slot] = s;
                        slot += 1;
                    }
                }
                match admissible_output(inputs) {
                    Some(out) => main.push(SymbolicTerm::M2M3 {
                        description: describe(out),
                        m3: tag(inputs, out),
                    }),
                    None => {
                        for &out in &[Sort::Alg, Sort::Dual] {
                            secondary.push(SymbolicTerm::M2M3 {
                                description: describe(out),
                                m3: tag(inputs, out),
                            });
                        }
                    }
                }
            }
        }
    }
    // m3 feeding one factor of the product
    for (first, desc) in [
        (true, "product of m3(1..3) with input 4"),
        (false, "product of input 1 with m3(2..4)"),
    ] {
        let inputs = if first {
            [row[0], row[1], row[2]]
        } else {
            [row[1], row[2], row[3]]
        };
        let partner = if first { row[3] } else { row[0] };
        let product_alive = |out: Sort| {
            if first {
                m2_out(out, partner).is_some()
            } else {
                m2_out(partner, out).is_some()
            }
        };
        match admissible_output(inputs) {
            Some(out) if product_alive(out) => {
                main.push(SymbolicTerm::M2M3 {
                    description: desc.to_string(),
                    m3: tag(inputs, out),
                });
            }
            Some(out) => {
                secondary.push(SymbolicTerm::M2M3 {
                    description: format!("{desc} (vanishing product)"),
                    m3: tag(inputs, out),
                });
            }
            None => {
                for &out in &[Sort::Alg, Sort::Dual] {
                    secondary.push(SymbolicTerm::M2M3 {
                        description: desc.to_string(),
                        m3: tag(inputs, out),
                    });
                }
            }
        }
    }
    let class = classify_equation(&main);
    SymbolicEquation {
        row: row.iter().map(|s| s.label().to_string()).collect(),
        class,
        terms: main,
        secondary_terms: secondary,
    }
}

/// All `2^k` input rows of the given arity in row-major order (`Alg` first).
pub fn all_rows(arity: usize) -> Vec<SortPattern> {
    let mut rows = Vec::new();
    for mask in 0..(1u32 << arity) {
        let inputs: Vec<Sort> = (0..arity)
            .map(|i| {
                if mask >> (arity - 1 - i) & 1 == 0 {
                    Sort::Alg
                } else {
                    Sort::Dual
                }
            })
            .collect();
        rows.push(SortPattern::row(inputs));
    }
    rows
}
