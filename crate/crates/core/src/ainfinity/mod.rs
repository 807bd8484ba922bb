//! Ternary operations on `A ⊕ A*` and the machinery around them: component
//! classification, cyclic invariance, Maurer-Cartan residuals in arities
//! 3 to 5, the type-B projection, and the symbolic term taxonomy for the
//! arity-5 equations.

pub mod mc;
pub mod terms;
pub mod ternary;

pub use mc::{check_maurer_cartan, mc_residual_3, mc_residual_4, mc_residual_5, McSuite};
pub use terms::{
    enumerate_mc4_terms, enumerate_mc5_terms, EquationClass, SymbolicEquation, SymbolicTerm,
    TaggedOp,
};
pub use ternary::{
    check_cyclic_invariance, complete_cyclic_closure, project_type_b, TernaryOperation,
};

use serde::Serialize;

use crate::extended::Sort;

/// A row of input sorts together with an optional output sort. Three-input
/// patterns with an output classify into the component taxonomy; longer
/// patterns are Maurer-Cartan input rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SortPattern {
    pub inputs: Vec<Sort>,
    pub output: Option<Sort>,
}

impl SortPattern {
    pub fn row(inputs: Vec<Sort>) -> Self {
        SortPattern {
            inputs,
            output: None,
        }
    }

    pub fn operation(inputs: [Sort; 3], output: Sort) -> Self {
        SortPattern {
            inputs: inputs.to_vec(),
            output: Some(output),
        }
    }

    pub fn label(&self) -> String {
        let ins: Vec<&str> = self.inputs.iter().map(|s| s.label()).collect();
        match self.output {
            Some(out) => format!("({}) -> {}", ins.join(", "), out.label()),
            None => format!("({})", ins.join(", ")),
        }
    }
}

/// The six classes of ternary components. A component with inputs
/// `(s1, s2, s3)` and output `t` is classified through its cyclic tensor
/// word `(s1*, s2*, s3*, t)`: two algebra letters in cyclically adjacent
/// positions give type A, two in opposite positions type B, and unbalanced
/// words are the secondary classes C1 (all algebra), C2 (all dual),
/// C3 (three algebra letters), C4 (one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ComponentType {
    TypeA,
    TypeB,
    C1,
    C2,
    C3,
    C4,
}

impl ComponentType {
    pub fn is_main(self) -> bool {
        matches!(self, ComponentType::TypeA | ComponentType::TypeB)
    }

    pub fn label(self) -> &'static str {
        match self {
            ComponentType::TypeA => "type-A",
            ComponentType::TypeB => "type-B",
            ComponentType::C1 => "C1",
            ComponentType::C2 => "C2",
            ComponentType::C3 => "C3",
            ComponentType::C4 => "C4",
        }
    }
}

/// Classify a three-input pattern with output sort.
pub fn classify_component(inputs: [Sort; 3], output: Sort) -> ComponentType {
    let word = [inputs[0].flip(), inputs[1].flip(), inputs[2].flip(), output];
    let alg_positions: Vec<usize> = (0..4).filter(|&i| word[i] == Sort::Alg).collect();
    match alg_positions.len() {
        4 => ComponentType::C1,
        0 => ComponentType::C2,
        3 => ComponentType::C3,
        1 => ComponentType::C4,
        2 => {
            let (p, q) = (alg_positions[0], alg_positions[1]);
            if q - p == 2 {
                ComponentType::TypeB
            } else {
                ComponentType::TypeA
            }
        }
        _ => unreachable!(),
    }
}

/// Output sort admitted by the degree constraint for a three-input pattern
/// (operations have degree +1 in the shifted grading): two algebra inputs
/// force an algebra output, one forces a dual output, and zero or three
/// admit no output at all.
pub fn admissible_output(inputs: [Sort; 3]) -> Option<Sort> {
    match inputs.iter().filter(|s| **s == Sort::Alg).count() {
        2 => Some(Sort::Alg),
        1 => Some(Sort::Dual),
        _ => None,
    }
}

/// All 16 (pattern, output) pairs in row-major order (`Alg` before `Dual`).
pub fn all_component_patterns() -> Vec<([Sort; 3], Sort)> {
    let sorts = [Sort::Alg, Sort::Dual];
    let mut out = Vec::new();
    for &a in &sorts {
        for &b in &sorts {
            for &c in &sorts {
                for &t in &sorts {
                    out.push(([a, b, c], t));
                }
            }
        }
    }
    out
}
