//! Sparse multivariate polynomials with exact rational coefficients over
//! the matrix coordinate functions `x[a][i][j]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::AssocAlgebra;
use crate::scalar::Scalar;

/// One coordinate function: basis element `a`, matrix entry `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub basis: usize,
    pub row: usize,
    pub col: usize,
}

impl Var {
    pub fn flat(&self, n: usize) -> usize {
        (self.basis * n + self.row) * n + self.col
    }

    pub fn label(&self, alg: &AssocAlgebra) -> String {
        format!(
            "x[{}][{}][{}]",
            alg.basis_names()[self.basis],
            self.row,
            self.col
        )
    }
}

/// Monomial = sorted exponent list, no zero exponents.
pub type Monomial = Vec<(Var, u32)>;

/// Polynomial in canonical form: sorted monomials, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoordPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl CoordPoly {
    pub fn zero() -> Self {
        CoordPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = CoordPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = CoordPoly::zero();
        p.add_term(vec![(v, 1)], Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(monomial.windows(2).all(|w| w[0].0 < w[1].0));
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &CoordPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn negated(&self) -> CoordPoly {
        CoordPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scaled(&self, k: &Scalar) -> CoordPoly {
        if k.is_zero() {
            return CoordPoly::zero();
        }
        CoordPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &CoordPoly) -> CoordPoly {
        let mut out = CoordPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(merge_monomials(ma, mb), ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, v: Var) -> CoordPoly {
        let mut out = CoordPoly::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|(w, _)| *w == v) {
                let (_, e) = m[pos];
                let mut reduced = m.clone();
                if e == 1 {
                    reduced.remove(pos);
                } else {
                    reduced[pos].1 = e - 1;
                }
                out.add_term(reduced, c * &Scalar::from_int(e as i64));
            }
        }
        out
    }

    /// Variables occurring in the polynomial.
    pub fn vars(&self) -> Vec<Var> {
        let mut set = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for (v, _) in m {
                set.insert(*v);
            }
        }
        set.into_iter().collect()
    }

    /// Evaluate with variable values supplied by a lookup.
    pub fn eval(&self, value: &impl Fn(Var) -> Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m {
                let x = value(*v);
                for _ in 0..*e {
                    term = &term * &x;
                }
            }
            acc += &term;
        }
        acc
    }

    pub fn render(&self, alg: &AssocAlgebra) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mono = m
                .iter()
                .map(|(v, e)| {
                    if *e == 1 {
                        v.label(alg)
                    } else {
                        format!("{}^{}", v.label(alg), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("·");
            if mono.is_empty() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(mono);
            } else {
                parts.push(format!("({c})·{mono}"));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for CoordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{c}·{m:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn merge_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out: Monomial = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(b: usize, r: usize, c: usize) -> Var {
        Var {
            basis: b,
            row: r,
            col: c,
        }
    }

    #[test]
    fn product_and_derivative() {
        let x = CoordPoly::var(v(0, 0, 0));
        let y = CoordPoly::var(v(1, 0, 0));
        // (x + y)^2 = x^2 + 2xy + y^2
        let mut s = x.clone();
        s.add_assign(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.terms().len(), 3);
        let dx = sq.derivative(v(0, 0, 0));
        // 2x + 2y
        let mut expected = x.scaled(&Scalar::from_int(2));
        expected.add_assign(&y.scaled(&Scalar::from_int(2)));
        assert_eq!(dx, expected);
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let x = CoordPoly::var(v(0, 0, 0));
        let mut p = x.clone();
        p.add_assign(&x.negated());
        assert!(p.is_zero());
        assert!(p.terms().is_empty());
    }

    #[test]
    fn eval_exactly() {
        let p = CoordPoly::var(v(0, 0, 0)).mul(&CoordPoly::var(v(1, 0, 0)));
        let val = p.eval(&|var: Var| {
            if var.basis == 0 {
                Scalar::ratio(1, 2)
            } else {
                Scalar::from_int(4)
            }
        });
        assert_eq!(val, Scalar::from_int(2));
    }
}
