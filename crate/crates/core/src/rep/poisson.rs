//! The Poisson bracket induced on coordinate functions of the
//! representation space by a double bracket:
//!
//! ```text
//! {x[a][i][j], x[b][k][l]} = Σ_{c,e} D[a,b,c,e] · x[c][k][j] · x[e][i][l]
//! ```
//!
//! extended to polynomials as a biderivation and verified here by exact
//! evaluation at sampled points.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ainfinity::{project_type_b, TernaryOperation};
use crate::algebra::AssocAlgebra;
use crate::bracket::{bracket_from_m3, DoubleBracket};
use crate::linalg;
use crate::rep::poly::{CoordPoly, Var};
use crate::rep::RepPoint;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// First failure of a per-point sweep: point index plus witness data.
type PointFailure<W> = Option<(usize, W)>;

/// Index quadruple naming one relation entry `(i, j)[u][v]`.
type RelationKey = (usize, usize, usize, usize);

/// The bracket of two coordinate functions as a quadratic polynomial.
pub fn induced_coordinate_bracket(d: &DoubleBracket, u: Var, v: Var) -> CoordPoly {
    let mut out = CoordPoly::zero();
    for (&[a, b, c, e], coeff) in d.entries() {
        if a != u.basis || b != v.basis {
            continue;
        }
        let first = Var {
            basis: c,
            row: v.row,
            col: u.col,
        };
        let second = Var {
            basis: e,
            row: u.row,
            col: v.col,
        };
        let monomial = if first == second {
            vec![(first, 2)]
        } else if first < second {
            vec![(first, 1), (second, 1)]
        } else {
            vec![(second, 1), (first, 1)]
        };
        out.add_term(monomial, coeff.clone());
    }
    out
}

/// All coordinate functions for matrices of size `n`, in flat order.
pub fn all_vars(dim: usize, n: usize) -> Vec<Var> {
    let mut vars = Vec::with_capacity(dim * n * n);
    for basis in 0..dim {
        for row in 0..n {
            for col in 0..n {
                vars.push(Var { basis, row, col });
            }
        }
    }
    vars
}

/// Precomputed pairwise brackets of all coordinate functions.
pub struct PairBrackets {
    pub n: usize,
    pub vars: Vec<Var>,
    /// indexed by flat variable ids
    pub polys: Vec<Vec<CoordPoly>>,
}

impl PairBrackets {
    pub fn new(d: &DoubleBracket, n: usize) -> Self {
        let vars = all_vars(d.dim(), n);
        let polys = vars
            .iter()
            .map(|&u| {
                vars.iter()
                    .map(|&v| induced_coordinate_bracket(d, u, v))
                    .collect()
            })
            .collect();
        PairBrackets { n, vars, polys }
    }

    pub fn poly(&self, u: Var, v: Var) -> &CoordPoly {
        &self.polys[u.flat(self.n)][v.flat(self.n)]
    }
}

/// Values of the coordinates and of all pairwise brackets at one point.
pub struct PointEvaluator<'a> {
    pairs: &'a PairBrackets,
    values: Vec<Scalar>,
    pair_values: Vec<Vec<Scalar>>,
}

impl<'a> PointEvaluator<'a> {
    pub fn new(pairs: &'a PairBrackets, point: &RepPoint) -> Self {
        let values: Vec<Scalar> = pairs.vars.iter().map(|&v| point.entry(v)).collect();
        let value_of = |v: Var| -> Scalar { point.entry(v) };
        let pair_values = pairs
            .polys
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&value_of)).collect())
            .collect();
        PointEvaluator {
            pairs,
            values,
            pair_values,
        }
    }

    pub fn value(&self, v: Var) -> &Scalar {
        &self.values[v.flat(self.pairs.n)]
    }

    pub fn pair_value(&self, u: Var, v: Var) -> &Scalar {
        &self.pair_values[u.flat(self.pairs.n)][v.flat(self.pairs.n)]
    }

    /// `{u, q}` at the point, for a polynomial `q`, by the derivation rule
    /// in the second slot.
    pub fn brace_var_poly(&self, u: Var, q: &CoordPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (monomial, coeff) in q.terms() {
            for (slot, &(z, exp)) in monomial.iter().enumerate() {
                // coeff · exp · x_z^{exp-1} · Π_{other} x_w^{e_w} · {u, z}
                let mut term = coeff * &Scalar::from_int(exp as i64);
                for _ in 1..exp {
                    term = &term * self.value(z);
                }
                for (other_slot, &(w, e)) in monomial.iter().enumerate() {
                    if other_slot == slot {
                        continue;
                    }
                    for _ in 0..e {
                        term = &term * self.value(w);
                    }
                }
                term = &term * self.pair_value(u, z);
                acc += &term;
            }
        }
        acc
    }

    /// Jacobi sum `{u,{v,w}} + {v,{w,u}} + {w,{u,v}}` at the point.
    pub fn jacobi_sum(&self, u: Var, v: Var, w: Var) -> Scalar {
        let mut acc = self.brace_var_poly(u, self.pairs.poly(v, w));
        acc += &self.brace_var_poly(v, self.pairs.poly(w, u));
        acc += &self.brace_var_poly(w, self.pairs.poly(u, v));
        acc
    }
}

/// Biderivation extension of the coordinate bracket, evaluated at a point:
/// `{f, g}(p) = Σ_{u,v} ∂f/∂u (p) · ∂g/∂v (p) · {u, v}(p)`.
pub fn poisson_eval(
    d: &DoubleBracket,
    n: usize,
    f: &CoordPoly,
    g: &CoordPoly,
    p: &RepPoint,
) -> Scalar {
    assert_eq!(n, p.n, "matrix size and point size agree");
    let value_of = |v: Var| p.entry(v);
    let mut acc = Scalar::zero();
    for u in f.vars() {
        let df = f.derivative(u).eval(&value_of);
        if df.is_zero() {
            continue;
        }
        for v in g.vars() {
            let dg = g.derivative(v).eval(&value_of);
            if dg.is_zero() {
                continue;
            }
            let bracket = induced_coordinate_bracket(d, u, v).eval(&value_of);
            if bracket.is_zero() {
                continue;
            }
            let term = &(&df * &dg) * &bracket;
            acc += &term;
        }
    }
    acc
}

/// Antisymmetry of the coordinate bracket as a polynomial identity:
/// `{u, v} + {v, u} = 0` for every pair of coordinate functions.
pub fn check_coordinate_antisymmetry(d: &DoubleBracket, n: usize) -> CheckReport {
    let alg = d.algebra();
    let vars = all_vars(d.dim(), n);
    let mut checked = 0u64;
    for &u in &vars {
        for &v in &vars {
            checked += 1;
            let mut sum = induced_coordinate_bracket(d, u, v);
            sum.add_assign(&induced_coordinate_bracket(d, v, u));
            if !sum.is_zero() {
                let mut residual = std::collections::BTreeMap::new();
                residual.insert("{u,v} + {v,u}".to_string(), sum.render(alg));
                return CheckReport::fail(
                    "coordinate-antisymmetry",
                    checked,
                    vec![u.label(alg), v.label(alg)],
                    residual,
                );
            }
        }
    }
    CheckReport::pass("coordinate-antisymmetry", checked)
}

/// Exact Jacobi check at every point over representatives of the cyclic
/// triple classes of coordinate functions (the Jacobi sum is invariant
/// under cyclic rotation, so this loses nothing).
pub fn check_jacobi_at_points(d: &DoubleBracket, n: usize, points: &[RepPoint]) -> CheckReport {
    let alg = d.algebra();
    let pairs = PairBrackets::new(d, n);
    let vars = &pairs.vars;
    let m = vars.len();
    let results: Vec<PointFailure<(Var, Var, Var, Scalar)>> = points
        .par_iter()
        .enumerate()
        .map(|(pi, point)| {
            let eval = PointEvaluator::new(&pairs, point);
            for i in 0..m {
                for j in i..m {
                    for k in i..m {
                        let value = eval.jacobi_sum(vars[i], vars[j], vars[k]);
                        if !value.is_zero() {
                            return Some((pi, (vars[i], vars[j], vars[k], value)));
                        }
                    }
                }
            }
            None
        })
        .collect();
    let mut checked = 0u64;
    for i in 0..m as u64 {
        checked += (m as u64 - i) * (m as u64 - i);
    }
    checked *= points.len() as u64;
    if let Some((pi, (u, v, w, value))) = results.into_iter().flatten().next() {
        let mut residual = std::collections::BTreeMap::new();
        residual.insert("jacobi sum".to_string(), value.to_string());
        return CheckReport::fail(
            "jacobi-at-points",
            checked,
            vec![
                format!("point {pi}"),
                u.label(alg),
                v.label(alg),
                w.label(alg),
            ],
            residual,
        );
    }
    CheckReport::pass("jacobi-at-points", checked)
}

/// The coordinate image of a function under conjugation: for `φ = Ad_g`,
/// `x[a][i][j] ∘ φ = Σ_{r,s} g[i][r] · x[a][r][s] · g⁻¹[s][j]`.
fn conjugated_coordinate(
    v: Var,
    n: usize,
    g: &linalg::Matrix,
    g_inv: &linalg::Matrix,
) -> CoordPoly {
    let mut out = CoordPoly::zero();
    for r in 0..n {
        if g[v.row][r].is_zero() {
            continue;
        }
        for s in 0..n {
            let coeff = &g[v.row][r] * &g_inv[s][v.col];
            if coeff.is_zero() {
                continue;
            }
            out.add_term(
                vec![(
                    Var {
                        basis: v.basis,
                        row: r,
                        col: s,
                    },
                    1,
                )],
                coeff,
            );
        }
    }
    out
}

/// Equivariance under simultaneous conjugation: for random invertible `g`,
/// random coordinate functions `f, h` and every point `p`,
/// `{f∘Ad_g, h∘Ad_g}(p) = {f, h}(Ad_g(p))` exactly.
pub fn check_gl_equivariance(
    d: &DoubleBracket,
    n: usize,
    points: &[RepPoint],
    count_g: usize,
    rng_seed: u64,
) -> CheckReport {
    const PAIRS_PER_G: usize = 3;
    let alg = d.algebra();
    let vars = all_vars(d.dim(), n);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    // draw the conjugators and the function pairs up front so the sweep
    // over points can run in parallel deterministically
    let mut trials = Vec::new();
    for _ in 0..count_g {
        let (g, g_inv) = loop {
            let g: linalg::Matrix = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Scalar::from_int(rng.gen_range(-3i64..=3)))
                        .collect()
                })
                .collect();
            if let Ok(inv) = linalg::mat_inverse(&g) {
                break (g, inv);
            }
        };
        let pairs: Vec<(Var, Var)> = (0..PAIRS_PER_G)
            .map(|_| {
                (
                    vars[rng.gen_range(0..vars.len())],
                    vars[rng.gen_range(0..vars.len())],
                )
            })
            .collect();
        trials.push((g, g_inv, pairs));
    }
    let results: Vec<PointFailure<(usize, Var, Var, Scalar)>> = points
        .par_iter()
        .enumerate()
        .map(|(pi, point)| {
            for (gi, (g, g_inv, pairs)) in trials.iter().enumerate() {
                let moved = point.conjugated(g, g_inv);
                for &(f, h) in pairs {
                    let f_pull = conjugated_coordinate(f, n, g, g_inv);
                    let h_pull = conjugated_coordinate(h, n, g, g_inv);
                    let lhs = poisson_eval(d, n, &f_pull, &h_pull, point);
                    let rhs = poisson_eval(d, n, &CoordPoly::var(f), &CoordPoly::var(h), &moved);
                    if lhs != rhs {
                        return Some((pi, (gi, f, h, &lhs - &rhs)));
                    }
                }
            }
            None
        })
        .collect();
    let checked = (points.len() * count_g * PAIRS_PER_G) as u64;
    if let Some((pi, (gi, f, h, diff))) = results.into_iter().flatten().next() {
        let mut residual = std::collections::BTreeMap::new();
        residual.insert("lhs - rhs".to_string(), diff.to_string());
        return CheckReport::fail(
            "gl-equivariance",
            checked,
            vec![
                format!("point {pi}"),
                format!("conjugator {gi}"),
                f.label(alg),
                h.label(alg),
            ],
            residual,
        );
    }
    CheckReport::pass("gl-equivariance", checked)
}

/// Bracket of every coordinate function against every defining relation
/// entry `(X_i X_j − Σ_k c_{ij}^k X_k)_{uv}`, evaluated at each point.
pub fn check_ideal_compat_at_points(
    d: &DoubleBracket,
    n: usize,
    points: &[RepPoint],
) -> CheckReport {
    let alg = d.algebra();
    let dim = d.dim();
    let vars = all_vars(dim, n);
    // relation polynomials
    let mut relations = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for u in 0..n {
                for v in 0..n {
                    let mut rel = CoordPoly::zero();
                    for t in 0..n {
                        let a = Var {
                            basis: i,
                            row: u,
                            col: t,
                        };
                        let b = Var {
                            basis: j,
                            row: t,
                            col: v,
                        };
                        rel.add_assign(&CoordPoly::var(a).mul(&CoordPoly::var(b)));
                    }
                    for k in 0..dim {
                        let c = alg.constant(i, j, k);
                        if !c.is_zero() {
                            let entry = CoordPoly::var(Var {
                                basis: k,
                                row: u,
                                col: v,
                            });
                            rel.add_assign(&entry.scaled(&-c));
                        }
                    }
                    if !rel.is_zero() {
                        relations.push(((i, j, u, v), rel));
                    }
                }
            }
        }
    }
    let results: Vec<PointFailure<(Var, RelationKey, Scalar)>> = points
        .par_iter()
        .enumerate()
        .map(|(pi, point)| {
            for &z in &vars {
                let zp = CoordPoly::var(z);
                for (key, rel) in &relations {
                    let value = poisson_eval(d, n, &zp, rel, point);
                    if !value.is_zero() {
                        return Some((pi, (z, *key, value)));
                    }
                }
            }
            None
        })
        .collect();
    let checked = (points.len() * vars.len() * relations.len()) as u64;
    if let Some((pi, (z, (i, j, u, v), value))) = results.into_iter().flatten().next() {
        let names = alg.basis_names();
        let mut residual = std::collections::BTreeMap::new();
        residual.insert("bracket with relation".to_string(), value.to_string());
        return CheckReport::fail(
            "ideal-compatibility",
            checked,
            vec![
                format!("point {pi}"),
                z.label(alg),
                format!("relation ({},{})[{u}][{v}]", names[i], names[j]),
            ],
            residual,
        );
    }
    CheckReport::pass("ideal-compatibility", checked)
}

/// Project a ternary operation to its type-B part, convert it to a bracket
/// and require that bracket to be a polyderivation.
pub fn check_restricted_polyderivation(
    alg: &std::sync::Arc<AssocAlgebra>,
    m3: &TernaryOperation,
) -> CheckReport {
    let projected = project_type_b(m3);
    match bracket_from_m3(alg, &projected) {
        Ok(bracket) => {
            let inner = bracket.check_polyderivation();
            CheckReport {
                name: "restricted-polyderivation".to_string(),
                ..inner
            }
        }
        Err(err) => CheckReport::fail(
            "restricted-polyderivation",
            0,
            vec!["conversion".to_string()],
            [("error".to_string(), err.to_string())].into(),
        ),
    }
}
