//! Small exact-rational matrix utilities: multiplication, inversion and rank
//! by fraction-free-ish Gauss elimination. Sizes here are tiny (representation
//! sizes and Gram matrices), so clarity beats asymptotics.

use crate::error::{Error, Result};
use crate::scalar::{zero_vec, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![zero_vec(cols); rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let inner = b.len();
    let m = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zeros(n, m);
    for i in 0..n {
        for (k, a_ik) in a[i].iter().enumerate() {
            if a_ik.is_zero() {
                continue;
            }
            for j in 0..m {
                let prod = a_ik * &b[k][j];
                out[i][j] += &prod;
            }
        }
    }
    out
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, c: &Scalar) -> Matrix {
    a.iter()
        .map(|row| row.iter().map(|x| x * c).collect())
        .collect()
}

pub fn mat_eq(a: &Matrix, b: &Matrix) -> bool {
    a == b
}

pub fn mat_is_zero(a: &Matrix) -> bool {
    a.iter().all(|row| row.iter().all(Scalar::is_zero))
}

/// Gauss-Jordan inverse. Fails on singular input.
pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut work = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        let p_inv = p.recip().expect("pivot is nonzero");
        for j in 0..n {
            work[col][j] = &work[col][j] * &p_inv;
            inv[col][j] = &inv[col][j] * &p_inv;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            for j in 0..n {
                let w = &factor * &work[col][j];
                work[r][j] -= &w;
                let v = &factor * &inv[col][j];
                inv[r][j] -= &v;
            }
        }
    }
    Ok(inv)
}

pub fn rank(a: &Matrix) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut work = a.clone();
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(r, pivot);
        let p = work[r][col].clone();
        let p_inv = p.recip().expect("pivot is nonzero");
        for j in col..cols {
            work[r][j] = &work[r][j] * &p_inv;
        }
        for i in 0..rows {
            if i == r || work[i][col].is_zero() {
                continue;
            }
            let factor = work[i][col].clone();
            for j in col..cols {
                let w = &factor * &work[r][j];
                work[i][j] -= &w;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solve the homogeneous system `m v = 0`; returns a basis of the kernel.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if cols == 0 {
        return Vec::new();
    }
    let mut work = m.clone();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(r, p);
        let inv = work[r][col].recip().expect("pivot is nonzero");
        for j in 0..cols {
            work[r][j] = &work[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || work[i][col].is_zero() {
                continue;
            }
            let factor = work[i][col].clone();
            for j in 0..cols {
                let w = &factor * &work[r][j];
                work[i][j] -= &w;
            }
        }
        pivot_col_of_row.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = zero_vec(cols);
        v[free] = Scalar::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -&work[row][free];
        }
        basis.push(v);
    }
    basis
}

pub fn block_diag(blocks: &[Matrix]) -> Matrix {
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut out = zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        let s = b.len();
        for i in 0..s {
            for j in 0..s {
                out[offset + i][offset + j] = b[i][j].clone();
            }
        }
        offset += s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 1, 3], &[0, -1, 1]]);
        let inv = mat_inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert_eq!(mat_mul(&inv, &a), identity(3));
    }

    #[test]
    fn singular_matrix_rejected() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(matches!(mat_inverse(&a), Err(Error::SingularMatrix)));
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let a = m(&[&[1, 2, 3]]);
        let basis = kernel_basis(&a);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let img: Scalar = a[0].iter().zip(v).map(|(c, x)| c * x).sum();
            assert!(img.is_zero());
        }
    }
}
