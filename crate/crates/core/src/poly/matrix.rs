//! Jacobian matrices and determinants of polynomial matrices.

use std::collections::HashMap;

use super::field::Field;
use super::polynomial::{same_ctx, Polynomial};
use crate::error::{IndexError, Result};

/// Row-major matrix of polynomials.
pub type PolyMatrix<C> = Vec<Vec<Polynomial<C>>>;

/// Entry `(i, j)` is the derivative of `ps[i]` with respect to the `j`-th variable.
pub fn jacobian_matrix<C: Field>(ps: &[Polynomial<C>]) -> Result<PolyMatrix<C>> {
    let Some(first) = ps.first() else {
        return Ok(Vec::new());
    };
    if ps.iter().any(|p| !same_ctx(p.ctx(), first.ctx())) {
        return Err(IndexError::ContextMismatch);
    }
    let n = first.ctx().nvars();
    Ok(ps.iter().map(|p| (0..n).map(|j| p.derivative(j)).collect()).collect())
}

/// Determinant of a square polynomial matrix by Laplace expansion along rows,
/// memoised on the set of columns still available.
pub fn determinant<C: Field>(mat: &PolyMatrix<C>) -> Result<Polynomial<C>> {
    let r = mat.len();
    if mat.iter().any(|row| row.len() != r) {
        return Err(IndexError::InvalidInput("determinant of a non-square matrix".into()));
    }
    if r == 0 {
        return Err(IndexError::InvalidInput("determinant of an empty matrix".into()));
    }
    let cols: Vec<usize> = (0..r).collect();
    let mut memo = HashMap::new();
    Ok(minor_det(mat, 0, &cols, &mut memo))
}

fn minor_det<C: Field>(
    mat: &PolyMatrix<C>,
    row: usize,
    cols: &[usize],
    memo: &mut HashMap<Vec<usize>, Polynomial<C>>,
) -> Polynomial<C> {
    if cols.len() == 1 {
        return mat[row][cols[0]].clone();
    }
    if let Some(p) = memo.get(cols) {
        return p.clone();
    }
    let ctx = mat[row][cols[0]].ctx().clone();
    let mut acc = Polynomial::zero(&ctx);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &mat[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = minor_det(mat, row + 1, &rest, memo);
        let prod = entry * &sub;
        acc = if k % 2 == 0 { &acc + &prod } else { &acc - &prod };
    }
    memo.insert(cols.to_vec(), acc.clone());
    acc
}

/// All `r x r` minors of an `r x c` matrix, columns chosen in lexicographic
/// subset order.
pub fn maximal_minors<C: Field>(mat: &PolyMatrix<C>) -> Result<Vec<Polynomial<C>>> {
    let r = mat.len();
    let c = mat.first().map_or(0, Vec::len);
    if r == 0 {
        return Err(IndexError::InvalidInput("empty matrix".into()));
    }
    if mat.iter().any(|row| row.len() != c) {
        return Err(IndexError::InvalidInput("ragged matrix".into()));
    }
    if r > c {
        return Err(IndexError::InvalidInput(format!("{r} rows exceed {c} columns")));
    }
    let ctx = mat[0][0].ctx();
    if mat.iter().flatten().any(|p| !same_ctx(p.ctx(), ctx)) {
        return Err(IndexError::ContextMismatch);
    }
    let mut out = Vec::new();
    for subset in column_subsets(c, r) {
        let sub: PolyMatrix<C> = mat.iter().map(|row| subset.iter().map(|&j| row[j].clone()).collect()).collect();
        out.push(determinant(&sub)?);
    }
    Ok(out)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
