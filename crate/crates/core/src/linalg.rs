//! Exact dense linear algebra over `Q`: determinants, ranks, characteristic
//! polynomials and signatures of symmetric matrices.

use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let p = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rational::zero(); p]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

fn row_echelon(mut a: Matrix) -> (Matrix, usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut odd = false;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        if p != rank {
            a.swap(p, rank);
            odd = !odd;
        }
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[rank][c];
            for j in c..cols {
                let t = &f * &a[rank][j];
                a[r][j] -= t;
            }
        }
        rank += 1;
    }
    (a, rank, odd)
}

pub fn determinant(a: &Matrix) -> Rational {
    let n = a.len();
    let (e, rank, odd) = row_echelon(a.clone());
    if rank < n {
        return Rational::zero();
    }
    let d = (0..n).fold(Rational::one(), |acc, i| acc * &e[i][i]);
    if odd {
        -d
    } else {
        d
    }
}

pub fn rank(a: &Matrix) -> usize {
    row_echelon(a.clone()).1
}

/// Coefficients of `det(t*I - a)`, constant term first; the last entry is 1.
/// Reduces to Hessenberg form by exact similarity, then expands.
pub fn char_poly(a: &Matrix) -> Vec<Rational> {
    let n = a.len();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else { continue };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        for r in j + 2..n {
            if h[r][j].is_zero() {
                continue;
            }
            let u = &h[r][j] / &h[j + 1][j];
            for c in 0..n {
                let t = &u * &h[j + 1][c];
                h[r][c] -= t;
            }
            for row in h.iter_mut() {
                let t = &u * &row[r];
                row[j + 1] += t;
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 0..n {
        let mut next = vec![Rational::zero(); k + 2];
        for (d, c) in p[k].iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &h[k][k] * c;
        }
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let f = &prod * &h[i][k];
            for (d, c) in p[i].iter().enumerate() {
                next[d] -= &f * c;
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Signs of the coefficients, constant term first.
pub fn sign_sequence(coeffs: &[Rational]) -> Vec<i8> {
    coeffs.iter().map(sign).collect()
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Numbers of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia from a characteristic polynomial whose roots are all real, by
/// Descartes' rule of signs (exact in that case).
pub fn inertia_from_char_poly(coeffs: &[Rational]) -> Inertia {
    let zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = &coeffs[zero..];
    let pos = variations(rest.iter().map(sign));
    let neg = variations(rest.iter().enumerate().map(|(d, c)| if d % 2 == 1 { -sign(c) } else { sign(c) }));
    Inertia { positive: pos, negative: neg, zero }
}

/// Inertia of a symmetric matrix by symmetric Gaussian elimination
/// (congruence). Independent of [`char_poly`].
pub fn inertia_by_congruence(a: &Matrix) -> Inertia {
    let n = a.len();
    let mut m = a.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia { positive: 0, negative: 0, zero: 0 };
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = m[p][p].clone();
            if d.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            for &i in &active {
                if m[i][p].is_zero() {
                    continue;
                }
                let f = &m[i][p] / &d;
                for &j in &active {
                    let t = &f * &m[p][j];
                    m[i][j] -= t;
                }
            }
            continue;
        }
        // Zero diagonal: pair with an off-diagonal entry, or the rest is zero.
        let pair = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i != j && !m[i][j].is_zero());
        match pair {
            Some((i, j)) => {
                // e_i + e_j has value 2 m[i][j] != 0; rotate it onto the diagonal.
                for r in 0..n {
                    let t = m[r][j].clone();
                    m[r][i] += t;
                }
                for c in 0..n {
                    let t = m[j][c].clone();
                    m[i][c] += t;
                }
            }
            None => {
                inertia.zero += active.len();
                active.clear();
            }
        }
    }
    inertia
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn eval(p: &[Rational], t: &Rational) -> Rational {
        p.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(determinant(&m(&[&[1, 2], &[3, 4]])), int(-2));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(determinant(&identity(3)), int(1));
    }

    #[test]
    fn char_poly_matches_determinant() {
        let a = m(&[&[2, -1, 0, 3], &[1, 0, 4, 1], &[0, 5, -2, 2], &[7, 1, 1, 1]]);
        let p = char_poly(&a);
        assert_eq!(p.len(), 5);
        for t in [int(0), int(1), int(-3), rat(1, 2)] {
            let shifted: Matrix = (0..4)
                .map(|i| (0..4).map(|j| if i == j { &t - &a[i][j] } else { -a[i][j].clone() }).collect())
                .collect();
            assert_eq!(eval(&p, &t), determinant(&shifted));
        }
    }

    #[test]
    fn char_poly_with_zero_subdiagonal() {
        let a = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
        assert_eq!(char_poly(&a), vec![int(-6), int(11), int(-6), int(1)]);
    }

    #[test]
    fn signatures_agree() {
        let cases = [
            m(&[&[0, 1], &[1, 0]]),
            m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]),
            m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]),
            m(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]),
            m(&[&[0, 0], &[0, 0]]),
        ];
        let expect = [0, 0, 1, 3, 0];
        for (a, e) in cases.iter().zip(expect) {
            let d = inertia_from_char_poly(&char_poly(a));
            assert_eq!(d, inertia_by_congruence(a), "{a:?}");
            assert_eq!(d.signature(), e);
        }
    }
}
