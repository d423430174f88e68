use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::Ctx;
use super::field::{rat, Rational};
use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Numerators are drawn from `[-COEFF_NUM, COEFF_NUM] \ {0}`.
pub const COEFF_NUM: i64 = 9;
/// Denominators are drawn from `1..=COEFF_DEN`.
pub const COEFF_DEN: i64 = 3;

/// All exponent vectors of total degree `<= degree` in `nvars` variables.
pub fn monomials_up_to(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, degree, &mut cur, &mut out);
    out.sort();
    out
}

fn draw(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = rng.gen_range(-COEFF_NUM..COEFF_NUM);
    if num >= 0 {
        num += 1;
    }
    rat(num, rng.gen_range(1..=COEFF_DEN))
}

/// Dense polynomial of total degree `<= degree` with every coefficient
/// nonzero; fully determined by `seed`.
pub fn random_polynomial(ctx: &Ctx, degree: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms: Vec<(Monomial, Rational)> =
        monomials_up_to(ctx.nvars(), degree).into_iter().map(|m| (m, draw(&mut rng))).collect();
    Polynomial::from_terms(ctx, terms)
}

/// Linear form `sum a_i x_i` with all `a_i != 0`: the homogeneous degree-one
/// part of [`random_polynomial`] for the same seed.
pub fn random_linear_form(ctx: &Ctx, seed: u64) -> Polynomial {
    random_polynomial(ctx, 1, seed).homogeneous_part(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    #[test]
    fn degree_one_is_dense_and_reproducible() {
        let ctx = VariableContext::real(&["x", "y"]).unwrap();
        let p = random_polynomial(&ctx, 1, 11);
        assert_eq!(p.nterms(), 3);
        assert_eq!(p, random_polynomial(&ctx, 1, 11));
        assert_eq!(random_linear_form(&ctx, 11).nterms(), 2);
    }

    #[test]
    fn shipped_seed_pair_differs() {
        let ctx = VariableContext::real(&["x", "y", "z"]).unwrap();
        assert_ne!(random_polynomial(&ctx, 2, 7), random_polynomial(&ctx, 2, 8));
    }

    #[test]
    fn monomial_count() {
        // C(3 + 2, 2) = 10
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(2, 0), vec![Monomial::one(2)]);
    }
}
