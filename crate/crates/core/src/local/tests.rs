use proptest::prelude::*;

use super::*;
use crate::poly::{int, parse, VariableContext};

fn ideal(names: &[&str], gens: &[&str]) -> LocalIdeal {
    let ctx = VariableContext::real(names).unwrap();
    let gens = gens.iter().map(|g| parse(&ctx, g).unwrap()).collect();
    LocalIdeal::new(&ctx, gens, LocalOrdering::default()).unwrap()
}

fn sb(names: &[&str], gens: &[&str]) -> StandardBasis {
    standard_basis(&ideal(names, gens), &Limits::default()).unwrap()
}

fn mons(ctx_names: &[&str], ms: &[&str]) -> Vec<Monomial> {
    let ctx = VariableContext::real(ctx_names).unwrap();
    ms.iter()
        .map(|m| {
            let p: Polynomial = parse(&ctx, m).unwrap();
            let lead = p.terms().next().unwrap().0.clone();
            lead
        })
        .collect()
}

#[test]
fn maximal_ideal_has_colength_one() {
    let b = sb(&["x", "y"], &["x", "y"]);
    assert_eq!(b.colength(), Colength::Finite(1));
    assert_eq!(b.monomial_basis().unwrap(), mons(&["x", "y"], &["1"]).as_slice());
}

#[test]
fn monomial_ideal_basis() {
    let b = sb(&["x", "y"], &["x^2", "y^3"]);
    assert_eq!(b.colength(), Colength::Finite(6));
    let mut got = b.monomial_basis().unwrap().to_vec();
    got.sort();
    let mut want = mons(&["x", "y"], &["1", "y", "y^2", "x", "x*y", "x*y^2"]);
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn cusp_with_line() {
    assert_eq!(sb(&["x", "y"], &["y^2 - x^3", "y"]).colength(), Colength::Finite(3));
}

#[test]
fn non_isolated() {
    assert_eq!(sb(&["x", "y"], &["x*y"]).colength(), Colength::Infinite);
    assert_eq!(sb(&["x", "y"], &["x^2", "x*y"]).colength(), Colength::Infinite);
}

#[test]
fn jacobian_of_quadratic() {
    assert_eq!(sb(&["x", "y"], &["3*x^2", "2*y"]).colength(), Colength::Finite(2));
}

#[test]
fn unit_ideal_is_zero() {
    let b = sb(&["x", "y"], &["1 + x", "y"]);
    assert_eq!(b.colength(), Colength::Finite(0));
}

#[test]
fn zeros_away_from_origin_are_ignored() {
    // x*(1 - x) and y: the second point x = 1 is not at the origin.
    assert_eq!(sb(&["x", "y"], &["x - x^2", "y"]).colength(), Colength::Finite(1));
    // (x^2 - x^3, y^2): local multiplicity 4, the global one would be 6.
    assert_eq!(sb(&["x", "y"], &["x^2 - x^3", "y^2"]).colength(), Colength::Finite(4));
}

#[test]
fn normal_form_reduces_into_monomial_basis() {
    let b = sb(&["x"], &["x^2"]);
    let ctx = b.ideal().ctx().clone();
    let p: Polynomial = parse(&ctx, "x^3 + x").unwrap();
    assert_eq!(b.normal_form(&p).unwrap(), parse(&ctx, "x").unwrap());
}

#[test]
fn normal_form_uses_units() {
    // y - x^2 with y = x^2 + x^3 as generator: modulo it, y ~ x^2 + x^3.
    let b = sb(&["x", "y"], &["y - x^2 - x^3", "x^4"]);
    assert_eq!(b.colength(), Colength::Finite(4));
    let ctx = b.ideal().ctx().clone();
    let y: Polynomial = parse(&ctx, "y").unwrap();
    let nf = b.normal_form(&y).unwrap();
    assert_eq!(nf, parse(&ctx, "x^2 + x^3").unwrap());
}

#[test]
fn generators_reduce_to_zero() {
    for gens in [&["y^2 - x^3", "y"][..], &["x^3 + x*y^2", "x^2*y - y^3 + x^5"], &["x^2 + y^3", "x*y"]] {
        let b = sb(&["x", "y"], gens);
        for g in b.ideal().generators() {
            assert!(b.normal_form(g).unwrap().is_zero(), "{gens:?}");
        }
    }
}

#[test]
fn multiplication_is_a_homomorphism() {
    let b = sb(&["x", "y"], &["x^2 + y^3", "x*y"]);
    let ctx = b.ideal().ctx().clone();
    let g: Polynomial = parse(&ctx, "1 + x - 2*y").unwrap();
    let h: Polynomial = parse(&ctx, "y + 3*x*y - y^2").unwrap();
    let mg = b.multiplication_matrix(&g).unwrap();
    let mh = b.multiplication_matrix(&h).unwrap();
    let mgh = b.multiplication_matrix(&(&g * &h)).unwrap();
    let n = mg.len();
    for i in 0..n {
        for j in 0..n {
            let mut s = int(0);
            for k in 0..n {
                s += &mg[i][k] * &mh[k][j];
            }
            assert_eq!(s, mgh[i][j]);
        }
    }
}

#[test]
fn orderings_agree_on_colength() {
    let id = ideal(&["x", "y", "z"], &["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"]);
    let a = colength(&id, &Limits::default()).unwrap();
    let ctx = id.ctx().clone();
    let id2 = LocalIdeal::new(&ctx, id.generators().to_vec(), LocalOrdering::neg_deg_lex()).unwrap();
    assert_eq!(a, colength(&id2, &Limits::default()).unwrap());
    assert_eq!(a, Colength::Finite(8));
}

#[test]
fn step_budget_is_enforced() {
    let id = ideal(&["x", "y", "z"], &["x^3 + y^2*z", "y^3 + x*z^2", "z^3 + x^2*y"]);
    let err = standard_basis(&id, &Limits { max_steps: 3, max_degree: 64 }).unwrap_err();
    assert!(matches!(err, IndexError::ResourceLimit(_)));
}

#[test]
fn context_mismatch() {
    let a = VariableContext::real(&["x"]).unwrap();
    let b = VariableContext::real(&["y"]).unwrap();
    let g: Polynomial = parse(&b, "y").unwrap();
    assert_eq!(LocalIdeal::new(&a, vec![g], LocalOrdering::default()).unwrap_err(), IndexError::ContextMismatch);
}

fn lattice_count(nvars: usize, gens: &[Vec<u32>]) -> Option<u64> {
    let bound: u32 = 8;
    let mut pure = vec![false; nvars];
    for g in gens {
        let nz: Vec<usize> = (0..nvars).filter(|&i| g[i] > 0).collect();
        if nz.len() == 1 {
            pure[nz[0]] = true;
        }
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Some(0);
    }
    if pure.iter().any(|p| !p) {
        return None;
    }
    let mut count = 0;
    let mut cur = vec![0u32; nvars];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&cur).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            cur[i] += 1;
            if cur[i] <= bound {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn monomial_ideal_colength_matches_lattice(
        gens in proptest::collection::vec(proptest::collection::vec(0u32..5, 3), 1..6)
    ) {
        let ctx = VariableContext::real(&["x", "y", "z"]).unwrap();
        let polys: Vec<Polynomial> =
            gens.iter().map(|e| Polynomial::term(&ctx, Monomial::new(e.clone()), int(1))).collect();
        let id = LocalIdeal::new(&ctx, polys, LocalOrdering::default()).unwrap();
        let got = colength(&id, &Limits::default()).unwrap().finite();
        prop_assert_eq!(got, lattice_count(3, &gens));
    }
}

#[test]
fn invertible_linear_part_with_quadratic_tails() {
    let names = ["a", "b", "c", "d"];
    let gens = [
        "4*a - 2*a^2 + 2*b^2 + c^2 - d^2",
        "-4*b + 4*a*b - 2*c*d",
        "c + 3*a^2 - 3*b^2 + 2*a*c - 2*b*d",
        "-d - 6*a*b - 2*a*d - 2*b*c",
    ];
    let limits = Limits { max_steps: 20_000, max_degree: 64 };
    let b = standard_basis(&ideal(&names, &gens), &limits).unwrap();
    assert_eq!(b.colength(), Colength::Finite(1));
}
