//! Term-list polynomials sorted by a local ordering, Mora's normal form and
//! the standard-basis loop.

use std::cmp::Ordering;

use super::ordering::LocalOrdering;
use super::Limits;
use crate::error::{IndexError, Result};
use crate::poly::{Field, Monomial};

/// Terms sorted in strictly decreasing local order; leading term first.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct LPoly<C: Field> {
    pub terms: Vec<(Monomial, C)>,
    /// Highest total degree among the terms.
    pub max_deg: u32,
}

impl<C: Field> LPoly<C> {
    pub fn new(mut terms: Vec<(Monomial, C)>, ord: &LocalOrdering) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.clone() + c;
                    if lc.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push((m, c)),
            }
        }
        Self::from_sorted(merged)
    }

    fn from_sorted(terms: Vec<(Monomial, C)>) -> Self {
        let max_deg = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        LPoly { terms, max_deg }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &C {
        &self.terms[0].1
    }

    pub fn ecart(&self) -> u32 {
        self.max_deg - self.lead().degree()
    }

    pub fn monic(&self) -> Self {
        let inv = self.lc().inv();
        LPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * inv.clone())).collect(),
            max_deg: self.max_deg,
        }
    }

    /// `self - c * mon * g`, dropping every term of degree `>= trunc` when given.
    pub fn sub_mul(&self, c: &C, mon: &Monomial, g: &LPoly<C>, ord: &LocalOrdering, trunc: Option<u32>) -> Self {
        let keep = |m: &Monomial| trunc.map_or(true, |t| m.degree() < t);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, gc)| (m.mul(mon), gc.clone() * c.clone())).peekable();
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => ord.cmp(ma, mb),
            };
            match next {
                Ordering::Greater => {
                    let (m, c) = a.next().unwrap();
                    if keep(m) {
                        out.push((m.clone(), c.clone()));
                    }
                }
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    if keep(&m) {
                        out.push((m, -c));
                    }
                }
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let s = ca.clone() - cb;
                    if !s.is_zero() && keep(m) {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        Self::from_sorted(out)
    }

    /// Cancels the leading term of `self` against `g`. Requires `lead(g) | lead(self)`.
    pub fn reduce_lead(&self, g: &LPoly<C>, ord: &LocalOrdering, trunc: Option<u32>) -> Self {
        let q = g.lead().quotient_of(self.lead()).expect("leading monomial must divide");
        let c = self.lc().clone() / g.lc().clone();
        self.sub_mul(&c, &q, g, ord, trunc)
    }

    pub fn tail(&self) -> Self {
        Self::from_sorted(self.terms[1..].to_vec())
    }
}

/// Counts reduction steps against the configured budget.
pub(crate) struct Budget<'a> {
    limits: &'a Limits,
    steps: u64,
}

impl<'a> Budget<'a> {
    pub fn new(limits: &'a Limits) -> Self {
        Budget { limits, steps: 0 }
    }

    pub fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limits.max_steps {
            return Err(IndexError::ResourceLimit(format!(
                "standard basis exceeded {} reduction steps",
                self.limits.max_steps
            )));
        }
        Ok(())
    }

    pub fn check_degree<C: Field>(&self, p: &LPoly<C>) -> Result<()> {
        if p.max_deg > self.limits.max_degree {
            return Err(IndexError::ResourceLimit(format!(
                "intermediate degree {} exceeds the bound {}",
                p.max_deg, self.limits.max_degree
            )));
        }
        Ok(())
    }
}

/// Mora's weak normal form: returns `h` with `u*f - h` in the ideal for some
/// unit `u`, and `lead(h)` not divisible by any leading monomial of `basis`
/// (or `h = 0`).
///
/// With `trunc`, terms of degree `>= trunc` are dropped throughout, which is
/// sound once that power of the maximal ideal is known to lie in the ideal.
pub(crate) fn mora_normal_form<C: Field>(
    f: &LPoly<C>,
    basis: &[LPoly<C>],
    ord: &LocalOrdering,
    budget: &mut Budget<'_>,
    trunc: Option<u32>,
) -> Result<LPoly<C>> {
    let mut h = match trunc {
        Some(t) => LPoly::from_sorted(f.terms.iter().filter(|(m, _)| m.degree() < t).cloned().collect()),
        None => f.clone(),
    };
    let mut extra: Vec<LPoly<C>> = Vec::new();
    while !h.is_zero() {
        let lead = h.lead().clone();
        let best = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lead().divides(&lead))
            .min_by_key(|g| g.ecart());
        let Some(g) = best else { break };
        let g = g.clone();
        if g.ecart() > h.ecart() {
            extra.push(h.clone());
        }
        h = h.reduce_lead(&g, ord, trunc);
        budget.step()?;
        budget.check_degree(&h)?;
    }
    Ok(h)
}

fn spoly<C: Field>(f: &LPoly<C>, g: &LPoly<C>, ord: &LocalOrdering) -> LPoly<C> {
    let l = f.lead().lcm(g.lead());
    let qf = f.lead().quotient_of(&l).unwrap();
    let qg = g.lead().quotient_of(&l).unwrap();
    let fm = LPoly::new(Vec::new(), ord).sub_mul(&-f.lc().inv(), &qf, f, ord, None);
    fm.sub_mul(&g.lc().inv(), &qg, g, ord, None)
}

/// Standard basis by pair completion with Mora's normal form. The result is
/// not yet minimised.
pub(crate) fn standard_basis_raw<C: Field>(
    gens: Vec<LPoly<C>>,
    ord: &LocalOrdering,
    limits: &Limits,
) -> Result<Vec<LPoly<C>>> {
    let mut budget = Budget::new(limits);
    let mut basis: Vec<LPoly<C>> = Vec::new();
    for g in gens {
        budget.check_degree(&g)?;
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut trunc = corner_bound(&basis);
    while !pairs.is_empty() {
        if trunc == Some(0) {
            break;
        }
        // Normal selection strategy; ties keep insertion order.
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(k, &(i, j))| (basis[i].lead().lcm(basis[j].lead()).degree(), *k))
            .unwrap();
        let (i, j) = pairs.remove(pos);
        // No coprime-leads shortcut: its usual proof needs a well-ordering.
        let s = spoly(&basis[i], &basis[j], ord);
        budget.step()?;
        let h = mora_normal_form(&s, &basis, ord, &mut budget, trunc)?;
        if !h.is_zero() {
            let k = basis.len();
            basis.push(h.monic());
            trunc = corner_bound(&basis);
            for i in 0..k {
                pairs.push((i, k));
            }
        }
    }
    Ok(basis)
}

/// A degree `d` with every monomial of degree `>= d` divisible by some
/// leading monomial, read off the pure powers. The maximal ideal to the
/// power `d` then lies in the ideal of the local ring (Nakayama), so for a
/// degree-anticompatible ordering everything from degree `d` on can be
/// dropped without changing leading monomials.
fn corner_bound<C: Field>(basis: &[LPoly<C>]) -> Option<u32> {
    let nvars = basis.first()?.lead().nvars();
    let mut bounds = vec![None::<u32>; nvars];
    for g in basis {
        if g.lead().is_one() {
            return Some(0);
        }
        if let Some((i, e)) = g.lead().pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
    Some(bounds.iter().map(|b| b - 1).sum::<u32>() + 1)
}

/// Keeps only elements whose leading monomial is not divisible by another
/// element's leading monomial (first occurrence wins on ties).
pub(crate) fn minimise<C: Field>(basis: Vec<LPoly<C>>) -> Vec<LPoly<C>> {
    let mut keep = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep
}

/// Full reduction modulo `basis` plus all monomials of degree `>= trunc`.
/// Valid when the maximal ideal to the power `trunc` lies in the ideal.
pub(crate) fn truncated_normal_form<C: Field>(
    f: &LPoly<C>,
    basis: &[LPoly<C>],
    ord: &LocalOrdering,
    trunc: u32,
) -> LPoly<C> {
    let mut h = LPoly::from_sorted(f.terms.iter().filter(|(m, _)| m.degree() < trunc).cloned().collect());
    let mut out: Vec<(Monomial, C)> = Vec::new();
    while !h.is_zero() {
        match basis.iter().find(|g| g.lead().divides(h.lead())) {
            Some(g) => h = h.reduce_lead(g, ord, Some(trunc)),
            None => {
                out.push(h.terms[0].clone());
                h = h.tail();
            }
        }
    }
    LPoly::from_sorted(out)
}
