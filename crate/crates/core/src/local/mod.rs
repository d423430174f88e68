//! Ideals in the local ring at the origin: standard bases, colength,
//! monomial bases, normal forms and multiplication matrices.
//!
//! Every computation uses a local ordering, so leading terms describe the
//! germ at `0` and zeros away from the origin are never counted.

mod engine;
mod ordering;

use std::fmt;

use serde::{Serialize, Serializer};

pub use ordering::{LocalOrdering, OrderingKind};

use crate::error::{IndexError, Result};
use crate::poly::{same_ctx, Ctx, Field, Monomial, Polynomial, Rational};
use engine::{minimise, mora_normal_form, standard_basis_raw, truncated_normal_form, Budget, LPoly};

/// Bounds that turn runaway computations into [`IndexError::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_steps: u64,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_steps: 1_000_000, max_degree: 64 }
    }
}

/// Ordering plus resource limits, threaded through every index computation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub ordering: LocalOrdering,
    pub limits: Limits,
}

impl Settings {
    pub fn with_ordering(ordering: LocalOrdering) -> Self {
        Settings { ordering, limits: Limits::default() }
    }
}

/// Dimension of the local quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Colength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Colength::Finite(n) => s.serialize_u64(*n),
            Colength::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// An ideal of the local ring at the origin, given by polynomial generators.
#[derive(Clone, Debug)]
pub struct LocalIdeal<C: Field = Rational> {
    ctx: Ctx,
    generators: Vec<Polynomial<C>>,
    ordering: LocalOrdering,
}

impl<C: Field> LocalIdeal<C> {
    /// Zero generators are dropped; all generators must share `ctx`.
    pub fn new(ctx: &Ctx, generators: Vec<Polynomial<C>>, ordering: LocalOrdering) -> Result<Self> {
        if generators.iter().any(|g| !same_ctx(g.ctx(), ctx)) {
            return Err(IndexError::ContextMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(LocalIdeal { ctx: ctx.clone(), generators, ordering })
    }

    /// Infers the context from the first generator.
    pub fn from_generators(generators: Vec<Polynomial<C>>, ordering: LocalOrdering) -> Result<Self> {
        let ctx = generators
            .first()
            .map(|g| g.ctx().clone())
            .ok_or_else(|| IndexError::InvalidInput("an ideal needs at least one generator to fix its ring".into()))?;
        Self::new(&ctx, generators, ordering)
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn ordering(&self) -> &LocalOrdering {
        &self.ordering
    }

    fn lpoly(&self, p: &Polynomial<C>) -> LPoly<C> {
        LPoly::new(p.terms().map(|(m, c)| (m.clone(), c.clone())).collect(), &self.ordering)
    }
}

/// A reduced standard basis together with the data it determines.
#[derive(Clone, Debug)]
pub struct StandardBasis<C: Field = Rational> {
    ideal: LocalIdeal<C>,
    basis: Vec<Polynomial<C>>,
    reducers: Vec<LPoly<C>>,
    leading: Vec<Monomial>,
    colength: Colength,
    monomial_basis: Option<Vec<Monomial>>,
    /// Every monomial of this degree or higher lies in the ideal.
    trunc: Option<u32>,
}

/// Computes the reduced standard basis of `ideal`: minimal, monic, sorted by
/// decreasing leading monomial and, when the colength is finite, with tails
/// supported on standard monomials.
pub fn standard_basis<C: Field>(ideal: &LocalIdeal<C>, limits: &Limits) -> Result<StandardBasis<C>> {
    let ord = &ideal.ordering;
    let gens: Vec<LPoly<C>> = ideal.generators.iter().map(|g| ideal.lpoly(g)).collect();
    let raw = standard_basis_raw(gens, ord, limits)?;
    let mut basis = minimise(raw);
    basis.sort_by(|a, b| ord.cmp(b.lead(), a.lead()));
    let nvars = ideal.ctx.nvars();
    let leading: Vec<Monomial> = basis.iter().map(|g| g.lead().clone()).collect();

    let (colength, monomial_basis, trunc) = if leading.iter().any(Monomial::is_one) {
        (Colength::Finite(0), Some(Vec::new()), Some(0))
    } else {
        match standard_monomials(nvars, &leading) {
            Some(mut mons) => {
                mons.sort_by(|a, b| ord.cmp(b, a));
                let d = mons.iter().map(Monomial::degree).max().unwrap_or(0) + 1;
                (Colength::Finite(mons.len() as u64), Some(mons), Some(d))
            }
            None => (Colength::Infinite, None, None),
        }
    };

    if let Some(d) = trunc {
        let mut reduced = Vec::with_capacity(basis.len());
        for g in &basis {
            let tail = truncated_normal_form(&g.tail(), &basis, ord, d);
            let mut terms = vec![g.terms[0].clone()];
            terms.extend(tail.terms);
            reduced.push(LPoly::new(terms, ord));
        }
        basis = reduced;
    }

    let as_poly = |g: &LPoly<C>| Polynomial::from_terms(&ideal.ctx, g.terms.iter().cloned());
    Ok(StandardBasis {
        ideal: ideal.clone(),
        basis: basis.iter().map(as_poly).collect(),
        reducers: basis,
        leading,
        colength,
        monomial_basis,
        trunc,
    })
}

/// Monomials outside the monomial ideal generated by `leading`, or `None` if
/// there are infinitely many.
fn standard_monomials(nvars: usize, leading: &[Monomial]) -> Option<Vec<Monomial>> {
    let mut bounds = vec![u32::MAX; nvars];
    for m in leading {
        if let Some((i, e)) = m.pure_power() {
            bounds[i] = bounds[i].min(e);
        }
    }
    if bounds.iter().any(|&b| b == u32::MAX) {
        return None;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, cur: &mut Vec<u32>, bounds: &[u32], leading: &[Monomial], out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..bounds[i] {
            cur[i] = e;
            // Standard monomials are closed under division, so once the
            // prefix is divisible every larger exponent is too.
            let probe = Monomial::new(cur.clone());
            if leading.iter().any(|l| l.divides(&probe)) {
                break;
            }
            rec(i + 1, cur, bounds, leading, out);
        }
        cur[i] = 0;
    }
    rec(0, &mut cur, &bounds, leading, &mut out);
    Some(out)
}

impl<C: Field> StandardBasis<C> {
    pub fn ideal(&self) -> &LocalIdeal<C> {
        &self.ideal
    }

    pub fn basis(&self) -> &[Polynomial<C>] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn colength(&self) -> Colength {
        self.colength
    }

    /// Standard monomials in decreasing local order, present iff the
    /// colength is finite.
    pub fn monomial_basis(&self) -> Option<&[Monomial]> {
        self.monomial_basis.as_deref()
    }

    /// For finite colength the unique representative supported on the
    /// monomial basis. Otherwise Mora's weak normal form, which agrees with
    /// the true one up to a unit factor and is zero exactly on the ideal.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Result<Polynomial<C>> {
        if !same_ctx(p.ctx(), &self.ideal.ctx) {
            return Err(IndexError::ContextMismatch);
        }
        let lp = self.ideal.lpoly(p);
        let ord = &self.ideal.ordering;
        let nf = match self.trunc {
            Some(d) => truncated_normal_form(&lp, &self.reducers, ord, d),
            None => {
                let limits = Limits::default();
                let mut budget = Budget::new(&limits);
                mora_normal_form(&lp, &self.reducers, ord, &mut budget, None)?
            }
        };
        Ok(Polynomial::from_terms(&self.ideal.ctx, nf.terms))
    }

    /// Coefficients of the normal form of `p` on the monomial basis.
    pub fn coordinates(&self, p: &Polynomial<C>) -> Result<Vec<C>> {
        let mons = self.require_finite()?;
        let nf = self.normal_form(p)?;
        Ok(mons.iter().map(|m| nf.coeff(m)).collect())
    }

    /// Matrix of multiplication by `g` on the quotient, in the monomial
    /// basis: column `j` holds the coordinates of `g * b_j`.
    pub fn multiplication_matrix(&self, g: &Polynomial<C>) -> Result<Vec<Vec<C>>> {
        let mons = self.require_finite()?.to_vec();
        let n = mons.len();
        let mut mat = vec![vec![C::zero(); n]; n];
        for (j, b) in mons.iter().enumerate() {
            let prod = g.mul_term(b, &C::one());
            for (i, c) in self.coordinates(&prod)?.into_iter().enumerate() {
                mat[i][j] = c;
            }
        }
        Ok(mat)
    }

    fn require_finite(&self) -> Result<&[Monomial]> {
        self.monomial_basis
            .as_deref()
            .ok_or_else(|| IndexError::NonIsolated("the local quotient is infinite-dimensional".into()))
    }
}

/// Colength of `ideal` in the local ring.
pub fn colength<C: Field>(ideal: &LocalIdeal<C>, limits: &Limits) -> Result<Colength> {
    Ok(standard_basis(ideal, limits)?.colength())
}

/// Free-function form of [`StandardBasis::normal_form`].
pub fn normal_form<C: Field>(p: &Polynomial<C>, sb: &StandardBasis<C>) -> Result<Polynomial<C>> {
    sb.normal_form(p)
}

/// Free-function form of [`StandardBasis::multiplication_matrix`].
pub fn multiplication_matrix<C: Field>(g: &Polynomial<C>, sb: &StandardBasis<C>) -> Result<Vec<Vec<C>>> {
    sb.multiplication_matrix(g)
}

/// Colength of the ideal generated by `gens` under `settings`.
pub fn colength_of<C: Field>(ctx: &Ctx, gens: Vec<Polynomial<C>>, settings: &Settings) -> Result<Colength> {
    let ideal = LocalIdeal::new(ctx, gens, settings.ordering.clone())?;
    colength(&ideal, &settings.limits)
}

/// Standard basis of the ideal generated by `gens` under `settings`.
pub fn standard_basis_of<C: Field>(
    ctx: &Ctx,
    gens: Vec<Polynomial<C>>,
    settings: &Settings,
) -> Result<StandardBasis<C>> {
    let ideal = LocalIdeal::new(ctx, gens, settings.ordering.clone())?;
    standard_basis(&ideal, &settings.limits)
}

#[cfg(test)]
mod tests;
