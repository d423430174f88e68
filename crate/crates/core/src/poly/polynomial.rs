use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::context::Ctx;
use super::field::{Field, Gaussian, Rational};
use super::monomial::Monomial;
use crate::error::{IndexError, Result};

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept merged and zero-free, so structural equality is
/// mathematical equality. Arithmetic between polynomials of different
/// contexts panics; the fallible entry points (`jacobian_matrix`, ideal
/// construction, ...) check contexts first and return
/// [`IndexError::ContextMismatch`].
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C: Field = Rational> {
    ctx: Ctx,
    terms: BTreeMap<Monomial, C>,
}

/// Polynomial with Gaussian rational coefficients.
pub type CPoly = Polynomial<Gaussian>;

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, C::one())
    }

    pub fn constant(ctx: &Ctx, c: C) -> Self {
        Self::term(ctx, Monomial::one(ctx.nvars()), c)
    }

    pub fn term(ctx: &Ctx, mon: Monomial, c: C) -> Self {
        assert_eq!(mon.nvars(), ctx.nvars(), "monomial length must match the context");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mon, c);
        }
        Polynomial { ctx: ctx.clone(), terms }
    }

    /// The `i`-th coordinate function.
    pub fn var_at(ctx: &Ctx, i: usize) -> Self {
        Self::term(ctx, Monomial::var(ctx.nvars(), i), C::one())
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let i = ctx.index_of(name).ok_or_else(|| IndexError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_at(ctx, i))
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(ctx: &Ctx, terms: I) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one(self.ctx.nvars()))
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.mul(mon), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the `i`-th variable.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c.clone() * C::from_rational(Rational::from_integer(e.into())));
        }
        out
    }

    pub fn differentiate(&self, var: &str) -> Result<Self> {
        let i = self.ctx.index_of(var).ok_or_else(|| IndexError::UnknownVariable(var.to_string()))?;
        Ok(self.derivative(i))
    }

    /// Composition: replaces the `i`-th variable by `images[i]`; the result
    /// lives in the images' context.
    pub fn substitute(&self, target: &Ctx, images: &[Polynomial<C>]) -> Self {
        assert_eq!(images.len(), self.ctx.nvars(), "one image per variable");
        let mut cache: Vec<Vec<Polynomial<C>>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Moves the polynomial into another context by matching variable names.
    pub fn embed(&self, target: &Ctx) -> Result<Self> {
        let map: Vec<usize> = self
            .ctx
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| IndexError::UnknownVariable(n.clone())))
            .collect::<Result<_>>()?;
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] = e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Sets every variable missing from `target` to zero and moves the rest
    /// into `target` by name.
    pub fn restrict(&self, target: &Ctx) -> Self {
        let mut out = Polynomial::zero(target);
        'terms: for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match target.index_of(&self.ctx.names()[i]) {
                    Some(j) => exps[j] = e,
                    None => continue 'terms,
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    fn check_ctx(&self, other: &Self) {
        assert!(same_ctx(&self.ctx, &other.ctx), "polynomials from different variable contexts cannot be combined");
    }
}

impl Polynomial<Rational> {
    pub fn to_gaussian(&self) -> CPoly {
        self.map_coeffs(|c| Gaussian::real(c.clone()))
    }
}

impl Polynomial<Gaussian> {
    /// Real part of every coefficient.
    pub fn re(&self) -> Polynomial<Rational> {
        self.map_coeffs(|c| c.re.clone())
    }

    /// Imaginary part of every coefficient.
    pub fn im(&self) -> Polynomial<Rational> {
        self.map_coeffs(|c| c.im.clone())
    }

    /// The rational polynomial, if all coefficients are real.
    pub fn to_rational(&self) -> Option<Polynomial<Rational>> {
        if self.terms.values().all(Gaussian::is_real) {
            Some(self.re())
        } else {
            None
        }
    }

    pub fn from_parts(re: &Polynomial<Rational>, im: &Polynomial<Rational>) -> CPoly {
        let i = Polynomial::constant(re.ctx(), Gaussian::i());
        &re.to_gaussian() + &(&i * &im.to_gaussian())
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ctx(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ctx(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ctx(rhs);
        let mut out = Polynomial::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $f:ident) => {
        impl<C: Field> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<C: Field> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.prints_negative();
            let c = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !c.is_one() || m.is_one() {
                c.write_factor(f)?;
                first = false;
            }
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ctx.names()[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}
