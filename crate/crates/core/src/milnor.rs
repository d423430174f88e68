//! Complete intersection germs, Milnor numbers and the Euler
//! characteristic of the Milnor fiber.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex_index::sign_power;
use crate::error::{IndexError, Result};
use crate::linalg;
use crate::local::{colength_of, Colength, LocalOrdering, Settings};
use crate::poly::{jacobian_matrix, maximal_minors, parse, random_linear_form, same_ctx, ChartKind, Ctx, Polynomial};

/// `V = {f_1 = ... = f_k = 0}` near `0` in `C^{n+k}`.
#[derive(Clone)]
pub struct GermSpec {
    name: String,
    ctx: Ctx,
    defining: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<LocalOrdering, FiberReport>>>,
}

impl fmt::Debug for GermSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GermSpec").field("name", &self.name).field("ctx", &self.ctx.names()).field("defining", &self.defining).finish()
    }
}

impl PartialEq for GermSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && same_ctx(&self.ctx, &other.ctx) && self.defining == other.defining
    }
}

impl GermSpec {
    pub fn new(name: &str, ctx: &Ctx, defining: Vec<Polynomial>) -> Result<Self> {
        if ctx.kind() != ChartKind::Complex {
            return Err(IndexError::InvalidInput("germs live on a complex chart".into()));
        }
        if defining.is_empty() {
            return Err(IndexError::InvalidInput("at least one defining equation is required".into()));
        }
        if defining.len() > ctx.nvars() {
            return Err(IndexError::InvalidInput(format!(
                "{} equations in {} variables cannot cut out a complete intersection",
                defining.len(),
                ctx.nvars()
            )));
        }
        for (i, f) in defining.iter().enumerate() {
            if !same_ctx(f.ctx(), ctx) {
                return Err(IndexError::ContextMismatch);
            }
            if !f.constant_term().is_zero() {
                return Err(IndexError::InvalidInput(format!("equation {} does not vanish at the origin", i + 1)));
            }
        }
        Ok(GermSpec { name: name.to_string(), ctx: ctx.clone(), defining, cache: Arc::default() })
    }

    pub fn parse<S: AsRef<str>>(name: &str, ctx: &Ctx, defining: &[S]) -> Result<Self> {
        let defining = defining.iter().map(|f| parse(ctx, f.as_ref())).collect::<Result<_>>()?;
        Self::new(name, ctx, defining)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn k(&self) -> usize {
        self.defining.len()
    }

    /// Complex dimension of `V`.
    pub fn n(&self) -> usize {
        self.ctx.nvars() - self.defining.len()
    }

    /// The germ with one more equation.
    pub fn with_equation(&self, g: Polynomial) -> Result<Self> {
        let mut defining = self.defining.clone();
        defining.push(g);
        Self::new(&format!("{}+slice", self.name), &self.ctx, defining)
    }

    /// True if the differentials of the equations are independent at `0`.
    pub fn is_smooth(&self) -> bool {
        let lin: linalg::Matrix = self
            .defining
            .iter()
            .map(|f| (0..self.ctx.nvars()).map(|j| f.derivative(j).constant_term()).collect())
            .collect();
        linalg::rank(&lin) == self.k()
    }

    /// True for a single equation in two variables.
    pub fn is_plane_curve(&self) -> bool {
        self.k() == 1 && self.ctx.nvars() == 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub milnor_number: u64,
    pub chi: i64,
    /// Colengths used by the recursion, innermost first.
    pub recursion_trace: Vec<u64>,
}

fn finite(c: Colength, what: &str) -> Result<u64> {
    c.finite().ok_or_else(|| IndexError::NonIsolated(format!("{what} has infinite colength")))
}

/// Colength of `(f_1..f_{j-1}) + j x j minors of Jac(f_1..f_j)`.
fn recursion_colength(defining: &[Polynomial], ctx: &Ctx, settings: &Settings) -> Result<u64> {
    let j = defining.len();
    let mut gens: Vec<Polynomial> = defining[..j - 1].to_vec();
    gens.extend(maximal_minors(&jacobian_matrix(defining)?)?);
    finite(colength_of(ctx, gens, settings)?, "a Le-Greuel stage")
}

fn compute(g: &GermSpec, settings: &Settings) -> Result<FiberReport> {
    let mut trace = Vec::with_capacity(g.k());
    let mut mu: i64 = 0;
    for j in 1..=g.k() {
        let c = recursion_colength(&g.defining[..j], &g.ctx, settings)?;
        trace.push(c);
        mu = c as i64 - mu;
        if mu < 0 {
            return Err(IndexError::NonIsolated(format!(
                "Le-Greuel recursion went negative at stage {j}; the germ is not an isolated complete intersection"
            )));
        }
    }
    let milnor_number = mu as u64;
    Ok(FiberReport { milnor_number, chi: 1 + sign_power(g.n()) * mu, recursion_trace: trace })
}

/// Milnor number, Euler characteristic and the colength trace. Cached per
/// ordering.
pub fn fiber_report(g: &GermSpec, settings: &Settings) -> Result<FiberReport> {
    if let Some(r) = g.cache.lock().unwrap().get(&settings.ordering) {
        return Ok(r.clone());
    }
    let r = compute(g, settings)?;
    g.cache.lock().unwrap().insert(settings.ordering.clone(), r.clone());
    Ok(r)
}

pub fn milnor_number(g: &GermSpec, settings: &Settings) -> Result<u64> {
    Ok(fiber_report(g, settings)?.milnor_number)
}

/// `chi(F) = 1 + (-1)^n mu`.
pub fn chi_fiber(g: &GermSpec, settings: &Settings) -> Result<i64> {
    Ok(fiber_report(g, settings)?.chi)
}

/// Outcome of the multi-seed protocol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericValue {
    pub value: u64,
    /// Every seed that was sampled.
    pub seeds: Vec<u64>,
    /// Value per sampled seed; `None` where the sample was non-isolated.
    pub samples: Vec<Option<u64>>,
}

/// Seeds `s, s+1, s+2` must agree. Otherwise their minimum is accepted only
/// if `s+3` and `s+4` both reproduce it.
pub fn generic_value<F>(seed: u64, f: F) -> Result<GenericValue>
where
    F: Fn(u64) -> Result<u64> + Sync,
{
    let sample = |seeds: Vec<u64>| -> Result<Vec<Option<u64>>> {
        let out: Vec<Result<Option<u64>>> = seeds
            .par_iter()
            .map(|&s| match f(s) {
                Ok(v) => Ok(Some(v)),
                Err(IndexError::NonIsolated(_)) => Ok(None),
                Err(e) => Err(e),
            })
            .collect();
        out.into_iter().collect()
    };
    let mut seeds: Vec<u64> = (0..3).map(|i| seed.wrapping_add(i)).collect();
    let mut samples = sample(seeds.clone())?;
    let failure = |seeds: &[u64], samples: &[Option<u64>]| IndexError::GenericityFailure {
        seeds: seeds.to_vec(),
        values: samples.iter().map(|v| v.unwrap_or(u64::MAX)).collect(),
    };
    let Some(min) = samples.iter().flatten().copied().min() else {
        return Err(IndexError::NonIsolated(format!("every sampled slice was non-isolated (seeds {seeds:?})")));
    };
    if samples.iter().all(|v| *v == Some(min)) {
        return Ok(GenericValue { value: min, seeds, samples });
    }
    let fresh: Vec<u64> = (3..5).map(|i| seed.wrapping_add(i)).collect();
    let more = sample(fresh.clone())?;
    seeds.extend(fresh);
    samples.extend(more.iter().copied());
    if more.iter().all(|v| *v == Some(min)) {
        Ok(GenericValue { value: min, seeds, samples })
    } else {
        Err(failure(&seeds, &samples))
    }
}

/// Generic linear form on the germ's chart for `seed`.
pub fn generic_linear_form(g: &GermSpec, seed: u64) -> Polynomial {
    random_linear_form(&g.ctx, seed)
}

/// `mu(f_1, .., f_k, l)` for a generic linear `l`.
pub fn generic_slice_milnor(g: &GermSpec, seed: u64, settings: &Settings) -> Result<GenericValue> {
    generic_value(seed, |s| compute(&g.with_equation(generic_linear_form(g, s))?, settings).map(|r| r.milnor_number))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, Monomial, VariableContext};

    fn germ(names: &[&str], f: &[&str]) -> GermSpec {
        let ctx = VariableContext::complex(names).unwrap();
        GermSpec::parse("t", &ctx, f).unwrap()
    }

    fn mu(names: &[&str], f: &[&str]) -> u64 {
        milnor_number(&germ(names, f), &Settings::default()).unwrap()
    }

    #[test]
    fn hypersurfaces() {
        assert_eq!(mu(&["x", "y", "z"], &["x^2 + y^2 + z^2"]), 1);
        assert_eq!(mu(&["x", "y"], &["x^3 + y^3"]), 4);
        assert_eq!(mu(&["x", "y"], &["y^2 - x^3"]), 2);
        assert_eq!(mu(&["x", "y", "z"], &["z"]), 0);
        assert_eq!(mu(&["x", "y", "z"], &["x^2 + y^3 + z^5 + x*y*z"]), 8);
    }

    #[test]
    fn complete_intersections() {
        assert_eq!(mu(&["x", "y", "z"], &["x^2 + y^2 + z^2", "x"]), 1);
        // Zero-dimensional: mu = colength - 1.
        assert_eq!(mu(&["x", "y"], &["x^2 + y^3", "y"]), 1);
    }

    #[test]
    fn chi() {
        let s = Settings::default();
        assert_eq!(chi_fiber(&germ(&["x", "y", "z"], &["x^2 + y^2 + z^2"]), &s).unwrap(), 2);
        assert_eq!(chi_fiber(&germ(&["x", "y"], &["x^2 + y^2"]), &s).unwrap(), 0);
        assert_eq!(chi_fiber(&germ(&["z1", "z2"], &["z1"]), &s).unwrap(), 1);
        let r = fiber_report(&germ(&["x", "y"], &["x^2 + y^3"]), &s).unwrap();
        assert_eq!((r.milnor_number, r.chi), (2, -1));
    }

    #[test]
    fn brieskorn_against_monomial_count() {
        for a in 2..=4u32 {
            for b in 2..=4u32 {
                for c in 2..=4u32 {
                    let f = format!("x^{a} + y^{b} + z^{c}");
                    let want = (a - 1) * (b - 1) * (c - 1);
                    assert_eq!(mu(&["x", "y", "z"], &[&f]), want as u64);
                }
            }
        }
    }

    #[test]
    fn non_isolated() {
        let g = germ(&["x", "y", "z"], &["x*y"]);
        assert!(matches!(milnor_number(&g, &Settings::default()), Err(IndexError::NonIsolated(_))));
    }

    #[test]
    fn rejects_bad_germs() {
        let ctx = VariableContext::complex(&["x", "y"]).unwrap();
        assert!(GermSpec::parse("t", &ctx, &["1 + x"]).is_err());
        assert!(GermSpec::new("t", &ctx, vec![]).is_err());
        let real = VariableContext::real(&["x"]).unwrap();
        assert!(GermSpec::new("t", &real, vec![Polynomial::term(&real, Monomial::var(1, 0), int(1))]).is_err());
    }

    #[test]
    fn le_greuel_order_independent() {
        let s = Settings::default();
        for f in ["x^2 + y^2 + z^2", "x^3 + y^2 + z^2", "x^2 + y^3 + z^4"] {
            let g = germ(&["x", "y", "z"], &[f]);
            for seed in [7u64, 11, 19] {
                let l = generic_linear_form(&g, seed);
                let f = g.defining()[0].clone();
                let a = GermSpec::new("a", g.ctx(), vec![f.clone(), l.clone()]).unwrap();
                let b = GermSpec::new("b", g.ctx(), vec![l, f]).unwrap();
                assert_eq!(milnor_number(&a, &s).unwrap(), milnor_number(&b, &s).unwrap());
            }
        }
    }

    #[test]
    fn protocol() {
        assert_eq!(generic_value(7, |_| Ok(3)).unwrap().value, 3);
        let v = generic_value(7, |s| Ok(if s == 8 { 5 } else { 2 })).unwrap();
        assert_eq!((v.value, v.seeds.len()), (2, 5));
        assert!(matches!(
            generic_value(7, |s| Ok(if s == 10 { 5 } else if s == 7 { 1 } else { 2 })),
            Err(IndexError::GenericityFailure { .. })
        ));
        let cusp = germ(&["x", "y"], &["y^2 - x^3"]);
        assert_eq!(generic_slice_milnor(&cusp, 7, &Settings::default()).unwrap().value, 1);
    }
}
