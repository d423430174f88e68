//! Holomorphic 1-forms, their Poincare-Hopf index, and the passage between
//! complex forms and their real parts.

use std::fmt;

use crate::error::{IndexError, Result};
use crate::local::{colength_of, Colength, Settings};
use crate::poly::{int, parse, rat, same_ctx, CPoly, ChartKind, Ctx, Gaussian, Polynomial};
use crate::real_index::{write_form, RealForm};

/// `omega = sum a_j dz_j`. Coefficients live in the Wirtinger alphabet
/// `(z, z_bar)`; holomorphic forms simply never use `z_bar`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexForm {
    /// The holomorphic chart `z_1..z_m`.
    ctx: Ctx,
    wirtinger: Ctx,
    coeffs: Vec<CPoly>,
}

impl ComplexForm {
    /// Coefficients may be given over the holomorphic chart or over its
    /// Wirtinger chart.
    pub fn new(ctx: &Ctx, coeffs: Vec<CPoly>) -> Result<Self> {
        let holo = ctx.complexification()?;
        let wirtinger = ctx.wirtinger()?;
        if coeffs.len() != holo.nvars() {
            return Err(IndexError::InvalidInput(format!(
                "form has {} coefficients but the chart has {} complex variables",
                coeffs.len(),
                holo.nvars()
            )));
        }
        let coeffs = coeffs
            .into_iter()
            .map(|c| {
                if same_ctx(c.ctx(), &wirtinger) {
                    Ok(c)
                } else if same_ctx(c.ctx(), &holo) {
                    c.embed(&wirtinger)
                } else {
                    Err(IndexError::ContextMismatch)
                }
            })
            .collect::<Result<_>>()?;
        Ok(ComplexForm { ctx: holo, wirtinger, coeffs })
    }

    /// Parses coefficients over the Wirtinger chart, so `z_bar` and `I` are
    /// allowed.
    pub fn parse<S: AsRef<str>>(ctx: &Ctx, coeffs: &[S]) -> Result<Self> {
        let w = ctx.wirtinger()?;
        let coeffs = coeffs.iter().map(|c| parse(&w, c.as_ref())).collect::<Result<_>>()?;
        Self::new(ctx, coeffs)
    }

    /// `dh` for a holomorphic `h`.
    pub fn exact(h: &Polynomial) -> Result<Self> {
        let ctx = h.ctx().clone();
        if ctx.kind() != ChartKind::Complex {
            return Err(IndexError::InvalidInput("exact complex forms need a complex chart".into()));
        }
        Self::new(&ctx, (0..ctx.nvars()).map(|i| h.derivative(i).to_gaussian()).collect())
    }

    /// The radial family `2 sum z_bar_j dz_j`, whose real part is `d rho`.
    pub fn radial(ctx: &Ctx) -> Result<Self> {
        let w = ctx.wirtinger()?;
        let m = ctx.complex_dim().unwrap();
        let two = Gaussian::real(int(2));
        let coeffs = (0..m).map(|j| Polynomial::var_at(&w, m + j).scale(&two)).collect();
        Self::new(ctx, coeffs)
    }

    /// The holomorphic chart.
    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn wirtinger_ctx(&self) -> &Ctx {
        &self.wirtinger
    }

    /// Coefficients over the Wirtinger chart.
    pub fn coeffs(&self) -> &[CPoly] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_holomorphic(&self) -> bool {
        let m = self.dim();
        self.coeffs.iter().all(|c| c.terms().all(|(mon, _)| mon.exps()[m..].iter().all(|&e| e == 0)))
    }

    pub fn is_radial(&self) -> bool {
        Self::radial(&self.ctx).map_or(false, |r| r == *self)
    }

    /// Coefficients over the holomorphic chart.
    pub fn holomorphic_coeffs(&self) -> Result<Vec<CPoly>> {
        if !self.is_holomorphic() {
            return Err(IndexError::NotHolomorphic);
        }
        Ok(self.coeffs.iter().map(|c| c.restrict(&self.ctx)).collect())
    }
}

impl fmt::Display for ComplexForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_form(f, self.ctx.names(), &self.coeffs)
    }
}

/// Local intersection multiplicity of the coefficients, which is the
/// degree of `omega / |omega|` for a holomorphic form.
pub fn complex_ph_index(omega: &ComplexForm, settings: &Settings) -> Result<u64> {
    let coeffs = omega.holomorphic_coeffs()?;
    match colength_of(&omega.ctx, coeffs, settings)? {
        Colength::Infinite => Err(IndexError::NonIsolated("coefficient ideal has infinite colength".into())),
        Colength::Finite(0) => Err(IndexError::RegularPoint),
        Colength::Finite(c) => Ok(c),
    }
}

/// `Re(omega)` on the real chart: `a_j = alpha_j + i beta_j` gives
/// `alpha_j dx_j - beta_j dy_j`.
pub fn realify(omega: &ComplexForm) -> Result<RealForm> {
    let real = omega.ctx.realification()?;
    let m = omega.dim();
    let i = Polynomial::constant(&real, Gaussian::i());
    let mut images = Vec::with_capacity(2 * m);
    for j in 0..m {
        let x = Polynomial::var_at(&real, 2 * j).to_gaussian();
        let y = Polynomial::var_at(&real, 2 * j + 1).to_gaussian();
        images.push(&x + &(&i * &y));
    }
    for j in 0..m {
        let x = Polynomial::var_at(&real, 2 * j).to_gaussian();
        let y = Polynomial::var_at(&real, 2 * j + 1).to_gaussian();
        images.push(&x - &(&i * &y));
    }
    let mut coeffs = Vec::with_capacity(2 * m);
    for a in &omega.coeffs {
        let a = a.substitute(&real, &images);
        coeffs.push(a.re());
        coeffs.push(-&a.im());
    }
    RealForm::new(&real, coeffs)
}

/// The complex form whose real part is `eta`: coefficient of `dz_j` is
/// `alpha_j - i beta_j` for `eta = sum alpha_j dx_j + beta_j dy_j`.
pub fn complexify(eta: &RealForm) -> Result<ComplexForm> {
    let real = eta.ctx();
    let holo = real.complexification()?;
    let w = real.wirtinger()?;
    let m = holo.nvars();
    let half = Gaussian::real(rat(1, 2));
    let half_i = Gaussian::new(int(0), rat(1, 2));
    let mut images = Vec::with_capacity(2 * m);
    for j in 0..m {
        let z = Polynomial::var_at(&w, j);
        let zb = Polynomial::var_at(&w, m + j);
        // x = (z + z_bar) / 2, y = i (z_bar - z) / 2
        images.push((&z + &zb).scale(&half));
        images.push((&zb - &z).scale(&half_i));
    }
    let i = Polynomial::constant(real, Gaussian::i());
    let mut coeffs = Vec::with_capacity(m);
    for j in 0..m {
        let alpha = eta.coeffs()[2 * j].to_gaussian();
        let beta = eta.coeffs()[2 * j + 1].to_gaussian();
        let a = &alpha - &(&i * &beta);
        coeffs.push(a.substitute(&w, &images));
    }
    ComplexForm::new(&holo, coeffs)
}

/// `(-1)^m`.
pub fn sign_power(m: usize) -> i64 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;
    use crate::real_index::real_ph_index;

    fn cform(names: &[&str], coeffs: &[&str]) -> ComplexForm {
        let ctx = VariableContext::complex(names).unwrap();
        ComplexForm::parse(&ctx, coeffs).unwrap()
    }

    #[test]
    fn complex_indices() {
        let s = Settings::default();
        assert_eq!(complex_ph_index(&cform(&["z", "w"], &["z", "w"]), &s).unwrap(), 1);
        assert_eq!(complex_ph_index(&cform(&["z", "w"], &["z^2", "w^3"]), &s).unwrap(), 6);
        assert_eq!(complex_ph_index(&cform(&["z"], &["z^2"]), &s).unwrap(), 2);
        assert_eq!(complex_ph_index(&cform(&["z"], &["z_bar"]), &s).unwrap_err(), IndexError::NotHolomorphic);
        assert!(matches!(complex_ph_index(&cform(&["z", "w"], &["z*w", "z*w"]), &s), Err(IndexError::NonIsolated(_))));
    }

    #[test]
    fn realify_examples() {
        let r = realify(&cform(&["z"], &["z^2"])).unwrap();
        assert_eq!(r, RealForm::parse(r.ctx(), &["z_re^2 - z_im^2", "-2*z_re*z_im"]).unwrap());
        let r = realify(&cform(&["z", "w"], &["z", "w"])).unwrap();
        assert_eq!(r, RealForm::parse(r.ctx(), &["z_re", "-z_im", "w_re", "-w_im"]).unwrap());
        let ctx = VariableContext::complex(&["z", "w"]).unwrap();
        let r = realify(&ComplexForm::radial(&ctx).unwrap()).unwrap();
        assert_eq!(r, RealForm::parse(r.ctx(), &["2*z_re", "2*z_im", "2*w_re", "2*w_im"]).unwrap());
    }

    #[test]
    fn complexify_examples() {
        let ctx = VariableContext::complex_with_real_names(&["z"], &["x", "y"]).unwrap();
        let real = ctx.realification().unwrap();
        let c = complexify(&RealForm::parse(&real, &["x", "-y"]).unwrap()).unwrap();
        assert_eq!(c, cform_in(&ctx, &["z"]));
        let c = complexify(&RealForm::parse(&real, &["2*x", "2*y"]).unwrap()).unwrap();
        assert!(c.is_radial());
        let c = complexify(&RealForm::parse(&real, &["0", "0"]).unwrap()).unwrap();
        assert!(c.coeffs().iter().all(|a| a.is_zero()));
    }

    fn cform_in(ctx: &Ctx, coeffs: &[&str]) -> ComplexForm {
        ComplexForm::parse(ctx, coeffs).unwrap()
    }

    #[test]
    fn round_trips() {
        for (names, coeffs) in [
            (&["z", "w"][..], &["z^2 + I*w", "3*z*w_bar - z_bar"][..]),
            (&["z"], &["(1+2*I)*z^3 + z_bar^2*z"]),
        ] {
            let w = cform(names, coeffs);
            let r = realify(&w).unwrap();
            assert_eq!(complexify(&r).unwrap(), w);
            assert_eq!(realify(&complexify(&r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn index_dictionary() {
        let s = Settings::default();
        for (names, coeffs) in [
            (&["z"][..], &["z^2"][..]),
            (&["z", "w"], &["z^2", "w^3"]),
            (&["z", "w"], &["z^2 + w^2", "z*w"]),
        ] {
            let w = cform(names, coeffs);
            let c = complex_ph_index(&w, &s).unwrap() as i64;
            let r = real_ph_index(&realify(&w).unwrap(), &s).unwrap().index;
            assert_eq!(c, sign_power(w.dim()) * r, "{coeffs:?}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(cform(&["z", "w"], &["z^2", "-1"]).to_string(), "z^2*dz - dw");
    }
}
