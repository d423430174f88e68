//! Product charts around a stratum, radial extension of 1-forms, and the
//! Schwartz index.

use serde::Serialize;

use crate::complex_index::{complex_ph_index, complexify, realify, sign_power, ComplexForm};
use crate::error::{IndexError, Result};
use crate::local::Settings;
use crate::poly::{int, same_ctx, ChartKind, Ctx, Polynomial, VariableContext};
use crate::real_index::{real_ph_index, RealForm};

/// `C^m = C^s x C^{m-s}`: stratum coordinates `u` first, then transverse
/// coordinates `w`. The stratum is `{w = 0}` and `rho = sum |w_j|^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductChart {
    ctx: Ctx,
    s: usize,
}

impl ProductChart {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(stratum: &[S], transverse: &[T]) -> Result<Self> {
        let names: Vec<&str> = stratum.iter().map(|s| s.as_ref()).chain(transverse.iter().map(|t| t.as_ref())).collect();
        Self::from_ctx(&VariableContext::complex(&names)?, stratum.len())
    }

    /// The first `s` complex variables of `ctx` span the stratum.
    pub fn from_ctx(ctx: &Ctx, s: usize) -> Result<Self> {
        if ctx.kind() != ChartKind::Complex {
            return Err(IndexError::InvalidInput("product charts are built on a complex chart".into()));
        }
        if s > ctx.nvars() {
            return Err(IndexError::InvalidInput(format!("stratum dimension {s} exceeds chart dimension {}", ctx.nvars())));
        }
        Ok(ProductChart { ctx: ctx.clone(), s })
    }

    /// Complex dimension of the stratum.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Complex dimension of the chart.
    pub fn m(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn real_ctx(&self) -> Ctx {
        self.ctx.realification().expect("complex chart")
    }

    pub fn stratum_names(&self) -> &[String] {
        &self.ctx.names()[..self.s]
    }

    pub fn transverse_names(&self) -> &[String] {
        &self.ctx.names()[self.s..]
    }

    /// The stratum as a complex chart with the same real coordinate names.
    pub fn stratum_ctx(&self) -> Ctx {
        let real = self.real_ctx();
        VariableContext::complex_with_real_names(self.stratum_names(), &real.names()[..2 * self.s]).expect("sub-chart of a valid chart")
    }

    pub fn stratum_real_ctx(&self) -> Ctx {
        self.stratum_ctx().realification().expect("complex chart")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Form {
    Real(RealForm),
    Complex(ComplexForm),
}

/// A 1-form on the stratum of a product chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumForm {
    chart: ProductChart,
    form: Form,
}

impl StratumForm {
    pub fn real(chart: &ProductChart, form: RealForm) -> Result<Self> {
        if !same_ctx(form.ctx(), &chart.stratum_real_ctx()) {
            return Err(IndexError::InvalidInput("the form must use exactly the stratum's real coordinates".into()));
        }
        Ok(StratumForm { chart: chart.clone(), form: Form::Real(form) })
    }

    pub fn complex(chart: &ProductChart, form: ComplexForm) -> Result<Self> {
        if !same_ctx(form.ctx(), &chart.stratum_ctx()) {
            return Err(IndexError::InvalidInput("the form must use exactly the stratum's coordinates".into()));
        }
        Ok(StratumForm { chart: chart.clone(), form: Form::Complex(form) })
    }

    /// The empty form on a point stratum.
    pub fn point(chart: &ProductChart) -> Result<Self> {
        if chart.s() != 0 {
            return Err(IndexError::InvalidInput("point forms need a zero-dimensional stratum".into()));
        }
        Self::real(chart, RealForm::new(&chart.stratum_real_ctx(), Vec::new())?)
    }

    pub fn chart(&self) -> &ProductChart {
        &self.chart
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn is_complex(&self) -> bool {
        matches!(self.form, Form::Complex(_))
    }

    /// The real form on the stratum; complex forms are replaced by their
    /// real part.
    pub fn realified(&self) -> Result<RealForm> {
        match &self.form {
            Form::Real(r) => Ok(r.clone()),
            Form::Complex(c) => realify(c),
        }
    }
}

/// `eta' = eta + d rho`: the `du` coefficients are those of `eta`, constant
/// in `w`, and the `dw` coefficients are `2 w`. Complex input is extended
/// through its real part and complexified again.
pub fn radial_extension(sf: &StratumForm) -> Result<Form> {
    let real = sf.chart.real_ctx();
    let eta = sf.realified()?;
    let two = int(2);
    let s2 = 2 * sf.chart.s();
    let mut coeffs = Vec::with_capacity(real.nvars());
    for c in eta.coeffs() {
        coeffs.push(c.embed(&real)?);
    }
    for i in s2..real.nvars() {
        coeffs.push(Polynomial::var_at(&real, i).scale(&two));
    }
    let ext = RealForm::new(&real, coeffs)?;
    match sf.form {
        Form::Real(_) => Ok(Form::Real(ext)),
        Form::Complex(_) => Ok(Form::Complex(complexify(&ext)?)),
    }
}

/// Real form of a radial extension, for index computations.
fn real_extension(sf: &StratumForm) -> Result<RealForm> {
    match radial_extension(sf)? {
        Form::Real(r) => Ok(r),
        Form::Complex(c) => realify(&c),
    }
}

/// Index of the form inside its stratum; `1` on a point stratum.
pub fn schwartz_index(sf: &StratumForm, settings: &Settings) -> Result<i64> {
    if sf.chart.s() == 0 {
        return Ok(1);
    }
    Ok(real_ph_index(&sf.realified()?, settings)?.index)
}

/// `(-1)^n` times the Schwartz index of the real part.
pub fn schwartz_index_complex(sf: &StratumForm, n: usize, settings: &Settings) -> Result<i64> {
    Ok(sign_power(n) * schwartz_index(sf, settings)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl Comparison {
    pub fn new(lhs: i64, rhs: i64) -> Self {
        Comparison { lhs, rhs, pass: lhs == rhs }
    }
}

/// Index in the stratum (`2s` real variables) against the index of the
/// radial extension in the chart (`2m` real variables), both computed.
pub fn verify_extension_index(sf: &StratumForm, settings: &Settings) -> Result<Comparison> {
    if sf.chart.s() == 0 {
        return Err(IndexError::InvalidInput("a point stratum has no interior index to compare".into()));
    }
    let inner = real_ph_index(&sf.realified()?, settings)?.index;
    let outer = real_ph_index(&real_extension(sf)?, settings)?.index;
    Ok(Comparison::new(inner, outer))
}

/// For a holomorphic stratum form: `(-1)^s` times its complex index
/// against `(-1)^m` times the complex-convention index of the extension,
/// which is the real index of `Re(omega')`.
pub fn verify_complex_bookkeeping(sf: &StratumForm, settings: &Settings) -> Result<Comparison> {
    let Form::Complex(omega) = &sf.form else {
        return Err(IndexError::InvalidInput("bookkeeping needs a complex stratum form".into()));
    };
    let s = sf.chart.s();
    let lhs = sign_power(s) * complex_ph_index(omega, settings)? as i64;
    let rhs = real_ph_index(&real_extension(sf)?, settings)?.index;
    Ok(Comparison::new(lhs, rhs))
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Form::Real(r) => write!(f, "{r}"),
            Form::Complex(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Stratum `a = u1 + i u2`, transverse `b = w1 + i w2`.
    fn chart() -> ProductChart {
        let ctx = VariableContext::complex_with_real_names(&["a", "b"], &["u1", "u2", "w1", "w2"]).unwrap();
        ProductChart::from_ctx(&ctx, 1).unwrap()
    }

    fn real_sf(c: &ProductChart, coeffs: &[&str]) -> StratumForm {
        StratumForm::real(c, RealForm::parse(&c.stratum_real_ctx(), coeffs).unwrap()).unwrap()
    }

    #[test]
    fn extension_examples() {
        let c = chart();
        let sf = real_sf(&c, &["u1", "u2"]);
        let Form::Real(ext) = radial_extension(&sf).unwrap() else { panic!() };
        assert_eq!(ext, RealForm::parse(&c.real_ctx(), &["u1", "u2", "2*w1", "2*w2"]).unwrap());
        // Restricting to w = 0 recovers the input.
        let back: Vec<Polynomial> = ext.coeffs()[..2].iter().map(|p| p.restrict(&c.stratum_real_ctx())).collect();
        assert_eq!(back, sf.realified().unwrap().coeffs());

        let p = ProductChart::new(&[] as &[&str], &["w"]).unwrap();
        let Form::Real(ext) = radial_extension(&StratumForm::point(&p).unwrap()).unwrap() else { panic!() };
        assert_eq!(ext.to_string(), "2*w_re*dw_re + 2*w_im*dw_im");
    }

    #[test]
    fn complex_extension_is_radial_transversally() {
        let c = ProductChart::new(&["z"], &["w"]).unwrap();
        let sf = StratumForm::complex(&c, ComplexForm::parse(&c.stratum_ctx(), &["z^2"]).unwrap()).unwrap();
        let Form::Complex(ext) = radial_extension(&sf).unwrap() else { panic!() };
        assert_eq!(ext, ComplexForm::parse(c.ctx(), &["z^2", "2*w_bar"]).unwrap());
    }

    #[test]
    fn indices() {
        let s = Settings::default();
        let p = ProductChart::new(&[] as &[&str], &["w1", "w2"]).unwrap();
        assert_eq!(schwartz_index(&StratumForm::point(&p).unwrap(), &s).unwrap(), 1);
        assert_eq!(schwartz_index_complex(&StratumForm::point(&p).unwrap(), 2, &s).unwrap(), 1);
        let c = chart();
        assert_eq!(schwartz_index(&real_sf(&c, &["u1", "u2"]), &s).unwrap(), 1);
        let z2 = real_sf(&c, &["u1^2 - u2^2", "-2*u1*u2"]);
        assert_eq!(schwartz_index(&z2, &s).unwrap(), -2);
        assert_eq!(schwartz_index_complex(&z2, 1, &s).unwrap(), 2);
        let zdz = StratumForm::complex(&c, ComplexForm::parse(&c.stratum_ctx(), &["a"]).unwrap()).unwrap();
        assert_eq!(schwartz_index_complex(&zdz, 1, &s).unwrap(), 1);
    }

    #[test]
    fn extension_index_examples() {
        let s = Settings::default();
        let c = chart();
        for (coeffs, want) in [(&["u1", "u2"][..], 1), (&["u1", "-u2"], -1), (&["u1^2 - u2^2", "-2*u1*u2"], -2)] {
            let r = verify_extension_index(&real_sf(&c, coeffs), &s).unwrap();
            assert_eq!(r, Comparison::new(want, want));
        }
    }

    #[test]
    fn bookkeeping() {
        let s = Settings::default();
        let c = ProductChart::new(&["z"], &["w1", "w2"]).unwrap();
        let sf = StratumForm::complex(&c, ComplexForm::parse(&c.stratum_ctx(), &["z^3"]).unwrap()).unwrap();
        let r = verify_complex_bookkeeping(&sf, &s).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, -3);
    }

    #[test]
    fn rejects_foreign_forms() {
        let c = chart();
        let other = VariableContext::real(&["u1", "u2"]).unwrap();
        assert!(StratumForm::real(&c, RealForm::parse(&other, &["u1", "u2"]).unwrap()).is_err());
        assert!(verify_extension_index(&StratumForm::point(&ProductChart::new(&[] as &[&str], &["w"]).unwrap()).unwrap(), &Settings::default()).is_err());
    }
}
