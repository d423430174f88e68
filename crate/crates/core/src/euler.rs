//! Local Euler obstruction of smooth points, plane curves and isolated
//! complete intersections by generic hyperplane slices, and the Euler
//! obstruction of radially extended forms.

use serde::Serialize;

use crate::complex_index::{complex_ph_index, complexify, sign_power};
use crate::error::{IndexError, Result};
use crate::local::Settings;
use crate::milnor::{generic_slice_milnor, milnor_number, GermSpec};
use crate::poly::same_ctx;
use crate::real_index::real_ph_index;
use crate::schwartz::{radial_extension, schwartz_index, Comparison, Form, StratumForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EuMethod {
    Smooth,
    CurveMultiplicity,
    SliceReduction,
}

impl EuMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            EuMethod::Smooth => "smooth",
            EuMethod::CurveMultiplicity => "curve-multiplicity",
            EuMethod::SliceReduction => "slice-reduction",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EuReport {
    pub eu: i64,
    pub method: EuMethod,
    pub slice_form_seeds: Vec<u64>,
    /// `mu(f, l)` for a generic linear `l`.
    pub slice_mu: Option<u64>,
    /// Euler obstruction by slice reduction, when it was computed as a
    /// cross-check of another method.
    pub slice_eu: Option<i64>,
}

/// `Eu_V(0)`: `1` at smooth points, the multiplicity for plane curves
/// (checked against the slice), otherwise `1 + (-1)^(n-1) mu(f, l)`.
pub fn euler_obstruction_point(g: &GermSpec, seed: u64, settings: &Settings) -> Result<EuReport> {
    if g.is_smooth() {
        return Ok(EuReport { eu: 1, method: EuMethod::Smooth, slice_form_seeds: vec![], slice_mu: None, slice_eu: None });
    }
    if g.n() == 0 {
        return Err(IndexError::InvalidInput("the Euler obstruction needs a germ of positive dimension".into()));
    }
    milnor_number(g, settings)?;
    let slice = generic_slice_milnor(g, seed, settings)?;
    let slice_eu = 1 + sign_power(g.n() - 1) * slice.value as i64;
    let (eu, method) = if g.is_plane_curve() {
        let mult = g.defining()[0].order().expect("singular germ is nonzero") as i64;
        if mult != slice_eu {
            return Err(IndexError::CrossCheck(format!(
                "curve multiplicity {mult} but slice reduction gives {slice_eu}"
            )));
        }
        (mult, EuMethod::CurveMultiplicity)
    } else {
        (slice_eu, EuMethod::SliceReduction)
    };
    Ok(EuReport { eu, method, slice_form_seeds: slice.seeds, slice_mu: Some(slice.value), slice_eu: Some(slice_eu) })
}

/// Euler obstruction of the radial form `d rho`, which is `Eu_V(0)`.
pub fn euler_obstruction_radial_form(g: &GermSpec, seed: u64, settings: &Settings) -> Result<i64> {
    Ok(euler_obstruction_point(g, seed, settings)?.eu)
}

/// `(-1)^n eu_real`: the complex form's obstruction from its real part's.
pub fn eu_sign_relation(n: usize, eu_real: i64) -> i64 {
    sign_power(n) * eu_real
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Both sides computed by independent routes.
    TwoSided,
    /// Only the proportionality itself connects the two sides.
    ConsistencyWeb,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadialExtensionReport {
    pub n: usize,
    pub eu_point: i64,
    /// Schwartz index of the real part.
    pub schwartz: i64,
    /// `Eu_V(0) * Ind_Sch` for the real part.
    pub value_real: i64,
    /// The same under the complex convention.
    pub value_complex: i64,
    pub kind: CheckKind,
    /// Independent value against the proportionality value, in the
    /// complex convention for smooth germs and the real one otherwise.
    pub check: Comparison,
    pub independent_method: String,
}

/// Euler obstruction of the radial extension of `sf` through the
/// proportionality with `Eu_V(0)`, plus whatever independent check the
/// situation allows.
pub fn eu_of_radial_extension(g: &GermSpec, sf: &StratumForm, seed: u64, settings: &Settings) -> Result<RadialExtensionReport> {
    let chart = sf.chart();
    if !same_ctx(chart.ctx(), g.ctx()) {
        return Err(IndexError::InvalidInput("stratum chart and germ must use the same coordinates".into()));
    }
    let n = g.n();
    let smooth = g.is_smooth();
    if smooth {
        let stratum = chart.stratum_ctx();
        if chart.s() != n || g.defining().iter().any(|f| !f.restrict(&stratum).is_zero()) {
            return Err(IndexError::InvalidInput("for a smooth germ the stratum must be V itself".into()));
        }
    } else if chart.s() != 0 {
        return Err(IndexError::InvalidInput("at an isolated singularity the stratum is the point".into()));
    }

    let eu_point = euler_obstruction_point(g, seed, settings)?.eu;
    let schwartz = schwartz_index(sf, settings)?;
    let value_real = eu_point * schwartz;
    let value_complex = eu_sign_relation(n, value_real);

    let (kind, check, independent_method) = if smooth {
        // On smooth V the obstruction of a form is its index on V, and the
        // extension restricted to V = {w = 0} is the stratum form.
        let real_ext = match radial_extension(sf)? {
            Form::Real(r) => r,
            Form::Complex(c) => crate::complex_index::realify(&c)?,
        };
        let on_v = complexify(&sf.realified()?)?;
        if on_v.is_holomorphic() {
            let c = complex_ph_index(&on_v, settings)? as i64;
            (CheckKind::TwoSided, Comparison::new(c, value_complex), "colength of the complexified restriction".to_string())
        } else {
            let amb = real_ph_index(&real_ext, settings)?.index;
            (
                CheckKind::TwoSided,
                Comparison::new(eu_sign_relation(n, amb), value_complex),
                "signature of the extension in the ambient chart".to_string(),
            )
        }
    } else {
        (CheckKind::ConsistencyWeb, Comparison::new(value_real, eu_point), "radial form obstruction".to_string())
    };
    Ok(RadialExtensionReport { n, eu_point, schwartz, value_real, value_complex, kind, check, independent_method })
}
