//! GSV index of a holomorphic 1-form on an isolated complete intersection,
//! as the colength of the equations plus the maximal minors of the frame
//! `(omega, df_1, .., df_k)`.

use serde::Serialize;

use crate::complex_index::{sign_power, ComplexForm};
use crate::error::{IndexError, Result};
use crate::local::{colength_of, Colength, Settings};
use crate::milnor::{generic_linear_form, generic_value, GenericValue, GermSpec};
use crate::poly::{jacobian_matrix, maximal_minors, same_ctx, CPoly};

#[derive(Clone, Debug)]
pub struct GsvProblem {
    germ: GermSpec,
    form: ComplexForm,
}

impl GsvProblem {
    pub fn new(germ: &GermSpec, form: &ComplexForm) -> Result<Self> {
        if !same_ctx(germ.ctx(), form.ctx()) {
            return Err(IndexError::ContextMismatch);
        }
        if !form.is_holomorphic() {
            return Err(IndexError::NotHolomorphic);
        }
        if germ.n() == 0 {
            return Err(IndexError::InvalidInput("the GSV index needs a germ of positive dimension".into()));
        }
        Ok(GsvProblem { germ: germ.clone(), form: form.clone() })
    }

    pub fn germ(&self) -> &GermSpec {
        &self.germ
    }

    pub fn form(&self) -> &ComplexForm {
        &self.form
    }

    /// `f_1..f_k` followed by the `(k+1)`-minors of the frame matrix.
    pub fn ideal_generators(&self) -> Result<Vec<CPoly>> {
        let f: Vec<CPoly> = self.germ.defining().iter().map(|p| p.to_gaussian()).collect();
        let mut frame = vec![self.form.holomorphic_coeffs()?];
        frame.extend(jacobian_matrix(&f)?);
        let mut gens = f;
        gens.extend(maximal_minors(&frame)?);
        Ok(gens)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsvReport {
    pub index: u64,
    /// The GSV ideal generators as printed polynomials.
    pub ideal: Vec<String>,
    /// Only finite colength is certified; transversality of the form to
    /// the boundary of the Milnor fiber is taken on trust.
    pub boundary_transversality: &'static str,
}

/// Number of zeros of `omega` on the Milnor fiber, counted with multiplicity.
pub fn gsv_index(p: &GsvProblem, settings: &Settings) -> Result<GsvReport> {
    let gens = p.ideal_generators()?;
    let ideal = gens.iter().filter(|g| !g.is_zero()).map(|g| g.to_string()).collect();
    match colength_of(p.germ.ctx(), gens, settings)? {
        Colength::Infinite => Err(IndexError::NonIsolated("the form is singular along a curve on V".into())),
        Colength::Finite(index) => Ok(GsvReport { index, ideal, boundary_transversality: "assumed" }),
    }
}

/// GSV index of the real part: `(-1)^n` times the complex one.
pub fn gsv_real_sign(p: &GsvProblem, settings: &Settings) -> Result<i64> {
    Ok(sign_power(p.germ.n()) * gsv_index(p, settings)?.index as i64)
}

/// GSV index of `dl` for a generic linear `l`, under the multi-seed
/// protocol: the number of Morse points of `l` on the Milnor fiber.
pub fn gsv_generic_linear(g: &GermSpec, seed: u64, settings: &Settings) -> Result<GenericValue> {
    generic_value(seed, |s| {
        let omega = ComplexForm::exact(&generic_linear_form(g, s))?;
        Ok(gsv_index(&GsvProblem::new(g, &omega)?, settings)?.index)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    fn problem(names: &[&str], f: &[&str], omega: &[&str]) -> GsvProblem {
        let ctx = VariableContext::complex(names).unwrap();
        let g = GermSpec::parse("t", &ctx, f).unwrap();
        GsvProblem::new(&g, &ComplexForm::parse(&ctx, omega).unwrap()).unwrap()
    }

    fn gsv(names: &[&str], f: &[&str], omega: &[&str]) -> u64 {
        gsv_index(&problem(names, f, omega), &Settings::default()).unwrap().index
    }

    #[test]
    fn quadric() {
        let xyz = ["x", "y", "z"];
        let q = ["x^2 + y^2 + z^2"];
        assert_eq!(gsv(&xyz, &q, &["1", "0", "0"]), 2);
        assert_eq!(gsv(&xyz, &q, &["0", "1", "0"]), 2);
        assert_eq!(gsv_real_sign(&problem(&xyz, &q, &["1", "0", "0"]), &Settings::default()).unwrap(), 2);
    }

    #[test]
    fn generic_linear() {
        let s = Settings::default();
        let quadric = |names: &[&str], f: &str| {
            let ctx = VariableContext::complex(names).unwrap();
            GermSpec::parse("q", &ctx, &[f]).unwrap()
        };
        // mu(f) + mu(f, l) = 1 + 1 in both dimensions.
        assert_eq!(gsv_generic_linear(&quadric(&["x", "y", "z"], "x^2 + y^2 + z^2"), 7, &s).unwrap().value, 2);
        assert_eq!(gsv_generic_linear(&quadric(&["x", "y", "z", "w"], "x^2 + y^2 + z^2 + w^2"), 7, &s).unwrap().value, 2);
        // Cusp: 2 + 1.
        assert_eq!(gsv_generic_linear(&quadric(&["x", "y"], "y^2 - x^3"), 7, &s).unwrap().value, 3);
    }

    #[test]
    fn cusp_goldens() {
        assert_eq!(gsv(&["x", "y"], &["x^2 + y^3"], &["0", "1"]), 3);
        assert_eq!(gsv(&["x", "y"], &["x^2 + y^3"], &["1", "0"]), 4);
    }

    #[test]
    fn smooth() {
        assert_eq!(gsv(&["z1", "z2", "z3"], &["z3"], &["z1", "z2", "0"]), 1);
        let p = problem(&["z1", "z2"], &["z2"], &["z1", "0"]);
        assert_eq!(gsv_real_sign(&p, &Settings::default()).unwrap(), -1);
        // A form that does not vanish on V.
        assert_eq!(gsv(&["z1", "z2"], &["z2"], &["1", "0"]), 0);
    }

    #[test]
    fn icis() {
        // (x^2 + y^2 + z^2, x) is the node y^2 + z^2 in the plane x = 0.
        let three = gsv(&["x", "y", "z"], &["x^2 + y^2 + z^2", "x"], &["0", "1", "0"]);
        let two = gsv(&["y", "z"], &["y^2 + z^2"], &["1", "0"]);
        assert_eq!(three, two);
    }

    #[test]
    fn presentation_invariance() {
        let xyz = ["x", "y", "z"];
        let base = gsv(&xyz, &["x^2 + y^2 + z^2"], &["1", "0", "0"]);
        // Scaled equation and a multiple of f added to omega.
        assert_eq!(gsv(&xyz, &["3*x^2 + 3*y^2 + 3*z^2"], &["1 + x^2 + y^2 + z^2", "0", "0"]), base);
    }

    #[test]
    fn rejects() {
        let ctx = VariableContext::complex(&["x", "y"]).unwrap();
        let g = GermSpec::parse("t", &ctx, &["x*y"]).unwrap();
        let w = ComplexForm::parse(&ctx, &["x_bar", "0"]).unwrap();
        assert_eq!(GsvProblem::new(&g, &w).unwrap_err(), IndexError::NotHolomorphic);
        let g0 = GermSpec::parse("t", &ctx, &["x", "y"]).unwrap();
        assert!(GsvProblem::new(&g0, &ComplexForm::parse(&ctx, &["1", "0"]).unwrap()).is_err());
        // y^2 dx vanishes along the whole line y = 0 of V.
        let p = GsvProblem::new(&g, &ComplexForm::parse(&ctx, &["y^2", "0"]).unwrap()).unwrap();
        assert!(matches!(gsv_index(&p, &Settings::default()), Err(IndexError::NonIsolated(_))));
    }
}
