//! Poincare-Hopf index of a real polynomial 1-form at an algebraically
//! isolated zero, as the signature of the Eisenbud-Levine-Khimshiashvili
//! pairing on the local algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{IndexError, Result};
use crate::linalg::{self, Matrix};
use crate::local::{standard_basis_of, Colength, Settings};
use crate::poly::{determinant, jacobian_matrix, parse, same_ctx, ChartKind, Ctx, Field, Monomial, Polynomial, Rational};

/// `eta = sum a_i dx_i` on a real chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealForm {
    ctx: Ctx,
    coeffs: Vec<Polynomial>,
}

impl RealForm {
    pub fn new(ctx: &Ctx, coeffs: Vec<Polynomial>) -> Result<Self> {
        if ctx.kind() != ChartKind::Real {
            return Err(IndexError::InvalidInput("real forms live on a real chart".into()));
        }
        if coeffs.len() != ctx.nvars() {
            return Err(IndexError::InvalidInput(format!(
                "form has {} coefficients but the chart has {} variables",
                coeffs.len(),
                ctx.nvars()
            )));
        }
        if coeffs.iter().any(|c| !same_ctx(c.ctx(), ctx)) {
            return Err(IndexError::ContextMismatch);
        }
        Ok(RealForm { ctx: ctx.clone(), coeffs })
    }

    pub fn parse<S: AsRef<str>>(ctx: &Ctx, coeffs: &[S]) -> Result<Self> {
        let coeffs = coeffs.iter().map(|c| parse(ctx, c.as_ref())).collect::<Result<_>>()?;
        Self::new(ctx, coeffs)
    }

    /// The differential `dh`.
    pub fn exact(h: &Polynomial) -> Result<Self> {
        let ctx = h.ctx().clone();
        Self::new(&ctx, (0..ctx.nvars()).map(|i| h.derivative(i)).collect())
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// `eta + u du` in one more variable `u`.
    pub fn suspend(&self, u: &str) -> Result<Self> {
        let mut names = self.ctx.names().to_vec();
        names.push(u.to_string());
        let ctx = crate::poly::VariableContext::real(&names)?;
        let mut coeffs: Vec<Polynomial> = self.coeffs.iter().map(|c| c.embed(&ctx)).collect::<Result<_>>()?;
        coeffs.push(Polynomial::var(&ctx, u)?);
        Self::new(&ctx, coeffs)
    }

    /// Same form with the `i`-th coefficient negated.
    pub fn negate_coeff(&self, i: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[i] = -&coeffs[i];
        RealForm { ctx: self.ctx.clone(), coeffs }
    }

    /// Jacobian matrix of the coefficient map evaluated at the origin.
    pub fn linear_part(&self) -> Matrix {
        self.coeffs
            .iter()
            .map(|a| (0..self.ctx.nvars()).map(|j| a.derivative(j).constant_term()).collect())
            .collect()
    }
}

pub(crate) fn write_form<C: Field>(f: &mut fmt::Formatter<'_>, names: &[String], coeffs: &[Polynomial<C>]) -> fmt::Result {
    let mut first = true;
    for (name, c) in names.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let negative = c.nterms() == 1 && c.terms().next().unwrap().1.prints_negative();
        let c = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        if c == Polynomial::one(c.ctx()) {
            write!(f, "d{name}")?;
        } else if c.nterms() == 1 {
            write!(f, "{c}*d{name}")?;
        } else {
            write!(f, "({c})*d{name}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_form(f, self.ctx.names(), &self.coeffs)
    }
}

/// Everything needed to re-check an index by hand.
#[derive(Clone, Debug)]
pub struct SignatureCertificate {
    pub gram: Matrix,
    pub signature: i64,
    /// Coefficient signs of the Gram matrix's characteristic polynomial,
    /// constant term first.
    pub char_poly_sign_sequence: Vec<i8>,
    pub positive: usize,
    pub negative: usize,
    pub colength: u64,
    pub monomial_basis: Vec<Monomial>,
    /// Normal form of the Jacobian determinant.
    pub socle: Polynomial,
    /// The monomial whose coefficient defines the functional.
    pub functional_monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct RealIndex {
    pub index: i64,
    pub certificate: SignatureCertificate,
}

/// Topological degree of `eta / |eta|` on a small sphere around `0`.
pub fn real_ph_index(eta: &RealForm, settings: &Settings) -> Result<RealIndex> {
    let sb = standard_basis_of(&eta.ctx, eta.coeffs.clone(), settings)?;
    let colength = match sb.colength() {
        Colength::Infinite => {
            return Err(IndexError::NonIsolated("coefficient ideal has infinite colength".into()));
        }
        Colength::Finite(0) => return Err(IndexError::RegularPoint),
        Colength::Finite(c) => c,
    };
    let basis = sb.monomial_basis().expect("finite colength").to_vec();

    let jac = determinant(&jacobian_matrix(&eta.coeffs)?)?;
    let socle = sb.normal_form(&jac)?;
    if socle.is_zero() {
        return Err(IndexError::DegenerateSocle);
    }
    // Leading monomial of the socle class in the local order.
    let ord = sb.ideal().ordering();
    let (functional_monomial, scale) = socle
        .terms()
        .max_by(|a, b| ord.cmp(a.0, b.0))
        .map(|(m, c)| (m.clone(), c.inv()))
        .unwrap();

    let n = basis.len();
    let mut cache: BTreeMap<Monomial, Rational> = BTreeMap::new();
    let mut gram = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let prod = basis[i].mul(&basis[j]);
            let v = match cache.get(&prod) {
                Some(v) => v.clone(),
                None => {
                    let p = Polynomial::term(&eta.ctx, prod.clone(), Rational::from_integer(1.into()));
                    let v = sb.normal_form(&p)?.coeff(&functional_monomial) * &scale;
                    cache.insert(prod, v.clone());
                    v
                }
            };
            gram[i][j] = v.clone();
            gram[j][i] = v;
        }
    }

    let cp = linalg::char_poly(&gram);
    let inertia = linalg::inertia_from_char_poly(&cp);
    if inertia.zero != 0 {
        return Err(IndexError::CrossCheck("Eisenbud-Levine pairing is degenerate".into()));
    }
    let signature = inertia.signature();
    Ok(RealIndex {
        index: signature,
        certificate: SignatureCertificate {
            gram,
            signature,
            char_poly_sign_sequence: linalg::sign_sequence(&cp),
            positive: inertia.positive,
            negative: inertia.negative,
            colength,
            monomial_basis: basis,
            socle,
            functional_monomial,
        },
    })
}

/// True iff the coefficient ideal has finite colength at `0`.
pub fn is_algebraically_isolated(eta: &RealForm, settings: &Settings) -> Result<bool> {
    let sb = standard_basis_of(&eta.ctx, eta.coeffs.clone(), settings)?;
    Ok(sb.colength().is_finite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{random_polynomial, VariableContext};

    fn form(names: &[&str], coeffs: &[&str]) -> RealForm {
        let ctx = VariableContext::real(names).unwrap();
        RealForm::parse(&ctx, coeffs).unwrap()
    }

    fn index(names: &[&str], coeffs: &[&str]) -> i64 {
        real_ph_index(&form(names, coeffs), &Settings::default()).unwrap().index
    }

    /// Winding number of `(a, b)` around a small circle, in floating point.
    fn winding(eta: &RealForm, radius: f64) -> i64 {
        let eval = |p: &Polynomial, x: f64, y: f64| -> f64 {
            p.terms()
                .map(|(m, c)| {
                    let c: f64 = c.numer().to_string().parse::<f64>().unwrap() / c.denom().to_string().parse::<f64>().unwrap();
                    c * x.powi(m.exps()[0] as i32) * y.powi(m.exps()[1] as i32)
                })
                .sum()
        };
        let steps = 20_000;
        let mut total = 0.0;
        let mut prev: Option<f64> = None;
        for k in 0..=steps {
            let t = 2.0 * std::f64::consts::PI * k as f64 / steps as f64;
            let (x, y) = (radius * t.cos(), radius * t.sin());
            let ang = eval(&eta.coeffs[1], x, y).atan2(eval(&eta.coeffs[0], x, y));
            if let Some(p) = prev {
                let mut d = ang - p;
                while d > std::f64::consts::PI {
                    d -= 2.0 * std::f64::consts::PI;
                }
                while d < -std::f64::consts::PI {
                    d += 2.0 * std::f64::consts::PI;
                }
                total += d;
            }
            prev = Some(ang);
        }
        (total / (2.0 * std::f64::consts::PI)).round() as i64
    }

    #[test]
    fn nondegenerate_examples() {
        assert_eq!(index(&["x", "y"], &["x", "y"]), 1);
        assert_eq!(index(&["x", "y"], &["x", "-y"]), -1);
        assert_eq!(index(&["x", "y", "u", "v"], &["x", "-y", "u", "-v"]), 1);
    }

    #[test]
    fn real_part_of_z_squared() {
        let eta = form(&["x", "y"], &["x^2 - y^2", "-2*x*y"]);
        let r = real_ph_index(&eta, &Settings::default()).unwrap();
        assert_eq!(r.index, -2);
        assert_eq!(r.certificate.colength, 4);
        assert_eq!(winding(&eta, 0.1), -2);
    }

    #[test]
    fn degenerate_zeros_against_winding() {
        let cases: &[&[&str]] = &[
            &["x^3 - 3*x*y^2", "3*x^2*y - y^3"],
            &["x^2 - y^3", "y^2"],
            &["x^2", "y^2"],
            &["x^3", "y"],
            &["x^2 + y^3", "x*y"],
            &["x*y + y^4", "x^2 - y^3"],
        ];
        for c in cases {
            let eta = form(&["x", "y"], c);
            let r = real_ph_index(&eta, &Settings::default()).unwrap();
            assert_eq!(r.index, winding(&eta, 0.05), "{c:?}");
            let gram_inertia = linalg::inertia_by_congruence(&r.certificate.gram);
            assert_eq!(gram_inertia.signature(), r.index);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let s = Settings::default();
        assert!(matches!(real_ph_index(&form(&["x", "y"], &["x", "x"]), &s), Err(IndexError::NonIsolated(_))));
        assert_eq!(real_ph_index(&form(&["x", "y"], &["1 + x", "y"]), &s).unwrap_err(), IndexError::RegularPoint);
        assert!(is_algebraically_isolated(&form(&["x", "y"], &["x^2 - y^3", "y^2"]), &s).unwrap());
        assert!(!is_algebraically_isolated(&form(&["x", "y"], &["x", "x"]), &s).unwrap());
    }

    #[test]
    fn suspension_and_sign_flip() {
        let eta = form(&["x", "y"], &["x^2 - y^2", "-2*x*y"]);
        let s = Settings::default();
        let base = real_ph_index(&eta, &s).unwrap().index;
        assert_eq!(real_ph_index(&eta.suspend("u").unwrap(), &s).unwrap().index, base);
        assert_eq!(real_ph_index(&eta.negate_coeff(0), &s).unwrap().index, -base);
    }

    #[test]
    fn linear_forms_match_determinant_sign() {
        let ctx = VariableContext::real(&["x", "y", "z"]).unwrap();
        for seed in 0..50 {
            let coeffs: Vec<Polynomial> = (0..3).map(|i| random_polynomial(&ctx, 1, seed * 3 + i).homogeneous_part(1)).collect();
            let eta = RealForm::new(&ctx, coeffs).unwrap();
            let d = linalg::determinant(&eta.linear_part());
            if d.is_zero() {
                continue;
            }
            let want = if d > Rational::zero() { 1 } else { -1 };
            assert_eq!(real_ph_index(&eta, &Settings::default()).unwrap().index, want);
        }
    }

    #[test]
    fn display() {
        assert_eq!(form(&["x", "y"], &["x^2 - y^2", "-2*x*y"]).to_string(), "(x^2 - y^2)*dx - 2*x*y*dy");
    }
}
