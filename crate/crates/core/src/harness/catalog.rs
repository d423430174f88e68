//! The shipped catalog. Every expected value is frozen and tagged with
//! where it came from.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex_index::ComplexForm;
use crate::error::Result;
use crate::milnor::GermSpec;
use crate::poly::{random_polynomial, Polynomial, VariableContext};
use crate::real_index::RealForm;
use crate::schwartz::{ProductChart, StratumForm};

pub const CATALOG_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Worked example from the literature.
    Literature,
    /// Computed by an independent oracle, then frozen.
    Derived,
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub value: i64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogForm {
    /// Holomorphic-chart form on the whole chart.
    Complex(ComplexForm),
    Stratum(StratumForm),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    /// `None` for forms on a plain chart.
    pub germ: Option<GermSpec>,
    pub forms: Vec<(String, CatalogForm)>,
    pub expected: BTreeMap<String, Expected>,
}

impl CatalogEntry {
    pub fn expected(&self, key: &str) -> Option<i64> {
        self.expected.get(key).map(|e| e.value)
    }

    pub fn complex_forms(&self) -> impl Iterator<Item = (&str, &ComplexForm)> {
        self.forms.iter().filter_map(|(n, f)| match f {
            CatalogForm::Complex(c) => Some((n.as_str(), c)),
            _ => None,
        })
    }

    pub fn stratum_forms(&self) -> impl Iterator<Item = (&str, &StratumForm)> {
        self.forms.iter().filter_map(|(n, f)| match f {
            CatalogForm::Stratum(s) => Some((n.as_str(), s)),
            _ => None,
        })
    }

    pub fn stratum_form(&self, name: &str) -> Option<&StratumForm> {
        self.stratum_forms().find(|(n, _)| *n == name).map(|(_, s)| s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn germs(&self) -> impl Iterator<Item = (&CatalogEntry, &GermSpec)> {
        self.entries.iter().filter_map(|e| e.germ.as_ref().map(|g| (e, g)))
    }
}

struct Builder {
    entry: CatalogEntry,
}

impl Builder {
    fn germ(name: &str, vars: &[&str], f: &[&str]) -> Result<Self> {
        let ctx = VariableContext::complex(vars)?;
        Ok(Self::with_germ(GermSpec::parse(name, &ctx, f)?))
    }

    fn with_germ(g: GermSpec) -> Self {
        let entry = CatalogEntry { name: g.name().to_string(), germ: Some(g), forms: vec![], expected: BTreeMap::new() };
        Builder { entry }
    }

    fn chart(name: &str) -> Self {
        Builder { entry: CatalogEntry { name: name.into(), germ: None, forms: vec![], expected: BTreeMap::new() } }
    }

    fn expect(mut self, key: &str, value: i64, provenance: Provenance) -> Self {
        self.entry.expected.insert(key.into(), Expected { value, provenance });
        self
    }

    fn ctx(&self) -> &crate::poly::Ctx {
        self.entry.germ.as_ref().expect("germ entry").ctx()
    }

    fn complex(mut self, name: &str, coeffs: &[&str]) -> Result<Self> {
        let form = ComplexForm::parse(self.ctx(), coeffs)?;
        self.entry.forms.push((name.into(), CatalogForm::Complex(form)));
        Ok(self)
    }

    fn radial_point(mut self) -> Result<Self> {
        let chart = ProductChart::from_ctx(self.ctx(), 0)?;
        self.entry.forms.push(("radial".into(), CatalogForm::Stratum(StratumForm::point(&chart)?)));
        Ok(self)
    }

    /// Stratum form on the first `s` variables of the germ's chart.
    fn stratum(mut self, name: &str, s: usize, real: bool, coeffs: &[&str]) -> Result<Self> {
        let chart = ProductChart::from_ctx(self.ctx(), s)?;
        let sf = stratum_form(&chart, real, coeffs)?;
        self.entry.forms.push((name.into(), CatalogForm::Stratum(sf)));
        Ok(self)
    }

    fn build(self) -> CatalogEntry {
        self.entry
    }
}

fn stratum_form(chart: &ProductChart, real: bool, coeffs: &[&str]) -> Result<StratumForm> {
    if real {
        StratumForm::real(chart, RealForm::parse(&chart.stratum_real_ctx(), coeffs)?)
    } else {
        StratumForm::complex(chart, ComplexForm::parse(&chart.stratum_ctx(), coeffs)?)
    }
}

fn ambient(name: &str, vars: &[&str], coeffs: &[&str], index: i64, p: Provenance) -> Result<CatalogEntry> {
    let ctx = VariableContext::complex(vars)?;
    let mut b = Builder::chart(name).expect("index", index, p);
    b.entry.forms.push(("omega".into(), CatalogForm::Complex(ComplexForm::parse(&ctx, coeffs)?)));
    Ok(b.build())
}

fn on_stratum(name: &str, s: usize, t: usize, real: bool, coeffs: &[&str], index: i64) -> Result<CatalogEntry> {
    let stratum: Vec<String> = (1..=s).map(|i| format!("u{i}")).collect();
    let transverse: Vec<String> = (1..=t).map(|i| format!("w{i}")).collect();
    let chart = ProductChart::new(&stratum, &transverse)?;
    let mut b = Builder::chart(name).expect("index", index, Provenance::Derived);
    b.entry.forms.push(("eta".into(), CatalogForm::Stratum(stratum_form(&chart, real, coeffs)?)));
    Ok(b.build())
}

/// Smooth germ through the origin from a seeded dense cubic.
fn random_smooth(i: u64) -> Result<CatalogEntry> {
    let ctx = VariableContext::complex(&["a", "b", "c"])?;
    let f = random_polynomial(&ctx, 3, 1000 + i);
    let f = &f - &Polynomial::constant(&ctx, f.constant_term());
    let g = GermSpec::new(&format!("smooth-random-{i}"), &ctx, vec![f])?;
    Ok(Builder::with_germ(g).expect("eu", 1, Provenance::Trivial).build())
}

/// The shipped catalog, version [`CATALOG_VERSION`].
pub fn shipped() -> Result<Catalog> {
    use Provenance::*;
    let mut entries = vec![
        // Forms on a plain chart: complex index against the real index.
        ambient("sum-z-dz-m1", &["z1"], &["z1"], 1, Literature)?,
        ambient("sum-z-dz-m2", &["z1", "z2"], &["z1", "z2"], 1, Literature)?,
        ambient("sum-z-dz-m3", &["z1", "z2", "z3"], &["z1", "z2", "z3"], 1, Literature)?,
        ambient("power-2", &["z"], &["z^2"], 2, Derived)?,
        ambient("power-3", &["z"], &["z^3"], 3, Derived)?,
        ambient("power-4", &["z"], &["z^4"], 4, Derived)?,
        ambient("monomial-2-3", &["z1", "z2"], &["z1^2", "z2^3"], 6, Derived)?,
        ambient("monomial-3-2", &["z1", "z2"], &["z1^3", "z2^2"], 6, Derived)?,
        ambient("monomial-2-1-2", &["z1", "z2", "z3"], &["z1^2", "z2", "z3^2"], 4, Derived)?,
        ambient("gradient-3-3", &["z1", "z2"], &["3*z1^2", "3*z2^2"], 4, Derived)?,
        ambient("gradient-2-3-2", &["z1", "z2", "z3"], &["2*z1", "3*z2^2", "2*z3"], 2, Derived)?,
        ambient("gradient-d4", &["z1", "z2"], &["2*z1*z2", "z1^2 + 3*z2^2"], 4, Derived)?,
        ambient("conic-pair", &["z1", "z2"], &["z1^2 + z2^2", "z1*z2"], 4, Derived)?,
        ambient("triangular", &["z1", "z2", "z3"], &["z1 + z2^2", "z2^3 + z1*z3", "z3"], 3, Derived)?,
        // Stratum forms on product charts, with their index in the stratum.
        on_stratum("stratum-1-1-z", 1, 1, false, &["u1"], -1)?,
        on_stratum("stratum-1-1-z2", 1, 1, false, &["u1^2"], -2)?,
        on_stratum("stratum-1-1-radial", 1, 1, true, &["u1_re", "u1_im"], 1)?,
        on_stratum("stratum-1-1-cubic", 1, 1, true, &["u1_re^3", "u1_im"], 1)?,
        on_stratum("stratum-1-2-z", 1, 2, false, &["u1"], -1)?,
        on_stratum("stratum-1-2-z3", 1, 2, false, &["u1^3"], -3)?,
        on_stratum("stratum-1-2-cubic", 1, 2, true, &["u1_re^3", "-u1_im^3"], -1)?,
        on_stratum("stratum-2-1-z", 2, 1, false, &["u1", "u2"], 1)?,
        on_stratum("stratum-2-1-z2", 2, 1, false, &["u1^2", "u2"], 2)?,
        on_stratum("stratum-2-1-mixed", 2, 1, true, &["u1_re", "-u1_im", "u2_re^3", "u2_im"], -1)?,
        // Isolated singularities.
        Builder::germ("quadric", &["x", "y", "z"], &["x^2 + y^2 + z^2"])?
            .expect("mu", 1, Derived)
            .expect("chi", 2, Derived)
            .expect("eu", 0, Derived)
            .expect("gsv-dl", 2, Derived)
            .expect("gsv-stable", 2, Derived)
            .expect("eu-ext:radial", 0, Derived)
            .complex("dx", &["1", "0", "0"])?
            .complex("dy", &["0", "1", "0"])?
            .complex("dz", &["0", "0", "1"])?
            .radial_point()?
            .build(),
        Builder::germ("quadric-4", &["x", "y", "z", "w"], &["x^2 + y^2 + z^2 + w^2"])?
            .expect("mu", 1, Derived)
            .expect("chi", 0, Derived)
            .expect("eu", 2, Derived)
            .expect("gsv-dl", 2, Derived)
            .expect("gsv-stable", 2, Derived)
            .expect("eu-ext:radial", 2, Derived)
            .complex("dx", &["1", "0", "0", "0"])?
            .complex("dw", &["0", "0", "0", "1"])?
            .radial_point()?
            .build(),
        Builder::germ("cusp", &["x", "y"], &["y^2 - x^3"])?
            .expect("mu", 2, Derived)
            .expect("chi", -1, Derived)
            .expect("eu", 2, Derived)
            .expect("gsv-dl", 3, Derived)
            .expect("eu-ext:radial", 2, Derived)
            .radial_point()?
            .build(),
        Builder::germ("a2", &["x", "y"], &["x^2 + y^3"])?
            .expect("mu", 2, Derived)
            .expect("chi", -1, Derived)
            .expect("eu", 2, Derived)
            .expect("gsv-dl", 3, Derived)
            .expect("gsv:dx", 4, Derived)
            .expect("gsv:dy", 3, Derived)
            .complex("dx", &["1", "0"])?
            .complex("dy", &["0", "1"])?
            .build(),
        Builder::germ("a3", &["x", "y"], &["y^2 - x^4"])?
            .expect("mu", 3, Derived)
            .expect("chi", -2, Derived)
            .expect("eu", 2, Derived)
            .expect("gsv-dl", 4, Derived)
            .expect("eu-ext:radial", 2, Derived)
            .radial_point()?
            .build(),
        Builder::germ("d4", &["x", "y"], &["x^2*y + y^3"])?
            .expect("mu", 4, Derived)
            .expect("chi", -3, Derived)
            .expect("eu", 3, Derived)
            .expect("gsv-dl", 6, Derived)
            .expect("eu-ext:radial", 3, Derived)
            .radial_point()?
            .build(),
        Builder::germ("icis-node", &["x", "y", "z"], &["x^2 + y^2 + z^2", "x"])?
            .expect("mu", 1, Derived)
            .expect("chi", 0, Derived)
            .expect("eu", 2, Derived)
            .expect("gsv-dl", 2, Derived)
            .expect("eu-ext:radial", 2, Derived)
            .radial_point()?
            .build(),
        // Smooth germs.
        Builder::germ("smooth-plane", &["z1", "z2", "z3"], &["z3"])?
            .expect("mu", 0, Trivial)
            .expect("chi", 1, Trivial)
            .expect("eu", 1, Trivial)
            .expect("gsv:omega", 1, Trivial)
            .expect("gsv-stable", 1, Trivial)
            .expect("eu-ext:omega-v", 1, Trivial)
            .expect("eu-ext:square", 2, Derived)
            .complex("omega", &["z1", "z2", "0"])?
            .stratum("omega-v", 2, false, &["z1", "z2"])?
            .stratum("square", 2, false, &["z1^2", "z2"])?
            .build(),
        Builder::germ("smooth-line", &["z", "w"], &["w"])?
            .expect("mu", 0, Trivial)
            .expect("chi", 1, Trivial)
            .expect("eu", 1, Trivial)
            .expect("gsv:omega", 2, Derived)
            .expect("eu-ext:omega-v", 2, Derived)
            .expect("eu-ext:square-real", 2, Derived)
            .complex("omega", &["z^2", "0"])?
            .stratum("omega-v", 1, false, &["z^2"])?
            .stratum("square-real", 1, true, &["z_re^2 - z_im^2", "-2*z_re*z_im"])?
            .build(),
    ];
    for d in 2..=5i64 {
        let f = format!("x^{d} + y^{d}");
        entries.push(
            Builder::germ(&format!("ordinary-{d}"), &["x", "y"], &[&f])?
                .expect("mu", (d - 1) * (d - 1), Derived)
                .expect("eu", d, Derived)
                .expect("eu-ext:radial", d, Derived)
                .radial_point()?
                .build(),
        );
    }
    for exps in [&[2u32, 3][..], &[3, 4], &[2, 2, 2], &[2, 3, 4], &[3, 3, 3], &[4, 4, 4]] {
        let vars: Vec<String> = (1..=exps.len()).map(|i| format!("z{i}")).collect();
        let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
        let f = exps.iter().enumerate().map(|(i, a)| format!("z{}^{a}", i + 1)).collect::<Vec<_>>().join(" + ");
        let tag = exps.iter().map(u32::to_string).collect::<Vec<_>>().join("-");
        let mu: i64 = exps.iter().map(|&a| a as i64 - 1).product();
        entries.push(Builder::germ(&format!("brieskorn-{tag}"), &vars, &[&f])?.expect("mu", mu, Derived).build());
    }
    for i in 0..10 {
        entries.push(random_smooth(i)?);
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(Catalog { version: CATALOG_VERSION, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_with_unique_names() {
        let c = shipped().unwrap();
        let mut names: Vec<&str> = c.entries.iter().map(|e| e.name.as_str()).collect();
        names.dedup();
        assert_eq!(names.len(), c.entries.len());
        assert!(c.get("quadric").is_some());
        assert_eq!(c.get("brieskorn-4-4-4").unwrap().expected("mu"), Some(27));
    }

    #[test]
    fn random_smooth_germs_are_smooth() {
        let c = shipped().unwrap();
        let smooth: Vec<_> = c.germs().filter(|(e, _)| e.name.starts_with("smooth-random")).collect();
        assert_eq!(smooth.len(), 10);
        assert!(smooth.iter().all(|(_, g)| g.is_smooth()));
    }
}
