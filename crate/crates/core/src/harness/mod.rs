//! End-to-end checks of the index identities over the shipped catalog.
//!
//! Every case compares two integers. A case is `two-sided` when both come
//! from independent computations, `consistency-web` when the identity under
//! test is the only route to one side, `golden` when one side is a frozen
//! value, and `skipped-holomorphic` when no holomorphic representative
//! exists and only the sign bookkeeping is checked.

pub mod catalog;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex_index::{complex_ph_index, realify, sign_power, ComplexForm};
use crate::error::{IndexError, Result};
use crate::euler::{eu_of_radial_extension, euler_obstruction_point, CheckKind, EuMethod};
use crate::gsv::{gsv_generic_linear, gsv_index, gsv_real_sign, GsvProblem};
use crate::local::{colength_of, Colength, LocalOrdering, Settings};
use crate::milnor::{chi_fiber, fiber_report, generic_linear_form, milnor_number, GermSpec};
use crate::poly::{rat, CPoly, Gaussian, Monomial, Polynomial};
use crate::real_index::real_ph_index;
use crate::schwartz::{radial_extension, schwartz_index_complex, verify_extension_index, Form, StratumForm};
use catalog::Catalog;
use num_traits::Zero;

pub const COMPLEX_REAL: &str = "complex-real-dictionary";
pub const STRATUM_EXTENSION: &str = "stratum-extension";
pub const MILNOR: &str = "milnor";
pub const EULER_OBSTRUCTION: &str = "euler-obstruction";
pub const GSV_PROPORTIONALITY: &str = "gsv-proportionality";
pub const EU_PROPORTIONALITY: &str = "eu-proportionality";
pub const GSV_STABILITY: &str = "gsv-stability";
pub const ORDERING_INDEPENDENCE: &str = "ordering-independence";

#[derive(Clone, Debug)]
pub struct HarnessOptions {
    pub seed: u64,
    pub settings: Settings,
    /// Record wall-clock time per case. Off by default so that reports are
    /// byte-reproducible.
    pub timings: bool,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions { seed: 7, settings: Settings::default(), timings: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    TwoSided,
    ConsistencyWeb,
    Golden,
    SkippedHolomorphic,
}

impl CaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseKind::TwoSided => "two-sided",
            CaseKind::ConsistencyWeb => "consistency-web",
            CaseKind::Golden => "golden",
            CaseKind::SkippedHolomorphic => "skipped-holomorphic",
        }
    }
}

impl From<CheckKind> for CaseKind {
    fn from(k: CheckKind) -> Self {
        match k {
            CheckKind::TwoSided => CaseKind::TwoSided,
            CheckKind::ConsistencyWeb => CaseKind::ConsistencyWeb,
        }
    }
}

/// A value in the real convention and in the complex one, which differ by
/// `(-1)^dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignDictionary {
    pub dim: usize,
    pub real: i64,
    pub complex: i64,
    pub round_trip: bool,
}

impl SignDictionary {
    pub fn new(dim: usize, real: i64, complex: i64) -> Self {
        let round_trip = sign_power(dim) * complex == real && sign_power(dim) * real == complex;
        SignDictionary { dim, real, complex, round_trip }
    }

    /// Complex value obtained from the real one by the dictionary.
    pub fn from_real(dim: usize, real: i64) -> Self {
        Self::new(dim, real, sign_power(dim) * real)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub theorem: String,
    pub case: String,
    pub kind: CaseKind,
    pub lhs: i64,
    pub rhs: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    pub pass: bool,
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dictionary: Option<SignDictionary>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CaseResult {
    fn new(kind: CaseKind, lhs: i64, rhs: i64) -> Self {
        CaseResult {
            theorem: String::new(),
            case: String::new(),
            kind,
            lhs,
            rhs,
            expected: None,
            pass: false,
            seeds: vec![],
            dictionary: None,
            values: BTreeMap::new(),
            note: None,
            elapsed_ms: None,
        }
    }

    fn expected(mut self, e: Option<i64>) -> Self {
        self.expected = e;
        self
    }

    fn seeds(mut self, s: Vec<u64>) -> Self {
        self.seeds = s;
        self
    }

    fn dict(mut self, d: SignDictionary) -> Self {
        self.dictionary = Some(d);
        self
    }

    fn value(mut self, k: &str, v: i64) -> Self {
        self.values.insert(k.into(), v);
        self
    }

    fn note(mut self, n: String) -> Self {
        self.note = Some(n);
        self
    }

    fn settle(&mut self) {
        self.pass = self.lhs == self.rhs
            && self.expected.map_or(true, |e| e == self.lhs)
            && self.dictionary.map_or(true, |d| d.round_trip);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub catalog_version: u32,
    pub seed: u64,
    pub pass: bool,
    pub theorems: Vec<TheoremReport>,
}

impl VerifyReport {
    pub fn theorem(&self, id: &str) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.theorem == id)
    }

    pub fn cases(&self) -> impl Iterator<Item = &CaseResult> {
        self.theorems.iter().flat_map(|t| t.cases.iter())
    }

    /// One line per case and a summary line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "catalog v{} seed {}", self.catalog_version, self.seed);
        for t in &self.theorems {
            for c in &t.cases {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let _ = write!(out, "[{status}] {} {}: {} = {} ({})", t.theorem, c.case, c.lhs, c.rhs, c.kind.as_str());
                if let Some(ms) = c.elapsed_ms {
                    let _ = write!(out, " {ms} ms");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "{}: {}/{} passed", t.theorem, t.cases_passed, t.cases_run);
        }
        let _ = writeln!(out, "{}", if self.pass { "all checks passed" } else { "some checks FAILED" });
        out
    }
}

type CaseFn<'a> = Box<dyn Fn() -> Result<CaseResult> + Send + Sync + 'a>;

fn run_cases(theorem: &str, cases: Vec<(String, CaseFn<'_>)>, opts: &HarnessOptions) -> Result<TheoremReport> {
    let results: Vec<Result<CaseResult>> = cases
        .par_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let mut r = f()?;
            r.theorem = theorem.to_string();
            r.case = name.clone();
            if opts.timings {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            r.settle();
            Ok(r)
        })
        .collect();
    let mut cases = results.into_iter().collect::<Result<Vec<_>>>()?;
    cases.sort_by(|a, b| a.case.cmp(&b.case));
    let cases_passed = cases.iter().filter(|c| c.pass).count();
    Ok(TheoremReport { theorem: theorem.into(), cases_run: cases.len(), cases_passed, pass: cases_passed == cases.len(), cases })
}

fn case<'a>(name: String, f: impl Fn() -> Result<CaseResult> + Send + Sync + 'a) -> (String, CaseFn<'a>) {
    (name, Box::new(f))
}

fn gsv_of(g: &GermSpec, omega: &ComplexForm, settings: &Settings) -> Result<(i64, i64)> {
    let p = GsvProblem::new(g, omega)?;
    Ok((gsv_index(&p, settings)?.index as i64, gsv_real_sign(&p, settings)?))
}

/// Complex index of each holomorphic form against `(-1)^m` times the
/// signature index of its real part.
pub fn check_complex_real_dictionary(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let mut cases = vec![];
    for e in cat.entries.iter().filter(|e| e.germ.is_none()) {
        for (_, omega) in e.complex_forms() {
            if omega.dim() > 3 {
                return Err(IndexError::InvalidInput(format!("{}: chart dimension above 3", e.name)));
            }
            cases.push(case(e.name.clone(), move || {
                let m = omega.dim();
                let c = complex_ph_index(omega, s)? as i64;
                let r = real_ph_index(&realify(omega)?, s)?.index;
                Ok(CaseResult::new(CaseKind::TwoSided, c, sign_power(m) * r)
                    .expected(e.expected("index"))
                    .dict(SignDictionary::new(m, r, c))
                    .value("m", m as i64)
                    .value("complex", c)
                    .value("real", r))
            }));
        }
    }
    run_cases(COMPLEX_REAL, cases, opts)
}

/// Index of a stratum form inside the stratum against the index of its
/// radial extension in the whole chart.
pub fn check_stratum_extension(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let mut cases = vec![];
    for e in cat.entries.iter().filter(|e| e.germ.is_none()) {
        for (_, sf) in e.stratum_forms() {
            cases.push(case(e.name.clone(), move || {
                let cmp = verify_extension_index(sf, s)?;
                let chart = sf.chart();
                let mut r = CaseResult::new(CaseKind::TwoSided, cmp.lhs, cmp.rhs)
                    .expected(e.expected("index"))
                    .value("s", chart.s() as i64)
                    .value("m", chart.m() as i64);
                if let Form::Complex(c) = sf.form() {
                    r = r.dict(SignDictionary::new(chart.s(), cmp.lhs, complex_ph_index(c, s)? as i64));
                }
                Ok(r)
            }));
        }
    }
    run_cases(STRATUM_EXTENSION, cases, opts)
}

/// Colength of an ideal generated by scalar multiples of monomials, by
/// counting exponent vectors below the pure powers.
pub fn monomial_colength(gens: &[Monomial], nvars: usize) -> Option<u64> {
    let mut bound = vec![None::<u32>; nvars];
    for m in gens {
        if m.is_one() {
            return Some(0);
        }
        if let Some((i, e)) = m.pure_power() {
            bound[i] = Some(bound[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bound: Vec<u32> = bound.into_iter().collect::<Option<_>>()?;
    let mut count = 0;
    let mut cur = vec![0u32; nvars];
    loop {
        let mon = Monomial::new(cur.clone());
        if !gens.iter().any(|g| g.divides(&mon)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return Some(count);
            }
            cur[i] += 1;
            if cur[i] < bound[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Monomial generators of the Jacobian ideal when every partial derivative
/// is a single term.
fn monomial_jacobian(g: &GermSpec) -> Option<Vec<Monomial>> {
    if g.k() != 1 {
        return None;
    }
    let f = &g.defining()[0];
    let mut out = vec![];
    for i in 0..g.ctx().nvars() {
        let d = f.derivative(i);
        match d.nterms() {
            0 => {}
            1 => out.push(d.terms().next().unwrap().0.clone()),
            _ => return None,
        }
    }
    Some(out)
}

/// Milnor numbers by the standard basis engine, against lattice counting
/// when the Jacobian ideal is monomial and against the frozen value
/// otherwise.
pub fn check_milnor(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let mut cases = vec![];
    for (e, g) in cat.germs().filter(|(e, _)| e.expected("mu").is_some()) {
        cases.push(case(e.name.clone(), move || {
            let mu = milnor_number(g, s)? as i64;
            let expected = e.expected("mu");
            let r = match monomial_jacobian(g).and_then(|m| monomial_colength(&m, g.ctx().nvars())) {
                Some(count) => CaseResult::new(CaseKind::TwoSided, mu, count as i64),
                None => CaseResult::new(CaseKind::Golden, mu, expected.unwrap()),
            };
            Ok(r.expected(expected).value("chi", chi_fiber(g, s)?))
        }));
    }
    run_cases(MILNOR, cases, opts)
}

/// Euler obstruction of each germ: curve multiplicity against slice
/// reduction for plane curves, frozen values otherwise.
pub fn check_euler_obstruction(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let seed = opts.seed;
    let mut cases = vec![];
    for (e, g) in cat.germs().filter(|(e, _)| e.expected("eu").is_some()) {
        cases.push(case(e.name.clone(), move || {
            let rep = euler_obstruction_point(g, seed, s)?;
            let expected = e.expected("eu");
            let mut r = match rep.method {
                EuMethod::CurveMultiplicity => CaseResult::new(CaseKind::TwoSided, rep.eu, rep.slice_eu.unwrap()),
                _ => CaseResult::new(CaseKind::Golden, rep.eu, expected.unwrap()),
            };
            r = r.expected(expected).seeds(rep.slice_form_seeds.clone());
            if let Some(m) = rep.slice_mu {
                r = r.value("slice-mu", m as i64);
            }
            Ok(r.note(rep.method.as_str().into()))
        }));
    }
    run_cases(EULER_OBSTRUCTION, cases, opts)
}

/// GSV index against Euler characteristic times Schwartz index.
///
/// Radial case at a singular point: the Schwartz index is 1 and the only
/// holomorphic candidate is `dl` for generic `l`, whose GSV index is
/// `(-1)^n (chi - Eu)`. It stands in for the radial form exactly when
/// `Eu = 0`; otherwise the case is classified as skipped and only the sign
/// bookkeeping is checked. The `slice-morse` case checks the generic count
/// against `(-1)^n (chi - Eu)` itself.
pub fn check_gsv_proportionality(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let seed = opts.seed;
    let mut cases = vec![];
    for (e, g) in cat.germs().filter(|(e, _)| e.expected("chi").is_some()) {
        if !g.is_smooth() && e.expected("gsv-dl").is_some() {
            let data = move || -> Result<(usize, i64, i64, crate::milnor::GenericValue)> {
                let n = g.n();
                let chi = chi_fiber(g, s)?;
                let eu = euler_obstruction_point(g, seed, s)?.eu;
                Ok((n, chi, eu, gsv_generic_linear(g, seed, s)?))
            };
            cases.push(case(format!("{}/radial", e.name), move || {
                let (n, chi, eu, gv) = data()?;
                let dl = gv.value as i64;
                let r = if eu == 0 {
                    CaseResult::new(CaseKind::TwoSided, dl, sign_power(n) * chi)
                        .expected(e.expected("gsv-dl"))
                        .dict(SignDictionary::from_real(n, sign_power(n) * dl))
                } else {
                    let complex = sign_power(n) * chi;
                    CaseResult::new(CaseKind::SkippedHolomorphic, chi, sign_power(n) * complex)
                        .dict(SignDictionary::new(n, chi, complex))
                        .note(format!(
                            "Eu = {eu}: generic Morse count {dl} differs from (-1)^n chi = {complex}, no holomorphic radial representative; sign bookkeeping only"
                        ))
                };
                Ok(r.seeds(gv.seeds.clone()).value("chi", chi).value("eu", eu).value("gsv-dl", dl).value("n", n as i64))
            }));
            cases.push(case(format!("{}/slice-morse", e.name), move || {
                let (n, chi, eu, gv) = data()?;
                let dl = gv.value as i64;
                Ok(CaseResult::new(CaseKind::TwoSided, dl, sign_power(n) * (chi - eu))
                    .expected(e.expected("gsv-dl"))
                    .seeds(gv.seeds.clone())
                    .dict(SignDictionary::from_real(n, sign_power(n) * dl))
                    .value("chi", chi)
                    .value("eu", eu))
            }));
        }
        if g.is_smooth() {
            let (Some((_, omega)), Some(on_v)) =
                (e.complex_forms().find(|(n, _)| *n == "omega"), e.stratum_form("omega-v"))
            else {
                continue;
            };
            cases.push(case(format!("{}/smooth", e.name), move || {
                let n = g.n();
                let (gsv, gsv_real) = gsv_of(g, omega, s)?;
                let chi = chi_fiber(g, s)?;
                let sch = schwartz_index_complex(on_v, n, s)?;
                Ok(CaseResult::new(CaseKind::TwoSided, gsv, chi * sch)
                    .expected(e.expected("gsv:omega"))
                    .dict(SignDictionary::new(n, gsv_real, gsv))
                    .value("chi", chi)
                    .value("schwartz", sch))
            }));
        }
    }
    run_cases(GSV_PROPORTIONALITY, cases, opts)
}

/// Euler obstruction of radially extended forms against `Eu_V(0)` times
/// the Schwartz index.
pub fn check_eu_proportionality(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let seed = opts.seed;
    let mut cases = vec![];
    for (e, g) in cat.germs() {
        for (name, sf) in e.stratum_forms() {
            let key = format!("eu-ext:{name}");
            let Some(expected) = e.expected(&key) else { continue };
            cases.push(case(format!("{}/{name}", e.name), move || {
                let rep = eu_of_radial_extension(g, sf, seed, s)?;
                Ok(CaseResult::new(rep.kind.into(), rep.check.lhs, rep.check.rhs)
                    .expected(Some(expected))
                    .dict(SignDictionary::new(rep.n, rep.value_real, rep.value_complex))
                    .value("eu-point", rep.eu_point)
                    .value("schwartz", rep.schwartz)
                    .note(rep.independent_method.clone()))
            }));
        }
    }
    run_cases(EU_PROPORTIONALITY, cases, opts)
}

/// `x_1 -> x_1 + x_2`, `x_2 -> x_1 - x_2`, other coordinates fixed, applied
/// to both the germ and the form.
fn linear_change(g: &GermSpec, omega: &ComplexForm) -> Result<(GermSpec, ComplexForm)> {
    let ctx = g.ctx();
    let m = ctx.nvars();
    if m < 2 {
        return Err(IndexError::InvalidInput("coordinate change needs two variables".into()));
    }
    let x = |i| Polynomial::var_at(ctx, i);
    let mut images: Vec<Polynomial> = (0..m).map(x).collect();
    images[0] = &x(0) + &x(1);
    images[1] = &x(0) - &x(1);
    let f = g.defining().iter().map(|p| p.substitute(ctx, &images)).collect();
    let g2 = GermSpec::new(g.name(), ctx, f)?;
    let cimages: Vec<CPoly> = images.iter().map(|p| p.to_gaussian()).collect();
    let a: Vec<CPoly> = omega.holomorphic_coeffs()?.iter().map(|c| c.substitute(ctx, &cimages)).collect();
    // Pullback: coefficient of dx_i is sum_j a_j(phi) d phi_j / dx_i.
    let mut b = a.clone();
    b[0] = &a[0] + &a[1];
    b[1] = &a[0] - &a[1];
    Ok((g2, ComplexForm::new(ctx, b)?))
}

fn add_forms(a: &ComplexForm, b: &ComplexForm) -> Result<ComplexForm> {
    let coeffs = a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x + y).collect();
    ComplexForm::new(a.ctx(), coeffs)
}

fn scaled(omega: &ComplexForm, t: &Gaussian) -> Result<ComplexForm> {
    ComplexForm::new(omega.ctx(), omega.coeffs().iter().map(|c| c.scale(t)).collect())
}

/// Stability of the GSV index: other coordinate differentials, a linear
/// change of coordinates, perturbations by `t dl` (only where the base form
/// does not vanish, so the zeros stay at the origin algebraically) and by
/// the higher-order `t l dl`, plus the frozen per-form values.
pub fn check_gsv_stability(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let s = &opts.settings;
    let t = Gaussian::real(rat(1, 10));
    let seeds: Vec<u64> = (0..3).map(|i| opts.seed.wrapping_add(i)).collect();
    let mut cases = vec![];
    for (e, g) in cat.germs() {
        for (name, omega) in e.complex_forms() {
            if let Some(v) = e.expected(&format!("gsv:{name}")) {
                cases.push(case(format!("{}/golden-{name}", e.name), move || {
                    let (gsv, real) = gsv_of(g, omega, s)?;
                    Ok(CaseResult::new(CaseKind::Golden, gsv, v).dict(SignDictionary::new(g.n(), real, gsv)))
                }));
            }
        }
        let Some(stable) = e.expected("gsv-stable") else { continue };
        let forms: Vec<(&str, &ComplexForm)> = e.complex_forms().collect();
        let Some(&(base_name, base)) = forms.first() else { continue };
        let n = g.n();
        for &(name, omega) in &forms[1..] {
            cases.push(case(format!("{}/{name}-vs-{base_name}", e.name), move || {
                let (a, real) = gsv_of(g, omega, s)?;
                let (b, _) = gsv_of(g, base, s)?;
                Ok(CaseResult::new(CaseKind::TwoSided, a, b).expected(Some(stable)).dict(SignDictionary::new(n, real, a)))
            }));
        }
        cases.push(case(format!("{}/linear-change", e.name), move || {
            let (g2, w2) = linear_change(g, base)?;
            let (a, real) = gsv_of(&g2, &w2, s)?;
            let (b, _) = gsv_of(g, base, s)?;
            Ok(CaseResult::new(CaseKind::TwoSided, a, b).expected(Some(stable)).dict(SignDictionary::new(n, real, a)))
        }));
        let vanishes = base.coeffs().iter().all(|c| c.constant_term().is_zero());
        for &sd in &seeds {
            let t = t.clone();
            let perturb = move |higher: bool| -> Result<ComplexForm> {
                let l = generic_linear_form(g, sd);
                let dl = ComplexForm::exact(&l)?;
                let p = if higher {
                    let lc = l.to_gaussian().embed(dl.wirtinger_ctx())?;
                    ComplexForm::new(g.ctx(), dl.coeffs().iter().map(|c| c * &lc).collect())?
                } else {
                    dl
                };
                add_forms(base, &scaled(&p, &t)?)
            };
            let perturb = std::sync::Arc::new(perturb);
            for higher in [false, true] {
                if !higher && vanishes {
                    continue;
                }
                let label = if higher { "higher-order" } else { "shift" };
                let perturb = perturb.clone();
                cases.push(case(format!("{}/{label}-{sd}", e.name), move || {
                    let (a, real) = gsv_of(g, &perturb(higher)?, s)?;
                    let (b, _) = gsv_of(g, base, s)?;
                    Ok(CaseResult::new(CaseKind::TwoSided, a, b)
                        .expected(Some(stable))
                        .seeds(vec![sd])
                        .dict(SignDictionary::new(n, real, a)))
                }));
            }
        }
    }
    run_cases(GSV_STABILITY, cases, opts)
}

fn colength_number(c: Colength) -> i64 {
    c.finite().map_or(-1, |v| v as i64)
}

/// Every colength behind the catalog, under both local orderings.
pub fn check_ordering_independence(cat: &Catalog, opts: &HarnessOptions) -> Result<TheoremReport> {
    let limits = opts.settings.limits;
    let ds = Settings { ordering: LocalOrdering::neg_deg_revlex(), limits };
    let dl = Settings { ordering: LocalOrdering::neg_deg_lex(), limits };
    let both = move |f: &(dyn Fn(&Settings) -> Result<i64> + Sync)| -> Result<CaseResult> {
        Ok(CaseResult::new(CaseKind::TwoSided, f(&ds)?, f(&dl)?))
    };
    let both = std::sync::Arc::new(both);
    let mut cases = vec![];
    for e in &cat.entries {
        if let Some(g) = &e.germ {
            let stages = g.k();
            for j in 0..stages {
                let both = both.clone();
                cases.push(case(format!("{}/milnor-stage-{}", e.name, j + 1), move || {
                    both(&|st| Ok(fiber_report(g, st)?.recursion_trace[j] as i64))
                }));
            }
            for (name, omega) in e.complex_forms() {
                let both = both.clone();
                cases.push(case(format!("{}/gsv-{name}", e.name), move || {
                    both(&|st| {
                        let gens = GsvProblem::new(g, omega)?.ideal_generators()?;
                        Ok(colength_number(colength_of(g.ctx(), gens, st)?))
                    })
                }));
            }
        } else {
            for (_, omega) in e.complex_forms() {
                let both2 = both.clone();
                cases.push(case(format!("{}/complex", e.name), move || {
                    both2(&|st| Ok(colength_number(colength_of(omega.ctx(), omega.holomorphic_coeffs()?, st)?)))
                }));
                let both2 = both.clone();
                cases.push(case(format!("{}/real", e.name), move || {
                    both2(&|st| {
                        let r = realify(omega)?;
                        Ok(colength_number(colength_of(r.ctx(), r.coeffs().to_vec(), st)?))
                    })
                }));
            }
        }
        for (name, sf) in e.stratum_forms() {
            if sf.chart().s() > 0 {
                let both2 = both.clone();
                cases.push(case(format!("{}/{name}-stratum", e.name), move || {
                    both2(&|st| {
                        let r = sf.realified()?;
                        Ok(colength_number(colength_of(r.ctx(), r.coeffs().to_vec(), st)?))
                    })
                }));
            }
            let both2 = both.clone();
            cases.push(case(format!("{}/{name}-extension", e.name), move || {
                both2(&|st| {
                    let r = extension_real(sf)?;
                    Ok(colength_number(colength_of(r.ctx(), r.coeffs().to_vec(), st)?))
                })
            }));
        }
    }
    run_cases(ORDERING_INDEPENDENCE, cases, opts)
}

fn extension_real(sf: &StratumForm) -> Result<crate::real_index::RealForm> {
    match radial_extension(sf)? {
        Form::Real(r) => Ok(r),
        Form::Complex(c) => realify(&c),
    }
}

type Check = fn(&Catalog, &HarnessOptions) -> Result<TheoremReport>;

/// Every check, in report order.
pub const CHECKS: [(&str, Check); 8] = [
    (COMPLEX_REAL, check_complex_real_dictionary),
    (STRATUM_EXTENSION, check_stratum_extension),
    (MILNOR, check_milnor),
    (EULER_OBSTRUCTION, check_euler_obstruction),
    (GSV_PROPORTIONALITY, check_gsv_proportionality),
    (EU_PROPORTIONALITY, check_eu_proportionality),
    (GSV_STABILITY, check_gsv_stability),
    (ORDERING_INDEPENDENCE, check_ordering_independence),
];

/// The named checks, in report order; unknown names are an input error.
pub fn run_checks(cat: &Catalog, opts: &HarnessOptions, only: &[String]) -> Result<VerifyReport> {
    if let Some(bad) = only.iter().find(|id| !CHECKS.iter().any(|(c, _)| c == id)) {
        return Err(IndexError::InvalidInput(format!("unknown check '{bad}'")));
    }
    let theorems = CHECKS
        .iter()
        .filter(|(id, _)| only.iter().any(|o| o == id))
        .map(|(_, c)| c(cat, opts))
        .collect::<Result<Vec<_>>>()?;
    let pass = theorems.iter().all(|t| t.pass);
    Ok(VerifyReport { catalog_version: cat.version, seed: opts.seed, pass, theorems })
}

/// Every check over the catalog.
pub fn run_all(cat: &Catalog, opts: &HarnessOptions) -> Result<VerifyReport> {
    let all: Vec<String> = CHECKS.iter().map(|(id, _)| id.to_string()).collect();
    run_checks(cat, opts, &all)
}
