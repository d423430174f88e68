//! Command-line surface: germ files in, integers and reports out.
//!
//! Exit codes: 0 success, 1 failed mathematical precondition (including a
//! failed `verify`), 2 bad input, 3 resource limit.

pub mod germfile;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use formindex::complex_index::{complex_ph_index, realify, ComplexForm};
use formindex::euler::{eu_of_radial_extension, euler_obstruction_point};
use formindex::gsv::{gsv_index, gsv_real_sign, GsvProblem};
use formindex::harness::{self, catalog, HarnessOptions};
use formindex::local::{colength_of, Limits, LocalOrdering, Settings};
use formindex::milnor::{fiber_report, GermSpec};
use formindex::poly::{parse, ChartKind, Ctx, Monomial, Polynomial};
use formindex::real_index::{real_ph_index, RealForm};
use formindex::schwartz::{radial_extension, schwartz_index, schwartz_index_complex, StratumForm};
use formindex::{IndexError, Result};

use germfile::{load_germ, GermFile, LoadedForm};

#[derive(Parser)]
#[command(name = "formindex", version, about = "Exact indices of 1-forms on isolated complete intersection germs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderingArg {
    /// Negative degree reverse lexicographic.
    #[value(name = "ds")]
    Ds,
    /// Negative degree lexicographic.
    #[value(name = "Ds")]
    DsLex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TagArg {
    Real,
    Complex,
}

#[derive(Args, Clone)]
struct Common {
    /// Print the structured document instead of text.
    #[arg(long)]
    json: bool,
    /// Seed for generic linear forms.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Standard basis reduction step budget.
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: u64,
    /// Largest total degree the standard basis may reach.
    #[arg(long, default_value_t = 64)]
    max_degree: u32,
    /// Local monomial ordering.
    #[arg(long, value_enum, default_value = "ds")]
    ordering: OrderingArg,
}

impl Common {
    fn settings(&self) -> Settings {
        let ordering = match self.ordering {
            OrderingArg::Ds => LocalOrdering::neg_deg_revlex(),
            OrderingArg::DsLex => LocalOrdering::neg_deg_lex(),
        };
        Settings { ordering, limits: Limits { max_steps: self.max_steps, max_degree: self.max_degree } }
    }
}

#[derive(Args)]
struct FileArgs {
    file: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct FormArgs {
    file: PathBuf,
    /// A form name from the file, `radial`, `d<var>`, `d(<poly>)` or
    /// `[a1, a2, ..]`.
    #[arg(long)]
    form: Option<String>,
    /// How to read an inline or exact stratum form.
    #[arg(long, value_enum)]
    tag: Option<TagArg>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every check over the shipped catalog.
    #[arg(long)]
    all: bool,
    /// Run only the named checks.
    #[arg(long)]
    only: Vec<String>,
    /// Record elapsed milliseconds per case; the report is then no longer
    /// reproducible byte for byte.
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Cmd {
    /// Milnor number and recursion trace.
    Milnor(FileArgs),
    /// Euler characteristic of the Milnor fiber.
    Chi(FileArgs),
    /// Signature index of a real form.
    IndexReal(FormArgs),
    /// Index of a holomorphic form.
    IndexComplex(FormArgs),
    /// GSV index of a holomorphic form on the germ.
    Gsv(FormArgs),
    /// Schwartz index of a stratum form.
    Schwartz(FormArgs),
    /// Euler obstruction of the germ, or of a radially extended stratum form.
    Eu(FormArgs),
    /// Radial extension of a stratum form.
    RadialExtend(FormArgs),
    /// Colength of the defining ideal, or of a form's coefficients.
    Colength(FormArgs),
    /// Check the index identities over the shipped catalog.
    Verify(VerifyArgs),
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Runs one command; `argv[0]` is the program name.
pub fn run_command<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let json = match &cli.cmd {
        Cmd::Milnor(a) | Cmd::Chi(a) => a.common.json,
        Cmd::IndexReal(a)
        | Cmd::IndexComplex(a)
        | Cmd::Gsv(a)
        | Cmd::Schwartz(a)
        | Cmd::Eu(a)
        | Cmd::RadialExtend(a)
        | Cmd::Colength(a) => a.common.json,
        Cmd::Verify(a) => a.common.json,
    };
    match dispatch(&cli.cmd) {
        Ok(o) => {
            let _ = if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("serializable"))
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Cmd) -> Result<Output> {
    match cmd {
        Cmd::Milnor(a) => milnor(a, false),
        Cmd::Chi(a) => milnor(a, true),
        Cmd::IndexReal(a) => index_real(a),
        Cmd::IndexComplex(a) => index_complex(a),
        Cmd::Gsv(a) => gsv(a),
        Cmd::Schwartz(a) => schwartz(a),
        Cmd::Eu(a) => eu(a),
        Cmd::RadialExtend(a) => radial_extend(a),
        Cmd::Colength(a) => colength(a),
        Cmd::Verify(a) => verify(a),
    }
}

fn need_germ(file: &GermFile) -> Result<&GermSpec> {
    file.germ.as_ref().ok_or_else(|| IndexError::InvalidInput("this command needs defining equations on a complex chart".into()))
}

fn milnor(a: &FileArgs, chi_only: bool) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let g = need_germ(&file)?;
    let r = fiber_report(g, &a.common.settings())?;
    let text = if chi_only {
        format!("chi = {}\n", r.chi)
    } else {
        format!("germ = {}\nmu = {}\nchi = {}\nrecursion = {:?}\n", g.name(), r.milnor_number, r.chi, r.recursion_trace)
    };
    let json = json!({
        "command": if chi_only { "chi" } else { "milnor" },
        "germ": g.name(),
        "n": g.n(),
        "k": g.k(),
        "mu": r.milnor_number,
        "chi": r.chi,
        "recursion_trace": r.recursion_trace,
    });
    Ok(Output::ok(text, json))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Want {
    Real,
    Complex,
    Stratum,
}

fn real_ctx(file: &GermFile) -> Result<Ctx> {
    if file.ctx.kind() == ChartKind::Real {
        Ok(file.ctx.clone())
    } else {
        file.ctx.realification()
    }
}

fn complex_ctx(file: &GermFile) -> Result<Ctx> {
    if file.ctx.kind() != ChartKind::Complex {
        return Err(IndexError::InvalidInput("complex forms need a complex chart".into()));
    }
    Ok(file.ctx.clone())
}

fn inline_coeffs(spec: &str) -> Option<Vec<String>> {
    let inner = spec.trim().strip_prefix('[')?.strip_suffix(']')?;
    Some(inner.split(',').map(|s| s.trim().to_string()).collect())
}

fn exact_source(spec: &str) -> Option<&str> {
    let rest = spec.trim().strip_prefix('d')?;
    if let Some(inner) = rest.strip_prefix('(') {
        inner.strip_suffix(')')
    } else if !rest.is_empty() && rest.chars().all(|c| c.is_alphanumeric() || c == '_') {
        Some(rest)
    } else {
        None
    }
}

fn from_file(form: &LoadedForm, want: Want) -> Option<Result<LoadedForm>> {
    match (want, form) {
        (Want::Real, LoadedForm::Real(_)) | (Want::Complex, LoadedForm::Complex(_)) | (Want::Stratum, LoadedForm::Stratum(_)) => {
            Some(Ok(form.clone()))
        }
        (Want::Real, LoadedForm::Complex(c)) => Some(realify(c).map(LoadedForm::Real)),
        _ => None,
    }
}

fn resolve(file: &GermFile, spec: Option<&str>, tag: Option<TagArg>, want: Want) -> Result<LoadedForm> {
    let Some(spec) = spec else {
        let candidates: Vec<_> = file.forms.iter().filter_map(|f| from_file(&f.form, want)).collect();
        return match candidates.len() {
            1 => candidates.into_iter().next().unwrap(),
            n => Err(IndexError::InvalidInput(format!("--form is required: the file has {n} suitable forms"))),
        };
    };
    if let Some(named) = file.form(spec) {
        return from_file(&named.form, want)
            .unwrap_or_else(|| Err(IndexError::InvalidInput(format!("form '{spec}' does not fit this command"))));
    }
    let real = match want {
        Want::Real => true,
        Want::Complex => false,
        Want::Stratum => tag == Some(TagArg::Real),
    };
    let chart = if want == Want::Stratum {
        Some(file.chart()?.ok_or_else(|| IndexError::InvalidInput("the file declares no stratum".into()))?)
    } else {
        None
    };
    let (rctx, cctx) = match &chart {
        Some(c) => (c.stratum_real_ctx(), c.stratum_ctx()),
        None if real => (real_ctx(file)?, file.ctx.clone()),
        None => (file.ctx.clone(), complex_ctx(file)?),
    };
    let wrap = |form: formindex::schwartz::Form| -> Result<LoadedForm> {
        match (&chart, form) {
            (Some(c), formindex::schwartz::Form::Real(r)) => Ok(LoadedForm::Stratum(StratumForm::real(c, r)?)),
            (Some(c), formindex::schwartz::Form::Complex(w)) => Ok(LoadedForm::Stratum(StratumForm::complex(c, w)?)),
            (None, formindex::schwartz::Form::Real(r)) => Ok(LoadedForm::Real(r)),
            (None, formindex::schwartz::Form::Complex(w)) => Ok(LoadedForm::Complex(w)),
        }
    };
    use formindex::schwartz::Form;
    if spec.trim() == "radial" {
        if let Some(c) = &chart {
            if c.s() == 0 {
                return Ok(LoadedForm::Stratum(StratumForm::point(c)?));
            }
        }
        return if real {
            let two = formindex::poly::int(2);
            let coeffs = (0..rctx.nvars()).map(|i| Polynomial::var_at(&rctx, i).scale(&two)).collect();
            wrap(Form::Real(RealForm::new(&rctx, coeffs)?))
        } else {
            wrap(Form::Complex(ComplexForm::radial(&cctx)?))
        };
    }
    if let Some(src) = exact_source(spec) {
        return if real {
            wrap(Form::Real(RealForm::exact(&parse(&rctx, src)?)?))
        } else {
            wrap(Form::Complex(ComplexForm::exact(&parse(&cctx, src)?)?))
        };
    }
    if let Some(coeffs) = inline_coeffs(spec) {
        return if real {
            wrap(Form::Real(RealForm::parse(&rctx, &coeffs)?))
        } else {
            wrap(Form::Complex(ComplexForm::parse(&cctx, &coeffs)?))
        };
    }
    Err(IndexError::InvalidInput(format!("no form named '{spec}' and not an inline form")))
}

fn monomial_text(ctx: &Ctx, m: &Monomial) -> String {
    Polynomial::term(ctx, m.clone(), formindex::poly::int(1)).to_string()
}

fn index_real(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let LoadedForm::Real(eta) = resolve(&file, a.form.as_deref(), a.tag, Want::Real)? else { unreachable!() };
    let r = real_ph_index(&eta, &a.common.settings())?;
    let c = &r.certificate;
    let ctx = eta.ctx();
    let basis: Vec<String> = c.monomial_basis.iter().map(|m| monomial_text(ctx, m)).collect();
    let gram: Vec<Vec<String>> = c.gram.iter().map(|row| row.iter().map(|q| q.to_string()).collect()).collect();
    let mut text = String::new();
    let _ = writeln!(text, "form = {eta}\nindex = {}\ncolength = {}", r.index, c.colength);
    let _ = writeln!(text, "signature = {} (positive {}, negative {})", c.signature, c.positive, c.negative);
    let _ = writeln!(text, "socle = {}\nfunctional = coefficient of {}", c.socle, monomial_text(ctx, &c.functional_monomial));
    let json = json!({
        "command": "index-real",
        "form": eta.to_string(),
        "index": r.index,
        "colength": c.colength,
        "signature": c.signature,
        "positive": c.positive,
        "negative": c.negative,
        "char_poly_sign_sequence": c.char_poly_sign_sequence,
        "monomial_basis": basis,
        "socle": c.socle.to_string(),
        "functional_monomial": monomial_text(ctx, &c.functional_monomial),
        "gram": gram,
    });
    Ok(Output::ok(text, json))
}

fn index_complex(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let LoadedForm::Complex(w) = resolve(&file, a.form.as_deref(), a.tag, Want::Complex)? else { unreachable!() };
    let i = complex_ph_index(&w, &a.common.settings())?;
    let json = json!({ "command": "index-complex", "form": w.to_string(), "index": i });
    Ok(Output::ok(format!("form = {w}\nindex = {i}\n"), json))
}

fn gsv(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let g = need_germ(&file)?;
    let LoadedForm::Complex(w) = resolve(&file, a.form.as_deref(), a.tag, Want::Complex)? else { unreachable!() };
    let s = a.common.settings();
    let p = GsvProblem::new(g, &w)?;
    let r = gsv_index(&p, &s)?;
    let real = gsv_real_sign(&p, &s)?;
    let mut text = format!(
        "form = {w}\ngsv = {}\ngsv of real part = {real}\nboundary transversality = {}\nideal:\n",
        r.index, r.boundary_transversality
    );
    for gen in &r.ideal {
        let _ = writeln!(text, "  {gen}");
    }
    let json = json!({
        "command": "gsv",
        "germ": g.name(),
        "form": w.to_string(),
        "gsv": r.index,
        "gsv_real": real,
        "n": g.n(),
        "ideal": r.ideal,
        "boundary_transversality": r.boundary_transversality,
    });
    Ok(Output::ok(text, json))
}

fn stratum_form(file: &GermFile, a: &FormArgs) -> Result<StratumForm> {
    match resolve(file, a.form.as_deref(), a.tag, Want::Stratum)? {
        LoadedForm::Stratum(sf) => Ok(sf),
        _ => unreachable!(),
    }
}

fn schwartz(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let sf = stratum_form(&file, a)?;
    let s = a.common.settings();
    let n = file.germ.as_ref().map_or(sf.chart().s(), |g| g.n());
    let real = schwartz_index(&sf, &s)?;
    let complex = schwartz_index_complex(&sf, n, &s)?;
    let text = format!("form = {}\nschwartz = {real}\nschwartz, complex convention (n = {n}) = {complex}\n", sf.form());
    let json = json!({
        "command": "schwartz",
        "form": sf.form().to_string(),
        "s": sf.chart().s(),
        "m": sf.chart().m(),
        "n": n,
        "schwartz": real,
        "schwartz_complex": complex,
    });
    Ok(Output::ok(text, json))
}

fn eu(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let g = need_germ(&file)?;
    let s = a.common.settings();
    let seed = a.common.seed;
    if a.form.is_none() {
        let r = euler_obstruction_point(g, seed, &s)?;
        let mut text = format!("germ = {}\neu = {}\nmethod = {}\nseed = {seed}\n", g.name(), r.eu, r.method.as_str());
        if let Some(mu) = r.slice_mu {
            let _ = writeln!(text, "generic slice mu = {mu} (seeds {:?})", r.slice_form_seeds);
        }
        let json = json!({ "command": "eu", "germ": g.name(), "seed": seed, "report": r });
        return Ok(Output::ok(text, json));
    }
    let sf = stratum_form(&file, a)?;
    let r = eu_of_radial_extension(g, &sf, seed, &s)?;
    let mut text = String::new();
    let _ = writeln!(text, "germ = {}\nform = {}\nseed = {seed}", g.name(), sf.form());
    let _ = writeln!(text, "eu of extension = {} (complex convention {})", r.value_real, r.value_complex);
    let _ = writeln!(text, "eu(V) = {}, schwartz = {}", r.eu_point, r.schwartz);
    let _ = writeln!(
        text,
        "check ({}, {}): {} = {} {}",
        if r.check.pass { "pass" } else { "FAIL" },
        r.independent_method,
        r.check.lhs,
        r.check.rhs,
        serde_json::to_value(r.kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
    );
    let code = if r.check.pass { 0 } else { 1 };
    let json = json!({ "command": "eu", "germ": g.name(), "seed": seed, "report": r });
    Ok(Output { text, json, code })
}

fn radial_extend(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let sf = stratum_form(&file, a)?;
    let ext = radial_extension(&sf)?;
    let json = json!({ "command": "radial-extend", "form": sf.form().to_string(), "extension": ext.to_string() });
    Ok(Output::ok(format!("form = {}\nextension = {ext}\n", sf.form()), json))
}

fn colength(a: &FormArgs) -> Result<Output> {
    let file = load_germ(&a.file)?;
    let s = a.common.settings();
    let (what, c) = match &a.form {
        None => {
            let g = need_germ(&file)?;
            ("defining ideal".to_string(), colength_of(g.ctx(), g.defining().to_vec(), &s)?)
        }
        Some(_) if a.tag == Some(TagArg::Real) => {
            let LoadedForm::Real(r) = resolve(&file, a.form.as_deref(), a.tag, Want::Real)? else { unreachable!() };
            (r.to_string(), colength_of(r.ctx(), r.coeffs().to_vec(), &s)?)
        }
        Some(_) => {
            let LoadedForm::Complex(w) = resolve(&file, a.form.as_deref(), a.tag, Want::Complex)? else { unreachable!() };
            (w.to_string(), colength_of(w.ctx(), w.holomorphic_coeffs()?, &s)?)
        }
    };
    let json = json!({ "command": "colength", "of": what, "colength": c });
    Ok(Output::ok(format!("of = {what}\ncolength = {c}\n"), json))
}

fn verify(a: &VerifyArgs) -> Result<Output> {
    if !a.all && a.only.is_empty() {
        return Err(IndexError::InvalidInput("nothing to verify: pass --all or --only <check>".into()));
    }
    let cat = catalog::shipped()?;
    let opts = HarnessOptions { seed: a.common.seed, settings: a.common.settings(), timings: a.timings };
    let report = if a.all { harness::run_all(&cat, &opts)? } else { harness::run_checks(&cat, &opts, &a.only)? };
    let code = if report.pass { 0 } else { 1 };
    let json = serde_json::to_value(&report).expect("serializable");
    Ok(Output { text: report.render_text(), json, code })
}
