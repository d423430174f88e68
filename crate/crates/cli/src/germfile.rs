//! Germ files: `[meta]`, `[vars]`, `[f]` and repeated `[form]` sections,
//! one item per line, `#` starts a comment.
//!
//! ```text
//! [meta]
//! name = cusp
//! n = 1
//! k = 1
//!
//! [vars]
//! kind = complex
//! names = x, y
//! stratum =
//! transverse = x, y
//!
//! [f]
//! y^2 - x^3
//!
//! [form]
//! name = dy
//! tag = complex
//! 0
//! 1
//! ```
//!
//! Forms live on the whole chart unless `on = stratum`. `tag = real` forms
//! use the real coordinates `x_re, x_im, ..` of a complex chart. `tag =
//! radial` forms take no coefficient lines.

use std::fmt::Write as _;
use std::path::Path;

use formindex::complex_index::ComplexForm;
use formindex::milnor::GermSpec;
use formindex::poly::{parse, ChartKind, Ctx, Polynomial, VariableContext};
use formindex::real_index::RealForm;
use formindex::schwartz::{Form, ProductChart, StratumForm};
use formindex::{IndexError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormTag {
    Real,
    Complex,
    Radial,
}

impl FormTag {
    fn as_str(self) -> &'static str {
        match self {
            FormTag::Real => "real",
            FormTag::Complex => "complex",
            FormTag::Radial => "radial",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadedForm {
    Real(RealForm),
    Complex(ComplexForm),
    Stratum(StratumForm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedForm {
    pub name: String,
    pub tag: FormTag,
    pub form: LoadedForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GermFile {
    pub name: String,
    /// The chart; complex or real.
    pub ctx: Ctx,
    /// Stratum dimension when the chart is split.
    pub stratum: Option<usize>,
    /// `None` exactly for real charts.
    pub germ: Option<GermSpec>,
    pub forms: Vec<NamedForm>,
}

impl GermFile {
    pub fn chart(&self) -> Result<Option<ProductChart>> {
        self.stratum.map(|s| ProductChart::from_ctx(&self.ctx, s)).transpose()
    }

    pub fn form(&self, name: &str) -> Option<&NamedForm> {
        self.forms.iter().find(|f| f.name == name)
    }
}

fn at(line: usize, e: IndexError) -> IndexError {
    match e {
        IndexError::Syntax { col, msg, .. } => IndexError::Syntax { line, col, msg },
        other => IndexError::InvalidInput(format!("line {line}: {other}")),
    }
}

fn syntax(line: usize, msg: impl Into<String>) -> IndexError {
    IndexError::Syntax { line, col: 1, msg: msg.into() }
}

fn list(v: &str) -> Vec<String> {
    v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

#[derive(Default)]
struct RawForm {
    line: usize,
    name: Option<String>,
    tag: Option<String>,
    on: Option<String>,
    coeffs: Vec<(usize, String)>,
}

#[derive(Default)]
struct Raw {
    name: Option<String>,
    n: Option<(usize, usize)>,
    k: Option<(usize, usize)>,
    kind: Option<String>,
    names: Option<Vec<String>>,
    stratum: Option<(usize, Vec<String>)>,
    transverse: Option<(usize, Vec<String>)>,
    f: Vec<(usize, String)>,
    forms: Vec<RawForm>,
}

fn number(line: usize, v: &str) -> Result<usize> {
    v.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found '{v}'")))
}

fn scan(text: &str) -> Result<Raw> {
    let mut raw = Raw::default();
    let mut section = String::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('[') {
            let h = h.strip_suffix(']').ok_or_else(|| syntax(ln, "unterminated section header"))?.trim();
            match h {
                "meta" | "vars" | "f" => {}
                "form" => raw.forms.push(RawForm { line: ln, ..Default::default() }),
                other => return Err(syntax(ln, format!("unknown section [{other}]"))),
            }
            section = h.to_string();
            continue;
        }
        let kv = line.split_once('=').map(|(k, v)| (k.trim(), v.trim()));
        match (section.as_str(), kv) {
            ("meta", Some(("name", v))) => raw.name = Some(v.to_string()),
            ("meta", Some(("n", v))) => raw.n = Some((ln, number(ln, v)?)),
            ("meta", Some(("k", v))) => raw.k = Some((ln, number(ln, v)?)),
            ("vars", Some(("kind", v))) => raw.kind = Some(v.to_string()),
            ("vars", Some(("names", v))) => raw.names = Some(list(v)),
            ("vars", Some(("stratum", v))) => raw.stratum = Some((ln, list(v))),
            ("vars", Some(("transverse", v))) => raw.transverse = Some((ln, list(v))),
            ("f", None) => raw.f.push((ln, line.to_string())),
            ("form", kv) => {
                let form = raw.forms.last_mut().unwrap();
                match kv {
                    Some(("name", v)) => form.name = Some(v.to_string()),
                    Some(("tag", v)) => form.tag = Some(v.to_string()),
                    Some(("on", v)) => form.on = Some(v.to_string()),
                    Some((k, _)) => return Err(syntax(ln, format!("unknown form key '{k}'"))),
                    None => form.coeffs.push((ln, line.to_string())),
                }
            }
            ("", _) => return Err(syntax(ln, "content before the first section")),
            (s, Some((k, _))) => return Err(syntax(ln, format!("unknown key '{k}' in [{s}]"))),
            (s, None) => return Err(syntax(ln, format!("expected 'key = value' in [{s}]"))),
        }
    }
    Ok(raw)
}

fn polys(ctx: &Ctx, lines: &[(usize, String)]) -> Result<Vec<Polynomial<formindex::poly::Rational>>> {
    lines.iter().map(|(ln, s)| parse(ctx, s).map_err(|e| at(*ln, e))).collect()
}

fn cpolys(ctx: &Ctx, lines: &[(usize, String)]) -> Result<Vec<formindex::poly::CPoly>> {
    lines.iter().map(|(ln, s)| parse(ctx, s).map_err(|e| at(*ln, e))).collect()
}

fn build_form(raw: &RawForm, ctx: &Ctx, chart: Option<&ProductChart>) -> Result<NamedForm> {
    let ln = raw.line;
    let name = raw.name.clone().ok_or_else(|| syntax(ln, "form without a name"))?;
    let tag = match raw.tag.as_deref() {
        Some("real") => FormTag::Real,
        Some("complex") => FormTag::Complex,
        Some("radial") => FormTag::Radial,
        Some(t) => return Err(syntax(ln, format!("unknown form tag '{t}'"))),
        None => return Err(syntax(ln, format!("form '{name}' has no tag"))),
    };
    let on_stratum = match raw.on.as_deref() {
        None | Some("ambient") => false,
        Some("stratum") => true,
        Some(o) => return Err(syntax(ln, format!("'on' must be ambient or stratum, found '{o}'"))),
    };
    if tag == FormTag::Radial && !raw.coeffs.is_empty() {
        return Err(syntax(raw.coeffs[0].0, "radial forms take no coefficients"));
    }
    let wrap = |e: IndexError| match e {
        IndexError::Syntax { .. } => e,
        other => IndexError::InvalidInput(format!("form '{name}' (line {ln}): {other}")),
    };
    let form = if on_stratum {
        let chart = chart.ok_or_else(|| syntax(ln, "stratum form in a file without a stratum split"))?;
        let sf = match tag {
            FormTag::Radial if chart.s() == 0 => StratumForm::point(chart),
            FormTag::Radial => StratumForm::complex(chart, ComplexForm::radial(&chart.stratum_ctx())?),
            FormTag::Real => {
                let real = chart.stratum_real_ctx();
                polys(&real, &raw.coeffs).and_then(|c| RealForm::new(&real, c)).and_then(|r| StratumForm::real(chart, r))
            }
            FormTag::Complex => {
                let sc = chart.stratum_ctx();
                let w = sc.wirtinger()?;
                cpolys(&w, &raw.coeffs).and_then(|c| ComplexForm::new(&sc, c)).and_then(|c| StratumForm::complex(chart, c))
            }
        }
        .map_err(wrap)?;
        LoadedForm::Stratum(sf)
    } else {
        let real_chart = ctx.kind() == ChartKind::Real;
        match tag {
            FormTag::Radial if real_chart => {
                let coeffs = (0..ctx.nvars()).map(|i| Polynomial::var_at(ctx, i).scale(&formindex::poly::int(2))).collect();
                LoadedForm::Real(RealForm::new(ctx, coeffs)?)
            }
            FormTag::Radial => LoadedForm::Complex(ComplexForm::radial(ctx)?),
            FormTag::Real => {
                let real = if real_chart { ctx.clone() } else { ctx.realification()? };
                LoadedForm::Real(polys(&real, &raw.coeffs).and_then(|c| RealForm::new(&real, c)).map_err(wrap)?)
            }
            FormTag::Complex if real_chart => return Err(syntax(ln, "complex forms need a complex chart")),
            FormTag::Complex => {
                let w = ctx.wirtinger()?;
                LoadedForm::Complex(cpolys(&w, &raw.coeffs).and_then(|c| ComplexForm::new(ctx, c)).map_err(wrap)?)
            }
        }
    };
    Ok(NamedForm { name, tag, form })
}

/// Parses and fully validates a germ file.
pub fn parse_germ(text: &str) -> Result<GermFile> {
    let raw = scan(text)?;
    let name = raw.name.clone().ok_or_else(|| syntax(1, "[meta] needs a name"))?;
    let names = raw.names.clone().ok_or_else(|| syntax(1, "[vars] needs names"))?;
    let ctx = match raw.kind.as_deref() {
        Some("complex") | None => VariableContext::complex(&names)?,
        Some("real") => VariableContext::real(&names)?,
        Some(k) => return Err(syntax(1, format!("unknown chart kind '{k}'"))),
    };
    let stratum = match (&raw.stratum, &raw.transverse) {
        (None, None) => None,
        (Some((ln, s)), t) => {
            let t = t.as_ref().map(|(_, t)| t.clone()).unwrap_or_else(|| names[s.len()..].to_vec());
            let joined: Vec<String> = s.iter().chain(t.iter()).cloned().collect();
            if joined != names {
                return Err(IndexError::InvalidInput(format!(
                    "line {ln}: stratum followed by transverse variables must list the chart variables in order"
                )));
            }
            if ctx.kind() != ChartKind::Complex {
                return Err(IndexError::InvalidInput(format!("line {ln}: a stratum split needs a complex chart")));
            }
            Some(s.len())
        }
        (None, Some((ln, t))) => {
            let s = names.len().checked_sub(t.len()).filter(|&s| names[s..] == t[..]).ok_or_else(|| {
                IndexError::InvalidInput(format!("line {ln}: transverse variables must end the chart"))
            })?;
            Some(s)
        }
    };
    let germ = if ctx.kind() == ChartKind::Complex {
        let f = polys(&ctx, &raw.f)?;
        Some(GermSpec::new(&name, &ctx, f)?)
    } else {
        if let Some((ln, _)) = raw.f.first() {
            return Err(IndexError::InvalidInput(format!("line {ln}: defining equations need a complex chart")));
        }
        None
    };
    if let Some(g) = &germ {
        if let Some((ln, k)) = raw.k {
            if k != g.k() {
                return Err(IndexError::InvalidInput(format!("line {ln}: k = {k} but [f] has {} equations", g.k())));
            }
        }
        if let Some((ln, n)) = raw.n {
            if n != g.n() {
                return Err(IndexError::InvalidInput(format!("line {ln}: n = {n} but the germ has dimension {}", g.n())));
            }
        }
    }
    let chart = stratum.map(|s| ProductChart::from_ctx(&ctx, s)).transpose()?;
    let mut forms: Vec<NamedForm> = Vec::new();
    for rf in &raw.forms {
        let f = build_form(rf, &ctx, chart.as_ref())?;
        if forms.iter().any(|g| g.name == f.name) {
            return Err(syntax(rf.line, format!("duplicate form name '{}'", f.name)));
        }
        forms.push(f);
    }
    Ok(GermFile { name, ctx, stratum, germ, forms })
}

pub fn load_germ(path: &Path) -> Result<GermFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| IndexError::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_germ(&text)
}

/// Canonical text; `parse_germ(save_germ(g)) == g`.
pub fn save_germ(g: &GermFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "[meta]\nname = {}", g.name);
    if let Some(germ) = &g.germ {
        let _ = writeln!(out, "n = {}\nk = {}", germ.n(), germ.k());
    }
    let kind = if g.ctx.kind() == ChartKind::Real { "real" } else { "complex" };
    let _ = writeln!(out, "\n[vars]\nkind = {kind}\nnames = {}", g.ctx.names().join(", "));
    if let Some(s) = g.stratum {
        let names = g.ctx.names();
        let _ = writeln!(out, "stratum = {}\ntransverse = {}", names[..s].join(", "), names[s..].join(", "));
    }
    if let Some(germ) = &g.germ {
        out.push_str("\n[f]\n");
        for f in germ.defining() {
            let _ = writeln!(out, "{f}");
        }
    }
    for f in &g.forms {
        let _ = writeln!(out, "\n[form]\nname = {}\ntag = {}", f.name, f.tag.as_str());
        let lines: Vec<String> = match &f.form {
            LoadedForm::Stratum(sf) => {
                out.push_str("on = stratum\n");
                match sf.form() {
                    Form::Real(r) => r.coeffs().iter().map(|c| c.to_string()).collect(),
                    Form::Complex(c) => c.coeffs().iter().map(|c| c.to_string()).collect(),
                }
            }
            LoadedForm::Real(r) => r.coeffs().iter().map(|c| c.to_string()).collect(),
            LoadedForm::Complex(c) => c.coeffs().iter().map(|c| c.to_string()).collect(),
        };
        if f.tag != FormTag::Radial {
            for l in lines {
                let _ = writeln!(out, "{l}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADRIC: &str = "\
# the A1 surface
[meta]
name = quadric
n = 2
k = 1

[vars]
kind = complex
names = x, y, z

[f]
x^2 + y^2 + z^2

[form]
name = dx
tag = complex
1
0
0
";

    #[test]
    fn quadric() {
        let g = parse_germ(QUADRIC).unwrap();
        let germ = g.germ.as_ref().unwrap();
        assert_eq!((germ.n(), germ.k()), (2, 1));
        assert_eq!(g.forms.len(), 1);
        assert_eq!(parse_germ(&save_germ(&g)).unwrap(), g);
    }

    #[test]
    fn consistency_errors() {
        let short = QUADRIC.replace("1\n0\n0\n", "1\n0\n");
        let e = parse_germ(&short).unwrap_err();
        assert!(e.to_string().contains("coefficients"), "{e}");
        let empty = QUADRIC.replace("x^2 + y^2 + z^2\n", "");
        let e = parse_germ(&empty).unwrap_err();
        assert!(e.to_string().contains("at least one defining equation"), "{e}");
        let bad_n = QUADRIC.replace("n = 2", "n = 1");
        assert!(parse_germ(&bad_n).unwrap_err().to_string().contains("line 4"));
    }

    #[test]
    fn syntax_errors_carry_locations() {
        let bad = QUADRIC.replace("x^2 + y^2 + z^2", "x^2 + + y");
        match parse_germ(&bad).unwrap_err() {
            IndexError::Syntax { line, .. } => assert_eq!(line, 12),
            e => panic!("{e}"),
        }
        assert!(matches!(parse_germ("[oops]\n").unwrap_err(), IndexError::Syntax { line: 1, .. }));
        let unknown = QUADRIC.replace("x^2 + y^2 + z^2", "x^2 + q");
        assert!(parse_germ(&unknown).unwrap_err().to_string().contains("line 12"));
    }

    #[test]
    fn stratum_forms() {
        let text = "\
[meta]
name = smooth
[vars]
names = z, w
stratum = z
transverse = w
[f]
w
[form]
name = sq
tag = real
on = stratum
z_re^2 - z_im^2
-2*z_re*z_im
[form]
name = r
tag = radial
[form]
name = c
tag = complex
on = stratum
z^2
";
        let g = parse_germ(text).unwrap();
        assert_eq!(g.stratum, Some(1));
        assert!(matches!(g.form("sq").unwrap().form, LoadedForm::Stratum(_)));
        assert!(matches!(&g.form("r").unwrap().form, LoadedForm::Complex(c) if c.is_radial()));
        assert_eq!(parse_germ(&save_germ(&g)).unwrap(), g);
        let bad = text.replace("transverse = w", "transverse = z");
        assert!(parse_germ(&bad).is_err());
    }

    #[test]
    fn real_chart() {
        let text = "[meta]\nname = r\n[vars]\nkind = real\nnames = x, y\n[form]\nname = e\ntag = real\nx^2 - y^2\n-2*x*y\n";
        let g = parse_germ(text).unwrap();
        assert!(g.germ.is_none());
        assert_eq!(parse_germ(&save_germ(&g)).unwrap(), g);
        assert!(parse_germ(&text.replace("[form]", "[f]\nx\n[form]")).is_err());
    }
}
