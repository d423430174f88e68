use std::sync::Arc;

use serde::Serialize;

use crate::error::{IndexError, Result};

/// Whether the variables of a chart are real coordinates, holomorphic
/// coordinates `z`, or the Wirtinger alphabet `(z, z_bar)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChartKind {
    Real,
    Complex,
    Wirtinger,
}

/// Complex coordinates `z_j` together with their real pairs `(x_j, y_j)`
/// and conjugates `z_bar_j`.
#[derive(Debug, PartialEq, Eq, Hash)]
struct Pairing {
    complex: Vec<String>,
    /// Interleaved `x_1, y_1, x_2, y_2, ...`.
    real: Vec<String>,
    conj: Vec<String>,
}

/// An ordered list of distinct variable names plus the chart they live in.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
    kind: ChartKind,
    pairing: Option<Arc<Pairing>>,
}

pub type Ctx = Arc<VariableContext>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

fn check_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if !is_identifier(n) {
            return Err(IndexError::InvalidInput(format!("'{n}' is not a valid variable name")));
        }
        if names[..i].contains(n) {
            return Err(IndexError::InvalidInput(format!("variable '{n}' declared twice")));
        }
    }
    Ok(())
}

impl VariableContext {
    /// A real chart with no complex structure.
    pub fn real<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names)?;
        Ok(Arc::new(VariableContext { names, kind: ChartKind::Real, pairing: None }))
    }

    /// A complex chart; the real pair of `z` is named `z_re, z_im` and its
    /// conjugate `z_bar`.
    pub fn complex<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        let complex: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let real: Vec<String> = complex
            .iter()
            .flat_map(|z| [format!("{z}_re"), format!("{z}_im")])
            .collect();
        Self::complex_with_real_names(&complex, &real)
    }

    /// A complex chart with explicit real coordinate names, given interleaved
    /// as `x_1, y_1, x_2, y_2, ...` with `z_j = x_j + i y_j`.
    pub fn complex_with_real_names<S: AsRef<str>, T: AsRef<str>>(
        names: &[S],
        real_names: &[T],
    ) -> Result<Ctx> {
        let complex: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let real: Vec<String> = real_names.iter().map(|s| s.as_ref().to_string()).collect();
        if real.len() != 2 * complex.len() {
            return Err(IndexError::InvalidInput(format!(
                "{} complex variables need {} real names, got {}",
                complex.len(),
                2 * complex.len(),
                real.len()
            )));
        }
        if complex.iter().any(|z| z == "I") {
            return Err(IndexError::InvalidInput(
                "'I' is reserved for the imaginary unit in complex charts".into(),
            ));
        }
        let conj: Vec<String> = complex.iter().map(|z| format!("{z}_bar")).collect();
        check_names(&complex)?;
        check_names(&real)?;
        let mut wirt = complex.clone();
        wirt.extend(conj.iter().cloned());
        check_names(&wirt)?;
        let pairing = Arc::new(Pairing { complex: complex.clone(), real, conj });
        Ok(Arc::new(VariableContext { names: complex, kind: ChartKind::Complex, pairing: Some(pairing) }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn kind(&self) -> ChartKind {
        self.kind
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// True if this chart carries a complex structure.
    pub fn is_paired(&self) -> bool {
        self.pairing.is_some()
    }

    /// Number of complex coordinates of the underlying complex chart.
    pub fn complex_dim(&self) -> Option<usize> {
        self.pairing.as_ref().map(|p| p.complex.len())
    }

    fn with_kind(&self, kind: ChartKind) -> Result<Ctx> {
        let p = self
            .pairing
            .as_ref()
            .ok_or_else(|| IndexError::InvalidInput("chart has no complex structure".into()))?;
        let names = match kind {
            ChartKind::Real => p.real.clone(),
            ChartKind::Complex => p.complex.clone(),
            ChartKind::Wirtinger => p.complex.iter().chain(p.conj.iter()).cloned().collect(),
        };
        Ok(Arc::new(VariableContext { names, kind, pairing: Some(p.clone()) }))
    }

    /// The underlying real chart with `2m` variables.
    pub fn realification(&self) -> Result<Ctx> {
        self.with_kind(ChartKind::Real)
    }

    /// The holomorphic chart with `m` variables.
    pub fn complexification(&self) -> Result<Ctx> {
        self.with_kind(ChartKind::Complex)
    }

    /// The chart `(z_1..z_m, z_1_bar..z_m_bar)`.
    pub fn wirtinger(&self) -> Result<Ctx> {
        self.with_kind(ChartKind::Wirtinger)
    }
}
