//! Experiment files: one JSON document naming the field, the map, the
//! starting point, the subvariety and the horizon.

use std::path::Path;

use dml_core::field::{Field, FieldDescriptor};
use dml_core::ideal::buchberger;
use dml_core::orbit::{Morphism, RationalPoint};
use dml_core::{MonomialOrder, MultiPoly, ReducedGroebnerBasis};
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::FrontendError;
use crate::parser::parse_polynomial_expr;

/// Analysis knobs as written in the file; omitted ones take defaults.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAnalysis {
    a_max: Option<usize>,
    m_min: Option<usize>,
    tail_start: Option<usize>,
    degree_cap: Option<u64>,
    initial_samples: Option<usize>,
    max_samples: Option<usize>,
    depth_limit: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    field: String,
    vars: Vec<String>,
    phi: Vec<String>,
    alpha: Vec<String>,
    #[serde(rename = "V")]
    v: Vec<String>,
    #[serde(rename = "N")]
    n: usize,
    #[serde(default)]
    analysis: RawAnalysis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub a_max: usize,
    pub m_min: usize,
    pub tail_start: usize,
    pub degree_cap: u64,
    pub initial_samples: usize,
    pub max_samples: usize,
    pub depth_limit: usize,
}

impl Analysis {
    /// Defaults for horizon `n`: `a_max = ⌈√n⌉`, `m_min = 5`,
    /// `tail_start = 0`, `degree_cap = 4`, samples 4 to 64, depth 3.
    pub fn defaults(n: usize) -> Self {
        let r = n.sqrt();
        Self {
            a_max: if r * r < n { r + 1 } else { r }.max(1),
            m_min: 5,
            tail_start: 0,
            degree_cap: 4,
            initial_samples: 4,
            max_samples: 64,
            depth_limit: 3,
        }
    }
}

/// A validated experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentSpec {
    pub field: String,
    pub vars: Vec<String>,
    pub phi: Vec<String>,
    pub alpha: Vec<String>,
    #[serde(rename = "V")]
    pub v: Vec<String>,
    #[serde(rename = "N")]
    pub n: usize,
    pub analysis: Analysis,
}

fn schema(field: &str, message: impl Into<String>) -> FrontendError {
    FrontendError::Schema {
        field: field.to_string(),
        message: message.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ExperimentSpec {
    pub fn from_json(text: &str) -> Result<Self, FrontendError> {
        let raw: RawSpec = serde_json::from_str(text).map_err(|e| FrontendError::Json(e.to_string()))?;
        let defaults = Analysis::defaults(raw.n);
        let a = raw.analysis;
        let spec = Self {
            field: raw.field,
            vars: raw.vars,
            phi: raw.phi,
            alpha: raw.alpha,
            v: raw.v,
            n: raw.n,
            analysis: Analysis {
                a_max: a.a_max.unwrap_or(defaults.a_max),
                m_min: a.m_min.unwrap_or(defaults.m_min),
                tail_start: a.tail_start.unwrap_or(defaults.tail_start),
                degree_cap: a.degree_cap.unwrap_or(defaults.degree_cap),
                initial_samples: a.initial_samples.unwrap_or(defaults.initial_samples),
                max_samples: a.max_samples.unwrap_or(defaults.max_samples),
                depth_limit: a.depth_limit.unwrap_or(defaults.depth_limit),
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn descriptor(&self) -> Result<FieldDescriptor, FrontendError> {
        FieldDescriptor::parse(&self.field).map_err(|e| schema("field", e.to_string()))
    }

    fn validate(&self) -> Result<(), FrontendError> {
        let d = self.descriptor()?;
        if self.vars.is_empty() {
            return Err(schema("vars", "at least one variable is required"));
        }
        for (i, v) in self.vars.iter().enumerate() {
            if v == "t" {
                return Err(schema("vars", "`t` is a reserved identifier"));
            }
            if !is_identifier(v) {
                return Err(schema("vars", format!("`{v}` is not an identifier")));
            }
            if self.vars[..i].contains(v) {
                return Err(schema("vars", format!("`{v}` is declared twice")));
            }
        }
        let n = self.vars.len();
        if self.phi.len() != n {
            return Err(schema("phi", format!("{} components for {n} variables", self.phi.len())));
        }
        if self.alpha.len() != n {
            return Err(schema("alpha", format!("{} coordinates for {n} variables", self.alpha.len())));
        }
        if self.n < 1 {
            return Err(schema("N", "horizon must be at least 1"));
        }
        let a = &self.analysis;
        if a.a_max < 1 {
            return Err(schema("analysis.a_max", "must be at least 1"));
        }
        if a.m_min < 2 {
            return Err(schema("analysis.m_min", "must be at least 2"));
        }
        if a.tail_start >= self.n {
            return Err(schema("analysis.tail_start", "must be below N"));
        }
        if a.initial_samples < 2 {
            return Err(schema("analysis.initial_samples", "must be at least 2"));
        }
        if a.max_samples < a.initial_samples {
            return Err(schema("analysis.max_samples", "must be at least initial_samples"));
        }
        // parse everything once so errors surface at load time
        crate::dispatch!(d, F => self.instantiate::<F>(d).map(|_| ()))
    }

    /// Typed problem data over the coefficient field `F`.
    pub fn instantiate<F: Field>(&self, d: FieldDescriptor) -> Result<Problem<F>, FrontendError> {
        let parse = |key: &str, i: usize, src: &str| {
            parse_polynomial_expr::<F>(src, &self.vars, d).map_err(|e| FrontendError::Parse {
                location: format!("{key}[{i}]"),
                source: e,
            })
        };
        let n = self.vars.len();
        let order = MonomialOrder::grevlex(n);
        let components = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, s)| parse("phi", i, s))
            .collect::<Result<Vec<_>, _>>()?;
        let phi = Morphism::new(d, components).map_err(|e| schema("phi", e.to_string()))?;

        let mut coords = Vec::with_capacity(n);
        for (i, s) in self.alpha.iter().enumerate() {
            let p = parse("alpha", i, s)?;
            if !p.is_constant() {
                return Err(schema("alpha", format!("coordinate {i} `{s}` is not a constant")));
            }
            coords.push(p.leading_coeff().cloned().unwrap_or_else(|| F::zero_in(&d)));
        }
        let alpha = RationalPoint::new(d, coords).map_err(|e| schema("alpha", e.to_string()))?;

        let gens = self
            .v
            .iter()
            .enumerate()
            .map(|(i, s)| parse("V", i, s))
            .collect::<Result<Vec<MultiPoly<F>>, _>>()?;
        let v = buchberger(d, &gens, &order).map_err(|e| schema("V", e.to_string()))?;
        Ok(Problem { phi, alpha, v })
    }
}

/// The map, starting point and subvariety of an experiment.
#[derive(Clone, Debug)]
pub struct Problem<F: Field> {
    pub phi: Morphism<F>,
    pub alpha: RationalPoint<F>,
    pub v: ReducedGroebnerBasis<F>,
}

pub fn load_experiment(path: impl AsRef<Path>) -> Result<ExperimentSpec, FrontendError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| FrontendError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    ExperimentSpec::from_json(&text)
}
