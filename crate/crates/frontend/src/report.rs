//! Report documents. Field order in these structs is the JSON key order,
//! so output is byte-for-byte reproducible.
//!
//! Ratios are strings `"num/den"`; indices and counts are JSON integers.

use dml_core::closure::{CaseKind, CaseSplit, ClosureChain, PeriodicityCertificate};
use dml_core::density::{Decomposition, Density, DensityProfile, Progression};
use dml_core::field::Field;
use dml_core::{ReducedGroebnerBasis, ReturnSet};
use serde::Serialize;

use crate::experiment::ExperimentSpec;

pub fn ratio(r: &Density) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ideal<F: Field>(gb: &ReducedGroebnerBasis<F>, names: &[String]) -> Vec<String> {
    gb.render(names)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReturnSetReport {
    pub horizon: usize,
    pub size: usize,
    pub indices: Vec<usize>,
}

impl From<&ReturnSet> for ReturnSetReport {
    fn from(s: &ReturnSet) -> Self {
        Self {
            horizon: s.horizon(),
            size: s.len(),
            indices: s.indices().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub window: usize,
    pub max_ratio: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub horizon: usize,
    pub entries: Vec<ProfileEntry>,
}

impl From<&DensityProfile> for ProfileReport {
    fn from(p: &DensityProfile) -> Self {
        Self {
            horizon: p.horizon,
            entries: p
                .entries
                .iter()
                .map(|(l, r)| ProfileEntry {
                    window: *l,
                    max_ratio: ratio(r),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionRef {
    pub a: usize,
    pub b: usize,
}

impl From<&Progression> for ProgressionRef {
    fn from(p: &Progression) -> Self {
        Self { a: p.a, b: p.b }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkReport {
    pub offset: usize,
    pub ideal: Vec<String>,
    pub dimension: i64,
    pub sample_size: usize,
    pub stabilized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub a: usize,
    pub b: usize,
    pub kind: &'static str,
    pub degree_cap: u64,
    pub links: Vec<LinkReport>,
    pub diagnostics: Vec<String>,
}

impl ChainReport {
    pub fn new<F: Field>(chain: &ClosureChain<F>, names: &[String]) -> Self {
        Self {
            a: chain.a,
            b: chain.b,
            kind: "degree-capped closure",
            degree_cap: chain.degree_cap,
            links: chain
                .links
                .iter()
                .map(|l| LinkReport {
                    offset: l.offset,
                    ideal: ideal(&l.closure.ideal, names),
                    dimension: l.dimension,
                    sample_size: l.closure.sample_size,
                    stabilized: l.closure.stabilized,
                })
                .collect(),
            diagnostics: chain.diagnostics.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub generator: String,
    pub normal_form: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub ideal: Vec<String>,
    pub modulus: usize,
    pub invariant: bool,
    pub witnesses: Vec<WitnessReport>,
}

impl CertificateReport {
    pub fn new<F: Field>(cert: &PeriodicityCertificate<F>, names: &[String]) -> Self {
        Self {
            ideal: ideal(&cert.ideal, names),
            modulus: cert.modulus,
            invariant: cert.invariant,
            witnesses: cert
                .witnesses
                .iter()
                .map(|w| WitnessReport {
                    generator: w.generator.render(names),
                    normal_form: w.normal_form.render(names),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffsetReport {
    pub offset: usize,
    pub case: &'static str,
    pub intersection: Vec<String>,
    pub intersection_dimension: i64,
    pub progressions: Vec<ProgressionRef>,
    pub nested: Vec<CaseSplitReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseSplitReport {
    pub a: usize,
    pub b: usize,
    pub target_dimension: i64,
    pub offsets: Vec<OffsetReport>,
    pub flags: Vec<String>,
}

fn case_name(kind: &CaseKind) -> &'static str {
    match kind {
        CaseKind::DimensionDrop => "dimension_drop",
        CaseKind::FullClass => "full_class",
        CaseKind::IrreducibilityUnverified => "irreducibility_unverified",
        CaseKind::DepthExhausted => "depth_exhausted",
    }
}

impl CaseSplitReport {
    pub fn new<F: Field>(split: &CaseSplit<F>, names: &[String]) -> Self {
        Self {
            a: split.a,
            b: split.b,
            target_dimension: split.target_dimension,
            offsets: split
                .offsets
                .iter()
                .map(|o| OffsetReport {
                    offset: o.offset,
                    case: case_name(&o.kind),
                    intersection: ideal(&o.intersection, names),
                    intersection_dimension: o.intersection_dimension,
                    progressions: o.progressions.iter().map(ProgressionRef::from).collect(),
                    nested: o.nested.iter().map(|n| CaseSplitReport::new(n, names)).collect(),
                })
                .collect(),
            flags: split.flags.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub a: usize,
    pub b: usize,
    pub members_below_horizon: usize,
    pub status: String,
    pub closure_chain: ChainReport,
    pub certificate: CertificateReport,
    /// Whether `W_b` lies inside `V`; with an invariant certificate this
    /// proves the whole progression is in the return set.
    pub closure_inside_v: bool,
    pub case_split: CaseSplitReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    #[serde(rename = "A")]
    pub progressions: Vec<ProgressionRef>,
    #[serde(rename = "B")]
    pub residual: Vec<usize>,
    pub residual_profile: ProfileReport,
}

impl From<&Decomposition> for DecompositionReport {
    fn from(d: &Decomposition) -> Self {
        Self {
            progressions: d.progressions.iter().map(ProgressionRef::from).collect(),
            residual: d.residual.indices().to_vec(),
            residual_profile: ProfileReport::from(&d.residual_profile),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub experiment: ExperimentSpec,
    pub return_set: ReturnSetReport,
    pub density_profile: ProfileReport,
    pub progressions: Vec<ProgressionReport>,
    pub decomposition: DecompositionReport,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub horizon: usize,
    pub return_set_size: usize,
    pub density_profile: ProfileReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifyReport {
    pub a: usize,
    pub b: usize,
    pub closure_chain: ChainReport,
    pub certificate: CertificateReport,
    pub closure_inside_v: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn write_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
}

#[derive(Serialize)]
struct MembershipRow {
    n: usize,
    in_v: u8,
}

#[derive(Serialize)]
struct ProfileRow<'a> {
    window: usize,
    max_ratio: &'a str,
}

/// One `(n, in_v)` row per index below the horizon.
pub fn membership_csv(s: &ReturnSetReport) -> String {
    let mut inside = vec![false; s.horizon];
    for &n in &s.indices {
        inside[n] = true;
    }
    write_csv(inside.iter().enumerate().map(|(n, &b)| MembershipRow { n, in_v: u8::from(b) }))
}

pub fn profile_csv(p: &ProfileReport) -> String {
    write_csv(p.entries.iter().map(|e| ProfileRow {
        window: e.window,
        max_ratio: &e.max_ratio,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_always_show_a_denominator() {
        assert_eq!(ratio(&Density::new(6, 64)), "3/32");
        assert_eq!(ratio(&Density::new(1, 1)), "1/1");
        assert_eq!(ratio(&Density::new(0, 5)), "0/1");
    }

    #[test]
    fn csv_tables() {
        let s = ReturnSetReport {
            horizon: 3,
            size: 1,
            indices: vec![1],
        };
        assert_eq!(membership_csv(&s), "n,in_v\n0,0\n1,1\n2,0\n");
        let p = ProfileReport {
            horizon: 3,
            entries: vec![ProfileEntry {
                window: 3,
                max_ratio: "1/3".into(),
            }],
        };
        assert_eq!(profile_csv(&p), "window,max_ratio\n3,1/3\n");
    }
}
