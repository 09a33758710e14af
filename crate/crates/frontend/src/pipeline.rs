use dml_core::closure::{certify_invariant, closure_chain, refine_case_split, CaseSplitParams, ClosureParams};
use dml_core::density::{decompose_return_set, default_schedule, density_profile, detect_progressions, Progression};
use dml_core::field::{Field, FieldDescriptor};
use dml_core::orbit::return_set;
use dml_core::ReducedGroebnerBasis;

use crate::error::{stage, FrontendError};
use crate::experiment::{ExperimentSpec, Problem};
use crate::report::{
    CaseSplitReport, CertificateReport, CertifyReport, ChainReport, DecompositionReport, DensityReport,
    ProfileReport, ProgressionReport, Report, ReturnSetReport,
};

fn closure_params(spec: &ExperimentSpec) -> ClosureParams {
    ClosureParams {
        initial_samples: spec.analysis.initial_samples,
        max_samples: spec.analysis.max_samples,
        degree_cap: spec.analysis.degree_cap,
    }
}

/// `W ⊆ V`, i.e. every generator of `V` vanishes on `W`.
fn inside<F: Field>(w: &ReducedGroebnerBasis<F>, v: &ReducedGroebnerBasis<F>) -> Result<bool, FrontendError> {
    for g in v.generators() {
        if !w.contains(g).map_err(stage("certify_invariant"))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closure chain for `aN+b` and the invariance certificate of `W_b`.
fn certify_typed<F: Field>(
    spec: &ExperimentSpec,
    problem: &Problem<F>,
    prog: Progression,
) -> Result<(dml_core::closure::ClosureChain<F>, CertifyReport), FrontendError> {
    let chain = closure_chain(&problem.phi, &problem.alpha, prog.a, prog.b, &closure_params(spec))
        .map_err(stage("closure_chain"))?;
    let w_b = &chain.link(prog.b).expect("chain covers its base offset").closure.ideal;
    let cert = certify_invariant(w_b, &problem.phi, prog.a).map_err(stage("certify_invariant"))?;
    let report = CertifyReport {
        a: prog.a,
        b: prog.b,
        closure_chain: ChainReport::new(&chain, &spec.vars),
        certificate: CertificateReport::new(&cert, &spec.vars),
        closure_inside_v: inside(w_b, &problem.v)?,
    };
    Ok((chain, report))
}

fn run_typed<F: Field>(spec: &ExperimentSpec, d: FieldDescriptor) -> Result<Report, FrontendError> {
    let problem = spec.instantiate::<F>(d)?;
    let a = &spec.analysis;
    let n = spec.n;

    let s = return_set(&problem.phi, &problem.alpha, &problem.v, n).map_err(stage("return_set"))?;
    let profile = density_profile(&s, &default_schedule(n)).map_err(stage("density_profile"))?;
    let progs = detect_progressions(&s, a.a_max, a.m_min, a.tail_start).map_err(stage("detect_progressions"))?;

    let split_params = CaseSplitParams {
        horizon: n,
        a_max: a.a_max,
        m_min: a.m_min,
        closure: closure_params(spec),
    };
    let mut diagnostics = Vec::new();
    let mut reports = Vec::with_capacity(progs.len());
    for &prog in &progs {
        let (chain, cert) = certify_typed(spec, &problem, prog)?;
        let split = refine_case_split(&problem.v, &chain, &problem.phi, &problem.alpha, a.depth_limit, &split_params)
            .map_err(stage("refine_case_split"))?;
        diagnostics.extend(split.flags.iter().map(|f| format!("{prog}: {f}")));
        reports.push(ProgressionReport {
            a: prog.a,
            b: prog.b,
            members_below_horizon: prog.count_below(n),
            status: format!("certified at horizon {n}"),
            closure_chain: cert.closure_chain,
            certificate: cert.certificate,
            closure_inside_v: cert.closure_inside_v,
            case_split: CaseSplitReport::new(&split, &spec.vars),
        });
    }

    let decomposition = decompose_return_set(&s, &progs).map_err(stage("decompose_return_set"))?;
    Ok(Report {
        experiment: spec.clone(),
        return_set: ReturnSetReport::from(&s),
        density_profile: ProfileReport::from(&profile),
        progressions: reports,
        decomposition: DecompositionReport::from(&decomposition),
        diagnostics,
    })
}

/// The full analysis: return set, density profile, progressions with their
/// closure certificates and case splits, and the final decomposition.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Report, FrontendError> {
    let d = spec.descriptor()?;
    crate::dispatch!(d, F => run_typed::<F>(spec, d))
}

fn density_typed<F: Field>(spec: &ExperimentSpec, d: FieldDescriptor) -> Result<DensityReport, FrontendError> {
    let problem = spec.instantiate::<F>(d)?;
    let s = return_set(&problem.phi, &problem.alpha, &problem.v, spec.n).map_err(stage("return_set"))?;
    let profile = density_profile(&s, &default_schedule(spec.n)).map_err(stage("density_profile"))?;
    Ok(DensityReport {
        horizon: spec.n,
        return_set_size: s.len(),
        density_profile: ProfileReport::from(&profile),
    })
}

/// Return-set density profile only.
pub fn density_report(spec: &ExperimentSpec) -> Result<DensityReport, FrontendError> {
    let d = spec.descriptor()?;
    crate::dispatch!(d, F => density_typed::<F>(spec, d))
}

/// Closure chain and invariance certificate for the single progression
/// `aN+b`, whether or not it was detected.
pub fn certify_progression(spec: &ExperimentSpec, a: usize, b: usize) -> Result<CertifyReport, FrontendError> {
    let prog = Progression::new(a, b).map_err(|e| FrontendError::Schema {
        field: "a".into(),
        message: e.to_string(),
    })?;
    let d = spec.descriptor()?;
    crate::dispatch!(d, F => {
        let problem = spec.instantiate::<F>(d)?;
        certify_typed(spec, &problem, prog).map(|(_, report)| report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> ExperimentSpec {
        ExperimentSpec::from_json(text).unwrap()
    }

    const SWAP: &str = r#"{"field":"QQ","vars":["x","y"],"phi":["y","x"],"alpha":["1","2"],"V":["x-1"],"N":100}"#;

    #[test]
    fn swap_is_the_even_numbers() {
        let r = run_experiment(&spec(SWAP)).unwrap();
        assert_eq!(r.return_set.indices, (0..100).step_by(2).collect::<Vec<_>>());
        assert_eq!(r.decomposition.progressions.len(), 1);
        assert_eq!((r.decomposition.progressions[0].a, r.decomposition.progressions[0].b), (2, 0));
        assert!(r.decomposition.residual.is_empty());
        let p = &r.progressions[0];
        assert!(p.certificate.invariant);
        assert!(p.closure_inside_v);
        assert_eq!(p.certificate.ideal, vec!["x - 1", "y - 2"]);
        assert_eq!(p.status, "certified at horizon 100");
    }

    #[test]
    fn unit_ideal_never_returns() {
        let r = run_experiment(&spec(&SWAP.replace(r#""V":["x-1"]"#, r#""V":["1"]"#))).unwrap();
        assert!(r.return_set.indices.is_empty());
        assert!(r.progressions.is_empty());
        assert!(r.decomposition.progressions.is_empty());
        assert!(r.decomposition.residual.is_empty());
    }

    #[test]
    fn density_only() {
        let r = density_report(&spec(SWAP)).unwrap();
        assert_eq!(r.return_set_size, 50);
        assert_eq!(r.density_profile.entries.last().unwrap().max_ratio, "1/2");
    }

    #[test]
    fn single_certificate() {
        let r = certify_progression(&spec(SWAP), 2, 1).unwrap();
        assert!(r.certificate.invariant);
        assert!(!r.closure_inside_v);
        assert!(certify_progression(&spec(SWAP), 0, 1).is_err());
    }
}
