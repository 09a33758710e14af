//! Zariski closures of sampled sub-orbits and what they certify.
//!
//! For a progression `aN+b` in a return set, the sub-orbits
//! `{φ^{aℓ+j}(α)}` for the offsets `j` in `[b, b+a)` have closures `W_j`.
//! Their ideals are approximated from finite samples; a closure is trusted
//! once doubling the sample leaves the reduced basis unchanged. Only
//! generators up to a total degree cap are kept, so every ideal produced
//! here is a degree-capped closure, not an exact one.
//!
//! [`certify_invariant`] turns a closure into a proof that the whole
//! progression lies in the subvariety, and [`refine_case_split`] compares
//! dimensions to decide, offset by offset, which sub-orbits stay inside.

use crate::density::{detect_progressions, Progression};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{buchberger, ideal_equal, vanishing_ideal, PointSet, ReducedGroebnerBasis};
use crate::orbit::{morphism_iterate, return_set, Morphism, RationalPoint};
use crate::poly::{MonomialOrder, MultiPoly};

/// Sampling budget for closure computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureParams {
    pub initial_samples: usize,
    pub max_samples: usize,
    pub degree_cap: u64,
}

impl Default for ClosureParams {
    fn default() -> Self {
        Self {
            initial_samples: 4,
            max_samples: 64,
            degree_cap: 4,
        }
    }
}

/// The capped closure ideal of one sub-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledClosure<F: Field> {
    pub ideal: ReducedGroebnerBasis<F>,
    /// Samples behind the last ideal.
    pub sample_size: usize,
    /// Whether the last doubling left the ideal unchanged.
    pub stabilized: bool,
}

fn capped_ideal<F: Field>(
    samples: &[Vec<F>],
    phi: &Morphism<F>,
    order: &MonomialOrder,
    degree_cap: u64,
) -> Result<ReducedGroebnerBasis<F>> {
    let pts = PointSet::new(phi.descriptor(), phi.num_vars(), samples.to_vec())?;
    let full = vanishing_ideal(&pts, order)?;
    let kept: Vec<MultiPoly<F>> = full
        .generators()
        .iter()
        .filter(|g| g.total_degree().is_some_and(|d| d <= degree_cap))
        .cloned()
        .collect();
    buchberger(phi.descriptor(), &kept, order)
}

/// Capped vanishing ideal of `{φ^{aℓ+j}(α) : ℓ < m}`, doubling `m` from
/// `initial_samples` until two consecutive ideals agree or `max_samples` is
/// reached. Ideals use graded reverse lexicographic order.
pub fn orbit_closure_ideal<F: Field>(
    phi: &Morphism<F>,
    alpha: &RationalPoint<F>,
    a: usize,
    j: usize,
    params: &ClosureParams,
) -> Result<SampledClosure<F>> {
    if a < 1 {
        return Err(Error::InvalidParameter("closure stride must be at least 1".into()));
    }
    if params.initial_samples < 2 || params.max_samples < params.initial_samples {
        return Err(Error::InvalidParameter(format!(
            "sample budget {}..{} is not a valid doubling range",
            params.initial_samples, params.max_samples
        )));
    }
    let order = MonomialOrder::grevlex(phi.num_vars());
    let start = morphism_iterate(phi, alpha, j)?;
    let stride = phi.power(a as u64);
    let mut orbit = stride.orbit(&start)?.map(RationalPoint::into_coordinates);

    let mut samples: Vec<Vec<F>> = Vec::new();
    let mut m = params.initial_samples;
    let mut previous: Option<ReducedGroebnerBasis<F>> = None;
    loop {
        samples.extend(orbit.by_ref().take(m - samples.len()));
        let ideal = capped_ideal(&samples, phi, &order, params.degree_cap)?;
        if previous.as_ref() == Some(&ideal) {
            return Ok(SampledClosure {
                ideal,
                sample_size: m,
                stabilized: true,
            });
        }
        if m * 2 > params.max_samples {
            return Ok(SampledClosure {
                ideal,
                sample_size: m,
                stabilized: false,
            });
        }
        previous = Some(ideal);
        m *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink<F: Field> {
    pub offset: usize,
    pub closure: SampledClosure<F>,
    pub dimension: i64,
}

/// Closures `W_j` for the offsets `j` in `[b, b+a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureChain<F: Field> {
    pub a: usize,
    pub b: usize,
    pub degree_cap: u64,
    pub links: Vec<ChainLink<F>>,
    pub diagnostics: Vec<String>,
}

impl<F: Field> ClosureChain<F> {
    pub fn link(&self, offset: usize) -> Option<&ChainLink<F>> {
        self.links.iter().find(|l| l.offset == offset)
    }

    pub fn dimensions(&self) -> Vec<i64> {
        self.links.iter().map(|l| l.dimension).collect()
    }
}

pub fn closure_chain<F: Field>(
    phi: &Morphism<F>,
    alpha: &RationalPoint<F>,
    a: usize,
    b: usize,
    params: &ClosureParams,
) -> Result<ClosureChain<F>> {
    let mut links = Vec::with_capacity(a);
    let mut diagnostics = Vec::new();
    for j in b..b + a {
        let closure = orbit_closure_ideal(phi, alpha, a, j, params)?;
        if !closure.stabilized {
            diagnostics.push(format!(
                "W_{j} did not stabilize within {} samples",
                params.max_samples
            ));
        }
        let dimension = closure.ideal.dimension();
        links.push(ChainLink {
            offset: j,
            closure,
            dimension,
        });
    }
    // φ maps W_j dominantly onto W_{j+1}, so dimensions cannot go up
    for pair in links.windows(2) {
        if pair[1].dimension > pair[0].dimension {
            diagnostics.push(format!(
                "dimension rises from W_{} ({}) to W_{} ({}); sampling has not converged",
                pair[0].offset, pair[0].dimension, pair[1].offset, pair[1].dimension
            ));
        }
    }
    Ok(ClosureChain {
        a,
        b,
        degree_cap: params.degree_cap,
        links,
        diagnostics,
    })
}

/// A generator whose pullback under `φ^a` is not in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<F: Field> {
    pub generator: MultiPoly<F>,
    pub normal_form: MultiPoly<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityCertificate<F: Field> {
    pub ideal: ReducedGroebnerBasis<F>,
    pub modulus: usize,
    pub invariant: bool,
    pub witnesses: Vec<Witness<F>>,
}

/// Decides `φ^a(W) ⊆ W` by reducing each pulled-back generator modulo `W`.
///
/// `φ^a` is applied as `a` successive substitutions, never composed.
pub fn certify_invariant<F: Field>(
    w: &ReducedGroebnerBasis<F>,
    phi: &Morphism<F>,
    a: usize,
) -> Result<PeriodicityCertificate<F>> {
    if a < 1 {
        return Err(Error::InvalidParameter("period must be at least 1".into()));
    }
    if w.descriptor() != phi.descriptor() {
        return Err(Error::FieldMismatch);
    }
    let phi_a = phi.power(a as u64);
    let mut witnesses = Vec::new();
    for g in w.generators() {
        let nf = w.normal_form(&phi_a.pullback(g)?)?;
        if !nf.is_zero() {
            witnesses.push(Witness {
                generator: g.clone(),
                normal_form: nf,
            });
        }
    }
    Ok(PeriodicityCertificate {
        ideal: w.clone(),
        modulus: a,
        invariant: witnesses.is_empty(),
        witnesses,
    })
}

/// Parameters for [`refine_case_split`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseSplitParams {
    /// Horizon of the return set being explained.
    pub horizon: usize,
    pub a_max: usize,
    pub m_min: usize,
    pub closure: ClosureParams,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseKind {
    /// `dim(V ∩ W_j) < dim V`: the offset was re-examined inside `V ∩ W_j`.
    DimensionDrop,
    /// `W_j = V`: the whole class `aN+j` lies in the return set.
    FullClass,
    /// Same dimension but `W_j ≠ V`; needs `V` irreducible, which is not
    /// checked, so the offset falls back to the observed return set.
    IrreducibilityUnverified,
    /// Recursion budget spent; falls back to the observed return set.
    DepthExhausted,
}

/// Outcome for one offset `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OffsetCase<F: Field> {
    pub offset: usize,
    pub kind: CaseKind,
    /// `V ∩ W_j`, as the ideal sum.
    pub intersection: ReducedGroebnerBasis<F>,
    pub intersection_dimension: i64,
    /// Progressions in the original index space found for this offset.
    pub progressions: Vec<Progression>,
    /// Case splits run inside `V ∩ W_j`, in the index space of `φ^a`.
    pub nested: Vec<CaseSplit<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSplit<F: Field> {
    pub a: usize,
    pub b: usize,
    pub target_dimension: i64,
    pub offsets: Vec<OffsetCase<F>>,
    pub flags: Vec<String>,
}

impl<F: Field> CaseSplit<F> {
    /// All progressions found, without duplicates or covered ones.
    pub fn progressions(&self) -> Vec<Progression> {
        let mut all: Vec<Progression> = self.offsets.iter().flat_map(|o| o.progressions.iter().copied()).collect();
        all.sort();
        all.dedup();
        let snapshot = all.clone();
        all.retain(|p| !snapshot.iter().any(|q| q != p && q.covers(p)));
        all
    }
}

fn lift(p: Progression, a: usize, j: usize) -> Progression {
    Progression { a: a * p.a, b: a * p.b + j }
}

fn sub_horizon(n: usize, a: usize, j: usize) -> usize {
    if j >= n {
        0
    } else {
        (n - j).div_ceil(a)
    }
}

/// Progressions of `{ℓ : aℓ + j ∈ S}` where `S` is the return set of
/// `(phi, alpha)` into `target`, lifted back to the original indices.
fn empirical<F: Field>(
    target: &ReducedGroebnerBasis<F>,
    phi: &Morphism<F>,
    alpha: &RationalPoint<F>,
    a: usize,
    j: usize,
    params: &CaseSplitParams,
) -> Result<Vec<Progression>> {
    let n = sub_horizon(params.horizon, a, j);
    if n == 0 {
        return Ok(Vec::new());
    }
    let start = morphism_iterate(phi, alpha, j)?;
    let s = return_set(&phi.power(a as u64), &start, target, n)?;
    Ok(detect_progressions(&s, params.a_max, params.m_min, 0)?
        .into_iter()
        .map(|p| lift(p, a, j))
        .collect())
}

/// Dimension comparison between the target `V` and each `W_j` of `chain`.
///
/// Case 1 (`dim(V ∩ W_j) < dim V`) restarts the analysis for `ψ = φ^a`,
/// `β = φ^j(α)` inside `V ∩ W_j`, with one less unit of depth. Case 2
/// (`W_j = V`) puts the whole class `aN+j` in the return set.
pub fn refine_case_split<F: Field>(
    v: &ReducedGroebnerBasis<F>,
    chain: &ClosureChain<F>,
    phi: &Morphism<F>,
    alpha: &RationalPoint<F>,
    depth_limit: usize,
    params: &CaseSplitParams,
) -> Result<CaseSplit<F>> {
    let a = chain.a;
    let target_dimension = v.dimension();
    let mut flags = chain.diagnostics.clone();
    let mut offsets = Vec::with_capacity(chain.links.len());

    for link in &chain.links {
        let j = link.offset;
        let w = link.closure.ideal.with_order(v.order());
        let intersection = v.sum(&w)?;
        let intersection_dimension = intersection.dimension();

        let (kind, progressions, nested) = if depth_limit == 0 {
            flags.push(format!("offset {j}: depth exhausted, using observed return set"));
            (CaseKind::DepthExhausted, empirical(v, phi, alpha, a, j, params)?, Vec::new())
        } else if intersection_dimension < target_dimension {
            let psi = phi.power(a as u64);
            let beta = morphism_iterate(phi, alpha, j)?;
            let inner_params = CaseSplitParams {
                horizon: sub_horizon(params.horizon, a, j),
                ..*params
            };
            let mut nested = Vec::new();
            let mut found = Vec::new();
            if inner_params.horizon > 0 {
                let s = return_set(&psi, &beta, &intersection, inner_params.horizon)?;
                for p in detect_progressions(&s, params.a_max, params.m_min, 0)? {
                    let inner_chain = closure_chain(&psi, &beta, p.a, p.b, &params.closure)?;
                    let split =
                        refine_case_split(&intersection, &inner_chain, &psi, &beta, depth_limit - 1, &inner_params)?;
                    found.extend(split.progressions().into_iter().map(|q| lift(q, a, j)));
                    nested.push(split);
                }
            }
            (CaseKind::DimensionDrop, found, nested)
        } else if ideal_equal(&w, v)? {
            (CaseKind::FullClass, vec![Progression { a, b: j }], Vec::new())
        } else {
            flags.push(format!("offset {j}: irreducibility assumption unverified"));
            (
                CaseKind::IrreducibilityUnverified,
                empirical(v, phi, alpha, a, j, params)?,
                Vec::new(),
            )
        };

        offsets.push(OffsetCase {
            offset: j,
            kind,
            intersection,
            intersection_dimension,
            progressions,
            nested,
        });
    }

    Ok(CaseSplit {
        a,
        b: chain.b,
        target_dimension,
        offsets,
        flags,
    })
}
