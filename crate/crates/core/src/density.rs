//! Finite-horizon density statistics for sets of natural numbers, and the
//! split of a return set into arithmetic progressions plus a sparse rest.
//!
//! Upper Banach density is a limit and cannot be read off finite data. What
//! we report instead is, for each window length `L`, the largest fraction of
//! any length-`L` window inside `[0, N)` that the set occupies. All ratios
//! are exact.

use num_integer::Roots;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::orbit::ReturnSet;

/// Exact ratio of two counts.
pub type Density = Ratio<u64>;

/// The progression `{a*l + b : l >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Progression {
    pub a: usize,
    pub b: usize,
}

impl Progression {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("progression modulus must be at least 1".into()));
        }
        Ok(Self { a, b })
    }

    /// Members below `horizon`.
    pub fn members(&self, horizon: usize) -> impl Iterator<Item = usize> {
        (self.b..horizon).step_by(self.a)
    }

    pub fn count_below(&self, horizon: usize) -> usize {
        if self.b >= horizon {
            0
        } else {
            (horizon - self.b).div_ceil(self.a)
        }
    }

    /// True if `other` is a sub-progression of `self`.
    pub fn covers(&self, other: &Progression) -> bool {
        other.a % self.a == 0 && other.b >= self.b && (other.b - self.b) % self.a == 0
    }
}

impl std::fmt::Display for Progression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}N+{}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityProfile {
    pub horizon: usize,
    /// `(L, max ratio over length-L windows)`, in schedule order.
    pub entries: Vec<(usize, Density)>,
}

impl DensityProfile {
    pub fn ratio_at(&self, l: usize) -> Option<Density> {
        self.entries.iter().find(|(len, _)| *len == l).map(|(_, r)| *r)
    }
}

/// `S = A ∪ B`: progressions certified inside `S` and the residual `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub progressions: Vec<Progression>,
    pub residual: ReturnSet,
    pub residual_profile: DensityProfile,
}

fn max_window_count(indicator: &[bool], l: usize) -> u64 {
    let mut count = indicator[..l].iter().filter(|&&b| b).count() as u64;
    let mut best = count;
    for i in l..indicator.len() {
        count += u64::from(indicator[i]);
        count -= u64::from(indicator[i - l]);
        best = best.max(count);
    }
    best
}

fn check_window(s: &ReturnSet, l: usize) -> Result<()> {
    if l == 0 || l > s.horizon() {
        return Err(Error::InvalidParameter(format!(
            "window length {l} outside [1, {}]",
            s.horizon()
        )));
    }
    Ok(())
}

/// Largest `|S ∩ I| / L` over windows `I ⊆ [0, N)` of length `L`.
pub fn window_density_max(s: &ReturnSet, l: usize) -> Result<Density> {
    check_window(s, l)?;
    Ok(Density::new(max_window_count(&s.indicator(), l), l as u64))
}

fn ceil_root(n: u128, k: u32) -> usize {
    let r = n.nth_root(k);
    let r = if r.pow(k) < n { r + 1 } else { r };
    usize::try_from(r).expect("root of a cube of a usize fits")
}

/// `⌈N^{1/4}⌉, ⌈N^{1/2}⌉, ⌈N^{3/4}⌉, N`, deduplicated.
pub fn default_schedule(n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let wide = n as u128;
    let mut out = vec![ceil_root(wide, 4), ceil_root(wide, 2), ceil_root(wide.pow(3), 4), n];
    out.dedup();
    out
}

pub fn density_profile(s: &ReturnSet, schedule: &[usize]) -> Result<DensityProfile> {
    if schedule.is_empty() {
        return Err(Error::InvalidParameter("empty window schedule".into()));
    }
    for &l in schedule {
        check_window(s, l)?;
    }
    let indicator = s.indicator();
    Ok(DensityProfile {
        horizon: s.horizon(),
        entries: schedule
            .iter()
            .map(|&l| (l, Density::new(max_window_count(&indicator, l), l as u64)))
            .collect(),
    })
}

fn contained(indicator: &[bool], prog: &Progression) -> bool {
    prog.members(indicator.len()).all(|n| indicator[n])
}

/// Progressions `aN+b` with `a <= a_max` and `tail_start <= b < tail_start + a`
/// whose members in `[b, N)` all lie in `S`, at least `m_min` of them.
///
/// This certifies containment only up to the horizon. Sub-progressions of a
/// detected progression are dropped, and the result is sorted by `(a, b)`.
pub fn detect_progressions(s: &ReturnSet, a_max: usize, m_min: usize, tail_start: usize) -> Result<Vec<Progression>> {
    if a_max < 1 {
        return Err(Error::InvalidParameter("a_max must be at least 1".into()));
    }
    if m_min < 2 {
        return Err(Error::InvalidParameter("m_min must be at least 2".into()));
    }
    let n = s.horizon();
    if tail_start >= n {
        return Err(Error::InvalidParameter(format!(
            "tail_start {tail_start} not below horizon {n}"
        )));
    }
    let indicator = s.indicator();
    let mut found: Vec<Progression> = Vec::new();
    for a in 1..=a_max {
        for b in tail_start..(tail_start + a).min(n) {
            let prog = Progression { a, b };
            if !indicator[b] || prog.count_below(n) < m_min {
                continue;
            }
            if found.iter().any(|f| f.covers(&prog)) {
                continue;
            }
            if contained(&indicator, &prog) {
                found.push(prog);
            }
        }
    }
    Ok(found)
}

/// Splits `S` into the union `A` of `progressions` and the residual `B`.
pub fn decompose_return_set(s: &ReturnSet, progressions: &[Progression]) -> Result<Decomposition> {
    let n = s.horizon();
    let indicator = s.indicator();
    let mut covered = vec![false; n];
    for prog in progressions {
        if prog.a == 0 {
            return Err(Error::InvalidParameter("progression modulus must be at least 1".into()));
        }
        if !contained(&indicator, prog) {
            return Err(Error::ProgressionNotContained { a: prog.a, b: prog.b });
        }
        for m in prog.members(n) {
            covered[m] = true;
        }
    }
    let residual = ReturnSet::from_predicate(n, |i| indicator[i] && !covered[i]);
    let schedule = default_schedule(n);
    let residual_profile = if schedule.is_empty() {
        DensityProfile {
            horizon: 0,
            entries: Vec::new(),
        }
    } else {
        density_profile(&residual, &schedule)?
    };
    Ok(Decomposition {
        progressions: progressions.to_vec(),
        residual,
        residual_profile,
    })
}

/// Indices below `horizon` covered by at least one progression.
pub fn covered_set(progressions: &[Progression], horizon: usize) -> ReturnSet {
    let mut covered = vec![false; horizon];
    for prog in progressions {
        for m in prog.members(horizon) {
            covered[m] = true;
        }
    }
    ReturnSet::from_predicate(horizon, |i| covered[i])
}
