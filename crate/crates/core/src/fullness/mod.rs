//! Cohomological fullness in positive characteristic and the diagnostics
//! built on top of it.

mod bounds;
mod diagnostics;
mod fedder;
mod gluing;
mod surjective;
mod threshold;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use bounds::{verify_regularity_bound, RegularityBound};
pub use diagnostics::{degree_zero_generates, kodaira_check, lyubeznik_lambda0, quasi_buchsbaum, KodairaReport};
pub use fedder::{fedder_fpure, FedderResult};
pub use gluing::{gluing_report, GluingReport};
pub use surjective::{is_surjective_element, SurjectiveElementReport};
pub use threshold::{f_threshold, f_threshold_nu, FThresholdResult, FThresholdRow};

use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::homological::{ExtComparison, HomologicalProfile, Resolved};
use crate::ideal::Ideal;

/// Verdict for one local cohomology index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexVerdict {
    /// Local cohomology index `i`; the comparison runs on `Ext^{n-i}`.
    pub index: usize,
    pub full: bool,
    /// `dim_k` of the kernel in each scanned degree of `Ext^{n-i}(S/I, S)`.
    pub kernel_dims: BTreeMap<i64, usize>,
    /// A kernel generator, written in the generators of `Ext^{n-i}(S/I, S)`.
    pub witness: Option<String>,
    pub witness_degree: Option<i64>,
}

/// Checks that every full quotient must pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyFlags {
    /// `depth > 0` when `dim > 0`; `None` if `dim = 0`.
    pub positive_depth: Option<bool>,
    pub pd_at_most_mu: bool,
    /// No embedded primes; `None` for non-monomial ideals.
    pub no_embedded_primes: Option<bool>,
}

impl ConsistencyFlags {
    pub fn all_pass(&self) -> bool {
        self.positive_depth != Some(false) && self.pd_at_most_mu && self.no_embedded_primes != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullnessReport {
    pub characteristic: u64,
    pub e_max: u32,
    /// One entry per `0 <= i <= dim S/I`; higher indices vanish.
    pub verdicts: Vec<IndexVerdict>,
    pub aggregate: bool,
    pub profile: HomologicalProfile,
    pub flags: ConsistencyFlags,
}

impl FullnessReport {
    pub fn failing_indices(&self) -> Vec<usize> {
        self.verdicts.iter().filter(|v| !v.full).map(|v| v.index).collect()
    }
}

pub(crate) fn require_positive_characteristic<F: Field>(ideal: &Ideal<F>, what: &str) -> Result<u64> {
    match ideal.characteristic() {
        0 => Err(Error::characteristic(0, &format!("{what} needs positive characteristic; in characteristic 0 only degzero applies"))),
        p => Ok(p),
    }
}

/// Kernel dimensions: the whole kernel when it has finite length, otherwise
/// a window of `width` degrees above its initial degree.
pub(crate) fn kernel_dims<F: Field>(cmp: &ExtComparison<F>, width: i64) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if cmp.is_injective() {
        return out;
    }
    let h = cmp.kernel.hilbert_series();
    if let Some(poly) = h.finite_length_polynomial() {
        for (e, c) in poly.terms() {
            out.insert(e, c as usize);
        }
        return out;
    }
    let lo = cmp.kernel.initial_degree().unwrap_or(0);
    for d in lo..lo + width {
        let dim = cmp.kernel.graded_piece_dim(d);
        if dim > 0 {
            out.insert(d, dim);
        }
    }
    out
}

fn verdict<F: Field>(index: usize, source: &Resolved<F>, cmp: &ExtComparison<F>) -> IndexVerdict {
    let ext_module = source.ext(cmp.j).expect("computed").presentation().module().clone();
    IndexVerdict {
        index,
        full: cmp.is_injective(),
        kernel_dims: kernel_dims(cmp, 6),
        witness: cmp.witness().map(|w| ext_module.format(w)),
        witness_degree: cmp.witness().and_then(|w| ext_module.degree(w)),
    }
}

/// Per-index verdicts of `Ext^{n-i}(S/I, S) -> Ext^{n-i}(S/I^{[q]}, S)` for one `q = p^e`.
fn verdicts_for<F: Field>(base: &Resolved<F>, frob: &Resolved<F>, dim: usize) -> Result<Vec<IndexVerdict>> {
    let n = base.nvars();
    (0..=dim)
        .into_par_iter()
        .map(|i| {
            let cmp = base.comparison_from(frob, n - i)?;
            Ok(verdict(i, base, &cmp))
        })
        .collect()
}

pub(crate) fn consistency_flags<F: Field>(ideal: &Ideal<F>, profile: &HomologicalProfile) -> Result<ConsistencyFlags> {
    let no_embedded_primes = if ideal.is_monomial() {
        let ass = ideal.monomial_associated_primes()?;
        Some(crate::ideal::monomial::embedded_primes(&ass).is_empty())
    } else {
        None
    };
    Ok(ConsistencyFlags {
        positive_depth: (profile.dim > 0).then_some(profile.depth > 0),
        pd_at_most_mu: profile.pd <= ideal.mu(),
        no_embedded_primes,
    })
}

/// Decide whether `S/I` is cohomologically full. The verdict at `e = 1` is
/// definitive; larger `e_max` cross-checks the engine and aborts on disagreement.
pub fn is_cohomologically_full<F: Field>(ideal: &Ideal<F>, e_max: u32) -> Result<FullnessReport> {
    let p = require_positive_characteristic(ideal, "fullness")?;
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be positive".into()));
    }
    let base = Resolved::new(ideal)?;
    full_with(&base, p, e_max)
}

pub(crate) fn full_with<F: Field>(base: &Resolved<F>, p: u64, e_max: u32) -> Result<FullnessReport> {
    let ideal = base.ideal();
    let dim = base.dim();
    let mut verdicts: Option<Vec<IndexVerdict>> = None;
    for e in 1..=e_max {
        let frob = Resolved::new(&ideal.frobenius_power(e)?)?;
        let vs = verdicts_for(base, &frob, dim)?;
        match &verdicts {
            None => verdicts = Some(vs),
            Some(first) => {
                let a: Vec<bool> = first.iter().map(|v| v.full).collect();
                let b: Vec<bool> = vs.iter().map(|v| v.full).collect();
                if a != b {
                    return Err(Error::Internal(format!("fullness verdicts disagree: e=1 gives {a:?}, e={e} gives {b:?}")));
                }
            }
        }
    }
    let verdicts = verdicts.expect("e_max >= 1");
    let aggregate = verdicts.iter().all(|v| v.full);
    let mut profile = base.profile()?;
    if aggregate {
        profile = profile.with_exact_cd();
    }
    let flags = consistency_flags(ideal, &profile)?;
    if aggregate && !flags.all_pass() {
        return Err(Error::Internal(format!("full quotient fails a consistency check: {flags:?}")));
    }
    Ok(FullnessReport { characteristic: p, e_max, verdicts, aggregate, profile, flags })
}
