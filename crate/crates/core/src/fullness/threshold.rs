//! F-thresholds `ν_a^J(p^e) = max{t : a^t ⊄ J^{[p^e]}}`.

use super::require_positive_characteristic;
use crate::algebra::{Field, Monomial};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FThresholdRow {
    pub e: u32,
    pub q: u64,
    pub nu: u64,
    /// `ν / p^e`, as an unreduced pair.
    pub ratio: (u64, u64),
    /// `Σ_i (k_i q - 1)` where `g_i^{k_i} ∈ J`: a guaranteed upper bound.
    pub containment_bound: u64,
    /// `μ(a)(q - 1)`, which bounds ν when `a ⊆ J`.
    pub pigeonhole_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FThresholdResult {
    pub a: Vec<String>,
    pub j: Vec<String>,
    pub a_inside_j: bool,
    /// Least `k_i` with `g_i^{k_i} ∈ J`, per minimal generator of `a`.
    pub radical_exponents: Vec<u32>,
    pub rows: Vec<FThresholdRow>,
    /// `ν(p^{e+1}) >= p ν(p^e)` along the table.
    pub monotone: bool,
}

const MAX_RADICAL_EXPONENT: u32 = 256;

fn radical_exponents<F: Field>(a: &Ideal<F>, j: &Ideal<F>) -> Result<Vec<u32>> {
    a.minimal_generators()
        .iter()
        .map(|g| {
            let mut pw = g.clone();
            for k in 1..=MAX_RADICAL_EXPONENT {
                if j.contains(&pw)? {
                    return Ok(k);
                }
                pw = pw.try_mul(g)?;
            }
            Err(Error::NotInRadical(g.to_canonical_string()))
        })
        .collect()
}

/// `a^t ⊆ J^{[q]}`. Monomial inputs are handled by divisibility alone.
fn power_contained<F: Field>(a: &Ideal<F>, jq: &Ideal<F>, t: u64) -> Result<bool> {
    if t == 0 {
        return Ok(jq.is_unit());
    }
    if a.is_monomial() && jq.is_monomial() {
        let gens = a.monomial_generators()?;
        let target = jq.monomial_generators()?;
        let n = a.nvars();
        // every monomial of a^t must be divisible by a generator of J^{[q]}
        let mut layer = vec![Monomial::one(n)];
        for _ in 0..t {
            let mut next: Vec<Monomial> = Vec::new();
            for m in &layer {
                for g in &gens {
                    let prod = m.checked_mul(g).ok_or(Error::ExponentOverflow)?;
                    if !target.iter().any(|d| d.divides(&prod)) {
                        next.push(prod);
                    }
                }
            }
            // products already in J^{[q]} stay there after multiplying further
            next.sort_by(|x, y| x.exponents().cmp(y.exponents()));
            next.dedup();
            if next.is_empty() {
                return Ok(true);
            }
            layer = next;
        }
        return Ok(false);
    }
    let pw = a.power(t as u32)?;
    jq.contains_ideal(&pw)
}

/// `ν_a^J(p^e)` for one `e`.
pub fn f_threshold_nu<F: Field>(a: &Ideal<F>, j: &Ideal<F>, e: u32) -> Result<FThresholdRow> {
    let p = require_positive_characteristic(j, "F-thresholds")?;
    if !j.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let ks = radical_exponents(a, j)?;
    row(a, j, e, p, &ks)
}

fn row<F: Field>(a: &Ideal<F>, j: &Ideal<F>, e: u32, p: u64, ks: &[u32]) -> Result<FThresholdRow> {
    let q = p.checked_pow(e).ok_or(Error::ExponentOverflow)?;
    let jq = j.frobenius_power(e)?;
    let containment_bound: u64 = ks.iter().map(|&k| k as u64 * q - 1).sum();
    // ν is the last t with a^t ⊄ J^{[q]}; a^{bound+1} is contained
    let (mut lo, mut hi) = (0u64, containment_bound + 1);
    if power_contained(a, &jq, 0)? {
        return Err(Error::UnitIdeal);
    }
    if !power_contained(a, &jq, hi)? {
        return Err(Error::Internal(format!("a^{hi} not contained in J^[{q}] despite the containment bound")));
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if power_contained(a, &jq, mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(FThresholdRow {
        e,
        q,
        nu: lo,
        ratio: (lo, q),
        containment_bound,
        pigeonhole_bound: a.mu() as u64 * (q - 1),
    })
}

/// The table `e ↦ ν_a^J(p^e)` for `1 <= e <= e_max`.
pub fn f_threshold<F: Field>(a: &Ideal<F>, j: &Ideal<F>, e_max: u32) -> Result<FThresholdResult> {
    let p = require_positive_characteristic(j, "F-thresholds")?;
    if !j.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let ks = radical_exponents(a, j)?;
    let rows = (1..=e_max).map(|e| row(a, j, e, p, &ks)).collect::<Result<Vec<_>>>()?;
    let monotone = rows.windows(2).all(|w| w[1].nu >= p * w[0].nu);
    Ok(FThresholdResult {
        a: a.display_generators(),
        j: j.display_generators(),
        a_inside_j: j.contains_ideal(a)?,
        radical_exponents: ks,
        rows,
        monotone,
    })
}
