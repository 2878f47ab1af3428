//! Diagnostics read off the duals `Ext^{n-i}(S/I, S)` of local cohomology:
//! Lyubeznik numbers `λ_{0,j}`, Kodaira-type vanishing, quasi-Buchsbaumness
//! and generation in degree zero.

use super::{full_with, require_positive_characteristic};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::homological::Resolved;
use crate::ideal::Ideal;

/// True when `H^j_m(S/I)` has finite length for every `j < dim`.
fn finite_local_cohomology<F: Field>(rs: &Resolved<F>) -> Result<Option<usize>> {
    for j in 0..rs.dim() {
        if let Some(e) = rs.dual_cohomology(j)? {
            if e.presentation().krull_dimension().is_some_and(|d| d > 0) {
                return Ok(Some(j));
            }
        }
    }
    Ok(None)
}

/// `λ_{0,j}(S/I) = dim_k H^j_m(S/I)_0` for `j < dim`, valid for full
/// quotients with finite local cohomology. Refuses otherwise.
pub fn lyubeznik_lambda0<F: Field>(ideal: &Ideal<F>) -> Result<Vec<usize>> {
    let p = require_positive_characteristic(ideal, "Lyubeznik numbers")?;
    let rs = Resolved::new(ideal)?;
    if let Some(j) = finite_local_cohomology(&rs)? {
        return Err(Error::Precondition(format!(
            "H^{j}_m is not of finite length (Ext^{} has positive-dimensional support)",
            rs.nvars() - j
        )));
    }
    let report = full_with(&rs, p, 1)?;
    if !report.aggregate {
        return Err(Error::Precondition("quotient is not certified cohomologically full".into()));
    }
    (0..rs.dim()).map(|j| rs.local_cohomology_dim(j, 0)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaReport {
    /// Per `i = 0..=n`: `H^0_m(Ext^i(S/I, S(-n)))_{>0} = 0`.
    pub torsion_positive_vanishes: Vec<bool>,
    /// Per `j < dim`, when local cohomology has finite length: `H^j_m(S/I)_{<0} = 0`.
    pub negative_cohomology_vanishes: Option<Vec<bool>>,
}

impl KodairaReport {
    pub fn passes(&self) -> bool {
        self.torsion_positive_vanishes.iter().all(|&b| b)
            && self.negative_cohomology_vanishes.as_ref().map_or(true, |v| v.iter().all(|&b| b))
    }
}

pub fn kodaira_check<F: Field>(ideal: &Ideal<F>) -> Result<KodairaReport> {
    let rs = Resolved::new(ideal)?;
    let n = rs.nvars() as i64;
    // degree d of Ext^i(S/I, S(-n)) is degree d - n of Ext^i(S/I, S)
    let torsion_positive_vanishes = (0..=rs.nvars())
        .map(|i| Ok(rs.ext(i)?.presentation().torsion_hilbert().terms().all(|(e, _)| e <= -n)))
        .collect::<Result<Vec<_>>>()?;
    let negative_cohomology_vanishes = if finite_local_cohomology(&rs)?.is_none() {
        let v = (0..rs.dim())
            .map(|j| {
                Ok(match rs.dual_cohomology(j)? {
                    Some(e) => match e.presentation().hilbert_series().finite_length_polynomial() {
                        Some(h) => h.terms().all(|(e, _)| e <= -n),
                        None => return Err(Error::Internal("finite-length Ext has infinite Hilbert function".into())),
                    },
                    None => true,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Some(v)
    } else {
        None
    };
    Ok(KodairaReport { torsion_positive_vanishes, negative_cohomology_vanishes })
}

/// `m · H^i_m(S/I) = 0` for all `i < dim`, checked on the Matlis duals.
pub fn quasi_buchsbaum<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let rs = Resolved::new(ideal)?;
    for i in 0..rs.dim() {
        if let Some(e) = rs.dual_cohomology(i)? {
            if !e.presentation().annihilated_by_maximal() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `H^i_m(S/I)` is generated by its degree-zero piece: the socle of
/// `Ext^{n-i}(S/I, S(-n))` must sit in degree 0.
pub fn degree_zero_generates<F: Field>(ideal: &Ideal<F>, i: usize) -> Result<bool> {
    let rs = Resolved::new(ideal)?;
    let n = rs.nvars() as i64;
    let Some(e) = rs.dual_cohomology(i)? else { return Ok(true) };
    if e.presentation().krull_dimension().is_some_and(|d| d > 0) {
        return Err(Error::Precondition(format!("Ext^{} does not have finite length", n - i as i64)));
    }
    Ok(e.presentation().socle_degrees().iter().all(|&d| d == -n))
}
