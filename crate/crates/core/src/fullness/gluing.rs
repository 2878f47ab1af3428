//! Fullness of `S/(J ∩ K)` against `S/J`, `S/K` and `S/(J+K)`.

use super::{full_with, require_positive_characteristic};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::homological::Resolved;
use crate::ideal::Ideal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingReport {
    /// `max(pd S/J, pd S/K, pd S/(J∩K))`.
    pub l: usize,
    /// `max(pd S/J, pd S/K)`.
    pub l_prime: usize,
    /// `height(J + K)`.
    pub h: usize,
    pub full_j: bool,
    pub full_k: bool,
    pub full_intersection: bool,
    pub full_sum: bool,
    pub depth_intersection: usize,
    /// Clauses whose hypotheses hold, in increasing order.
    pub applicable_clauses: Vec<u8>,
    /// Each applicable clause's biconditional holds among the verdicts.
    pub consistent: bool,
    pub j_equals_k: bool,
}

pub fn gluing_report<F: Field>(j: &Ideal<F>, k: &Ideal<F>) -> Result<GluingReport> {
    let p = require_positive_characteristic(j, "gluing")?;
    let sum = j.sum(k)?;
    if sum.is_unit() {
        return Err(Error::Precondition("J + K is the unit ideal".into()));
    }
    let inter = j.intersect(k)?;
    let rj = Resolved::new(j)?;
    let rk = Resolved::new(k)?;
    let ri = Resolved::new(&inter)?;
    let rs = Resolved::new(&sum)?;
    let (pj, pk, pi) = (rj.depth_pd().1, rk.depth_pd().1, ri.depth_pd().1);
    let l_prime = pj.max(pk);
    let l = l_prime.max(pi);
    let h = sum.height()?;
    let (full_j, full_k, full_intersection, full_sum) = (
        full_with(&rj, p, 1)?.aggregate,
        full_with(&rk, p, 1)?.aggregate,
        full_with(&ri, p, 1)?.aggregate,
        full_with(&rs, p, 1)?.aggregate,
    );
    let mut applicable_clauses = Vec::new();
    let mut consistent = true;
    if l < h {
        applicable_clauses.push(1);
        consistent &= full_intersection == (full_j && full_k);
    }
    if l_prime < h && full_sum {
        applicable_clauses.push(2);
        consistent &= full_intersection == (full_j && full_k);
    }
    // Frobenius powers are a cofinal system with constant depth in characteristic p
    if l_prime < h {
        applicable_clauses.push(3);
        consistent &= full_intersection == (full_j && full_k && full_sum);
    }
    Ok(GluingReport {
        l,
        l_prime,
        h,
        full_j,
        full_k,
        full_intersection,
        full_sum,
        depth_intersection: ri.depth_pd().0,
        applicable_clauses,
        consistent,
        j_equals_k: j.same_as(k)?,
    })
}
