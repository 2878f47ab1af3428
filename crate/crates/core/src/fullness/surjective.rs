//! Surjective elements: `H^i_m(R/(x^n)) -> H^i_m(R/(x))` onto for all `i`,
//! checked dually as injectivity of `Ext(S/(I+(x))) -> Ext(S/(I+(x^n)))`.

use rayon::prelude::*;

use crate::algebra::{Field, Polynomial};
use crate::error::{Error, Result};
use crate::homological::Resolved;
use crate::ideal::Ideal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurjectiveElementReport {
    pub element: String,
    pub n_max: u32,
    /// `(n, Ext indices with a nonzero kernel)` for each `2 <= n <= n_max`.
    pub failures: Vec<(u32, Vec<usize>)>,
    /// Surjective for every `n <= n_max`; nothing is claimed beyond.
    pub surjective_up_to_n_max: bool,
}

pub fn is_surjective_element<F: Field>(ideal: &Ideal<F>, x: &Polynomial<F>, n_max: u32) -> Result<SurjectiveElementReport> {
    if !x.is_homogeneous() || x.is_zero() {
        return Err(Error::Precondition("the element must be a nonzero homogeneous polynomial".into()));
    }
    if !ideal.colon_element(x)?.same_as(ideal)? {
        return Err(Error::Zerodivisor);
    }
    let ring = ideal.ring();
    let big = Resolved::new(&ideal.sum(&Ideal::new(ring, vec![x.clone()])?)?)?;
    let nv = ideal.nvars();
    let mut failures = Vec::new();
    for n in 2..=n_max {
        let small = Resolved::new(&ideal.sum(&Ideal::new(ring, vec![x.try_pow(n as u64)?])?)?)?;
        let bad: Vec<usize> = (0..=nv)
            .into_par_iter()
            .map(|j| big.comparison_from(&small, j).map(|c| (j, c.is_injective())))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&(_, ok)| !ok)
            .map(|(j, _)| j)
            .collect();
        if !bad.is_empty() {
            failures.push((n, bad));
        }
    }
    Ok(SurjectiveElementReport {
        element: x.to_canonical_string(),
        n_max,
        surjective_up_to_n_max: failures.is_empty(),
        failures,
    })
}
