//! Upper bounds on a-invariants and regularity of full quotients in terms of
//! the number and degrees of generators.

use super::{full_with, require_positive_characteristic};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::homological::Resolved;
use crate::ideal::Ideal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityBound {
    pub max_a: Option<i64>,
    pub regularity: i64,
    pub mu: usize,
    pub delta: u32,
    pub nvars: usize,
    /// `c = n - dim S/I`.
    pub codim: usize,
    /// `μ δ - n`.
    pub a_bound: i64,
    /// `δ μ - c`.
    pub reg_bound: i64,
    pub a_holds: bool,
    pub reg_holds: bool,
}

impl RegularityBound {
    pub fn holds(&self) -> bool {
        self.a_holds && self.reg_holds
    }

    pub fn a_slack(&self) -> Option<i64> {
        self.max_a.map(|a| self.a_bound - a)
    }

    pub fn reg_slack(&self) -> i64 {
        self.reg_bound - self.regularity
    }
}

/// Check `max a_i <= μδ - n` and `reg <= δμ - c` on a quotient certified full.
pub fn verify_regularity_bound<F: Field>(ideal: &Ideal<F>) -> Result<RegularityBound> {
    let p = require_positive_characteristic(ideal, "the regularity bound")?;
    let base = Resolved::new(ideal)?;
    let report = full_with(&base, p, 1)?;
    if !report.aggregate {
        return Err(Error::Precondition(format!(
            "quotient is not cohomologically full (indices {:?} fail); the bound is not claimed",
            report.failing_indices()
        )));
    }
    let profile = &report.profile;
    let max_a = profile.a_invariants.iter().flatten().copied().max();
    let (mu, delta, n) = (ideal.mu(), ideal.delta(), ideal.nvars());
    let codim = n - profile.dim;
    let a_bound = (mu as i64) * (delta as i64) - n as i64;
    let reg_bound = (delta as i64) * (mu as i64) - codim as i64;
    Ok(RegularityBound {
        max_a,
        regularity: profile.regularity,
        mu,
        delta,
        nvars: n,
        codim,
        a_bound,
        reg_bound,
        a_holds: max_a.map_or(true, |a| a <= a_bound),
        reg_holds: profile.regularity <= reg_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, PrimeField};

    #[test]
    fn power_of_the_plane_ideal() {
        let r = PolyRing::new(PrimeField::new(2).unwrap(), &["x", "y", "z"], OrderKind::Grevlex).unwrap();
        let xy = Ideal::new(&r, vec![crate::algebra::Polynomial::var(&r, 0), crate::algebra::Polynomial::var(&r, 1)]).unwrap();
        let b = verify_regularity_bound(&xy.power(8).unwrap()).unwrap();
        assert_eq!((b.regularity, b.mu, b.delta, b.reg_bound), (7, 9, 8, 70));
        assert!(b.holds());
    }
}
