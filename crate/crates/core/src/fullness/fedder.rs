//! Fedder's criterion: `S/I` is F-pure iff `(I^{[p]} : I) ⊄ m^{[p]}`.

use super::require_positive_characteristic;
use crate::algebra::Field;
use crate::error::Result;
use crate::ideal::Ideal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FedderResult {
    pub fpure: bool,
    /// A generator of the colon with a term outside `m^{[p]}`.
    pub witness: Option<String>,
    /// Minimal generators of `I^{[p]} : I`.
    pub colon_generators: Vec<String>,
}

pub fn fedder_fpure<F: Field>(ideal: &Ideal<F>) -> Result<FedderResult> {
    let p = require_positive_characteristic(ideal, "Fedder's criterion")?;
    let colon = ideal.frobenius_power(1)?.colon(ideal)?;
    // a polynomial lies outside m^{[p]} iff some term has every exponent below p
    let witness = colon
        .minimal_generators()
        .iter()
        .find(|g| g.terms().iter().any(|(m, _)| m.exponents().iter().all(|&e| (e as u64) < p)))
        .map(|g| g.to_canonical_string());
    Ok(FedderResult { fpure: witness.is_some(), witness, colon_generators: colon.display_generators() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, Polynomial, PrimeField};

    fn fermat(p: u64, d: u32) -> Ideal<PrimeField> {
        let r = PolyRing::new(PrimeField::new(p).unwrap(), &["x", "y", "z"], OrderKind::Grevlex).unwrap();
        let f = (0..3).map(|i| Polynomial::var(&r, i).try_pow(d as u64).unwrap()).fold(Polynomial::zero(&r), |a, b| &a + &b);
        Ideal::new(&r, vec![f]).unwrap()
    }

    #[test]
    fn fermat_cubic() {
        assert!(fedder_fpure(&fermat(7, 3)).unwrap().fpure);
        assert!(!fedder_fpure(&fermat(5, 3)).unwrap().fpure);
    }

    #[test]
    fn two_lines_witness() {
        let r = PolyRing::new(PrimeField::new(2).unwrap(), &["x", "y", "z"], OrderKind::Grevlex).unwrap();
        let v: Vec<_> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let i = Ideal::new(&r, vec![&v[0] * &v[1], &v[0] * &v[2]]).unwrap();
        let res = fedder_fpure(&i).unwrap();
        assert!(res.fpure);
        assert_eq!(res.witness.as_deref(), Some("x*y*z"));
    }
}
