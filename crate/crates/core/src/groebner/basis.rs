//! Gröbner bases of polynomial ideals.

use super::buchberger::{divide, groebner, Reducer};
use super::module::{FreeModule, Vector};
use super::syzygy::{schreyer_syzygies, Syzygies};
use crate::algebra::poly::same_ring;
use crate::algebra::{Field, Monomial, Polynomial, RingRef, TermOrder};
use crate::error::{Error, Result};

/// Reduced Gröbner basis of an ideal, sorted by decreasing leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    module: FreeModule<F>,
    vectors: Vec<Vector<F>>,
    polys: Vec<Polynomial<F>>,
    minimal_inputs: Vec<usize>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> Result<Self> {
        for g in gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        let module = FreeModule::ideal(ring);
        let inputs: Vec<Vector<F>> = gens.iter().map(|g| module.from_poly(g, 0)).collect();
        let res = groebner(&module, &inputs);
        let polys = res.basis.iter().map(|v| module.component(v, 0)).collect();
        Ok(GroebnerBasis { ring: ring.clone(), module, vectors: res.basis, polys, minimal_inputs: res.minimal_inputs })
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Inputs that were not redundant when processed in degree order; a
    /// minimal generating set for homogeneous input.
    pub fn minimal_inputs(&self) -> &[usize] {
        &self.minimal_inputs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| *p.leading_monomial().unwrap()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant())
    }

    pub fn is_monomial(&self) -> bool {
        self.polys.iter().all(|p| p.is_monomial())
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let r = Reducer::from_basis(&self.module, &self.vectors).reduce(&self.module.from_poly(f, 0), None, None);
        Ok(self.module.component(&r, 0))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_all(&self, fs: &[Polynomial<F>]) -> Result<bool> {
        for f in fs {
            if !self.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `f = Σ q_k g_k + r` with divisors tried in basis order.
    pub fn divide(&self, f: &Polynomial<F>) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let (qs, r) = divide(&self.module, &self.module.from_poly(f, 0), &self.vectors);
        let qs = qs.into_iter().map(|q| Polynomial::from_terms(&self.ring, q)).collect();
        Ok((qs, self.module.component(&r, 0)))
    }

    /// First syzygies of the basis in the induced Schreyer order.
    pub fn syzygies(&self) -> Syzygies<F> {
        schreyer_syzygies(&self.module, &self.vectors)
    }

    /// True when both bases describe the same ideal (reduced bases are unique).
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.polys == other.polys
    }
}
