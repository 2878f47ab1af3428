//! Ideals with cached Gröbner data, and the usual constructors.

pub mod monomial;
pub mod simplicial;

use std::sync::OnceLock;

use crate::algebra::poly::same_ring;
use crate::algebra::{Field, Monomial, Polynomial, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};

pub use monomial::VarPrime;
pub use simplicial::SimplicialComplex;

/// An ideal given by generators, with its reduced Gröbner basis and minimal
/// generators computed on first use.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
    minimal: OnceLock<Vec<Polynomial<F>>>,
}

/// The handle type used across the crate.
pub type IdealHandle<F> = Ideal<F>;

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new(), minimal: OnceLock::new() })
    }

    /// An ideal whose Gröbner basis is seeded from `basis`, a known basis of
    /// the same ideal (for instance one read back from a cache). Only the
    /// cheap direction, generators inside the seeded ideal, is checked.
    pub fn with_basis(ring: &RingRef<F>, gens: Vec<Polynomial<F>>, basis: &[Polynomial<F>]) -> Result<Self> {
        let ideal = Ideal::new(ring, gens)?;
        let gb = GroebnerBasis::compute(ring, basis)?;
        if !gb.contains_all(&ideal.gens)? {
            return Err(Error::Precondition("seeded basis does not generate the ideal".into()));
        }
        let _ = ideal.gb.set(gb);
        Ok(ideal)
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).unwrap()
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &RingRef<F>) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn from_monomials(ring: &RingRef<F>, monos: &[Monomial]) -> Self {
        let gens = monos.iter().map(|m| Polynomial::monomial(ring, *m)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// `(x_{v_1}, ..., x_{v_k})`.
    pub fn from_var_prime(ring: &RingRef<F>, p: VarPrime) -> Self {
        let gens = p.vars().into_iter().map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    /// Generators as given (zeros dropped).
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.ring, &self.gens).expect("generators share the ring"))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// True when the ideal is generated by monomials (decided on the reduced
    /// basis, so it does not depend on the chosen generators).
    pub fn is_monomial(&self) -> bool {
        self.gb().is_monomial()
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_monomial() && self.gb().generators().iter().all(|g| g.leading_monomial().unwrap().is_squarefree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gb().generators().iter().all(|g| g.is_homogeneous())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.gb().normal_form(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        self.gb().contains_all(other.generators())
    }

    pub fn same_as(&self, other: &Ideal<F>) -> Result<bool> {
        self.check(other)?;
        Ok(self.gb().same_ideal(other.gb()))
    }

    fn check(&self, other: &Ideal<F>) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Leading monomials of the reduced basis; generators of the ideal
    /// itself when it is monomial.
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.gb().leading_monomials()
    }

    /// Monomial generators, or an error when the ideal is not monomial.
    pub fn monomial_generators(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial() {
            return Err(Error::NotMonomial);
        }
        Ok(self.initial_monomials())
    }

    /// A minimal homogeneous generating set, chosen degree by degree by
    /// skipping generators in the span of earlier ones. For nonhomogeneous
    /// ideals this is merely an irredundant-in-order generating set.
    pub fn minimal_generators(&self) -> &[Polynomial<F>] {
        self.minimal.get_or_init(|| {
            if self.is_monomial() {
                return self.gb().generators().to_vec();
            }
            let mut ordered = self.gens.clone();
            ordered.sort_by(|a, b| {
                a.degree().cmp(&b.degree()).then_with(|| {
                    self.ring.cmp_mono(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
                })
            });
            let gb = GroebnerBasis::compute(&self.ring, &ordered).expect("same ring");
            gb.minimal_inputs().iter().map(|&k| ordered[k].monic()).collect()
        })
    }

    /// Minimal number of generators μ.
    pub fn mu(&self) -> usize {
        self.minimal_generators().len()
    }

    /// Largest degree δ of a minimal homogeneous generator (0 for the zero ideal).
    pub fn delta(&self) -> u32 {
        self.minimal_generators().iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in self.minimal_generators() {
            for b in other.minimal_generators() {
                gens.push(a.try_mul(b)?);
            }
        }
        let raw = Ideal::new(&self.ring, gens)?;
        Ideal::new(&self.ring, raw.minimal_generators().to_vec())
    }

    /// `I^t`, with a minimalized generating set.
    pub fn power(&self, t: u32) -> Result<Ideal<F>> {
        if t == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc = Ideal::new(&self.ring, self.minimal_generators().to_vec())?;
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^{[p^e]}`, generated by the `p^e`-th powers of the generators.
    pub fn frobenius_power(&self, e: u32) -> Result<Ideal<F>> {
        let p = self.characteristic();
        if p == 0 {
            return Err(Error::characteristic(0, "Frobenius powers need positive characteristic"));
        }
        let base = if self.gb.get().is_some() { self.minimal_generators() } else { &self.gens[..] };
        let gens = base.iter().map(|g| g.frobenius(e)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let gens = groebner::intersect(&self.ring, self.gb().generators(), other.gb().generators())?;
        Ideal::new(&self.ring, gens)
    }

    pub fn colon(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let gens = groebner::colon(&self.ring, self.gb().generators(), other.gb().generators())?;
        Ideal::new(&self.ring, gens)
    }

    pub fn colon_element(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        let gens = groebner::colon_element(&self.ring, self.gb().generators(), g)?;
        Ideal::new(&self.ring, gens)
    }

    pub fn saturation(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let gens = groebner::saturation(&self.ring, self.gb().generators(), other.gb().generators())?;
        Ideal::new(&self.ring, gens)
    }

    /// Radical of a monomial ideal.
    pub fn monomial_radical(&self) -> Result<Ideal<F>> {
        let monos: Vec<Monomial> = self.monomial_generators()?.iter().map(|m| m.radical()).collect();
        Ok(Ideal::from_monomials(&self.ring, &monomial::minimal_monomials(&monos)))
    }

    /// Minimal primes of the initial ideal; for monomial ideals these are the
    /// minimal primes of the ideal itself.
    fn initial_minimal_primes(&self) -> Vec<VarPrime> {
        monomial::minimal_primes(&self.initial_monomials())
    }

    /// Krull dimension of `S/I`, read off the initial ideal.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if self.is_zero() {
            return Ok(self.nvars());
        }
        let h = self.initial_minimal_primes().iter().map(|p| p.height()).min().unwrap_or(0);
        Ok(self.nvars() - h)
    }

    /// `height(I) = n - dim S/I`.
    pub fn height(&self) -> Result<usize> {
        Ok(self.nvars() - self.krull_dimension()?)
    }

    /// Associated primes of `S/I` for a monomial ideal.
    pub fn monomial_associated_primes(&self) -> Result<Vec<VarPrime>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let gens = self.monomial_generators()?;
        Ok(monomial::associated_primes(&gens, self.nvars()))
    }

    /// Minimal primes of a monomial ideal.
    pub fn monomial_minimal_primes(&self) -> Result<Vec<VarPrime>> {
        Ok(monomial::minimal_primes(&self.monomial_generators()?))
    }

    /// Reduced basis as canonical strings; a stable identity for caching.
    pub fn canonical_key(&self) -> String {
        let parts: Vec<String> = self.gb().generators().iter().map(|g| g.to_canonical_string()).collect();
        parts.join(",")
    }

    /// Generators as canonical strings (the reduced basis for monomial
    /// ideals, the minimal generators otherwise).
    pub fn display_generators(&self) -> Vec<String> {
        self.minimal_generators().iter().map(|g| g.to_canonical_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, PrimeField};

    fn ring(p: u64, vars: &[&str]) -> RingRef<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap(), vars, OrderKind::Grevlex).unwrap()
    }

    fn mono_ideal(r: &RingRef<PrimeField>, ms: &[&[u32]]) -> Ideal<PrimeField> {
        let ms: Vec<Monomial> = ms.iter().map(|e| r.monomial(e).unwrap()).collect();
        Ideal::from_monomials(r, &ms)
    }

    #[test]
    fn thick_line_invariants() {
        let r = ring(3, &["x", "y", "z"]);
        let i = mono_ideal(&r, &[&[4, 0, 0], &[3, 1, 0], &[2, 2, 1], &[1, 3, 0], &[0, 4, 0]]);
        assert_eq!(i.krull_dimension().unwrap(), 1);
        assert_eq!(i.mu(), 5);
        assert_eq!(i.delta(), 5);
        let rad = i.monomial_radical().unwrap();
        assert_eq!(rad.display_generators(), vec!["x", "y"]);
        let sq = i.power(2).unwrap();
        let m8 = Ideal::new(&r, vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)]).unwrap().power(8).unwrap();
        assert!(sq.same_as(&m8).unwrap());
    }

    #[test]
    fn minimal_generators_ignore_redundancy() {
        let r = ring(5, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x * &x) + &(&y * &y);
        let g = &x * &y;
        let i = Ideal::new(&r, vec![&f * &x, f.clone(), g.clone(), &g + &f]).unwrap();
        assert_eq!(i.mu(), 2);
        assert_eq!(i.delta(), 2);
    }

    #[test]
    fn frobenius_power_needs_characteristic() {
        let r = PolyRing::new(crate::algebra::Rationals, &["x"], OrderKind::Grevlex).unwrap();
        let i = Ideal::maximal(&r);
        assert!(matches!(i.frobenius_power(1), Err(Error::Characteristic { .. })));
    }
}
