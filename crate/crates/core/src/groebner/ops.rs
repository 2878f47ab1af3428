//! Intersections, colons and saturations of ideals given by generators.

use super::basis::GroebnerBasis;
use crate::algebra::poly::same_ring;
use crate::algebra::{Field, Monomial, Polynomial, RingRef};
use crate::error::{Error, Result};

fn check_ring<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> Result<()> {
    if gens.iter().all(|g| same_ring(g.ring(), ring)) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

fn all_monomial<F: Field>(gens: &[Polynomial<F>]) -> bool {
    gens.iter().all(|g| g.is_zero() || g.is_monomial())
}

/// Drop repeats and monomials divisible by another; sorted decreasingly.
pub fn minimalize_monomials<F: Field>(ring: &RingRef<F>, monos: &[Monomial]) -> Vec<Monomial> {
    let mut ms: Vec<Monomial> = monos.to_vec();
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp_mono(b, a)));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| ring.cmp_mono(b, a));
    out
}

fn leading_monos<F: Field>(gens: &[Polynomial<F>]) -> Vec<Monomial> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| *g.leading_monomial().unwrap()).collect()
}

fn monos_to_polys<F: Field>(ring: &RingRef<F>, ms: Vec<Monomial>) -> Vec<Polynomial<F>> {
    ms.into_iter().map(|m| Polynomial::monomial(ring, m)).collect()
}

/// Generators of `I ∩ J`.
pub fn intersect<F: Field>(ring: &RingRef<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    check_ring(ring, a)?;
    check_ring(ring, b)?;
    if all_monomial(a) && all_monomial(b) {
        let (ma, mb) = (leading_monos(a), leading_monos(b));
        let lcms: Vec<Monomial> = ma.iter().flat_map(|x| mb.iter().map(move |y| x.lcm(y))).collect();
        return Ok(monos_to_polys(ring, minimalize_monomials(ring, &lcms)));
    }
    intersect_by_elimination(ring, a, b)
}

/// `I ∩ J` as the `t`-free part of `tI + (1-t)J`.
pub fn intersect_by_elimination<F: Field>(
    ring: &RingRef<F>,
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
) -> Result<Vec<Polynomial<F>>> {
    let n = ring.nvars();
    let big = ring.with_elimination_variable("_t")?;
    let t = Polynomial::var(&big, n);
    let one_minus_t = Polynomial::one(&big).try_sub(&t)?;
    let mut gens = Vec::new();
    for f in a {
        gens.push(t.try_mul(&f.in_ring(&big)?)?);
    }
    for g in b {
        gens.push(one_minus_t.try_mul(&g.in_ring(&big)?)?);
    }
    let gb = GroebnerBasis::compute(&big, &gens)?;
    let mut out = Vec::new();
    for p in gb.generators() {
        if p.terms().iter().all(|(m, _)| m.exp(n) == 0) {
            let terms = p.terms().iter().map(|(m, c)| (m.with_nvars(n), c.clone())).collect();
            out.push(Polynomial::from_terms(ring, terms));
        }
    }
    Ok(reduced_generators(ring, &out)?)
}

/// Reduced Gröbner basis as a generator list (empty for the zero ideal).
pub fn reduced_generators<F: Field>(ring: &RingRef<F>, gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    Ok(GroebnerBasis::compute(ring, gens)?.generators().to_vec())
}

/// Generators of `(I : g)` for a single nonzero polynomial `g`.
pub fn colon_element<F: Field>(ring: &RingRef<F>, a: &[Polynomial<F>], g: &Polynomial<F>) -> Result<Vec<Polynomial<F>>> {
    check_ring(ring, a)?;
    check_ring(ring, std::slice::from_ref(g))?;
    if g.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if g.is_constant() {
        return reduced_generators(ring, a);
    }
    if all_monomial(a) && g.is_monomial() {
        let m = g.leading_monomial().unwrap();
        let qs: Vec<Monomial> = leading_monos(a).iter().map(|x| x.saturating_div(m)).collect();
        return Ok(monos_to_polys(ring, minimalize_monomials(ring, &qs)));
    }
    let meet = intersect(ring, a, std::slice::from_ref(g))?;
    let mut out = Vec::with_capacity(meet.len());
    for h in &meet {
        out.push(h.try_div_exact(g)?);
    }
    reduced_generators(ring, &out)
}

/// Generators of `(I : J)`.
pub fn colon<F: Field>(ring: &RingRef<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    check_ring(ring, a)?;
    check_ring(ring, b)?;
    let b: Vec<&Polynomial<F>> = b.iter().filter(|g| !g.is_zero()).collect();
    if b.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut acc: Option<Vec<Polynomial<F>>> = None;
    for g in b {
        let part = colon_element(ring, a, g)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(ring, &prev, &part)?,
        });
    }
    reduced_generators(ring, &acc.unwrap())
}

/// `(I : J^∞)`, iterating colons until the Gröbner basis stabilizes.
pub fn saturation<F: Field>(ring: &RingRef<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>> {
    let mut cur = reduced_generators(ring, a)?;
    loop {
        let next = colon(ring, &cur, b)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}
