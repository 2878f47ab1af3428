//! Graded free modules `S^r` with module monomial orders, and their elements.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::poly::same_ring;
use crate::algebra::{Field, Monomial, Polynomial, RingRef};
use crate::error::{Error, Result};

/// One term `c * m * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<F: Field> {
    pub mono: Monomial,
    pub comp: u32,
    pub coef: F::Elem,
}

/// An element of a free module, terms strictly decreasing in the module
/// order of the [`FreeModule`] it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<F: Field> {
    pub terms: Vec<Term<F>>,
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Induced (Schreyer) order data: `m e_i` is compared as `m * lead_i` in
/// the previous module, ties broken by `rank`.
#[derive(Debug)]
pub struct SchreyerFrame<F: Field> {
    pub prev: Arc<FreeModule<F>>,
    pub leads: Vec<(Monomial, u32)>,
    pub rank: Vec<u32>,
}

/// A free module `S^r = ⊕ S(-degrees[c])`.
///
/// The default order compares block index (higher first), then weighted
/// degree `deg m + degrees[c]`, then the ring's term order, then component
/// index (lower first). Ideals use an ungraded rank-one module so that the
/// ring's own term order is used verbatim.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    ring: RingRef<F>,
    degrees: Vec<i32>,
    blocks: Vec<u8>,
    graded: bool,
    schreyer: Option<Arc<SchreyerFrame<F>>>,
}

impl<F: Field> FreeModule<F> {
    pub fn new(ring: &RingRef<F>, degrees: Vec<i32>) -> Self {
        let blocks = vec![0; degrees.len()];
        FreeModule { ring: ring.clone(), degrees, blocks, graded: true, schreyer: None }
    }

    /// Rank-one module ordered exactly by the ring's term order.
    pub fn ideal(ring: &RingRef<F>) -> Self {
        FreeModule { ring: ring.clone(), degrees: vec![0], blocks: vec![0], graded: false, schreyer: None }
    }

    /// `self ⊕ S^extra` with the new components in a lower block, so that any
    /// element with a nonzero term in the old components leads there.
    pub fn augmented(&self, extra_degrees: &[i32]) -> Self {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(extra_degrees);
        let mut blocks = vec![1u8; self.degrees.len()];
        blocks.extend(std::iter::repeat(0u8).take(extra_degrees.len()));
        FreeModule { ring: self.ring.clone(), degrees, blocks, graded: true, schreyer: None }
    }

    pub fn schreyer(frame: SchreyerFrame<F>, degrees: Vec<i32>) -> Self {
        let ring = frame.prev.ring.clone();
        let blocks = vec![0; degrees.len()];
        FreeModule { ring, degrees, blocks, graded: true, schreyer: Some(Arc::new(frame)) }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn is_rank_one_ideal(&self) -> bool {
        self.degrees.len() == 1 && self.schreyer.is_none()
    }

    pub fn schreyer_frame(&self) -> Option<&Arc<SchreyerFrame<F>>> {
        self.schreyer.as_ref()
    }

    /// Structural compatibility (same ring, rank and generator degrees).
    pub fn same_shape(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.degrees == other.degrees
    }

    pub fn term_degree(&self, m: &Monomial, comp: u32) -> i64 {
        m.degree() as i64 + self.degrees[comp as usize] as i64
    }

    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        if let Some(fr) = &self.schreyer {
            let (la, lac) = &fr.leads[ac as usize];
            let (lb, lbc) = &fr.leads[bc as usize];
            return fr
                .prev
                .cmp(&am.mul(la), *lac, &bm.mul(lb), *lbc)
                .then_with(|| fr.rank[bc as usize].cmp(&fr.rank[ac as usize]));
        }
        let (ai, bi) = (ac as usize, bc as usize);
        self.blocks[ai]
            .cmp(&self.blocks[bi])
            .then_with(|| {
                if self.graded {
                    self.term_degree(am, ac).cmp(&self.term_degree(bm, bc))
                } else {
                    Ordering::Equal
                }
            })
            .then_with(|| self.ring.cmp_mono(am, bm))
            .then_with(|| bc.cmp(&ac))
    }

    pub fn cmp_terms(&self, a: &Term<F>, b: &Term<F>) -> Ordering {
        self.cmp(&a.mono, a.comp, &b.mono, b.comp)
    }

    /// Sort, merge equal terms and drop zeros.
    pub fn normalize(&self, mut terms: Vec<Term<F>>) -> Vector<F> {
        let field = self.field();
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono && last.comp == t.comp {
                    last.coef = field.add(&last.coef, &t.coef);
                    continue;
                }
                if field.is_zero(&last.coef) {
                    out.pop();
                }
            }
            out.push(t);
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.coef) {
                out.pop();
            }
        }
        Vector { terms: out }
    }

    /// Basis vector `e_c`.
    pub fn basis_vector(&self, c: usize) -> Vector<F> {
        Vector { terms: vec![Term { mono: self.ring.one_monomial(), comp: c as u32, coef: self.field().one() }] }
    }

    /// Embed a polynomial as `f * e_comp`.
    pub fn from_poly(&self, f: &Polynomial<F>, comp: usize) -> Vector<F> {
        let terms = f.terms().iter().map(|(m, c)| Term { mono: *m, comp: comp as u32, coef: c.clone() }).collect();
        if self.is_rank_one_ideal() && !self.graded {
            // ring order and module order agree
            return Vector { terms };
        }
        self.normalize(terms)
    }

    /// Build from one polynomial per component.
    pub fn from_polys(&self, parts: &[Polynomial<F>]) -> Vector<F> {
        let mut terms = Vec::new();
        for (c, f) in parts.iter().enumerate() {
            for (m, a) in f.terms() {
                terms.push(Term { mono: *m, comp: c as u32, coef: a.clone() });
            }
        }
        self.normalize(terms)
    }

    /// Component `c` as a polynomial.
    pub fn component(&self, v: &Vector<F>, c: usize) -> Polynomial<F> {
        let terms =
            v.terms.iter().filter(|t| t.comp as usize == c).map(|t| (t.mono, t.coef.clone())).collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn to_polys(&self, v: &Vector<F>) -> Vec<Polynomial<F>> {
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); self.rank()];
        for t in &v.terms {
            parts[t.comp as usize].push((t.mono, t.coef.clone()));
        }
        parts.into_iter().map(|p| Polynomial::from_terms(&self.ring, p)).collect()
    }

    pub fn add(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.merge(&a.terms, &b.terms, &self.field().one(), None, false)
    }

    pub fn sub(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.merge(&a.terms, &b.terms, &self.field().one(), None, true)
    }

    pub fn neg(&self, a: &Vector<F>) -> Vector<F> {
        let f = self.field();
        Vector { terms: a.terms.iter().map(|t| Term { mono: t.mono, comp: t.comp, coef: f.neg(&t.coef) }).collect() }
    }

    pub fn scale(&self, a: &Vector<F>, c: &F::Elem) -> Vector<F> {
        let f = self.field();
        if f.is_zero(c) {
            return Vector::zero();
        }
        Vector { terms: a.terms.iter().map(|t| Term { mono: t.mono, comp: t.comp, coef: f.mul(&t.coef, c) }).collect() }
    }

    /// `c * m * a`; the order is multiplicative, so sortedness is kept.
    pub fn mul_term(&self, a: &Vector<F>, m: &Monomial, c: &F::Elem) -> Vector<F> {
        let f = self.field();
        if f.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coef: f.mul(&t.coef, c) })
                .collect(),
        }
    }

    /// `g * a` for a polynomial `g`.
    pub fn mul_poly(&self, g: &Polynomial<F>, a: &Vector<F>) -> Vector<F> {
        let mut acc = Vector::zero();
        for (m, c) in g.terms() {
            acc = self.merge(&acc.terms, &a.terms, c, Some(m), false);
        }
        acc
    }

    /// `a - c * m * b`.
    pub fn sub_mul(&self, a: &Vector<F>, c: &F::Elem, m: &Monomial, b: &Vector<F>) -> Vector<F> {
        self.merge(&a.terms, &b.terms, c, Some(m), true)
    }

    /// Merge `a ± c*m*b` where both inputs are sorted.
    pub(crate) fn merge(
        &self,
        a: &[Term<F>],
        b: &[Term<F>],
        c: &F::Elem,
        m: Option<&Monomial>,
        subtract: bool,
    ) -> Vector<F> {
        let f = self.field();
        if f.is_zero(c) || b.is_empty() {
            return Vector { terms: a.to_vec() };
        }
        let coef = if subtract { f.neg(c) } else { c.clone() };
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term<F>| Term {
            mono: match m {
                Some(mm) => t.mono.mul(mm),
                None => t.mono,
            },
            comp: t.comp,
            coef: f.mul(&t.coef, &coef),
        };
        let mut pending_b: Option<Term<F>> = b.first().map(scaled);
        while i < a.len() || pending_b.is_some() {
            let ord = match (&pending_b, a.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(tb), Some(ta)) => self.cmp_terms(ta, tb),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending_b.take().unwrap());
                    j += 1;
                    pending_b = b.get(j).map(scaled);
                }
                Ordering::Equal => {
                    let tb = pending_b.take().unwrap();
                    let s = f.add(&a[i].coef, &tb.coef);
                    if !f.is_zero(&s) {
                        out.push(Term { mono: tb.mono, comp: tb.comp, coef: s });
                    }
                    i += 1;
                    j += 1;
                    pending_b = b.get(j).map(scaled);
                }
            }
        }
        Vector { terms: out }
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self, a: &Vector<F>) -> Vector<F> {
        match a.lead() {
            None => a.clone(),
            Some(t) if self.field().is_one(&t.coef) => a.clone(),
            Some(t) => self.scale(a, &self.field().inv(&t.coef).expect("nonzero")),
        }
    }

    /// Largest weighted degree of a term.
    pub fn degree(&self, a: &Vector<F>) -> Option<i64> {
        a.terms.iter().map(|t| self.term_degree(&t.mono, t.comp)).max()
    }

    pub fn is_homogeneous(&self, a: &Vector<F>) -> bool {
        match a.terms.first() {
            None => true,
            Some(t0) => {
                let d = self.term_degree(&t0.mono, t0.comp);
                a.terms.iter().all(|t| self.term_degree(&t.mono, t.comp) == d)
            }
        }
    }

    /// `Σ_c a_c * images[c]`, the image of `a` under the map sending `e_c`
    /// to `images[c]` in `target`.
    pub fn apply(&self, target: &FreeModule<F>, images: &[Vector<F>], a: &Vector<F>) -> Vector<F> {
        let mut acc = Vector::zero();
        for t in &a.terms {
            let img = &images[t.comp as usize];
            acc = target.merge(&acc.terms, &img.terms, &t.coef, Some(&t.mono), false);
        }
        acc
    }

    /// Re-express `a` (sorted for `from`) in this module's order, shifting
    /// component indices by `offset`.
    pub fn import(&self, a: &Vector<F>, offset: u32) -> Vector<F> {
        let terms = a
            .terms
            .iter()
            .map(|t| Term { mono: t.mono, comp: t.comp + offset, coef: t.coef.clone() })
            .collect();
        self.normalize(terms)
    }

    /// Keep components in `range`, shifted down to start at zero.
    pub fn project(&self, a: &Vector<F>, start: u32, end: u32) -> Vector<F> {
        let terms = a
            .terms
            .iter()
            .filter(|t| t.comp >= start && t.comp < end)
            .map(|t| Term { mono: t.mono, comp: t.comp - start, coef: t.coef.clone() })
            .collect();
        self.normalize(terms)
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `(f_0, f_1, ...)` using canonical polynomial text.
    pub fn format(&self, a: &Vector<F>) -> String {
        let parts: Vec<String> = self.to_polys(a).iter().map(|p| p.to_canonical_string()).collect();
        format!("({})", parts.join(", "))
    }
}
