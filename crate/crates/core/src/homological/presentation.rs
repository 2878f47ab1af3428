//! Finitely presented graded modules `coker(R -> F)`.

use std::sync::OnceLock;

use super::hilbert::{monomial_numerator, HilbertSeries, Laurent};
use crate::algebra::{Field, Monomial, Polynomial, RingRef};
use crate::groebner::buchberger::Reducer;
use crate::groebner::{groebner, FreeModule, LiftingGb, Term, Vector};
use crate::ideal::Ideal;

/// The module `F / R` where `F = ⊕ S(-degrees[c])` and `R` is spanned by
/// homogeneous relations.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    module: FreeModule<F>,
    relations: Vec<Vector<F>>,
    gb: OnceLock<Vec<Vector<F>>>,
}

/// Result of [`Presentation::minimize`]: the pruned presentation, the
/// original generators that survive, and the image of every original
/// generator in the new one.
#[derive(Clone, Debug)]
pub struct Minimized<F: Field> {
    pub presentation: Presentation<F>,
    pub kept: Vec<usize>,
    pub projection: Vec<Vector<F>>,
}

impl<F: Field> Presentation<F> {
    pub fn new(module: FreeModule<F>, relations: Vec<Vector<F>>) -> Self {
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Presentation { module, relations, gb: OnceLock::new() }
    }

    /// The free module `⊕ S(-d)`.
    pub fn free(ring: &RingRef<F>, degrees: Vec<i32>) -> Self {
        Self::new(FreeModule::new(ring, degrees), Vec::new())
    }

    /// `S/I`.
    pub fn quotient(ideal: &Ideal<F>) -> Self {
        let module = FreeModule::new(ideal.ring(), vec![0]);
        let rels = ideal.gb().generators().iter().map(|g| module.from_poly(g, 0)).collect();
        Self::new(module, rels)
    }

    pub fn module(&self) -> &FreeModule<F> {
        &self.module
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.module.ring()
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn degrees(&self) -> &[i32] {
        self.module.degrees()
    }

    pub fn relations(&self) -> &[Vector<F>] {
        &self.relations
    }

    /// Gröbner basis of the relation module.
    pub fn gb(&self) -> &[Vector<F>] {
        self.gb.get_or_init(|| groebner(&self.module, &self.relations).basis)
    }

    /// Normal form modulo the relations.
    pub fn reduce(&self, v: &Vector<F>) -> Vector<F> {
        Reducer::from_basis(&self.module, self.gb()).reduce(v, None, None)
    }

    pub fn is_zero_element(&self, v: &Vector<F>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        let n = self.ring().nvars();
        let mut lead: Vec<Vec<Monomial>> = vec![Vec::new(); self.rank()];
        for g in self.gb() {
            let t = g.lead().unwrap();
            lead[t.comp as usize].push(t.mono);
        }
        let mut num = Laurent::zero();
        for (c, monos) in lead.iter().enumerate() {
            num = num.add(&monomial_numerator(monos).shift(self.degrees()[c] as i64));
        }
        HilbertSeries { numerator: num, nvars: n }
    }

    /// `dim_k M_d`.
    pub fn graded_piece_dim(&self, d: i64) -> usize {
        self.hilbert_series().dim_in_degree(d) as usize
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    /// Krull dimension of the module, `None` when it is zero.
    pub fn krull_dimension(&self) -> Option<usize> {
        self.hilbert_series().krull_dimension()
    }

    /// Lowest degree with `M_d ≠ 0`.
    pub fn initial_degree(&self) -> Option<i64> {
        let (lo, hi) = (*self.degrees().iter().min()?, *self.degrees().iter().max()?);
        let hs = self.hilbert_series();
        (lo as i64..=hi as i64).find(|&d| hs.dim_in_degree(d) > 0)
    }

    /// The twist `M(k)`, with `M(k)_d = M_{k+d}`.
    pub fn twist(&self, k: i32) -> Presentation<F> {
        let degrees: Vec<i32> = self.degrees().iter().map(|g| g - k).collect();
        let module = FreeModule::new(self.ring(), degrees);
        let rels = self.relations.iter().map(|r| module.import(r, 0)).collect();
        Presentation::new(module, rels)
    }

    /// Replace `e_c` by `s` (which must not involve `e_c`) inside `v`.
    fn substitute(module: &FreeModule<F>, v: &Vector<F>, c: u32, s: &Vector<F>) -> Vector<F> {
        if !v.terms.iter().any(|t| t.comp == c) {
            return v.clone();
        }
        let mut rest = Vec::new();
        let mut part = Vec::new();
        for t in &v.terms {
            if t.comp == c {
                part.push((t.mono, t.coef.clone()));
            } else {
                rest.push(t.clone());
            }
        }
        let f = Polynomial::from_terms(module.ring(), part);
        module.add(&Vector { terms: rest }, &module.mul_poly(&f, s))
    }

    /// Remove generators that a relation expresses through the others
    /// (relations with a unit entry), then keep a minimal set of relations.
    pub fn minimize(&self) -> Minimized<F> {
        let module = &self.module;
        let field = module.field();
        let k = self.rank();
        let mut rels: Vec<Vector<F>> = self.relations.clone();
        let mut images: Vec<Vector<F>> = (0..k).map(|c| module.basis_vector(c)).collect();
        let mut alive = vec![true; k];
        loop {
            let hit = rels.iter().enumerate().find_map(|(j, r)| {
                r.terms.iter().find(|t| t.mono.is_one()).map(|t| (j, t.comp, t.coef.clone()))
            });
            let Some((j, c, a)) = hit else { break };
            let r = rels.remove(j);
            let inv = field.inv(&a).expect("unit entry");
            let s = module.sub(&module.basis_vector(c as usize), &module.scale(&r, &inv));
            for v in rels.iter_mut().chain(images.iter_mut()) {
                *v = Self::substitute(module, v, c, &s);
            }
            rels.retain(|v| !v.is_zero());
            alive[c as usize] = false;
        }
        let kept: Vec<usize> = (0..k).filter(|&c| alive[c]).collect();
        let mut new_index = vec![u32::MAX; k];
        for (i, &c) in kept.iter().enumerate() {
            new_index[c] = i as u32;
        }
        let new_module = FreeModule::new(self.ring(), kept.iter().map(|&c| self.degrees()[c]).collect());
        let remap = |v: &Vector<F>| -> Vector<F> {
            let terms = v
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, comp: new_index[t.comp as usize], coef: t.coef.clone() })
                .collect();
            new_module.normalize(terms)
        };
        let rels: Vec<Vector<F>> = rels.iter().map(remap).collect();
        let projection: Vec<Vector<F>> = images.iter().map(remap).collect();
        let res = groebner(&new_module, &rels);
        let minimal: Vec<Vector<F>> = res.minimal_inputs.iter().map(|&i| rels[i].clone()).collect();
        let presentation = Presentation::new(new_module, minimal);
        let _ = presentation.gb.set(res.basis);
        Minimized { presentation, kept, projection }
    }

    /// Generators of `(R :_F m)`, elements of `F` killed by every variable
    /// modulo `R`.
    pub fn colon_maximal(&self) -> Vec<Vector<F>> {
        let ring = self.ring();
        let (n, k) = (ring.nvars(), self.rank());
        if k == 0 {
            return Vec::new();
        }
        let mut tdeg = Vec::with_capacity(n * k);
        for _ in 0..n {
            tdeg.extend(self.degrees().iter().map(|g| g - 1));
        }
        let target = FreeModule::new(ring, tdeg);
        let mut sdeg: Vec<i32> = self.degrees().to_vec();
        let mut cols: Vec<Vector<F>> = Vec::new();
        for c in 0..k {
            let terms = (0..n)
                .map(|v| Term { mono: ring.var_monomial(v), comp: (v * k + c) as u32, coef: self.module.field().one() })
                .collect();
            cols.push(target.normalize(terms));
        }
        for v in 0..n {
            for r in self.gb() {
                sdeg.push(self.module.degree(r).unwrap() as i32 - 1);
                cols.push(target.import(r, (v * k) as u32));
            }
        }
        let source = FreeModule::new(ring, sdeg);
        let lg = LiftingGb::new(&target, &source, &cols);
        lg.minimal_kernel()
            .iter()
            .map(|w| self.module.project(w, 0, k as u32))
            .filter(|w| !w.is_zero())
            .collect()
    }

    /// Degrees, with multiplicity, of a basis of the socle `(0 :_M m)`.
    pub fn socle_degrees(&self) -> Vec<i64> {
        let colon = self.colon_maximal();
        let mut degs: Vec<i64> = colon.iter().map(|w| self.module.degree(w).unwrap()).collect();
        degs.sort_unstable();
        degs.dedup();
        let mut bigger = self.relations.clone();
        bigger.extend(colon);
        let quotient = Presentation::new(self.module.clone(), bigger);
        let (h, hq) = (self.hilbert_series(), quotient.hilbert_series());
        let mut out = Vec::new();
        for d in degs {
            let m = h.dim_in_degree(d) - hq.dim_in_degree(d);
            out.extend(std::iter::repeat(d).take(m as usize));
        }
        out
    }

    /// `m M = 0`, checked generator by generator.
    pub fn annihilated_by_maximal(&self) -> bool {
        let ring = self.ring();
        (0..self.rank()).all(|c| {
            (0..ring.nvars()).all(|v| {
                let e = Vector {
                    terms: vec![Term { mono: ring.var_monomial(v), comp: c as u32, coef: self.module.field().one() }],
                };
                self.is_zero_element(&e)
            })
        })
    }

    /// `R : m^∞` as a presentation of `F / (R : m^∞)`.
    pub fn saturate(&self) -> Presentation<F> {
        let mut cur = Presentation::new(self.module.clone(), self.gb().to_vec());
        loop {
            let mut rels = cur.gb().to_vec();
            rels.extend(cur.colon_maximal());
            let next = Presentation::new(self.module.clone(), rels);
            if next.gb() == cur.gb() {
                return cur;
            }
            cur = Presentation::new(self.module.clone(), next.gb().to_vec());
        }
    }

    /// Hilbert polynomial of the `m`-torsion submodule `H^0_m(M)` as a
    /// Laurent polynomial (it has finite length).
    pub fn torsion_hilbert(&self) -> Laurent {
        let sat = self.saturate();
        let diff = self.hilbert_series().sub(&sat.hilbert_series());
        diff.finite_length_polynomial().expect("torsion has finite length")
    }

    /// Generator degrees and relations as canonical strings.
    pub fn describe(&self) -> (Vec<i32>, Vec<String>) {
        (self.degrees().to_vec(), self.relations.iter().map(|r| self.module.format(r)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, PrimeField};

    fn ring() -> RingRef<PrimeField> {
        PolyRing::new(PrimeField::new(5).unwrap(), &["x", "y"], OrderKind::Grevlex).unwrap()
    }

    #[test]
    fn artinian_quotient() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let i = Ideal::new(&r, vec![&x * &x, &y * &y]).unwrap();
        let m = Presentation::quotient(&i);
        assert_eq!(m.graded_piece_dim(2), 1);
        assert_eq!(m.socle_degrees(), vec![2]);
        assert_eq!(m.krull_dimension(), Some(0));
        let free = Presentation::free(&r, vec![2]);
        assert_eq!(free.graded_piece_dim(2), 1);
        assert_eq!(free.graded_piece_dim(1), 0);
        let line = Presentation::quotient(&Ideal::new(&r, vec![x.clone()]).unwrap());
        assert!(line.socle_degrees().is_empty());
    }

    #[test]
    fn pruning_removes_unit_relations() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let module = FreeModule::new(&r, vec![0, 1]);
        // e1 = x e0, and y e1 = 0: the module is S/(xy)
        let rels = vec![
            module.from_polys(&[x.clone(), Polynomial::constant(&r, 4)]),
            module.from_polys(&[Polynomial::zero(&r), y.clone()]),
        ];
        let p = Presentation::new(module, rels);
        let m = p.minimize();
        assert_eq!(m.kept, vec![0]);
        assert_eq!(m.presentation.describe().1, vec!["(x*y)"]);
        assert_eq!(m.presentation.module().format(&m.projection[1]), "(x)");
        assert_eq!(m.presentation.torsion_hilbert(), Laurent::zero());
    }
}
