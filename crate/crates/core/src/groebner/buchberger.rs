//! Buchberger's algorithm over free modules: sugar-driven normal strategy,
//! Gebauer–Möller pair elimination, reduced output.

use std::cmp::Ordering;

use super::module::{FreeModule, Term, Vector};
use crate::algebra::{Field, Monomial};

/// Reduced Gröbner basis plus bookkeeping about which inputs were needed.
#[derive(Clone, Debug)]
pub struct GbResult<F: Field> {
    /// Reduced basis, sorted by decreasing leading term.
    pub basis: Vec<Vector<F>>,
    /// Indices of inputs that did not reduce to zero when processed. For
    /// homogeneous input this is a minimal generating set.
    pub minimal_inputs: Vec<usize>,
}

struct Elem {
    lm: Monomial,
    comp: u32,
    sugar: i64,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: i64,
}

/// Divisor lookup over a growing list of monic vectors.
pub(crate) struct Reducer<'a, F: Field> {
    module: &'a FreeModule<F>,
    elems: Vec<(Monomial, u32, u32, Vector<F>)>,
    by_comp: Vec<Vec<usize>>,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub(crate) fn new(module: &'a FreeModule<F>) -> Self {
        Reducer { module, elems: Vec::new(), by_comp: vec![Vec::new(); module.rank()] }
    }

    pub(crate) fn from_basis(module: &'a FreeModule<F>, basis: &[Vector<F>]) -> Self {
        let mut r = Self::new(module);
        for g in basis {
            r.push(g.clone());
        }
        r
    }

    /// Register a nonzero reducer; returns its index.
    pub(crate) fn push(&mut self, v: Vector<F>) -> usize {
        let lt = v.lead().expect("nonzero reducer");
        let (lm, comp) = (lt.mono, lt.comp);
        let idx = self.elems.len();
        self.elems.push((lm, comp, lm.support(), v));
        self.by_comp[comp as usize].push(idx);
        idx
    }

    pub(crate) fn deactivate(&mut self, idx: usize) {
        let comp = self.elems[idx].1 as usize;
        self.by_comp[comp].retain(|&k| k != idx);
    }

    pub(crate) fn active(&self) -> impl Iterator<Item = usize> + '_ {
        let mut all: Vec<usize> = self.by_comp.iter().flatten().copied().collect();
        all.sort_unstable();
        all.into_iter()
    }

    pub(crate) fn get(&self, idx: usize) -> &Vector<F> {
        &self.elems[idx].3
    }

    fn find(&self, m: &Monomial, comp: u32, skip: Option<usize>) -> Option<usize> {
        let sup = m.support();
        self.by_comp[comp as usize].iter().copied().find(|&k| {
            let (lm, _, s, _) = &self.elems[k];
            Some(k) != skip && s & !sup == 0 && lm.divides(m)
        })
    }

    /// Full reduction. When `quotients` is given, the multiple of each
    /// reducer that was subtracted is accumulated there (as module vectors
    /// in a rank-one ring module: terms with comp 0).
    pub(crate) fn reduce(
        &self,
        v: &Vector<F>,
        skip: Option<usize>,
        mut quotients: Option<&mut Vec<Vec<(Monomial, F::Elem)>>>,
    ) -> Vector<F> {
        let module = self.module;
        let field = module.field();
        let mut rem: Vec<Term<F>> = Vec::new();
        let mut p: Vec<Term<F>> = v.terms.clone();
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            match self.find(&t.mono, t.comp, skip) {
                None => {
                    rem.push(t.clone());
                    start += 1;
                }
                Some(k) => {
                    let (lm, _, _, g) = &self.elems[k];
                    let q = t.mono.div_unchecked(lm);
                    let lc = &g.terms[0].coef;
                    let c = if field.is_one(lc) { t.coef.clone() } else { field.div(&t.coef, lc).expect("nonzero") };
                    if let Some(qs) = quotients.as_deref_mut() {
                        if qs.len() <= k {
                            qs.resize(k + 1, Vec::new());
                        }
                        qs[k].push((q, c.clone()));
                    }
                    p = module.merge(&p[start + 1..], &g.terms[1..], &c, Some(&q), true).terms;
                    start = 0;
                }
            }
        }
        Vector { terms: rem }
    }
}

fn pair_cmp<F: Field>(module: &FreeModule<F>, a: &Pair, b: &Pair) -> Ordering {
    a.sugar
        .cmp(&b.sugar)
        .then_with(|| module.cmp(&a.lcm, a.comp, &b.lcm, b.comp))
        .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
}

/// Reduced Gröbner basis of the submodule generated by `inputs`.
pub fn groebner<F: Field>(module: &FreeModule<F>, inputs: &[Vector<F>]) -> GbResult<F> {
    let field = module.field();
    // inputs ordered by sugar, then leading term, then position
    let mut pending: Vec<(i64, usize)> = inputs
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (module.degree(v).unwrap(), k))
        .collect();
    pending.sort_by(|a, b| {
        a.0.cmp(&b.0).then_with(|| {
            let (la, lb) = (inputs[a.1].lead().unwrap(), inputs[b.1].lead().unwrap());
            module.cmp_terms(la, lb).then(a.1.cmp(&b.1))
        })
    });
    let mut pending = pending.into_iter().peekable();

    let mut elems: Vec<Elem> = Vec::new();
    let mut reducer = Reducer::new(module);
    let mut pairs: Vec<Pair> = Vec::new();
    let mut minimal_inputs = Vec::new();
    let rank_one = module.rank() == 1;

    loop {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| pair_cmp(module, a.1, b.1))
            .map(|(k, p)| (k, p.sugar));
        let take_pair = match (best, pending.peek()) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((_, s)), Some((si, _))) => s <= *si,
        };
        let (h, sugar, input) = if take_pair {
            let pair = pairs.swap_remove(best.unwrap().0);
            let (gi, gj) = (&elems[pair.i], &elems[pair.j]);
            let qi = pair.lcm.div_unchecked(&gi.lm);
            let qj = pair.lcm.div_unchecked(&gj.lm);
            let (vi, vj) = (reducer.get(pair.i), reducer.get(pair.j));
            let a = module.mul_term(&Vector { terms: vi.terms[1..].to_vec() }, &qi, &field.one());
            let s = module.merge(&a.terms, &vj.terms[1..], &field.one(), Some(&qj), true);
            (reducer.reduce(&s, None, None), pair.sugar, None)
        } else {
            let (sugar, k) = pending.next().unwrap();
            (reducer.reduce(&inputs[k], None, None), sugar, Some(k))
        };
        if h.is_zero() {
            continue;
        }
        if let Some(k) = input {
            minimal_inputs.push(k);
        }
        let h = module.monic(&h);
        let sugar = sugar.max(module.degree(&h).unwrap());
        let lt = h.lead().unwrap().clone();
        let hidx = elems.len();

        // Gebauer–Möller update
        let active: Vec<usize> = reducer.active().filter(|&g| elems[g].comp == lt.comp).collect();
        let new_pairs: Vec<Pair> = active
            .iter()
            .map(|&g| {
                let e = &elems[g];
                let lcm = e.lm.lcm(&lt.mono);
                let s = (e.sugar + lcm.degree() as i64 - e.lm.degree() as i64)
                    .max(sugar + lcm.degree() as i64 - lt.mono.degree() as i64);
                Pair { i: g, j: hidx, lcm, comp: lt.comp, sugar: s }
            })
            .collect();
        let coprime = |p: &Pair| rank_one && elems[p.i].lm.is_coprime(&lt.mono);
        let mut keep = vec![true; new_pairs.len()];
        for a in 0..new_pairs.len() {
            if coprime(&new_pairs[a]) {
                continue;
            }
            // chain criterion among the new pairs: a strictly smaller or an
            // earlier equal lcm makes this pair redundant
            let dominated = (0..new_pairs.len()).any(|b| {
                b != a
                    && keep[b]
                    && new_pairs[b].lcm.divides(&new_pairs[a].lcm)
                    && (new_pairs[b].lcm != new_pairs[a].lcm || b < a)
            });
            if dominated {
                keep[a] = false;
            }
        }
        pairs.retain(|p| {
            p.comp != lt.comp
                || !lt.mono.divides(&p.lcm)
                || elems[p.i].lm.lcm(&lt.mono) == p.lcm
                || elems[p.j].lm.lcm(&lt.mono) == p.lcm
        });
        for (p, k) in new_pairs.into_iter().zip(keep) {
            if k && !coprime(&p) {
                pairs.push(p);
            }
        }
        for &g in &active {
            if lt.mono.divides(&elems[g].lm) {
                reducer.deactivate(g);
            }
        }
        elems.push(Elem { lm: lt.mono, comp: lt.comp, sugar });
        let ridx = reducer.push(h);
        debug_assert_eq!(ridx, hidx);
    }

    // interreduce the surviving elements
    let active: Vec<usize> = reducer.active().collect();
    let mut basis: Vec<Vector<F>> = active
        .iter()
        .map(|&k| {
            let v = reducer.get(k);
            let lead = Vector { terms: vec![v.terms[0].clone()] };
            let tail = reducer.reduce(&Vector { terms: v.terms[1..].to_vec() }, Some(k), None);
            module.add(&lead, &tail)
        })
        .collect();
    sort_basis(module, &mut basis);
    minimal_inputs.sort_unstable();
    GbResult { basis, minimal_inputs }
}

/// Sort by decreasing leading term.
pub fn sort_basis<F: Field>(module: &FreeModule<F>, basis: &mut [Vector<F>]) {
    basis.sort_by(|a, b| module.cmp_terms(b.lead().unwrap(), a.lead().unwrap()));
}

/// Normal form of `v` with respect to `basis` (divisors tried in order).
pub fn normal_form<F: Field>(module: &FreeModule<F>, v: &Vector<F>, basis: &[Vector<F>]) -> Vector<F> {
    Reducer::from_basis(module, basis).reduce(v, None, None)
}

/// Division with quotients: `v = Σ q_k basis[k] + remainder`.
#[allow(clippy::type_complexity)]
pub fn divide<F: Field>(
    module: &FreeModule<F>,
    v: &Vector<F>,
    basis: &[Vector<F>],
) -> (Vec<Vec<(Monomial, F::Elem)>>, Vector<F>) {
    let red = Reducer::from_basis(module, basis);
    let mut qs = vec![Vec::new(); basis.len()];
    let rem = red.reduce(v, None, Some(&mut qs));
    (qs, rem)
}
