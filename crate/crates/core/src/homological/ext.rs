//! `Ext^j_S(S/I, S)` from the dual of a minimal resolution, and the maps
//! induced by surjections `S/I_small -> S/I_big`.

use super::presentation::Presentation;
use super::resolution::FreeResolution;
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::groebner::{FreeModule, LiftingGb, Term, Vector};

/// Columns of `d_i^T : F_{i-1}^* -> F_i^*`, indexed by generators of `F_{i-1}`.
fn transpose<F: Field>(cols: &[Vector<F>], target_rank: usize, target: &FreeModule<F>) -> Vec<Vector<F>> {
    let mut out: Vec<Vec<Term<F>>> = vec![Vec::new(); target_rank];
    for (a, col) in cols.iter().enumerate() {
        for t in &col.terms {
            out[t.comp as usize].push(Term { mono: t.mono, comp: a as u32, coef: t.coef.clone() });
        }
    }
    out.into_iter().map(|terms| target.normalize(terms)).collect()
}

/// `F_i^* = ⊕ S(d)` for `F_i = ⊕ S(-d)`.
pub fn dual_module<F: Field>(res: &FreeResolution<F>, i: usize) -> FreeModule<F> {
    FreeModule::new(res.ring(), res.twists(i).iter().map(|d| -d).collect())
}

/// `Ext^j(S/I, S)` presented on a minimal set of cycles.
#[derive(Clone, Debug)]
pub struct ExtModule<F: Field> {
    j: usize,
    presentation: Presentation<F>,
    dual: FreeModule<F>,
    cycles: Vec<Vector<F>>,
    cycle_lift: Option<LiftingGb<F>>,
    projection: Vec<Vector<F>>,
    kept: Vec<usize>,
}

impl<F: Field> ExtModule<F> {
    pub fn compute(res: &FreeResolution<F>, j: usize) -> Result<Self> {
        let ring = res.ring();
        let dual = dual_module(res, j);
        let empty = |dual: FreeModule<F>| ExtModule {
            j,
            presentation: Presentation::free(ring, Vec::new()),
            dual,
            cycles: Vec::new(),
            cycle_lift: None,
            projection: Vec::new(),
            kept: Vec::new(),
        };
        if j > res.length() {
            return Ok(empty(dual));
        }
        // cycles: kernel of d_{j+1}^T
        let cycles: Vec<Vector<F>> = if j < res.length() {
            let next = dual_module(res, j + 1);
            let cols = transpose(res.differential(j + 1), res.rank(j), &next);
            LiftingGb::new(&next, &dual, &cols).minimal_kernel()
        } else {
            (0..dual.rank()).map(|c| dual.basis_vector(c)).collect()
        };
        if cycles.is_empty() {
            return Ok(empty(dual));
        }
        let zmod = FreeModule::new(ring, cycles.iter().map(|z| dual.degree(z).unwrap() as i32).collect());
        let zlift = LiftingGb::new(&dual, &zmod, &cycles);
        let mut rels = zlift.minimal_kernel();
        if j >= 1 {
            for b in transpose(res.differential(j), res.rank(j - 1), &dual) {
                if b.is_zero() {
                    continue;
                }
                let r = zlift
                    .lift(&b)
                    .ok_or_else(|| Error::Internal(format!("boundary not a cycle in Ext^{j}")))?;
                rels.push(r);
            }
        }
        let min = Presentation::new(zmod, rels).minimize();
        Ok(ExtModule {
            j,
            presentation: min.presentation,
            dual,
            cycles,
            cycle_lift: Some(zlift),
            projection: min.projection,
            kept: min.kept,
        })
    }

    pub fn index(&self) -> usize {
        self.j
    }

    pub fn presentation(&self) -> &Presentation<F> {
        &self.presentation
    }

    /// `F_j^*`, the module the cycles live in.
    pub fn dual(&self) -> &FreeModule<F> {
        &self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.presentation.rank() == 0 || self.presentation.is_zero()
    }

    /// The cycle represented by presentation generator `c`.
    pub fn generator_cycle(&self, c: usize) -> &Vector<F> {
        &self.cycles[self.kept[c]]
    }

    /// Class of a cycle of `F_j^*` in the presentation, in normal form.
    pub fn class_of(&self, w: &Vector<F>) -> Result<Vector<F>> {
        if w.is_zero() {
            return Ok(Vector::zero());
        }
        let lg = self.cycle_lift.as_ref().ok_or_else(|| Error::Internal("nonzero cycle in zero Ext".into()))?;
        let coords = lg.lift(w).ok_or_else(|| Error::Internal(format!("element is not a cycle of Ext^{}", self.j)))?;
        let img = lg.source().apply(self.presentation.module(), &self.projection, &coords);
        Ok(self.presentation.reduce(&img))
    }
}

/// A chain map between resolutions lifting the identity of `S`.
#[derive(Clone, Debug)]
pub struct ChainMap<F: Field> {
    maps: Vec<Vec<Vector<F>>>,
}

impl<F: Field> ChainMap<F> {
    /// Lift `S/I_small -> S/I_big` through levels `0..=upto`. The first
    /// level fails exactly when `I_small ⊄ I_big`.
    pub fn lift(small: &FreeResolution<F>, big: &FreeResolution<F>, upto: usize) -> Result<Self> {
        let g0 = big.module(0).unwrap();
        let mut maps = vec![vec![g0.basis_vector(0)]];
        for i in 1..=upto.min(small.length()) {
            let (src, tgt) = (small.module(i - 1).unwrap(), big.module(i - 1).unwrap());
            let mut level = Vec::with_capacity(small.rank(i));
            for col in small.differential(i) {
                let u = src.apply(tgt, &maps[i - 1], col);
                if u.is_zero() {
                    level.push(Vector::zero());
                    continue;
                }
                let lifted = big.lifting(i).and_then(|lg| lg.lift(&u));
                match lifted {
                    Some(v) => level.push(v),
                    None if i == 1 => {
                        let f = tgt.format(&u);
                        return Err(Error::ContainmentFails(format!("generator {f} is not in the larger ideal")));
                    }
                    None => return Err(Error::Internal(format!("chain map does not lift at level {i}"))),
                }
            }
            maps.push(level);
        }
        Ok(ChainMap { maps })
    }

    /// Columns of `φ_i : F_i -> G_i`.
    pub fn level(&self, i: usize) -> &[Vector<F>] {
        self.maps.get(i).map_or(&[], |v| v.as_slice())
    }

    /// `φ_j^T : G_j^* -> F_j^*`, columns indexed by generators of `G_j`.
    pub fn dual_at(&self, small: &FreeResolution<F>, big: &FreeResolution<F>, j: usize) -> Vec<Vector<F>> {
        let fj = dual_module(small, j);
        transpose(self.level(j), big.rank(j), &fj)
    }
}

/// The map `Ext^j(S/I_big, S) -> Ext^j(S/I_small, S)` and its kernel.
#[derive(Clone, Debug)]
pub struct ExtComparison<F: Field> {
    pub j: usize,
    /// Image of each generator of the source presentation, in normal form.
    pub columns: Vec<Vector<F>>,
    /// Kernel as a presentation (generators are kernel elements of the source).
    pub kernel: Presentation<F>,
    /// Kernel generators as elements of the source presentation's free module.
    pub kernel_generators: Vec<Vector<F>>,
}

impl<F: Field> ExtComparison<F> {
    pub fn compute(
        small: &FreeResolution<F>,
        big: &FreeResolution<F>,
        chain: &ChainMap<F>,
        ext_small: &ExtModule<F>,
        ext_big: &ExtModule<F>,
    ) -> Result<Self> {
        let j = ext_big.index();
        let ring = small.ring();
        let a_pres = ext_big.presentation();
        let b_pres = ext_small.presentation();
        let a = a_pres.rank();
        if a == 0 {
            return Ok(ExtComparison {
                j,
                columns: Vec::new(),
                kernel: Presentation::free(ring, Vec::new()),
                kernel_generators: Vec::new(),
            });
        }
        let dual_map = chain.dual_at(small, big, j);
        let mut columns = Vec::with_capacity(a);
        for c in 0..a {
            let z = ext_big.generator_cycle(c);
            let img = ext_big.dual().apply(ext_small.dual(), &dual_map, z);
            columns.push(ext_small.class_of(&img)?);
        }
        // Pre = {u : Φ(u) ∈ R_B}; kernel = (Pre + R_A) / R_A
        let b_rels = b_pres.gb();
        let mut sdeg: Vec<i32> = a_pres.degrees().to_vec();
        sdeg.extend(b_rels.iter().map(|r| b_pres.module().degree(r).unwrap() as i32));
        let mut cols = columns.clone();
        cols.extend(b_rels.iter().cloned());
        let source = FreeModule::new(ring, sdeg);
        let pre: Vec<Vector<F>> = if b_pres.rank() == 0 {
            (0..a).map(|c| a_pres.module().basis_vector(c)).collect()
        } else {
            LiftingGb::new(b_pres.module(), &source, &cols)
                .minimal_kernel()
                .iter()
                .map(|w| a_pres.module().project(w, 0, a as u32))
                .collect()
        };
        let kernel_generators: Vec<Vector<F>> =
            pre.into_iter().map(|p| a_pres.reduce(&p)).filter(|p| !p.is_zero()).collect();
        let kernel = if kernel_generators.is_empty() {
            Presentation::free(ring, Vec::new())
        } else {
            let gmod = FreeModule::new(
                ring,
                kernel_generators.iter().map(|p| a_pres.module().degree(p).unwrap() as i32).collect(),
            );
            let s = kernel_generators.len();
            let a_rels = a_pres.gb();
            let mut sdeg: Vec<i32> = gmod.degrees().to_vec();
            sdeg.extend(a_rels.iter().map(|r| a_pres.module().degree(r).unwrap() as i32));
            let mut cols = kernel_generators.clone();
            cols.extend(a_rels.iter().cloned());
            let source = FreeModule::new(ring, sdeg);
            let rels = LiftingGb::new(a_pres.module(), &source, &cols)
                .minimal_kernel()
                .iter()
                .map(|w| gmod.project(w, 0, s as u32))
                .collect();
            Presentation::new(gmod, rels)
        };
        Ok(ExtComparison { j, columns, kernel, kernel_generators })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_generators.is_empty()
    }

    /// A nonzero kernel element, when the map is not injective.
    pub fn witness(&self) -> Option<&Vector<F>> {
        self.kernel_generators.first()
    }
}
