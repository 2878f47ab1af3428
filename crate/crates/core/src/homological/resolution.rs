//! Graded minimal free resolutions of cyclic modules `S/I`.

use std::collections::BTreeMap;

use crate::algebra::{Field, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{FreeModule, LiftingGb, Vector};
use crate::ideal::Ideal;

/// `0 <- S <- F_1 <- ... <- F_pd <- 0`. Level `i` keeps the columns of
/// `d_i : F_i -> F_{i-1}` together with the lifting data used to build the
/// next level, which chain-map lifting reuses.
#[derive(Clone, Debug)]
pub struct FreeResolution<F: Field> {
    ring: RingRef<F>,
    modules: Vec<FreeModule<F>>,
    differentials: Vec<Vec<Vector<F>>>,
    lifts: Vec<LiftingGb<F>>,
    minimal: bool,
}

/// Betti numbers `β_{i,j}`: rank of the degree-`j` part of `F_i`.
pub type BettiTable = BTreeMap<(usize, i32), usize>;

impl<F: Field> FreeResolution<F> {
    /// Resolve `S/I` by iterated minimal kernels. Nonhomogeneous input is
    /// accepted; the result is then capped at length `n + 1` and flagged
    /// non-minimal.
    pub fn of_quotient(ideal: &Ideal<F>) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let ring = ideal.ring().clone();
        let homogeneous = ideal.is_homogeneous();
        let f0 = FreeModule::new(&ring, vec![0]);
        let mut modules = vec![f0.clone()];
        let mut differentials: Vec<Vec<Vector<F>>> = vec![Vec::new()];
        let mut lifts = Vec::new();
        let mut cols: Vec<Vector<F>> = ideal.minimal_generators().iter().map(|g| f0.from_poly(g, 0)).collect();
        let cap = ring.nvars() + 1;
        while !cols.is_empty() {
            let prev = modules.last().unwrap().clone();
            if modules.len() > cap {
                if homogeneous {
                    return Err(Error::Internal("resolution longer than the number of variables".into()));
                }
                break;
            }
            let degrees: Vec<i32> = cols.iter().map(|c| prev.degree(c).unwrap() as i32).collect();
            let src = FreeModule::new(&ring, degrees);
            let lg = LiftingGb::new(&prev, &src, &cols);
            let next = lg.minimal_kernel();
            modules.push(src);
            differentials.push(cols);
            lifts.push(lg);
            cols = next;
        }
        Ok(FreeResolution { ring, modules, differentials, lifts, minimal: homogeneous })
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Projective dimension of `S/I` (the length of the resolution).
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// `F_i`, or `None` beyond the length.
    pub fn module(&self, i: usize) -> Option<&FreeModule<F>> {
        self.modules.get(i)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, |m| m.rank())
    }

    /// Columns of `d_i : F_i -> F_{i-1}` (empty for `i = 0` or beyond the length).
    pub fn differential(&self, i: usize) -> &[Vector<F>] {
        self.differentials.get(i).map_or(&[], |v| v.as_slice())
    }

    /// Lifting data for `d_i`, `1 <= i <= length`.
    pub fn lifting(&self, i: usize) -> Option<&LiftingGb<F>> {
        if i == 0 {
            None
        } else {
            self.lifts.get(i - 1)
        }
    }

    /// Twists of `F_i`: `F_i = ⊕ S(-d)`.
    pub fn twists(&self, i: usize) -> Vec<i32> {
        self.modules.get(i).map_or_else(Vec::new, |m| m.degrees().to_vec())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, m) in self.modules.iter().enumerate() {
            for &d in m.degrees() {
                *t.entry((i, d)).or_insert(0) += 1;
            }
        }
        t
    }

    /// `max_i (max twist of F_i - i)`.
    pub fn regularity(&self) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.degrees().iter().max().map(|&d| d as i64 - i as i64))
            .max()
            .unwrap_or(0)
    }

    /// `d_{i-1} ∘ d_i = 0` for every level.
    pub fn check_complex(&self) -> bool {
        (2..=self.length()).all(|i| {
            let (src, tgt) = (&self.modules[i - 1], &self.modules[i - 2]);
            self.differential(i)
                .iter()
                .all(|col| src.apply(tgt, self.differential(i - 1), col).is_zero())
        })
    }

    /// True when every entry of every differential lies in the maximal ideal.
    pub fn entries_in_maximal_ideal(&self) -> bool {
        self.differentials.iter().flatten().all(|col| col.terms.iter().all(|t| !t.mono.is_one()))
    }
}
