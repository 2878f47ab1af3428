//! Invariants of `S/I` read off the resolution and the `Ext` modules:
//! depth, projective dimension, a-invariants, regularity, `f_m`.

use std::sync::OnceLock;

use super::ext::{ChainMap, ExtComparison, ExtModule};
use super::hilbert::HilbertSeries;
use super::presentation::Presentation;
use super::resolution::{BettiTable, FreeResolution};
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// `S/I` together with its resolution and lazily computed `Ext^j(S/I, S)`.
#[derive(Debug)]
pub struct Resolved<F: Field> {
    ideal: Ideal<F>,
    res: FreeResolution<F>,
    ext: Vec<OnceLock<ExtModule<F>>>,
}

/// Summary of the homological invariants of a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologicalProfile {
    pub nvars: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub height: usize,
    pub betti: BettiTable,
    /// `a_i` for `0 <= i <= dim`; `None` means `-∞`.
    pub a_invariants: Vec<Option<i64>>,
    pub regularity: i64,
    /// `[height, pd]`; collapses to the exact value once fullness is known.
    pub cd_bounds: (usize, usize),
    pub cd_exact: bool,
    /// `None` when `dim S/I = 0`.
    pub finiteness_dimension: Option<usize>,
}

impl<F: Field> Resolved<F> {
    pub fn new(ideal: &Ideal<F>) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let res = FreeResolution::of_quotient(ideal)?;
        let n = ideal.nvars();
        Ok(Resolved { ideal: ideal.clone(), res, ext: (0..=n).map(|_| OnceLock::new()).collect() })
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn resolution(&self) -> &FreeResolution<F> {
        &self.res
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// `Ext^j(S/I, S)`, `0 <= j <= n`.
    pub fn ext(&self, j: usize) -> Result<&ExtModule<F>> {
        let cell = self.ext.get(j).ok_or_else(|| Error::Precondition(format!("Ext index {j} exceeds {}", self.nvars())))?;
        if let Some(e) = cell.get() {
            return Ok(e);
        }
        let e = ExtModule::compute(&self.res, j)?;
        let _ = cell.set(e);
        Ok(cell.get().unwrap())
    }

    /// The Matlis dual of `H^i_m(S/I)`, i.e. `Ext^{n-i}(S/I, S)`; zero for `i > n`.
    pub fn dual_cohomology(&self, i: usize) -> Result<Option<&ExtModule<F>>> {
        let n = self.nvars();
        if i > n {
            return Ok(None);
        }
        self.ext(n - i).map(Some)
    }

    pub fn dim(&self) -> usize {
        self.ideal.krull_dimension().expect("proper ideal")
    }

    pub fn depth_pd(&self) -> (usize, usize) {
        let pd = self.res.length();
        (self.nvars() - pd, pd)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        Presentation::quotient(&self.ideal).hilbert_series()
    }

    /// `dim_k H^i_m(S/I)_d = dim_k Ext^{n-i}(S/I, S)_{-d-n}`.
    pub fn local_cohomology_dim(&self, i: usize, d: i64) -> Result<usize> {
        let n = self.nvars() as i64;
        Ok(match self.dual_cohomology(i)? {
            Some(e) => e.presentation().graded_piece_dim(-d - n),
            None => 0,
        })
    }

    /// `a_i = -min{j : Ext^{n-i}(S/I, S(-n))_j != 0}` for `0 <= i <= dim`.
    pub fn a_invariants(&self) -> Result<Vec<Option<i64>>> {
        let n = self.nvars() as i64;
        (0..=self.dim())
            .map(|i| Ok(self.dual_cohomology(i)?.and_then(|e| e.presentation().initial_degree()).map(|d| -(d + n))))
            .collect()
    }

    /// `max_i (a_i + i)`, checked against the Betti table.
    pub fn regularity(&self) -> Result<i64> {
        let from_a = self
            .a_invariants()?
            .iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| a + i as i64))
            .max()
            .unwrap_or(0);
        let from_betti = self.res.regularity();
        if self.ideal.is_zero() || from_a == from_betti {
            Ok(from_betti)
        } else {
            Err(Error::Internal(format!("regularity mismatch: a-invariants give {from_a}, Betti table {from_betti}")))
        }
    }

    /// Least `t` with `H^t_m` not finitely generated; `None` for a zero-dimensional quotient.
    pub fn finiteness_dimension(&self) -> Result<Option<usize>> {
        let dim = self.dim();
        if dim == 0 {
            return Ok(None);
        }
        for t in 0..=dim {
            if let Some(e) = self.dual_cohomology(t)? {
                if e.presentation().krull_dimension().is_some_and(|d| d > 0) {
                    return Ok(Some(t));
                }
            }
        }
        Err(Error::Internal("top local cohomology reported finitely generated".into()))
    }

    pub fn profile(&self) -> Result<HomologicalProfile> {
        let (depth, pd) = self.depth_pd();
        let height = self.ideal.height()?;
        Ok(HomologicalProfile {
            nvars: self.nvars(),
            dim: self.dim(),
            depth,
            pd,
            height,
            betti: self.res.betti_table(),
            a_invariants: self.a_invariants()?,
            regularity: self.regularity()?,
            cd_bounds: (height, pd),
            cd_exact: height == pd,
            finiteness_dimension: self.finiteness_dimension()?,
        })
    }

    /// The map `Ext^j(S/I, S) -> Ext^j(S/I_small, S)` for `I_small ⊆ I`.
    pub fn comparison_from(&self, small: &Resolved<F>, j: usize) -> Result<ExtComparison<F>> {
        let chain = ChainMap::lift(&small.res, &self.res, j)?;
        ExtComparison::compute(&small.res, &self.res, &chain, small.ext(j)?, self.ext(j)?)
    }
}

impl HomologicalProfile {
    /// Record that `cd(I, S) = pd`, which holds for full quotients in positive characteristic.
    pub fn with_exact_cd(mut self) -> Self {
        self.cd_bounds = (self.pd, self.pd);
        self.cd_exact = true;
        self
    }

    pub fn cd(&self) -> Option<usize> {
        self.cd_exact.then_some(self.cd_bounds.0)
    }
}
