//! Simplicial complexes and their Stanley–Reisner ideals.

use super::Ideal;
use crate::algebra::{Field, Monomial, RingRef};
use crate::error::{Error, Result};

/// A simplicial complex on vertices `0..nverts`, stored by its facets as bit
/// masks. Facets are pairwise incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// Build from faces; non-maximal faces are dropped.
    pub fn new(nverts: usize, faces: &[Vec<usize>]) -> Result<Self> {
        if nverts > 16 {
            return Err(Error::TooManyVariables { got: nverts, max: 16 });
        }
        let mut masks = Vec::new();
        for f in faces {
            let mut m = 0u32;
            for &v in f {
                if v >= nverts {
                    return Err(Error::Precondition(format!("vertex {v} out of range")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        masks.sort_unstable();
        masks.dedup();
        let facets = masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && m & !o == 0)).collect();
        Ok(SimplicialComplex { nverts, facets })
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| (0..self.nverts).filter(|v| m & (1 << v) != 0).collect()).collect()
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// Subsets that are not faces but whose proper subsets all are.
    pub fn minimal_nonfaces(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for mask in 1u32..(1u32 << self.nverts) {
            if self.is_face(mask) {
                continue;
            }
            let all_sub = (0..self.nverts).filter(|v| mask & (1 << v) != 0).all(|v| self.is_face(mask & !(1 << v)));
            if all_sub {
                out.push(mask);
            }
        }
        out
    }

    /// The Stanley–Reisner ideal in `ring`, whose variables are the vertices.
    pub fn stanley_reisner<F: Field>(&self, ring: &RingRef<F>) -> Result<Ideal<F>> {
        if ring.nvars() != self.nverts {
            return Err(Error::VariableCountMismatch(ring.nvars(), self.nverts));
        }
        let monos: Vec<Monomial> = self
            .minimal_nonfaces()
            .into_iter()
            .map(|mask| {
                let exps: Vec<u32> = (0..self.nverts).map(|v| (mask >> v) & 1).collect();
                Monomial::from_exponents(&exps).expect("small exponents")
            })
            .collect();
        Ok(Ideal::from_monomials(ring, &monos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, PrimeField};

    #[test]
    fn path_and_disjoint_edges() {
        let r3 = PolyRing::new(PrimeField::new(2).unwrap(), &["a", "b", "c"], OrderKind::Grevlex).unwrap();
        let path = SimplicialComplex::new(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(path.stanley_reisner(&r3).unwrap().display_generators(), vec!["a*c"]);
        let simplex = SimplicialComplex::new(3, &[vec![0, 1, 2], vec![0, 1]]).unwrap();
        assert!(simplex.stanley_reisner(&r3).unwrap().is_zero());
        let r4 = PolyRing::new(PrimeField::new(2).unwrap(), &["a", "b", "c", "d"], OrderKind::Grevlex).unwrap();
        let edges = SimplicialComplex::new(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let sr = edges.stanley_reisner(&r4).unwrap();
        assert_eq!(sr.mu(), 4);
        assert!(sr.is_squarefree());
    }
}
