//! Maps between free modules: kernels, image membership and lifting, all
//! from one Gröbner basis of the graph of the map.

use super::buchberger::{groebner, Reducer};
use super::module::{FreeModule, Vector};
use crate::algebra::Field;

/// A map `S^a -> S^b` given by its columns, prepared for kernel and lifting
/// queries. The graph `{(φ(e_i), e_i)}` lives in `S^{b+a}` with the image
/// block dominating, so a Gröbner basis of it splits into a basis of the
/// image and a basis of the kernel.
#[derive(Clone, Debug)]
pub struct LiftingGb<F: Field> {
    target: FreeModule<F>,
    source: FreeModule<F>,
    aug: FreeModule<F>,
    graph_gb: Vec<Vector<F>>,
    image_gb: Vec<Vector<F>>,
    kernel_gb: Vec<Vector<F>>,
}

impl<F: Field> LiftingGb<F> {
    /// `columns[i]` is `φ(e_i)` as an element of `target`.
    pub fn new(target: &FreeModule<F>, source: &FreeModule<F>, columns: &[Vector<F>]) -> Self {
        assert_eq!(columns.len(), source.rank());
        let b = target.rank() as u32;
        let aug = target.augmented(source.degrees());
        let gens: Vec<Vector<F>> = columns
            .iter()
            .enumerate()
            .map(|(i, col)| {
                let mut terms = aug.import(col, 0).terms;
                terms.extend(aug.basis_vector(b as usize + i).terms);
                aug.normalize(terms)
            })
            .collect();
        let graph_gb = groebner(&aug, &gens).basis;
        let mut image_gb = Vec::new();
        let mut kernel_gb = Vec::new();
        for g in &graph_gb {
            if g.lead().unwrap().comp < b {
                image_gb.push(target.project(g, 0, b));
            } else {
                kernel_gb.push(source.project(g, b, b + source.rank() as u32));
            }
        }
        LiftingGb { target: target.clone(), source: source.clone(), aug, graph_gb, image_gb, kernel_gb }
    }

    pub fn target(&self) -> &FreeModule<F> {
        &self.target
    }

    pub fn source(&self) -> &FreeModule<F> {
        &self.source
    }

    /// Gröbner basis of the image, in the target's order.
    pub fn image_gb(&self) -> &[Vector<F>] {
        &self.image_gb
    }

    /// Gröbner basis of the kernel, in the source's order.
    pub fn kernel_gb(&self) -> &[Vector<F>] {
        &self.kernel_gb
    }

    /// A generating set of the kernel, minimal when the map is graded.
    pub fn minimal_kernel(&self) -> Vec<Vector<F>> {
        let res = groebner(&self.source, &self.kernel_gb);
        res.minimal_inputs.iter().map(|&k| self.kernel_gb[k].clone()).collect()
    }

    /// Normal form of `u` modulo the image.
    pub fn image_nf(&self, u: &Vector<F>) -> Vector<F> {
        Reducer::from_basis(&self.target, &self.image_gb).reduce(u, None, None)
    }

    /// A preimage of `u`, or `None` if `u` is not in the image. The answer
    /// is the deterministic one read off the reduced graph basis.
    pub fn lift(&self, u: &Vector<F>) -> Option<Vector<F>> {
        let b = self.target.rank() as u32;
        let nf = Reducer::from_basis(&self.aug, &self.graph_gb).reduce(&self.aug.import(u, 0), None, None);
        if nf.terms.iter().any(|t| t.comp < b) {
            return None;
        }
        let w = self.source.project(&nf, b, b + self.source.rank() as u32);
        Some(self.source.neg(&w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OrderKind, PolyRing, Polynomial, PrimeField};

    #[test]
    fn kernel_and_lift_of_two_monomials() {
        let r = PolyRing::new(PrimeField::new(5).unwrap(), &["x", "y", "z"], OrderKind::Grevlex).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let target = FreeModule::new(&r, vec![0]);
        let source = FreeModule::new(&r, vec![2, 2]);
        let cols = [target.from_poly(&(&x * &y), 0), target.from_poly(&(&x * &z), 0)];
        let lg = LiftingGb::new(&target, &source, &cols);
        let ker = lg.minimal_kernel();
        assert_eq!(ker.len(), 1);
        assert_eq!(source.format(&ker[0]), "(4*z, y)");
        let u = target.from_poly(&(&(&x * &y) * &(&y + &z)), 0);
        let pre = lg.lift(&u).unwrap();
        assert_eq!(source.apply(&target, &cols, &pre), u);
        assert!(lg.lift(&target.from_poly(&y, 0)).is_none());
    }
}
