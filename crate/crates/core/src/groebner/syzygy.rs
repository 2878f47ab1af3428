//! Schreyer syzygies of a Gröbner basis.

use std::sync::Arc;

use super::buchberger::Reducer;
use super::module::{FreeModule, SchreyerFrame, Term, Vector};
use crate::algebra::{Field, Monomial};

/// First syzygies of a Gröbner basis.
#[derive(Clone, Debug)]
pub struct Syzygies<F: Field> {
    /// The basis in the order used for the Schreyer frame.
    pub basis: Vec<Vector<F>>,
    /// `basis[k]` is `input[order[k]]`.
    pub order: Vec<usize>,
    /// Free module carrying the induced order, one generator per basis element.
    pub module: FreeModule<F>,
    /// A Gröbner basis of the syzygy module in the induced order.
    pub syzygies: Vec<Vector<F>>,
}

/// Syzygies of the Gröbner basis `gb` of a submodule of `module`.
///
/// Basis elements are first sorted so that, within a component, the
/// exponent of the first variable occurring in any leading term decreases.
/// That variable then never occurs in a leading term of a syzygy, so
/// iterating this terminates after at most `nvars` steps.
pub fn schreyer_syzygies<F: Field>(module: &FreeModule<F>, gb: &[Vector<F>]) -> Syzygies<F> {
    let field = module.field();
    let n = module.ring().nvars();
    let first_var = (0..n).find(|&v| gb.iter().any(|g| g.lead().is_some_and(|t| t.mono.exp(v) > 0)));
    let mut order: Vec<usize> = (0..gb.len()).collect();
    order.sort_by_key(|&k| {
        let t = gb[k].lead().expect("nonzero basis element");
        (t.comp, std::cmp::Reverse(first_var.map_or(0, |v| t.mono.exp(v))))
    });
    let basis: Vec<Vector<F>> = order.iter().map(|&k| gb[k].clone()).collect();

    let leads = basis.iter().map(|g| {
        let t = g.lead().unwrap();
        (t.mono, t.comp)
    });
    let degrees = basis.iter().map(|g| module.degree(g).unwrap() as i32).collect();
    let frame = SchreyerFrame {
        prev: Arc::new(module.clone()),
        leads: leads.collect(),
        rank: (0..basis.len() as u32).collect(),
    };
    let syz_module = FreeModule::schreyer(frame, degrees);

    let reducer = Reducer::from_basis(module, &basis);
    let mut syzygies = Vec::new();
    for j in 0..basis.len() {
        let tj = basis[j].lead().unwrap();
        // the syzygy of the pair (i, j), i < j, leads with m_ij e_i
        let pairs: Vec<(usize, Monomial)> = (0..j)
            .filter_map(|i| {
                let ti = basis[i].lead().unwrap();
                (ti.comp == tj.comp).then(|| (i, ti.mono.lcm(&tj.mono).div_unchecked(&ti.mono)))
            })
            .collect();
        for (i, m_ij) in pairs {
            let ti = basis[i].lead().unwrap();
            let lcm = ti.mono.lcm(&tj.mono);
            let m_ji = lcm.div_unchecked(&tj.mono);
            if pruned(&basis, i, j, &m_ij) {
                continue;
            }
            let a = module.mul_term(&Vector { terms: basis[i].terms[1..].to_vec() }, &m_ij, &field.one());
            let s = module.merge(&a.terms, &basis[j].terms[1..], &field.one(), Some(&m_ji), true);
            let mut qs = vec![Vec::new(); basis.len()];
            let rem = reducer.reduce(&s, None, Some(&mut qs));
            debug_assert!(rem.is_zero(), "input is not a Gröbner basis");
            let mut terms = vec![
                Term { mono: m_ij, comp: i as u32, coef: field.one() },
                Term { mono: m_ji, comp: j as u32, coef: field.neg(&field.one()) },
            ];
            for (k, q) in qs.into_iter().enumerate() {
                for (m, c) in q {
                    terms.push(Term { mono: m, comp: k as u32, coef: field.neg(&c) });
                }
            }
            syzygies.push(syz_module.normalize(terms));
        }
    }
    syzygies.sort_by(|a, b| syz_module.cmp_terms(b.lead().unwrap(), a.lead().unwrap()));
    Syzygies { basis, order, module: syz_module, syzygies }
}

/// The pair (i, j) is redundant when some other pair with leading term in
/// component `i` has a strictly dividing leading monomial, or an equal one
/// coming from a smaller partner index.
fn pruned<F: Field>(basis: &[Vector<F>], i: usize, j: usize, m_ij: &Monomial) -> bool {
    let ti = basis[i].lead().unwrap();
    (i + 1..basis.len()).any(|k| {
        if k == j {
            return false;
        }
        let tk = basis[k].lead().unwrap();
        if tk.comp != ti.comp {
            return false;
        }
        let m_ik = ti.mono.lcm(&tk.mono).div_unchecked(&ti.mono);
        m_ik.divides(m_ij) && (m_ik != *m_ij || k < j)
    })
}
