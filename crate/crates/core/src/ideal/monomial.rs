//! Combinatorics of monomial ideals: minimal primes, irreducible
//! decompositions and associated primes.

use crate::algebra::Monomial;

/// A prime generated by variables, as a bit mask over variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarPrime(pub u32);

impl VarPrime {
    pub fn vars(&self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    pub fn height(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// `self ⊊ other`.
    pub fn strictly_inside(&self, other: &VarPrime) -> bool {
        self.0 != other.0 && self.0 & !other.0 == 0
    }

    pub fn format(&self, names: &[String]) -> String {
        let v: Vec<&str> = self.vars().iter().map(|&i| names[i].as_str()).collect();
        format!("({})", v.join(","))
    }
}

/// Minimal monomial generators (no generator divides another).
pub fn minimal_monomials(monos: &[Monomial]) -> Vec<Monomial> {
    let mut ms = monos.to_vec();
    ms.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in ms {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Minimal primes: the inclusion-minimal variable sets meeting every support.
pub fn minimal_primes(gens: &[Monomial]) -> Vec<VarPrime> {
    let supports: Vec<u32> = minimal_monomials(gens).iter().map(|m| m.support()).collect();
    if supports.iter().any(|&s| s == 0) {
        return Vec::new();
    }
    let mut covers = Vec::new();
    cover(&supports, 0, &mut covers);
    covers.sort_by_key(|c: &u32| (c.count_ones(), *c));
    let mut out: Vec<u32> = Vec::new();
    for c in covers {
        if !out.iter().any(|o| o & !c == 0) {
            out.push(c);
        }
    }
    let mut primes: Vec<VarPrime> = out.into_iter().map(VarPrime).collect();
    primes.sort();
    primes
}

fn cover(supports: &[u32], chosen: u32, out: &mut Vec<u32>) {
    match supports.iter().find(|&&s| s & chosen == 0) {
        None => out.push(chosen),
        Some(&s) => {
            for v in 0..32 {
                if s & (1 << v) != 0 {
                    cover(supports, chosen | (1 << v), out);
                }
            }
        }
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ support)`, stored as the
/// exponent vector with zero meaning "absent".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Irreducible(pub Vec<u32>);

impl Irreducible {
    pub fn radical(&self) -> VarPrime {
        let mut mask = 0;
        for (i, &a) in self.0.iter().enumerate() {
            if a > 0 {
                mask |= 1 << i;
            }
        }
        VarPrime(mask)
    }

    /// `self ⊆ other`.
    pub fn inside(&self, other: &Irreducible) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
    }
}

/// Irredundant irreducible decomposition of a proper monomial ideal.
pub fn irreducible_decomposition(gens: &[Monomial], nvars: usize) -> Vec<Irreducible> {
    let gens = minimal_monomials(gens);
    let mut comps = Vec::new();
    split(gens, nvars, &mut comps);
    comps.sort();
    comps.dedup();
    let keep: Vec<Irreducible> = comps
        .iter()
        .filter(|q| !comps.iter().any(|other| other != *q && other.inside(q)))
        .cloned()
        .collect();
    keep
}

fn split(gens: Vec<Monomial>, nvars: usize, out: &mut Vec<Irreducible>) {
    // a generator that is not a pure power splits the ideal in two
    match gens.iter().position(|m| m.support().count_ones() > 1) {
        None => {
            let mut exps = vec![0u32; nvars];
            for m in &gens {
                let v = m.support().trailing_zeros() as usize;
                let e = m.exp(v);
                if exps[v] == 0 || e < exps[v] {
                    exps[v] = e;
                }
            }
            out.push(Irreducible(exps));
        }
        Some(k) => {
            let m = gens[k];
            let v = m.support().trailing_zeros() as usize;
            let pure = Monomial::var(nvars, v).checked_pow(m.exp(v)).expect("fits");
            let rest = m.div_unchecked(&pure);
            for part in [pure, rest] {
                let mut g: Vec<Monomial> = gens.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, x)| *x).collect();
                g.push(part);
                split(minimal_monomials(&g), nvars, out);
            }
        }
    }
}

/// Associated primes of `S/I` for a proper monomial ideal `I`, sorted.
pub fn associated_primes(gens: &[Monomial], nvars: usize) -> Vec<VarPrime> {
    let mut ps: Vec<VarPrime> = irreducible_decomposition(gens, nvars).iter().map(|q| q.radical()).collect();
    ps.sort();
    ps.dedup();
    ps
}

/// Associated primes that strictly contain another associated prime.
pub fn embedded_primes(primes: &[VarPrime]) -> Vec<VarPrime> {
    primes.iter().filter(|p| primes.iter().any(|q| q.strictly_inside(p))).copied().collect()
}
