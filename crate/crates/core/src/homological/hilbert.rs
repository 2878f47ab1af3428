//! Hilbert series of graded quotients, as `N(t) / (1 - t)^n` with a Laurent
//! polynomial numerator.

use std::collections::BTreeMap;

use crate::algebra::Monomial;
use crate::ideal::monomial::minimal_monomials;

/// A Laurent polynomial in `t` with integer coefficients, no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i64, i128>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    pub fn monomial(exp: i64, coef: i128) -> Self {
        let mut l = Laurent::zero();
        l.add_term(exp, coef);
        l
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exp: i64) -> i128 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: i64, coef: i128) {
        if coef == 0 {
            return;
        }
        let e = self.0.entry(exp).or_insert(0);
        *e += coef;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn shift(&self, k: i64) -> Laurent {
        Laurent(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    pub fn eval_one(&self) -> i128 {
        self.0.values().sum()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Exact division by `(1 - t)`, if possible.
    pub fn div_one_minus_t(&self) -> Option<Laurent> {
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        if self.eval_one() != 0 {
            return None;
        }
        // q(t) (1 - t) = p(t): q_e = Σ_{k ≤ e} p_k
        let (lo, hi) = (self.min_exp().unwrap(), self.max_exp().unwrap());
        let mut out = Laurent::zero();
        let mut acc = 0i128;
        for e in lo..hi {
            acc += self.coefficient(e);
            out.add_term(e, acc);
        }
        Some(out)
    }
}

/// `1 - t^d`.
fn one_minus(d: i64) -> Laurent {
    let mut l = Laurent::one();
    l.add_term(d, -1);
    l
}

/// Numerator of the Hilbert series of `S/I` for a monomial ideal `I`.
pub fn monomial_numerator(gens: &[Monomial]) -> Laurent {
    let gens = minimal_monomials(gens);
    numerator_rec(gens)
}

fn numerator_rec(gens: Vec<Monomial>) -> Laurent {
    if gens.is_empty() {
        return Laurent::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return Laurent::zero();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(Laurent::one(), |acc, g| acc.mul(&one_minus(g.degree() as i64)));
    }
    // pivot on the variable occurring in the most generators
    let n = gens[0].nvars();
    let v = (0..n).max_by_key(|&v| (gens.iter().filter(|g| g.exp(v) > 0).count(), std::cmp::Reverse(v))).unwrap();
    // the smallest positive exponent keeps both branches strictly smaller
    let e = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).min().unwrap();
    let pivot = Monomial::var(n, v).checked_pow(e).expect("pivot fits");
    // N(I) = N(I + (p)) + t^deg(p) N(I : p)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.saturating_div(&pivot)).collect();
    let a = numerator_rec(minimal_monomials(&plus));
    let b = numerator_rec(minimal_monomials(&colon));
    a.add(&b.shift(e as i64))
}

/// Hilbert series `N(t) / (1 - t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Laurent,
    pub nvars: usize,
}

fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

impl HilbertSeries {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `dim_k M_d`.
    pub fn dim_in_degree(&self, d: i64) -> i128 {
        let n = self.nvars as i128;
        self.numerator
            .terms()
            .filter(|&(e, _)| e <= d)
            .map(|(e, c)| {
                let k = (d - e) as i128;
                if n == 0 {
                    if k == 0 {
                        c
                    } else {
                        0
                    }
                } else {
                    c * binom(k + n - 1, n - 1)
                }
            })
            .sum()
    }

    /// Krull dimension; `None` for the zero module.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut num = self.numerator.clone();
        let mut k = 0;
        while k < self.nvars {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    k += 1;
                }
                None => break,
            }
        }
        Some(self.nvars - k)
    }

    /// The Hilbert series as a Laurent polynomial, when the module has finite length.
    pub fn finite_length_polynomial(&self) -> Option<Laurent> {
        let mut num = self.numerator.clone();
        for _ in 0..self.nvars {
            num = num.div_one_minus_t()?;
        }
        Some(num)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        HilbertSeries { numerator: self.numerator.sub(&other.numerator), nvars: self.nvars }
    }
}
