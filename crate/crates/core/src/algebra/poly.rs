//! Polynomial rings and sparse polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, MAX_VARS};
use super::order::{OrderKind, TermOrder};
use crate::error::{Error, Result};

/// A polynomial ring `k[x_1..x_n]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: TermOrder,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str], kind: OrderKind) -> Result<RingRef<F>> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Self::with_names(field, names, kind)
    }

    pub fn with_names(field: F, vars: Vec<String>, kind: OrderKind) -> Result<RingRef<F>> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { got: vars.len(), max: MAX_VARS });
        }
        let order = TermOrder::new(kind, vars.len());
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn with_order(field: F, vars: Vec<String>, order: TermOrder) -> Result<RingRef<F>> {
        if vars.len() != order.nvars() {
            return Err(Error::VariableCountMismatch(vars.len(), order.nvars()));
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// Same ring with another term order kind.
    pub fn reordered(&self, kind: OrderKind) -> RingRef<F> {
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars: self.vars.clone(),
            order: TermOrder::new(kind, self.vars.len()),
        })
    }

    /// The ring with one extra variable `t` appended, ordered so that `t`
    /// is eliminated first.
    pub fn with_elimination_variable(&self, name: &str) -> Result<RingRef<F>> {
        let n = self.nvars();
        if n + 1 > MAX_VARS {
            return Err(Error::TooManyVariables { got: n + 1, max: MAX_VARS });
        }
        let mut vars = self.vars.clone();
        vars.push(name.to_string());
        let mut precedence = vec![n];
        precedence.extend(0..n);
        let order = TermOrder::with_precedence(OrderKind::Elimination(1), &precedence)?;
        Ok(Arc::new(PolyRing { field: self.field.clone(), vars, order }))
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.nvars() {
            return Err(Error::VariableCountMismatch(self.nvars(), exps.len()));
        }
        Monomial::from_exponents(exps)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }
}

/// A sparse polynomial; terms strictly decreasing in the ring order, no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

pub(crate) fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::term(ring, ring.one_monomial(), c)
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        Self::term(ring, ring.var_monomial(i), ring.field.one())
    }

    pub fn term(ring: &RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        if ring.field.is_zero(&c) {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    pub fn monomial(ring: &RingRef<F>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field.one())
    }

    /// Canonicalize an arbitrary list of terms: sort, merge, drop zeros.
    pub fn from_terms(ring: &RingRef<F>, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = &ring.field;
        terms.sort_by(|a, b| ring.cmp_mono(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Total degree; `None` is the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// A single term (any coefficient).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let field = self.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                self.ring.cmp_mono(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { field.sub(&a[i].1, &b[j].1) } else { field.add(&a[i].1, &b[j].1) };
                    if !field.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        let terms = self.terms.iter().map(|(m, c)| (*m, field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn try_mul_monomial(&self, m: &Monomial, c: &F::Elem) -> Result<Self> {
        let field = self.field();
        if field.is_zero(c) {
            return Ok(Self::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, a) in &self.terms {
            terms.push((t.checked_mul(m).ok_or(Error::ExponentOverflow)?, field.mul(a, c)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.checked_mul(mb).ok_or(Error::ExponentOverflow)?, field.mul(ca, cb)));
            }
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    /// `f^k`. In characteristic p the exponent is split in base p and each
    /// digit uses the term-wise Frobenius power.
    pub fn try_pow(&self, k: u64) -> Result<Self> {
        let p = self.ring.characteristic();
        if p > 0 && k >= p {
            let mut result = Self::one(&self.ring);
            let mut base = self.clone();
            let mut rest = k;
            while rest > 0 {
                let digit = rest % p;
                if digit > 0 {
                    result = result.try_mul(&base.pow_by_squaring(digit)?)?;
                }
                rest /= p;
                if rest > 0 {
                    base = base.frobenius(1)?;
                }
            }
            return Ok(result);
        }
        self.pow_by_squaring(k)
    }

    /// `f^k` by binary exponentiation, with no characteristic shortcut.
    pub fn pow_by_squaring(&self, mut k: u64) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^{p^e}` computed term-wise (Frobenius is additive in characteristic p).
    pub fn frobenius(&self, e: u32) -> Result<Self> {
        let p = self.ring.characteristic();
        if p == 0 {
            return Err(Error::characteristic(0, "Frobenius needs positive characteristic"));
        }
        let q = p.checked_pow(e).ok_or(Error::ExponentOverflow)?;
        let q32 = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut c2 = c.clone();
            for _ in 0..e {
                c2 = field.pow(&c2, p);
            }
            terms.push((m.checked_pow(q32).ok_or(Error::ExponentOverflow)?, c2));
        }
        // raising to q preserves the strict order of the monomials
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Re-sort terms after a change of term order; also idempotent
    /// canonicalization.
    pub fn canonicalize(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.clone())
    }

    /// Same polynomial viewed in another ring with identical variables and field.
    pub fn in_ring(&self, ring: &RingRef<F>) -> Result<Self> {
        if ring.field != self.ring.field {
            return Err(Error::RingMismatch);
        }
        if ring.nvars() < self.ring.nvars() {
            return Err(Error::VariableCountMismatch(ring.nvars(), self.ring.nvars()));
        }
        let n = ring.nvars();
        let terms = self.terms.iter().map(|(m, c)| (m.with_nvars(n), c.clone())).collect();
        Ok(Self::from_terms(ring, terms))
    }

    /// Exact quotient by `g`; errors if `g` does not divide `self`.
    pub fn try_div_exact(&self, g: &Self) -> Result<Self> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let field = self.field();
        let (lm, lc) = (g.terms[0].0, g.terms[0].1.clone());
        let lc_inv = field.inv(&lc)?;
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            let q = lm
                .quotient_of(&m)
                .ok_or_else(|| Error::Precondition("polynomial division is not exact".into()))?;
            let qc = field.mul(&c, &lc_inv);
            rest = rest.try_sub(&g.try_mul_monomial(&q, &qc)?)?;
            quot.push((q, qc));
        }
        Ok(Self::from_terms(&self.ring, quot))
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Canonical decreasing-order text, e.g. `x^2 + 4*y^2`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.field();
        let names = self.ring.var_names();
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let mag = if negative { field.neg(c) } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&field.format(&mag));
            } else if field.is_one(&mag) {
                out.push_str(&m.format(names));
            } else {
                out.push_str(&field.format(&mag));
                out.push('*');
                out.push_str(&m.format(names));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<'a, F: Field> std::ops::$trait<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$try(rhs).expect(concat!("polynomial ", stringify!($method)))
            }
        }
        impl<F: Field> std::ops::$trait<Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$try(&rhs).expect(concat!("polynomial ", stringify!($method)))
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};

    fn fp(p: u64, vars: &[&str]) -> RingRef<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap(), vars, OrderKind::Grevlex).unwrap()
    }

    #[test]
    fn product_over_f5() {
        let r = fp(5, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let two = Polynomial::constant(&r, 2);
        let three = Polynomial::constant(&r, 3);
        let f = &x + &(&two * &y);
        let g = &x + &(&three * &y);
        assert_eq!((&f * &g).to_string(), "x^2 + y^2");
        assert!((&f * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn difference_of_squares_over_q() {
        let r = PolyRing::new(Rationals, &["x", "y"], OrderKind::Grevlex).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert_eq!(((&x + &y) * (&x - &y)).to_string(), "x^2 - y^2");
    }

    #[test]
    fn frobenius_power() {
        let r = fp(5, &["x", "y"]);
        let f = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        assert_eq!(f.try_pow(5).unwrap().to_string(), "x^5 + y^5");
        assert_eq!(f.try_pow(0).unwrap().to_string(), "1");
        assert_eq!(f.try_pow(5).unwrap(), f.pow_by_squaring(5).unwrap());
        assert_eq!(f.try_pow(37).unwrap(), f.pow_by_squaring(37).unwrap());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = fp(5, &["x", "y"]);
        let b = fp(7, &["x", "y"]);
        assert_eq!(Polynomial::var(&a, 0).try_add(&Polynomial::var(&b, 0)), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = fp(7, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.try_div_exact(&(&x + &y)).unwrap(), &x - &y);
        assert!(f.try_div_exact(&x).is_err());
    }
}
