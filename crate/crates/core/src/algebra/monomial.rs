//! Monomials with bounded exponents stored inline.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of variables of a polynomial ring.
pub const MAX_VARS: usize = 16;

/// A monomial `x^a` with `a` a vector of `u16` exponents. Unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], degree: 0, nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(i < nvars, "variable index out of range");
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables { got: exps.len(), max: MAX_VARS });
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            m.degree += e;
        }
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        r.degree = self.degree + other.degree;
        Some(r)
    }

    /// Product; panics on exponent overflow. Entry points that take user
    /// data use [`Monomial::checked_mul`] or bound exponents up front.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` if `self` does not divide `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(other.div_unchecked(self))
    }

    /// `self / d`, assuming `d | self`.
    pub fn div_unchecked(&self, d: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] -= d.exps[i];
        }
        r.degree = self.degree - d.degree;
        r
    }

    /// `self / gcd(self, d)`: exponents reduced by those of `d`, floored at zero.
    pub fn saturating_div(&self, d: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].saturating_sub(d.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.degree = deg;
        r
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.degree = deg;
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.degree = deg;
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn checked_pow(&self, k: u32) -> Option<Monomial> {
        let mut r = *self;
        for i in 0..self.nvars as usize {
            let e = (self.exps[i] as u32).checked_mul(k)?;
            r.exps[i] = u16::try_from(e).ok()?;
        }
        r.degree = self.degree.checked_mul(k)?;
        Some(r)
    }

    /// Bit mask of the variables that occur.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for i in 0..self.nvars as usize {
            if self.exps[i] > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Product of the variables that occur.
    pub fn radical(&self) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].min(1);
            deg += r.exps[i] as u32;
        }
        r.degree = deg;
        r
    }

    /// The monomial with exponent `e` at `i` replaced by `value`.
    pub fn with_exp(&self, i: usize, value: u32) -> Result<Monomial> {
        let mut r = *self;
        let v = u16::try_from(value).map_err(|_| Error::ExponentOverflow)?;
        r.degree = self.degree - self.exps[i] as u32 + value;
        r.exps[i] = v;
        Ok(r)
    }

    /// Re-embed into a ring with `nvars` variables; extra slots must be zero.
    pub(crate) fn with_nvars(&self, nvars: usize) -> Monomial {
        let mut r = *self;
        r.nvars = nvars as u8;
        r
    }

    /// Render with the given variable names, e.g. `x^2*y`; `1` for the unit.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate().take(self.nvars as usize) {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
