//! Čech classes in `H^2_m(B)` for Fermat curves `B = F_p[x,y,z]/(x^d+y^d+z^d)`,
//! the Frobenius action on them, and the Segre product `B # F_p[s,t]`.
//!
//! `B` is free over `F_p[x,y]` on `1, z, ..., z^{d-1}`, so `H^2_m(B)` has
//! the basis `z^k / (x^a y^b)` with `k < d` and `a, b >= 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Field, PrimeField};
use crate::error::{Error, Result};

/// A class `Σ c · z^k / (x^a y^b)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CechClass {
    d: u32,
    p: u64,
    terms: BTreeMap<(u32, u32, u32), u64>,
}

/// How one monomial class maps under Frobenius onto one basis class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusTerm {
    pub target: CechClass,
    /// `(-1)^s` from expanding `(z^d)^s = (-x^d - y^d)^s`.
    pub sign: i8,
    /// The binomial coefficient `C(s, i)` of the surviving term, as an integer.
    pub binomial: u128,
    /// `sign · binomial mod p`.
    pub coefficient: u64,
}

fn check_params(d: u32, p: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!("degree {d} is below 2")));
    }
    if !crate::algebra::field::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d as u64 % p == 0 {
        return Err(Error::Precondition(format!("p = {p} divides d = {d}; the Fermat curve is singular")));
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k as u128 {
        r = r * (n as u128 - i) / (i + 1);
    }
    r
}

/// `C(n, k) mod p` via Lucas' theorem.
fn binomial_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = (acc as u128 * (binomial(ni, ki) % p as u128) % p as u128) as u64;
        n /= p;
        k /= p;
    }
    acc
}

impl CechClass {
    pub fn zero(d: u32, p: u64) -> Self {
        CechClass { d, p, terms: BTreeMap::new() }
    }

    /// `c · z^k / (x^a y^b)`, canonicalized.
    pub fn monomial(d: u32, p: u64, k: u32, a: u32, b: u32, c: u64) -> Result<Self> {
        check_params(d, p)?;
        let mut out = CechClass::zero(d, p);
        out.add_fraction(k, 0, 0, a, b, c % p)?;
        Ok(out)
    }

    pub fn degree_of_term(k: u32, a: u32, b: u32) -> i64 {
        k as i64 - a as i64 - b as i64
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms `((k, a, b), c)` in increasing key order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32, u32), u64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    /// Degree when homogeneous; `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|&(k, a, b)| Self::degree_of_term(k, a, b));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, key: (u32, u32, u32), c: u64) {
        if c == 0 {
            return;
        }
        let p = self.p;
        let e = self.terms.entry(key).or_insert(0);
        *e = (*e + c) % p;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    /// Add `c · z^k x^i y^j / (x^a y^b)`, rewriting `z^d = -x^d - y^d` and
    /// dropping pieces that clear a denominator.
    fn add_fraction(&mut self, k: u32, i: u32, j: u32, a: u32, b: u32, c: u64) -> Result<()> {
        let (d, p) = (self.d, self.p);
        let (s, r) = (k / d, k % d);
        let sign_neg = s % 2 == 1;
        for t in 0..=s {
            // (-1)^s C(s, t) x^{dt} y^{d(s-t)}
            let xi = d.checked_mul(t).and_then(|v| v.checked_add(i)).ok_or(Error::ExponentOverflow)?;
            let yj = d.checked_mul(s - t).and_then(|v| v.checked_add(j)).ok_or(Error::ExponentOverflow)?;
            if xi >= a || yj >= b {
                continue;
            }
            let mut coef = binomial_mod(s as u64, t as u64, p) * (c % p) % p;
            if sign_neg {
                coef = (p - coef) % p;
            }
            self.add_term((r, a - xi, b - yj), coef);
        }
        Ok(())
    }

    pub fn add(&self, other: &CechClass) -> CechClass {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c);
        }
        out
    }

    pub fn scale(&self, r: u64) -> CechClass {
        let mut out = CechClass::zero(self.d, self.p);
        for (k, c) in self.terms() {
            out.add_term(k, (c as u128 * (r % self.p) as u128 % self.p as u128) as u64);
        }
        out
    }

    /// Multiply by the monomial `x^i y^j z^k` of `B`.
    pub fn mul_monomial(&self, i: u32, j: u32, k: u32) -> Result<CechClass> {
        let mut out = CechClass::zero(self.d, self.p);
        for ((kz, a, b), c) in self.terms() {
            out.add_fraction(kz.checked_add(k).ok_or(Error::ExponentOverflow)?, i, j, a, b, c)?;
        }
        Ok(out)
    }

    /// The Frobenius action `F(c z^k/(x^a y^b)) = c^p z^{kp}/(x^{ap} y^{bp})`.
    pub fn frobenius(&self) -> Result<CechClass> {
        let p = self.p;
        let pe = u32::try_from(p).map_err(|_| Error::ExponentOverflow)?;
        let mut out = CechClass::zero(self.d, p);
        for ((k, a, b), c) in self.terms() {
            let mul = |v: u32| v.checked_mul(pe).ok_or(Error::ExponentOverflow);
            // c^p = c in F_p
            out.add_fraction(mul(k)?, 0, 0, mul(a)?, mul(b)?, c)?;
        }
        Ok(out)
    }

    /// Frobenius on a single monomial class, keeping sign and binomial apart.
    pub fn frobenius_detail(&self) -> Result<Vec<FrobeniusTerm>> {
        let mut it = self.terms();
        let (Some(((k, a, b), c)), None) = (it.next(), it.next()) else {
            return Err(Error::Precondition("frobenius_detail needs a single monomial class".into()));
        };
        let (d, p) = (self.d, self.p);
        let pe = p as u32;
        let (kp, ap, bp) = (k * pe, a * pe, b * pe);
        let (s, r) = (kp / d, kp % d);
        let mut out = Vec::new();
        for t in 0..=s {
            let (xi, yj) = (d * t, d * (s - t));
            if xi >= ap || yj >= bp {
                continue;
            }
            let target = CechClass::monomial(d, p, r, ap - xi, bp - yj, 1)?;
            let sign: i8 = if s % 2 == 1 { -1 } else { 1 };
            let m = binomial_mod(s as u64, t as u64, p) * c % p;
            let coefficient = if sign < 0 { (p - m) % p } else { m };
            out.push(FrobeniusTerm { target, sign, binomial: binomial(s as u64, t as u64), coefficient });
        }
        Ok(out)
    }

    /// Coordinates against a basis of monomial classes.
    fn coordinates(&self, basis: &[(u32, u32, u32)]) -> Vec<u64> {
        basis.iter().map(|k| self.terms.get(k).copied().unwrap_or(0)).collect()
    }
}

impl fmt::Display for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let pow = |v: &str, e: u32| match e {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{e}"),
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(k, a, b), &c)| {
                let num = match (k, c) {
                    (0, c) => c.to_string(),
                    (_, 1) => pow("z", k),
                    (_, c) => format!("{c}*{}", pow("z", k)),
                };
                let den = [pow("x", a), pow("y", b)].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*");
                format!("{num}/({den})")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Basis keys `(k, a, b)` of `H^2_m(B)_j`, ordered by `k` then decreasing `a`.
fn basis_keys(d: u32, j: i64) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for k in 0..d {
        // a + b = k - j with a, b >= 1
        let total = k as i64 - j;
        if total < 2 {
            continue;
        }
        for a in (1..total).rev() {
            out.push((k, a as u32, (total - a) as u32));
        }
    }
    out
}

/// A basis of `H^2_m(B)_j`.
pub fn cech_basis(d: u32, p: u64, j: i64) -> Result<Vec<CechClass>> {
    check_params(d, p)?;
    basis_keys(d, j).into_iter().map(|(k, a, b)| CechClass::monomial(d, p, k, a, b, 1)).collect()
}

/// Rank over `F_p` of a list of vectors.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let field = PrimeField::new(p).expect("checked prime");
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col]).expect("nonzero pivot");
        let pivot_row: Vec<u64> = rows[rank].iter().map(|&v| (v as u128 * inv as u128 % p as u128) as u64).collect();
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..ncols {
                    let sub = (f as u128 * pivot_row[c] as u128 % p as u128) as u64;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// One graded piece of `H^2_m(B # k[s,t]) = ⊕_j H^2_m(B)_j ⊗ k[s,t]_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreCohomologySlice {
    pub degree: i64,
    /// Basis pairs `(class of B, monomial of k[s,t])`.
    pub basis: Vec<(CechClass, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreVerdict {
    pub d: u32,
    pub p: u64,
    pub slices: Vec<SegreCohomologySlice>,
    /// Frobenius images of the degree-zero basis.
    pub frobenius_images: Vec<(CechClass, CechClass)>,
    pub frobenius_surjective: bool,
    pub generated_in_degree_zero: bool,
    pub full: bool,
    /// `d = 3`, or `d = 4` with `p ≡ 1 mod 4`; other verdicts are computed only.
    pub certified: bool,
}

fn st_monomials(j: u32) -> Vec<String> {
    (0..=j)
        .rev()
        .map(|u| {
            let v = j - u;
            let f = |n: &str, e: u32| match e {
                0 => None,
                1 => Some(n.to_string()),
                _ => Some(format!("{n}^{e}")),
            };
            let parts: Vec<String> = [f("s", u), f("t", v)].into_iter().flatten().collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        })
        .collect()
}

/// Fullness of `B # F_p[s,t]`: Frobenius onto the degree-zero piece of
/// `H^2`, and `H^2` generated by that piece.
pub fn segre_fullness(d: u32, p: u64) -> Result<SegreVerdict> {
    check_params(d, p)?;
    // H^2_m(B)_j vanishes for j > d - 3, and k[s,t] has nothing in negative degrees
    let top = d as i64 - 3;
    let mut slices = Vec::new();
    for j in 0..=top {
        let classes = cech_basis(d, p, j)?;
        let mut basis = Vec::new();
        for c in &classes {
            for m in st_monomials(j as u32) {
                basis.push((c.clone(), m));
            }
        }
        if !basis.is_empty() {
            slices.push(SegreCohomologySlice { degree: j, basis });
        }
    }
    let keys0 = basis_keys(d, 0);
    let basis0 = cech_basis(d, p, 0)?;
    let frobenius_images: Vec<(CechClass, CechClass)> =
        basis0.iter().map(|c| Ok((c.clone(), c.frobenius()?))).collect::<Result<Vec<_>>>()?;
    let images: Vec<Vec<u64>> = frobenius_images.iter().map(|(_, f)| f.coordinates(&keys0)).collect();
    let frobenius_surjective = rank_mod_p(images, p) == keys0.len();
    // degree-j part of R · F(H_0) is (B_j · F(H_0)) ⊗ k[s,t]_j
    let mut generated_in_degree_zero = true;
    for j in 1..=top {
        let keys = basis_keys(d, j);
        if keys.is_empty() {
            continue;
        }
        let mut rows = Vec::new();
        for (_, img) in &frobenius_images {
            for k in 0..=j as u32 {
                for i in 0..=j as u32 - k {
                    rows.push(img.mul_monomial(i, j as u32 - k - i, k)?.coordinates(&keys));
                }
            }
        }
        if rank_mod_p(rows, p) < keys.len() {
            generated_in_degree_zero = false;
        }
    }
    Ok(SegreVerdict {
        d,
        p,
        slices,
        frobenius_images,
        frobenius_surjective,
        generated_in_degree_zero,
        full: frobenius_surjective && generated_in_degree_zero,
        certified: d == 3 || (d == 4 && p % 4 == 1),
    })
}
