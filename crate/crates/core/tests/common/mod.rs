//! Helpers shared by the integration tests, including an independent
//! oracle for local cohomology of monomial quotients.

#![allow(dead_code)]

use cofull::algebra::{Monomial, OrderKind, PolyRing, PrimeField, RingRef};
use cofull::ideal::Ideal;
use cofull::session::parse_polynomial;
use rand::Rng;

pub fn ring(p: u64, vars: &[&str]) -> RingRef<PrimeField> {
    PolyRing::new(PrimeField::new(p).unwrap(), vars, OrderKind::Grevlex).unwrap()
}

pub fn xyz(p: u64) -> RingRef<PrimeField> {
    ring(p, &["x", "y", "z"])
}

pub fn xyzw(p: u64) -> RingRef<PrimeField> {
    ring(p, &["x", "y", "z", "w"])
}

pub fn ideal(r: &RingRef<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
}

pub fn mono_ideal(r: &RingRef<PrimeField>, exps: &[Vec<u32>]) -> Ideal<PrimeField> {
    let monos: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
    Ideal::from_monomials(r, &monos)
}

/// Exponent vectors of a random proper monomial ideal with generators of
/// degree `1..=max_deg`.
pub fn random_monomial_gens(rng: &mut impl Rng, nvars: usize, max_deg: u32, max_gens: usize) -> Vec<Vec<u32>> {
    let count = rng.gen_range(1..=max_gens);
    (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut e = vec![0u32; nvars];
            for _ in 0..deg {
                e[rng.gen_range(0..nvars)] += 1;
            }
            e
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of a matrix over F_p by row reduction.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else { continue };
        rows.swap(rank, piv);
        let f = inv(rows[rank][c]);
        for v in rows[rank].iter_mut() {
            *v = *v * f % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let m = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p - m * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Local cohomology of `S/I`, `I` a monomial ideal, straight from the Čech
/// complex on the variables, one multidegree type at a time.
///
/// In multidegree `a` the Čech complex has one basis vector for each set
/// `F` of inverted variables with `a_j >= 0` off `F` and `x^a` outside
/// `I S_{x_F}`. That complex only depends on which coordinates are negative
/// and on each nonnegative coordinate capped at the largest exponent
/// `ρ_j` occurring in the generators, so each type is computed once and
/// weighted by the number of `a` of total degree `d` realising it.
pub mod cech_oracle {
    use super::{binomial, rank_mod_p};

    fn nonzero(gens: &[Vec<u32>], f: u32, a: &[i64]) -> bool {
        let n = a.len();
        if (0..n).any(|j| f >> j & 1 == 0 && a[j] < 0) {
            return false;
        }
        !gens.iter().any(|m| (0..n).all(|j| f >> j & 1 == 1 || i64::from(m[j]) <= a[j]))
    }

    fn sign(f: u32, j: usize) -> i64 {
        if (f & ((1u32 << j) - 1)).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `dim H^i` of the Čech complex in the multidegree represented by `a`.
    fn cohomology_at(gens: &[Vec<u32>], a: &[i64], i: usize, p: u64) -> usize {
        let n = a.len();
        let level = |k: usize| -> Vec<u32> {
            (0u32..1 << n).filter(|f| f.count_ones() as usize == k && nonzero(gens, *f, a)).collect()
        };
        let diff = |src: &[u32], dst: &[u32]| -> Vec<Vec<u64>> {
            src.iter()
                .map(|&f| {
                    dst.iter()
                        .map(|&g| {
                            let extra = g & !f;
                            if g & f == f && extra.count_ones() == 1 {
                                let s = sign(f, extra.trailing_zeros() as usize);
                                s.rem_euclid(p as i64) as u64
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let here = level(i);
        if here.is_empty() {
            return 0;
        }
        let out_rank = if i < n { rank_mod_p(diff(&here, &level(i + 1)), p) } else { 0 };
        let in_rank = if i > 0 {
            let prev = level(i - 1);
            if prev.is_empty() {
                0
            } else {
                rank_mod_p(diff(&prev, &here), p)
            }
        } else {
            0
        };
        here.len() - out_rank - in_rank
    }

    /// Number of `a` in Z^n with sum `d`, `a_j <= -1` on `neg`, `a_j >= rho_j`
    /// on `up`, the remaining coordinates fixed with sum `fixed`. `None`
    /// when infinite.
    fn count(neg: usize, up: &[u32], fixed: i64, d: i64) -> Option<u64> {
        let t = d - fixed;
        match (neg, up.len()) {
            (0, 0) => Some(u64::from(t == 0)),
            (_, 0) => {
                let w = -t;
                Some(if w >= neg as i64 { binomial((w - 1) as u64, neg as u64 - 1) } else { 0 })
            }
            (0, u) => {
                let w = t - up.iter().map(|&r| i64::from(r)).sum::<i64>();
                Some(if w >= 0 { binomial(w as u64 + u as u64 - 1, u as u64 - 1) } else { 0 })
            }
            _ => None,
        }
    }

    /// `dim_k H^i_m(S/I)_d` over F_p for the monomial ideal with these generators.
    pub fn local_cohomology_dim(gens: &[Vec<u32>], i: usize, d: i64, p: u64) -> usize {
        let n = gens[0].len();
        let rho: Vec<u32> = (0..n).map(|j| gens.iter().map(|m| m[j]).max().unwrap_or(0)).collect();
        let mut total = 0u64;
        for neg in 0u32..1 << n {
            // capped values c_j in 0..=rho_j off `neg`; c_j = rho_j means "at least rho_j"
            let free: Vec<usize> = (0..n).filter(|j| neg >> j & 1 == 0).collect();
            let mut caps = vec![0u32; free.len()];
            loop {
                let mut a = vec![-1i64; n];
                let mut fixed = 0i64;
                let mut up = Vec::new();
                for (k, &j) in free.iter().enumerate() {
                    a[j] = i64::from(caps[k]);
                    if caps[k] == rho[j] {
                        up.push(rho[j]);
                    } else {
                        fixed += i64::from(caps[k]);
                    }
                }
                let h = cohomology_at(gens, &a, i, p);
                if h > 0 {
                    let c = count(neg.count_ones() as usize, &up, fixed, d)
                        .expect("a graded piece of local cohomology is finite dimensional");
                    total += h as u64 * c;
                }
                // next capped vector
                let mut k = 0;
                while k < caps.len() && caps[k] == rho[free[k]] {
                    caps[k] = 0;
                    k += 1;
                }
                if k == caps.len() {
                    break;
                }
                caps[k] += 1;
            }
        }
        total as usize
    }
}
