//! Factorizations, unit groups and the quadratic congruences the
//! classification depends on.
//!
//! Moduli in this crate stay well below `10^5`, so factorization is plain
//! trial division and square roots are found per prime power by scanning
//! residues, then glued together with the Chinese remainder theorem.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `n = 2^r * p_1^e_1 * ... * p_s^e_s` with `p_1 < ... < p_s` odd primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    r: u32,
    odd_factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// 2-adic valuation of `n`.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn odd_factors(&self) -> &[(u64, u32)] {
        &self.odd_factors
    }

    pub fn odd_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.odd_factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct odd prime divisors.
    pub fn h(&self) -> usize {
        self.odd_factors.len()
    }

    /// Prime-power factors `p^e` in increasing prime order, 2 first.
    pub fn prime_powers(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.odd_factors.len() + 1);
        if self.r > 0 {
            out.push(1u64 << self.r);
        }
        out.extend(self.odd_factors.iter().map(|&(p, e)| p.pow(e)));
        out
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroModulus(n));
    }
    let r = n.trailing_zeros();
    let mut rest = n >> r;
    let mut odd_factors = Vec::new();
    let mut p = 3u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            odd_factors.push((p, e));
        }
        p += 2;
    }
    if rest > 1 {
        odd_factors.push((rest, 1));
    }
    Ok(Factorization { n, r, odd_factors })
}

/// Residues in `[0, m)` coprime to `m`. The trivial ring `Z_1` has the
/// single unit `0`.
pub fn units(m: u64) -> Vec<u64> {
    if m <= 1 {
        return vec![0];
    }
    (1..m).filter(|x| x.gcd(&m) == 1).collect()
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    (g.gcd == 1).then(|| reduce(g.x, m))
}

fn crt_pair(x1: u64, m1: u64, x2: u64, m2: u64) -> u64 {
    // m1, m2 coprime
    let inv = inverse_mod(m1 % m2, m2).expect("coprime moduli");
    let diff = (x2 as i128 - x1 as i128).rem_euclid(m2 as i128) as u128;
    let k = diff * inv as u128 % m2 as u128;
    (x1 as u128 + m1 as u128 * k) as u64
}

/// All `x` in `[0, m)` with `x^2 = a (mod m)`, sorted ascending.
pub fn sqrt_solutions(a: i64, m: u64) -> Vec<u64> {
    if m == 0 {
        return Vec::new();
    }
    if m == 1 {
        return vec![0];
    }
    let fact = factorize(m).expect("m >= 1");
    let mut acc: Vec<u64> = vec![0];
    let mut modulus = 1u64;
    for q in fact.prime_powers() {
        let target = reduce(a, q);
        let local: Vec<u64> = (0..q)
            .filter(|&x| (x as u128 * x as u128 % q as u128) as u64 == target)
            .collect();
        if local.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &x in &acc {
            for &y in &local {
                next.push(crt_pair(x, modulus, y, q));
            }
        }
        acc = next;
        modulus *= q;
    }
    acc.sort_unstable();
    acc
}

/// Number of square roots of 1 modulo `n`: `2^(h+u)` where `h` counts the
/// odd prime divisors and `u` is 0, 1, 2 for `r <= 1`, `r = 2`, `r >= 3`.
pub fn count_sqrt1(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    let u = match f.r() {
        0 | 1 => 0,
        2 => 1,
        _ => 2,
    };
    Ok(1u64 << (f.h() + u))
}

/// `r <= 1` and every odd prime divisor is `1 mod 4`.
pub fn satisfies_star(n: u64) -> bool {
    match factorize(n) {
        Ok(f) => f.r() <= 1 && f.odd_primes().all(|p| p % 4 == 1),
        Err(_) => false,
    }
}

/// Divisibility indicator: 1 when `q | n`, else 0.
pub fn rho(q: u64, n: u64) -> u64 {
    u64::from(n % q == 0)
}

/// Whether `x^2 = 1 + n (mod 2n)` is solvable, for even `n`.
///
/// Odd squares are `1 mod 8`, so the 2-primary part forces `8 | n`; the odd
/// part of the congruence is `x^2 = 1` and always solvable.
pub fn solvable_shifted(n: u64) -> Result<bool> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddModulus(n));
    }
    Ok(n % 8 == 0)
}

/// Sign-vector images of the square roots of 1 modulo `n`.
///
/// For `r = 0` the vector is `(alpha mod p_1, ..., alpha mod p_s)`; otherwise
/// `alpha mod 2^e` is prepended. Components are written as symmetric
/// residues, so every entry is `1` or `-1`. Only the pairs
/// `(r = 0, e = 0)`, `(r = 2, e = 1)`, `(r >= 3, e = 2)`, `(r >= 4, e = 3)`
/// are accepted.
pub fn solution_vectors(n: u64, e: u32) -> Result<BTreeSet<Vec<i64>>> {
    let f = factorize(n)?;
    let r = f.r();
    let ok = matches!((r, e), (0, 0) | (2, 1)) || (r >= 3 && e == 2) || (r >= 4 && e == 3);
    if !ok {
        return Err(Error::VectorCase { n, r, e });
    }
    let mut moduli = Vec::new();
    if r >= 1 {
        moduli.push(1u64 << e);
    }
    moduli.extend(f.odd_primes());
    let out = sqrt_solutions(1, n)
        .into_iter()
        .map(|alpha| moduli.iter().map(|&m| symmetric(alpha % m, m)).collect())
        .collect();
    Ok(out)
}

fn symmetric(x: u64, m: u64) -> i64 {
    if 2 * x > m {
        x as i64 - m as i64
    } else {
        x as i64
    }
}
