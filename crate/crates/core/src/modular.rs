//! Prime-field arithmetic with integer recovery.
//!
//! Every integer the pipeline reports has an a-priori absolute bound `B`.
//! Working modulo a prime `p > 2B` with `p = 1 (mod exponent)` lets all
//! character values live in `GF(p)` (the `e`-th roots of unity exist there)
//! and lets each final integer be read back as its least absolute residue.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::ArithmeticError;
use crate::group::FiniteGroup;

/// Primes are searched below this limit so products fit in `u64`.
pub const PRIME_SEARCH_LIMIT: u64 = 1 << 31;

/// Default seed for the primitive-root sampler.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

const RANDOM_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkingPrime {
    p: u64,
    exponent: u64,
    root: u64,
    bound: u64,
    /// `root^j` for `j < exponent`.
    root_powers: Vec<u64>,
}

impl WorkingPrime {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The chosen primitive `exponent`-th root of unity.
    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Primitive `m`-th root of unity `root^(exponent/m)` raised to `j`.
    #[inline]
    pub fn unity_root(&self, m: u64, j: i64) -> u64 {
        let step = self.exponent / m;
        let idx = (j.rem_euclid(m as i64) as u64) * step;
        self.root_powers[idx as usize]
    }

    /// Index `j` with `root^j = a`, if `a` is an `exponent`-th root of unity.
    pub fn unity_log(&self, a: u64) -> Option<u64> {
        self.root_powers.iter().position(|&x| x == a).map(|j| j as u64)
    }

    /// Least absolute residue of `residue`; exact whenever the true value
    /// lies in `[-bound, bound]`.
    pub fn recover_integer(&self, residue: u64) -> i64 {
        let r = residue % self.p;
        if r > self.p / 2 {
            r as i64 - self.p as i64
        } else {
            r as i64
        }
    }

    /// `m^-1 * sum_j values[j] * zeta^(-alpha j)` with `zeta` a primitive
    /// `m`-th root of unity; extracts the multiplicity of `zeta^alpha`.
    pub fn root_power_sum(&self, values: &[u64], alpha: i64, m: u64) -> Result<u64, ArithmeticError> {
        if m == 0 {
            return Err(ArithmeticError::ZeroLength);
        }
        if !self.exponent.is_multiple_of(m) {
            return Err(ArithmeticError::LengthNotDividingExponent { m, exponent: self.exponent });
        }
        debug_assert!(values.len() as u64 >= m);
        let sum = (0..m).fold(0u64, |acc, j| {
            let w = self.unity_root(m, -alpha * j as i64);
            self.add(acc, self.mul(values[j as usize], w))
        });
        Ok(self.mul(sum, self.inv(m % self.p)))
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = 11u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The recovery bound `max(|G|, ceil(2 sqrt|G|), (2 k_max - 1)(g_max - 1)|G|)`.
pub fn recovery_bound(order: u64, k_max: u64, g_max: u64) -> u64 {
    // ceil(2 sqrt(order)) = least t with t^2 >= 4 order
    let four_n = 4 * order;
    let mut two_sqrt = (four_n as f64).sqrt() as u64;
    while two_sqrt * two_sqrt < four_n {
        two_sqrt += 1;
    }
    while two_sqrt > 0 && (two_sqrt - 1) * (two_sqrt - 1) >= four_n {
        two_sqrt -= 1;
    }
    let dim = (2 * k_max.max(1) - 1).saturating_mul(g_max.max(2) - 1).saturating_mul(order);
    order.max(two_sqrt).max(dim)
}

/// Smallest prime `p = 1 (mod exponent)` above `2 * bound`, with a verified
/// primitive `exponent`-th root of unity.
pub fn choose_prime(g: &FiniteGroup, k_max: u64, g_max: u64) -> Result<WorkingPrime, ArithmeticError> {
    choose_prime_seeded(g.exponent() as u64, recovery_bound(g.order() as u64, k_max, g_max), DEFAULT_SEED)
}

pub fn choose_prime_seeded(exponent: u64, bound: u64, seed: u64) -> Result<WorkingPrime, ArithmeticError> {
    let fail = ArithmeticError::PrimeSearchExhausted { exponent, bound };
    let lo = bound.checked_mul(2).and_then(|b| b.checked_add(1)).ok_or(fail.clone())?;
    // first candidate >= lo with candidate = 1 (mod exponent)
    let mut p = lo + (exponent + 1 - lo % exponent) % exponent;
    if exponent == 1 {
        p = lo;
    }
    while p < PRIME_SEARCH_LIMIT && !is_prime(p) {
        p += exponent;
    }
    if p >= PRIME_SEARCH_LIMIT {
        return Err(fail);
    }
    let root = primitive_root_of_unity(p, exponent, seed);
    let mut root_powers = Vec::with_capacity(exponent as usize);
    let mut acc = 1u64;
    for _ in 0..exponent {
        root_powers.push(acc);
        acc = acc * root % p;
    }
    Ok(WorkingPrime { p, exponent, root, bound, root_powers })
}

fn primitive_root_of_unity(p: u64, e: u64, seed: u64) -> u64 {
    let qs = prime_factors(e);
    let is_primitive = |z: u64| pow_mod(z, e, p) == 1 && qs.iter().all(|&q| pow_mod(z, e / q, p) != 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let a = rng.gen_range(2..p.max(3));
        let z = pow_mod(a, (p - 1) / e, p);
        if is_primitive(z) {
            return z;
        }
    }
    (1..p)
        .map(|a| pow_mod(a, (p - 1) / e, p))
        .find(|&z| is_primitive(z))
        .expect("GF(p)* is cyclic, so a primitive root of unity of every order dividing p-1 exists")
}
