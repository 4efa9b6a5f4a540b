//! Integer helpers: primality, factorization of desk-scale constants,
//! p-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin for u64 (valid for all n < 2^64 with this base set).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Pollard's rho with Brent cycle detection. `n` must be odd, composite, > 1.
fn pollard_rho(n: u64) -> u64 {
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
    }
    // All parameter choices failed; practically unreachable for composite n.
    n
}

fn factor_u64_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n <= 1 {
        return;
    }
    if is_prime_u64(n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    let d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

/// Complete prime factorization of |n| as a prime -> exponent map.
///
/// Errors with `FactorizationFailed` when a prime factor does not fit in u64;
/// everything downstream indexes constant atoms by u64 primes.
pub fn factor_integer(n: &BigInt) -> Result<BTreeMap<u64, u32>> {
    let mut n = n.abs();
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factor zero".into()));
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        let pb = BigInt::from(p);
        while (&n % &pb).is_zero() {
            n /= &pb;
            *out.entry(p).or_insert(0) += 1;
        }
    }
    // Trial division by 6k±1 up to 10^6, then u64 rho on the cofactor.
    let mut d = 17u64;
    while d <= 1_000_000 && BigInt::from(d) * BigInt::from(d) <= n {
        let db = BigInt::from(d);
        while (&n % &db).is_zero() {
            n /= &db;
            *out.entry(d).or_insert(0) += 1;
        }
        d += if d % 6 == 5 { 2 } else { 4 };
    }
    if n.is_one() {
        return Ok(out);
    }
    match n.to_u64() {
        Some(rest) => {
            factor_u64_into(rest, &mut out);
            Ok(out)
        }
        None => Err(Error::FactorizationFailed(format!(
            "constant cofactor {} exceeds u64",
            n
        ))),
    }
}

/// v_p(n) for n != 0.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    v
}

/// All primes in [2, bound], by sieve.
pub fn primes_up_to(bound: usize) -> Vec<u64> {
    let mut sieve = vec![true; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= bound {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Rebuilds the integer from a prime-exponent map.
pub fn unfactor(map: &BTreeMap<u64, u32>) -> BigInt {
    let mut n = BigInt::one();
    for (&p, &e) in map {
        n *= BigInt::from(p).pow(e);
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
    }

    #[test]
    fn factor_roundtrip() {
        let n = BigInt::from(95095u64 * 95095 * 12);
        let f = factor_integer(&n).unwrap();
        assert_eq!(unfactor(&f), n);
        assert_eq!(f[&5], 2);
        assert_eq!(f[&2], 2);
    }

    #[test]
    fn factors_the_seven_prime_product() {
        // 7*13*19*31*37*43*67
        let a: u64 = 7 * 13 * 19 * 31 * 37 * 43 * 67;
        let f = factor_integer(&BigInt::from(a)).unwrap();
        assert_eq!(f.keys().copied().collect::<Vec<_>>(), vec![7, 13, 19, 31, 37, 43, 67]);
        assert!(f.values().all(|&e| e == 1));
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigInt::from(24), 2), 3);
        assert_eq!(valuation(&BigInt::from(24), 3), 1);
        assert_eq!(valuation(&BigInt::from(-7), 7), 1);
    }
}
