//! Small integer helpers for group orders (all orders here are at most a few thousand).

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// If `n` is a power of a single prime, returns `(p, e)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [single] => Some(*single),
        _ => None,
    }
}

/// Exponent `e` with `e ≡ 1 (mod m1)` and `e ≡ 0 (mod m2)`, for coprime `m1`, `m2`.
pub fn crt_idempotent(m1: u64, m2: u64) -> u64 {
    debug_assert_eq!(m1.gcd(&m2), 1);
    if m1 == 1 {
        return 0;
    }
    let eg = (m2 as i64).extended_gcd(&(m1 as i64));
    // eg.x * m2 ≡ 1 (mod m1)
    let inv = eg.x.rem_euclid(m1 as i64) as u64;
    (m2 * inv) % (m1 * m2)
}
