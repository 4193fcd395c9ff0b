//! Small integer-arithmetic helpers shared across the crate: divisor
//! enumeration, factorization by trial division, and square-free tests.
//!
//! Everything here operates on `u64` and is exact. Inputs in this tool are
//! levels and progression moduli, which stay far below the range where trial
//! division would hurt.

/// All positive divisors of `n`, in increasing order.
///
/// Panics if `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of 0 are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization of `n` as `(prime, exponent)` pairs in increasing
/// prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorization of 0 is not defined");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, in increasing order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Whether `n` is square-free (no prime divides it twice). `1` is square-free.
pub fn is_squarefree(n: u64) -> bool {
    factorize(n).into_iter().all(|(_, e)| e == 1)
}
