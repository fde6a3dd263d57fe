//! Small number-theoretic helpers: Jacobi symbols, modular inverses, primality.

use num_integer::Integer;

use crate::error::{Error, Result};

/// The Jacobi symbol `(a/n)` for odd `n >= 1`.
pub fn jacobi_symbol(a: i64, n: u64) -> Result<i8> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let mut a = (a as i128).rem_euclid(n as i128) as u64;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// The inverse of `x` modulo `m`, in `[1, m)`.
pub fn mod_inverse(x: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
    }
    let mi = m as i128;
    let e = (x as i128).rem_euclid(mi).extended_gcd(&mi);
    if e.gcd != 1 {
        return Err(Error::NotCoprime { x, m });
    }
    Ok(e.x.rem_euclid(mi) as u64)
}

/// `delta_{p,k}`, the least positive residue of `1/24 (mod p^k)` for `p` in {5, 7, 11}.
pub fn delta(p: u64, k: u32) -> Result<u64> {
    if !matches!(p, 5 | 7 | 11) || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "delta is defined for p in {{5, 7, 11}} and k >= 1, got p = {p}, k = {k}"
        )));
    }
    let modulus = p.checked_pow(k).ok_or(Error::Overflow("p^k"))?;
    mod_inverse(24, modulus)
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `p >= from` satisfying `pred`, searching up to `limit`.
pub fn smallest_prime_where(from: u64, limit: u64, pred: impl Fn(u64) -> bool) -> Option<u64> {
    (from..=limit).find(|&p| is_prime(p) && pred(p))
}

/// Smallest prime `p >= 5` with `(d/p) = -1`.
pub fn smallest_nonresidue_prime(d: i64) -> u64 {
    smallest_prime_where(5, 1_000_000, |p| jacobi_symbol(d, p) == Ok(-1))
        .expect("a prime with the requested symbol exists below 10^6")
}
