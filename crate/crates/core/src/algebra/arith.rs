//! Small integer number theory at desk scale: everything here is trial
//! division or direct search.

use num_integer::Integer;

use crate::error::{invalid, Result};

pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v.is_multiple_of(2) {
        return v == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p <= bound` in increasing order.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&p| is_prime(p)).collect()
}

/// Decomposes `v = p^d` with `p` prime, if possible.
pub fn is_prime_power(v: u64) -> Result<Option<(u64, u32)>> {
    if v == 0 {
        return Err(invalid("is_prime_power: v must be positive"));
    }
    if v == 1 {
        return Ok(None);
    }
    let p = smallest_prime_factor(v);
    let mut rest = v;
    let mut d = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    Ok((rest == 1).then_some((p, d)))
}

fn smallest_prime_factor(v: u64) -> u64 {
    debug_assert!(v >= 2);
    if v.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= v {
        if v.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    v
}

/// Least `t >= 1` with `p^t = 1 (mod m)`.
pub fn mult_order(p: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(invalid(format!(
            "mult_order: modulus {m} must be at least 2"
        )));
    }
    if p.gcd(&m) != 1 {
        return Err(invalid(format!("mult_order: gcd({p}, {m}) != 1")));
    }
    let base = (p % m) as u128;
    let m128 = m as u128;
    let mut acc = base;
    let mut t = 1u64;
    while acc != 1 {
        acc = acc * base % m128;
        t += 1;
    }
    Ok(t)
}

pub fn is_sum_of_two_squares(v: u64) -> bool {
    let mut a = 0u64;
    while a * a <= v {
        let rest = v - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            return true;
        }
        a += 1;
    }
    false
}

/// Exact integer square root, if `v` is a perfect square.
pub fn exact_sqrt(v: u64) -> Option<u64> {
    let r = v.isqrt();
    (r * r == v).then_some(r)
}
