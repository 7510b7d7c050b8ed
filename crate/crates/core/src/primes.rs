//! Small-integer number theory: primality and prime divisors.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

const TRIAL_LIMIT: u64 = 1 << 16;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in increasing order starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_prime(n))
}

// Pollard-Brent on u64; `n` must be odd and composite.
fn pollard_brent(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = x.abs_diff(y).gcd(&n);
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_u64(n: u64, out: &mut BTreeSet<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.insert(n);
        return;
    }
    let d = pollard_brent(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

/// Distinct prime divisors of `|n|`. Zero and units have none.
///
/// Fails with [`Error::PrimeTooLarge`] if, after trial division, a cofactor
/// does not fit in 64 bits.
pub fn prime_divisors(n: &BigInt) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    let mut rest: BigUint = n.magnitude().clone();
    if rest.is_zero() {
        return Ok(out);
    }
    let mut p = 2u64;
    while p < TRIAL_LIMIT && !rest.is_one() {
        let bp = BigUint::from(p);
        if (&rest % &bp).is_zero() {
            out.insert(p);
            while (&rest % &bp).is_zero() {
                rest /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok(out);
    }
    match rest.to_u64() {
        Some(r) => {
            factor_u64(r, &mut out);
            Ok(out)
        }
        None => Err(Error::PrimeTooLarge(rest.to_string())),
    }
}
