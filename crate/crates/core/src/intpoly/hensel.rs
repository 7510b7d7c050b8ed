//! Quadratic Hensel lifting of a modular factorization along a factor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::PolyModP;

/// Coefficients low-to-high, reduced into `0..m`, trimmed.
type Zm = Vec<BigInt>;

fn trim(mut v: Zm) -> Zm {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn reduce(v: &[BigInt], m: &BigInt) -> Zm {
    trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zm {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n)
        .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
        .collect())
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zm {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n)
        .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
        .collect())
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Zm {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

fn scale(a: &[BigInt], k: &BigInt, m: &BigInt) -> Zm {
    reduce(&a.iter().map(|c| c * k).collect::<Vec<_>>(), m)
}

/// Division by a monic `d` modulo `m`.
fn divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Zm, Zm) {
    debug_assert!(d.last().is_some_and(One::is_one));
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (0..q.len()).rev() {
        let t = r[i + dd].mod_floor(m);
        if t.is_zero() {
            continue;
        }
        for (j, dc) in d.iter().enumerate() {
            r[i + j] = (&r[i + j] - &t * dc).mod_floor(m);
        }
        q[i] = t;
    }
    r.truncate(dd);
    (trim(q), reduce(&r, m))
}

pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Map into the symmetric range `(-m/2, m/2]`.
pub(crate) fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m >> 1usize;
    v.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn lift_u64(p: &PolyModP) -> Zm {
    trim(p.c.iter().map(|&c| BigInt::from(c)).collect())
}

struct Lifted {
    g: Zm,
    h: Zm,
    s: Zm,
    t: Zm,
}

fn hensel_step(f: &[BigInt], cur: Lifted, m: &BigInt) -> Lifted {
    let Lifted { g, h, s, t } = cur;
    let e = sub(f, &mul(&g, &h, m), m);
    let (q, r) = divrem_monic(&mul(&s, &e, m), &h, m);
    let g2 = add(&add(&g, &mul(&t, &e, m), m), &mul(&q, &g, m), m);
    let h2 = add(&h, &r, m);
    let b = sub(
        &add(&mul(&s, &g2, m), &mul(&t, &h2, m), m),
        &[BigInt::one()],
        m,
    );
    let (c, d) = divrem_monic(&mul(&s, &b, m), &h2, m);
    let s2 = sub(&s, &d, m);
    let t2 = sub(&sub(&t, &mul(&t, &b, m), m), &mul(&c, &g2, m), m);
    Lifted { g: g2, h: h2, s: s2, t: t2 }
}

/// Lift `f ≡ lc(f) * ∏ factors (mod p)` to monic factors modulo `modulus`,
/// which must be a power of `p`. `f` is given modulo `modulus`.
pub(crate) fn lift_factors(
    f: &[BigInt],
    factors: &[PolyModP],
    p: u64,
    modulus: &BigInt,
) -> Vec<Zm> {
    let lc = f.last().expect("nonzero").clone();
    if factors.len() == 1 {
        return vec![scale(f, &inverse_mod(&lc, modulus), modulus)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let bp = BigInt::from(p);
    let lc_p = PolyModP::new(p, vec![lc.mod_floor(&bp).try_into().unwrap()]);
    let g0 = left.iter().fold(lc_p, |acc, u| acc.mul(u));
    let h0 = right
        .iter()
        .fold(PolyModP::new(p, vec![1]), |acc, u| acc.mul(u));
    let (one, s0, t0) = g0.ext_gcd(&h0);
    debug_assert!(one.is_one());
    let mut cur = Lifted {
        g: lift_u64(&g0),
        h: lift_u64(&h0),
        s: lift_u64(&s0),
        t: lift_u64(&t0),
    };
    let mut m = bp;
    while &m < modulus {
        let next = (&m * &m).min(modulus.clone());
        cur = hensel_step(f, cur, &next);
        m = next;
    }
    let mut out = lift_factors(&cur.g, left, p, modulus);
    out.extend(lift_factors(&cur.h, right, p, modulus));
    out
}

pub(crate) fn reduce_int(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    debug_assert!(m.is_positive());
    reduce(v, m)
}
