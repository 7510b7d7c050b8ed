//! Dense polynomials over a prime field `F_p` with `p < 2^32`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PolyModP {
    pub p: u64,
    /// Low-to-high, trimmed, entries in `0..p`.
    pub c: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

impl PolyModP {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyModP { p, c }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let bp = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|v| {
                let mut r = v % &bp;
                if r.is_negative() {
                    r += &bp;
                }
                r.to_u64().unwrap()
            })
            .collect();
        Self::new(p, c)
    }

    fn zero(p: u64) -> Self {
        PolyModP { p, c: Vec::new() }
    }

    fn one(p: u64) -> Self {
        PolyModP { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c == [1]
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[cfg(test)]
    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + self.mulm(a, b)) % self.p;
            }
        }
        Self::new(self.p, v)
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = inv_mod(l, self.p);
                Self::new(self.p, self.c.iter().map(|&a| self.mulm(a, inv)).collect())
            }
        }
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return (Self::zero(self.p), self.clone());
        }
        let inv = inv_mod(*d.c.last().unwrap(), self.p);
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let t = self.mulm(r[i + dd], inv);
            q[i] = t;
            if t == 0 {
                continue;
            }
            for (j, &dc) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + self.p - self.mulm(t, dc)) % self.p;
            }
        }
        r.truncate(dd);
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        let l = *r0.c.last().expect("ext_gcd of two zero polynomials");
        let inv = PolyModP::new(p, vec![inv_mod(l, p)]);
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| self.mulm(a, i as u64 % self.p))
            .collect();
        Self::new(self.p, v)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).degree() == 0
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = PolyModP::x(p);
    let mut w = x.clone();
    let mut d = 0;
    let bp = BigUint::from(p);
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        w = w.pow_mod(&bp, &rest);
        let g = rest.gcd(&w.sub(&x));
        if g.degree() > 0 {
            rest = rest.divrem(&g).0;
            w = w.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest.monic(), deg));
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting for odd `p`.
pub(crate) fn equal_degree(g: &PolyModP, d: usize, rng: &mut StdRng) -> Vec<PolyModP> {
    let p = g.p;
    debug_assert!(p % 2 == 1);
    if g.degree() == d {
        return vec![g.monic()];
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1usize;
    loop {
        let a = PolyModP::new(p, (0..g.degree()).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() == 0 {
            continue;
        }
        let b = a.pow_mod(&e, g).sub(&PolyModP::one(p));
        let h = g.gcd(&b);
        if h.degree() > 0 && h.degree() < g.degree() {
            let mut left = equal_degree(&h, d, rng);
            left.extend(equal_degree(&g.divrem(&h).0, d, rng));
            return left;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial over `F_p`.
pub(crate) fn factor_squarefree(f: &PolyModP) -> Vec<PolyModP> {
    let mut rng = StdRng::seed_from_u64(0x5eed ^ f.p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree(&g, d, &mut rng));
    }
    out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
    out
}

/// Degrees of the irreducible factors modulo `p` (distinct-degree only).
pub(crate) fn factor_degrees(f: &PolyModP) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        out.extend(std::iter::repeat(d).take(g.degree() / d));
    }
    out
}
