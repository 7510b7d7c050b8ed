//! Independent oracles shared by the integration tests. Nothing here calls
//! the code under test except for plain constructors and accessors.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use resnil_core::intpoly::IntPoly;
use resnil_core::liealg::{standard_factorization, LieElement, LyndonBasis};
use resnil_core::zlinalg::IntMatrix;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Product of random elementary matrices and a random sign diagonal.
pub fn random_unimodular(rng: &mut StdRng, n: usize, steps: usize) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for row in rows.iter_mut() {
        if rng.gen_bool(0.3) {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
    }
    if n < 2 {
        return IntMatrix::from_i64_rows(&rows);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = *[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
        if rng.gen_bool(0.15) {
            rows.swap(i, j);
        } else {
            for col in 0..n {
                rows[i][col] += c * rows[j][col];
            }
        }
    }
    IntMatrix::from_i64_rows(&rows)
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_i64_rows(&data)
}

pub fn random_poly(rng: &mut StdRng, max_degree: usize, bound: i64) -> IntPoly {
    loop {
        let d = rng.gen_range(0..=max_degree);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-bound..=bound)).collect();
        let p = IntPoly::from_i64s(&c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

// ---------------------------------------------------------------------------
// factorization oracle for degree <= 4

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("small value");
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

fn poly_divide(p: &IntPoly, d: &IntPoly) -> Option<IntPoly> {
    // schoolbook long division, exact over Z or None
    let mut rem: Vec<BigInt> = p.coeffs().to_vec();
    let dc = d.coeffs();
    let dd = dc.len() - 1;
    if rem.len() < dc.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let (qi, r) = rem[i + dd].div_rem(&dc[dd]);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in dc.iter().enumerate() {
            rem[i + j] -= &qi * c;
        }
        q[i] = qi;
    }
    rem.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
}

fn find_small_factor(p: &IntPoly) -> Option<IntPoly> {
    let deg = p.degree().unwrap();
    let lead = p.leading().unwrap().clone();
    let c0 = p.coeff(0);
    if c0.is_zero() {
        return Some(IntPoly::from_i64s(&[0, 1]));
    }
    // linear a x + b
    for a in divisors(&lead) {
        for b in divisors(&c0) {
            for b in [b.clone(), -b] {
                let q = IntPoly::new(vec![b, a.clone()]);
                if poly_divide(p, &q).is_some() {
                    return Some(q);
                }
            }
        }
    }
    if deg < 4 {
        return None;
    }
    // quadratic a x^2 + b x + c with q(1) | p(1); p has no rational root here
    let p1 = p.eval(&BigInt::one());
    for a in divisors(&lead) {
        for c in divisors(&c0) {
            for c in [c.clone(), -c] {
                for s in divisors(&p1) {
                    for s in [s.clone(), -s] {
                        let b = &s - &a - &c;
                        let q = IntPoly::new(vec![c.clone(), b, a.clone()]);
                        if poly_divide(p, &q).is_some() {
                            return Some(q);
                        }
                    }
                }
            }
        }
    }
    None
}

/// `(unit, content, factors sorted by degree then coefficient vector)` by
/// divisor enumeration.
pub fn brute_force_factor(p: &IntPoly) -> (i8, BigInt, Vec<(IntPoly, u32)>) {
    let content = p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let mut unit = if p.leading().unwrap().is_negative() { -1 } else { 1 };
    let mut rest = IntPoly::new(p.coeffs().iter().map(|c| c / &content * unit).collect());
    let mut found: Vec<IntPoly> = Vec::new();
    while rest.degree().unwrap() > 0 {
        match find_small_factor(&rest) {
            Some(q) => {
                let q = if q.leading().unwrap().is_negative() {
                    unit = -unit;
                    IntPoly::new(q.coeffs().iter().map(|c| -c).collect())
                } else {
                    q
                };
                rest = poly_divide(&rest, &q).unwrap();
                found.push(q);
            }
            None => {
                found.push(rest.clone());
                rest = IntPoly::one();
            }
        }
    }
    // rest is now ±1
    if rest.coeff(0).is_negative() {
        unit = -unit;
    }
    let mut counted: BTreeMap<(usize, Vec<BigInt>), (IntPoly, u32)> = BTreeMap::new();
    for q in found {
        let key = (q.degree().unwrap(), q.coeffs().to_vec());
        counted.entry(key).or_insert((q, 0)).1 += 1;
    }
    (unit, content, counted.into_values().collect())
}

// ---------------------------------------------------------------------------
// free associative algebra: noncommutative polynomials over Z

pub type NcPoly = BTreeMap<Vec<usize>, BigInt>;

pub fn nc_add_into(acc: &mut NcPoly, p: &NcPoly, scale: &BigInt) {
    for (w, c) in p {
        let e = acc.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += c * scale;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

pub fn nc_mul(p: &NcPoly, q: &NcPoly, max_degree: Option<usize>) -> NcPoly {
    let mut out = NcPoly::new();
    for (u, a) in p {
        for (v, b) in q {
            if max_degree.is_some_and(|d| u.len() + v.len() > d) {
                continue;
            }
            let w = [u.as_slice(), v.as_slice()].concat();
            let mut single = NcPoly::new();
            single.insert(w, a * b);
            nc_add_into(&mut out, &single, &BigInt::one());
        }
    }
    out
}

pub fn nc_commutator(p: &NcPoly, q: &NcPoly) -> NcPoly {
    let mut out = nc_mul(p, q, None);
    nc_add_into(&mut out, &nc_mul(q, p, None), &big(-1));
    out
}

fn letter(i: usize) -> NcPoly {
    NcPoly::from([(vec![i], BigInt::one())])
}

/// Expansion of the standard bracketing `P_w` as `uv - vu`, recursively.
pub fn expand_lyndon(w: &[usize]) -> NcPoly {
    match standard_factorization(w) {
        None => letter(w[0]),
        Some((u, v)) => nc_commutator(&expand_lyndon(u), &expand_lyndon(v)),
    }
}

pub fn lie_to_nc(basis: &LyndonBasis, e: &LieElement) -> NcPoly {
    let mut out = NcPoly::new();
    for (w, c) in basis.words().iter().zip(&e.coords) {
        if !c.is_zero() {
            nc_add_into(&mut out, &expand_lyndon(w), c);
        }
    }
    out
}

/// Apply the linear substitution `x_i -> Σ_j a[j][i] x_j` letter by letter.
pub fn nc_substitute(p: &NcPoly, a: &IntMatrix) -> NcPoly {
    let n = a.rows();
    let images: Vec<NcPoly> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| !a[(j, i)].is_zero())
                .map(|j| (vec![j + 1], a[(j, i)].clone()))
                .collect()
        })
        .collect();
    let mut out = NcPoly::new();
    for (w, c) in p {
        let mut term = NcPoly::from([(Vec::new(), c.clone())]);
        for &l in w {
            term = nc_mul(&term, &images[l - 1], None);
        }
        nc_add_into(&mut out, &term, &BigInt::one());
    }
    out
}

// ---------------------------------------------------------------------------
// Magnus embedding F_n -> Z<<X_1..X_n>>, truncated

/// `x_i^e` maps to `(1 + X_i)^e`, expanded up to degree `d`.
fn magnus_syllable(i: usize, e: i64, d: usize) -> NcPoly {
    let mut out = NcPoly::from([(Vec::new(), BigInt::one())]);
    // binomial series Σ_k C(e, k) X^k
    let mut coeff = BigInt::one();
    for k in 1..=d {
        coeff = coeff * BigInt::from(e - (k as i64 - 1)) / BigInt::from(k as i64);
        if coeff.is_zero() {
            break;
        }
        out.insert(vec![i; k], coeff.clone());
    }
    out
}

pub fn magnus(syllables: &[(usize, i64)], d: usize) -> NcPoly {
    let mut out = NcPoly::from([(Vec::new(), BigInt::one())]);
    for &(i, e) in syllables {
        out = nc_mul(&out, &magnus_syllable(i, e, d), Some(d));
    }
    out
}

// ---------------------------------------------------------------------------
// Lyndon words by rotation, straight from the definition

pub fn lyndon_count_brute(n: usize, k: usize) -> usize {
    let total = n.pow(k as u32);
    (0..total)
        .filter(|&code| {
            let mut w = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                w.push(c % n);
                c /= n;
            }
            (1..k).all(|r| {
                let rot: Vec<usize> = w[r..].iter().chain(&w[..r]).copied().collect();
                w < rot
            })
        })
        .count()
}

/// `det` by cofactor expansion, for small matrices.
pub fn cofactor_det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[(0, j)].is_zero() {
            continue;
        }
        let rows: Vec<Vec<BigInt>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
            .collect();
        let minor = IntMatrix::from_rows(rows).unwrap();
        let term = &m[(0, j)] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
