//! Factorization over `Z`: squarefree decomposition, modular factorization,
//! Hensel lifting, subset recombination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::hensel::{lift_factors, reduce_int, symmetric};
use super::modp::{factor_degrees, factor_squarefree, PolyModP};
use super::{squarefree_decomposition, IntPoly};
use crate::primes::primes_from;
use crate::{Error, Result};

/// Number of admissible primes sampled when choosing the lifting prime.
const PRIME_TRIALS: usize = 5;

/// `unit * content * ∏ factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationZ {
    pub unit: i8,
    #[serde(with = "crate::jsonint::big")]
    pub content: BigInt,
    /// Primitive irreducible factors with positive leading coefficient,
    /// sorted by degree, then by coefficient vector.
    pub factors: Vec<(IntPoly, u32)>,
}

impl FactorizationZ {
    pub fn expand(&self) -> IntPoly {
        let head = IntPoly::constant(BigInt::from(self.unit) * &self.content);
        self.factors
            .iter()
            .fold(head, |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn irreducible_factors(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// Complete factorization of a nonzero polynomial into irreducibles over `Z`.
pub fn factor_over_z(p: &IntPoly) -> Result<FactorizationZ> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit: i8 = if p.leading().unwrap().is_negative() { -1 } else { 1 };
    let content = p.content();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p)? {
        for f in factor_squarefree_primitive(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(FactorizationZ {
        unit,
        content,
        factors,
    })
}

struct PrimeChoice {
    p: u64,
    factors: Vec<PolyModP>,
}

fn choose_prime(f: &IntPoly) -> PrimeChoice {
    let lc = f.leading().unwrap();
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in primes_from(3) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = PolyModP::from_int(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        let count = factor_degrees(&fp.monic()).len();
        if best.is_none_or(|(_, c)| count < c) {
            best = Some((p, count));
        }
        tried += 1;
        if tried == PRIME_TRIALS || count == 1 {
            break;
        }
    }
    let (p, _) = best.expect("squarefree polynomial has admissible primes");
    let factors = factor_squarefree(&PolyModP::from_int(f, p).monic());
    PrimeChoice { p, factors }
}

// Bound on |coefficients| of lc(f) * g for any divisor g of f.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap();
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let lc = f.leading().unwrap().abs();
    (BigInt::one() << n) * norm * lc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a squarefree primitive polynomial with positive
/// leading coefficient.
pub(crate) fn factor_squarefree_primitive(f: &IntPoly) -> Vec<IntPoly> {
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.clone()];
    }
    let PrimeChoice { p, factors } = choose_prime(f);
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f) * 2;
    let bp = BigInt::from(p);
    let mut modulus = bp.clone();
    while modulus <= bound {
        modulus *= &bp;
    }
    let lifted = lift_factors(&reduce_int(f.coeffs(), &modulus), &factors, p, &modulus);

    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        for subset in combinations(remaining.len(), size) {
            let lc = rest.leading().unwrap().clone();
            let mut prod = vec![lc];
            for &i in &subset {
                prod = mul_mod(&prod, &remaining[i], &modulus);
            }
            let candidate = IntPoly::new(symmetric(&prod, &modulus)).primitive_part();
            let const_ok = candidate.coeff(0).is_zero()
                || (rest.coeff(0) % candidate.coeff(0)).is_zero();
            if !const_ok {
                continue;
            }
            if let Some(q) = rest.div_exact(&candidate) {
                found.push(candidate);
                rest = q;
                let mut k = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
                continue 'outer;
            }
        }
        size += 1;
    }
    found.push(rest.primitive_part());
    found
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce_int(&out, m)
}
