//! Univariate polynomials over `Z` with exact factorization.

mod factor;
mod hensel;
pub(crate) mod modp;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::jsonint::JsonInt;
use crate::{Error, Result};

pub use factor::{factor_over_z, FactorizationZ};

/// Polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the vector never has trailing
/// zeros, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<JsonInt>", try_from = "Vec<JsonInt>")]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl TryFrom<Vec<JsonInt>> for IntPoly {
    type Error = String;
    fn try_from(v: Vec<JsonInt>) -> std::result::Result<Self, String> {
        Ok(IntPoly::new(v.into_iter().map(BigInt::try_from).collect::<std::result::Result<_, _>>()?))
    }
}

impl From<IntPoly> for Vec<JsonInt> {
    fn from(p: IntPoly) -> Self {
        p.coeffs.iter().map(JsonInt::from).collect()
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// `x - a`
    pub fn linear_root(a: i64) -> Self {
        Self::from_i64s(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub(crate) fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division over `Z`; `None` if `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let dl = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.is_empty() {
            return Some(Self::zero());
        }
        if rem.len() <= dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, r) = top.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    // lc(b)^m * self reduced modulo b, up to a nonzero constant factor.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let bl = b.leading().unwrap();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let rl = r.leading().unwrap().clone();
            let shifted = &Self::monomial(rl, dr - db) * b;
            r = &r.scale(bl) - &shifted;
        }
        r
    }

    /// Greatest common divisor in `Z[x]`, normalized to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    pub(crate) fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Value of `p` at `x`.
pub fn poly_eval(p: &IntPoly, x: &BigInt) -> BigInt {
    p.eval(x)
}

/// Squarefree decomposition (Yun) of `p / (sign * content)`.
///
/// Returns `(part, multiplicity)` pairs with pairwise coprime, primitive,
/// squarefree parts of positive degree and positive leading coefficient,
/// such that the product of `part^multiplicity` is the primitive part of
/// `p`. A constant `p` yields an empty list.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.primitive_part();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df).primitive_part();
    let mut b = f.div_exact(&a0).expect("gcd divides f");
    let c = df.div_exact(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d).primitive_part();
        let nb = b.div_exact(&a).expect("Yun step: a | b");
        let nc = d.div_exact(&a).expect("Yun step: a | d");
        d = &nc - &nb.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    Ok(out)
}

/// Multiplicities of the roots `1` and `-1` of a monic polynomial, and the
/// cofactor with neither root.
pub fn linear_root_profile(p: &IntPoly) -> Result<(u32, u32, IntPoly)> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let strip = |mut q: IntPoly, root: i64| {
        let lin = IntPoly::linear_root(root);
        let mut m = 0;
        while let Some(next) = q.div_exact(&lin) {
            q = next;
            m += 1;
        }
        (m, q)
    };
    let (plus, q) = strip(p.clone(), 1);
    let (minus, q) = strip(q, -1);
    Ok((plus, minus, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly_eval(&p(&[-1, -3, 1]), &BigInt::from(1)), BigInt::from(-3));
        assert_eq!(poly_eval(&IntPoly::zero(), &BigInt::from(7)), BigInt::zero());
        assert_eq!(poly_eval(&p(&[-1, 0, 0, 0, 1]), &BigInt::from(2)), BigInt::from(15));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -3, 1]).to_string(), "x^2 - 3x - 1");
        assert_eq!(p(&[1, 0, -2]).to_string(), "-2x^2 + 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "x");
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 0, 0, 1]);
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1, 1])));
        assert_eq!(f.div_exact(&p(&[-2, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 3])), None);
    }

    #[test]
    fn gcd_normalized() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]).scale(&BigInt::from(-6)) * &p(&[5, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[4, 6]).gcd(&p(&[6, 9])), p(&[2, 3]));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_decomposition(&p(&[1, -2, 1])).unwrap(),
            vec![(p(&[-1, 1]), 2)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[-1, -3, 1])).unwrap(),
            vec![(p(&[-1, -3, 1]), 1)]
        );
        assert_eq!(
            squarefree_decomposition(&p(&[0, -1, 0, 1])).unwrap(),
            vec![(p(&[0, -1, 0, 1]), 1)]
        );
        assert_eq!(squarefree_decomposition(&IntPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // -3 (x-1)^3 (x+2)^2 (2x+1)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[1, 2]).scale(&BigInt::from(-3));
        let sq = squarefree_decomposition(&f).unwrap();
        assert_eq!(sq, vec![(p(&[1, 2]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn root_profile_examples() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[1, 1]);
        assert_eq!(linear_root_profile(&f).unwrap(), (2, 1, IntPoly::one()));
        let g = p(&[-1, -3, 1]);
        assert_eq!(linear_root_profile(&g).unwrap(), (0, 0, g.clone()));
        assert_eq!(
            linear_root_profile(&p(&[-1, 1]).pow(4)).unwrap(),
            (4, 0, IntPoly::one())
        );
        assert_eq!(linear_root_profile(&p(&[1, 2])), Err(Error::NotMonic));
    }
}
