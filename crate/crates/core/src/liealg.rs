//! The free Lie ring on `n` generators, graded by degree, in the Lyndon
//! basis.
//!
//! A Lyndon word `w` of length at least 2 has the standard factorization
//! `w = u v` with `v` its longest proper Lyndon suffix; the basis element
//! `P_w` is the bracket `[P_u, P_v]`, and `P_i = x_i` for a letter.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::zlinalg::IntMatrix;
use crate::{Error, Result};

/// Default cap on the dimension of a homogeneous component.
pub const DEFAULT_WITT_CAP: usize = 512;

/// Words are letter sequences over `1..=n`.
pub type Word = Vec<usize>;

fn mobius(mut d: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            d /= p;
            if d % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Rank of the degree-`k` component: `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
pub fn witt_dimension(n: usize, k: usize) -> BigInt {
    assert!(k >= 1, "degree must be positive");
    let nb = BigInt::from(n);
    let sum: BigInt = (1..=k)
        .filter(|d| k % d == 0)
        .map(|d| mobius(d as u64) * nb.pow((k / d) as u32))
        .sum();
    sum / BigInt::from(k)
}

/// Strictly smaller than every proper rotation.
pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &[&w[i..], &w[..i]].concat()[..])
}

/// `(u, v)` with `v` the longest proper Lyndon suffix of `w`.
pub fn standard_factorization(w: &[usize]) -> Option<(&[usize], &[usize])> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| w.split_at(i))
}

/// Lyndon words of length exactly `k` over `1..=n`, in lexicographic order.
pub fn lyndon_words(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let mut w = vec![1];
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < k {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&n) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return out,
        }
    }
}

/// Basis of the degree-`k` component of the free Lie ring on `n` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonBasis {
    alphabet_size: usize,
    degree: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl LyndonBasis {
    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Standard bracketing of basis word `i`, e.g. `[x1,[x1,x2]]`.
    pub fn bracketing(&self, i: usize) -> String {
        bracketing(&self.words[i])
    }
}

fn bracketing(w: &[usize]) -> String {
    match standard_factorization(w) {
        None => format!("x{}", w[0]),
        Some((u, v)) => format!("[{},{}]", bracketing(u), bracketing(v)),
    }
}

pub fn lyndon_basis(n: usize, k: usize) -> Result<LyndonBasis> {
    lyndon_basis_with_cap(n, k, DEFAULT_WITT_CAP)
}

pub fn lyndon_basis_with_cap(n: usize, k: usize, cap: usize) -> Result<LyndonBasis> {
    let dim = witt_dimension(n, k);
    if dim > BigInt::from(cap) {
        return Err(Error::SizeCapExceeded {
            what: "Lyndon basis",
            size: u128::try_from(&dim).unwrap_or(u128::MAX),
            cap,
        });
    }
    let words = lyndon_words(n, k);
    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    Ok(LyndonBasis {
        alphabet_size: n,
        degree: k,
        words,
        index,
    })
}

/// Homogeneous element given by coordinates in `lyndon_basis(n, degree)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieElement {
    pub alphabet_size: usize,
    pub degree: usize,
    #[serde(with = "crate::jsonint::big_vec")]
    pub coords: Vec<BigInt>,
}

impl LieElement {
    pub fn zero(basis: &LyndonBasis) -> Self {
        LieElement {
            alphabet_size: basis.alphabet_size,
            degree: basis.degree,
            coords: vec![BigInt::zero(); basis.len()],
        }
    }

    pub fn basis_vector(basis: &LyndonBasis, i: usize) -> Self {
        let mut e = Self::zero(basis);
        e.coords[i] = BigInt::one();
        e
    }

    /// The generator `x_i` in degree 1.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index out of range");
        let mut coords = vec![BigInt::zero(); n];
        coords[i - 1] = BigInt::one();
        LieElement {
            alphabet_size: n,
            degree: 1,
            coords,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn to_poly(&self, basis: &LyndonBasis) -> LiePoly {
        basis
            .words
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    fn from_poly(p: &LiePoly, basis: &LyndonBasis) -> Self {
        let mut e = Self::zero(basis);
        for (w, c) in p {
            let i = basis.position(w).expect("term lies in the basis");
            e.coords[i] += c;
        }
        e
    }
}

/// Sparse combination of Lyndon basis elements.
type LiePoly = BTreeMap<Word, BigInt>;

fn add_scaled(acc: &mut LiePoly, p: &LiePoly, k: &BigInt) {
    for (w, c) in p {
        let e = acc.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += c * k;
        if e.is_zero() {
            acc.remove(w);
        }
    }
}

/// Memoized rewriting of brackets into the Lyndon basis.
#[derive(Default)]
struct Rewriter {
    memo: HashMap<(Word, Word), LiePoly>,
}

impl Rewriter {
    /// `[P_u, P_v]` for Lyndon words `u`, `v`.
    fn bracket_words(&mut self, u: &[usize], v: &[usize]) -> LiePoly {
        if u == v {
            return LiePoly::new();
        }
        if u > v {
            let mut p = self.bracket_words(v, u);
            p.values_mut().for_each(|c| *c = -&*c);
            return p;
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let result = match standard_factorization(u) {
            Some((u1, u2)) if u2 < v => {
                // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
                let mut acc = LiePoly::new();
                let inner = self.bracket_words(u2, v);
                for (w, c) in &inner {
                    let t = self.bracket_words(u1, w);
                    add_scaled(&mut acc, &t, c);
                }
                let inner = self.bracket_words(u1, v);
                for (w, c) in &inner {
                    let t = self.bracket_words(w, u2);
                    add_scaled(&mut acc, &t, c);
                }
                acc
            }
            _ => LiePoly::from([([u, v].concat(), BigInt::one())]),
        };
        self.memo.insert(key, result.clone());
        result
    }

    fn bracket(&mut self, a: &LiePoly, b: &LiePoly) -> LiePoly {
        let mut acc = LiePoly::new();
        for (u, cu) in a {
            for (v, cv) in b {
                let t = self.bracket_words(u, v);
                add_scaled(&mut acc, &t, &(cu * cv));
            }
        }
        acc
    }
}

/// `[left, right]` expressed in the Lyndon basis of the summed degree.
pub fn bracket_normal_form(left: &LieElement, right: &LieElement) -> Result<LieElement> {
    bracket_normal_form_with_cap(left, right, DEFAULT_WITT_CAP)
}

pub fn bracket_normal_form_with_cap(left: &LieElement, right: &LieElement, cap: usize) -> Result<LieElement> {
    if left.alphabet_size != right.alphabet_size {
        return Err(Error::AlphabetMismatch {
            left: left.alphabet_size,
            right: right.alphabet_size,
        });
    }
    let n = left.alphabet_size;
    let lb = lyndon_basis_with_cap(n, left.degree, cap)?;
    let rb = lyndon_basis_with_cap(n, right.degree, cap)?;
    let out = lyndon_basis_with_cap(n, left.degree + right.degree, cap)?;
    check_len(left, &lb)?;
    check_len(right, &rb)?;
    let p = Rewriter::default().bracket(&left.to_poly(&lb), &right.to_poly(&rb));
    Ok(LieElement::from_poly(&p, &out))
}

fn check_len(e: &LieElement, b: &LyndonBasis) -> Result<()> {
    if e.coords.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: b.len(),
            got: e.coords.len(),
        });
    }
    Ok(())
}

/// Matrix of the map induced by `a` on the degree-`k` component, columns
/// indexed by the Lyndon basis.
pub fn induced_lie_matrix(a: &IntMatrix, k: usize) -> Result<IntMatrix> {
    induced_lie_matrix_with_cap(a, k, DEFAULT_WITT_CAP)
}

pub fn induced_lie_matrix_with_cap(a: &IntMatrix, k: usize, cap: usize) -> Result<IntMatrix> {
    let n = a.require_square()?;
    let basis = lyndon_basis_with_cap(n, k, cap)?;
    let mut rw = Rewriter::default();
    let mut images: HashMap<Word, LiePoly> = HashMap::new();
    for i in 1..=n {
        let col: LiePoly = (1..=n)
            .filter(|&j| !a[(j - 1, i - 1)].is_zero())
            .map(|j| (vec![j], a[(j - 1, i - 1)].clone()))
            .collect();
        images.insert(vec![i], col);
    }
    let cols: Vec<Vec<BigInt>> = basis
        .words
        .iter()
        .map(|w| {
            let img = image_of(w, &mut images, &mut rw);
            LieElement::from_poly(&img, &basis).coords
        })
        .collect();
    Ok(IntMatrix::from_columns(basis.len(), &cols))
}

fn image_of(w: &[usize], images: &mut HashMap<Word, LiePoly>, rw: &mut Rewriter) -> LiePoly {
    if let Some(p) = images.get(w) {
        return p.clone();
    }
    let (u, v) = standard_factorization(w).expect("letters are seeded");
    let pu = image_of(u, images, rw);
    let pv = image_of(v, images, rw);
    let p = rw.bracket(&pu, &pv);
    images.insert(w.to_vec(), p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(n: usize, k: usize) -> Vec<String> {
        lyndon_basis(n, k)
            .unwrap()
            .words()
            .iter()
            .map(|w| w.iter().map(|c| c.to_string()).collect())
            .collect()
    }

    #[test]
    fn witt_examples() {
        let dims: Vec<BigInt> = (1..=6).map(|k| witt_dimension(2, k)).collect();
        assert_eq!(dims, [2, 1, 2, 3, 6, 9].map(BigInt::from));
        assert_eq!(witt_dimension(2, 10), BigInt::from(99));
        assert_eq!(witt_dimension(3, 2), BigInt::from(3));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(words(2, 2), ["12"]);
        assert_eq!(words(2, 3), ["112", "122"]);
        assert_eq!(words(3, 2), ["12", "13", "23"]);
        let b = lyndon_basis(2, 3).unwrap();
        assert_eq!(b.bracketing(0), "[x1,[x1,x2]]");
        assert_eq!(b.bracketing(1), "[[x1,x2],x2]");
        assert!(matches!(lyndon_basis(2, 14), Err(Error::SizeCapExceeded { .. })));
    }

    #[test]
    fn bracket_examples() {
        let x1 = LieElement::generator(2, 1);
        let x2 = LieElement::generator(2, 2);
        assert!(bracket_normal_form(&x1, &x1).unwrap().is_zero());
        let c = bracket_normal_form(&x1, &x2).unwrap();
        assert_eq!(c.coords, vec![BigInt::one()]);
        let d = bracket_normal_form(&c, &x1).unwrap();
        assert_eq!(d.coords, vec![BigInt::from(-1), BigInt::zero()]);
        let y = LieElement::generator(3, 1);
        assert!(matches!(bracket_normal_form(&x1, &y), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn induced_examples() {
        let a = IntMatrix::from_i64_rows(&[[0, 1], [1, 3]]);
        assert_eq!(induced_lie_matrix(&a, 2).unwrap(), IntMatrix::from_i64_rows(&[[-1]]));
        assert_eq!(induced_lie_matrix(&a, 1).unwrap(), a);
        for k in 1..=5 {
            assert!(induced_lie_matrix(&IntMatrix::identity(3), k).unwrap().is_identity());
        }
        assert_eq!(induced_lie_matrix(&a, 3).unwrap().rows(), 2);
    }
}
