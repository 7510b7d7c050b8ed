//! Exact integer linear algebra.
//!
//! Matrices act on column vectors; for an endomorphism of a free abelian
//! group the columns of its matrix are the images of the basis vectors.

mod lattice;
mod normal_form;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::intpoly::IntPoly;
use crate::jsonint::JsonInt;
use crate::{Error, Result};

pub use lattice::{lattice_chain, lattice_contains, ChainEntry, SubLattice};
pub use normal_form::{hermite_form, smith_form, SmithForm};

/// Default cap on the side length of Kronecker powers.
pub const DEFAULT_SIZE_CAP: usize = 4096;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<JsonInt>>", try_from = "Vec<Vec<JsonInt>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl TryFrom<Vec<Vec<JsonInt>>> for IntMatrix {
    type Error = String;
    fn try_from(rows: Vec<Vec<JsonInt>>) -> std::result::Result<Self, String> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::try_from).collect())
            .collect::<std::result::Result<Vec<Vec<BigInt>>, String>>()?;
        IntMatrix::from_rows(rows).map_err(|e| e.to_string())
    }
}

impl From<IntMatrix> for Vec<Vec<JsonInt>> {
    fn from(m: IntMatrix) -> Self {
        (0..m.rows)
            .map(|i| m.row(i).iter().map(JsonInt::from).collect())
            .collect()
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Build from a list of rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Convenience constructor for small literals. Panics on ragged input.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("ragged matrix literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(v);
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| &self[(i, i)])
            .sum()
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    /// `self - I` (square matrices).
    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= 1;
        }
        m
    }

    pub fn plus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += 1;
        }
        m
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Entrywise reduction into `0..m`.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| {
                    let r = v % m;
                    if r.is_negative() {
                        r + m
                    } else {
                        r
                    }
                })
                .collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    pub(crate) fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        self.scale(&BigInt::from(-1))
    }
}

/// Prints as a bracketed row list, e.g. `[[0,1],[1,3]]`.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Parses a bracketed row list such as `[[1, 1], [-1, 0]]`.
impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |position: usize, message: &str| Error::Syntax {
            position,
            message: message.to_string(),
        };
        let bytes = s.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, c: u8| -> Result<()> {
            skip_ws(pos);
            if bytes.get(*pos) == Some(&c) {
                *pos += 1;
                Ok(())
            } else {
                Err(syntax(*pos, &format!("expected `{}`", c as char)))
            }
        };
        expect(&mut pos, b'[')?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        loop {
            expect(&mut pos, b'[')?;
            let mut row = Vec::new();
            loop {
                skip_ws(&mut pos);
                let start = pos;
                if matches!(bytes.get(pos), Some(b'-' | b'+')) {
                    pos += 1;
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let tok = &s[start..pos];
                let v: BigInt = tok.parse().map_err(|_| syntax(start, "expected an integer"))?;
                row.push(v);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(syntax(pos, "expected `,` or `]`")),
                }
            }
            rows.push(row);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(syntax(pos, "expected `,` or `]`")),
            }
        }
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(syntax(pos, "trailing input"));
        }
        IntMatrix::from_rows(rows)
    }
}

/// Characteristic polynomial `det(xI - M)` by Faddeev-LeVerrier.
///
/// All divisions are exact over `Z`.
pub fn char_poly(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.require_square()?;
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut aux = IntMatrix::identity(n);
    for k in 1..=n {
        let am = m * &aux;
        let ck = -am.trace() / BigInt::from(k);
        aux = am;
        for i in 0..n {
            aux[(i, i)] += &ck;
        }
        c[n - k] = ck;
    }
    Ok(IntPoly::new(c))
}

/// Kronecker product `a ⊗ b`: block `(i, j)` is `a[i][j] * b`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (ar, ac, br, bc) = (a.rows, a.cols, b.rows, b.cols);
    let mut out = IntMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = x * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// `k`-fold Kronecker power of a square matrix; the side `n^k` must not
/// exceed `cap`.
pub fn kronecker_power(m: &IntMatrix, k: u32, cap: usize) -> Result<IntMatrix> {
    let n = m.require_square()?;
    assert!(k >= 1, "Kronecker power order must be positive");
    let side = (n as u128).checked_pow(k).unwrap_or(u128::MAX);
    if side > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: "Kronecker power",
            size: side,
            cap,
        });
    }
    let mut acc = m.clone();
    for _ in 1..k {
        acc = kronecker(&acc, m);
    }
    Ok(acc)
}

/// Characteristic polynomial of `kronecker_power(m, k, cap)` without forming
/// the product: the power sums are `tr(M^j)^k`, and Newton's identities
/// recover the coefficients.
pub fn kronecker_power_char_poly(m: &IntMatrix, k: u32, cap: usize) -> Result<IntPoly> {
    let n = m.require_square()?;
    assert!(k >= 1, "Kronecker power order must be positive");
    let side = (n as u128).checked_pow(k).unwrap_or(u128::MAX);
    if side > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: "Kronecker power",
            size: side,
            cap,
        });
    }
    let big_n = side as usize;
    let mut power_sums = Vec::with_capacity(big_n + 1);
    power_sums.push(BigInt::from(big_n));
    let mut mp = IntMatrix::identity(n);
    for _ in 1..=big_n {
        mp = &mp * m;
        power_sums.push(mp.trace().pow(k));
    }
    Ok(char_poly_from_power_sums(&power_sums))
}

/// `char(Sym^k M)`, of degree `C(n+k-1, k)`. Its roots are the distinct
/// products of `k` eigenvalues of `M`, so it has the same irreducible
/// factors as `char(M^{⊗k})`.
pub fn symmetric_power_char_poly(m: &IntMatrix, k: u32) -> Result<IntPoly> {
    let n = m.require_square()?;
    let k = k as usize;
    // C(n+k-1, k)
    let mut dim = BigInt::one();
    for i in 0..k {
        dim = dim * BigInt::from(n + i) / BigInt::from(i + 1);
    }
    let dim: usize = (&dim).try_into().map_err(|_| Error::SizeCapExceeded {
        what: "symmetric power",
        size: u128::MAX,
        cap: usize::MAX,
    })?;
    // traces of M^0 .. M^(k*dim)
    let mut traces = Vec::with_capacity(k * dim + 1);
    let mut mp = IntMatrix::identity(n);
    traces.push(mp.trace());
    for _ in 0..k * dim {
        mp = &mp * m;
        traces.push(mp.trace());
    }
    // p_j(Sym^k M) = h_k(eigenvalues of M^j), via m h_m = Σ_{i=1}^m p_i(M^j) h_{m-i}
    let mut power_sums = Vec::with_capacity(dim + 1);
    power_sums.push(BigInt::from(dim));
    for j in 1..=dim {
        let mut h = vec![BigInt::one()];
        for mm in 1..=k {
            let s: BigInt = (1..=mm).map(|i| &traces[i * j] * &h[mm - i]).sum();
            h.push(s / BigInt::from(mm));
        }
        power_sums.push(h.pop().expect("k >= 0"));
    }
    Ok(char_poly_from_power_sums(&power_sums))
}

/// Monic polynomial with the given power sums `p_0 = N, p_1, .., p_N`.
fn char_poly_from_power_sums(power_sums: &[BigInt]) -> IntPoly {
    let big_n = power_sums.len() - 1;
    // e_j = (1/j) Σ_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
    let mut e = vec![BigInt::one()];
    for j in 1..=big_n {
        let mut s = BigInt::zero();
        for i in 1..=j {
            let t = &e[j - i] * &power_sums[i];
            if i % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
        }
        e.push(s / BigInt::from(j));
    }
    let mut c = vec![BigInt::zero(); big_n + 1];
    for (j, ej) in e.into_iter().enumerate() {
        c[big_n - j] = if j % 2 == 0 { ej } else { -ej };
    }
    IntPoly::new(c)
}

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `k`-th compound matrix: all `k x k` minors, rows and columns indexed by
/// lexicographically ordered `k`-subsets.
pub fn compound_matrix(m: &IntMatrix, k: usize) -> Result<IntMatrix> {
    let n = m.require_square()?;
    if k == 0 || k > n {
        return Err(Error::BadCompoundOrder { k, n });
    }
    let subsets = k_subsets(n, k);
    let s = subsets.len();
    let mut out = IntMatrix::zeros(s, s);
    for (a, rows) in subsets.iter().enumerate() {
        for (b, cols) in subsets.iter().enumerate() {
            out[(a, b)] = m.submatrix(rows, cols).det()?;
        }
    }
    Ok(out)
}

/// `|det M| = 1`.
pub fn is_unimodular(m: &IntMatrix) -> Result<bool> {
    Ok(m.det()?.abs().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat<R: AsRef<[i64]>>(r: &[R]) -> IntMatrix {
        IntMatrix::from_i64_rows(r)
    }

    // Cofactor expansion, independent of Bareiss.
    fn det_cofactor(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        (0..n)
            .map(|j| {
                let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let rows: Vec<usize> = (1..n).collect();
                let minor = det_cofactor(&m.submatrix(&rows, &rest));
                let term = &m[(0, j)] * minor;
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn parse_and_print() {
        let m: IntMatrix = " [[1, 1], [-1, 0]] ".parse().unwrap();
        assert_eq!(m, mat(&[[1, 1], [-1, 0]]));
        assert_eq!(m.to_string(), "[[1,1],[-1,0]]");
        assert!("[[1,2],[3]]".parse::<IntMatrix>().is_err());
        assert!(matches!("[[1,x]]".parse::<IntMatrix>(), Err(Error::Syntax { position: 4, .. })));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&mat(&[[0, 1], [1, 3]])).unwrap(), IntPoly::from_i64s(&[-1, -3, 1]));
        assert_eq!(
            char_poly(&IntMatrix::identity(3)).unwrap(),
            IntPoly::linear_root(1).pow(3)
        );
        assert_eq!(char_poly(&mat(&[[1, 1], [-1, 0]])).unwrap(), IntPoly::from_i64s(&[1, -1, 1]));
        assert!(matches!(char_poly(&IntMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = mat(&[[2, -1, 0, 3], [1, 0, 0, 2], [4, 1, -2, 0], [0, 5, 1, 1]]);
        assert_eq!(m.det().unwrap(), det_cofactor(&m));
        let singular = mat(&[[0, 0, 1], [0, 0, 2], [1, 1, 1]]);
        assert_eq!(singular.det().unwrap(), BigInt::zero());
    }

    #[test]
    fn kronecker_examples() {
        let m = mat(&[[0, 1], [1, 3]]);
        assert_eq!(kronecker_power(&m, 1, DEFAULT_SIZE_CAP).unwrap(), m);
        let k2 = kronecker_power(&m, 2, DEFAULT_SIZE_CAP).unwrap();
        let expected = mat(&[[0, 0, 0, 1], [0, 0, 1, 3], [0, 1, 0, 3], [1, 3, 3, 9]]);
        assert_eq!(k2, expected);
        assert!(kronecker_power(&IntMatrix::identity(3), 3, DEFAULT_SIZE_CAP)
            .unwrap()
            .is_identity());
        assert!(matches!(
            kronecker_power(&m, 13, DEFAULT_SIZE_CAP),
            Err(Error::SizeCapExceeded { size: 8192, .. })
        ));
    }

    #[test]
    fn kronecker_char_poly_matches_product() {
        let cases = [
            mat(&[[0, 1], [1, 3]]),
            mat(&[[1, 1], [-1, 0]]),
            mat(&[[2, 1, 0], [1, 1, 0], [0, 0, -1]]),
        ];
        for m in &cases {
            for k in 1..=3 {
                let direct = char_poly(&kronecker_power(m, k, DEFAULT_SIZE_CAP).unwrap()).unwrap();
                assert_eq!(kronecker_power_char_poly(m, k, DEFAULT_SIZE_CAP).unwrap(), direct);
            }
        }
    }

    #[test]
    fn symmetric_power_char_poly_examples() {
        let m = mat(&[[0, 1], [1, 3]]);
        assert_eq!(symmetric_power_char_poly(&m, 1).unwrap(), char_poly(&m).unwrap());
        assert_eq!(symmetric_power_char_poly(&m, 2).unwrap(), IntPoly::from_i64s(&[1, -10, -10, 1]));
        assert_eq!(
            symmetric_power_char_poly(&IntMatrix::identity(3), 2).unwrap(),
            IntPoly::linear_root(1).pow(6)
        );
        assert_eq!(symmetric_power_char_poly(&m, 12).unwrap().degree(), Some(13));
    }

    #[test]
    fn compound_examples() {
        let m = mat(&[[-1, 1], [1, 2]]);
        assert_eq!(compound_matrix(&m, 1).unwrap(), m);
        assert_eq!(compound_matrix(&m, 2).unwrap(), mat(&[[-3]]));
        assert!(compound_matrix(&IntMatrix::identity(4), 2).unwrap().is_identity());
        assert!(matches!(compound_matrix(&m, 3), Err(Error::BadCompoundOrder { .. })));
        assert_eq!(k_subsets(4, 2).len(), 6);
        assert_eq!(k_subsets(4, 2)[1], vec![0, 2]);
    }

    #[test]
    fn unimodular_examples() {
        assert!(is_unimodular(&mat(&[[1, 1], [1, 0]])).unwrap());
        assert!(!is_unimodular(&mat(&[[-1, 1], [1, 2]])).unwrap());
        assert!(is_unimodular(&IntMatrix::identity(3)).unwrap());
    }
}
