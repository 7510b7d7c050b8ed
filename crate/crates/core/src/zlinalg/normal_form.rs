//! Column Hermite form and Smith form with transformation matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntMatrix;

/// `U · M · V = D` with `D` diagonal and `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Full diagonal of `D` (length `min(rows, cols)`), zeros last.
    #[serde(with = "crate::jsonint::big_vec")]
    pub elementary_divisors: Vec<BigInt>,
}

// col_a <- x*col_a + y*col_b ; col_b <- z*col_a + w*col_b (simultaneous)
fn mix_cols(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
    for r in 0..m.rows() {
        let va = m[(r, a)].clone();
        let vb = m[(r, b)].clone();
        m[(r, a)] = x * &va + y * &vb;
        m[(r, b)] = z * &va + w * &vb;
    }
}

fn mix_rows(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
    for c in 0..m.cols() {
        let va = m[(a, c)].clone();
        let vb = m[(b, c)].clone();
        m[(a, c)] = x * &va + y * &vb;
        m[(b, c)] = z * &va + w * &vb;
    }
}

// col_dst -= q * col_src
fn axpy_col(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for r in 0..m.rows() {
        let t = q * &m[(r, src)];
        m[(r, dst)] -= t;
    }
}

fn axpy_row(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let t = q * &m[(src, c)];
        m[(dst, c)] -= t;
    }
}

fn negate_col(m: &mut IntMatrix, c: usize) {
    for r in 0..m.rows() {
        m[(r, c)] = -&m[(r, c)];
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        m[(r, c)] = -&m[(r, c)];
    }
}

/// Column Hermite normal form: `H = M · U`, `U` unimodular.
///
/// Nonzero columns come first and their pivot rows strictly increase;
/// each column is zero above its pivot, pivots are positive, and entries
/// to the left of a pivot in its row lie in `0..pivot`.
pub fn hermite_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let mut c = 0;
    for i in 0..m.rows() {
        if c == m.cols() {
            break;
        }
        for j in c + 1..m.cols() {
            if h[(i, j)].is_zero() {
                continue;
            }
            let a = h[(i, c)].clone();
            let b = h[(i, j)].clone();
            let e = a.extended_gcd(&b);
            let (z, w) = (-(&b / &e.gcd), &a / &e.gcd);
            mix_cols(&mut h, c, j, &e.x, &e.y, &z, &w);
            mix_cols(&mut u, c, j, &e.x, &e.y, &z, &w);
        }
        if h[(i, c)].is_zero() {
            continue;
        }
        if h[(i, c)].is_negative() {
            negate_col(&mut h, c);
            negate_col(&mut u, c);
        }
        let pivot = h[(i, c)].clone();
        for j in 0..c {
            let q = h[(i, j)].div_floor(&pivot);
            if !q.is_zero() {
                axpy_col(&mut h, j, c, &q);
                axpy_col(&mut u, j, c, &q);
            }
        }
        c += 1;
    }
    (h, u)
}

/// Smith normal form with unimodular transforms.
pub fn smith_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    axpy_row(&mut d, i, t, &q);
                    axpy_row(&mut u, i, t, &q);
                }
                dirty |= !d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    axpy_col(&mut d, j, t, &q);
                    axpy_col(&mut v, j, t, &q);
                }
                dirty |= !d[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&d[(i, j)] % &pivot).is_zero())
            });
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    let zero = BigInt::zero();
                    // row_t += row_i
                    mix_rows(&mut d, t, i, &one, &one, &zero, &one);
                    mix_rows(&mut u, t, i, &one, &one, &zero, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    let elementary_divisors = (0..rows.min(cols)).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        d,
        u,
        v,
        elementary_divisors,
    }
}
