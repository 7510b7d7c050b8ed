//! Sublattices of `Z^n` and the chain `(A - E)^k Z^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{hermite_form, smith_form, IntMatrix};
use crate::{Error, Result};

/// A sublattice of `Z^n` given by a column Hermite basis without zero columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubLattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl SubLattice {
    /// Lattice spanned by the columns of `gens`.
    pub fn spanned_by(gens: &IntMatrix) -> Self {
        let (h, _) = hermite_form(gens);
        let rank = (0..h.cols())
            .take_while(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero()))
            .count();
        let cols: Vec<usize> = (0..rank).collect();
        let rows: Vec<usize> = (0..h.rows()).collect();
        SubLattice {
            ambient_rank: gens.rows(),
            basis: h.submatrix(&rows, &cols),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::spanned_by(&IntMatrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        SubLattice {
            ambient_rank: n,
            basis: IntMatrix::zeros(n, 0),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank && (0..self.rank()).all(|j| self.basis[(j, j)].is_one())
    }

    /// `[Z^n : L]` when the lattice has full rank.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_rank)
            .then(|| (0..self.rank()).map(|j| self.basis[(j, j)].clone()).product())
    }

    /// Nonzero elementary divisors of the basis (invariants of `Z^n / L`
    /// on the span of `L`).
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        smith_form(&self.basis)
            .elementary_divisors
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        lattice_contains(self, v)
    }

    /// Every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &SubLattice) -> Result<bool> {
        for j in 0..other.rank() {
            if !self.contains(&other.basis.column(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Membership by back-substitution against the Hermite basis.
pub fn lattice_contains(l: &SubLattice, v: &[BigInt]) -> Result<bool> {
    if v.len() != l.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: l.ambient_rank,
            got: v.len(),
        });
    }
    let mut r = v.to_vec();
    let mut row = 0;
    for j in 0..l.rank() {
        while row < l.ambient_rank && l.basis[(row, j)].is_zero() {
            if !r[row].is_zero() {
                return Ok(false);
            }
            row += 1;
        }
        let (q, rem) = r[row].div_rem(&l.basis[(row, j)]);
        if !rem.is_zero() {
            return Ok(false);
        }
        for (i, ri) in r.iter_mut().enumerate().skip(row) {
            *ri -= &q * &l.basis[(i, j)];
        }
        row += 1;
    }
    Ok(r.iter().all(Zero::is_zero))
}

/// One term `(A - E)^{k-1} Z^n` of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub k: u32,
    pub lattice: SubLattice,
    pub rank: usize,
    /// Nonzero elementary divisors; the index is their product when
    /// `rank` equals the ambient rank.
    #[serde(with = "crate::jsonint::big_vec")]
    pub elementary_divisors: Vec<BigInt>,
}

impl ChainEntry {
    pub fn index(&self) -> Option<BigInt> {
        self.lattice.index()
    }
}

/// Entries for `k = 2..=K+1`, i.e. the lattices `(A - E)^{k-1} Z^n`.
pub fn lattice_chain(a: &IntMatrix, depth: u32) -> Result<Vec<ChainEntry>> {
    a.require_square()?;
    let det = a.det()?;
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    let delta = a.minus_identity();
    let mut power = IntMatrix::identity(a.rows());
    let mut out = Vec::with_capacity(depth as usize);
    for k in 2..=depth + 1 {
        power = &power * &delta;
        let lattice = SubLattice::spanned_by(&power);
        out.push(ChainEntry {
            k,
            rank: lattice.rank(),
            elementary_divisors: lattice.elementary_divisors(),
            lattice,
        });
    }
    Ok(out)
}
