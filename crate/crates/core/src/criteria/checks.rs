//! Individual criteria and premise checkers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PrimeSet;
use crate::intpoly::{factor_over_z, linear_root_profile, IntPoly};
use crate::liealg::induced_lie_matrix_with_cap;
use crate::primes::{is_prime, prime_divisors};
use crate::zlinalg::{char_poly, compound_matrix, symmetric_power_char_poly, IntMatrix, SubLattice};
use crate::{Error, Result};

/// Outcome of the factor test on `Z^n ⋊_A Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AfResult {
    pub nilpotent: bool,
    /// Each irreducible factor of `char(A)` with its value at 1.
    pub values: Vec<(IntPoly, BigInt)>,
    /// Primes dividing every value.
    pub primes: PrimeSet,
}

pub(crate) fn require_unimodular(a: &IntMatrix) -> Result<BigInt> {
    a.require_square()?;
    let det = a.det()?;
    if det.abs().is_one() {
        Ok(det)
    } else {
        Err(Error::NotUnimodular {
            det: det.to_string(),
        })
    }
}

pub(crate) fn af_from_char_poly(cp: &IntPoly) -> Result<AfResult> {
    let fz = factor_over_z(cp)?;
    let one = BigInt::one();
    let values: Vec<(IntPoly, BigInt)> = fz
        .irreducible_factors()
        .map(|q| (q.clone(), q.eval(&one)))
        .collect();
    let nilpotent = values.iter().all(|(_, v)| !v.abs().is_one());
    let g = values.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    let primes = if g.is_zero() {
        PrimeSet::all()
    } else {
        PrimeSet::of(prime_divisors(&g)?)
    };
    Ok(AfResult {
        nilpotent,
        values,
        primes,
    })
}

fn check_tensor_cap(n: usize, k: u32, cap: usize) -> Result<()> {
    let side = (n as u128).checked_pow(k).unwrap_or(u128::MAX);
    if side > cap as u128 {
        return Err(Error::SizeCapExceeded {
            what: "Kronecker power",
            size: side,
            cap,
        });
    }
    Ok(())
}

// char(A^{⊗k}) and char(Sym^k A) have the same irreducible factors
fn tensor_af(a: &IntMatrix, k: u32) -> Result<AfResult> {
    af_from_char_poly(&symmetric_power_char_poly(a, k)?)
}

/// Factor `char(A)` and test the values of the irreducible factors at 1.
pub fn af_criterion(a: &IntMatrix) -> Result<AfResult> {
    require_unimodular(a)?;
    af_from_char_poly(&char_poly(a)?)
}

/// `A - E` invertible over `Z`.
pub fn gamma_omega_is_fiber(a: &IntMatrix) -> Result<bool> {
    require_unimodular(a)?;
    Ok(a.minus_identity().det()?.abs().is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerEigenvalues {
    pub all_plus_one: bool,
    pub has_minus_one: bool,
}

/// `Some` when every eigenvalue is an integer (hence ±1 for unimodular `A`).
pub fn integer_eigenvalue_criterion(a: &IntMatrix) -> Result<Option<IntegerEigenvalues>> {
    require_unimodular(a)?;
    let (_, minus, residual) = linear_root_profile(&char_poly(a)?)?;
    Ok(residual.is_constant().then_some(IntegerEigenvalues {
        all_plus_one: minus == 0,
        has_minus_one: minus > 0,
    }))
}

/// Smallest `N <= n` with `(A - E)^N ≡ 0 (mod p)`.
pub fn mod_p_unipotency(a: &IntMatrix, p: u64) -> Result<Option<u32>> {
    let n = a.require_square()?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let bp = BigInt::from(p);
    let delta = a.minus_identity().reduce_mod(&bp);
    let mut power = delta.clone();
    for big_n in 1..=n.max(1) as u32 {
        if power.is_zero() {
            return Ok(Some(big_n));
        }
        power = (&power * &delta).reduce_mod(&bp);
    }
    Ok(None)
}

/// All primes at which `A - E` is nilpotent: the prime divisors of the
/// content of `char(A) - (x-1)^n` (Cayley-Hamilton makes this exact).
pub fn unipotency_primes(a: &IntMatrix) -> Result<PrimeSet> {
    let n = a.require_square()?;
    let diff = &char_poly(a)? - &IntPoly::linear_root(1).pow(n as u32);
    if diff.is_zero() {
        return Ok(PrimeSet::all());
    }
    Ok(PrimeSet::of(prime_divisors(&diff.content())?))
}

/// No product of eigenvalues of `A - E` equals ±1, tested through the
/// compound matrices of `A - E`.
pub fn mikhailov_module_check(a: &IntMatrix) -> Result<bool> {
    let n = a.require_square()?;
    let delta = a.minus_identity();
    for k in 1..=n {
        let c = compound_matrix(&delta, k)?;
        if c.minus_identity().det()?.is_zero() || c.plus_identity().det()?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-degree result of an audit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub k: u32,
    pub dimension: usize,
    pub af_nilpotent: bool,
    pub primes: PrimeSet,
    /// Whether the requested prime passes, when one was given.
    pub p_finite: Option<bool>,
    /// Lie audits only: the tensor result at the same degree does not
    /// contradict this one. `None` when the tensor power exceeds the cap.
    pub tensor_consistent: Option<bool>,
}

/// Factor test on `A^{⊗k}` for `k = 1..=bound`.
pub fn tensor_power_audit(a: &IntMatrix, bound: u32, p: Option<u64>, cap: usize) -> Result<Vec<AuditRecord>> {
    require_unimodular(a)?;
    check_prime(p)?;
    let n = a.rows();
    check_tensor_cap(n, bound, cap)?;
    (1..=bound)
        .map(|k| {
            let af = tensor_af(a, k)?;
            Ok(AuditRecord {
                k,
                dimension: n.pow(k),
                af_nilpotent: af.nilpotent,
                p_finite: p.map(|p| af.primes.contains(p)),
                primes: af.primes,
                tensor_consistent: None,
            })
        })
        .collect()
}

/// Factor test on the induced maps of the Lie components, cross-checked
/// against the tensor powers.
pub fn lie_component_audit(
    a: &IntMatrix,
    bound: u32,
    p: Option<u64>,
    kron_cap: usize,
    witt_cap: usize,
) -> Result<Vec<AuditRecord>> {
    require_unimodular(a)?;
    check_prime(p)?;
    (1..=bound)
        .map(|k| {
            let lie = induced_lie_matrix_with_cap(a, k as usize, witt_cap)?;
            let af = af_from_char_poly(&char_poly(&lie)?)?;
            let tensor_consistent = match check_tensor_cap(a.rows(), k, kron_cap) {
                Ok(()) => {
                    let t = tensor_af(a, k)?;
                    Some((!t.nilpotent || af.nilpotent) && t.primes.is_subset(&af.primes))
                }
                Err(_) => None,
            };
            Ok(AuditRecord {
                k,
                dimension: lie.rows(),
                af_nilpotent: af.nilpotent,
                p_finite: p.map(|p| af.primes.contains(p)),
                primes: af.primes,
                tensor_consistent,
            })
        })
        .collect()
}

fn check_prime(p: Option<u64>) -> Result<()> {
    match p {
        Some(p) if !is_prime(p) => Err(Error::NotPrime(p)),
        _ => Ok(()),
    }
}

fn flatten(m: &IntMatrix) -> Vec<BigInt> {
    m.entries().to_vec()
}

/// Smallest `N <= bound` such that every product of `N` matrices `B_i - E`
/// vanishes, exactly (`modulus = 0`) or modulo `modulus`.
pub fn augmentation_power_check(bs: &[IntMatrix], modulus: u64, bound: u32) -> Result<Option<u32>> {
    if modulus == 1 {
        return Err(Error::BadModulus(modulus));
    }
    let Some(first) = bs.first() else {
        return Ok(Some(1));
    };
    let n = first.require_square()?;
    for b in bs {
        if b.rows() != n || b.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.rows().max(b.cols()),
            });
        }
    }
    let dim = n * n;
    let m = BigInt::from(modulus);
    let deltas: Vec<IntMatrix> = bs.iter().map(IntMatrix::minus_identity).collect();
    let floor: Vec<Vec<BigInt>> = if modulus == 0 {
        Vec::new()
    } else {
        (0..dim)
            .map(|i| {
                let mut v = vec![BigInt::zero(); dim];
                v[i] = m.clone();
                v
            })
            .collect()
    };
    let span = |gens: Vec<Vec<BigInt>>| {
        let mut cols = gens;
        cols.extend(floor.iter().cloned());
        SubLattice::spanned_by(&IntMatrix::from_columns(dim, &cols))
    };
    let target = span(Vec::new());
    let mut current = span(deltas.iter().map(flatten).collect());
    for big_n in 1..=bound {
        if current == target {
            return Ok(Some(big_n));
        }
        let basis = current.basis();
        let mut gens = Vec::new();
        for d in &deltas {
            for j in 0..basis.cols() {
                let mat = IntMatrix::new(n, n, basis.column(j)).expect("n*n entries");
                gens.push(flatten(&(d * &mat)));
            }
        }
        let next = span(gens);
        if next == current {
            return Ok(None);
        }
        current = next;
    }
    Ok(None)
}
