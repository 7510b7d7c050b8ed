//! Classifiers: the exact rank-2 table, the finite-index construction, the
//! general orchestrator and the action-family check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::checks::{
    af_criterion, augmentation_power_check, gamma_omega_is_fiber, integer_eigenvalue_criterion,
    lie_component_audit, mikhailov_module_check, mod_p_unipotency, require_unimodular, tensor_power_audit,
    unipotency_primes, AfResult, AuditRecord,
};
use super::{show, Certainty, Claim, Criterion, LcsLength, PrimeSet, Verdict, Witness};
use crate::freegroup::{abelianization_matrix, check_automorphism, AutomorphismCheck, FreeEndo};
use crate::liealg::{witt_dimension, DEFAULT_WITT_CAP};
use crate::primes::{is_prime, prime_divisors};
use crate::zlinalg::{char_poly, IntMatrix, DEFAULT_SIZE_CAP};
use crate::{Error, Result};

/// What to classify: `F_n ⋊_φ Z` given by `φ` or by its abelianization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupInput {
    Matrix(IntMatrix),
    Endo {
        endo: FreeEndo,
        inverse: Option<FreeEndo>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Audit degrees `1..=K`; `None` picks [`default_tensor_bound`] and
    /// shrinks it to fit the caps.
    pub tensor_bound: Option<u32>,
    /// Primes to report on explicitly.
    pub primes: Vec<u64>,
    pub kron_cap: usize,
    pub witt_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            tensor_bound: None,
            primes: Vec::new(),
            kron_cap: DEFAULT_SIZE_CAP,
            witt_cap: DEFAULT_WITT_CAP,
        }
    }
}

pub fn default_tensor_bound(n: usize) -> u32 {
    match n {
        0..=2 => 4,
        3 => 3,
        _ => 2,
    }
}

fn det_tr(a: &IntMatrix) -> Result<(BigInt, BigInt)> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Not2x2 {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let det = require_unimodular(a)?;
    Ok((det, a.trace()))
}

fn mark_not_residually_nilpotent(v: &mut Verdict) {
    v.residually_nilpotent = Claim::proven(false);
    v.other_primes = Claim::proven(false);
    for c in v.residually_p_finite.values_mut() {
        *c = Claim::proven(false);
    }
}

fn unipotency_witness(a: &IntMatrix, p: u64) -> Result<Option<Witness>> {
    Ok(mod_p_unipotency(a, p)?.map(|n| {
        Witness::new(
            Criterion::ModPUnipotency,
            format!("(A−E)^{n} ≡ 0 mod {p}"),
            Certainty::Proven,
        )
    }))
}

/// Exact classification of `F_2 ⋊_φ Z` from `det` and `tr` of `A = [φ̄]`.
pub fn classify_f2(a: &IntMatrix) -> Result<Verdict> {
    let (det, tr) = det_tr(a)?;
    let mut v = Verdict::new(2, vec![a.clone()]);
    let table = format!("det={}, tr={}", show(&det), show(&tr));
    let det_one = det.is_one();
    let tr_abs_one = tr.abs().is_one();
    let short = (det_one && (tr == BigInt::one() || tr == BigInt::from(3))) || (!det_one && tr_abs_one);
    if short {
        mark_not_residually_nilpotent(&mut v);
        v.lcs_length = LcsLength::Two;
        v.lcs_certainty = Certainty::Proven;
        v.witnesses.push(Witness::new(Criterion::RankTwoTable, table, Certainty::Proven));
        let d = a.minus_identity().det()?;
        v.witnesses.push(Witness::new(
            Criterion::Fiber,
            format!("det(A−E)={}", show(&d)),
            Certainty::Proven,
        ));
        return Ok(v);
    }
    if det_one {
        let t2: BigInt = &tr - 2;
        v.residually_nilpotent = Claim::proven(true);
        v.lcs_length = LcsLength::Omega;
        v.lcs_certainty = Certainty::Proven;
        if t2.is_zero() {
            v.other_primes = Claim::proven(true);
            v.witnesses.push(Witness::new(
                Criterion::RankTwoTable,
                format!("{table}, tr−2=0: residually p-finite for all p"),
                Certainty::Proven,
            ));
            v.witnesses.push(Witness::new(
                Criterion::IntegerEigenvalues,
                "char(A) = (x−1)^2",
                Certainty::Proven,
            ));
        } else {
            let ps = prime_divisors(&t2)?;
            v.witnesses.push(Witness::new(
                Criterion::RankTwoTable,
                format!("{table}, tr−2={}: residually p-finite for p in {}", show(&t2), PrimeSet::of(ps.clone())),
                Certainty::Proven,
            ));
            for p in ps {
                v.residually_p_finite.insert(p, Claim::proven(true));
                v.witnesses.extend(unipotency_witness(a, p)?);
            }
        }
    } else if tr.is_even() {
        v.residually_nilpotent = Claim::proven(true);
        v.lcs_length = LcsLength::Omega;
        v.lcs_certainty = Certainty::Proven;
        v.residually_p_finite.insert(2, Claim::proven(true));
        v.witnesses.push(Witness::new(
            Criterion::RankTwoTable,
            format!("{table}: tr even, residually 2-finite"),
            Certainty::Proven,
        ));
        v.witnesses.extend(unipotency_witness(a, 2)?);
    } else {
        mark_not_residually_nilpotent(&mut v);
        v.lcs_length = LcsLength::OmegaSquared;
        v.lcs_certainty = Certainty::Proven;
        v.witnesses.push(Witness::new(Criterion::RankTwoTable, table, Certainty::Proven));
    }
    if v.residually_nilpotent.is_proven(true) {
        v.witnesses.push(Witness::new(
            Criterion::NotNilpotent,
            "F_2 is not nilpotent",
            Certainty::Proven,
        ));
    }
    Ok(v)
}

/// A residually nilpotent subgroup `F_2 ⋊_(φ^index) Z` of finite index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteIndexSubgroup {
    pub index: u32,
    pub power_matrix: IntMatrix,
    pub sub_verdict: Verdict,
}

pub fn finite_index_resnil_subgroup(a: &IntMatrix) -> Result<FiniteIndexSubgroup> {
    let (det, tr) = det_tr(a)?;
    let v = classify_f2(a)?;
    let index = if v.residually_nilpotent.is_proven(true) {
        1
    } else if !det.is_one() && tr.abs().is_one() {
        4
    } else {
        2
    };
    let power_matrix = a.pow(index)?;
    let mut sub_verdict = if index == 1 { v } else { classify_f2(&power_matrix)? };
    sub_verdict.witnesses.push(Witness::new(
        Criterion::FiniteIndexSubgroup,
        format!(
            "index {index}: A^{index} has det={}, tr={}",
            show(&power_matrix.det()?),
            show(&power_matrix.trace())
        ),
        Certainty::Proven,
    ));
    Ok(FiniteIndexSubgroup {
        index,
        power_matrix,
        sub_verdict,
    })
}

fn describe_af(af: &AfResult) -> String {
    let vals: Vec<String> = af
        .values
        .iter()
        .map(|(q, v)| format!("{q} ↦ {}", show(v)))
        .collect();
    format!(
        "factors at 1: {}; {}; primes dividing all values: {}",
        vals.join(", "),
        if af.nilpotent { "no value is ±1" } else { "a value is ±1" },
        af.primes
    )
}

/// Largest `k <= want` whose tensor power and Lie component fit the caps.
fn fitting_bound(n: usize, want: u32, opts: &ClassifyOptions) -> u32 {
    (1..=want)
        .take_while(|&k| {
            (n as u128).checked_pow(k).is_some_and(|s| s <= opts.kron_cap as u128)
                && witt_dimension(n, k as usize) <= BigInt::from(opts.witt_cap)
        })
        .last()
        .unwrap_or(0)
}

fn audit_summary(records: &[AuditRecord]) -> (Option<u32>, PrimeSet) {
    let failed = records.iter().find(|r| !r.af_nilpotent).map(|r| r.k);
    let common = records
        .iter()
        .fold(PrimeSet::all(), |acc, r| acc.intersect(&r.primes));
    (failed, common)
}

/// Classify `F_n ⋊_φ Z`. Rank 2 is decided exactly; other ranks collect
/// every applicable sufficient condition and bounded audits.
pub fn classify_general(input: &GroupInput, opts: &ClassifyOptions) -> Result<Verdict> {
    let mut pre = Vec::new();
    let a = match input {
        GroupInput::Matrix(m) => m.clone(),
        GroupInput::Endo { endo, inverse } => {
            let check = check_automorphism(endo, inverse.as_ref())?;
            let (text, certainty) = match check {
                AutomorphismCheck::ProvenAuto => ("composition with the supplied inverse is the identity", Certainty::Proven),
                AutomorphismCheck::AbelianizedUnimodularOnly => (
                    "only |det [φ̄]| = 1 was checked; the verdict assumes φ is an automorphism",
                    Certainty::Unknown,
                ),
                AutomorphismCheck::ProvenNotAuto => ("abelianization is not unimodular", Certainty::Proven),
            };
            pre.push(Witness::new(Criterion::Automorphism, text, certainty));
            abelianization_matrix(endo)
        }
    };
    let n = a.require_square()?;
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    if let Some(&p) = opts.primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    require_unimodular(&a)?;

    let bound = match opts.tensor_bound {
        Some(k) => k.max(1),
        None => fitting_bound(n, default_tensor_bound(n), opts).max(1),
    };

    let mut v = if n == 2 { classify_f2(&a)? } else { classify_other_rank(&a)? };
    v.witnesses.splice(0..0, pre);

    let af = af_criterion(&a)?;
    v.witnesses.push(Witness::new(
        Criterion::FactorValuesAtOne,
        format!("Z^{n} ⋊ Z: {}", describe_af(&af)),
        Certainty::Proven,
    ));
    let products = mikhailov_module_check(&a)?;
    v.witnesses.push(Witness::new(
        Criterion::EigenvalueProducts,
        if products {
            "no eigenvalue product of A−E is ±1: the module is residually nilpotent"
        } else {
            "some eigenvalue product of A−E is ±1: saturation bound does not apply"
        },
        Certainty::Proven,
    ));

    let tensor = tensor_power_audit(&a, bound, None, opts.kron_cap)?;
    let lie = lie_component_audit(&a, bound, None, opts.kron_cap, opts.witt_cap)?;
    let (t_fail, t_primes) = audit_summary(&tensor);
    let (l_fail, l_primes) = audit_summary(&lie);
    let closed_form = n == 2 && matches!(v.lcs_length, LcsLength::Omega | LcsLength::OmegaSquared);
    let tensor_text = match t_fail {
        None if closed_form => format!(
            "A^(⊗k) passes for k=1..{bound}; for rank 2 outside length 2 every k passes, so γ_(ω²)=1; \
             common primes {t_primes}"
        ),
        None => format!(
            "A^(⊗k) passes for k=1..{bound}, so γ_(ω²)=1 up to this bound; common primes {t_primes}"
        ),
        Some(k) => format!("A^(⊗{k}) fails the factor test; no conclusion about G"),
    };
    let tensor_certainty = match (t_fail, closed_form) {
        (None, true) | (Some(_), _) => Certainty::Proven,
        (None, false) => Certainty::ProvenUpToBound(bound),
    };
    v.witnesses.push(Witness::new(Criterion::TensorPowerAudit, tensor_text, tensor_certainty));
    let consistent = lie.iter().all(|r| r.tensor_consistent != Some(false));
    let lie_text = match l_fail {
        None => format!("Lie components pass for k=1..{bound}; common primes {l_primes}"),
        Some(k) => format!("Lie component k={k} fails the factor test"),
    };
    v.witnesses.push(Witness::new(
        Criterion::LieComponentAudit,
        format!(
            "{lie_text}; tensor cross-check {}",
            if consistent { "consistent" } else { "VIOLATED" }
        ),
        if l_fail.is_none() && !closed_form {
            Certainty::ProvenUpToBound(bound)
        } else {
            Certainty::Proven
        },
    ));

    // bounded residual p-finiteness from the tensor audits
    if v.residually_nilpotent.is_unknown() && !t_primes.is_empty() {
        v.residually_nilpotent = Claim::bounded(true, bound);
        if t_primes.all {
            v.other_primes = Claim::bounded(true, bound);
        } else {
            for &p in &t_primes.primes {
                v.residually_p_finite.entry(p).or_insert(Claim::bounded(true, bound));
            }
        }
    }
    for &p in &opts.primes {
        let c = v.p_finite(p);
        v.residually_p_finite.entry(p).or_insert(c);
    }
    debug_assert_eq!(v.check_invariants(), Ok(()));
    Ok(v)
}

fn classify_other_rank(a: &IntMatrix) -> Result<Verdict> {
    let n = a.rows();
    let mut v = Verdict::new(n, vec![a.clone()]);
    if gamma_omega_is_fiber(a)? {
        mark_not_residually_nilpotent(&mut v);
        v.lcs_length = LcsLength::Two;
        v.lcs_certainty = Certainty::Proven;
        v.witnesses.push(Witness::new(
            Criterion::Fiber,
            format!("det(A−E)={}", show(&a.minus_identity().det()?)),
            Certainty::Proven,
        ));
        return Ok(v);
    }
    if let Some(ie) = integer_eigenvalue_criterion(a)? {
        v.residually_nilpotent = Claim::proven(true);
        let text = if ie.all_plus_one {
            v.other_primes = Claim::proven(true);
            format!("char(A) = (x−1)^{n}: residually p-finite for all p")
        } else {
            v.residually_p_finite.insert(2, Claim::proven(true));
            format!("char(A) = {}: eigenvalues ±1, residually 2-finite", char_poly(a)?)
        };
        v.witnesses.push(Witness::new(Criterion::IntegerEigenvalues, text, Certainty::Proven));
    }
    let up = unipotency_primes(a)?;
    if !up.all {
        for &p in &up.primes {
            if let Some(w) = unipotency_witness(a, p)? {
                v.residually_p_finite.insert(p, Claim::proven(true));
                v.witnesses.push(w);
            }
        }
        if !up.primes.is_empty() && !v.residually_nilpotent.is_proven(true) {
            v.residually_nilpotent = Claim::proven(true);
            v.witnesses.push(Witness::new(
                Criterion::PFiniteImpliesNilpotent,
                format!("residually p-finite for p in {up}"),
                Certainty::Proven,
            ));
        }
    }
    if v.residually_nilpotent.is_proven(true) {
        v.lcs_certainty = Certainty::Proven;
        if n == 1 && a.is_identity() {
            v.lcs_length = LcsLength::Two;
            v.witnesses.push(Witness::new(Criterion::Abelian, "A = E on Z", Certainty::Proven));
        } else {
            v.lcs_length = LcsLength::Omega;
            let why = if n == 1 { "γ_k = (A−E)^(k−1) Z ≠ 0 for all k" } else { "F_n is not nilpotent" };
            v.witnesses.push(Witness::new(Criterion::NotNilpotent, why, Certainty::Proven));
        }
    } else if n >= 3 {
        v.witnesses.push(Witness::new(
            Criterion::OpenForHigherRank,
            format!("n={n}: no proven criterion decides the length"),
            Certainty::Unknown,
        ));
    }
    Ok(v)
}

/// `F_n ⋊ B` where `B` acts on `F_n^ab` by the matrices `bs` (one per
/// generator of `B`). `acting_group_residually_nilpotent` records the
/// hypothesis on `B`, which cannot be checked from the matrices.
pub fn classify_action_family(bs: &[IntMatrix], p: u64, acting_group_residually_nilpotent: bool) -> Result<Verdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let Some(first) = bs.first() else {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    };
    let n = first.require_square()?;
    for b in bs {
        if b.rows() != n || b.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.rows().max(b.cols()),
            });
        }
        require_unimodular(b)?;
    }
    let mut v = Verdict::new(n, bs.to_vec());
    let mut trivial = true;
    for (i, b) in bs.iter().enumerate() {
        let nn = mod_p_unipotency(b, p)?;
        trivial &= nn == Some(1);
        v.witnesses.push(Witness::new(
            Criterion::ModPUnipotency,
            match nn {
                Some(k) => format!("B{}: (B{}−E)^{k} ≡ 0 mod {p}", i + 1, i + 1),
                None => format!("B{}: B{}−E is not nilpotent mod {p}", i + 1, i + 1),
            },
            Certainty::Proven,
        ));
    }
    let aug = augmentation_power_check(bs, p, 2 * n as u32)?;
    v.witnesses.push(Witness::new(
        Criterion::AugmentationPower,
        match aug {
            Some(k) => format!("Δ^{k} Ā ⊆ {p}Ā"),
            None => format!("Δ^N Ā ⊄ {p}Ā for N ≤ {}", 2 * n),
        },
        Certainty::Proven,
    ));
    let premise = format!("every B_i ≡ E mod {p}, so the action is trivial modulo γ_2^({p})(F_{n})");
    if trivial && acting_group_residually_nilpotent {
        v.residually_nilpotent = Claim::proven(true);
        v.witnesses.push(Witness::new(
            Criterion::TrivialActionModP,
            format!("{premise}; F_{n} is residually {p}-nilpotent; acting group residually nilpotent (hypothesis)"),
            Certainty::Proven,
        ));
        if n >= 2 {
            v.lcs_length = LcsLength::Omega;
            v.lcs_certainty = Certainty::Proven;
            v.witnesses.push(Witness::new(Criterion::NotNilpotent, format!("F_{n} is not nilpotent"), Certainty::Proven));
        }
    } else if trivial {
        v.witnesses.push(Witness::new(
            Criterion::TrivialActionModP,
            format!("{premise}; residual nilpotence of the acting group not asserted"),
            Certainty::Unknown,
        ));
    } else {
        v.witnesses.push(Witness::new(
            Criterion::TrivialActionModP,
            format!("premise fails: some B_i ≢ E mod {p}"),
            Certainty::Unknown,
        ));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::parse_endo;

    fn mat<R: AsRef<[i64]>>(r: &[R]) -> IntMatrix {
        IntMatrix::from_i64_rows(r)
    }

    #[test]
    fn f2_examples() {
        let v = classify_f2(&mat(&[[0, 1], [1, 3]])).unwrap();
        assert_eq!(v.lcs_length, LcsLength::OmegaSquared);
        assert!(v.residually_nilpotent.is_proven(false));
        assert_eq!(v.witnesses[0].evidence, "det=−1, tr=3");

        let v = classify_f2(&mat(&[[1, 1], [-1, 0]])).unwrap();
        assert_eq!(v.lcs_length, LcsLength::Two);
        assert!(v.witnesses.iter().any(|w| w.evidence == "det(A−E)=1"));

        let v = classify_f2(&mat(&[[1, 3], [3, 10]])).unwrap();
        assert_eq!(v.lcs_length, LcsLength::Omega);
        assert_eq!(v.proven_p_finite(), PrimeSet::of([3]));
        assert!(v.p_finite(5).is_unknown());

        assert!(classify_f2(&IntMatrix::identity(2)).unwrap().other_primes.is_proven(true));
        assert!(matches!(classify_f2(&IntMatrix::identity(3)), Err(Error::Not2x2 { .. })));
        assert!(matches!(classify_f2(&mat(&[[2, 0], [0, 1]])), Err(Error::NotUnimodular { .. })));
    }

    #[test]
    fn finite_index_examples() {
        let s = finite_index_resnil_subgroup(&mat(&[[0, 1], [1, 3]])).unwrap();
        assert_eq!(s.index, 2);
        assert_eq!(s.power_matrix, mat(&[[1, 3], [3, 10]]));
        assert_eq!(s.sub_verdict.proven_p_finite(), PrimeSet::of([3]));

        let s = finite_index_resnil_subgroup(&mat(&[[1, 1], [1, 0]])).unwrap();
        assert_eq!(s.index, 4);
        assert_eq!(s.power_matrix.trace(), BigInt::from(7));
        assert_eq!(s.sub_verdict.proven_p_finite(), PrimeSet::of([5]));

        let s = finite_index_resnil_subgroup(&mat(&[[1, 1], [-1, 0]])).unwrap();
        assert_eq!(s.index, 2);
        assert_eq!(s.power_matrix, mat(&[[0, 1], [-1, -1]]));
        assert_eq!(s.sub_verdict.proven_p_finite(), PrimeSet::of([3]));
    }

    #[test]
    fn general_examples() {
        let (f, _) = parse_endo("a -> b; b -> a b^3").unwrap();
        let v = classify_general(&GroupInput::Endo { endo: f, inverse: None }, &ClassifyOptions::default()).unwrap();
        assert_eq!(v.lcs_length, LcsLength::OmegaSquared);
        assert!(v.residually_nilpotent.is_proven(false));
        v.check_invariants().unwrap();

        let (f, _) = parse_endo("x1 -> x1; x2 -> x2^-1; x3 -> x3").unwrap();
        let v = classify_general(&GroupInput::Endo { endo: f, inverse: None }, &ClassifyOptions::default()).unwrap();
        assert!(v.residually_nilpotent.is_proven(true));
        assert!(v.p_finite(2).is_proven(true));
        assert_eq!(v.lcs_length, LcsLength::Omega);
        v.check_invariants().unwrap();

        let u = mat(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
        let opts = ClassifyOptions {
            primes: vec![2, 3, 5],
            ..Default::default()
        };
        let v = classify_general(&GroupInput::Matrix(u), &opts).unwrap();
        for p in [2, 3, 5, 7] {
            assert!(v.p_finite(p).is_proven(true));
        }
        v.check_invariants().unwrap();
    }

    #[test]
    fn general_rank_three_fiber_and_open() {
        // companion matrix of x^3 - x - 1: det(A - E) = -char(1) = 1
        let a = mat(&[[0, 0, 1], [1, 0, 1], [0, 1, 0]]);
        let v = classify_general(&GroupInput::Matrix(a), &ClassifyOptions::default()).unwrap();
        assert_eq!(v.lcs_length, LcsLength::Two);
        assert!(v.residually_nilpotent.is_proven(false));

        // companion of x^3 - 3x^2 + 1 ... char(1) = -1 again, pick x^3 - 4x^2 + x - 1:
        // char(1) = -3, not unipotent anywhere except possibly 3
        let b = mat(&[[0, 0, 1], [1, 0, -1], [0, 1, 4]]);
        let v = classify_general(&GroupInput::Matrix(b.clone()), &ClassifyOptions::default()).unwrap();
        v.check_invariants().unwrap();
        assert_ne!(v.lcs_length, LcsLength::Two);
        assert_eq!(classify_general(&GroupInput::Matrix(b), &ClassifyOptions {
            tensor_bound: Some(9),
            ..Default::default()
        })
        .unwrap_err(), Error::SizeCapExceeded { what: "Kronecker power", size: 19683, cap: 4096 });
    }

    #[test]
    fn rank_one() {
        let v = classify_general(&GroupInput::Matrix(IntMatrix::identity(1)), &ClassifyOptions::default()).unwrap();
        assert_eq!(v.lcs_length, LcsLength::Two);
        assert!(v.residually_nilpotent.is_proven(true));
        v.check_invariants().unwrap();
        let v = classify_general(&GroupInput::Matrix(mat(&[[-1]])), &ClassifyOptions::default()).unwrap();
        assert_eq!(v.lcs_length, LcsLength::Omega);
        assert!(v.p_finite(2).is_proven(true));
    }

    #[test]
    fn klein_family() {
        let bs = [mat(&[[1, 0], [-2, 1]]), mat(&[[-1, 0], [2, 1]])];
        let v = classify_action_family(&bs, 2, true).unwrap();
        assert!(v.residually_nilpotent.is_proven(true));
        v.check_invariants().unwrap();
        let v = classify_action_family(&bs, 3, true).unwrap();
        assert!(v.residually_nilpotent.is_unknown());
    }
}
