mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use common::{random_unimodular, rng};
use resnil_core::criteria::{
    af_criterion, classify_f2, classify_general, finite_index_resnil_subgroup, lie_component_audit,
    mod_p_unipotency, tensor_power_audit, ClassifyOptions, Criterion, GroupInput, LcsLength,
};
use resnil_core::primes::prime_divisors;
use resnil_core::zlinalg::{IntMatrix, DEFAULT_SIZE_CAP};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn companion(det: i64, tr: i64) -> IntMatrix {
    IntMatrix::from_i64_rows(&[[0, -det], [1, tr]])
}

fn unimodular(max_n: usize) -> impl Strategy<Value = IntMatrix> {
    (any::<u64>(), 1..=max_n).prop_map(|(seed, n)| random_unimodular(&mut rng(seed), n, 3 * n))
}

#[test]
fn rank_two_table_is_consistent() {
    for det in [1, -1] {
        for tr in -8..=8 {
            let a = companion(det, tr);
            let v = classify_f2(&a).unwrap();
            v.check_invariants().unwrap();
            let resnil = v.residually_nilpotent.is_proven(true);
            // exactly one of the three lengths, all proven
            assert!(matches!(v.lcs_length, LcsLength::Two | LcsLength::Omega | LcsLength::OmegaSquared));
            assert!(v.residually_nilpotent.value.is_some());
            // necessity: the abelian quotient module must pass the factor test
            if resnil {
                assert!(af_criterion(&a).unwrap().nilpotent, "det={det} tr={tr}");
            }
            // sufficiency certificates exist for every proven prime
            for p in v.proven_p_finite().primes {
                assert!(mod_p_unipotency(&a, p).unwrap().is_some(), "det={det} tr={tr} p={p}");
            }
            if det == 1 && tr != 2 {
                let expected: Vec<u64> = prime_divisors(&BigInt::from(tr - 2)).unwrap().into_iter().collect();
                let got: Vec<u64> = v.proven_p_finite().primes.into_iter().collect();
                if resnil {
                    assert_eq!(got, expected);
                }
            }
        }
    }
}

#[test]
fn trace_two_gives_every_prime() {
    let v = classify_f2(&IntMatrix::from_i64_rows(&[[1, 5], [0, 1]])).unwrap();
    assert!(v.proven_p_finite().all);
    assert!(v.p_finite(1_000_003).is_proven(true));
}

#[test]
fn finite_index_covers_small_traces() {
    for det in [1, -1] {
        for tr in -8..=8 {
            let a = companion(det, tr);
            let s = finite_index_resnil_subgroup(&a).unwrap();
            assert!(s.sub_verdict.residually_nilpotent.is_proven(true), "det={det} tr={tr}");
            let four = det == -1 && (tr == 1 || tr == -1);
            assert_eq!(s.index == 4, four);
            if four {
                assert_eq!(s.power_matrix.trace(), BigInt::from(7));
            }
            assert_eq!(s.power_matrix, a.pow(s.index).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unipotency_implies_tensor_pass(a in unimodular(3)) {
        let k = if a.rows() <= 2 { 4 } else { 3 };
        for p in PRIMES {
            if mod_p_unipotency(&a, p).unwrap().is_some() {
                let audit = tensor_power_audit(&a, k, Some(p), DEFAULT_SIZE_CAP).unwrap();
                prop_assert!(audit.iter().all(|r| r.af_nilpotent && r.p_finite == Some(true)));
            }
        }
    }

    #[test]
    fn tensor_pass_implies_lie_pass(a in unimodular(3)) {
        let k = if a.rows() <= 2 { 4 } else { 3 };
        let tensor = tensor_power_audit(&a, k, None, DEFAULT_SIZE_CAP).unwrap();
        let lie = lie_component_audit(&a, k, None, DEFAULT_SIZE_CAP, 512).unwrap();
        for (t, l) in tensor.iter().zip(&lie) {
            if t.af_nilpotent {
                prop_assert!(l.af_nilpotent);
            }
            prop_assert!(t.primes.is_subset(&l.primes));
            prop_assert_eq!(l.tensor_consistent, Some(true));
        }
    }

    #[test]
    fn general_verdicts_satisfy_invariants(a in unimodular(4)) {
        let v = classify_general(&GroupInput::Matrix(a.clone()), &ClassifyOptions {
            primes: vec![2, 3],
            ..Default::default()
        }).unwrap();
        prop_assert_eq!(v.check_invariants(), Ok(()));
        prop_assert!(v.witnesses.iter().all(|w| !w.anchor.is_empty()));
        // "not residually nilpotent" only from the fiber test or the rank-two table
        if v.residually_nilpotent.is_proven(false) {
            let sources = v.witnesses.iter().any(|w| matches!(w.criterion, Criterion::Fiber | Criterion::RankTwoTable));
            prop_assert!(sources);
        }
        if a.rows() == 2 {
            let f2 = classify_f2(&a).unwrap();
            prop_assert_eq!(v.residually_nilpotent, f2.residually_nilpotent);
            prop_assert_eq!(v.lcs_length, f2.lcs_length);
        }
        // determinism
        let again = classify_general(&GroupInput::Matrix(a), &ClassifyOptions {
            primes: vec![2, 3],
            ..Default::default()
        }).unwrap();
        prop_assert_eq!(v, again);
    }

    #[test]
    fn unipotency_exponent_is_minimal(a in unimodular(4)) {
        for p in PRIMES {
            if let Some(n) = mod_p_unipotency(&a, p).unwrap() {
                let x = a.minus_identity();
                let zero_mod_p = |m: &IntMatrix| m.entries().iter().all(|e| (e % BigInt::from(p)).is_zero());
                prop_assert!(zero_mod_p(&x.pow(n).unwrap()));
                prop_assert!(n == 1 || !zero_mod_p(&x.pow(n - 1).unwrap()));
                prop_assert!(n as usize <= a.rows());
            }
        }
    }
}
