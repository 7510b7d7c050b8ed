mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::{big, cofactor_det, random_matrix, random_unimodular, rng};
use resnil_core::criteria::gamma_omega_is_fiber;
use resnil_core::intpoly::IntPoly;
use resnil_core::zlinalg::{
    char_poly, compound_matrix, hermite_form, is_unimodular, kronecker, kronecker_power, lattice_chain,
    smith_form, IntMatrix, SubLattice,
};

fn square(n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
        let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
        IntMatrix::from_i64_rows(&rows)
    })
}

fn any_square(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| square(n, bound))
}

fn unimodular() -> impl Strategy<Value = IntMatrix> {
    (any::<u64>(), 1usize..=4).prop_map(|(seed, n)| random_unimodular(&mut rng(seed), n, 3 * n))
}

/// `p(M)` by Horner's scheme.
fn eval_at_matrix(p: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * m) + &IntMatrix::identity(n).scale(c);
    }
    acc
}

proptest! {
    #[test]
    fn bareiss_matches_cofactor(m in any_square(4, 9)) {
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn char_poly_invariants(m in any_square(4, 6)) {
        let n = m.rows();
        let p = char_poly(&m).unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.is_monic());
        prop_assert_eq!(-p.coeff(n - 1), m.trace());
        let sign = if n % 2 == 0 { big(1) } else { big(-1) };
        prop_assert_eq!(p.coeff(0) * sign, m.det().unwrap());
        prop_assert!(eval_at_matrix(&p, &m).is_zero());
        prop_assert_eq!(char_poly(&m.transpose()).unwrap(), p);
    }

    #[test]
    fn char_poly_is_similarity_invariant(m in square(3, 5), seed in any::<u64>()) {
        let u = random_unimodular(&mut rng(seed), 3, 6);
        let uinv = inverse_unimodular(&u);
        prop_assert!((&u * &uinv).is_identity());
        prop_assert_eq!(char_poly(&(&(&u * &m) * &uinv)).unwrap(), char_poly(&m).unwrap());
    }

    #[test]
    fn mixed_product(a in square(2, 4), b in square(2, 4), c in square(2, 4), d in square(2, 4)) {
        let lhs = &kronecker(&a, &b) * &kronecker(&c, &d);
        prop_assert_eq!(lhs, kronecker(&(&a * &c), &(&b * &d)));
    }

    #[test]
    fn kronecker_power_char_poly_roots(m in square(2, 4)) {
        // tr(M^{⊗k}) = tr(M)^k, det(M^{⊗2}) = det(M)^4 for 2x2
        let k2 = kronecker_power(&m, 2, 4096).unwrap();
        prop_assert_eq!(k2.trace(), m.trace().pow(2));
        prop_assert_eq!(k2.det().unwrap(), m.det().unwrap().pow(4));
    }

    #[test]
    fn cauchy_binet(a in square(3, 4), b in square(3, 4), k in 1usize..=3) {
        let lhs = compound_matrix(&(&a * &b), k).unwrap();
        let rhs = &compound_matrix(&a, k).unwrap() * &compound_matrix(&b, k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compound_top_is_determinant(m in any_square(4, 5)) {
        let n = m.rows();
        let c = compound_matrix(&m, n).unwrap();
        prop_assert_eq!(c.rows(), 1);
        prop_assert_eq!(c[(0, 0)].clone(), m.det().unwrap());
    }

    #[test]
    fn hermite_invariants(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=5) {
        let m = random_matrix(&mut rng(seed), rows, cols, 7);
        let (h, u) = hermite_form(&m);
        prop_assert!(is_unimodular(&u).unwrap());
        prop_assert_eq!(&m * &u, h.clone());
        // column echelon with positive pivots, reduced to the left
        let mut last_pivot: Option<usize> = None;
        let mut zero_seen = false;
        for j in 0..h.cols() {
            let col = h.column(j);
            match col.iter().position(|x| !x.is_zero()) {
                None => zero_seen = true,
                Some(r) => {
                    prop_assert!(!zero_seen);
                    prop_assert!(last_pivot.map_or(true, |p| r > p));
                    prop_assert!(h[(r, j)].is_positive());
                    for jj in 0..j {
                        prop_assert!(!h[(r, jj)].is_negative() && h[(r, jj)] < h[(r, j)]);
                    }
                    last_pivot = Some(r);
                }
            }
        }
    }

    #[test]
    fn smith_invariants(seed in any::<u64>(), rows in 1usize..=4, cols in 1usize..=4) {
        let m = random_matrix(&mut rng(seed), rows, cols, 9);
        let s = smith_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert!(is_unimodular(&s.u).unwrap() && is_unimodular(&s.v).unwrap());
        let d = &s.elementary_divisors;
        prop_assert_eq!(d.len(), rows.min(cols));
        for (i, x) in d.iter().enumerate() {
            prop_assert!(!x.is_negative());
            prop_assert_eq!(&s.d[(i, i)], x);
        }
        for w in d.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            prop_assert!(divides);
        }
        if rows == cols {
            let prod: BigInt = d.iter().product();
            prop_assert_eq!(prod, m.det().unwrap().abs());
        }
    }

    #[test]
    fn chain_descends(a in unimodular()) {
        let chain = lattice_chain(&a, 4).unwrap();
        for w in chain.windows(2) {
            prop_assert!(w[0].lattice.contains_lattice(&w[1].lattice).unwrap());
        }
    }

    #[test]
    fn p_at_one_power_lies_in_chain(a in unimodular(), k in 2u32..=5) {
        let n = a.rows();
        let p1 = char_poly(&a).unwrap().eval(&BigInt::one());
        let l = SubLattice::spanned_by(&a.minus_identity().pow(k - 1).unwrap());
        for i in 0..n {
            let mut e = vec![BigInt::zero(); n];
            e[i] = p1.pow(k - 1);
            prop_assert!(l.contains(&e).unwrap());
        }
    }

    #[test]
    fn fiber_iff_chain_saturates(a in unimodular()) {
        let n = a.rows();
        let chain = lattice_chain(&a, 3).unwrap();
        let saturated = chain.iter().all(|c| c.lattice == SubLattice::full(n));
        prop_assert_eq!(gamma_omega_is_fiber(&a).unwrap(), saturated);
    }
}

/// Inverse of a unimodular matrix by solving with its Smith form.
fn inverse_unimodular(u: &IntMatrix) -> IntMatrix {
    // U^-1 = V D^-1 S where S U V = D and D = diag(±1)
    let s = smith_form(u);
    let n = u.rows();
    let dinv = IntMatrix::from_columns(
        n,
        &(0..n)
            .map(|j| {
                let mut c = vec![BigInt::zero(); n];
                c[j] = s.d[(j, j)].clone();
                c
            })
            .collect::<Vec<_>>(),
    );
    &(&s.v * &dinv) * &s.u
}

#[test]
fn smith_reassembly_on_two_hundred_matrices() {
    let mut r = rng(0x5111);
    for i in 0..200 {
        let rows = 1 + i % 4;
        let cols = 1 + (i / 4) % 4;
        let m = random_matrix(&mut r, rows, cols, 12);
        let s = smith_form(&m);
        assert_eq!(&(&s.u * &m) * &s.v, s.d, "{m}");
    }
}

#[test]
fn unimodular_generator_is_unimodular() {
    let mut r = rng(1);
    for n in 1..=4 {
        for _ in 0..25 {
            assert!(is_unimodular(&random_unimodular(&mut r, n, 3 * n)).unwrap());
        }
    }
}
