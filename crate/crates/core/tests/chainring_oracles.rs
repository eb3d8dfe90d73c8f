mod common;

use common::oracle;
use proptest::prelude::*;
use strel_core::chainring::{
    cokernel_shape, howell_form, in_row_span, kernel, pivots, solve, RMatrix, RingSpec,
};

fn rows_of(m: &RMatrix) -> Vec<Vec<u64>> {
    m.row_vecs()
}

fn span_of(m: &RMatrix) -> std::collections::BTreeSet<Vec<u64>> {
    oracle::span(&rows_of(m), m.cols(), m.ring().modulus())
}

/// Structural Howell conditions, checked directly on the matrix.
fn assert_howell_shape(h: &RMatrix) {
    let ring = h.ring();
    let piv = pivots(h);
    assert_eq!(piv.len(), h.rows(), "zero row in Howell form");
    for w in piv.windows(2) {
        assert!(w[0].0 < w[1].0, "pivot columns must increase");
    }
    for (i, &(c, v)) in piv.iter().enumerate() {
        assert_eq!(h.get(i, c), ring.int_pow(v), "pivot must be p^v");
        for k in 0..i {
            assert!(
                h.get(k, c) < ring.int_pow(v),
                "entry above pivot not reduced"
            );
        }
    }
}

#[test]
fn howell_span_example_over_z8() {
    let r = RingSpec::new(2, 3).unwrap();
    let a = RMatrix::from_rows(r, 2, &[vec![2, 1], vec![0, 4]]);
    let h = howell_form(&a);
    assert_howell_shape(&h);
    assert_eq!(span_of(&h), span_of(&a));
}

#[test]
fn kernel_example_over_z9() {
    let r = RingSpec::new(3, 2).unwrap();
    let a = RMatrix::from_rows(r, 2, &[vec![2, 0], vec![0, 1]]);
    let k = kernel(&a);
    let expected = oracle::left_kernel(&rows_of(&a), 2, 9);
    assert_eq!(span_of(&k), expected);
}

#[test]
fn cokernel_shape_example_over_z8() {
    let r = RingSpec::new(2, 3).unwrap();
    let a = RMatrix::from_rows(r, 2, &[vec![2, 1], vec![0, 4]]);
    let expected = oracle::quotient_shape(&rows_of(&a), 2, 2, 3);
    assert_eq!(cokernel_shape(&a).shape.exponents(), expected.as_slice());
    // (2,1) extends to a basis and (0,4) = 4(2,1), so the quotient is Z/8
    assert_eq!(expected, vec![3]);
}

#[test]
fn exhaustive_two_by_two_over_z4_and_z8() {
    for n in [2u32, 3] {
        let r = RingSpec::new(2, n).unwrap();
        let q = r.modulus();
        for (rows, cols) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            for entries in oracle::all_vectors(rows * cols, q) {
                let a = RMatrix::from_fn(r, rows, cols, |i, j| entries[i * cols + j]);
                let span = span_of(&a);
                let h = howell_form(&a);
                assert_howell_shape(&h);
                assert_eq!(span_of(&h), span, "span mismatch for {a:?}");

                let k = kernel(&a);
                assert_eq!(span_of(&k), oracle::left_kernel(&rows_of(&a), cols, q));

                for b in oracle::all_vectors(cols, q) {
                    match solve(&a, &b) {
                        Some(x) => assert_eq!(a.vec_mul(&x), b),
                        None => assert!(!span.contains(&b)),
                    }
                    assert_eq!(in_row_span(&h, &b), span.contains(&b));
                }

                assert_eq!(
                    cokernel_shape(&a).shape.exponents(),
                    oracle::quotient_shape(&rows_of(&a), cols, 2, n).as_slice()
                );
            }
        }
    }
}

fn small_matrix() -> impl Strategy<Value = RMatrix> {
    // rings with p^n ≤ 16, up to 3x3
    (
        prop::sample::select(vec![
            (2u64, 1u32),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 1),
            (3, 2),
            (5, 1),
            (7, 1),
        ]),
        0usize..=3,
        1usize..=3,
    )
        .prop_flat_map(|((p, n), rows, cols)| {
            let q = p.pow(n);
            prop::collection::vec(0..q, rows * cols).prop_map(move |e| {
                let r = RingSpec::new(p, n).unwrap();
                RMatrix::from_fn(r, rows, cols, |i, j| e[i * cols + j])
            })
        })
}

fn invertible(r: RingSpec, size: usize, seed: &[u64]) -> RMatrix {
    // unit lower-triangular times unit upper-triangular is invertible
    let mut k = 0;
    let mut next = || {
        k += 1;
        seed[k % seed.len()] + k as u64
    };
    let l = RMatrix::from_fn(r, size, size, |i, j| {
        if i == j {
            1
        } else if i > j {
            next()
        } else {
            0
        }
    });
    let u = RMatrix::from_fn(r, size, size, |i, j| {
        if i == j {
            1
        } else if i < j {
            next()
        } else {
            0
        }
    });
    l.mul(&u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn howell_is_idempotent(a in small_matrix()) {
        let h = howell_form(&a);
        prop_assert_eq!(howell_form(&h), h);
    }

    #[test]
    fn howell_preserves_span(a in small_matrix()) {
        prop_assert_eq!(span_of(&howell_form(&a)), span_of(&a));
    }

    #[test]
    fn howell_is_canonical_for_the_span(a in small_matrix(), seed in prop::collection::vec(0u64..100, 1..8)) {
        // left-multiplying by an invertible matrix keeps the span and so the form
        let u = invertible(a.ring(), a.rows(), &seed);
        prop_assert_eq!(howell_form(&u.mul(&a)), howell_form(&a));
    }

    #[test]
    fn kernel_is_sound_and_complete(a in small_matrix()) {
        let k = kernel(&a);
        for i in 0..k.rows() {
            prop_assert!(a.vec_mul(k.row(i)).iter().all(|&x| x == 0));
        }
        let q = a.ring().modulus();
        if q.pow(a.rows() as u32) <= 4096 {
            prop_assert_eq!(span_of(&k), oracle::left_kernel(&rows_of(&a), a.cols(), q));
        }
    }

    #[test]
    fn solve_is_consistent(a in small_matrix(), b_seed in prop::collection::vec(0u64..16, 3)) {
        let q = a.ring().modulus();
        let b: Vec<u64> = b_seed.iter().take(a.cols()).map(|&x| x % q).collect();
        match solve(&a, &b) {
            Some(x) => prop_assert_eq!(a.vec_mul(&x), b),
            None => prop_assert!(!span_of(&a).contains(&b)),
        }
    }

    #[test]
    fn cokernel_shape_is_invariant(a in small_matrix(), seed in prop::collection::vec(0u64..100, 1..8)) {
        let base = cokernel_shape(&a).shape;
        let mut rev_rows: Vec<usize> = (0..a.rows()).collect();
        rev_rows.reverse();
        let mut rev_cols: Vec<usize> = (0..a.cols()).collect();
        rev_cols.reverse();
        prop_assert_eq!(&cokernel_shape(&a.select_rows(&rev_rows).select_cols(&rev_cols)).shape, &base);
        let u = invertible(a.ring(), a.rows(), &seed);
        let v = invertible(a.ring(), a.cols(), &seed[1..].iter().chain(&seed[..1]).copied().collect::<Vec<_>>());
        prop_assert_eq!(&cokernel_shape(&u.mul(&a).mul(&v)).shape, &base);
    }
}
