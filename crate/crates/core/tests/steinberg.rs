//! Integration tests for the alternating-sum growth pipeline on explicit
//! Coxeter matrices, with the three reference simplices as goldens.

use coxeter_growth::coxeter::{CoxeterMatrix, Label};
use coxeter_growth::steinberg::{
    growth_function, invert_variable, series_coefficients, steinberg_sum, SERIES_CAP,
};
use coxeter_growth::{Error, IntPolynomial};
use num_bigint::BigInt;
use proptest::prelude::*;

fn fin(m: u32) -> Label {
    Label::Finite(m)
}

fn simplex(labels: [u32; 6]) -> CoxeterMatrix {
    let [l01, l02, l03, l12, l13, l23] = labels;
    CoxeterMatrix::from_labels(
        4,
        &[
            (0, 1, fin(l01)),
            (0, 2, fin(l02)),
            (0, 3, fin(l03)),
            (1, 2, fin(l12)),
            (1, 3, fin(l13)),
            (2, 3, fin(l23)),
        ],
    )
    .unwrap()
}

/// The three ideal 4-facet simplices as explicit matrices, with their reduced
/// growth functions frozen from an independent computation.
fn reference_simplices() -> Vec<(CoxeterMatrix, &'static [i64], &'static [i64])> {
    vec![
        // angles (p,q,r,s) = (2,2,0,2): opposite right angles, labels 3, 6
        (
            simplex([2, 3, 6, 6, 3, 2]),
            &[1, 2, 2, 2, 2, 2, 1][..],
            &[1, -2, 0, 0, 0, -2, 3][..],
        ),
        // (2,0,4,0): two right angles, four labels 4
        (
            simplex([2, 4, 4, 4, 4, 2]),
            &[1, 2, 2, 2, 1][..],
            &[1, -2, 0, -2, 3][..],
        ),
        // (0,6,0,0): all labels 3
        (
            simplex([3, 3, 3, 3, 3, 3]),
            &[1, 2, 2, 1][..],
            &[1, -2, -2, 3][..],
        ),
    ]
}

#[test]
fn reference_simplices_match_frozen_growth_functions() {
    for (m, num, den) in reference_simplices() {
        let f = growth_function(&m).unwrap();
        assert_eq!(f.numerator(), &IntPolynomial::from_i64(num));
        assert_eq!(f.denominator(), &IntPolynomial::from_i64(den));
    }
}

#[test]
fn series_of_the_all_threes_simplex() {
    // Word counts by length: 1 identity, 4 generators, then 12, 30, 72.
    let f = growth_function(&simplex([3, 3, 3, 3, 3, 3])).unwrap();
    let coeffs = series_coefficients(&f, 5).unwrap();
    let expected: Vec<BigInt> = [1, 4, 12, 30, 72].map(BigInt::from).to_vec();
    assert_eq!(coeffs, expected);
}

#[test]
fn series_cap_is_enforced() {
    let f = growth_function(&simplex([3, 3, 3, 3, 3, 3])).unwrap();
    assert_eq!(
        series_coefficients(&f, SERIES_CAP + 1),
        Err(Error::SeriesHorizon {
            requested: SERIES_CAP + 1,
            cap: SERIES_CAP
        })
    );
}

#[test]
fn triangle_group_with_salem_denominator() {
    // The (2,3,7) triangle group: all rank-2 parabolics finite, whole system
    // infinite. The reduced denominator is the degree-10 Salem polynomial
    // t¹⁰ + t⁹ − t⁷ − t⁶ − t⁵ − t⁴ − t³ + t + 1 (frozen independently).
    let m = CoxeterMatrix::from_labels(
        3,
        &[(0, 1, fin(2)), (0, 2, fin(3)), (1, 2, fin(7))],
    )
    .unwrap();
    let f = growth_function(&m).unwrap();
    assert_eq!(
        f.numerator(),
        &IntPolynomial::from_i64(&[1, 4, 8, 11, 12, 12, 12, 11, 8, 4, 1])
    );
    assert_eq!(
        f.denominator(),
        &IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    );
}

#[test]
fn affine_triangle_groups_have_cyclotomic_denominators() {
    // (2,4,4) and (2,3,6) are the affine triangles; their growth functions
    // exist (the full system is infinite) and the denominators consist of
    // t = 1 and roots of unity only (frozen lists).
    let m244 = CoxeterMatrix::from_labels(
        3,
        &[(0, 1, fin(2)), (0, 2, fin(4)), (1, 2, fin(4))],
    )
    .unwrap();
    let f = growth_function(&m244).unwrap();
    assert_eq!(f.numerator(), &IntPolynomial::from_i64(&[1, 2, 2, 2, 1]));
    assert_eq!(f.denominator(), &IntPolynomial::from_i64(&[1, -1, 0, -1, 1]));

    let m236 = CoxeterMatrix::from_labels(
        3,
        &[(0, 1, fin(2)), (0, 2, fin(3)), (1, 2, fin(6))],
    )
    .unwrap();
    let f = growth_function(&m236).unwrap();
    assert_eq!(f.numerator(), &IntPolynomial::from_i64(&[1, 2, 2, 2, 2, 2, 1]));
    assert_eq!(
        f.denominator(),
        &IntPolynomial::from_i64(&[1, -1, 0, 0, 0, -1, 1])
    );
}

#[test]
fn finite_systems_are_rejected_with_their_polynomial() {
    // B3: order 48, growth polynomial [2][4][6].
    let b3 = CoxeterMatrix::from_labels(3, &[(0, 1, fin(4)), (1, 2, fin(3))]).unwrap();
    match growth_function(&b3) {
        Err(Error::FiniteSystem { solomon }) => {
            let expected = &(&IntPolynomial::from_i64(&[1, 1])
                * &IntPolynomial::from_i64(&[1, 1, 1, 1]))
                * &IntPolynomial::from_i64(&[1, 1, 1, 1, 1, 1]);
            assert_eq!(solomon, expected);
        }
        other => panic!("expected FiniteSystem, got {other:?}"),
    }
}

#[test]
fn growth_function_inverts_the_steinberg_sum() {
    // The defining identity: steinberg_sum gives 1/f(1/t); inverting the
    // variable and taking the reciprocal must reproduce f exactly.
    for (m, _, _) in reference_simplices() {
        let s = steinberg_sum(&m).unwrap();
        let inv = invert_variable(&s).unwrap();
        let f = growth_function(&m).unwrap();
        assert_eq!(inv.numerator(), f.denominator());
        assert_eq!(inv.denominator(), f.numerator());
    }
}

/// Partial-sum check independent of the recurrence: Q·(Σₖ aₖ tᵏ) ≡ P
/// modulo t^count.
fn series_is_consistent(num: &IntPolynomial, den: &IntPolynomial, coeffs: &[BigInt]) -> bool {
    let partial = IntPolynomial::new(coeffs.to_vec());
    let product = den * &partial;
    (0..coeffs.len()).all(|k| product.coeff(k) == num.coeff(k))
}

proptest! {
    #[test]
    fn series_match_the_defining_product(labels in prop::collection::vec(2u32..=8, 6)) {
        let m = simplex(labels.try_into().unwrap());
        // Some label draws give finite or low-rank-degenerate systems; the
        // property only concerns the infinite ones.
        if let Ok(f) = growth_function(&m) {
            let coeffs = series_coefficients(&f, 40).unwrap();
            prop_assert!(series_is_consistent(f.numerator(), f.denominator(), &coeffs));
            // Growth series of infinite systems count words: a₀ = 1, a₁ = 4.
            prop_assert_eq!(&coeffs[0], &BigInt::from(1));
            prop_assert_eq!(&coeffs[1], &BigInt::from(4));
            prop_assert!(coeffs.iter().all(|a| a > &BigInt::from(0)));
        }
    }

    #[test]
    fn double_inversion_is_the_identity(labels in prop::collection::vec(2u32..=8, 6)) {
        let m = simplex(labels.try_into().unwrap());
        if let Ok(s) = steinberg_sum(&m) {
            if s.is_zero() {
                return Ok(());
            }
            // The reversal of a reduced function need not renormalize (its
            // denominator constant can be a non-unit); skip those draws. But
            // once one inversion succeeds, inverting again must be exact.
            if let Ok(once) = invert_variable(&s) {
                let twice = invert_variable(&once).unwrap();
                prop_assert_eq!(twice.numerator(), s.numerator());
                prop_assert_eq!(twice.denominator(), s.denominator());
            }
        }
    }
}
