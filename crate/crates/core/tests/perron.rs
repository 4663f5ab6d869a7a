//! Integration tests for the certification layer: full ideal-polytope
//! reports for the six reference polytopes, matrix reports, and the
//! minimality check.

use coxeter_growth::coxeter::{CoxeterMatrix, Label};
use coxeter_growth::perron::{
    default_width, ideal_report, isolate_root, matrix_report, minimum_check, reference_polytopes,
    tau_enclosure, BoundVerdict, ReportSource, RightAngledVerdict,
};
use coxeter_growth::{validate, Error, IntPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};

fn fin(m: u32) -> Label {
    Label::Finite(m)
}

/// Ten-decimal growth-rate strings for the six reference polytopes, frozen
/// from an independent high-precision computation.
const TEN_DIGIT_RATES: [&str; 6] = [
    "2.0307355728",
    "2.1303954348",
    "2.3027756377",
    "2.7473801263",
    "2.8454660914",
    "3.1620430155",
];

#[test]
fn reference_reports_reproduce_frozen_rates_and_denominators() {
    // A tighter width than the default so ten printed decimals are stable.
    let width = Rational::new(BigInt::one(), BigInt::from(10u64).pow(14));
    for (row, reference) in reference_polytopes().iter().enumerate() {
        let report = ideal_report(&reference.vector, &width).unwrap();
        assert_eq!(report.growth.denominator(), &reference.denominator);
        let tau = report.tau.as_ref().unwrap();
        assert_eq!(tau.decimal(10), TEN_DIGIT_RATES[row], "row {row}");
        assert_eq!(tau.decimal(5), reference.rate, "row {row}");
        assert!(report.perron.applicable, "row {row}");
        assert!(report.bounds.proved(), "row {row}");
        assert_eq!(
            report.right_angled,
            Some(RightAngledVerdict::StrictlyAbove),
            "row {row}"
        );
    }
}

#[test]
fn smallest_root_of_the_first_simplex_to_ten_digits() {
    // h = 3t⁵ + t⁴ + t³ + t² + t − 1 for the minimizing simplex; its smallest
    // positive root is 0.4924324040… (frozen digits).
    let h = IntPolynomial::from_i64(&[-1, 1, 1, 1, 1, 3]);
    let e = isolate_root(&h, &default_width()).unwrap();
    let lo_bound = Rational::new(BigInt::from(4924324040u64), BigInt::from(10u64).pow(10));
    let hi_bound = Rational::new(BigInt::from(4924324041u64), BigInt::from(10u64).pow(10));
    assert!(e.lo > &lo_bound - default_width());
    assert!(e.hi < &hi_bound + default_width());
}

#[test]
fn all_threes_simplex_rate_satisfies_its_quadratic() {
    // For the all-π/3 simplex, H = 3t² + t − 1, so τ is the positive root of
    // x² − x − 3: check the enclosure endpoints straddle it exactly.
    let v = validate(4, 0, 6, 0, 0).unwrap();
    let report = ideal_report(&v, &default_width()).unwrap();
    let tau = report.tau.unwrap();
    let quadratic = IntPolynomial::from_i64(&[-3, -1, 1]);
    assert!(!quadratic.eval_rational(&tau.lo).is_positive());
    assert!(!quadratic.eval_rational(&tau.hi).is_negative());
}

#[test]
fn right_angled_rates_collapse_to_n_minus_three() {
    for n in 6u64..=60 {
        let p = 2 * (n - 2);
        let v = validate(n as i64, p as i64, 0, 0, 0).unwrap();
        let report = ideal_report(&v, &default_width()).unwrap();
        let tau = report.tau.as_ref().unwrap();
        assert!(tau.is_exact(), "n = {n}");
        assert_eq!(tau.lo, Rational::from(BigInt::from(n - 3)), "n = {n}");
        assert_eq!(report.right_angled, Some(RightAngledVerdict::Equality));
        assert!(report.bounds.proved(), "n = {n}");
    }
}

#[test]
fn degenerate_vectors_still_report_exact_rational_rates() {
    // The two vectors whose reduced denominator is linear-over-linear: their
    // rates are integers and no Perron certificate exists.
    for (v, expected) in [
        (validate(4, 4, 0, 0, 0).unwrap(), 1u32),
        (validate(5, 6, 0, 0, 0).unwrap(), 2u32),
    ] {
        let report = ideal_report(&v, &default_width()).unwrap();
        let tau = report.tau.as_ref().unwrap();
        assert!(tau.is_exact());
        assert_eq!(tau.lo, Rational::from(BigInt::from(expected)));
        assert!(!report.perron.applicable);
        assert!(report.bounds.proved());
    }
}

#[test]
fn ideal_and_matrix_pipelines_agree_on_the_simplices() {
    // The three reference simplices exist as explicit Coxeter matrices; the
    // general alternating-sum pipeline and the closed form must produce the
    // identical reduced growth function, and the same certified rate.
    let simplex = |labels: [u32; 6]| {
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
    };
    let cases = [
        (simplex([2, 3, 6, 6, 3, 2]), validate(4, 2, 2, 0, 2).unwrap()),
        (simplex([2, 4, 4, 4, 4, 2]), validate(4, 2, 0, 4, 0).unwrap()),
        (simplex([3, 3, 3, 3, 3, 3]), validate(4, 0, 6, 0, 0).unwrap()),
    ];
    for (m, v) in cases {
        let from_matrix = matrix_report(&m, None, &default_width()).unwrap();
        let from_vector = ideal_report(&v, &default_width()).unwrap();
        assert_eq!(from_matrix.growth, from_vector.growth);
        let (a, b) = (from_matrix.tau.unwrap(), from_vector.tau.unwrap());
        assert_eq!(a.lo, b.lo);
        assert_eq!(a.hi, b.hi);
    }
}

#[test]
fn matrix_report_without_exponential_growth_has_no_rate() {
    // Infinite dihedral: growth (1 + t)/(1 − t), linear growth, no τ.
    let m = CoxeterMatrix::from_labels(2, &[(0, 1, Label::Infinity)]).unwrap();
    let report = matrix_report(&m, Some("infinite dihedral".into()), &default_width()).unwrap();
    assert_eq!(report.tau, None);
    assert!(!report.perron.applicable);
    assert_eq!(report.bounds, BoundVerdict::NotApplicable);
    assert_eq!(report.right_angled, None);
    match &report.source {
        ReportSource::Matrix { size, name } => {
            assert_eq!(*size, 2);
            assert_eq!(name.as_deref(), Some("infinite dihedral"));
        }
        other => panic!("unexpected source {other:?}"),
    }
}

#[test]
fn salem_denominator_is_refused_honestly() {
    // (2,3,7) triangle group: exponential growth, but its Salem denominator
    // has mixed signs, so the positive-coefficient criterion cannot certify
    // the smallest root and no enclosure is claimed.
    let m = CoxeterMatrix::from_labels(
        3,
        &[(0, 1, fin(2)), (0, 2, fin(3)), (1, 2, fin(7))],
    )
    .unwrap();
    let report = matrix_report(&m, None, &default_width()).unwrap();
    assert_eq!(report.tau, None);
    assert!(!report.perron.applicable);
    assert!(!report.perron.negative_coefficient_indices.is_empty());
}

#[test]
fn finite_matrix_input_propagates_the_finite_error() {
    let h3 = CoxeterMatrix::from_labels(3, &[(0, 1, fin(5)), (1, 2, fin(3))]).unwrap();
    match matrix_report(&h3, None, &default_width()) {
        Err(Error::FiniteSystem { solomon }) => {
            // H3: exponents 1, 5, 9 → [2][6][10], degree 15, value 120 at 1.
            assert_eq!(solomon.degree(), Some(15));
            assert_eq!(
                solomon.eval_rational(&Rational::one()),
                Rational::from(BigInt::from(120))
            );
        }
        other => panic!("expected FiniteSystem, got {other:?}"),
    }
}

#[test]
fn minimum_check_certifies_the_smallest_reference_rate() {
    let reports: Vec<_> = reference_polytopes()
        .iter()
        .map(|r| ideal_report(&r.vector, &default_width()).unwrap())
        .collect();
    let verdict = minimum_check(&reports).unwrap();
    assert_eq!(verdict.minimizer.as_tuple(), (4, 2, 2, 0, 2));
    assert!(verdict.unique);
    assert!(verdict.distinct_denominators);
    assert_eq!(verdict.min_tau.decimal(5), "2.03074");
}

#[test]
fn minimum_check_requires_all_six_polytopes() {
    let reports: Vec<_> = reference_polytopes()
        .iter()
        .take(4)
        .map(|r| ideal_report(&r.vector, &default_width()).unwrap())
        .collect();
    match minimum_check(&reports) {
        Err(Error::IncompleteReports { missing }) => {
            assert!(missing.contains("pyramid [4,0,4,0]"));
            assert!(missing.contains("prism [2,5,0,2]"));
        }
        other => panic!("expected IncompleteReports, got {other:?}"),
    }
}

#[test]
fn enclosure_width_tracks_the_request() {
    let h = IntPolynomial::from_i64(&[-1, 2, 1, 2, 1, 4]);
    for exp in [3u32, 6, 10, 12] {
        let width = Rational::new(BigInt::one(), BigInt::from(10u64).pow(exp));
        let e = isolate_root(&h, &width).unwrap();
        assert!(e.width() <= width);
        assert!(e.lo.is_positive());
        let tau = tau_enclosure(&e);
        assert!(tau.lo <= tau.hi);
    }
}
