//! Exact growth functions of Coxeter systems, with certified growth rates.
//!
//! The pipeline, bottom to top:
//!
//! * [`poly`] — dense univariate polynomials over exact scalars, with the
//!   bracket polynomials `[n] = 1 + t + … + t^{n−1}`, exact division and
//!   integer-arithmetic gcd.
//! * [`ratfunc`] — reduced rational functions normalized to denominator
//!   constant term 1 (the normal form in which growth series of infinite
//!   systems have integer power-series coefficients).
//! * [`coxeter`] — Coxeter matrices, parabolic restriction, connected
//!   components, classification of the finite irreducible systems and their
//!   exponent-product growth polynomials, and enumeration of the subsets
//!   generating finite parabolics.
//! * [`steinberg`] — the alternating-sum identity turning those finite
//!   parabolics into the growth function of an infinite system, plus
//!   power-series extraction.
//! * [`ideal3`] — the closed form specializing all of the above to ideal
//!   polytopes in hyperbolic 3-space: the angle identity, the degree-12
//!   numerator kernel, its degree-11 quotient H, the coefficient-wise
//!   sandwich H₁ ≤ H ≤ H₂, and the glued-pyramid family.
//! * [`perron`] — the positive-coefficient Perron criterion, exact dyadic
//!   root isolation, sign-proved growth-rate bounds, the right-angle
//!   dichotomy, and the reference-table minimality check.
//!
//! All arithmetic is exact — arbitrary-precision integers and rationals
//! throughout, no floating point anywhere in the pipeline. Decimal output is
//! produced only at the formatting boundary, by exact rounding.
//!
//! [`Polynomial`] is generic over its coefficient type via `num-traits`
//! bounds; the concrete aliases used by the pipeline are [`IntPolynomial`]
//! and [`RatPolynomial`].

pub mod coxeter;
pub mod error;
pub mod ideal3;
pub mod perron;
pub mod poly;
pub mod ratfunc;
pub mod steinberg;

/// Arbitrary-precision rational scalar used wherever exact evaluation at a
/// point is needed.
pub type Rational = num_rational::BigRational;

/// Polynomial with arbitrary-precision integer coefficients — the workhorse
/// of the pipeline (growth numerators and denominators are integral).
pub type IntPolynomial = poly::Polynomial<num_bigint::BigInt>;

/// Polynomial with arbitrary-precision rational coefficients, for
/// intermediate computations that leave the integers.
pub type RatPolynomial = poly::Polynomial<Rational>;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use coxeter::{
    classify_finite, components, finite_subsets, restrict, solomon_polynomial, CoxeterMatrix,
    Family, FiniteType, GeneratorSubset, Label, SUBSET_RANK_LIMIT,
};
pub use ideal3::{
    full_bracket, g_polynomial, h1_kernel, h1_polynomial, h2_kernel, h2_polynomial, h_from_table,
    h_polynomial, pyramid_family, validate, AngleVector, FamilySpec,
};
pub use perron::{
    check_bounds, default_width, ideal_report, isolate_root, ku_certificate, matrix_report,
    minimum_check, reference_polytopes, round_to_decimals, tau_enclosure, BoundVerdict,
    GrowthReport, MinimumVerdict, PerronCertificate, ReferencePolytope, ReportSource,
    RightAngledVerdict, RootEnclosure, TauInterval,
};
pub use poly::{bracket, bracket_product, div_exact, poly_gcd, Polynomial};
pub use ratfunc::{reduce, RationalFunction};
pub use steinberg::{
    growth_function, invert_variable, series_coefficients, steinberg_sum, GrowthFunction,
    SERIES_CAP,
};
