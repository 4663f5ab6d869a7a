//! One error type shared by every module of the crate.

use num_bigint::BigInt;
use thiserror::Error;

use crate::{IntPolynomial, Rational};

/// Everything that can go wrong across the polynomial, Coxeter, growth and
/// certification layers. All payloads are exact values, never formatted floats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `bracket(0)` has no meaning: `[n]` is defined for n ≥ 1.
    #[error("bracket index must be at least 1")]
    ZeroBracketIndex,

    /// Polynomial division with a zero divisor.
    #[error("polynomial division by zero")]
    DivisionByZero,

    /// `div_exact` found a nonzero remainder; the remainder is carried verbatim.
    #[error("polynomial division is not exact; remainder {remainder}")]
    NotDivisible { remainder: IntPolynomial },

    /// `poly_gcd(0, 0)` is undefined.
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeroPair,

    /// A rational function was given a zero denominator.
    #[error("rational function denominator is the zero polynomial")]
    ZeroDenominator,

    /// The reduced denominator vanishes at t = 0, so no Q(0) = 1 form exists.
    #[error("denominator vanishes at t = 0; no Q(0) = 1 normalization exists")]
    DenominatorVanishesAtZero,

    /// The reduced denominator has a non-unit constant term; rescaling it to
    /// Q(0) = 1 would force non-integer coefficients on a coprime pair.
    #[error("reduced denominator has constant term {constant}; cannot normalize to Q(0) = 1 over the integers")]
    NotNormalizable { constant: BigInt },

    /// A generator index outside 0..rank.
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    /// An off-diagonal Coxeter label below 2.
    #[error("off-diagonal Coxeter labels must be at least 2; got {value}")]
    LabelTooSmall { value: u32 },

    /// The same generator pair was assigned a label twice.
    #[error("duplicate label for generator pair ({i}, {j})")]
    DuplicateLabel { i: usize, j: usize },

    /// A label was assigned to a diagonal entry, which is fixed at 1.
    #[error("cannot assign a label to the diagonal pair ({index}, {index})")]
    DiagonalLabel { index: usize },

    /// `classify_finite` requires an irreducible (connected) system.
    #[error("classification requires an irreducible system; found {components} components")]
    ReducibleSystem { components: usize },

    /// Subset enumeration refuses ranks whose power set is out of reach.
    #[error("subset enumeration is limited to rank {limit}; got rank {rank}")]
    RankGuard { rank: usize, limit: usize },

    /// A finite system reached the growth-function pipeline; its growth
    /// polynomial (carried here) is the whole story, so the reciprocal
    /// power-series normalization does not apply.
    #[error("the Coxeter system is finite; its growth polynomial is {solomon}")]
    FiniteSystem { solomon: IntPolynomial },

    /// `invert_variable` on the zero rational function.
    #[error("cannot invert the variable of the zero rational function")]
    ZeroRationalFunction,

    /// Series expansion beyond the quadratic-cost safety cap.
    #[error("series horizon {requested} exceeds the cap {cap}")]
    SeriesHorizon { requested: usize, cap: usize },

    /// An ideal polytope needs at least 4 facets.
    #[error("facet count must be at least 4; got {n}")]
    FacetCountTooSmall { n: i64 },

    /// Angle counts are cardinalities and cannot be negative.
    #[error("angle count {name} must be non-negative; got {value}")]
    NegativeAngleCount { name: &'static str, value: i64 },

    /// The angle identity p/2 + q/3 + r/4 + s/6 = n − 2 fails; the exact
    /// residual (n − 2) − (p/2 + q/3 + r/4 + s/6) is carried.
    #[error("angle identity p/2 + q/3 + r/4 + s/6 = n - 2 violated; residual {residual}")]
    AngleIdentityViolation { residual: Rational },

    /// The glued-pyramid family starts at one copy.
    #[error("pyramid family requires at least one copy")]
    ZeroPyramidCount,

    /// Root isolation was asked for a polynomial whose certificate failed.
    #[error("the Perron certificate is not applicable; cannot isolate a smallest positive root")]
    CertificateNotApplicable,

    /// Bisection preconditions broke: no sign change over the unit interval.
    #[error("no sign change over the unit interval")]
    NoSignChange,

    /// `minimum_check` needs reports for all six reference polytopes.
    #[error("report set must cover all six reference polytopes; missing {missing}")]
    IncompleteReports { missing: String },
}
