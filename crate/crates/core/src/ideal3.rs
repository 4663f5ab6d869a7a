//! Closed-form growth machinery for ideal Coxeter polytopes in hyperbolic
//! 3-space: angle vectors, the degree-12 numerator kernel G(t), the degree-11
//! quotient H(t) = G(t)/(t−1), the sandwich polynomials H₁ ≤ H ≤ H₂, and the
//! glued-pyramid family.
//!
//! Everything here is driven by the angle identity p/2 + q/3 + r/4 + s/6 =
//! n − 2. Realizability of an angle vector as an actual polytope is *not*
//! checked: the algebra needs only the identity, so callers may compute growth
//! data for non-realizable vectors (documented behavior).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::{bracket_product, div_exact};
use crate::{IntPolynomial, Rational};

/// Facet count n and the counts p, q, r, s of edges with dihedral angle
/// π/2, π/3, π/4, π/6; validated to satisfy the angle identity exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AngleVector {
    n: u64,
    p: u64,
    q: u64,
    r: u64,
    s: u64,
}

impl AngleVector {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn as_tuple(&self) -> (u64, u64, u64, u64, u64) {
        (self.n, self.p, self.q, self.r, self.s)
    }

    /// The exact rationals a = p/2, b = q/3, c = r/4, d = s/6 (never floats:
    /// the angle identity a + b + c + d = n − 2 must be testable exactly).
    pub fn abcd(&self) -> (Rational, Rational, Rational, Rational) {
        let frac = |num: u64, den: u64| Rational::new(BigInt::from(num), BigInt::from(den));
        (
            frac(self.p, 2),
            frac(self.q, 3),
            frac(self.r, 4),
            frac(self.s, 6),
        )
    }

    /// All dihedral angles are right: q = r = s = 0.
    pub fn is_right_angled(&self) -> bool {
        self.q == 0 && self.r == 0 && self.s == 0
    }
}

/// Validate a candidate (n, p, q, r, s): n ≥ 4, counts non-negative, and the
/// angle identity p/2 + q/3 + r/4 + s/6 = n − 2 holding exactly. Each failure
/// is a distinct error; the identity violation carries the exact residual
/// (n − 2) − (p/2 + q/3 + r/4 + s/6).
pub fn validate(n: i64, p: i64, q: i64, r: i64, s: i64) -> Result<AngleVector, Error> {
    if n < 4 {
        return Err(Error::FacetCountTooSmall { n });
    }
    for (name, value) in [("p", p), ("q", q), ("r", r), ("s", s)] {
        if value < 0 {
            return Err(Error::NegativeAngleCount { name, value });
        }
    }
    // 6p + 4q + 3r + 2s = 12(n − 2), the identity cleared of denominators
    if 6 * p + 4 * q + 3 * r + 2 * s != 12 * (n - 2) {
        let frac = |num: i64, den: i64| Rational::new(BigInt::from(num), BigInt::from(den));
        let residual =
            frac(n - 2, 1) - (frac(p, 2) + frac(q, 3) + frac(r, 4) + frac(s, 6));
        return Err(Error::AngleIdentityViolation { residual });
    }
    Ok(AngleVector {
        n: n as u64,
        p: p as u64,
        q: q as u64,
        r: r as u64,
        s: s as u64,
    })
}

/// The fixed bracket products appearing in G(t), computed once.
fn fixed_bracket(indices: &'static [usize], slot: &'static OnceLock<IntPolynomial>) -> &'static IntPolynomial {
    slot.get_or_init(|| bracket_product(indices).expect("positive bracket indices"))
}

/// [2,2,3,4,6], the common denominator of the ideal-polytope alternating sum.
pub fn full_bracket() -> &'static IntPolynomial {
    static SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    fixed_bracket(&[2, 2, 3, 4, 6], &SLOT)
}

/// The degree-12 kernel G(t) = [2,2,3,4,6] − nt[2,3,4,6] + pt²[3,4,6]
/// + qt³[2,4,6] + rt⁴[2,3,6] + st⁶[2,3,4]; satisfies G(0) = 1, and G(1) = 0
/// by the angle identity. The reciprocal growth function is G(t)/[2,2,3,4,6].
pub fn g_polynomial(v: &AngleVector) -> IntPolynomial {
    static N_SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    static P_SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    static Q_SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    static R_SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    static S_SLOT: OnceLock<IntPolynomial> = OnceLock::new();
    let term = |b: &IntPolynomial, shift: usize, count: u64| {
        b.shift(shift).scale(&BigInt::from(count))
    };
    let mut g = full_bracket() - &term(fixed_bracket(&[2, 3, 4, 6], &N_SLOT), 1, v.n);
    g = &g + &term(fixed_bracket(&[3, 4, 6], &P_SLOT), 2, v.p);
    g = &g + &term(fixed_bracket(&[2, 4, 6], &Q_SLOT), 3, v.q);
    g = &g + &term(fixed_bracket(&[2, 3, 6], &R_SLOT), 4, v.r);
    g = &g + &term(fixed_bracket(&[2, 3, 4], &S_SLOT), 6, v.s);
    debug_assert!(g.coeff(0).is_one());
    debug_assert!(g.eval_rational(&Rational::one()).is_zero());
    g
}

/// The monomial t − 1.
pub(crate) fn t_minus_one() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, 1])
}

/// The degree-11 polynomial H(t) = G(t)/(t−1): exact quotient, constant term
/// −1. The division is exact whenever the angle identity holds, so a remainder
/// here is an internal invariant failure, not a caller error.
pub fn h_polynomial(v: &AngleVector) -> IntPolynomial {
    let h = div_exact(&g_polynomial(v), &t_minus_one())
        .expect("(t - 1) divides G exactly when the angle identity holds");
    debug_assert_eq!(h.degree(), Some(11));
    debug_assert_eq!(h.coeff(0), BigInt::from(-1));
    h
}

/// Coefficient table of H: row k holds (constant, weight of a, of b, of c,
/// of d) in the expansion coeff_k = constant + wₐ·a + w_b·b + w_c·c + w_d·d
/// with a = p/2, b = q/3, c = r/4, d = s/6. The weights grow from a to d in
/// every row, which is what makes the sandwich H₁ ≤ H ≤ H₂ coefficient-wise.
const H_COEFF_TABLE: [[i64; 5]; 12] = [
    [-1, 0, 0, 0, 0],
    [-4, 1, 1, 1, 1],
    [-9, 3, 5, 5, 5],
    [-15, 6, 11, 14, 14],
    [-20, 9, 17, 25, 29],
    [-23, 11, 22, 33, 49],
    [-23, 12, 24, 36, 66],
    [-20, 11, 23, 35, 71],
    [-15, 9, 19, 31, 61],
    [-9, 6, 13, 22, 40],
    [-4, 3, 7, 11, 19],
    [-1, 1, 2, 3, 5],
];

/// H rebuilt from the tabulated per-coefficient formulas in a, b, c, d — an
/// independent expansion kept solely to cross-check `h_polynomial` (twelve
/// transcribed formulas are the likeliest source of a silent slip, so they are
/// stored twice and compared in tests).
pub fn h_from_table(v: &AngleVector) -> IntPolynomial {
    let (a, b, c, d) = v.abcd();
    let coeffs: Vec<BigInt> = H_COEFF_TABLE
        .iter()
        .map(|&[k, wa, wb, wc, wd]| {
            let value = Rational::from(BigInt::from(k))
                + Rational::from(BigInt::from(wa)) * &a
                + Rational::from(BigInt::from(wb)) * &b
                + Rational::from(BigInt::from(wc)) * &c
                + Rational::from(BigInt::from(wd)) * &d;
            assert!(value.is_integer(), "H coefficients are integers");
            value.to_integer()
        })
        .collect();
    IntPolynomial::new(coeffs)
}

fn checked_n(n: u64) -> i64 {
    assert!(n >= 4, "sandwich polynomials need n >= 4");
    i64::try_from(n).expect("facet count fits in i64")
}

/// The linear factor nt − 3t − 1 of H₁ carrying its root 1/(n−3).
pub fn h1_kernel(n: u64) -> IntPolynomial {
    let n = checked_n(n);
    IntPolynomial::from_i64(&[-1, n - 3])
}

/// The quintic factor of H₂ carrying its root in (0, 1).
pub fn h2_kernel(n: u64) -> IntPolynomial {
    let n = checked_n(n);
    IntPolynomial::from_i64(&[-1, n - 3, 2 * n - 5, 3 * n - 7, 4 * n - 9, 5 * n - 11])
}

/// Lower sandwich polynomial H₁: the specialization (a, b, c, d) =
/// (n−2, 0, 0, 0) of H. Computed both from the coefficient table and from the
/// factored form (1+t)²·(nt−3t−1)·(1+t²)·(1−t+t²)·(1+t+t²)², asserted equal.
pub fn h1_polynomial(n: u64) -> IntPolynomial {
    let ni = checked_n(n);
    let expanded = IntPolynomial::new(
        H_COEFF_TABLE
            .iter()
            .map(|&[k, wa, ..]| BigInt::from(k) + BigInt::from(wa) * (ni - 2))
            .collect(),
    );
    let factored = [
        IntPolynomial::from_i64(&[1, 1]),
        IntPolynomial::from_i64(&[1, 1]),
        h1_kernel(n),
        IntPolynomial::from_i64(&[1, 0, 1]),
        IntPolynomial::from_i64(&[1, -1, 1]),
        IntPolynomial::from_i64(&[1, 1, 1]),
        IntPolynomial::from_i64(&[1, 1, 1]),
    ]
    .iter()
    .fold(IntPolynomial::one(), |acc, f| &acc * f);
    assert_eq!(expanded, factored, "H1 expanded and factored forms disagree");
    expanded
}

/// Upper sandwich polynomial H₂: the specialization (a, b, c, d) =
/// (0, 0, 0, n−2) of H. Computed both from the coefficient table and from the
/// factored form (1+t)²·(1+t²)·(1+t+t²)·quintic, asserted equal.
pub fn h2_polynomial(n: u64) -> IntPolynomial {
    let ni = checked_n(n);
    let expanded = IntPolynomial::new(
        H_COEFF_TABLE
            .iter()
            .map(|&[k, .., wd]| BigInt::from(k) + BigInt::from(wd) * (ni - 2))
            .collect(),
    );
    let factored = [
        IntPolynomial::from_i64(&[1, 1]),
        IntPolynomial::from_i64(&[1, 1]),
        IntPolynomial::from_i64(&[1, 0, 1]),
        IntPolynomial::from_i64(&[1, 1, 1]),
        h2_kernel(n),
    ]
    .iter()
    .fold(IntPolynomial::one(), |acc, f| &acc * f);
    assert_eq!(expanded, factored, "H2 expanded and factored forms disagree");
    expanded
}

/// Number of glued pyramid copies; at least one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    m: u64,
}

impl FamilySpec {
    pub fn new(m: u64) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::ZeroPyramidCount);
        }
        Ok(FamilySpec { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Facet count of the glued polytope: n = m + 4.
    pub fn facets(&self) -> u64 {
        self.m + 4
    }
}

/// Angle vector and expected reduced growth denominator of the m-fold glued
/// pyramid: n = m + 4 facets, angle counts (p, q, r, s) = (n−1, 0, 2n−6, 0),
/// denominator (t−1)·(2(n−3)t³ + (n−4)t² + (n−3)t − 1), which already has
/// constant term 1.
///
/// The angle counts are a reconstruction from two constraints — the angle
/// identity and the leading denominator coefficient — pinned down by the
/// pipeline-equality sweep in the tests; the m = 1 case is the reference
/// pyramid with p = r = 4.
pub fn pyramid_family(spec: FamilySpec) -> (AngleVector, IntPolynomial) {
    let n = i64::try_from(spec.facets()).expect("facet count fits in i64");
    let v = validate(n, n - 1, 0, 2 * n - 6, 0)
        .expect("family vectors satisfy the angle identity");
    let cubic = IntPolynomial::from_i64(&[-1, n - 3, n - 4, 2 * (n - 3)]);
    let expected = &t_minus_one() * &cubic;
    debug_assert!(expected.coeff(0).is_one());
    (v, expected)
}
