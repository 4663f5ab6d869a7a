//! Perron certification and exact root isolation.
//!
//! A reciprocal-growth denominator written as Σ aₖtᵏ − 1 with non-negative
//! aₖ, degree ≥ 2 and support gcd 1 has a *unique* zero r₀ of smallest
//! modulus, real, simple, in (0, 1) — so its reciprocal τ = 1/r₀ is a Perron
//! number and the polynomial is strictly increasing through its root on the
//! positive axis. Under that certificate, dyadic bisection with exact rational
//! evaluation isolates r₀ to any requested width, and single sign evaluations
//! prove bounds on τ outright. Without the certificate, a sign test proves
//! nothing; everything downstream is gated on [`PerronCertificate::applicable`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coxeter::CoxeterMatrix;
use crate::error::Error;
use crate::ideal3::{
    full_bracket, g_polynomial, h_polynomial, t_minus_one, AngleVector,
};
use crate::poly::div_exact;
use crate::ratfunc::reduce;
use crate::steinberg::{growth_function, GrowthFunction};
use crate::{IntPolynomial, Rational};

/// Outcome of checking a polynomial against the positive-coefficient Perron
/// criterion. `applicable` summarizes the three structural conditions; the
/// remaining fields record exactly which condition failed and how, so a
/// refusal is diagnosable rather than a bare boolean.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerronCertificate {
    /// All conditions hold: the smallest-modulus zero is unique, real, simple
    /// and lies in (0, 1); sign tests at rational points are conclusive.
    pub applicable: bool,
    /// Gcd of the exponents with nonzero coefficient above the constant term
    /// (after normalizing the constant to −1); 0 when that support is empty.
    /// The criterion needs 1 — otherwise the zero set has rotational symmetry
    /// and the smallest-modulus zero is not unique.
    pub support_gcd: u64,
    /// Exponents k ≥ 1 whose coefficient is negative after normalization;
    /// must be empty for the certificate.
    pub negative_coefficient_indices: Vec<usize>,
    /// Degree of the polynomial; the criterion needs ≥ 2.
    pub degree: Option<usize>,
    /// Whether the constant term is −1 after at most a global sign flip.
    pub constant_is_minus_one: bool,
}

/// Normalize the sign of `h` so a qualifying polynomial reads Σ aₖtᵏ − 1:
/// flip the global sign when the constant term is positive.
fn sign_normalized(h: &IntPolynomial) -> IntPolynomial {
    if h.coeff(0).is_positive() {
        -h
    } else {
        h.clone()
    }
}

/// Check `h` (nonzero) against the Perron criterion. The certificate is
/// purely structural — no roots are computed here.
pub fn ku_certificate(h: &IntPolynomial) -> PerronCertificate {
    assert!(!h.is_zero(), "certificate of the zero polynomial");
    let candidate = sign_normalized(h);
    let constant_is_minus_one = candidate.coeff(0) == BigInt::from(-1);
    let negative_coefficient_indices: Vec<usize> = candidate
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| c.is_negative())
        .map(|(k, _)| k)
        .collect();
    let support_gcd = candidate
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .fold(0u64, |acc, (k, _)| acc.gcd(&(k as u64)));
    let degree = candidate.degree();
    PerronCertificate {
        applicable: constant_is_minus_one
            && negative_coefficient_indices.is_empty()
            && support_gcd == 1
            && degree >= Some(2),
        support_gcd,
        negative_coefficient_indices,
        degree,
        constant_is_minus_one,
    }
}

/// An interval [lo, hi] ⊂ (0, 1] certified to contain the smallest positive
/// root; `lo == hi` means the root was hit exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    /// The width the caller asked for (the achieved width is ≤ this, or 0).
    pub width_bound: Rational,
}

impl RootEnclosure {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

fn collapsed(at: Rational, width_bound: Rational) -> RootEnclosure {
    RootEnclosure {
        lo: at.clone(),
        hi: at,
        width_bound,
    }
}

/// Isolate the smallest positive root of `h` to within `width` by dyadic
/// bisection over [0, 1], every evaluation exact.
///
/// Requires the Perron certificate, with one exception: a sign-normalized
/// *linear* polynomial kt − 1 (k ≥ 1) misses the degree condition but has the
/// evident exact root 1/k, returned as a collapsed enclosure. Anything else
/// without the certificate is refused — bisection would still find *a* root,
/// but nothing would make it the smallest-modulus one, and the result would
/// certify nothing.
pub fn isolate_root(h: &IntPolynomial, width: &Rational) -> Result<RootEnclosure, Error> {
    assert!(width.is_positive(), "enclosure width must be positive");
    let cert = ku_certificate(h);
    let candidate = sign_normalized(h);
    if !cert.applicable {
        if cert.constant_is_minus_one
            && cert.degree == Some(1)
            && cert.negative_coefficient_indices.is_empty()
        {
            let k = candidate.coeff(1);
            debug_assert!(k >= BigInt::one());
            return Ok(collapsed(
                Rational::new(BigInt::one(), k),
                width.clone(),
            ));
        }
        return Err(Error::CertificateNotApplicable);
    }
    // candidate(0) = −1 < 0; candidate(1) = Σaₖ − 1 > 0 because the support
    // has gcd 1 and so at least two nonzero aₖ. Checked anyway: a sign-change
    // failure would mean the certificate itself is broken.
    if !candidate.eval_rational(&Rational::one()).is_positive() {
        return Err(Error::NoSignChange);
    }
    // Dyadic bisection in pure integer arithmetic: the interval is
    // [a, a+1]/2^k and the sign of candidate(m/2^k) is read off the
    // homogenized integer value Σ cᵢ mⁱ 2^{k(d−i)}. Halve until the interval
    // sits inside (0, 1] (so the reciprocal τ interval exists) and is no
    // wider than requested.
    let mut a = BigInt::zero();
    let mut k = 0u32;
    let dyadic = |num: &BigInt, k: u32| Rational::new(num.clone(), BigInt::one() << k);
    while a.is_zero() || Rational::new(BigInt::one(), BigInt::one() << k) > *width {
        let mid = (&a << 1) + BigInt::one();
        k += 1;
        match sign_at_dyadic(&candidate, &mid, k) {
            0 => return Ok(collapsed(dyadic(&mid, k), width.clone())),
            s if s < 0 => a = mid,
            _ => a = mid - BigInt::one(),
        }
    }
    Ok(RootEnclosure {
        lo: dyadic(&a, k),
        hi: dyadic(&(&a + BigInt::one()), k),
        width_bound: width.clone(),
    })
}

/// Sign of `h(m / 2^k)` computed without rationals: Horner on the
/// homogenization Σ cᵢ mⁱ 2^{k(d−i)}.
fn sign_at_dyadic(h: &IntPolynomial, m: &BigInt, k: u32) -> i8 {
    let d = h.degree().expect("nonzero polynomial");
    let mut acc = BigInt::zero();
    let mut power = BigInt::one();
    for i in (0..=d).rev() {
        acc = acc * m + h.coeff(i) * &power;
        power <<= k;
    }
    sign_of_int(&acc)
}

fn sign_of_int(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact rational bracket [lo, hi] around a growth rate τ; `lo == hi` when τ
/// is rational and was hit exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TauInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl TauInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// The midpoint rounded half-away-from-zero to `digits` decimals, as a
    /// plain decimal string.
    pub fn decimal(&self, digits: u32) -> String {
        round_to_decimals(&self.midpoint(), digits)
    }
}

/// Round an exact rational half-away-from-zero to `digits` decimals and
/// format it as a decimal string (always showing `digits` fractional digits).
pub fn round_to_decimals(x: &Rational, digits: u32) -> String {
    let pow = BigInt::from(10u32).pow(digits);
    let num = x.numer() * &pow;
    let den = x.denom().clone();
    debug_assert!(den.is_positive());
    // round(num/den) half away from zero, in integers
    let two = BigInt::from(2);
    let scaled = if num.is_negative() {
        -((-&num * &two + &den) / (&den * &two))
    } else {
        (&num * &two + &den) / (&den * &two)
    };
    let sign = if scaled.is_negative() { "-" } else { "" };
    let mag = scaled.magnitude().to_string();
    if digits == 0 {
        return format!("{sign}{mag}");
    }
    let digits = digits as usize;
    let padded = if mag.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - digits);
    format!("{sign}{int_part}.{frac_part}")
}

/// The reciprocal of a root enclosure: the τ interval [1/hi, 1/lo].
pub fn tau_enclosure(e: &RootEnclosure) -> TauInterval {
    assert!(
        e.lo.is_positive(),
        "root enclosure must be bounded away from zero"
    );
    TauInterval {
        lo: e.hi.recip(),
        hi: e.lo.recip(),
    }
}

/// How the bracket n − 3 ≤ τ ≤ n − 1 was settled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundVerdict {
    /// Two exact sign evaluations of the certified polynomial: its sign at
    /// 1/(n−3) (must be ≥ 0) and at 1/(n−1) (must be ≤ 0). Sound only under
    /// the Perron certificate, which makes the polynomial increase through
    /// its smallest positive root.
    ProvedBySign { lower_sign: i8, upper_sign: i8 },
    /// The isolated τ interval lies inside [n−3, n−1]. Sound whenever the
    /// enclosure is, but resolution-dependent: it needs the enclosure
    /// narrower than the actual gap to the bound.
    ProvedByInterval,
    /// No facet count to check against (generic matrix input).
    NotApplicable,
    Failed { detail: String },
}

impl BoundVerdict {
    pub fn proved(&self) -> bool {
        matches!(
            self,
            BoundVerdict::ProvedBySign { .. } | BoundVerdict::ProvedByInterval
        )
    }
}

fn sign_of(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Prove n − 3 ≤ τ ≤ n − 1 for an n-facet ideal polytope.
///
/// When a Perron-certified degree-11 polynomial for the vector is supplied
/// (always possible for n ≥ 6), two exact sign evaluations settle both bounds
/// with no dependence on the enclosure width. Otherwise the τ interval itself
/// is compared against the bounds; that is the n ∈ {4, 5} route, where the
/// degree-11 polynomial can have negative coefficients.
pub fn check_bounds(
    n: u64,
    certified_h: Option<&IntPolynomial>,
    tau: &TauInterval,
) -> BoundVerdict {
    let n_int = BigInt::from(n);
    if let Some(h) = certified_h {
        debug_assert!(ku_certificate(h).applicable);
        let candidate = sign_normalized(h);
        let lower_sign = sign_of(&candidate.eval_rational(&Rational::new(
            BigInt::one(),
            &n_int - BigInt::from(3),
        )));
        let upper_sign = sign_of(&candidate.eval_rational(&Rational::new(
            BigInt::one(),
            &n_int - BigInt::from(1),
        )));
        if lower_sign >= 0 && upper_sign <= 0 {
            return BoundVerdict::ProvedBySign {
                lower_sign,
                upper_sign,
            };
        }
        return BoundVerdict::Failed {
            detail: format!(
                "sign test failed: sign at 1/(n-3) is {lower_sign}, at 1/(n-1) is {upper_sign}"
            ),
        };
    }
    let lower = Rational::from(&n_int - BigInt::from(3));
    let upper = Rational::from(&n_int - BigInt::from(1));
    if tau.lo >= lower && tau.hi <= upper {
        return BoundVerdict::ProvedByInterval;
    }
    BoundVerdict::Failed {
        detail: format!(
            "interval [{}, {}] is not inside [{}, {}]",
            tau.lo, tau.hi, lower, upper
        ),
    }
}

/// Whether τ = n − 3 exactly (right-angled polytopes) or τ > n − 3 strictly
/// (everything else).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RightAngledVerdict {
    /// τ equals n − 3 exactly (the enclosure collapsed onto it).
    Equality,
    /// τ > n − 3, proved by an exact sign or by the interval.
    StrictlyAbove,
    Failed { detail: String },
}

/// Where a growth report came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReportSource {
    Ideal(AngleVector),
    Matrix { size: usize, name: Option<String> },
}

/// Everything the pipeline established about one input: the exact growth
/// function, the τ enclosure when one is certified, the certificate itself,
/// and the bound/right-angle verdicts (ideal inputs only).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthReport {
    pub source: ReportSource,
    pub growth: GrowthFunction,
    pub tau: Option<TauInterval>,
    pub perron: PerronCertificate,
    pub bounds: BoundVerdict,
    pub right_angled: Option<RightAngledVerdict>,
}

/// Default enclosure width 10⁻¹⁰.
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u64.pow(10)))
}

/// Full pipeline for an ideal-polytope angle vector: closed-form growth
/// function, root isolation on the *reduced* denominator (falling back to the
/// degree-11 polynomial when the reduced one loses the certificate), sign- or
/// interval-proved bounds, and the right-angle dichotomy.
pub fn ideal_report(v: &AngleVector, width: &Rational) -> Result<GrowthReport, Error> {
    let g = g_polynomial(v);
    let growth = GrowthFunction::from_reduced(reduce(full_bracket(), &g)?);
    // Q_red(1) = 0 (the full numerator is 288 at t = 1, so no cancelled
    // factor vanishes there) — one exact division peels off t − 1.
    let h_red = div_exact(growth.denominator(), &t_minus_one())
        .expect("t - 1 divides the reduced denominator");
    let n = v.n();
    let h_full = (n >= 6).then(|| h_polynomial(v));
    if let Some(h) = &h_full {
        debug_assert!(
            ku_certificate(h).applicable,
            "degree-11 polynomial is always certified for n >= 6"
        );
    }

    let cert_red = ku_certificate(&h_red);
    let (enclosure, perron) = if cert_red.applicable {
        (isolate_root(&h_red, width)?, cert_red)
    } else if h_red.degree() == Some(1) {
        // Linear reduced denominator: exact rational τ. Report the degree-11
        // certificate when it exists; for n ∈ {4, 5} there is none and the
        // (inapplicable) certificate of the linear polynomial is reported.
        let cert = match &h_full {
            Some(h) => ku_certificate(h),
            None => cert_red,
        };
        (isolate_root(&h_red, width)?, cert)
    } else if let Some(h) = &h_full {
        (isolate_root(h, width)?, ku_certificate(h))
    } else {
        return Err(Error::CertificateNotApplicable);
    };
    let tau = tau_enclosure(&enclosure);

    let bounds = check_bounds(n, h_full.as_ref(), &tau);

    let n_minus_3 = Rational::from(BigInt::from(n) - BigInt::from(3));
    let right_angled = if v.is_right_angled() {
        if tau.is_exact() && tau.lo == n_minus_3 {
            RightAngledVerdict::Equality
        } else {
            RightAngledVerdict::Failed {
                detail: format!(
                    "right-angled vector but enclosure [{}, {}] is not exactly n - 3",
                    tau.lo, tau.hi
                ),
            }
        }
    } else if let Some(h) = &h_full {
        // Exact strictness: H(1/(n−3)) > 0 forces the root below 1/(n−3),
        // i.e. τ > n − 3, independent of the enclosure width.
        let value = sign_normalized(h)
            .eval_rational(&Rational::new(BigInt::one(), BigInt::from(n - 3)));
        if value.is_positive() {
            RightAngledVerdict::StrictlyAbove
        } else {
            RightAngledVerdict::Failed {
                detail: format!("sign at 1/(n-3) is {}", sign_of(&value)),
            }
        }
    } else if tau.lo > n_minus_3 {
        RightAngledVerdict::StrictlyAbove
    } else {
        RightAngledVerdict::Failed {
            detail: format!(
                "interval [{}, {}] does not separate from n - 3 = {}",
                tau.lo, tau.hi, n_minus_3
            ),
        }
    };

    Ok(GrowthReport {
        source: ReportSource::Ideal(*v),
        growth,
        tau: Some(tau),
        perron,
        bounds,
        right_angled: Some(right_angled),
    })
}

/// Pipeline for a general Coxeter matrix: Steinberg growth function, then
/// root isolation on the reduced denominator with every t − 1 factor removed.
/// No facet count exists, so the bound and right-angle checks do not apply;
/// τ is reported only when the stripped denominator is certified (or linear).
pub fn matrix_report(
    m: &CoxeterMatrix,
    name: Option<String>,
    width: &Rational,
) -> Result<GrowthReport, Error> {
    let growth = growth_function(m)?;
    let mut stripped = growth.denominator().clone();
    let one = Rational::one();
    while stripped.eval_rational(&one).is_zero() {
        stripped = div_exact(&stripped, &t_minus_one()).expect("root at 1 divides out");
    }
    let perron = ku_certificate(&stripped);
    let tau = match isolate_root(&stripped, width) {
        Ok(enclosure) => Some(tau_enclosure(&enclosure)),
        Err(Error::CertificateNotApplicable) => None,
        Err(e) => return Err(e),
    };
    Ok(GrowthReport {
        source: ReportSource::Matrix {
            size: m.size(),
            name,
        },
        growth,
        tau,
        perron,
        bounds: BoundVerdict::NotApplicable,
        right_angled: None,
    })
}

/// One row of the built-in reference table: a named ideal polytope with its
/// expected reduced growth denominator (ascending coefficients) and its
/// growth rate rounded to five decimals.
#[derive(Clone, Debug)]
pub struct ReferencePolytope {
    pub name: &'static str,
    pub vector: AngleVector,
    pub denominator: IntPolynomial,
    pub rate: &'static str,
}

/// The six reference polytopes, in ascending order of growth rate: three
/// ideal simplices, two pyramid-derived polytopes, one prism. Denominators
/// and rounded rates are frozen from an independent computation and serve as
/// regression goldens for the whole pipeline.
pub fn reference_polytopes() -> Vec<ReferencePolytope> {
    let row = |name, n, p, q, r, s, den: &[i64], rate| ReferencePolytope {
        name,
        vector: crate::ideal3::validate(n, p, q, r, s).expect("reference vector is valid"),
        denominator: IntPolynomial::from_i64(den),
        rate,
    };
    vec![
        row("simplex [2,2,0,2]", 4, 2, 2, 0, 2, &[1, -2, 0, 0, 0, -2, 3], "2.03074"),
        row("simplex [2,0,4,0]", 4, 2, 0, 4, 0, &[1, -2, 0, -2, 3], "2.13040"),
        row("simplex [0,6,0,0]", 4, 0, 6, 0, 0, &[1, -2, -2, 3], "2.30278"),
        row("pyramid [4,2,0,2]", 5, 4, 2, 0, 2, &[1, -3, 1, -1, 1, -3, 4], "2.74738"),
        row("pyramid [4,0,4,0]", 5, 4, 0, 4, 0, &[1, -3, 1, -3, 4], "2.84547"),
        row("prism [2,5,0,2]", 5, 2, 5, 0, 2, &[1, -3, -1, 2, -1, -3, 5], "3.16204"),
    ]
}

/// Verdict of the minimality check over the six reference polytopes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimumVerdict {
    /// Angle vector of the polytope realizing the smallest rate.
    pub minimizer: AngleVector,
    pub min_tau: TauInterval,
    /// Every other enclosure lies strictly above the minimizer's.
    pub unique: bool,
    /// All six reduced denominators are pairwise distinct.
    pub distinct_denominators: bool,
}

/// Check that among reports for the six reference polytopes, the first
/// simplex minimizes the growth rate with disjoint enclosures, and that no
/// two of the six share a denominator. Reports are matched by angle vector;
/// a missing polytope is an error, not a failed verdict.
pub fn minimum_check(reports: &[GrowthReport]) -> Result<MinimumVerdict, Error> {
    let references = reference_polytopes();
    let mut matched: Vec<(&ReferencePolytope, &GrowthReport)> = Vec::new();
    let mut missing: Vec<&str> = Vec::new();
    for reference in &references {
        let found = reports.iter().find(|r| match &r.source {
            ReportSource::Ideal(v) => *v == reference.vector,
            ReportSource::Matrix { .. } => false,
        });
        match found {
            Some(report) => matched.push((reference, report)),
            None => missing.push(reference.name),
        }
    }
    if !missing.is_empty() {
        return Err(Error::IncompleteReports {
            missing: missing.join(", "),
        });
    }
    let taus: Vec<&TauInterval> = matched
        .iter()
        .map(|(reference, report)| {
            report.tau.as_ref().ok_or(Error::IncompleteReports {
                missing: reference.name.to_string(),
            })
        })
        .collect::<Result<_, _>>()?;
    let min_index = (0..taus.len())
        .min_by(|&i, &j| taus[i].hi.cmp(&taus[j].hi))
        .expect("six reports");
    let unique = (0..taus.len())
        .filter(|&i| i != min_index)
        .all(|i| taus[i].lo > taus[min_index].hi);
    let denominators: Vec<&IntPolynomial> =
        matched.iter().map(|(_, r)| r.growth.denominator()).collect();
    let distinct_denominators = (0..denominators.len()).all(|i| {
        (i + 1..denominators.len()).all(|j| denominators[i] != denominators[j])
    });
    Ok(MinimumVerdict {
        minimizer: matched[min_index].0.vector,
        min_tau: taus[min_index].clone(),
        unique,
        distinct_denominators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal3::validate;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn certificate_diagnoses_each_condition() {
        let good = ku_certificate(&p(&[-1, 1, 3]));
        assert!(good.applicable);
        assert_eq!(good.support_gcd, 1);

        let wrong_constant = ku_certificate(&p(&[-2, 1, 3]));
        assert!(!wrong_constant.applicable);
        assert!(!wrong_constant.constant_is_minus_one);

        let negative = ku_certificate(&p(&[-1, -1, 3]));
        assert_eq!(negative.negative_coefficient_indices, vec![1]);

        let symmetric = ku_certificate(&p(&[-1, 0, 1, 0, 2]));
        assert_eq!(symmetric.support_gcd, 2);
        assert!(!symmetric.applicable);

        let linear = ku_certificate(&p(&[-1, 3]));
        assert_eq!(linear.degree, Some(1));
        assert!(!linear.applicable);

        // global sign flip is part of normalization
        assert!(ku_certificate(&p(&[1, -1, -3])).applicable);
    }

    #[test]
    fn bisection_reaches_the_requested_width() {
        let h = p(&[-1, 1, 3]); // root (−1+√13)/6 ≈ 0.43426
        let e = isolate_root(&h, &default_width()).unwrap();
        assert!(e.width() <= default_width());
        assert!(e.lo.is_positive());
        assert!(h.eval_rational(&e.lo).is_negative());
        assert!(h.eval_rational(&e.hi).is_positive());
        let tau = tau_enclosure(&e);
        assert_eq!(tau.decimal(5), "2.30278");
    }

    #[test]
    fn linear_polynomials_collapse_exactly() {
        let e = isolate_root(&p(&[-1, 3]), &default_width()).unwrap();
        assert!(e.is_exact());
        assert_eq!(e.lo, Rational::new(BigInt::one(), BigInt::from(3)));
        let tau = tau_enclosure(&e);
        assert!(tau.is_exact());
        assert_eq!(tau.decimal(5), "3.00000");
    }

    #[test]
    fn uncertified_polynomials_are_refused() {
        assert_eq!(
            isolate_root(&p(&[-1, 0, 1, 0, 2]), &default_width()),
            Err(Error::CertificateNotApplicable)
        );
    }

    #[test]
    fn rounding_is_half_away_from_zero() {
        let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(round_to_decimals(&r(1, 2), 0), "1");
        assert_eq!(round_to_decimals(&r(-1, 2), 0), "-1");
        assert_eq!(round_to_decimals(&r(25, 1000), 2), "0.03");
        assert_eq!(round_to_decimals(&r(230277, 100000), 4), "2.3028");
        assert_eq!(round_to_decimals(&r(3, 1), 5), "3.00000");
    }

    #[test]
    fn sign_proof_for_a_right_angled_vector() {
        // n = 10 right-angled: τ = 7 sits on the lower bound, H(1/7) = 0.
        let v = validate(10, 16, 0, 0, 0).unwrap();
        let report = ideal_report(&v, &default_width()).unwrap();
        let tau = report.tau.as_ref().unwrap();
        assert!(tau.is_exact());
        assert_eq!(tau.lo, Rational::from(BigInt::from(7)));
        assert_eq!(
            report.bounds,
            BoundVerdict::ProvedBySign {
                lower_sign: 0,
                upper_sign: -1
            }
        );
        assert_eq!(report.right_angled, Some(RightAngledVerdict::Equality));
        assert!(report.perron.applicable);
    }

    #[test]
    fn degenerate_four_facet_vector_has_rate_one() {
        let v = validate(4, 4, 0, 0, 0).unwrap();
        let report = ideal_report(&v, &default_width()).unwrap();
        let tau = report.tau.as_ref().unwrap();
        assert!(tau.is_exact());
        assert_eq!(tau.lo, Rational::one());
        assert!(!report.perron.applicable);
        assert!(report.bounds.proved());
        assert_eq!(report.right_angled, Some(RightAngledVerdict::Equality));
    }
}
