//! The full growth function of a Coxeter system from the alternating sum over
//! finite parabolic subsystems, plus power-series expansion.
//!
//! The sum computed here is R(t) = Σ_{T ∈ F} (−1)^{|T|}/f_T(t) = 1/f_S(1/t);
//! substituting t → 1/t and taking the reciprocal recovers f_S(t) itself.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coxeter::{
    classify_finite, components, finite_subsets, restrict, solomon_polynomial, CoxeterMatrix,
    FiniteType, GeneratorSubset,
};
use crate::error::Error;
use crate::poly::{div_exact, poly_gcd};
use crate::ratfunc::{reduce, RationalFunction};
use crate::{IntPolynomial, Polynomial};

/// A growth function P(t)/Q(t), reduced, with P(0) = Q(0) = 1 — exactly the
/// normalization under which the power series has integer coefficients and
/// starts at a₀ = 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrowthFunction {
    value: RationalFunction,
}

impl GrowthFunction {
    /// Wrap a reduced rational function, asserting the P(0) = 1 invariant
    /// (Q(0) = 1 is already guaranteed by the reduction).
    pub(crate) fn from_reduced(value: RationalFunction) -> Self {
        assert!(
            value.numerator().coeff(0).is_one(),
            "growth numerator must have constant term 1"
        );
        GrowthFunction { value }
    }

    pub fn value(&self) -> &RationalFunction {
        &self.value
    }

    pub fn numerator(&self) -> &IntPolynomial {
        self.value.numerator()
    }

    pub fn denominator(&self) -> &IntPolynomial {
        self.value.denominator()
    }
}

/// The Solomon polynomial of the (finite) subsystem generated by `t`:
/// the product over its irreducible components.
fn subset_solomon(m: &CoxeterMatrix, t: &GeneratorSubset) -> IntPolynomial {
    let sub = restrict(m, t).expect("subset indices are in range");
    let types: Vec<FiniteType> = components(&sub)
        .into_iter()
        .map(|c| {
            let piece = restrict(&sub, &c).expect("component indices are in range");
            classify_finite(&piece)
                .expect("components are irreducible")
                .expect("enumerated subsets are finite")
        })
        .collect();
    solomon_polynomial(&types)
}

/// Alternating sum over an already-enumerated family of finite subsets,
/// accumulated over one shared denominator that grows as the least common
/// multiple of the Solomon polynomials — a single reduction at the end instead
/// of one per pairwise addition.
fn alternating_sum(m: &CoxeterMatrix, subsets: &[GeneratorSubset]) -> RationalFunction {
    let mut num = IntPolynomial::zero();
    let mut den = IntPolynomial::one();
    for t in subsets {
        let f = subset_solomon(m, t);
        let g = poly_gcd(&den, &f).expect("Solomon polynomials are nonzero");
        let extra = div_exact(&f, &g).expect("gcd divides");
        num = &num * &extra;
        den = &den * &extra;
        let term = div_exact(&den, &f).expect("the common denominator is a multiple");
        num = if t.len() % 2 == 0 {
            &num + &term
        } else {
            &num - &term
        };
    }
    reduce(&num, &den).expect("bracket products have constant term 1")
}

/// The exact alternating sum R(t) = Σ_{T ∈ F} (−1)^{|T|}/f_T(t) as one reduced
/// rational function.
pub fn steinberg_sum(m: &CoxeterMatrix) -> Result<RationalFunction, Error> {
    let subsets = finite_subsets(m)?;
    Ok(alternating_sum(m, &subsets))
}

/// Substitute t → 1/t and clear to a polynomial quotient: both parts are
/// coefficient-reversed at the larger of the two degrees, then reduced.
///
/// Fails on the zero function, and on functions (like plain polynomials of
/// positive degree) whose substituted form has no power-series expansion at 0.
pub fn invert_variable(r: &RationalFunction) -> Result<RationalFunction, Error> {
    if r.is_zero() {
        return Err(Error::ZeroRationalFunction);
    }
    let k = r
        .numerator()
        .degree()
        .expect("nonzero")
        .max(r.denominator().degree().expect("denominators are nonzero"));
    let rev = |p: &IntPolynomial| -> IntPolynomial {
        let mut c: Vec<BigInt> = p.coeffs().to_vec();
        c.resize(k + 1, BigInt::zero());
        c.reverse();
        Polynomial::new(c)
    };
    reduce(&rev(r.numerator()), &rev(r.denominator()))
}

/// The growth function f_S(t) of an infinite Coxeter system: the reciprocal of
/// `invert_variable(steinberg_sum(M))`, reduced and normalized.
///
/// Finite systems are rejected — their growth series is the Solomon polynomial
/// (carried in the error), and silently conflating the two normalizations
/// would hide bugs.
pub fn growth_function(m: &CoxeterMatrix) -> Result<GrowthFunction, Error> {
    let subsets = finite_subsets(m)?;
    if subsets.iter().any(|t| t.len() == m.size()) {
        let solomon = subset_solomon(m, &GeneratorSubset::full(m.size()));
        return Err(Error::FiniteSystem { solomon });
    }
    let sum = alternating_sum(m, &subsets);
    let inv = invert_variable(&sum)?;
    let f = reduce(inv.denominator(), inv.numerator())?;
    Ok(GrowthFunction::from_reduced(f))
}

/// Safety cap on the series horizon: expansion is quadratic in the horizon and
/// desk-scale checks need no more than a thousand terms.
pub const SERIES_CAP: usize = 1_000_000;

/// First `count` power-series coefficients a₀, a₁, … of the growth function,
/// by the linear recurrence Q·f = P (all integer arithmetic; q₀ = 1).
pub fn series_coefficients(f: &GrowthFunction, count: usize) -> Result<Vec<BigInt>, Error> {
    if count > SERIES_CAP {
        return Err(Error::SeriesHorizon {
            requested: count,
            cap: SERIES_CAP,
        });
    }
    let p = f.numerator();
    let q = f.denominator();
    let dq = q.degree().unwrap_or(0);
    let mut a: Vec<BigInt> = Vec::with_capacity(count);
    for k in 0..count {
        let mut v = p.coeff(k);
        for j in 1..=k.min(dq) {
            v -= q.coeff(j) * &a[k - j];
        }
        a.push(v);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Label;

    #[test]
    fn single_generator_sum_is_t_over_one_plus_t() {
        // F = {∅, {0}}: R = 1 − 1/[2] = t/(1+t)
        let m = CoxeterMatrix::right_angled(1);
        let r = steinberg_sum(&m).unwrap();
        assert_eq!(r.numerator(), &IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(r.denominator(), &IntPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn inversion_of_t_over_one_plus_t() {
        let m = CoxeterMatrix::right_angled(1);
        let r = steinberg_sum(&m).unwrap();
        let inv = invert_variable(&r).unwrap();
        assert_eq!(inv.numerator(), &IntPolynomial::from_i64(&[1]));
        assert_eq!(inv.denominator(), &IntPolynomial::from_i64(&[1, 1]));
    }

    #[test]
    fn finite_input_is_rejected_with_its_solomon_polynomial() {
        let m = CoxeterMatrix::from_labels(2, &[(0, 1, Label::Finite(6))]).unwrap();
        match growth_function(&m) {
            Err(Error::FiniteSystem { solomon }) => {
                // I2(6): [2, 6], which sums to 12 = |Γ| at t = 1
                assert_eq!(
                    solomon,
                    &crate::poly::bracket(2).unwrap() * &crate::poly::bracket(6).unwrap()
                );
            }
            other => panic!("expected FiniteSystem, got {other:?}"),
        }
    }

    #[test]
    fn infinite_dihedral_growth() {
        let m = CoxeterMatrix::from_labels(2, &[(0, 1, Label::Infinity)]).unwrap();
        let f = growth_function(&m).unwrap();
        assert_eq!(f.numerator(), &IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(f.denominator(), &IntPolynomial::from_i64(&[1, -1]));
        let a = series_coefficients(&f, 5).unwrap();
        let expected: Vec<BigInt> = [1, 2, 2, 2, 2].map(BigInt::from).to_vec();
        assert_eq!(a, expected);
    }
}
