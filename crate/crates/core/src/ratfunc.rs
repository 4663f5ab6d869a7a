//! Rational functions P(t)/Q(t) over the integers, reduced to lowest terms and
//! normalized so the denominator has constant term 1 — the shape every growth
//! function takes once its power series has integer coefficients.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::poly::{div_exact, poly_gcd};
use crate::IntPolynomial;

/// A quotient of integer polynomials with `gcd(num, den)` a unit (coprime up
/// to content) and `den(0) = 1`. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant function 1.
    pub fn one() -> Self {
        RationalFunction {
            num: IntPolynomial::one(),
            den: IntPolynomial::one(),
        }
    }
}

/// Reduce `num/den` to lowest terms with `den(0) = 1`.
///
/// Divides out the polynomial gcd, then the joint integer content, then fixes
/// the denominator's constant term: 1 stays, −1 flips both signs, anything
/// else means no integral Q(0) = 1 form exists (the pair is already coprime,
/// so a rational rescaling would leave the integers) and is a distinct error,
/// as is a denominator vanishing at 0.
pub fn reduce(num: &IntPolynomial, den: &IntPolynomial) -> Result<RationalFunction, Error> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFunction {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        });
    }
    let g = poly_gcd(num, den).expect("nonzero inputs");
    let mut n = div_exact(num, &g).expect("gcd divides the numerator");
    let mut d = div_exact(den, &g).expect("gcd divides the denominator");
    let c = n.content().gcd(&d.content());
    let c = IntPolynomial::constant(c);
    n = div_exact(&n, &c).expect("content divides");
    d = div_exact(&d, &c).expect("content divides");
    let d0 = d.coeff(0);
    if d0.is_zero() {
        return Err(Error::DenominatorVanishesAtZero);
    }
    if d0.is_negative() {
        n = -&n;
        d = -&d;
    }
    let d0 = d.coeff(0);
    if !d0.is_one() {
        return Err(Error::NotNormalizable { constant: d0 });
    }
    Ok(RationalFunction { num: n, den: d })
}
