//! Dense univariate polynomials over exact scalars.
//!
//! `Polynomial<T>` is generic over the coefficient type via `num-traits`;
//! the concrete aliases [`crate::IntPolynomial`] (arbitrary-precision integer
//! coefficients) and [`crate::RatPolynomial`] (arbitrary-precision rational
//! coefficients) cover everything the growth pipeline needs. Every polynomial
//! in scope has degree ≤ 16, so the representation is dense and all algorithms
//! are the schoolbook ones; exactness, not asymptotics, is the design goal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::{IntPolynomial, Rational};

/// A dense univariate polynomial; `coeffs[k]` holds the coefficient of `t^k`.
///
/// The zero polynomial is the empty coefficient list; nonzero polynomials never
/// carry trailing zero coefficients, so `degree` is `len − 1` whenever defined.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero> Polynomial<T> {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial (empty coefficient list).
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (never a sentinel value).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T: Zero + One> Polynomial<T> {
    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Zero + Clone> Polynomial<T> {
    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }
}

impl<T> Polynomial<T>
where
    T: Zero + Clone + Mul<Output = T>,
{
    /// Multiply every coefficient by the scalar `c`.
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Exact Horner evaluation at a scalar of the coefficient type.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl<T: Zero> From<Vec<T>> for Polynomial<T> {
    fn from(coeffs: Vec<T>) -> Self {
        Self::new(coeffs)
    }
}

impl<'a, T> Add for &'a Polynomial<T>
where
    T: Zero + Clone,
{
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl<'a, T> Sub for &'a Polynomial<T>
where
    T: Zero + Clone + Sub<Output = T>,
{
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl<'a, T> Neg for &'a Polynomial<T>
where
    T: Zero + Clone + Neg<Output = T>,
{
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<'a, T> Mul for &'a Polynomial<T>
where
    T: Zero + Clone + Mul<Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let cell = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = cell + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T> fmt::Display for Polynomial<T>
where
    T: Zero + One + PartialEq + Signed + fmt::Display,
{
    /// Human form in descending powers, e.g. `3t^2 + t - 1`; the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl Polynomial<BigInt> {
    /// Build from machine-integer coefficients, ascending powers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Gcd of the coefficients' absolute values; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Self divided by its content, sign-normalized so the leading coefficient
    /// is positive; the zero polynomial maps to itself.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// The same polynomial with rational coefficients.
    pub fn to_rational(&self) -> Polynomial<Rational> {
        Polynomial::new(self.coeffs.iter().cloned().map(Rational::from).collect())
    }
}

/// The polynomial `[n] = 1 + t + … + t^{n−1}`; rejects `n = 0`.
pub fn bracket(n: usize) -> Result<IntPolynomial, Error> {
    if n == 0 {
        return Err(Error::ZeroBracketIndex);
    }
    Ok(Polynomial::new(vec![BigInt::one(); n]))
}

/// The product `[n_1][n_2]⋯` over a list of indices; the empty list gives 1.
pub fn bracket_product(indices: &[usize]) -> Result<IntPolynomial, Error> {
    let mut acc = IntPolynomial::one();
    for &n in indices {
        acc = &acc * &bracket(n)?;
    }
    Ok(acc)
}

/// Exact quotient `a / b` over the integers.
///
/// Runs integer long division from the top degree down; the moment a leading
/// coefficient fails to divide, or a nonzero remainder of lower degree than `b`
/// remains, the division is not exact and the current remainder is reported.
pub fn div_exact(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let db = b.degree().unwrap();
    let lead_b = b.leading().unwrap().clone();
    let mut quotient = vec![
        BigInt::zero();
        a.degree()
            .map_or(0, |da| da.checked_sub(db).map_or(0, |d| d + 1))
    ];
    let mut rem = a.clone();
    while let Some(dr) = rem.degree() {
        if dr < db {
            return Err(Error::NotDivisible { remainder: rem });
        }
        let (q, r) = rem.leading().unwrap().div_rem(&lead_b);
        if !r.is_zero() {
            return Err(Error::NotDivisible { remainder: rem });
        }
        rem = &rem - &b.shift(dr - db).scale(&q);
        debug_assert!(rem.degree().map_or(true, |d| d < dr));
        quotient[dr - db] = q;
    }
    Ok(Polynomial::new(quotient))
}

/// Remainder of the pseudo-division of `u` by `v` (deg u ≥ deg v, v ≠ 0):
/// `u` is rescaled by powers of v's leading coefficient so every elimination
/// step stays integral.
fn pseudo_rem(u: &IntPolynomial, v: &IntPolynomial) -> IntPolynomial {
    let dv = v.degree().unwrap();
    let lead_v = v.leading().unwrap().clone();
    let mut rem = u.clone();
    while let Some(dr) = rem.degree() {
        if dr < dv {
            break;
        }
        let lead_r = rem.leading().unwrap().clone();
        rem = &rem.scale(&lead_v) - &v.shift(dr - dv).scale(&lead_r);
        debug_assert!(rem.degree().map_or(true, |d| d < dr));
    }
    rem
}

/// Primitive greatest common divisor with positive leading coefficient,
/// computed by a primitive pseudo-remainder sequence (all arithmetic stays in
/// the integers; no rational coefficient blowup).
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial, Error> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeroPair);
    }
    let mut u = a.primitive_part();
    let mut v = b.primitive_part();
    if u.degree() < v.degree() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_zero() {
        let r = pseudo_rem(&u, &v).primitive_part();
        u = v;
        v = r;
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert!(p(&[]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[-1, 1, 3]).to_string(), "3t^2 + t - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[2]).to_string(), "2");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn pseudo_remainder_drops_degree() {
        let r = pseudo_rem(&p(&[1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        assert_eq!(p(&[2, 0, -4]).primitive_part(), p(&[-1, 0, 2]));
        assert_eq!(p(&[]).primitive_part(), p(&[]));
    }
}
