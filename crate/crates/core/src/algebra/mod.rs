//! Exact arithmetic: rationals, bivariate Laurent polynomials, truncated
//! bivariate power series and truncated graded polynomials.

mod graded;
mod laurent;
mod series;

pub use graded::GradedPoly;
pub use laurent::{Coeff, IntLaurent, LaurentPoly, RatLaurent};
pub use series::{product_formula, Series2};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `x^e` for a signed integer exponent. Panics on `0^e` with `e < 0`.
pub fn rational_pow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if e < 0 { x.recip() } else { x.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Generalized binomial coefficient `r (r-1) ... (r-k+1) / k!`.
pub fn binomial(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (r - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one() || x.is_zero()
}
