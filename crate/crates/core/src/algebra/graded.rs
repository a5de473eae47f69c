use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::{binomial, int, Rational};
use crate::error::{Error, Result};

/// Polynomial in a single formal grading variable `g`, truncated at degree
/// `cap`. The coefficient of `g^k` carries cohomological degree `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedPoly {
    coeffs: Vec<Rational>,
}

impl GradedPoly {
    pub fn zero(cap: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = Rational::one();
        p
    }

    /// A polynomial whose only coefficient is `c` in degree `k`.
    pub fn homogeneous(cap: usize, k: usize, c: Rational) -> Self {
        let mut p = Self::zero(cap);
        if k <= cap {
            p.coeffs[k] = c;
        }
        p
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `(1 + w g)^m` truncated at `cap`; `m` may be negative.
    pub fn linear_power(w: &Rational, m: i64, cap: usize) -> Self {
        let mut out = Self::zero(cap);
        let m = int(m);
        let mut wk = Rational::one();
        for k in 0..=cap {
            out.coeffs[k] = binomial(&m, k) * &wk;
            wk *= w;
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let inv0 = c0.recip();
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(Self { coeffs: out })
    }
}

impl Add for &GradedPoly {
    type Output = GradedPoly;

    fn add(self, rhs: &GradedPoly) -> GradedPoly {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        GradedPoly {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &GradedPoly {
    type Output = GradedPoly;

    fn sub(self, rhs: &GradedPoly) -> GradedPoly {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        GradedPoly {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &GradedPoly {
    type Output = GradedPoly;

    fn mul(self, rhs: &GradedPoly) -> GradedPoly {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        GradedPoly { coeffs: out }
    }
}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c}*g^{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn linear_powers() {
        let p = GradedPoly::linear_power(&int(1), 2, 3);
        assert_eq!(p.coeffs(), &[int(1), int(2), int(1), int(0)]);
        // (1 + 2g)^{-1} = 1 - 2g + 4g^2
        let q = GradedPoly::linear_power(&int(2), -1, 2);
        assert_eq!(q.coeffs(), &[int(1), int(-2), int(4)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = GradedPoly::from_coeffs(vec![int(1), rat(3, 2), int(-7), int(5)]);
        assert_eq!(&p * &p.inverse().unwrap(), GradedPoly::one(3));
        assert!(GradedPoly::zero(2).inverse().is_err());
    }

    #[test]
    fn powers_multiply() {
        let w = rat(-5, 3);
        let a = GradedPoly::linear_power(&w, 3, 4);
        let b = GradedPoly::linear_power(&w, -5, 4);
        assert_eq!(&a * &b, GradedPoly::linear_power(&w, -2, 4));
    }
}
