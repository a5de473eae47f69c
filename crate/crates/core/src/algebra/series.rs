use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{int, Rational};
use crate::error::{Error, Result};

/// Power series in `q1, q2` with rational coefficients, truncated at total
/// degree `cap`: only terms `q1^d1 q2^d2` with `d1 + d2 <= cap` are kept.
#[derive(Clone, PartialEq, Eq)]
pub struct Series2 {
    cap: u32,
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Homogeneous piece of fixed total degree, keyed by the `q1` exponent.
type Homogeneous = BTreeMap<u32, Rational>;

fn homog_mul(x: &Homogeneous, y: &Homogeneous) -> Homogeneous {
    let mut out = Homogeneous::new();
    for (a, c) in x {
        for (b, d) in y {
            *out.entry(a + b).or_insert_with(Rational::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn homog_axpy(acc: &mut Homogeneous, k: &Rational, x: &Homogeneous) {
    for (a, c) in x {
        *acc.entry(*a).or_insert_with(Rational::zero) += k * c;
    }
    acc.retain(|_, c| !c.is_zero());
}

impl Series2 {
    pub fn zero(cap: u32) -> Self {
        Self {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(cap, 0, 0, Rational::one())
    }

    pub fn monomial(cap: u32, d1: u32, d2: u32, c: Rational) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(d1, d2, c);
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Adds `c q1^d1 q2^d2`; terms beyond the cap are dropped.
    pub fn add_term(&mut self, d1: u32, d2: u32, c: Rational) {
        if d1 + d2 > self.cap || c.is_zero() {
            return;
        }
        let entry = self.terms.entry((d1, d2)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(d1, d2));
        }
    }

    pub fn coeff(&self, d1: u32, d2: u32) -> Rational {
        self.terms
            .get(&(d1, d2))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let cap = cap.min(self.cap);
        Self {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b <= cap)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.cap);
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c * k);
        }
        out
    }

    /// Coefficient-wise map of `(d1, d2, c)`; used for sign twists.
    pub fn map_coeffs(&self, f: impl Fn(u32, u32, &Rational) -> Rational) -> Self {
        let mut out = Self::zero(self.cap);
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, f(a, b, c));
        }
        out
    }

    fn components(&self) -> Vec<Homogeneous> {
        let mut comps = vec![Homogeneous::new(); self.cap as usize + 1];
        for (&(a, b), c) in &self.terms {
            comps[(a + b) as usize].insert(a, c.clone());
        }
        comps
    }

    fn from_components(cap: u32, comps: &[Homogeneous]) -> Self {
        let mut out = Self::zero(cap);
        for (d, comp) in comps.iter().enumerate() {
            for (a, c) in comp {
                out.add_term(*a, d as u32 - a, c.clone());
            }
        }
        out
    }

    /// `self^r` for a rational `r`, defined when the constant term is 1.
    ///
    /// Uses the Euler-operator recurrence `s * D(f) = r * f * D(s)` with
    /// `D = q1 d/dq1 + q2 d/dq2`, which multiplies degree-`d` pieces by `d`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::NonUnitSeries);
        }
        let s = self.components();
        let n = s.len();
        let mut f: Vec<Homogeneous> = Vec::with_capacity(n);
        f.push(Homogeneous::from([(0, Rational::one())]));
        for d in 1..n {
            let mut acc = Homogeneous::new();
            for j in 0..d {
                let k = r * int((d - j) as i64) - int(j as i64);
                if k.is_zero() || s[d - j].is_empty() || f[j].is_empty() {
                    continue;
                }
                homog_axpy(&mut acc, &k, &homog_mul(&s[d - j], &f[j]));
            }
            let inv_d = int(d as i64).recip();
            acc.values_mut().for_each(|c| *c *= &inv_d);
            f.push(acc);
        }
        Ok(Self::from_components(self.cap, &f))
    }

    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant();
        if c.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        Ok(self.scale(&c.recip()).pow(&int(-1))?.scale(&c.recip()))
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::NonUnitSeries);
        }
        // d L_d = d s_d - sum_{j=1}^{d-1} j s_{d-j} L_j
        let s = self.components();
        let mut l = vec![Homogeneous::new(); s.len()];
        for d in 1..s.len() {
            let mut acc = s[d].clone();
            acc.values_mut().for_each(|c| *c *= int(d as i64));
            for j in 1..d {
                homog_axpy(&mut acc, &int(-(j as i64)), &homog_mul(&s[d - j], &l[j]));
            }
            let inv_d = int(d as i64).recip();
            acc.values_mut().for_each(|c| *c *= &inv_d);
            l[d] = acc;
        }
        Ok(Self::from_components(self.cap, &l))
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::NonNilpotentExponent);
        }
        // d E_d = sum_{j=0}^{d-1} (d-j) v_{d-j} E_j
        let v = self.components();
        let mut e = vec![Homogeneous::new(); v.len()];
        e[0].insert(0, Rational::one());
        for d in 1..v.len() {
            let mut acc = Homogeneous::new();
            for j in 0..d {
                homog_axpy(&mut acc, &int((d - j) as i64), &homog_mul(&v[d - j], &e[j]));
            }
            let inv_d = int(d as i64).recip();
            acc.values_mut().for_each(|c| *c *= &inv_d);
            e[d] = acc;
        }
        Ok(Self::from_components(self.cap, &e))
    }
}

/// `prod_i (1 - q1^a_i q2^b_i)^{e_i}`, truncated at `cap`.
pub fn product_formula(factors: &[((u32, u32), Rational)], cap: u32) -> Result<Series2> {
    let mut out = Series2::one(cap);
    for ((a, b), e) in factors {
        if a + b == 0 {
            return Err(Error::ZeroDegreeFactor);
        }
        if a + b > cap || e.is_zero() {
            continue;
        }
        let mut base = Series2::one(cap);
        base.add_term(*a, *b, -Rational::one());
        out = &out * &base.pow(e)?;
    }
    Ok(out)
}

impl Add for &Series2 {
    type Output = Series2;

    fn add(self, rhs: &Series2) -> Series2 {
        let mut out = self.truncate(rhs.cap);
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &Series2 {
    type Output = Series2;

    fn sub(self, rhs: &Series2) -> Series2 {
        self + &(-rhs)
    }
}

impl Neg for &Series2 {
    type Output = Series2;

    fn neg(self) -> Series2 {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Series2 {
    type Output = Series2;

    fn mul(self, rhs: &Series2) -> Series2 {
        let cap = self.cap.min(rhs.cap);
        let mut out = Series2::zero(cap);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                if a1 + b1 + a2 + b2 <= cap {
                    out.add_term(a1 + a2, b1 + b2, c1 * c2);
                }
            }
        }
        out
    }
}

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, a));
        for &(a, b) in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*q1^{}*q2^{}", self.terms[&(a, b)], a, b)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(deg {})", self.cap + 1)
    }
}

impl fmt::Debug for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn one_minus(cap: u32, a: u32, b: u32) -> Series2 {
        let mut s = Series2::one(cap);
        s.add_term(a, b, -Rational::one());
        s
    }

    #[test]
    fn negative_cube_binomial() {
        // (1 - q1)^{-3} = sum C(k+2, 2) q1^k
        let s = one_minus(3, 1, 0).pow(&int(-3)).unwrap();
        let want: Vec<i64> = vec![1, 3, 6, 10];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(s.coeff(k as u32, 0), int(*w));
        }
        assert_eq!(s.terms().count(), 4);
    }

    #[test]
    fn zeroth_power_is_one() {
        let s = one_minus(4, 1, 1);
        assert_eq!(s.pow(&int(0)).unwrap(), Series2::one(4));
    }

    #[test]
    fn square_root_squares_back() {
        let s = one_minus(5, 1, 0);
        let h = s.pow(&rat(1, 2)).unwrap();
        assert_eq!(&h * &h, s);
    }

    #[test]
    fn non_unit_power_fails() {
        let mut s = Series2::monomial(3, 0, 0, int(2));
        s.add_term(1, 0, int(1));
        assert_eq!(s.pow(&rat(1, 3)), Err(Error::NonUnitSeries));
        assert_eq!(Series2::zero(3).log(), Err(Error::NonUnitSeries));
        assert!(s.inverse().is_ok());
        assert_eq!(&s * &s.inverse().unwrap(), Series2::one(3));
    }

    #[test]
    fn gottsche_p2_product() {
        let factors: Vec<_> = (1..=4).map(|n| ((n, n), int(-3))).collect();
        let s = product_formula(&factors, 8).unwrap();
        let want = [1, 3, 9, 22, 51];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(s.coeff(n as u32, n as u32), int(*w));
        }
    }

    #[test]
    fn product_formula_edge_cases() {
        let factors: Vec<_> = (1..=4).map(|n| ((n, n), int(0))).collect();
        assert_eq!(product_formula(&factors, 4).unwrap(), Series2::one(4));
        let factors: Vec<_> = (1..=3).map(|n| ((n, n - 1), int(9))).collect();
        let s = product_formula(&factors, 1).unwrap();
        let mut want = Series2::one(1);
        want.add_term(1, 0, int(-9));
        assert_eq!(s, want);
        assert_eq!(
            product_formula(&[((0, 0), int(1))], 3),
            Err(Error::ZeroDegreeFactor)
        );
    }

    /// log(1 + u) = sum (-1)^{k+1} u^k / k, a direct expansion.
    fn naive_log(s: &Series2) -> Series2 {
        let u = s - &Series2::one(s.cap());
        let mut acc = Series2::zero(s.cap());
        let mut power = Series2::one(s.cap());
        for k in 1..=s.cap() as i64 {
            power = &power * &u;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&rat(sign, k));
        }
        acc
    }

    fn arb_unit_series() -> impl Strategy<Value = Series2> {
        prop::collection::vec(((0u32..=3, 0u32..=3), -4i64..=4), 0..6).prop_map(|ts| {
            let mut s = Series2::one(4);
            for ((a, b), c) in ts {
                if a + b > 0 {
                    s.add_term(a, b, int(c));
                }
            }
            s
        })
    }

    fn arb_series() -> impl Strategy<Value = Series2> {
        prop::collection::vec(((0u32..=3, 0u32..=3), -4i64..=4), 0..6).prop_map(|ts| {
            let mut s = Series2::zero(4);
            for ((a, b), c) in ts {
                s.add_term(a, b, int(c));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_series(), y in arb_series(), z in arb_series()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn pow_is_a_homomorphism_in_the_exponent(
            s in arb_unit_series(), n1 in -6i64..6, d1 in 1i64..5, n2 in -6i64..6, d2 in 1i64..5
        ) {
            let (r1, r2) = (rat(n1, d1), rat(n2, d2));
            let lhs = s.pow(&(&r1 + &r2)).unwrap();
            let rhs = &s.pow(&r1).unwrap() * &s.pow(&r2).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(&s.pow(&r1).unwrap() * &s.pow(&-r1.clone()).unwrap(), Series2::one(4));
        }

        #[test]
        fn integer_pow_is_repeated_multiplication(s in arb_unit_series(), k in 0u32..5) {
            let mut acc = Series2::one(4);
            for _ in 0..k {
                acc = &acc * &s;
            }
            prop_assert_eq!(s.pow(&int(k as i64)).unwrap(), acc);
        }

        #[test]
        fn log_and_exp_agree_with_pow(s in arb_unit_series(), n in -5i64..5, d in 1i64..4) {
            let l = s.log().unwrap();
            prop_assert_eq!(&l, &naive_log(&s));
            let r = rat(n, d);
            prop_assert_eq!(l.scale(&r).exp().unwrap(), s.pow(&r).unwrap());
        }
    }
}
