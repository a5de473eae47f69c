use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;

/// Coefficient ring for [`LaurentPoly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// A Laurent polynomial in `t1, t2`, stored as a map from exponent pairs to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<(i32, i32), T>,
}

pub type IntLaurent = LaurentPoly<i64>;
pub type RatLaurent = LaurentPoly<Rational>;

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, T::one())
    }

    pub fn monomial(a: i32, b: i32, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term((a, b), c);
        p
    }

    pub fn t1() -> Self {
        Self::monomial(1, 0, T::one())
    }

    pub fn t2() -> Self {
        Self::monomial(0, 1, T::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((i32, i32), T)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c t1^a t2^b`, pruning the entry if it cancels.
    pub fn add_term(&mut self, exp: (i32, i32), c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let sum = old.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn coeff(&self, a: i32, b: i32) -> T {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The involution `t_i -> t_i^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((-a, -b), c.clone()))
                .collect(),
        }
    }

    /// Multiplication by the monomial `t1^da t2^db`.
    pub fn shift(&self, da: i32, db: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + da, b + db), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c.clone() * k.clone())))
    }

    /// Value at `t1 = t2 = 1`.
    pub fn eval_at_one(&self) -> T {
        self.terms
            .values()
            .cloned()
            .fold(T::zero(), |acc, c| acc + c)
    }

    /// Applies a map on exponents, merging colliding terms.
    pub fn map_exponents(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| (f(a, b), c.clone())))
    }
}

impl<T: Coeff> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<T: Coeff> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<T: Coeff> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Coeff> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;

    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

impl<T: Coeff> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let unit = a == 0 && b == 0;
            if unit || !c.is_one() {
                write!(f, "{c}")?;
                if !unit {
                    write!(f, "*")?;
                }
            }
            fmt_var(f, "t1", a)?;
            if a != 0 && b != 0 {
                write!(f, "*")?;
            }
            fmt_var(f, "t2", b)?;
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
