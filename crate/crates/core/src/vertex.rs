//! Torus characters at a fixed point and their equivariant classes.
//!
//! A [`Character`] is a virtual representation of the two-dimensional torus:
//! coefficient `c` at exponent `(a, b)` is the weight `t1^a t2^b` with
//! multiplicity `c`. Classes are evaluated at a numeric [`Specialization`]
//! of the equivariant parameters, where `t1^a t2^b` becomes `a x + b y`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{rational_pow, GradedPoly, IntLaurent, Rational};
use crate::error::{Error, Result};
use crate::partitions::{z_character, NestedPair, Partition};

/// Redraws allowed after a degenerate specialization.
pub const MAX_REDRAWS: usize = 8;

/// The linear form `a w1 + b w2`, equivalently the character `t1^a t2^b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_trivial(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn eval(self, s: &Specialization) -> Rational {
        &s.x * Rational::from_integer(BigInt::from(self.a))
            + &s.y * Rational::from_integer(BigInt::from(self.b))
    }

    pub fn dot(self, ray: [i64; 2]) -> i64 {
        self.a * ray[0] + self.b * ray[1]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

/// Numeric values `(x, y)` of the equivariant parameters `(w1, w2)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Specialization {
    pub x: Rational,
    pub y: Rational,
}

impl Specialization {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }
}

/// Seeded source of generic specializations.
#[derive(Clone, Debug)]
pub struct Specializer {
    rng: ChaCha8Rng,
}

impl Specializer {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn draw(&mut self) -> Specialization {
        let coord = |rng: &mut ChaCha8Rng| {
            let num: i64 = rng.gen_range(1..=1009) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=97);
            Rational::new(BigInt::from(num), BigInt::from(den))
        };
        let x = coord(&mut self.rng);
        let y = coord(&mut self.rng);
        Specialization { x, y }
    }

    /// Evaluates `f` at fresh draws until it does not report a degenerate
    /// specialization, giving up after [`MAX_REDRAWS`] redraws.
    pub fn draw_valid<T>(
        &mut self,
        mut f: impl FnMut(&Specialization) -> Result<T>,
    ) -> Result<(Specialization, T)> {
        for _ in 0..=MAX_REDRAWS {
            let s = self.draw();
            match f(&s) {
                Err(Error::DegenerateSpecialization) => continue,
                Err(e) => return Err(e),
                Ok(v) => return Ok((s, v)),
            }
        }
        Err(Error::RetriesExhausted(MAX_REDRAWS))
    }
}

/// A virtual torus representation with integer multiplicities.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Character(IntLaurent);

impl Character {
    pub fn new(poly: IntLaurent) -> Self {
        Self(poly)
    }

    pub fn zero() -> Self {
        Self(IntLaurent::zero())
    }

    pub fn from_weights<I: IntoIterator<Item = (Weight, i64)>>(ws: I) -> Self {
        Self(IntLaurent::from_terms(
            ws.into_iter().map(|(w, m)| ((w.a as i32, w.b as i32), m)),
        ))
    }

    pub fn poly(&self) -> &IntLaurent {
        &self.0
    }

    pub fn rank(&self) -> i64 {
        self.0.eval_at_one()
    }

    pub fn weights(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.0
            .terms()
            .map(|(&(a, b), &m)| (Weight::new(a as i64, b as i64), m))
    }

    pub fn trivial_multiplicity(&self) -> i64 {
        self.0.coeff(0, 0)
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_effective(&self) -> bool {
        self.0.terms().all(|(_, &m)| m >= 0)
    }

    pub fn bar(&self) -> Self {
        Self(self.0.bar())
    }

    /// Tensor with the one-dimensional representation of weight `m`.
    pub fn twist(&self, m: Weight) -> Self {
        Self(self.0.shift(m.a as i32, m.b as i32))
    }

    /// Monomial substitution `t1 -> t^u`, `t2 -> t^v` for a lattice basis `(u, v)`.
    pub fn substitute(&self, u: Weight, v: Weight) -> Result<Self> {
        let det = u.a * v.b - u.b * v.a;
        if det.abs() != 1 {
            return Err(Error::SingularChart(u.a, u.b, v.a, v.b));
        }
        Ok(self.substitute_unchecked(u, v))
    }

    pub(crate) fn substitute_unchecked(&self, u: Weight, v: Weight) -> Self {
        Self(self.0.map_exponents(|a, b| {
            let (a, b) = (a as i64, b as i64);
            ((a * u.a + b * v.a) as i32, (a * u.b + b * v.b) as i32)
        }))
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, o: &Character) -> Character {
        Character(&self.0 + &o.0)
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, o: &Character) -> Character {
        Character(&self.0 - &o.0)
    }
}

impl std::iter::Sum for Character {
    fn sum<I: Iterator<Item = Character>>(iter: I) -> Character {
        iter.fold(Character::zero(), |acc, c| &acc + &c)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `(1 - t1)(1 - t2) / (t1 t2)`.
fn koszul_factor() -> IntLaurent {
    IntLaurent::from_terms([((-1, -1), 1), ((0, -1), -1), ((-1, 0), -1), ((0, 0), 1)])
}

/// `V(I_a, I_b) = chi(R, R) - chi(I_a, I_b)` on the affine plane:
/// `Z_b + bar(Z_a)/(t1 t2) - bar(Z_a) Z_b (1 - t1)(1 - t2)/(t1 t2)`.
pub fn block_character(mu_a: &Partition, mu_b: &Partition) -> Character {
    let za_bar = z_character(mu_a).bar();
    let zb = z_character(mu_b);
    let cross = &(&za_bar * &zb) * &koszul_factor();
    Character(&(&zb + &za_bar.shift(-1, -1)) - &cross)
}

/// Virtual tangent character at the fixed point `I_outer ⊆ I_inner`:
/// `V(outer, outer) + V(inner, inner) - V(outer, inner)`, which expands to
/// `Z1 + bar(Z2)/(t1 t2) + (bar(Z1) Z2 - bar(Z1) Z1 - bar(Z2) Z2)(1-t1)(1-t2)/(t1 t2)`.
pub fn virtual_tangent_character(p: &NestedPair) -> Character {
    let z1 = z_character(&p.outer);
    let z2 = z_character(&p.inner);
    let (z1b, z2b) = (z1.bar(), z2.bar());
    let quad = &(&(&z1b * &z2) - &(&z1b * &z1)) - &(&z2b * &z2);
    Character(&(&z1 + &z2b.shift(-1, -1)) + &(&quad * &koszul_factor()))
}

/// Tangent character of `Hilb^n × Hilb^m` at a pair of monomial ideals.
pub fn product_tangent_character(mu_a: &Partition, mu_b: &Partition) -> Character {
    &block_character(mu_a, mu_a) + &block_character(mu_b, mu_b)
}

/// Equivariant Euler class of `c` at the specialization `s`.
pub fn euler_class(c: &Character, s: &Specialization) -> Result<Rational> {
    let mut num = Rational::one();
    let mut den = Rational::one();
    for (w, m) in c.weights() {
        if w.is_trivial() {
            return Err(Error::TrivialWeight);
        }
        let val = w.eval(s);
        if val.is_zero() {
            return Err(Error::DegenerateSpecialization);
        }
        if m > 0 {
            num *= rational_pow(&val, m);
        } else {
            den *= rational_pow(&val, -m);
        }
    }
    Ok(num / den)
}

/// Total Chern class `prod (1 + g w)^mult`, truncated at `g^cap`.
/// Trivial weights contribute the factor 1.
pub fn chern_poly(c: &Character, s: &Specialization, cap: usize) -> GradedPoly {
    let mut acc = GradedPoly::one(cap);
    for (w, m) in c.weights() {
        let val = w.eval(s);
        if val.is_zero() {
            continue;
        }
        acc = &acc * &GradedPoly::linear_power(&val, m, cap);
    }
    acc
}

/// Top Chern class `c_rank(c)` at `s`, read off the total Chern class.
pub fn top_chern(c: &Character, s: &Specialization) -> Rational {
    let r = c.rank();
    if r < 0 {
        return Rational::zero();
    }
    chern_poly(c, s, r as usize).coeff(r as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::partitions::{enumerate_nested_pairs, enumerate_partitions};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn ch(ts: &[((i32, i32), i64)]) -> Character {
        Character::new(IntLaurent::from_terms(ts.iter().cloned()))
    }

    fn spec(x: i64, y: i64) -> Specialization {
        Specialization::new(int(x), int(y))
    }

    #[test]
    fn block_character_examples() {
        let e = Partition::empty();
        assert_eq!(block_character(&e, &e), Character::zero());
        let one = part(&[1]);
        assert_eq!(block_character(&one, &one), ch(&[((-1, 0), 1), ((0, -1), 1)]));
        for n1 in 0..=3 {
            for n2 in 0..=3 {
                for a in enumerate_partitions(n1) {
                    for b in enumerate_partitions(n2) {
                        assert_eq!(block_character(&a, &b).rank(), (n1 + n2) as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn tangent_examples() {
        let one = part(&[1]);
        let e = Partition::empty();
        let p = NestedPair::new(one.clone(), one.clone()).unwrap();
        assert_eq!(virtual_tangent_character(&p), ch(&[((-1, 0), 1), ((0, -1), 1)]));
        let p = NestedPair::new(one, e.clone()).unwrap();
        assert_eq!(
            virtual_tangent_character(&p),
            ch(&[((-1, 0), 1), ((0, -1), 1), ((-1, -1), -1)])
        );
        assert_eq!(virtual_tangent_character(&NestedPair::empty()), Character::zero());
    }

    #[test]
    fn tangent_is_block_combination() {
        for n1 in 0..=5 {
            for n2 in 0..=n1.min(8 - n1) {
                for p in enumerate_nested_pairs(n1, n2).unwrap() {
                    let blocks = &(&block_character(&p.outer, &p.outer)
                        + &block_character(&p.inner, &p.inner))
                        - &block_character(&p.outer, &p.inner);
                    assert_eq!(virtual_tangent_character(&p), blocks);
                }
            }
        }
    }

    #[test]
    fn block_trivial_weight_detects_nesting() {
        for n1 in 0..=4 {
            for n2 in 0..=(6 - n1).min(4) {
                for a in enumerate_partitions(n1) {
                    for b in enumerate_partitions(n2) {
                        // V = R/(I_b : I_a) + Ext^1(I_a, I_b) is effective; the
                        // quotient contributes the trivial weight iff not nested.
                        let v = block_character(&a, &b);
                        assert!(v.is_effective(), "{a} {b}");
                        let mult = v.trivial_multiplicity();
                        if a.contains(&b) {
                            assert_eq!(mult, 0, "{a} {b}");
                        } else {
                            assert!(mult >= 1, "{a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn twist_examples() {
        let c = ch(&[((0, 0), 1), ((1, 0), 1)]);
        assert_eq!(c.twist(Weight::new(0, 0)), c);
        assert_eq!(ch(&[((-1, 0), 1)]).twist(Weight::new(1, 1)), ch(&[((0, 1), 1)]));
        let b = block_character(&part(&[2, 1]), &part(&[1]));
        assert_eq!(b.twist(Weight::new(3, -2)).rank(), b.rank());
    }

    #[test]
    fn substitution_examples() {
        let c = ch(&[((1, 0), 1)]);
        let (e1, e2) = (Weight::new(1, 0), Weight::new(0, 1));
        assert_eq!(c.substitute(e1, e2).unwrap(), c);
        assert_eq!(
            c.substitute(Weight::new(-1, 0), Weight::new(-1, 1)).unwrap(),
            ch(&[((-1, 0), 1)])
        );
        assert_eq!(
            c.substitute(Weight::new(2, 0), Weight::new(0, 1)),
            Err(Error::SingularChart(2, 0, 0, 1))
        );
        let b = block_character(&part(&[3, 1]), &part(&[2]));
        let s = b.substitute(Weight::new(-1, 1), Weight::new(-1, 0)).unwrap();
        assert_eq!(s.rank(), b.rank());
    }

    #[test]
    fn euler_examples() {
        let c = ch(&[((-1, 0), 1), ((0, -1), 1)]);
        assert_eq!(euler_class(&c, &spec(1, 2)).unwrap(), int(2));
        let c = ch(&[((-1, 0), 1), ((0, -1), 1), ((-1, -1), -1)]);
        assert_eq!(euler_class(&c, &spec(1, 2)).unwrap(), rat(-2, 3));
        let c = ch(&[((0, 0), 1), ((1, 0), 1)]);
        assert_eq!(euler_class(&c, &spec(1, 2)), Err(Error::TrivialWeight));
        let c = ch(&[((1, -1), 1)]);
        assert_eq!(euler_class(&c, &spec(3, 3)), Err(Error::DegenerateSpecialization));
    }

    #[test]
    fn chern_examples() {
        let s = spec(1, 1);
        assert_eq!(chern_poly(&Character::zero(), &s, 3), GradedPoly::one(3));
        let triv = ch(&[((0, 0), 1)]);
        assert_eq!(chern_poly(&triv, &s, 2), GradedPoly::one(2));
        let c = ch(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(chern_poly(&c, &s, 2).coeffs(), &[int(1), int(2), int(1)]);
        assert_eq!(top_chern(&c, &spec(2, 5)), int(10));
    }

    #[test]
    fn specializer_is_deterministic() {
        let mut a = Specializer::new(7);
        let mut b = Specializer::new(7);
        for _ in 0..5 {
            assert_eq!(a.draw(), b.draw());
        }
        let mut calls = 0;
        let r = Specializer::new(1).draw_valid(|_| -> Result<()> {
            calls += 1;
            Err(Error::DegenerateSpecialization)
        });
        assert_eq!(r, Err(Error::RetriesExhausted(MAX_REDRAWS)));
        assert_eq!(calls, MAX_REDRAWS + 1);
    }
}
