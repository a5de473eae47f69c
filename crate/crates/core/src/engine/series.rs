//! Generating series: the localization series, the closed product form,
//! Göttsche's formula and the universal series.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, product_formula, rat, Rational, Series2};
use crate::error::Result;
use crate::toric::{ChernNumbers, EquivariantLineBundle, ToricSurface};
use crate::vertex::Specializer;

use super::localize::{nested_route, Integrand};

/// `sum_{n1 >= n2, n1 + n2 <= cap} q1^n1 q2^n2 int c(K_M)`, by the nested route.
pub fn z_nest_series(
    surface: &ToricSurface,
    m: &EquivariantLineBundle,
    cap: u32,
    specializer: &mut Specializer,
) -> Result<Series2> {
    let integrand = Integrand::single(m);
    let mut out = Series2::zero(cap);
    for total in 0..=cap {
        for n2 in 0..=total / 2 {
            let n1 = total - n2;
            let v = nested_route(surface, &integrand, n1, n2, specializer)?;
            out.add_term(n1, n2, v.value);
        }
    }
    Ok(out)
}

/// Factors `(1 - q1^n q2^{n-1})^{K^2 - MK} (1 - (q1 q2)^n)^{MK - M^2 - c2}`
/// for all `n` that fit under `cap`.
fn closed_form_factors(c: &ChernNumbers, cap: u32) -> Vec<((u32, u32), Rational)> {
    let a = int(c.k_squared - c.m_dot_k);
    let b = int(c.m_dot_k - c.m_squared - c.c2);
    let mut factors = Vec::new();
    for n in 1..=cap {
        factors.push(((n, n - 1), a.clone()));
        factors.push(((n, n), b.clone()));
    }
    factors
}

/// Closed product form of the nested series, with the sign
/// `(-1)^{n1+n2}` already applied to each coefficient.
pub fn closed_form_series(c: &ChernNumbers, cap: u32) -> Result<Series2> {
    let raw = product_formula(&closed_form_factors(c, cap), cap)?;
    Ok(alternate(&raw))
}

/// `q1^a q2^b -> (-1)^{a+b} q1^a q2^b`.
pub fn alternate(s: &Series2) -> Series2 {
    s.map_coeffs(|a, b, c| if (a + b) % 2 == 0 { c.clone() } else { -c })
}

/// `prod (1 - (q1 q2)^n)^{-e}` up to `q^{n_max}`, on the diagonal.
pub fn gottsche_series(euler_number: u64, n_max: u32) -> Result<Series2> {
    let cap = 2 * n_max;
    let e = -int(euler_number as i64);
    let factors: Vec<_> = (1..=n_max).map(|n| ((n, n), e.clone())).collect();
    product_formula(&factors, cap)
}

/// Diagonal coefficients `q^0, ..., q^{n_max}` of a Göttsche series.
pub fn diagonal(s: &Series2, n_max: u32) -> Vec<Rational> {
    (0..=n_max).map(|n| s.coeff(n, n)).collect()
}

/// The generators: `(P2, O), (P2, O(1)), (P1xP1, O), (P1xP1, O(1,0))`.
pub fn generator_pairs() -> Result<Vec<(ToricSurface, EquivariantLineBundle)>> {
    let p2 = ToricSurface::builtin("p2")?;
    let p1p1 = ToricSurface::builtin("p1xp1")?;
    Ok(vec![
        (p2.clone(), p2.trivial_bundle()),
        (p2.clone(), p2.bundle("O(1)")?),
        (p1p1.clone(), p1p1.trivial_bundle()),
        (p1p1.clone(), p1p1.bundle("O(1,0)")?),
    ])
}

/// Universal series with `Z(S, M) = A1^{M^2} A2^{MK} A3^{K^2} A4^{c2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalSeries {
    pub a: [Series2; 4],
}

impl UniversalSeries {
    /// Solves for `A1..A4` from the generator series `B1..B4`.
    pub fn from_generators(b: &[Series2; 4]) -> Result<Self> {
        let pw = |i: usize, n: i64, d: i64| b[i].pow(&rat(n, d));
        let a1 = &(&(&pw(0, -1, 1)? * &b[1]) * &pw(2, 3, 2)?) * &pw(3, -3, 2)?;
        let a2 = &pw(2, 1, 2)? * &pw(3, -1, 2)?;
        let a3 = &pw(0, 1, 3)? * &pw(2, -1, 4)?;
        let a4 = &pw(0, -2, 3)? * &pw(2, 3, 4)?;
        Ok(Self {
            a: [a1, a2, a3, a4],
        })
    }

    pub fn predict(&self, c: &ChernNumbers) -> Result<Series2> {
        let exps = [c.m_squared, c.m_dot_k, c.k_squared, c.c2];
        let mut out = Series2::one(self.a[0].cap());
        for (s, e) in self.a.iter().zip(exps) {
            out = &out * &s.pow(&Rational::from_integer(BigInt::from(e)))?;
        }
        Ok(out)
    }
}

/// Computes the generator series by localization and fits `A1..A4`.
pub fn universal_series_fit(cap: u32, specializer: &mut Specializer) -> Result<UniversalSeries> {
    let gens = generator_pairs()?;
    let mut b = Vec::with_capacity(4);
    for (s, m) in &gens {
        b.push(z_nest_series(s, m, cap, specializer)?);
    }
    let b: [Series2; 4] = b.try_into().expect("four generators");
    UniversalSeries::from_generators(&b)
}

/// Coefficients where two series differ, as `(n1, n2, left, right)`.
pub fn mismatches(x: &Series2, y: &Series2) -> Vec<(u32, u32, Rational, Rational)> {
    let cap = x.cap().min(y.cap());
    let mut out = Vec::new();
    for total in 0..=cap {
        for n2 in 0..=total {
            let n1 = total - n2;
            let (a, b) = (x.coeff(n1, n2), y.coeff(n1, n2));
            if a != b {
                out.push((n1, n2, a, b));
            }
        }
    }
    out
}

/// True when every coefficient is `1` at the origin and integral elsewhere.
pub fn is_unit_integral(s: &Series2) -> bool {
    s.constant().is_one()
        && s
            .terms()
            .all(|(_, c)| c.is_zero() || crate::algebra::is_integer(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::Specializer;

    fn numbers(s: &str, m: &str) -> ChernNumbers {
        let s = ToricSurface::builtin(s).unwrap();
        s.chern_numbers(&s.bundle(m).unwrap()).unwrap()
    }

    #[test]
    fn closed_form_low_order() {
        // (p2, O): exponents (9, -3); the q1 coefficient is -(-9) = 9.
        let c = closed_form_series(&numbers("p2", "O"), 3).unwrap();
        assert_eq!(c.constant(), int(1));
        assert_eq!(c.coeff(1, 0), int(9));
        assert!(c.terms().all(|((a, b), _)| a >= b));
    }

    #[test]
    fn gottsche_p2() {
        let g = gottsche_series(3, 4).unwrap();
        let want: Vec<Rational> = [1, 3, 9, 22, 51].iter().map(|&n| int(n)).collect();
        assert_eq!(diagonal(&g, 4), want);
    }

    #[test]
    fn nested_series_matches_closed_form_at_low_order() {
        let p2 = ToricSurface::builtin("p2").unwrap();
        let o = p2.trivial_bundle();
        let z = z_nest_series(&p2, &o, 2, &mut Specializer::new(7)).unwrap();
        let c = closed_form_series(&p2.chern_numbers(&o).unwrap(), 2).unwrap();
        assert_eq!(z, c);
    }

    #[test]
    fn generator_self_consistency() {
        let b: [Series2; 4] = [
            closed_form_series(&numbers("p2", "O"), 3).unwrap(),
            closed_form_series(&numbers("p2", "O(1)"), 3).unwrap(),
            closed_form_series(&numbers("p1xp1", "O"), 3).unwrap(),
            closed_form_series(&numbers("p1xp1", "O(1,0)"), 3).unwrap(),
        ];
        let u = UniversalSeries::from_generators(&b).unwrap();
        assert!(u.a.iter().all(|s| s.constant() == int(1)));
        let prediction = u.predict(&numbers("p2", "O")).unwrap();
        assert_eq!(prediction, b[0]);
        assert_eq!(u.predict(&numbers("p1xp1", "O(1,0)")).unwrap(), b[3]);
    }

    #[test]
    fn alternate_is_involution() {
        let g = gottsche_series(4, 2).unwrap();
        assert_eq!(alternate(&alternate(&g)), g);
    }
}
