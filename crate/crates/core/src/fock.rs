//! Truncated Fock space of the Heisenberg algebra on `H*(S)`, the vertex
//! operators `Γ±` and the graded trace of `W(M1, M2)`.
//!
//! Basis vectors are normal-ordered monomials `α_{-n_1}(e_{i_1}) ... |0>`
//! in a fixed lattice basis. Annihilators contract through
//! `[α_m(γ), α_{-m}(γ')] = (-1)^{m-1} m <γ, γ'>`. Toric surfaces have no odd
//! cohomology, so the supertrace is the ordinary trace.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{binomial, int, rational_pow, Rational, Series2};
use crate::engine::partition_tuples;
use crate::error::{Error, Result};
use crate::toric::ToricSurface;

/// Intersection lattice: a symmetric pairing, the canonical class and the
/// topological Euler number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lattice {
    pairing: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    euler: i64,
    /// Row `i` is the class of the toric divisor `D_i`.
    divisors: Vec<Vec<i64>>,
}

impl Lattice {
    pub fn new(pairing: Vec<Vec<i64>>, canonical: Vec<i64>, euler: i64) -> Result<Self> {
        let r = pairing.len();
        if let Some(row) = pairing.iter().find(|row| row.len() != r) {
            return Err(Error::LatticeRank {
                expected: r,
                got: row.len(),
            });
        }
        if (0..r).any(|i| (0..r).any(|j| pairing[i][j] != pairing[j][i])) {
            return Err(Error::Config("lattice pairing is not symmetric".into()));
        }
        if canonical.len() != r {
            return Err(Error::LatticeRank {
                expected: r,
                got: canonical.len(),
            });
        }
        Ok(Self {
            pairing,
            canonical,
            euler,
            divisors: Vec::new(),
        })
    }

    /// `H*(S)` with basis `1, pt, D_2, ..., D_{k-1}`: the first two toric
    /// divisors are eliminated through the linear relations of the fan.
    pub fn from_surface(surface: &ToricSurface) -> Result<Self> {
        let rays = surface.rays();
        let k = rays.len();
        let r = k;
        let chart = surface.charts()[0];
        let mut divisors = vec![vec![0i64; r]; k];
        for i in 2..k {
            divisors[i][i] = 1;
            divisors[0][i] = -chart.u.dot(rays[i]);
            divisors[1][i] = -chart.v.dot(rays[i]);
        }
        let mut pairing = vec![vec![0i64; r]; r];
        pairing[0][1] = 1;
        pairing[1][0] = 1;
        let unit = |i: usize| {
            let mut c = vec![0; k];
            c[i] = 1;
            surface.line_bundle(&format!("D{i}"), c)
        };
        for i in 2..k {
            for j in 2..k {
                pairing[i][j] = surface.intersection(&unit(i)?, &unit(j)?)?;
            }
        }
        let mut lattice = Self::new(pairing, vec![0; r], k as i64)?;
        lattice.divisors = divisors;
        lattice.canonical = lattice.divisor_class(&vec![-1; k])?;
        Ok(lattice)
    }

    pub fn rank(&self) -> usize {
        self.pairing.len()
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn pair(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                acc += x * self.pairing[i][j] * y;
            }
        }
        acc
    }

    /// `M^D = K - M`.
    pub fn dual(&self, m: &[i64]) -> Vec<i64> {
        self.canonical.iter().zip(m).map(|(k, x)| k - x).collect()
    }

    /// Lattice class of the divisor `sum a_i D_i`.
    pub fn divisor_class(&self, coeffs: &[i64]) -> Result<Vec<i64>> {
        if coeffs.len() != self.divisors.len() {
            return Err(Error::BundleArity {
                expected: self.divisors.len(),
                got: coeffs.len(),
            });
        }
        let mut out = vec![0; self.rank()];
        for (a, row) in coeffs.iter().zip(&self.divisors) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += a * x;
            }
        }
        Ok(out)
    }

    fn check(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::LatticeRank {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }
}

/// A normal-ordered creation monomial: sorted `(mode, basis index)` factors.
pub type Monomial = Vec<(u32, usize)>;

pub fn grading(m: &Monomial) -> u32 {
    m.iter().map(|f| f.0).sum()
}

/// Key of a term: the monomial and the exponents of `z1, z2`.
type Key = (Monomial, [i32; 2]);

/// Finite rational combination of monomials times powers of `z1, z2`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockElement {
    terms: BTreeMap<Key, Rational>,
}

impl FockElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::basis(Monomial::new())
    }

    pub fn basis(m: Monomial) -> Self {
        let mut x = Self::zero();
        x.add_term(m, [0, 0], Rational::one());
        x
    }

    pub fn add_term(&mut self, mut m: Monomial, z: [i32; 2], c: Rational) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let key = (m, z);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, m: &Monomial, z: [i32; 2]) -> Rational {
        self.terms
            .get(&(m.clone(), z))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, [i32; 2], &Rational)> {
        self.terms.iter().map(|((m, z), c)| (m, *z, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_grading(&self) -> Option<u32> {
        self.terms.keys().map(|(m, _)| grading(m)).max()
    }

    pub fn add(&self, other: &FockElement) -> FockElement {
        let mut out = self.clone();
        for ((m, z), c) in &other.terms {
            out.add_term(m.clone(), *z, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockElement) -> FockElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> FockElement {
        let mut out = Self::zero();
        for ((m, z), c) in &self.terms {
            out.add_term(m.clone(), *z, c * k);
        }
        out
    }

    /// Multiplies each term by `z1^{d[0]} z2^{d[1]}`.
    pub fn shift_z(&self, d: [i32; 2]) -> FockElement {
        let mut out = Self::zero();
        for ((m, z), c) in &self.terms {
            out.add_term(m.clone(), [z[0] + d[0], z[1] + d[1]], c.clone());
        }
        out
    }

    /// Keeps terms whose `z1` exponent is at most `max`.
    pub fn truncate_z1(&self, max: i32) -> FockElement {
        let mut out = self.clone();
        out.terms.retain(|(_, z), _| z[0] <= max);
        out
    }

    /// Multiplies the grading-`h` part by `q^h`.
    pub fn q_grading(&self, q: &Rational) -> FockElement {
        let mut out = Self::zero();
        for ((m, z), c) in &self.terms {
            out.add_term(m.clone(), *z, c * rational_pow(q, grading(m) as i64));
        }
        out
    }
}

/// All basis monomials of grading `n` over a lattice of rank `r`: a
/// partition of `n` into modes, each factor coloured by a basis index.
pub fn basis_monomials(rank: usize, n: u32) -> Vec<Monomial> {
    fn go(rest: u32, max: (u32, usize), rank: usize, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for mode in (1..=rest.min(max.0)).rev() {
            let top = if mode == max.0 { max.1 } else { rank - 1 };
            for idx in (0..=top).rev() {
                prefix.push((mode, idx));
                go(rest - mode, (mode, idx), rank, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        if n == 0 {
            out.push(Monomial::new());
        }
        return out;
    }
    go(n, (n, rank - 1), rank, &mut Monomial::new(), &mut out);
    for m in &mut out {
        m.sort();
    }
    out
}

/// `α_m(v) x`, dropping terms of grading above `cap`.
pub fn apply_alpha(lattice: &Lattice, m: i32, v: &[i64], x: &FockElement, cap: u32) -> Result<FockElement> {
    lattice.check(v)?;
    if m == 0 {
        return Err(Error::ZeroMode);
    }
    let mut out = FockElement::zero();
    let n = m.unsigned_abs();
    for ((mono, z), c) in &x.terms {
        if m < 0 {
            if grading(mono) + n > cap {
                continue;
            }
            for (i, vi) in v.iter().enumerate() {
                if *vi != 0 {
                    let mut next = mono.clone();
                    next.push((n, i));
                    out.add_term(next, *z, c * int(*vi));
                }
            }
        } else {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            for (pos, &(mode, idx)) in mono.iter().enumerate() {
                if mode != n {
                    continue;
                }
                let unit: Vec<i64> = (0..lattice.rank()).map(|j| (j == idx) as i64).collect();
                let p = lattice.pair(v, &unit);
                if p == 0 {
                    continue;
                }
                let mut next = mono.clone();
                next.remove(pos);
                out.add_term(next, *z, c * int(sign * n as i64 * p));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `Γ_+`, built from annihilators.
    Plus,
    /// `Γ_-`, built from creators.
    Minus,
}

/// The formal variable of a vertex operator: `z_index` scaled by `scale`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZVar {
    pub index: usize,
    pub scale: Rational,
}

impl ZVar {
    pub fn new(index: usize, scale: Rational) -> Self {
        Self { index, scale }
    }

    pub fn plain(index: usize) -> Self {
        Self::new(index, Rational::one())
    }
}

/// `Γ_±(v, z) x = exp(sum_{n>0} z^{∓n}/n α_{±n}(v)) x`, truncated at grading `cap`.
pub fn gamma_operator(
    lattice: &Lattice,
    side: Side,
    v: &[i64],
    z: &ZVar,
    x: &FockElement,
    cap: u32,
) -> Result<FockElement> {
    lattice.check(v)?;
    let top = x.max_grading().unwrap_or(0).max(cap);
    let step = |y: &FockElement| -> Result<FockElement> {
        let mut acc = FockElement::zero();
        for n in 1..=top as i32 {
            let (mode, zexp) = match side {
                Side::Plus => (n, -n),
                Side::Minus => (-n, n),
            };
            let a = apply_alpha(lattice, mode, v, y, cap)?;
            if a.is_zero() {
                continue;
            }
            let mut d = [0, 0];
            d[z.index] = zexp;
            let k = rational_pow(&z.scale, zexp as i64) / int(n as i64);
            acc = acc.add(&a.shift_z(d).scale(&k));
        }
        Ok(acc)
    };
    let mut out = x.clone();
    let mut term = x.clone();
    let mut k = 1;
    loop {
        term = step(&term)?.scale(&int(k).recip());
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
        k += 1;
    }
    Ok(out)
}

/// `W(M)(z) = Γ_-(-M, -z) Γ_+(-M^D, z)`.
pub fn w_operator(lattice: &Lattice, m: &[i64], z: usize, x: &FockElement, cap: u32) -> Result<FockElement> {
    let neg: Vec<i64> = m.iter().map(|a| -a).collect();
    let neg_dual: Vec<i64> = lattice.dual(m).iter().map(|a| -a).collect();
    let y = gamma_operator(lattice, Side::Plus, &neg_dual, &ZVar::plain(z), x, cap)?;
    gamma_operator(lattice, Side::Minus, &neg, &ZVar::new(z, -Rational::one()), &y, cap)
}

/// Checks `Γ_+(M2, z2) Γ_-(M1, z1) = (1 + z1/z2)^{<M1, M2>} Γ_-(M1, z1) Γ_+(M2, z2)`
/// on every basis vector of grading at most `cap`, for all powers of `z1`
/// up to `cap`. Returns the first failing basis vector.
pub fn gamma_commutation_check(lattice: &Lattice, m1: &[i64], m2: &[i64], cap: u32) -> Result<Option<Monomial>> {
    let k = int(lattice.pair(m1, m2));
    let d = cap as i32;
    let (z1, z2) = (ZVar::plain(0), ZVar::plain(1));
    for g in 0..=cap {
        for mono in basis_monomials(lattice.rank(), g) {
            let x = FockElement::basis(mono.clone());
            let room = g + cap;
            let a = gamma_operator(lattice, Side::Minus, m1, &z1, &x, room)?;
            let lhs = gamma_operator(lattice, Side::Plus, m2, &z2, &a, room)?.truncate_z1(d);
            let b = gamma_operator(lattice, Side::Plus, m2, &z2, &x, room)?;
            let b = gamma_operator(lattice, Side::Minus, m1, &z1, &b, room)?;
            let mut rhs = FockElement::zero();
            for j in 0..=cap {
                let c = binomial(&k, j as usize);
                if !c.is_zero() {
                    rhs = rhs.add(&b.shift_z([j as i32, -(j as i32)]).scale(&c));
                }
            }
            if lhs != rhs.truncate_z1(d) {
                return Ok(Some(mono));
            }
        }
    }
    Ok(None)
}

/// `str(q^N W(M1, M2)(z1, 1/z1))` in `q1 = q z1^{-2}, q2 = z1^2`, exact
/// for `n1, n2 <= n_max`; other coefficients are omitted.
pub fn w_trace(lattice: &Lattice, m1: &[i64], m2: &[i64], n_max: u32) -> Result<Series2> {
    lattice.check(m1)?;
    lattice.check(m2)?;
    let mut out = Series2::zero(2 * n_max);
    for n1 in 0..=n_max {
        let mut by_q2: BTreeMap<u32, Rational> = BTreeMap::new();
        for mono in basis_monomials(lattice.rank(), n1) {
            let x = FockElement::basis(mono.clone());
            let y = w_operator(lattice, m1, 0, &x, n_max)?;
            let y = w_operator(lattice, m2, 1, &y, n_max)?;
            for (m, z, c) in y.terms() {
                if *m != mono {
                    continue;
                }
                // q^{n1} z1^{z0} z2^{z1} at z2 = 1/z1 is q1^{n1} q2^{n1 + (z0 - z1)/2}.
                let k = z[0] - z[1];
                debug_assert!(k % 2 == 0);
                let n2 = n1 as i32 + k / 2;
                *by_q2.entry(n2 as u32).or_insert_with(Rational::zero) += c;
            }
        }
        for (n2, c) in by_q2 {
            if n2 <= n_max {
                out.add_term(n1, n2, c);
            }
        }
    }
    Ok(out)
}

/// The product side of the trace identity,
/// `prod_{n>=0} (1 - q1^n q2^{n+1})^{<M1, M2^D>}
///  prod_{n>0} (1 - (q1 q2)^n)^{<M1^D, M1> + <M2^D, M2> - e}
///  prod_{n>0} (1 - q1^n q2^{n-1})^{<M1^D, M2>}`, to total degree `2 n_max`.
pub fn str_product(lattice: &Lattice, m1: &[i64], m2: &[i64], n_max: u32) -> Result<Series2> {
    let cap = 2 * n_max;
    let a = int(lattice.pair(m1, &lattice.dual(m2)));
    let b = int(
        lattice.pair(&lattice.dual(m1), m1) + lattice.pair(&lattice.dual(m2), m2) - lattice.euler(),
    );
    let c = int(lattice.pair(&lattice.dual(m1), m2));
    let mut factors = Vec::new();
    for n in 0..=cap {
        factors.push(((n, n + 1), a.clone()));
        if n > 0 {
            factors.push(((n, n), b.clone()));
            factors.push(((n, n - 1), c.clone()));
        }
    }
    crate::algebra::product_formula(&factors, cap)
}

/// Coefficients with `n1, n2 <= n_max` where two series differ.
pub fn box_mismatches(x: &Series2, y: &Series2, n_max: u32) -> Vec<(u32, u32, Rational, Rational)> {
    let mut out = Vec::new();
    for n1 in 0..=n_max {
        for n2 in 0..=n_max {
            let (a, b) = (x.coeff(n1, n2), y.coeff(n1, n2));
            if a != b {
                out.push((n1, n2, a, b));
            }
        }
    }
    out
}

/// Dimension of each graded piece, for comparison with fixed-point counts.
pub fn graded_dimensions(rank: usize, n_max: u32) -> Vec<usize> {
    (0..=n_max).map(|n| basis_monomials(rank, n).len()).collect()
}

/// Fixed points of `S^[n]` counted by chart distributions, used to check
/// the graded dimensions against the surface.
pub fn hilbert_fixed_points(surface: &ToricSurface, n_max: u32) -> Vec<usize> {
    (0..=n_max).map(|n| partition_tuples(surface, n).len()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rank_one(p: i64) -> Lattice {
        Lattice::new(vec![vec![p]], vec![0], 1).unwrap()
    }

    #[test]
    fn surface_lattices() {
        let p2 = ToricSurface::builtin("p2").unwrap();
        let l = Lattice::from_surface(&p2).unwrap();
        assert_eq!(l.rank(), 3);
        assert_eq!(l.pair(l.canonical(), l.canonical()), 9);
        let h = l.divisor_class(&[1, 0, 0]).unwrap();
        assert_eq!(l.pair(&h, &h), 1);
        assert_eq!(l.pair(&h, l.canonical()), -3);
        let p1 = ToricSurface::builtin("p1xp1").unwrap();
        let l = Lattice::from_surface(&p1).unwrap();
        assert_eq!(l.rank(), 4);
        assert_eq!(l.pair(l.canonical(), l.canonical()), 8);
    }

    #[test]
    fn lattice_pairing_matches_intersections() {
        for name in ["p2", "p1xp1", "hirzebruch(1)", "hirzebruch(3)"] {
            let s = ToricSurface::builtin(name).unwrap();
            let l = Lattice::from_surface(&s).unwrap();
            let k = s.rays().len();
            for i in 0..k {
                for j in 0..k {
                    let mut a = vec![0; k];
                    let mut b = vec![0; k];
                    a[i] += 1;
                    b[j] += 2;
                    b[i] -= 1;
                    let want = s
                        .intersection(&s.line_bundle("a", a.clone()).unwrap(), &s.line_bundle("b", b.clone()).unwrap())
                        .unwrap();
                    let got = l.pair(&l.divisor_class(&a).unwrap(), &l.divisor_class(&b).unwrap());
                    assert_eq!(got, want, "{name} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn bad_lattices() {
        assert!(Lattice::new(vec![vec![0, 1], vec![2, 0]], vec![0, 0], 2).is_err());
        assert!(Lattice::new(vec![vec![0, 1]], vec![0], 2).is_err());
    }

    #[test]
    fn basis_sizes() {
        // Graded dimensions of the rank-e Fock space are the Göttsche numbers.
        assert_eq!(graded_dimensions(3, 4), vec![1, 3, 9, 22, 51]);
        let p1 = ToricSurface::builtin("p1xp1").unwrap();
        assert_eq!(graded_dimensions(4, 4), hilbert_fixed_points(&p1, 4));
    }

    #[test]
    fn single_contraction() {
        let l = Lattice::new(vec![vec![0, 1], vec![1, 0]], vec![0, 0], 2).unwrap();
        let vac = FockElement::vacuum();
        assert!(apply_alpha(&l, 1, &[1, 0], &vac, 4).unwrap().is_zero());
        let x = apply_alpha(&l, -1, &[0, 1], &vac, 4).unwrap();
        assert_eq!(grading(x.terms().next().unwrap().0), 1);
        let y = apply_alpha(&l, 1, &[1, 0], &x, 4).unwrap();
        assert_eq!(y, vac);
        assert_eq!(apply_alpha(&l, 0, &[1, 0], &vac, 4), Err(Error::ZeroMode));
    }

    #[test]
    fn heisenberg_relations() {
        let l = Lattice::new(vec![vec![1, 2], vec![2, -1]], vec![0, 0], 2).unwrap();
        let basis = [vec![1, 0], vec![0, 1]];
        let cap = 12;
        for g in 0..=4 {
            for mono in basis_monomials(2, g) {
                let x = FockElement::basis(mono);
                for m in [-3, -2, -1, 1, 2, 3] {
                    for n in [-3, -2, -1, 1, 2, 3] {
                        for a in &basis {
                            for b in &basis {
                                let ab = apply_alpha(&l, m, a, &apply_alpha(&l, n, b, &x, cap).unwrap(), cap).unwrap();
                                let ba = apply_alpha(&l, n, b, &apply_alpha(&l, m, a, &x, cap).unwrap(), cap).unwrap();
                                let want = if m + n == 0 {
                                    let sign = if (m - 1).rem_euclid(2) == 0 { 1 } else { -1 };
                                    x.scale(&int(sign * m as i64 * l.pair(a, b)))
                                } else {
                                    FockElement::zero()
                                };
                                assert_eq!(ab.sub(&ba), want, "m={m} n={n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_on_vacuum() {
        let l = rank_one(1);
        let vac = FockElement::vacuum();
        let z = ZVar::plain(0);
        assert_eq!(gamma_operator(&l, Side::Minus, &[0], &z, &vac, 3).unwrap(), vac);
        assert_eq!(gamma_operator(&l, Side::Plus, &[1], &z, &vac, 3).unwrap(), vac);
        let g = gamma_operator(&l, Side::Minus, &[1], &z, &vac, 1).unwrap();
        let mut want = vac.clone();
        want.add_term(vec![(1, 0)], [1, 0], int(1));
        assert_eq!(g, want);
    }

    #[test]
    fn gamma_commutation() {
        assert_eq!(gamma_commutation_check(&rank_one(1), &[1], &[1], 2).unwrap(), None);
        assert_eq!(gamma_commutation_check(&rank_one(1), &[1], &[0], 2).unwrap(), None);
        assert_eq!(gamma_commutation_check(&rank_one(-2), &[1], &[1], 2).unwrap(), None);
        let p1 = Lattice::from_surface(&ToricSurface::builtin("p1xp1").unwrap()).unwrap();
        let m1 = p1.divisor_class(&[1, 0, 0, 0]).unwrap();
        let m2 = p1.divisor_class(&[0, 1, 0, 0]).unwrap();
        assert_eq!(gamma_commutation_check(&p1, &m1, &m2, 2).unwrap(), None);
    }

    #[test]
    fn commutation_detects_a_wrong_exponent() {
        // With <M1, M2> = 1 the two orders differ at the vacuum.
        let l = rank_one(1);
        let vac = FockElement::vacuum();
        let a = gamma_operator(&l, Side::Minus, &[1], &ZVar::plain(0), &vac, 2).unwrap();
        let lhs = gamma_operator(&l, Side::Plus, &[1], &ZVar::plain(1), &a, 2).unwrap();
        let b = gamma_operator(&l, Side::Plus, &[1], &ZVar::plain(1), &vac, 2).unwrap();
        let rhs = gamma_operator(&l, Side::Minus, &[1], &ZVar::plain(0), &b, 2).unwrap();
        assert_ne!(lhs.truncate_z1(2), rhs.truncate_z1(2));
        // Vacuum expectation: 1 + z1/z2 from a single contraction.
        assert_eq!(lhs.coeff(&Vec::new(), [1, -1]), int(1));
    }

    #[test]
    fn q_conjugation() {
        let l = Lattice::new(vec![vec![2, 1], vec![1, 0]], vec![0, 0], 2).unwrap();
        let q = rat(3, 2);
        let m = [1, -1];
        for g in 0..=3 {
            for mono in basis_monomials(2, g) {
                let x = FockElement::basis(mono);
                let cap = 6;
                let lhs = gamma_operator(&l, Side::Minus, &m, &ZVar::plain(0), &x, cap)
                    .unwrap()
                    .q_grading(&q);
                let rhs = gamma_operator(&l, Side::Minus, &m, &ZVar::new(0, q.clone()), &x.q_grading(&q), cap).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trivial_bundles_give_gottsche() {
        let p2 = Lattice::from_surface(&ToricSurface::builtin("p2").unwrap()).unwrap();
        let t = w_trace(&p2, &[0, 0, 0], &[0, 0, 0], 2).unwrap();
        assert_eq!(t.constant(), int(1));
        let p = str_product(&p2, &[0, 0, 0], &[0, 0, 0], 2).unwrap();
        assert!(box_mismatches(&t, &p, 2).is_empty());
    }

    #[test]
    fn trace_matches_product_on_p2() {
        let l = Lattice::from_surface(&ToricSurface::builtin("p2").unwrap()).unwrap();
        let h = l.divisor_class(&[1, 0, 0]).unwrap();
        let t = w_trace(&l, &h, &[0, 0, 0], 2).unwrap();
        let p = str_product(&l, &h, &[0, 0, 0], 2).unwrap();
        assert_eq!(box_mismatches(&t, &p, 2), vec![]);
    }
}
