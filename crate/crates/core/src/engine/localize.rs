//! Atiyah–Bott sums over fixed points, evaluated at numeric
//! specializations with the cohomological degree kept in a grading variable.

use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{GradedPoly, Rational};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::toric::{EquivariantLineBundle, ToricSurface};
use crate::vertex::{
    block_character, chern_poly, euler_class, virtual_tangent_character, Character,
    Specialization, Specializer,
};

use super::fixed::{enumerate_global_fixed_points, partition_tuples, GlobalFixedPoint};

/// `prod c(E_{M_i}) / prod c(E_{N_j})`.
#[derive(Clone, Debug)]
pub struct Integrand {
    pub numer: Vec<EquivariantLineBundle>,
    pub denom: Vec<EquivariantLineBundle>,
}

impl Integrand {
    pub fn single(m: &EquivariantLineBundle) -> Self {
        Self {
            numer: vec![m.clone()],
            denom: Vec::new(),
        }
    }

    pub fn ratio(numer: &[EquivariantLineBundle], denom: &[EquivariantLineBundle]) -> Self {
        Self {
            numer: numer.to_vec(),
            denom: denom.to_vec(),
        }
    }

    fn evaluate(&self, blocks: &[Character], s: &Specialization, cap: usize) -> Result<GradedPoly> {
        let mut acc = GradedPoly::one(cap);
        for m in &self.numer {
            let c = twisted_sum(blocks, m);
            check_generic(&c, s)?;
            acc = &acc * &chern_poly(&c, s, cap);
        }
        for m in &self.denom {
            let c = twisted_sum(blocks, m);
            check_generic(&c, s)?;
            acc = &acc * &chern_poly(&c, s, cap).inverse()?;
        }
        Ok(acc)
    }
}

/// A fixed-point value that did not depend on the specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized {
    pub value: Rational,
    pub specializations: [Specialization; 2],
}

/// Rejects specializations at which a nontrivial weight of `c` vanishes.
pub(crate) fn check_generic(c: &Character, s: &Specialization) -> Result<()> {
    for (w, _) in c.weights() {
        if !w.is_trivial() && w.eval(s).is_zero() {
            return Err(Error::DegenerateSpecialization);
        }
    }
    Ok(())
}

/// Chart-local character moved to global torus weights.
pub(crate) fn globalize(surface: &ToricSurface, chart: usize, c: &Character) -> Character {
    let ch = surface.charts()[chart];
    c.substitute_unchecked(ch.u, ch.v)
}

fn twisted_sum(blocks: &[Character], m: &EquivariantLineBundle) -> Character {
    blocks
        .iter()
        .enumerate()
        .map(|(p, b)| b.twist(m.weight(p)))
        .sum()
}

/// Global characters of `E` chart by chart: `V(a_P, b_P)` in global weights.
pub(crate) fn global_blocks(surface: &ToricSurface, a: &[Partition], b: &[Partition]) -> Vec<Character> {
    a.iter()
        .zip(b)
        .enumerate()
        .map(|(p, (x, y))| globalize(surface, p, &block_character(x, y)))
        .collect()
}

/// Sums graded contributions in parallel, reading the value in `degree`
/// after checking that every lower degree cancels.
fn graded_total<P: Sync>(
    points: &[P],
    degree: usize,
    s: &Specialization,
    f: impl Fn(&P, &Specialization) -> Result<GradedPoly> + Sync,
) -> Result<Rational> {
    let total = points
        .par_iter()
        .map(|p| f(p, s))
        .try_reduce(|| GradedPoly::zero(degree), |a, b| Ok(&a + &b))?;
    for k in 0..degree {
        let value = total.coeff(k);
        if !value.is_zero() {
            return Err(Error::SubDegreeResidue {
                degree: k,
                expected: degree,
                value,
            });
        }
    }
    Ok(total.coeff(degree))
}

/// Runs `graded_total` at two independent draws and demands equal values.
pub(crate) fn localize<P: Sync>(
    points: &[P],
    degree: usize,
    specializer: &mut Specializer,
    f: impl Fn(&P, &Specialization) -> Result<GradedPoly> + Sync,
) -> Result<Localized> {
    let (s1, first) = specializer.draw_valid(|s| graded_total(points, degree, s, &f))?;
    let (s2, second) = specializer.draw_valid(|s| graded_total(points, degree, s, &f))?;
    if first != second {
        return Err(Error::SpecializationDisagreement { first, second });
    }
    Ok(Localized {
        value: first,
        specializations: [s1, s2],
    })
}

struct NestedPoint {
    tangent: Character,
    blocks: Vec<Character>,
}

/// `int_{[S^[n1>=n2]]^vir} integrand`, summed over nested fixed points.
pub fn nested_route(
    surface: &ToricSurface,
    integrand: &Integrand,
    n1: u32,
    n2: u32,
    specializer: &mut Specializer,
) -> Result<Localized> {
    let points: Vec<NestedPoint> = enumerate_global_fixed_points(surface, n1, n2)?
        .iter()
        .map(|p| nested_point(surface, p))
        .collect();
    let degree = (n1 + n2) as usize;
    localize(&points, degree, specializer, |p, s| {
        let e = euler_class(&p.tangent, s)?;
        Ok(integrand.evaluate(&p.blocks, s, degree)?.scale(&e.recip()))
    })
}

fn nested_point(surface: &ToricSurface, p: &GlobalFixedPoint) -> NestedPoint {
    let tangent = p
        .pairs
        .iter()
        .enumerate()
        .map(|(i, q)| globalize(surface, i, &virtual_tangent_character(q)))
        .sum();
    let (outer, inner): (Vec<Partition>, Vec<Partition>) = p
        .pairs
        .iter()
        .map(|q| (q.outer.clone(), q.inner.clone()))
        .unzip();
    NestedPoint {
        tangent,
        blocks: global_blocks(surface, &outer, &inner),
    }
}

/// A fixed point of `S^[n1] x S^[n2]` with its tangent character and the
/// chart blocks of `E^{n1,n2}`.
pub struct ProductPoint {
    pub outer: Vec<Partition>,
    pub inner: Vec<Partition>,
    pub tangent: Character,
    pub blocks: Vec<Character>,
}

impl ProductPoint {
    /// Global character of `E^{n1,n2}_M`.
    pub fn bundle_character(&self, m: &EquivariantLineBundle) -> Character {
        twisted_sum(&self.blocks, m)
    }
}

pub fn product_points(surface: &ToricSurface, n1: u32, n2: u32) -> Vec<ProductPoint> {
    let outers = partition_tuples(surface, n1);
    let inners = partition_tuples(surface, n2);
    let mut out = Vec::with_capacity(outers.len() * inners.len());
    for a in &outers {
        for b in &inners {
            let tangent = a
                .iter()
                .zip(b)
                .enumerate()
                .map(|(p, (x, y))| {
                    globalize(surface, p, &(&block_character(x, x) + &block_character(y, y)))
                })
                .sum();
            out.push(ProductPoint {
                outer: a.clone(),
                inner: b.clone(),
                tangent,
                blocks: global_blocks(surface, a, b),
            });
        }
    }
    out
}

/// `int_{S^[n1] x S^[n2]} c_{n1+n2}(E^{n1,n2}) integrand`.
pub fn product_route(
    surface: &ToricSurface,
    integrand: &Integrand,
    n1: u32,
    n2: u32,
    specializer: &mut Specializer,
) -> Result<Localized> {
    let points = product_points(surface, n1, n2);
    let degree = (n1 + n2) as usize;
    localize(&points, degree, specializer, |p, s| {
        let e_char: Character = p.blocks.iter().cloned().sum();
        check_generic(&e_char, s)?;
        check_generic(&p.tangent, s)?;
        let ctop = chern_poly(&e_char, s, degree).coeff(degree);
        if ctop.is_zero() {
            return Ok(GradedPoly::zero(degree));
        }
        let e = euler_class(&p.tangent, s)?;
        Ok(integrand.evaluate(&p.blocks, s, degree)?.scale(&(ctop / e)))
    })
}

/// `int_{S^[n1] x S^[n2]} f`, where `f` is a scalar top-degree class given
/// pointwise.
pub fn product_integral(
    surface: &ToricSurface,
    n1: u32,
    n2: u32,
    specializer: &mut Specializer,
    f: impl Fn(&ProductPoint, &Specialization) -> Result<Rational> + Sync,
) -> Result<Localized> {
    let points = product_points(surface, n1, n2);
    localize(&points, 0, specializer, |p, s| {
        check_generic(&p.tangent, s)?;
        let e = euler_class(&p.tangent, s)?;
        Ok(GradedPoly::homogeneous(0, 0, f(p, s)? / e))
    })
}
