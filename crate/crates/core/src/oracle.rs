//! Brute-force equivariant Ext characters on the affine plane.
//!
//! Independent of the closed forms in [`crate::vertex`]: the Euler
//! characteristic `chi(I_a, I_b ⊗ t^m) = sum_i (-1)^i Ext^i` is computed one
//! weight at a time from the Taylor resolution of `I_a`, whose terms are
//! `R(-lcm_S)` over nonempty subsets `S` of the minimal generators.
//! A map out of a generator of weight `g` landing in weight `w` has weight
//! `w - g`, so `Hom(R, R)` has character `sum_{a,b >= 0} t1^a t2^b`.
//!
//! Both `chi(R, R)` and `chi(I_a, I_b)` are infinite, but their difference
//! is supported in a box around the origin. The box is grown until its
//! boundary carries no weight.

use crate::algebra::IntLaurent;
use crate::partitions::{NestedPair, Partition};
use crate::vertex::{Character, Weight};

/// Minimal monomial generators of `I_mu`, found by scanning a grid: the
/// monomials outside `mu` whose left and lower neighbours are in `mu` or
/// off the quadrant.
pub fn scan_generators(mu: &Partition) -> Vec<(i64, i64)> {
    let reach = mu.len() as i64 + mu.part(0) as i64 + 1;
    let mut gens = Vec::new();
    for a in 0..=reach {
        for b in 0..=reach {
            if in_ideal(mu, a, b)
                && (a == 0 || !in_ideal(mu, a - 1, b))
                && (b == 0 || !in_ideal(mu, a, b - 1))
            {
                gens.push((a, b));
            }
        }
    }
    gens
}

fn in_ideal(mu: &Partition, a: i64, b: i64) -> bool {
    a >= 0 && b >= 0 && !mu.has_cell(a as u32, b as u32)
}

/// Taylor resolution terms: `(lcm_S, sign)` with sign `(-1)^{|S|-1}`.
fn taylor_terms(mu: &Partition) -> Vec<((i64, i64), i64)> {
    let gens = scan_generators(mu);
    let k = gens.len();
    let mut out = Vec::with_capacity((1 << k) - 1);
    for mask in 1u32..(1 << k) {
        let mut lcm = (0, 0);
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = (lcm.0.max(g.0), lcm.1.max(g.1));
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        out.push((lcm, sign));
    }
    out
}

/// Multiplicity of weight `w` in `chi(I_a, I_b ⊗ t^m)`.
fn chi_weight(terms: &[((i64, i64), i64)], mu_b: &Partition, m: Weight, w: (i64, i64)) -> i64 {
    terms
        .iter()
        .filter(|((la, lb), _)| in_ideal(mu_b, w.0 - m.a + la, w.1 - m.b + lb))
        .map(|(_, s)| s)
        .sum()
}

/// Multiplicity of weight `w` in `chi(R, R ⊗ t^m)`.
fn chi_free_weight(m: Weight, w: (i64, i64)) -> i64 {
    (w.0 - m.a >= 0 && w.1 - m.b >= 0) as i64
}

/// Evaluates a weight function on the box `[-r, r]^2`, doubling `r` until
/// the boundary ring is empty.
fn collect_box(start: i64, f: impl Fn((i64, i64)) -> i64) -> Character {
    let mut r = start.max(1);
    loop {
        let boundary_clear = (-r..=r).all(|t| {
            f((t, r)) == 0 && f((t, -r)) == 0 && f((r, t)) == 0 && f((-r, t)) == 0
        });
        if boundary_clear {
            let mut poly = IntLaurent::zero();
            for a in -r..=r {
                for b in -r..=r {
                    let c = f((a, b));
                    if c != 0 {
                        poly.add_term((a as i32, b as i32), c);
                    }
                }
            }
            return Character::new(poly);
        }
        r *= 2;
    }
}

fn window(parts: &[&Partition], m: Weight) -> i64 {
    let span: i64 = parts
        .iter()
        .map(|p| p.len() as i64 + p.part(0) as i64)
        .sum();
    span + 2 + m.a.abs() + m.b.abs()
}

/// `chi(R, R ⊗ t^m) - chi(I_a, I_b ⊗ t^m)`.
pub fn block_oracle(mu_a: &Partition, mu_b: &Partition, m: Weight) -> Character {
    let terms = taylor_terms(mu_a);
    collect_box(window(&[mu_a, mu_b], m), |w| {
        chi_free_weight(m, w) - chi_weight(&terms, mu_b, m, w)
    })
}

/// `chi(R, R) - chi(I_1, I_1) - chi(I_2, I_2) + chi(I_1, I_2)`, assembled
/// weight by weight.
pub fn tangent_oracle(p: &NestedPair) -> Character {
    let (o, i) = (&p.outer, &p.inner);
    let (to, ti) = (taylor_terms(o), taylor_terms(i));
    let zero = Weight::default();
    collect_box(window(&[o, i], zero), |w| {
        chi_free_weight(zero, w) - chi_weight(&to, o, zero, w) - chi_weight(&ti, i, zero, w)
            + chi_weight(&to, i, zero, w)
    })
}
