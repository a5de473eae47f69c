//! Named verification suites, each a list of pass/fail checks.

use std::fmt;

use crate::algebra::{int, Rational};
use crate::engine::{
    closed_form_series, diagonal, fixed_point_counts,
    gottsche_series, mismatches, nested_route, product_route, universal_series_fit,
    z_nest_series, Integrand,
};
use crate::error::Result;
use crate::fock::{box_mismatches, gamma_commutation_check, str_product, w_trace, Lattice};
use crate::oracle::tangent_oracle;
use crate::partitions::enumerate_nested_pairs;
use crate::toric::ToricSurface;
use crate::vertex::{virtual_tangent_character, Specializer};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Gottsche,
    Nestprod,
    Theorem4,
    Universality,
    Fock,
    Oracle,
}

impl Suite {
    pub fn default_cap(self) -> u32 {
        match self {
            Suite::Gottsche => 6,
            Suite::Nestprod | Suite::Theorem4 => 5,
            Suite::Universality => 4,
            Suite::Fock | Suite::Oracle => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {}: {}", self.name, self.detail)
        }
    }
}

fn check(name: String, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

/// Surfaces and bundles of the route and closed-form comparisons.
pub fn standard_matrix() -> Result<Vec<(ToricSurface, Vec<&'static str>)>> {
    Ok(vec![
        (ToricSurface::builtin("p2")?, vec!["O", "O(1)", "K"]),
        (ToricSurface::builtin("p1xp1")?, vec!["O", "O(1,0)", "K"]),
    ])
}

pub fn run(suite: Suite, cap: u32, seed: u64) -> Result<Vec<Check>> {
    let mut sp = Specializer::new(seed);
    match suite {
        Suite::Gottsche => gottsche(cap),
        Suite::Nestprod => nestprod(cap, &mut sp),
        Suite::Theorem4 => theorem4(cap, &mut sp),
        Suite::Universality => universality(cap, &mut sp),
        Suite::Fock => fock(cap),
        Suite::Oracle => oracle(cap),
    }
}

fn gottsche(cap: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in ["p2", "p1xp1", "hirzebruch(1)"] {
        let s = ToricSurface::builtin(name)?;
        let counts: Vec<Rational> = fixed_point_counts(&s, cap)
            .into_iter()
            .map(|c| int(c as i64))
            .collect();
        let product = diagonal(&gottsche_series(s.euler_number() as u64, cap)?, cap);
        let detail = format!("counts {} product {}", join(&counts), join(&product));
        out.push(check(format!("gottsche {name} n<={cap}"), counts == product, detail));
    }
    Ok(out)
}

fn join(xs: &[Rational]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn nestprod(cap: u32, sp: &mut Specializer) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (s, labels) in standard_matrix()? {
        for label in labels {
            let m = s.bundle(label)?;
            let integrand = Integrand::single(&m);
            for total in 0..=cap {
                for n2 in 0..=total / 2 {
                    let n1 = total - n2;
                    let a = nested_route(&s, &integrand, n1, n2, sp)?.value;
                    let b = product_route(&s, &integrand, n1, n2, sp)?.value;
                    out.push(check(
                        format!("nestprod {} {label} ({n1},{n2})", s.name()),
                        a == b,
                        format!("nested {a} product {b}"),
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn theorem4(cap: u32, sp: &mut Specializer) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (s, labels) in standard_matrix()? {
        for label in labels {
            let m = s.bundle(label)?;
            let z = z_nest_series(&s, &m, cap, sp)?;
            let c = closed_form_series(&s.chern_numbers(&m)?, cap)?;
            let bad = mismatches(&z, &c);
            let detail = match bad.first() {
                None => String::new(),
                Some((n1, n2, a, b)) => format!("({n1},{n2}) localization {a} closed form {b}"),
            };
            out.push(check(format!("theorem4 {} {label} cap {cap}", s.name()), bad.is_empty(), detail));
        }
    }
    Ok(out)
}

fn universality(cap: u32, sp: &mut Specializer) -> Result<Vec<Check>> {
    let fit = universal_series_fit(cap, sp)?;
    let f1 = ToricSurface::builtin("hirzebruch(1)")?;
    let mut out = Vec::new();
    for label in ["O", "E", "F"] {
        let m = f1.bundle(label)?;
        let direct = z_nest_series(&f1, &m, cap, sp)?;
        let predicted = fit.predict(&f1.chern_numbers(&m)?)?;
        let bad = mismatches(&direct, &predicted);
        let detail = match bad.first() {
            None => String::new(),
            Some((n1, n2, a, b)) => format!("({n1},{n2}) direct {a} predicted {b}"),
        };
        out.push(check(
            format!("universality hirzebruch(1) {label} cap {cap}"),
            bad.is_empty(),
            detail,
        ));
    }
    Ok(out)
}

/// Bundle pairs for the trace identity, as divisor coefficients.
pub fn fock_pairs() -> Vec<(&'static str, Vec<i64>, Vec<i64>)> {
    vec![
        ("p2", vec![0, 0, 0], vec![0, 0, 0]),
        ("p2", vec![1, 0, 0], vec![0, 0, 0]),
        ("p2", vec![1, 0, 0], vec![0, 1, 0]),
        ("p2", vec![-1, -1, -1], vec![2, 0, 0]),
        ("p1xp1", vec![1, 0, 0, 0], vec![0, 1, 0, 0]),
        ("p1xp1", vec![0, 0, 0, 0], vec![1, 1, 0, 0]),
        ("p1xp1", vec![-1, -1, -1, -1], vec![1, 0, 0, 0]),
    ]
}

fn fock(cap: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, a, b) in fock_pairs() {
        let s = ToricSurface::builtin(name)?;
        let l = Lattice::from_surface(&s)?;
        let (m1, m2) = (l.divisor_class(&a)?, l.divisor_class(&b)?);
        let t = w_trace(&l, &m1, &m2, cap)?;
        let p = str_product(&l, &m1, &m2, cap)?;
        let bad = box_mismatches(&t, &p, cap);
        let detail = match bad.first() {
            None => String::new(),
            Some((n1, n2, x, y)) => format!("({n1},{n2}) trace {x} product {y}"),
        };
        out.push(check(format!("fock trace {name} {a:?} {b:?} n<={cap}"), bad.is_empty(), detail));
        let failure = gamma_commutation_check(&l, &m1, &m2, cap)?;
        out.push(check(
            format!("fock commutation {name} {a:?} {b:?} grading<={cap}"),
            failure.is_none(),
            failure.map(|m| format!("basis vector {m:?}")).unwrap_or_default(),
        ));
    }
    Ok(out)
}

fn oracle(cap: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n1 in 0..=cap {
        let mut bad = None;
        let mut count = 0;
        for n2 in 0..=n1 {
            for p in enumerate_nested_pairs(n1, n2)? {
                count += 1;
                let (a, b) = (virtual_tangent_character(&p), tangent_oracle(&p));
                if a != b && bad.is_none() {
                    bad = Some(format!("{} ⊇ {}: closed form {a}, oracle {b}", p.outer, p.inner));
                }
            }
        }
        out.push(check(
            format!("oracle n1={n1} ({count} pairs)"),
            bad.is_none(),
            bad.unwrap_or_default(),
        ));
    }
    Ok(out)
}
