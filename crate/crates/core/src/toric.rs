//! Smooth projective toric surfaces as fans of rays, their fixed-point
//! charts, torus-equivariant line bundles and intersection numbers by
//! Atiyah–Bott localization.
//!
//! Each two-dimensional cone `(r_i, r_{i+1})` is a fixed point `P` with an
//! affine chart `Spec C[x, y]`. The coordinates have torus characters
//! `u_P, v_P`, the basis dual to the two rays; the tangent space at `P` has
//! weights `-u_P, -v_P`. A divisor `sum a_i D_i` is linearized by the local
//! generator `chi^{m_P}` with `<m_P, r> = -a_r` on the two rays of the cone.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::vertex::{Specialization, Specializer, Weight};

/// Seed for the localization checks in [`ToricSurface::intersection`].
const INTERSECTION_SEED: u64 = 0x1c05_0b2d;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chart {
    /// Indices of the two rays spanning the cone.
    pub rays: (usize, usize),
    /// Character of the first coordinate function.
    pub u: Weight,
    /// Character of the second coordinate function.
    pub v: Weight,
}

impl Chart {
    /// Euler class of the tangent space, `(-u)(-v)`.
    pub fn tangent_euler(&self, s: &Specialization) -> Result<Rational> {
        let e = self.u.eval(s) * self.v.eval(s);
        if e.is_zero() {
            return Err(Error::DegenerateSpecialization);
        }
        Ok(e)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ToricSurface {
    name: String,
    rays: Vec<[i64; 2]>,
    charts: Vec<Chart>,
    bundles: BTreeMap<String, Vec<i64>>,
}

fn det(p: [i64; 2], q: [i64; 2]) -> i64 {
    p[0] * q[1] - p[1] * q[0]
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl ToricSurface {
    /// Builds a surface from cyclically ordered rays. Clockwise input is
    /// reversed; every adjacent pair must span a unimodular cone and the
    /// rays must wind around the origin exactly once.
    pub fn new(name: impl Into<String>, mut rays: Vec<[i64; 2]>) -> Result<Self> {
        let n = rays.len();
        if n < 3 {
            return Err(Error::InvalidFan(format!("need at least 3 rays, got {n}")));
        }
        if let Some(r) = rays.iter().find(|r| gcd(r[0], r[1]) != 1) {
            return Err(Error::InvalidFan(format!("ray {r:?} is not primitive")));
        }
        if det(rays[0], rays[1]) < 0 {
            rays.reverse();
        }
        let mut winding = 0;
        for i in 0..n {
            let (p, q) = (rays[i], rays[(i + 1) % n]);
            if det(p, q) != 1 {
                return Err(Error::InvalidFan(format!(
                    "cone ({p:?}, {q:?}) is not smooth and counterclockwise"
                )));
            }
            if p[1] < 0 && q[1] >= 0 {
                winding += 1;
            }
        }
        if winding != 1 {
            return Err(Error::InvalidFan(format!("rays wind {winding} times")));
        }
        let charts = (0..n)
            .map(|i| {
                let (p, q) = (rays[i], rays[(i + 1) % n]);
                Chart {
                    rays: (i, (i + 1) % n),
                    u: Weight::new(q[1], -q[0]),
                    v: Weight::new(-p[1], p[0]),
                }
            })
            .collect();
        let mut bundles = BTreeMap::new();
        bundles.insert("O".to_string(), vec![0; n]);
        bundles.insert("K".to_string(), vec![-1; n]);
        Ok(Self {
            name: name.into(),
            rays,
            charts,
            bundles,
        })
    }

    /// `p2`, `p1xp1` or `hirzebruch(a)` (also written `f<a>`).
    pub fn builtin(name: &str) -> Result<Self> {
        let key = name.trim().to_ascii_lowercase();
        let mut s = match key.as_str() {
            "p2" => Self::new("p2", vec![[1, 0], [0, 1], [-1, -1]])?,
            "p1xp1" => Self::new("p1xp1", vec![[1, 0], [0, 1], [-1, 0], [0, -1]])?,
            _ => {
                let a = key
                    .strip_prefix("hirzebruch(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| key.strip_prefix('f'))
                    .and_then(|a| a.trim().parse::<i64>().ok())
                    .ok_or_else(|| Error::UnknownSurface(name.to_string()))?;
                Self::new(
                    format!("hirzebruch({a})"),
                    vec![[1, 0], [0, 1], [-1, a], [0, -1]],
                )?
            }
        };
        match s.name.as_str() {
            "p2" => {
                s.bundles.insert("O(1)".into(), vec![1, 0, 0]);
            }
            "p1xp1" => {
                s.bundles.insert("O(1,0)".into(), vec![1, 0, 0, 0]);
                s.bundles.insert("O(0,1)".into(), vec![0, 1, 0, 0]);
                s.bundles.insert("O(1,1)".into(), vec![1, 1, 0, 0]);
            }
            _ => {
                // D_0 is a fibre, D_1 the negative section.
                s.bundles.insert("F".into(), vec![1, 0, 0, 0]);
                s.bundles.insert("E".into(), vec![0, 1, 0, 0]);
            }
        }
        Ok(s)
    }

    /// Reads a surface config file; see [`SurfaceConfig`].
    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        SurfaceConfig::parse(&text)?.build()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rays(&self) -> &[[i64; 2]] {
        &self.rays
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    /// Topological Euler number, the number of fixed points.
    pub fn euler_number(&self) -> usize {
        self.charts.len()
    }

    pub fn bundle_labels(&self) -> impl Iterator<Item = &str> {
        self.bundles.keys().map(String::as_str)
    }

    /// Looks up a named bundle, or parses a comma-separated coefficient list.
    pub fn bundle(&self, spec: &str) -> Result<EquivariantLineBundle> {
        if let Some(c) = self.bundles.get(spec.trim()) {
            return self.line_bundle(spec.trim(), c.clone());
        }
        let coeffs: std::result::Result<Vec<i64>, _> = spec
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect();
        match coeffs {
            Ok(c) => self.line_bundle(spec.trim(), c),
            Err(_) => Err(Error::UnknownBundle(spec.to_string())),
        }
    }

    pub fn trivial_bundle(&self) -> EquivariantLineBundle {
        self.line_bundle("O", vec![0; self.rays.len()])
            .expect("arity matches")
    }

    pub fn canonical_bundle(&self) -> EquivariantLineBundle {
        self.line_bundle("K", vec![-1; self.rays.len()])
            .expect("arity matches")
    }

    /// Linearizes `O(sum a_i D_i)`: at the chart spanned by rays `i, j` the
    /// local generator has character `m = -a_i u - a_j v`.
    pub fn line_bundle(&self, label: &str, coeffs: Vec<i64>) -> Result<EquivariantLineBundle> {
        if coeffs.len() != self.rays.len() {
            return Err(Error::BundleArity {
                expected: self.rays.len(),
                got: coeffs.len(),
            });
        }
        let weights = self
            .charts
            .iter()
            .map(|c| {
                let (i, j) = c.rays;
                Weight::new(
                    -coeffs[i] * c.u.a - coeffs[j] * c.v.a,
                    -coeffs[i] * c.u.b - coeffs[j] * c.v.b,
                )
            })
            .collect();
        Ok(EquivariantLineBundle {
            label: label.to_string(),
            coeffs,
            weights,
        })
    }

    /// `sum_P c1(L1)|_P c1(L2)|_P / e(T_P S)` at one specialization.
    pub fn localize_intersection(
        &self,
        l1: &EquivariantLineBundle,
        l2: &EquivariantLineBundle,
        s: &Specialization,
    ) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (p, chart) in self.charts.iter().enumerate() {
            let e = chart.tangent_euler(s)?;
            acc += l1.weights[p].eval(s) * l2.weights[p].eval(s) / e;
        }
        Ok(acc)
    }

    /// Intersection number `L1 · L2`, checked to be the same integer at two
    /// independent generic specializations.
    pub fn intersection_with(
        &self,
        l1: &EquivariantLineBundle,
        l2: &EquivariantLineBundle,
        specializer: &mut Specializer,
    ) -> Result<i64> {
        let (_, first) = specializer.draw_valid(|s| self.localize_intersection(l1, l2, s))?;
        let (_, second) = specializer.draw_valid(|s| self.localize_intersection(l1, l2, s))?;
        if first != second || !crate::algebra::is_integer(&first) {
            return Err(Error::NonConstantLocalization { first, second });
        }
        Ok(i64::try_from(first.numer()).expect("intersection number fits in i64"))
    }

    pub fn intersection(&self, l1: &EquivariantLineBundle, l2: &EquivariantLineBundle) -> Result<i64> {
        self.intersection_with(l1, l2, &mut Specializer::new(INTERSECTION_SEED))
    }

    pub fn chern_numbers(&self, m: &EquivariantLineBundle) -> Result<ChernNumbers> {
        let k = self.canonical_bundle();
        Ok(ChernNumbers {
            m_squared: self.intersection(m, m)?,
            m_dot_k: self.intersection(m, &k)?,
            k_squared: self.intersection(&k, &k)?,
            c2: self.euler_number() as i64,
        })
    }

    /// `M^D = K - M`, relabelled.
    pub fn serre_dual(&self, m: &EquivariantLineBundle) -> EquivariantLineBundle {
        let coeffs = m.coeffs.iter().map(|a| -1 - a).collect();
        self.line_bundle(&format!("K-({})", m.label), coeffs)
            .expect("arity matches")
    }

    /// `L1 ⊗ L2`.
    pub fn tensor(&self, l1: &EquivariantLineBundle, l2: &EquivariantLineBundle) -> EquivariantLineBundle {
        let coeffs = l1.coeffs.iter().zip(&l2.coeffs).map(|(a, b)| a + b).collect();
        self.line_bundle(&format!("{}+{}", l1.label, l2.label), coeffs)
            .expect("arity matches")
    }
}

impl fmt::Display for ToricSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.name, self.rays)
    }
}

/// A torus-invariant divisor `sum a_i D_i` and its linearization weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivariantLineBundle {
    label: String,
    coeffs: Vec<i64>,
    weights: Vec<Weight>,
}

impl EquivariantLineBundle {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Character `m_P` of the local generator at each chart.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, chart: usize) -> Weight {
        self.weights[chart]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ChernNumbers {
    pub m_squared: i64,
    pub m_dot_k: i64,
    pub k_squared: i64,
    pub c2: i64,
}

/// On-disk surface description.
///
/// ```toml
/// name = "blowup-p2"
/// rays = [[1, 0], [1, 1], [0, 1], [-1, -1]]
///
/// [bundles]
/// H = [0, 0, 0, 1]
/// E = [0, 1, 0, 0]
/// ```
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceConfig {
    pub name: String,
    pub rays: Vec<[i64; 2]>,
    #[serde(default)]
    pub bundles: BTreeMap<String, Vec<i64>>,
}

impl SurfaceConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn build(&self) -> Result<ToricSurface> {
        let mut surface = ToricSurface::new(self.name.clone(), self.rays.clone())?;
        let reversed = surface.rays != self.rays;
        for (label, coeffs) in &self.bundles {
            if coeffs.len() != self.rays.len() {
                return Err(Error::BundleArity {
                    expected: self.rays.len(),
                    got: coeffs.len(),
                });
            }
            let mut c = coeffs.clone();
            if reversed {
                c.reverse();
            }
            surface.bundles.insert(label.clone(), c);
        }
        Ok(surface)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_chart_counts() {
        assert_eq!(ToricSurface::builtin("p2").unwrap().charts().len(), 3);
        assert_eq!(ToricSurface::builtin("p1xp1").unwrap().charts().len(), 4);
        assert_eq!(ToricSurface::builtin("hirzebruch(1)").unwrap().charts().len(), 4);
        assert_eq!(ToricSurface::builtin("F2").unwrap().name(), "hirzebruch(2)");
        assert_eq!(
            ToricSurface::builtin("p3"),
            Err(Error::UnknownSurface("p3".into()))
        );
    }

    #[test]
    fn charts_are_dual_bases() {
        for name in ["p2", "p1xp1", "hirzebruch(1)", "hirzebruch(3)"] {
            let s = ToricSurface::builtin(name).unwrap();
            for c in s.charts() {
                let (p, q) = (s.rays()[c.rays.0], s.rays()[c.rays.1]);
                assert_eq!(det(p, q), 1);
                assert_eq!((c.u.dot(p), c.u.dot(q)), (1, 0));
                assert_eq!((c.v.dot(p), c.v.dot(q)), (0, 1));
            }
        }
    }

    #[test]
    fn bad_fans_are_rejected() {
        assert!(ToricSurface::new("x", vec![[1, 0], [0, 1]]).is_err());
        assert!(ToricSurface::new("x", vec![[2, 0], [0, 1], [-1, -1]]).is_err());
        assert!(ToricSurface::new("x", vec![[1, 0], [1, 2], [-1, -1]]).is_err());
        // Clockwise order is accepted and reversed.
        let s = ToricSurface::new("x", vec![[-1, -1], [0, 1], [1, 0]]).unwrap();
        assert_eq!(s.rays(), &[[1, 0], [0, 1], [-1, -1]]);
    }

    #[test]
    fn line_bundle_weights() {
        let s = ToricSurface::builtin("p2").unwrap();
        assert!(s.trivial_bundle().weights().iter().all(|w| w.is_trivial()));
        let h = s.bundle("O(1)").unwrap();
        let w = h.weights();
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert_ne!(w[i], w[j]);
            }
        }
        let k = s.canonical_bundle();
        for (c, m) in s.charts().iter().zip(k.weights()) {
            assert_eq!(*m, c.u + c.v);
        }
        assert_eq!(
            s.line_bundle("bad", vec![1, 0]),
            Err(Error::BundleArity {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(s.bundle("1, 0 ,0").unwrap().coeffs(), h.coeffs());
    }

    #[test]
    fn classical_intersection_numbers() {
        let p2 = ToricSurface::builtin("p2").unwrap();
        let h = p2.bundle("O(1)").unwrap();
        let k = p2.canonical_bundle();
        assert_eq!(p2.intersection(&h, &h).unwrap(), 1);
        assert_eq!(p2.intersection(&k, &k).unwrap(), 9);
        assert_eq!(p2.intersection(&h, &k).unwrap(), -3);
        let q = ToricSurface::builtin("p1xp1").unwrap();
        let f = q.bundle("O(1,0)").unwrap();
        assert_eq!(q.intersection(&f, &f).unwrap(), 0);
        assert_eq!(q.intersection(&f, &q.bundle("O(0,1)").unwrap()).unwrap(), 1);
        let f1 = ToricSurface::builtin("hirzebruch(1)").unwrap();
        let e = f1.bundle("E").unwrap();
        assert_eq!(f1.intersection(&e, &e).unwrap(), -1);
    }

    #[test]
    fn chern_numbers_of_trivial_bundle() {
        let cases = [("p2", (0, 0, 9, 3)), ("p1xp1", (0, 0, 8, 4)), ("hirzebruch(1)", (0, 0, 8, 4))];
        for (name, (a, b, c, d)) in cases {
            let s = ToricSurface::builtin(name).unwrap();
            let n = s.chern_numbers(&s.trivial_bundle()).unwrap();
            assert_eq!((n.m_squared, n.m_dot_k, n.k_squared, n.c2), (a, b, c, d), "{name}");
        }
    }

    #[test]
    fn intersection_is_bilinear_and_symmetric() {
        let s = ToricSurface::builtin("hirzebruch(2)").unwrap();
        let vecs = [vec![1, 0, 2, -1], vec![0, 3, -1, 1], vec![-2, 1, 0, 4]];
        let b: Vec<_> = vecs.iter().map(|c| s.line_bundle("x", c.clone()).unwrap()).collect();
        let i = |x: &EquivariantLineBundle, y: &EquivariantLineBundle| s.intersection(x, y).unwrap();
        assert_eq!(i(&b[0], &b[1]), i(&b[1], &b[0]));
        let sum = s.tensor(&b[0], &b[2]);
        assert_eq!(i(&sum, &b[1]), i(&b[0], &b[1]) + i(&b[2], &b[1]));
    }

    #[test]
    fn serre_dual_pairing() {
        for name in ["p2", "p1xp1"] {
            let s = ToricSurface::builtin(name).unwrap();
            let k = s.canonical_bundle();
            for label in s.bundle_labels().collect::<Vec<_>>() {
                let m = s.bundle(label).unwrap();
                let md = s.serre_dual(&m);
                let n = s.chern_numbers(&m).unwrap();
                assert_eq!(s.intersection(&md, &m).unwrap(), n.m_dot_k - n.m_squared);
                assert_eq!(s.intersection(&k, &md).unwrap(), n.k_squared - n.m_dot_k);
            }
        }
    }

    #[test]
    fn config_roundtrip() {
        let text = r#"
name = "blowup-p2"
rays = [[1, 0], [1, 1], [0, 1], [-1, -1]]

[bundles]
E = [0, 1, 0, 0]
"#;
        let s = SurfaceConfig::parse(text).unwrap().build().unwrap();
        assert_eq!(s.euler_number(), 4);
        let e = s.bundle("E").unwrap();
        assert_eq!(s.intersection(&e, &e).unwrap(), -1);
        let k = s.canonical_bundle();
        assert_eq!(s.intersection(&k, &k).unwrap(), 8);
        assert!(SurfaceConfig::parse("name = 3").is_err());
    }
}
