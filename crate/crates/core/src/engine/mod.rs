//! Localization invariants of nested Hilbert schemes of points.
//!
//! Two routes compute the same numbers. The nested route integrates
//! `c(K_M)` against the virtual class of `S^[n1 >= n2]`, summing over its
//! isolated fixed points. The product route integrates
//! `c_{n1+n2}(E^{n1,n2}) c(E_M)` over `S^[n1] x S^[n2]`, where the top Chern
//! class of `E` kills every non-nested fixed point.

mod fixed;
mod localize;
mod record;
mod series;

pub use fixed::{
    compositions, enumerate_global_fixed_points, fixed_point_counts, partition_tuples,
    GlobalFixedPoint,
};
pub use localize::{
    nested_route, product_integral, product_points, product_route, Integrand, Localized,
    ProductPoint,
};
pub use record::{InvariantRecord, RationalRepr, Route, SpecializationRepr};
pub use series::{
    alternate, closed_form_series, diagonal, generator_pairs, gottsche_series, is_unit_integral,
    mismatches, universal_series_fit, z_nest_series, UniversalSeries,
};

use crate::algebra::Rational;
use crate::error::Result;
use crate::toric::{EquivariantLineBundle, ToricSurface};
use crate::vertex::Specializer;

/// Seed used when neither `--seed` nor `NESTHILB_SEED` is given.
pub const DEFAULT_SEED: u64 = 1729;

pub fn nested_route_invariant(
    surface: &ToricSurface,
    m: &EquivariantLineBundle,
    n1: u32,
    n2: u32,
    specializer: &mut Specializer,
) -> Result<Rational> {
    Ok(nested_route(surface, &Integrand::single(m), n1, n2, specializer)?.value)
}

pub fn product_route_invariant(
    surface: &ToricSurface,
    m: &EquivariantLineBundle,
    n1: u32,
    n2: u32,
    specializer: &mut Specializer,
) -> Result<Rational> {
    Ok(product_route(surface, &Integrand::single(m), n1, n2, specializer)?.value)
}

/// `int c(K_{M_1}) ... c(K_{M_s}) / (c(K_{N_1}) ... c(K_{N_t}))` by the chosen route.
pub fn multi_bundle_invariant(
    surface: &ToricSurface,
    ms: &[EquivariantLineBundle],
    ns: &[EquivariantLineBundle],
    n1: u32,
    n2: u32,
    route: Route,
    specializer: &mut Specializer,
) -> Result<Rational> {
    let integrand = Integrand::ratio(ms, ns);
    let v = match route {
        Route::Nested => nested_route(surface, &integrand, n1, n2, specializer)?,
        Route::Product => product_route(surface, &integrand, n1, n2, specializer)?,
    };
    Ok(v.value)
}
