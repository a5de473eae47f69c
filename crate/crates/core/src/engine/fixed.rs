//! Torus-fixed points of Hilbert schemes and nested Hilbert schemes of a
//! toric surface: one monomial ideal (or nested pair) per chart.

use crate::error::Result;
use crate::partitions::{enumerate_nested_pairs, enumerate_partitions, NestedPair, Partition};
use crate::toric::ToricSurface;

/// A fixed point of `S^[n1 >= n2]`: one nested pair per chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GlobalFixedPoint {
    pub pairs: Vec<NestedPair>,
}

impl GlobalFixedPoint {
    pub fn sizes(&self) -> (u32, u32) {
        self.pairs.iter().fold((0, 0), |(a, b), p| {
            (a + p.outer.size(), b + p.inner.size())
        })
    }
}

/// Compositions of `n` into `k` nonnegative parts, lexicographically
/// decreasing in the first part.
pub fn compositions(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(n: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            go(n - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for x in f {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Fixed points of `S^[n]`: tuples of partitions, one per chart, of total size `n`.
pub fn partition_tuples(surface: &ToricSurface, n: u32) -> Vec<Vec<Partition>> {
    let k = surface.euler_number();
    let mut out = Vec::new();
    for sizes in compositions(n, k) {
        let factors: Vec<Vec<Partition>> = sizes.iter().map(|&s| enumerate_partitions(s)).collect();
        out.extend(cartesian(&factors));
    }
    out
}

/// Fixed points of `S^[n1 >= n2]`.
pub fn enumerate_global_fixed_points(
    surface: &ToricSurface,
    n1: u32,
    n2: u32,
) -> Result<Vec<GlobalFixedPoint>> {
    let k = surface.euler_number();
    // Validates n1 >= n2 before any work.
    enumerate_nested_pairs(n1, n2)?;
    let mut out = Vec::new();
    for outer in compositions(n1, k) {
        for inner in compositions(n2, k) {
            if outer.iter().zip(&inner).any(|(o, i)| i > o) {
                continue;
            }
            let factors: Vec<Vec<NestedPair>> = outer
                .iter()
                .zip(&inner)
                .map(|(&o, &i)| enumerate_nested_pairs(o, i))
                .collect::<Result<_>>()?;
            out.extend(
                cartesian(&factors)
                    .into_iter()
                    .map(|pairs| GlobalFixedPoint { pairs }),
            );
        }
    }
    Ok(out)
}

/// Number of fixed points of `S^[n]` for `n = 0..=n_max`.
pub fn fixed_point_counts(surface: &ToricSurface, n_max: u32) -> Vec<u64> {
    (0..=n_max)
        .map(|n| partition_tuples(surface, n).len() as u64)
        .collect()
}
