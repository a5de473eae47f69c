//! Partitions, nested pairs, and the torus character of `R / I_mu`.
//!
//! Cells of a Young diagram are indexed `(row, column)` from zero: the cell
//! `(a, b)` exists when `a < len` and `b < parts[a]`, and corresponds to the
//! monomial `x1^a x2^b` with torus character `t1^a t2^b`.

use std::fmt;

use serde::Serialize;

use crate::algebra::IntLaurent;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `parts[row]`, zero past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    pub fn has_cell(&self, row: u32, col: u32) -> bool {
        col < self.part(row as usize)
    }

    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(a, &p)| (0..p).map(move |b| (a as u32, b)))
    }

    /// `other ⊆ self`: no more rows, and row-wise no longer.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(i, o)| i <= o)
    }

    /// Exponents of the minimal monomial generators of `I_mu`, ordered by
    /// increasing `x1` exponent.
    pub fn ideal_generators(&self) -> Vec<(u32, u32)> {
        let len = self.len();
        (0..=len)
            .filter(|&a| a == 0 || self.part(a) < self.part(a - 1))
            .map(|a| (a as u32, self.part(a)))
            .collect()
    }

    /// Numerator `P` of the Hilbert series of `I_mu`, read off the minimal
    /// free resolution: generators minus the syzygies between neighbours.
    pub fn poincare_polynomial(&self) -> IntLaurent {
        let gens = self.ideal_generators();
        let mut p = IntLaurent::zero();
        for &(a, b) in &gens {
            p.add_term((a as i32, b as i32), 1);
        }
        for w in gens.windows(2) {
            p.add_term((w[1].0 as i32, w[0].1 as i32), -1);
        }
        p
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An inclusion `inner ⊆ outer` of Young diagrams, i.e. ideals `I_outer ⊆ I_inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct NestedPair {
    pub outer: Partition,
    pub inner: Partition,
}

impl NestedPair {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn empty() -> Self {
        Self {
            outer: Partition::empty(),
            inner: Partition::empty(),
        }
    }
}

/// All partitions of `n` in reverse lexicographic order, e.g. for `n = 4`:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All nested pairs with `|outer| = n1`, `|inner| = n2`, ordered by outer
/// then inner partition in the order of [`enumerate_partitions`].
pub fn enumerate_nested_pairs(n1: u32, n2: u32) -> Result<Vec<NestedPair>> {
    if n1 < n2 {
        return Err(Error::EmptyNestingRange { n1, n2 });
    }
    let inners = enumerate_partitions(n2);
    let mut out = Vec::new();
    for outer in enumerate_partitions(n1) {
        for inner in inners.iter().filter(|i| outer.contains(i)) {
            out.push(NestedPair {
                outer: outer.clone(),
                inner: inner.clone(),
            });
        }
    }
    Ok(out)
}

/// `Z_mu = sum over cells (a, b) of t1^a t2^b`.
pub fn z_character(mu: &Partition) -> IntLaurent {
    IntLaurent::from_terms(mu.cells().map(|(a, b)| ((a as i32, b as i32), 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(1), vec![part(&[1])]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                part(&[4]),
                part(&[3, 1]),
                part(&[2, 2]),
                part(&[2, 1, 1]),
                part(&[1, 1, 1, 1])
            ]
        );
        let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn nested_pairs() {
        let pairs = enumerate_nested_pairs(2, 1).unwrap();
        assert_eq!(
            pairs,
            vec![
                NestedPair::new(part(&[2]), part(&[1])).unwrap(),
                NestedPair::new(part(&[1, 1]), part(&[1])).unwrap(),
            ]
        );
        for n in 0..6 {
            let p = enumerate_partitions(n).len();
            let diag = enumerate_nested_pairs(n, n).unwrap();
            assert_eq!(diag.len(), p);
            assert!(diag.iter().all(|q| q.outer == q.inner));
            let bottom = enumerate_nested_pairs(n, 0).unwrap();
            assert_eq!(bottom.len(), p);
            assert!(bottom.iter().all(|q| q.inner.is_empty()));
        }
        assert_eq!(
            enumerate_nested_pairs(1, 2),
            Err(Error::EmptyNestingRange { n1: 1, n2: 2 })
        );
        assert!(NestedPair::new(part(&[1, 1]), part(&[2])).is_err());
    }

    #[test]
    fn nested_pair_count_matches_double_loop() {
        for n1 in 0..=6 {
            for n2 in 0..=n1 {
                let mut count = 0;
                for outer in enumerate_partitions(n1) {
                    for inner in enumerate_partitions(n2) {
                        let fits = inner.len() <= outer.len()
                            && (0..inner.len()).all(|i| inner.part(i) <= outer.part(i));
                        count += fits as usize;
                    }
                }
                assert_eq!(enumerate_nested_pairs(n1, n2).unwrap().len(), count);
            }
        }
    }

    #[test]
    fn z_character_examples() {
        assert!(z_character(&Partition::empty()).is_zero());
        assert_eq!(z_character(&part(&[1])), IntLaurent::one());
        let want = IntLaurent::from_terms([((0, 0), 1), ((0, 1), 1), ((1, 0), 1)]);
        assert_eq!(z_character(&part(&[2, 1])), want);
    }

    #[test]
    fn z_character_and_poincare_polynomial_are_consistent() {
        let q = &(&IntLaurent::one() - &IntLaurent::t1()) * &(&IntLaurent::one() - &IntLaurent::t2());
        for n in 0..=6 {
            for mu in enumerate_partitions(n) {
                let z = z_character(&mu);
                assert_eq!(z.eval_at_one(), n as i64);
                assert_eq!(&(&q * &z) + &mu.poincare_polynomial(), IntLaurent::one(), "{mu}");
            }
        }
    }
}
