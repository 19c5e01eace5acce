//! Brute-force ground truth for partition and hook-length statistics.
//!
//! Everything in this module is enumerative: partitions are generated
//! explicitly, hook lengths are read off the Ferrers diagram cell by cell,
//! and counting polynomials are assembled by direct tallying. The generating
//! series and the asymptotic machinery elsewhere in the crate are validated
//! against these oracles, so this module deliberately avoids anything clever.
//!
//! The one non-enumerative item is [`partition_number`], which uses Euler's
//! pentagonal-number recurrence
//!
//! ```text
//! p(n) = Σ_{k≥1} (-1)^{k-1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
//! ```
//!
//! so that exact values of p(n) are available far beyond the range where
//! enumeration is practical (full enumeration is reasonable up to n ≈ 45,
//! i.e. p(45) = 89134 partitions per call; the recurrence handles n in the
//! thousands without effort).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::zeta::ZetaPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// Residue systems need at least two classes.
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(usize),
    /// The residue must name one of the b classes.
    #[error("residue {residue} is not a class modulo {modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// # Panics
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(!parts.contains(&0), "parts must be positive");
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned: the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition (columns of the Ferrers diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut conj = Vec::with_capacity(cols);
        for j in 0..cols {
            conj.push(self.parts.iter().take_while(|&&row| row > j).count());
        }
        Partition { parts: conj }
    }

    /// Hook lengths of all cells, as a multiset.
    ///
    /// For the cell in (0-indexed) row k and column j,
    /// `hook = (λ_k - 1 - j) + (λ'_j - 1 - k) + 1`
    /// — the arm, the leg, and the cell itself.
    pub fn hook_multiset(&self) -> HookMultiset {
        let conj = self.conjugate();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - 1 - j) + (conj.parts[j] - 1 - k) + 1;
                *counts.entry(hook).or_insert(0) += 1;
            }
        }
        HookMultiset { counts }
    }

    /// Number of cells whose hook length is exactly `ell`.
    pub fn count_hooks_of_length(&self, ell: usize) -> usize {
        let conj = self.conjugate();
        let mut count = 0;
        for (k, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                if (row - 1 - j) + (conj.parts[j] - 1 - k) + 1 == ell {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Multiset of hook lengths of one partition; the total multiplicity equals
/// the number of cells, i.e. the size of the partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookMultiset {
    counts: BTreeMap<usize, usize>,
}

impl HookMultiset {
    /// Multiplicity of a given hook length.
    pub fn multiplicity(&self, hook: usize) -> usize {
        self.counts.get(&hook).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// (hook length, multiplicity) pairs in increasing hook order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&h, &c)| (h, c))
    }
}

/// Streams all partitions of `n` in lexicographically decreasing part-list
/// order, e.g. for n = 4: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        self.current = next_partition(&cur);
        Some(Partition { parts: cur })
    }
}

/// Successor in lexicographically decreasing order: decrement the rightmost
/// part exceeding 1, then redistribute everything to its right greedily.
fn next_partition(p: &[usize]) -> Option<Vec<usize>> {
    let pivot = p.iter().rposition(|&part| part > 1)?;
    let mut next = p[..pivot].to_vec();
    let lead = p[pivot] - 1;
    // total mass to lay out with parts of size at most `lead`
    let total = p[pivot..].iter().sum::<usize>();
    for _ in 0..total / lead {
        next.push(lead);
    }
    if total % lead > 0 {
        next.push(total % lead);
    }
    Some(next)
}

/// Growable table of partition numbers backed by the pentagonal recurrence.
///
/// Values are memoized, so asking for p(400) after p(500) is a lookup.
pub struct PartitionNumbers {
    table: Vec<BigInt>,
}

impl PartitionNumbers {
    pub fn new() -> Self {
        PartitionNumbers {
            table: vec![BigInt::one()],
        }
    }

    /// p(n), extending the table as needed.
    pub fn get(&mut self, n: usize) -> BigInt {
        self.ensure(n);
        self.table[n].clone()
    }

    /// The slice p(0), …, p(up_to).
    pub fn slice(&mut self, up_to: usize) -> &[BigInt] {
        self.ensure(up_to);
        &self.table[..=up_to]
    }

    fn ensure(&mut self, n: usize) {
        for m in self.table.len()..=n {
            let mut value = BigInt::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                let g2 = k * (3 * k + 1) / 2;
                if g1 > m {
                    break;
                }
                let mut step = self.table[m - g1].clone();
                if g2 <= m {
                    step += &self.table[m - g2];
                }
                if k % 2 == 1 {
                    value += step;
                } else {
                    value -= step;
                }
            }
            self.table.push(value);
        }
    }
}

impl Default for PartitionNumbers {
    fn default() -> Self {
        Self::new()
    }
}

/// p(n) as a one-shot call; use [`PartitionNumbers`] for repeated queries.
pub fn partition_number(n: usize) -> BigInt {
    PartitionNumbers::new().get(n)
}

/// Distribution of the "number of hooks of length `ell`" statistic over all
/// partitions of `n`: the coefficient of ζ^m is the number of partitions of
/// `n` with exactly m cells of hook length `ell`. Computed by enumeration.
///
/// # Panics
///
/// Panics if `ell == 0`.
pub fn hook_count_poly_oracle(ell: usize, n: usize) -> ZetaPoly {
    assert!(ell >= 1, "hook length must be positive");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for p in enumerate_partitions(n) {
        coeffs[p.count_hooks_of_length(ell)] += 1u32;
    }
    ZetaPoly::from_coeffs(coeffs)
}

/// Number of partitions of `n` whose count of hooks of length `ell` is
/// congruent to `a` modulo `b`. Computed by enumeration.
pub fn residue_count_oracle(
    ell: usize,
    b: usize,
    a: usize,
    n: usize,
) -> Result<BigInt, OracleError> {
    check_residue(b, a)?;
    let by_class = residue_count_table(ell, b, n)?;
    Ok(by_class[a].clone())
}

/// All `b` residue-class counts of [`residue_count_oracle`] in one
/// enumeration pass; entry `a` counts partitions with hook count ≡ a (mod b).
pub fn residue_count_table(ell: usize, b: usize, n: usize) -> Result<Vec<BigInt>, OracleError> {
    assert!(ell >= 1, "hook length must be positive");
    if b < 2 {
        return Err(OracleError::ModulusTooSmall(b));
    }
    let mut by_class = vec![BigInt::zero(); b];
    for p in enumerate_partitions(n) {
        by_class[p.count_hooks_of_length(ell) % b] += 1u32;
    }
    Ok(by_class)
}

/// Exploratory statistic for the CLI: across all partitions of `n`, the total
/// number of cells whose hook *length* is ≡ a (mod b), reported per class.
///
/// This counts cells, not partitions; it is not the statistic the residue
/// filter isolates, and nothing in the crate asserts against it.
pub fn hook_length_residue_totals(b: usize, n: usize) -> Result<Vec<BigInt>, OracleError> {
    if b < 2 {
        return Err(OracleError::ModulusTooSmall(b));
    }
    let mut totals = vec![BigInt::zero(); b];
    for p in enumerate_partitions(n) {
        for (hook, mult) in p.hook_multiset().iter() {
            totals[hook % b] += BigInt::from(mult);
        }
    }
    Ok(totals)
}

fn check_residue(b: usize, a: usize) -> Result<(), OracleError> {
    if b < 2 {
        Err(OracleError::ModulusTooSmall(b))
    } else if a >= b {
        Err(OracleError::ResidueOutOfRange {
            residue: a,
            modulus: b,
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(n: usize) -> Vec<Vec<usize>> {
        enumerate_partitions(n).map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn enumeration_order_small() {
        assert_eq!(parts(0), vec![Vec::<usize>::new()]);
        assert_eq!(parts(1), vec![vec![1]]);
        assert_eq!(
            parts(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_is_lexicographically_decreasing_and_complete() {
        for n in 0..=20 {
            let all = parts(n);
            assert!(all.windows(2).all(|w| w[0] > w[1]), "order broken at n={n}");
            assert!(all.iter().all(|p| p.iter().sum::<usize>() == n));
            assert_eq!(BigInt::from(all.len()), partition_number(n));
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        assert_eq!(
            Partition::new(vec![3, 1]).conjugate(),
            Partition::new(vec![2, 1, 1])
        );
        for n in 0..=14 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn hook_multisets_of_named_shapes() {
        let single = Partition::new(vec![1]).hook_multiset();
        assert_eq!(single.multiplicity(1), 1);
        assert_eq!(single.total(), 1);

        // (2,1): hooks 3 at the corner, 1 at each leaf
        let staircase = Partition::new(vec![2, 1]).hook_multiset();
        assert_eq!(staircase.multiplicity(3), 1);
        assert_eq!(staircase.multiplicity(1), 2);
        assert_eq!(staircase.total(), 3);

        // a single row of length 3 has hooks 3, 2, 1
        let row = Partition::new(vec![3]).hook_multiset();
        assert_eq!(
            row.iter().collect::<Vec<_>>(),
            vec![(1, 1), (2, 1), (3, 1)]
        );
    }

    #[test]
    fn hook_multiset_mass_and_conjugation_invariance() {
        for n in 0..=14 {
            for p in enumerate_partitions(n) {
                let hooks = p.hook_multiset();
                assert_eq!(hooks.total(), n);
                assert_eq!(hooks, p.conjugate().hook_multiset());
            }
        }
    }

    #[test]
    fn pentagonal_recurrence_values() {
        assert_eq!(partition_number(0), BigInt::from(1));
        assert_eq!(partition_number(1), BigInt::from(1));
        assert_eq!(partition_number(10), BigInt::from(42));
        assert_eq!(partition_number(100), BigInt::from(190569292u64));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        let mut table = PartitionNumbers::new();
        for n in 0..=30 {
            assert_eq!(
                table.get(n),
                BigInt::from(enumerate_partitions(n).count())
            );
        }
    }

    #[test]
    fn hook_count_polys_match_hand_computations() {
        // partitions of 3 by number of 1-hooks: (3) and (1,1,1) have one,
        // (2,1) has two
        assert_eq!(
            hook_count_poly_oracle(1, 3),
            ZetaPoly::from_i64_coeffs(&[0, 2, 1])
        );
        // both partitions of 2 contain exactly one 2-hook
        assert_eq!(
            hook_count_poly_oracle(2, 2),
            ZetaPoly::from_i64_coeffs(&[0, 2])
        );
        // no partition of 3 contains a 5-hook
        assert_eq!(
            hook_count_poly_oracle(5, 3),
            ZetaPoly::from_i64_coeffs(&[3])
        );
    }

    #[test]
    fn hook_count_poly_mass_and_moment() {
        for ell in 1..=3 {
            for n in 0..=12 {
                let poly = hook_count_poly_oracle(ell, n);
                assert_eq!(poly.eval_one(), partition_number(n));
                let total_hooks: usize = enumerate_partitions(n)
                    .map(|p| p.hook_multiset().multiplicity(ell))
                    .sum();
                assert_eq!(poly.derivative_eval_one(), BigInt::from(total_hooks));
            }
        }
    }

    #[test]
    fn residue_counts_match_hand_computations() {
        assert_eq!(residue_count_oracle(1, 2, 0, 3), Ok(BigInt::from(1)));
        assert_eq!(residue_count_oracle(1, 2, 1, 3), Ok(BigInt::from(2)));
        // the empty partition has zero 2-hooks, and 0 ≡ 0 (mod 3)
        assert_eq!(residue_count_oracle(2, 3, 0, 0), Ok(BigInt::from(1)));
    }

    #[test]
    fn residue_classes_partition_all_partitions() {
        for ell in 1..=2 {
            for b in 2..=4 {
                for n in 0..=12 {
                    let table = residue_count_table(ell, b, n).unwrap();
                    assert_eq!(table.iter().sum::<BigInt>(), partition_number(n));
                    for (a, expected) in table.iter().enumerate() {
                        assert_eq!(
                            residue_count_oracle(ell, b, a, n).as_ref(),
                            Ok(expected)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_residue_systems_are_rejected() {
        assert_eq!(
            residue_count_oracle(1, 1, 0, 5),
            Err(OracleError::ModulusTooSmall(1))
        );
        assert_eq!(
            residue_count_oracle(1, 3, 3, 5),
            Err(OracleError::ResidueOutOfRange {
                residue: 3,
                modulus: 3
            })
        );
        assert!(hook_length_residue_totals(0, 4).is_err());
    }

    #[test]
    fn hook_length_totals_count_cells() {
        // every partition of n has n cells, so the class totals sum to n·p(n)
        for n in 0..=10 {
            let totals = hook_length_residue_totals(3, n).unwrap();
            let expected = BigInt::from(n) * partition_number(n);
            assert_eq!(totals.iter().sum::<BigInt>(), expected);
        }
    }
}
