//! Ordinary and restricted partition counts, and exhaustive enumeration of
//! partitions (the ground truth every faster method is checked against).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{pochhammer_inf, TruncatedSeries};

/// Largest `n` for which enumeration-backed oracles are meant to be run.
pub const ENUMERATION_BOUND: usize = 60;

/// A partition of `n`: a non-increasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: usize,
}

impl Partition {
    /// Validates and wraps a part sequence. Returns `None` if the parts are
    /// not positive and non-increasing.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let n = parts.iter().map(|&p| p as usize).sum();
        Some(Self { parts, n })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), n: 0 }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn contains(&self, value: u32) -> bool {
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// Number of parts equal to `value`.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(j, p)| j == 0 || self.parts[j - 1] != *p)
            .map(|(_, &p)| p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Iterator over the partitions of `n` in decreasing lexicographic order,
/// starting from `[n]` and ending at `[1; n]`.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = successor(&parts);
        let n = parts.iter().map(|&p| p as usize).sum();
        Some(Partition { parts, n })
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    // rightmost part larger than 1
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..pos].to_vec();
    let v = parts[pos] - 1;
    let mut rest: u32 = 1 + (parts.len() - pos - 1) as u32 + v;
    while rest > 0 {
        let take = v.min(rest);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    let start = if n == 0 { Vec::new() } else { vec![n as u32] };
    Partitions { current: Some(start) }
}

fn p_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

/// Makes sure the shared `p(n)` table covers `0..=order`, doubling its size on a miss.
fn ensure_table(order: usize) {
    if p_table().read().expect("p(n) table poisoned").len() > order {
        return;
    }
    let mut table = p_table().write().expect("p(n) table poisoned");
    if table.len() > order {
        return;
    }
    let target = order.max(2 * table.len()).max(64);
    let series = pochhammer_inf(1, 1, target)
        .invert()
        .expect("(q;q)_inf has unit constant term");
    *table = series.into_coeffs();
}

/// `p(n)`, with `p(n) = 0` for negative `n`.
pub fn partition_count(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let n = n as usize;
    ensure_table(n);
    p_table().read().expect("p(n) table poisoned")[n].clone()
}

/// `1/(q;q)_inf` truncated at `order`, served from the shared table.
pub fn partition_series(order: usize) -> TruncatedSeries {
    ensure_table(order);
    let table = p_table().read().expect("p(n) table poisoned");
    TruncatedSeries::from_coeffs(table[..=order].to_vec())
}

/// A set of allowed residues for parts, modulo a fixed modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClassRule {
    modulus: u32,
    allowed: BTreeSet<u32>,
}

impl ResidueClassRule {
    pub fn new(modulus: u32, allowed: impl IntoIterator<Item = u32>) -> Result<Self> {
        let allowed: BTreeSet<u32> = allowed.into_iter().collect();
        if modulus == 0 {
            return Err(Error::InvalidArgument("residue rule modulus must be positive".into()));
        }
        if allowed.is_empty() || allowed.iter().any(|&r| r >= modulus) {
            return Err(Error::InvalidArgument(format!(
                "allowed residues must be a non-empty subset of [0, {modulus})"
            )));
        }
        Ok(Self { modulus, allowed })
    }

    /// Expands `±r (mod m)` for each listed `r` into least residues.
    pub fn plus_minus(modulus: u32, residues: &[u32]) -> Result<Self> {
        let expanded = residues
            .iter()
            .flat_map(|&r| [r % modulus, (modulus - r % modulus) % modulus]);
        Self::new(modulus, expanded)
    }

    pub fn even_parts() -> Self {
        Self::new(2, [0]).expect("valid rule")
    }

    pub fn odd_parts() -> Self {
        Self::new(2, [1]).expect("valid rule")
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn allowed(&self) -> &BTreeSet<u32> {
        &self.allowed
    }

    pub fn admits(&self, part: u32) -> bool {
        self.allowed.contains(&(part % self.modulus))
    }
}

/// `prod_{j admitted} 1/(1 - q^j)` truncated at `order`.
pub fn restricted_series(order: usize, rule: &ResidueClassRule) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::from(1);
    for j in 1..=order {
        if !rule.admits(j as u32) {
            continue;
        }
        // multiply by 1/(1 - q^j)
        for e in j..=order {
            let (lo, hi) = coeffs.split_at_mut(e);
            hi[0] += &lo[e - j];
        }
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Number of partitions of `n` whose parts all satisfy `rule`.
pub fn restricted_count(n: usize, rule: &ResidueClassRule) -> BigInt {
    restricted_series(n, rule).coeff(n).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts_of(n: usize) -> Vec<Vec<u32>> {
        enumerate_partitions(n).map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn partition_count_examples() {
        assert_eq!(partition_count(5), BigInt::from(7));
        assert_eq!(partition_count(-3), BigInt::zero());
        assert_eq!(partition_count(4), BigInt::from(5));
        assert_eq!(partition_count(0), BigInt::from(1));
        assert_eq!(partition_count(100).to_string(), "190569292");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(parts_of(0), vec![Vec::<u32>::new()]);
        assert_eq!(parts_of(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(
            parts_of(5),
            vec![
                vec![5],
                vec![4, 1],
                vec![3, 2],
                vec![3, 1, 1],
                vec![2, 2, 1],
                vec![2, 1, 1, 1],
                vec![1, 1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumeration_matches_count_and_invariants() {
        for n in 0..=40 {
            let mut count = 0u64;
            let mut prev: Option<Vec<u32>> = None;
            for p in enumerate_partitions(n) {
                assert_eq!(p.n(), n);
                assert_eq!(p.parts().iter().map(|&x| x as usize).sum::<usize>(), n);
                assert!(Partition::new(p.parts().to_vec()).is_some());
                if let Some(prev) = &prev {
                    assert!(prev.as_slice() > p.parts(), "order must be strictly decreasing");
                }
                prev = Some(p.parts().to_vec());
                count += 1;
            }
            assert_eq!(BigInt::from(count), partition_count(n as i64), "n = {n}");
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3]).is_none());
        assert!(Partition::new(vec![2, 0]).is_none());
        let p = Partition::new(vec![4, 2, 2, 1]).unwrap();
        assert_eq!(p.n(), 9);
        assert!(p.contains(2) && !p.contains(3));
        assert_eq!(p.distinct_parts().collect::<Vec<_>>(), vec![4, 2, 1]);
        assert_eq!(p.multiplicity(2), 2);
        assert_eq!(p.to_string(), "4+2+2+1");
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_count(4, &ResidueClassRule::even_parts()), BigInt::from(2));
        assert_eq!(restricted_count(3, &ResidueClassRule::odd_parts()), BigInt::from(2));
        let rule = ResidueClassRule::plus_minus(32, &[4, 6, 8, 10]).unwrap();
        assert_eq!(
            rule.allowed().iter().copied().collect::<Vec<_>>(),
            vec![4, 6, 8, 10, 22, 24, 26, 28]
        );
        assert_eq!(restricted_count(4, &rule), BigInt::from(1));
    }

    #[test]
    fn trivial_rule_gives_partition_numbers() {
        let all = ResidueClassRule::new(1, [0]).unwrap();
        assert_eq!(restricted_series(200, &all), partition_series(200));
    }

    #[test]
    fn odd_parts_equal_distinct_parts() {
        let odd = restricted_series(60, &ResidueClassRule::odd_parts());
        for n in 0..=60 {
            let distinct = enumerate_partitions(n)
                .filter(|p| p.parts().windows(2).all(|w| w[0] > w[1]))
                .count();
            assert_eq!(odd.coeff(n), &BigInt::from(distinct), "n = {n}");
        }
    }

    #[test]
    fn invalid_rules_rejected() {
        assert!(ResidueClassRule::new(3, []).is_err());
        assert!(ResidueClassRule::new(3, [3]).is_err());
        assert!(ResidueClassRule::new(0, [0]).is_err());
    }

    #[test]
    fn concurrent_cache_growth() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || partition_count(300 + 97 * i)))
            .collect();
        let values: Vec<BigInt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, v) in values.iter().enumerate() {
            assert_eq!(*v, partition_count(300 + 97 * i as i64));
        }
        assert_eq!(partition_count(300).to_string(), "9253082936723602");
    }
}
