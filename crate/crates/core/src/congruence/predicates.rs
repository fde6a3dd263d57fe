//! Membership predicates for the special integer sets appearing in the
//! parity characterizations and conditional congruences.

use num_integer::Roots;
use serde::Serialize;

pub fn is_square(x: u64) -> bool {
    let r = x.sqrt();
    r * r == x
}

/// `x = k(3k-1)` for some `k` in Z.
pub fn is_k_times_3k_minus_1(x: u64) -> bool {
    // 3k^2 - k - x = 0  =>  k = (1 ± s) / 6 with s^2 = 1 + 12x
    let Some(d) = x.checked_mul(12).and_then(|v| v.checked_add(1)) else {
        return false;
    };
    let s = d.sqrt();
    s * s == d && ((s + 1) % 6 == 0 || (s - 1) % 6 == 0)
}

pub fn is_3n_plus_1_square(n: u64) -> bool {
    n.checked_mul(3).and_then(|v| v.checked_add(1)).is_some_and(is_square)
}

/// `x = j(j+1)/2` for some `j >= 0`.
pub fn is_triangular(x: u64) -> bool {
    x.checked_mul(8).and_then(|v| v.checked_add(1)).is_some_and(is_square)
}

/// Which index range "pentagonal number" refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PentagonalConvention {
    /// `k(3k-1)/2` for `k` in Z: 0, 1, 2, 5, 7, 12, 15, ...
    Generalized,
    /// `k >= 0`: 0, 1, 5, 12, 22, ...
    NonNegativeIndex,
    /// `k >= 1`: 1, 5, 12, 22, ...
    PositiveIndex,
}

impl PentagonalConvention {
    pub const ALL: [PentagonalConvention; 3] = [
        PentagonalConvention::Generalized,
        PentagonalConvention::NonNegativeIndex,
        PentagonalConvention::PositiveIndex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PentagonalConvention::Generalized => "generalized (k in Z, includes 0)",
            PentagonalConvention::NonNegativeIndex => "ordinary (k >= 0, includes 0)",
            PentagonalConvention::PositiveIndex => "ordinary (k >= 1, excludes 0)",
        }
    }
}

pub fn is_pentagonal(x: u64, convention: PentagonalConvention) -> bool {
    // k(3k-1)/2 = x  =>  k = (1 ± s) / 6 with s^2 = 1 + 24x
    let Some(d) = x.checked_mul(24).and_then(|v| v.checked_add(1)) else {
        return false;
    };
    let s = d.sqrt();
    if s * s != d {
        return false;
    }
    let positive_root = (s + 1) % 6 == 0;
    match convention {
        PentagonalConvention::Generalized => positive_root || (s - 1) % 6 == 0,
        PentagonalConvention::NonNegativeIndex => x == 0 || positive_root,
        PentagonalConvention::PositiveIndex => x > 0 && positive_root,
    }
}

/// Pentagonal numbers `<= bound` under `convention`, ascending.
pub fn pentagonal_numbers(bound: u64, convention: PentagonalConvention) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 0u64.. {
        let a = k * (3 * k).saturating_sub(1) / 2;
        if a > bound {
            break;
        }
        out.push(a);
        if convention == PentagonalConvention::Generalized && k > 0 {
            let b = k * (3 * k + 1) / 2;
            if b <= bound {
                out.push(b);
            }
        }
    }
    out.retain(|&x| is_pentagonal(x, convention));
    out.sort_unstable();
    out.dedup();
    out
}

/// `n = x + 4y` with `x`, `y` pentagonal.
pub fn is_pentagonal_plus_four_pentagonal(n: u64, convention: PentagonalConvention) -> bool {
    pentagonal_numbers(n / 4, convention)
        .into_iter()
        .any(|y| is_pentagonal(n - 4 * y, convention))
}

/// `n = 2x + 3y` with `x` pentagonal and `y` triangular.
pub fn is_twice_pentagonal_plus_thrice_triangular(n: u64, convention: PentagonalConvention) -> bool {
    pentagonal_numbers(n / 2, convention)
        .into_iter()
        .any(|x| (n - 2 * x).is_multiple_of(3) && is_triangular((n - 2 * x) / 3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use PentagonalConvention::*;

    fn brute_pentagonal(bound: u64, convention: PentagonalConvention) -> BTreeSet<u64> {
        let range: Box<dyn Iterator<Item = i64>> = match convention {
            Generalized => Box::new(-100..=100),
            NonNegativeIndex => Box::new(0..=100),
            PositiveIndex => Box::new(1..=100),
        };
        range
            .map(|k| (k * (3 * k - 1) / 2) as u64)
            .filter(|&x| x <= bound)
            .collect()
    }

    #[test]
    fn k3km1_examples() {
        assert!(is_k_times_3k_minus_1(2));
        assert!(is_k_times_3k_minus_1(4));
        assert!(!is_k_times_3k_minus_1(6));
        assert!(is_k_times_3k_minus_1(0));
        let brute: BTreeSet<u64> = (-30i64..=30).map(|k| (k * (3 * k - 1)) as u64).collect();
        for x in 0..=1000 {
            assert_eq!(is_k_times_3k_minus_1(x), brute.contains(&x), "x = {x}");
        }
    }

    #[test]
    fn square_examples() {
        assert!(is_3n_plus_1_square(1));
        assert!(is_3n_plus_1_square(5));
        assert!(!is_3n_plus_1_square(2));
        assert!(is_triangular(0) && is_triangular(6) && !is_triangular(7));
    }

    #[test]
    fn pentagonal_sets_match_brute_force() {
        for c in PentagonalConvention::ALL {
            let brute = brute_pentagonal(2000, c);
            let listed: BTreeSet<u64> = pentagonal_numbers(2000, c).into_iter().collect();
            assert_eq!(listed, brute, "{c:?}");
            for x in 0..=2000 {
                assert_eq!(is_pentagonal(x, c), brute.contains(&x));
            }
        }
        assert_eq!(pentagonal_numbers(15, Generalized), vec![0, 1, 2, 5, 7, 12, 15]);
    }

    #[test]
    fn representation_examples() {
        assert!(is_pentagonal_plus_four_pentagonal(0, Generalized));
        assert!(is_pentagonal_plus_four_pentagonal(5, Generalized));
        assert!(is_twice_pentagonal_plus_thrice_triangular(3, Generalized));
        assert!(!is_pentagonal_plus_four_pentagonal(0, PositiveIndex));
    }

    #[test]
    fn representations_match_brute_force() {
        for c in PentagonalConvention::ALL {
            let pent = brute_pentagonal(500, c);
            let tri: BTreeSet<u64> = (0..40).map(|j| j * (j + 1) / 2).collect();
            for n in 0..=500 {
                let a = pent.iter().any(|&x| pent.iter().any(|&y| x + 4 * y == n));
                let b = pent.iter().any(|&x| tri.iter().any(|&y| 2 * x + 3 * y == n));
                assert_eq!(is_pentagonal_plus_four_pentagonal(n, c), a, "{c:?} n = {n}");
                assert_eq!(is_twice_pentagonal_plus_thrice_triangular(n, c), b, "{c:?} n = {n}");
            }
        }
    }
}
