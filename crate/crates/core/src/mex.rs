//! The generalized minimal excludant `mex_{A,a}` and the counting functions
//! `p_{A,a}(n)` built on it.
//!
//! `p_{A,a}(n)` counts partitions of `n` whose smallest missing part congruent
//! to `a (mod A)` is itself congruent to `a (mod 2A)`. The definitional count
//! ([`mex_count_oracle`]) works for any `(A, a)`; the families `(t, t)` and
//! `(2t, t)` also have generating functions and closed sums over `p(n)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partition_count, partition_series, Partition, ENUMERATION_BOUND};
use crate::qseries::{alternating_squares, alternating_triangular, TruncatedSeries};

/// The pair `(A, a)` with `1 <= a <= A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MexParams {
    modulus: u32,
    residue: u32,
}

impl MexParams {
    pub fn new(modulus: u32, residue: u32) -> Result<Self> {
        if residue == 0 || residue > modulus {
            return Err(Error::InvalidMexParams { modulus, residue });
        }
        Ok(Self { modulus, residue })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    /// Whether a mex value is counted by `p_{A,a}`.
    pub fn accepts(&self, mex: u32) -> bool {
        let m2 = 2 * self.modulus;
        mex % m2 == self.residue % m2
    }
}

/// Smallest positive integer `≡ a (mod A)` that is not a part of `partition`.
pub fn mex_of(partition: &Partition, params: MexParams) -> u32 {
    let mut m = params.residue;
    while partition.contains(m) {
        m += params.modulus;
    }
    m
}

/// `p_{A,a}(n)` by enumerating every partition of `n`. Limited to
/// `n <= ENUMERATION_BOUND`.
pub fn mex_count_oracle(n: usize, params: MexParams) -> Result<u64> {
    if n > ENUMERATION_BOUND {
        return Err(Error::OracleBoundExceeded { n, max: ENUMERATION_BOUND });
    }
    Ok(enumerate_partitions(n)
        .filter(|p| params.accepts(mex_of(p, params)))
        .count() as u64)
}

/// Generating function of `p_{t,t}(n)`: `(1/(q;q)_inf) sum (-1)^n q^(t n(n+1)/2)`.
pub fn genfun_p_tt(t: usize, order: usize) -> TruncatedSeries {
    partition_series(order).mul_series(&alternating_triangular(t, order))
}

/// Generating function of `p_{2t,t}(n)`: `(1/(q;q)_inf) sum (-1)^n q^(t n^2)`.
pub fn genfun_p_2tt(t: usize, order: usize) -> TruncatedSeries {
    partition_series(order).mul_series(&alternating_squares(t, order))
}

/// `p_{t,t}(n) = p(n) + sum_r p(n - t r(2r+1)) - sum_s p(n - t s(2s-1))`.
pub fn identity_p_tt(t: usize, n: usize) -> BigInt {
    assert!(t >= 1);
    let n = n as i64;
    let t = t as i64;
    let mut total = partition_count(n);
    for r in 1.. {
        let arg = n - t * r * (2 * r + 1);
        if arg < 0 {
            break;
        }
        total += partition_count(arg);
    }
    for s in 1.. {
        let arg = n - t * s * (2 * s - 1);
        if arg < 0 {
            break;
        }
        total -= partition_count(arg);
    }
    total
}

/// `p_{2t,t}(n) = p(n) + sum_r p(n - 4t r^2) - sum_s p(n - t(2s-1)^2)`.
pub fn identity_p_2tt(t: usize, n: usize) -> BigInt {
    assert!(t >= 1);
    let n = n as i64;
    let t = t as i64;
    let mut total = partition_count(n);
    for r in 1.. {
        let arg = n - 4 * t * r * r;
        if arg < 0 {
            break;
        }
        total += partition_count(arg);
    }
    for s in 1.. {
        let arg = n - t * (2 * s - 1) * (2 * s - 1);
        if arg < 0 {
            break;
        }
        total -= partition_count(arg);
    }
    total
}

/// Which of the two families with a fast path a function belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MexFamily {
    /// `p_{t,t}`
    Diagonal,
    /// `p_{2t,t}`
    Doubled,
}

impl MexFamily {
    pub fn params(self, t: u32) -> Result<MexParams> {
        match self {
            MexFamily::Diagonal => MexParams::new(t, t),
            MexFamily::Doubled => MexParams::new(2 * t, t),
        }
    }

    pub fn series(self, t: usize, order: usize) -> TruncatedSeries {
        match self {
            MexFamily::Diagonal => genfun_p_tt(t, order),
            MexFamily::Doubled => genfun_p_2tt(t, order),
        }
    }

    pub fn identity(self, t: usize, n: usize) -> BigInt {
        match self {
            MexFamily::Diagonal => identity_p_tt(t, n),
            MexFamily::Doubled => identity_p_2tt(t, n),
        }
    }
}

/// First index in `0..=n_max` where oracle, identity and series disagree.
pub fn first_three_way_mismatch(family: MexFamily, t: usize, n_max: usize) -> Result<Option<usize>> {
    let params = family.params(t as u32)?;
    let series = family.series(t, n_max);
    for n in 0..=n_max {
        let oracle = BigInt::from(mex_count_oracle(n, params)?);
        if oracle != *series.coeff(n) || oracle != family.identity(t, n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta_cube_quotient;
    use num_traits::Zero;

    fn params(a: u32, r: u32) -> MexParams {
        MexParams::new(a, r).unwrap()
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn mex_examples_from_the_n5_table() {
        let table: [(&[u32], u32); 7] = [
            (&[5], 2),
            (&[4, 1], 2),
            (&[3, 2], 4),
            (&[3, 1, 1], 2),
            (&[2, 2, 1], 4),
            (&[2, 1, 1, 1], 4),
            (&[1, 1, 1, 1, 1], 2),
        ];
        for (parts, mex) in table {
            assert_eq!(mex_of(&part(parts), params(2, 2)), mex, "{parts:?}");
        }
        assert_eq!(mex_of(&Partition::empty(), params(7, 3)), 3);
    }

    #[test]
    fn mex_is_congruent_to_residue() {
        for p in enumerate_partitions(12) {
            for a in 1..=4 {
                for r in 1..=a {
                    let m = mex_of(&p, params(a, r));
                    assert_eq!(m % a, r % a);
                    assert!(!p.contains(m));
                }
            }
        }
    }

    #[test]
    fn invalid_params() {
        assert!(MexParams::new(3, 0).is_err());
        assert!(MexParams::new(3, 4).is_err());
        assert!(MexParams::new(3, 3).is_ok());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(mex_count_oracle(5, params(2, 2)).unwrap(), 4);
        assert_eq!(mex_count_oracle(0, params(5, 2)).unwrap(), 1);
        assert_eq!(mex_count_oracle(2, params(1, 1)).unwrap(), 1);
        assert_eq!(mex_count_oracle(1, params(2, 1)).unwrap(), 0);
        assert_eq!(mex_count_oracle(3, params(1, 1)).unwrap(), 2);
        assert_eq!(
            mex_count_oracle(61, params(1, 1)),
            Err(Error::OracleBoundExceeded { n: 61, max: 60 })
        );
    }

    #[test]
    fn genfun_examples() {
        assert_eq!(genfun_p_tt(2, 10).coeff(5), &BigInt::from(4));
        assert_eq!(genfun_p_tt(1, 10).coeff(0), &BigInt::from(1));
        assert_eq!(genfun_p_2tt(1, 10).coeff(0), &BigInt::from(1));
        let s = genfun_p_tt(3, 5);
        for n in 0..=5 {
            assert_eq!(s.coeff(n), &BigInt::from(mex_count_oracle(n, params(3, 3)).unwrap()));
        }
        for (t, a, r) in [(1, 2, 1), (2, 4, 2)] {
            let s = genfun_p_2tt(t, 12);
            for n in 0..=12 {
                assert_eq!(s.coeff(n), &BigInt::from(mex_count_oracle(n, params(a, r)).unwrap()));
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity_p_tt(2, 5), BigInt::from(4));
        assert_eq!(identity_p_tt(1, 0), BigInt::from(1));
        // p(10) + p(7) + p(0) - p(9) - p(4) = 42 + 15 + 1 - 30 - 5
        assert_eq!(identity_p_tt(1, 10), BigInt::from(23));
        assert_eq!(genfun_p_tt(1, 10).coeff(10), &BigInt::from(23));
        assert_eq!(identity_p_2tt(1, 0), BigInt::from(1));
        assert_eq!(identity_p_2tt(1, 1), BigInt::zero());
        let s = genfun_p_2tt(3, 30);
        for n in 0..=30 {
            assert_eq!(&identity_p_2tt(3, n), s.coeff(n));
        }
    }

    #[test]
    fn three_way_equivalence() {
        for t in [1, 2, 3, 5, 7] {
            assert_eq!(first_three_way_mismatch(MexFamily::Diagonal, t, 40).unwrap(), None, "t = {t}");
        }
        for t in [1, 2, 3] {
            assert_eq!(first_three_way_mismatch(MexFamily::Doubled, t, 40).unwrap(), None, "t = {t}");
        }
    }

    #[test]
    fn series_coefficients_are_counts() {
        for t in 1..=7 {
            assert!(genfun_p_tt(t, 500).is_non_negative());
            assert!(genfun_p_2tt(t, 500).is_non_negative());
        }
    }

    #[test]
    fn mod_two_reduction_to_eta_quotient() {
        for t in [1, 2, 3, 5, 7] {
            assert_eq!(
                genfun_p_tt(t, 200).reduce_mod(2),
                eta_cube_quotient(t, 200).reduce_mod(2),
                "t = {t}"
            );
        }
    }

    #[test]
    fn p_21_is_not_the_even_parts_count() {
        // p_{2,1}(3) = 1 (only the partition 3 has mex_{2,1} = 1), while 3 has
        // no partition into even parts.
        assert_eq!(mex_count_oracle(3, params(2, 1)).unwrap(), 1);
        assert_eq!(mex_count_oracle(6, params(2, 1)).unwrap(), 6);
    }
}
