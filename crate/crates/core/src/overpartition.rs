//! Andrews' singular overpartitions `C_{k,i}(n)`: overpartitions of `n` with no
//! part divisible by `k`, where only parts `≡ ±i (mod k)` may be overlined.

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partition_series, Partition};
use crate::qseries::TruncatedSeries;

/// Largest `n` accepted by [`singular_overpartition_oracle`].
pub const SINGULAR_ORACLE_BOUND: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularParams {
    k: u32,
    i: u32,
}

impl SingularParams {
    pub fn new(k: u32, i: u32) -> Result<Self> {
        if k < 3 || i == 0 || i > k / 2 {
            return Err(Error::InvalidSingularParams { k, i });
        }
        Ok(Self { k, i })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn allows_part(&self, part: u32) -> bool {
        !part.is_multiple_of(self.k)
    }

    pub fn may_overline(&self, part: u32) -> bool {
        let r = part % self.k;
        r == self.i || r == self.k - self.i
    }

    /// `i = k/2`, where the classes `+i` and `-i` coincide.
    pub fn is_self_paired(&self) -> bool {
        2 * self.i == self.k
    }

    /// Number of singular overpartitions whose underlying partition is `p`,
    /// or 0 if `p` has a part divisible by `k`.
    pub fn weight(&self, p: &Partition) -> u64 {
        self.weight_with(p, OverlineConvention::FirstOccurrence)
    }

    pub fn weight_with(&self, p: &Partition, convention: OverlineConvention) -> u64 {
        if !p.parts().iter().all(|&x| self.allows_part(x)) {
            return 0;
        }
        p.distinct_parts()
            .filter(|&x| self.may_overline(x))
            .map(|x| match convention {
                OverlineConvention::SplitSelfPaired if self.is_self_paired() => {
                    if p.multiplicity(x) == 1 {
                        3
                    } else {
                        4
                    }
                }
                _ => 2,
            })
            .product()
    }
}

/// How overlines are counted on a part value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OverlineConvention {
    /// Only the first occurrence of an eligible value may be overlined, so
    /// each eligible distinct value doubles the count.
    #[default]
    FirstOccurrence,
    /// When `i = k/2`, the `+i` and `-i` classes each contribute their own
    /// overlined copy, matching the squared factor `(-q^i;q^k)^2_inf`.
    /// Identical to `FirstOccurrence` otherwise.
    SplitSelfPaired,
}

/// `C_{k,i}(n)` by enumeration: each admissible partition contributes `2^d`,
/// `d` being its number of distinct overlinable part values.
pub fn singular_overpartition_oracle(n: usize, params: SingularParams) -> Result<u64> {
    singular_overpartition_oracle_with(n, params, OverlineConvention::FirstOccurrence)
}

pub fn singular_overpartition_oracle_with(
    n: usize,
    params: SingularParams,
    convention: OverlineConvention,
) -> Result<u64> {
    if n > SINGULAR_ORACLE_BOUND {
        return Err(Error::OracleBoundExceeded { n, max: SINGULAR_ORACLE_BOUND });
    }
    Ok(enumerate_partitions(n).map(|p| params.weight_with(&p, convention)).sum())
}

/// `(q^k;q^k)_inf (-q^i;q^k)_inf (-q^(k-i);q^k)_inf / (q;q)_inf`.
///
/// The numerator is summed by the triple product identity as
/// `sum_{n in Z} q^(k n(n-1)/2 + i n)`, so only the division by `(q;q)_inf`
/// touches a dense series.
pub fn genfun_singular(params: SingularParams, order: usize) -> TruncatedSeries {
    partition_series(order).mul_series(&singular_numerator(params, order))
}

fn singular_numerator(params: SingularParams, order: usize) -> TruncatedSeries {
    let k = params.k as i64;
    let i = params.i as i64;
    let mut terms = Vec::new();
    for n in 0i64.. {
        let mut any = false;
        for m in [n, -n - 1] {
            let e = k * m * (m - 1) / 2 + i * m;
            if e <= order as i64 {
                terms.push((e as usize, 1i64));
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    TruncatedSeries::from_terms(order, terms)
}
