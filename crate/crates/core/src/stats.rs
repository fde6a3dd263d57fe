//! Rank and crank, and the five combinatorial identities relating `p_{A,a}`
//! to classical partition counts.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mex::{mex_of, MexParams};
use crate::partition::{enumerate_partitions, restricted_count, Partition, ResidueClassRule};
use crate::report::{Failure, ReportBuilder, Subject, VerificationReport};

/// Largest `n` accepted by [`verify_classical_identities`].
pub const IDENTITY_SWEEP_BOUND: usize = 40;

/// Largest part minus number of parts.
pub fn rank_of(p: &Partition) -> Result<i64> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    Ok(largest as i64 - p.len() as i64)
}

/// Largest part if there are no ones; otherwise the number of parts larger
/// than the number of ones, minus the number of ones.
pub fn crank_of(p: &Partition) -> Result<i64> {
    let largest = p.largest().ok_or(Error::EmptyPartition)?;
    let ones = p.multiplicity(1);
    if ones == 0 {
        return Ok(largest as i64);
    }
    let above = p.parts().iter().filter(|&&x| x as usize > ones).count();
    Ok(above as i64 - ones as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalIdentity {
    /// `p_{1,1}(n)` = partitions with crank >= 0
    CrankNonNegative,
    /// `p_{3,3}(n)` = partitions with rank >= -1
    RankAtLeastMinusOne,
    /// `p_{2,1}(n)` = partitions into even parts
    EvenParts,
    /// `p_{4,2}(n) - p_o(n)` = partitions into parts `±4, ±6, ±8, ±10 (mod 32)`
    ResiduesMod32,
    /// `p_{6,3}(n) - p_o(n)` = partitions into parts `±2, ±4, ±5, ±6, ±7, ±8 (mod 24)`
    ResiduesMod24,
}

impl ClassicalIdentity {
    pub const ALL: [ClassicalIdentity; 5] = [
        ClassicalIdentity::CrankNonNegative,
        ClassicalIdentity::RankAtLeastMinusOne,
        ClassicalIdentity::EvenParts,
        ClassicalIdentity::ResiduesMod32,
        ClassicalIdentity::ResiduesMod24,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClassicalIdentity::CrankNonNegative => "p11_eq_crank_nonnegative",
            ClassicalIdentity::RankAtLeastMinusOne => "p33_eq_rank_at_least_minus_one",
            ClassicalIdentity::EvenParts => "p21_eq_even_parts",
            ClassicalIdentity::ResiduesMod32 => "p42_minus_po_eq_residues_mod_32",
            ClassicalIdentity::ResiduesMod24 => "p63_minus_po_eq_residues_mod_24",
        }
    }
}

/// Both sides of every identity at a single `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySides {
    pub n: usize,
    pub sides: Vec<(ClassicalIdentity, BigInt, BigInt)>,
}

pub fn mod32_rule() -> ResidueClassRule {
    ResidueClassRule::plus_minus(32, &[4, 6, 8, 10]).expect("valid rule")
}

pub fn mod24_rule() -> ResidueClassRule {
    ResidueClassRule::plus_minus(24, &[2, 4, 5, 6, 7, 8]).expect("valid rule")
}

/// Evaluates both sides of the five identities at `n >= 1` with a single
/// enumeration pass over the partitions of `n`.
pub fn identity_sides(n: usize) -> Result<IdentitySides> {
    if n == 0 || n > IDENTITY_SWEEP_BOUND {
        return Err(Error::InvalidArgument(format!(
            "identity sweeps need 1 <= n <= {IDENTITY_SWEEP_BOUND}, got {n}"
        )));
    }
    let mex_params = [(1, 1), (3, 3), (2, 1), (4, 2), (6, 3)].map(|(a, r)| MexParams::new(a, r).expect("valid"));
    let mut mex_counts = [0i64; 5];
    let mut crank_nonneg = 0i64;
    let mut rank_ge = 0i64;
    for p in enumerate_partitions(n) {
        for (count, params) in mex_counts.iter_mut().zip(mex_params) {
            if params.accepts(mex_of(&p, params)) {
                *count += 1;
            }
        }
        if crank_of(&p)? >= 0 {
            crank_nonneg += 1;
        }
        if rank_of(&p)? >= -1 {
            rank_ge += 1;
        }
    }
    let [p11, p33, p21, p42, p63] = mex_counts.map(BigInt::from);
    let po = restricted_count(n, &ResidueClassRule::odd_parts());
    let sides = vec![
        (ClassicalIdentity::CrankNonNegative, p11, BigInt::from(crank_nonneg)),
        (ClassicalIdentity::RankAtLeastMinusOne, p33, BigInt::from(rank_ge)),
        (
            ClassicalIdentity::EvenParts,
            p21,
            restricted_count(n, &ResidueClassRule::even_parts()),
        ),
        (ClassicalIdentity::ResiduesMod32, p42 - &po, restricted_count(n, &mod32_rule())),
        (ClassicalIdentity::ResiduesMod24, p63 - &po, restricted_count(n, &mod24_rule())),
    ];
    Ok(IdentitySides { n, sides })
}

/// Checks the selected identities for every `1 <= n <= n_max`.
pub fn verify_identities(which: &[ClassicalIdentity], n_max: usize, id: &str) -> Result<VerificationReport> {
    if n_max == 0 || n_max > IDENTITY_SWEEP_BOUND {
        return Err(Error::InvalidArgument(format!(
            "identity sweeps need 1 <= n_max <= {IDENTITY_SWEEP_BOUND}, got {n_max}"
        )));
    }
    let mut report = ReportBuilder::new(Subject::check(id));
    report.note("n = 0 excluded: rank and crank of the empty partition are undefined");
    for n in 1..=n_max {
        for (identity, lhs, rhs) in identity_sides(n)?.sides {
            if !which.contains(&identity) {
                continue;
            }
            report.record(lhs == rhs, || Failure {
                n: n as u64,
                argument: n as u64,
                value: lhs.to_string(),
                expected: rhs.to_string(),
                label: Some(identity.id().to_string()),
            });
        }
    }
    Ok(report.finish())
}

/// All five identities in one report; failures carry the identity id.
pub fn verify_classical_identities(n_max: usize) -> Result<VerificationReport> {
    verify_identities(&ClassicalIdentity::ALL, n_max, "classical_identities")
}
