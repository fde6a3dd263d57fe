//! Congruence families as lists of [`ProgressionSpec`]s.

use super::arith::{delta, is_prime, jacobi_symbol};
use super::spec::{FunctionId, ProgressionSpec};
use crate::error::{Error, Result};
use crate::mex::MexFamily;

/// Which of the three families of the `(-21/p)` theorem to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FinalBranch {
    /// `r` in {3, 4, 6}
    R(u32),
    /// `s` in {2, 4, 5}
    S(u32),
    /// the `p ∤ n` family
    Third,
}

/// A parametrized congruence family. `None` parameters mean "every admissible value".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `p_{at,at}(an+b)` and `p_{2at,at}(an+b)` mod `m`, given `p(an+b) ≡ 0 (mod m)`.
    Transfer {
        a: u64,
        b: u64,
        m: u64,
        t: u32,
        variant: Option<MexFamily>,
    },
    /// `p^k`-progressions with offset `1/24 mod p^k`, `p` in {5, 7, 11}.
    Ramanujan {
        p: u64,
        k: u32,
        t: u32,
        variant: Option<MexFamily>,
    },
    /// `p_{1,1}(p^(2k+1) n + (p^(2k+2)-1)/12)`, `p ∤ n`.
    Thm5 { p: u64, k: u32 },
    /// `p_{2,2}(p^(2α+1)(pn+j) + 5(p^(2α+2)-1)/24)`.
    Thm11 { p: u64, alpha: u32, j: Option<u64> },
    /// `p_{3,3}(16n+11)` and `p_{3,3}(16n+15)`.
    Thm6,
    /// `p_{3,3}(16 p^(2α+1) n + (c p^(2α+2)-1)/3)`, `p ∤ n`, with `c = 10` or `22`.
    Cor1 { p: u64, alpha: u32, branch: u8 },
    /// Four `p_{5,5}` progressions with powers of 5.
    Thm12 { alpha: u32, row: Option<u8> },
    /// `p_{5,5}(2p^(2α+1)(pn+j) + 7(p^(2α+2)-1)/12)` for `(-10/p) = -1`.
    Thm13 { p: u64, alpha: u32, j: Option<u64> },
    /// `p_{7,7}` progressions with powers of 7; `r` in {3,4,6} and `s` in {2,4,5}.
    Thm14 { alpha: u32, branch: Option<FinalBranch> },
    /// `p_{7,7}` progressions twisted by `p^(2β)` for `(-21/p) = -1`.
    Final {
        p: u64,
        alpha: u32,
        beta: u32,
        branch: Option<FinalBranch>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParams(msg.into())
}

fn pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("family parameters"))
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow("family parameters"))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("family parameters"))
}

/// `(numerator - c) / denominator`, required to be a non-negative integer.
fn exact(numerator: u64, minus: u64, denominator: u64) -> Result<u64> {
    let numerator = numerator
        .checked_sub(minus)
        .ok_or_else(|| invalid(format!("offset numerator {numerator} - {minus} is negative")))?;
    if numerator % denominator != 0 {
        return Err(Error::NonIntegralOffset { numerator, denominator });
    }
    Ok(numerator / denominator)
}

fn require_prime_at_least_5(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(invalid(format!("p = {p} must be a prime >= 5")));
    }
    Ok(())
}

fn variants(variant: Option<MexFamily>) -> Vec<MexFamily> {
    match variant {
        Some(v) => vec![v],
        None => vec![MexFamily::Diagonal, MexFamily::Doubled],
    }
}

fn mex_function(family: MexFamily, t: u64) -> Result<FunctionId> {
    let t = u32::try_from(t).map_err(|_| Error::Overflow("mex parameter t"))?;
    match family {
        MexFamily::Diagonal => FunctionId::p_tt(t),
        MexFamily::Doubled => FunctionId::p_2tt(t),
    }
}

fn js(j: Option<u64>, p: u64) -> Result<Vec<u64>> {
    match j {
        Some(j) if (1..p).contains(&j) => Ok(vec![j]),
        Some(j) => Err(invalid(format!("j = {j} must satisfy 1 <= j <= p - 1 = {}", p - 1))),
        None => Ok((1..p).collect()),
    }
}

/// Emits the specs of `family`, validating its side conditions.
pub fn family_catalog(family: Family) -> Result<Vec<ProgressionSpec>> {
    match family {
        Family::Transfer { a, b, m, t, variant } => {
            if a == 0 || t == 0 {
                return Err(invalid("a and t must be positive"));
            }
            let at = mul(a, t as u64)?;
            variants(variant)
                .into_iter()
                .map(|v| {
                    let f = mex_function(v, at)?;
                    ProgressionSpec::new(format!("thm2 a={a} b={b} m={m} t={t} {}", f.name()), f, a, b, m)
                })
                .collect()
        }
        Family::Ramanujan { p, k, t, variant } => {
            if !matches!(p, 5 | 7 | 11) || k == 0 || t == 0 {
                return Err(invalid(format!(
                    "need p in {{5, 7, 11}}, k >= 1 and t >= 1, got p = {p}, k = {k}, t = {t}"
                )));
            }
            let step = pow(p, k)?;
            let modulus = if p == 7 { pow(7, k / 2 + 1)? } else { step };
            let offset = delta(p, k)?;
            variants(variant)
                .into_iter()
                .map(|v| {
                    let f = mex_function(v, mul(step, t as u64)?)?;
                    let label = format!("ramanujan p={p} k={k} t={t} {}", f.name());
                    ProgressionSpec::new(label, f, step, offset, modulus)
                })
                .collect()
        }
        Family::Thm5 { p, k } => {
            require_prime_at_least_5(p)?;
            if p % 12 == 1 {
                return Err(invalid(format!("p = {p} must not be 1 mod 12")));
            }
            let step = pow(p, 2 * k + 1)?;
            let offset = exact(pow(p, 2 * k + 2)?, 1, 12)?;
            let spec = ProgressionSpec::new(format!("thm5 p={p} k={k}"), FunctionId::PTt { t: 1 }, step, offset, 2)?;
            Ok(vec![spec.excluding_multiples_of(p)])
        }
        Family::Thm11 { p, alpha, j } => {
            if !is_prime(p) || p % 4 != 3 {
                return Err(invalid(format!("p = {p} must be a prime with p = 3 mod 4")));
            }
            if p < 7 {
                return Err(invalid(format!(
                    "p = {p}: the offset 5(p^2 - 1)/24 is only integral for p >= 5"
                )));
            }
            let inner = pow(p, 2 * alpha + 1)?;
            let base = exact(mul(5, pow(p, 2 * alpha + 2)?)?, 5, 24)?;
            js(j, p)?
                .into_iter()
                .map(|j| {
                    let offset = add(mul(inner, j)?, base)?;
                    let label = format!("thm11 p={p} alpha={alpha} j={j}");
                    ProgressionSpec::new(label, FunctionId::PTt { t: 2 }, mul(inner, p)?, offset, 2)
                })
                .collect()
        }
        Family::Thm6 => [11, 15]
            .into_iter()
            .map(|b| ProgressionSpec::new(format!("thm6 16n+{b}"), FunctionId::PTt { t: 3 }, 16, b, 2))
            .collect(),
        Family::Cor1 { p, alpha, branch } => {
            require_prime_at_least_5(p)?;
            let c = match branch {
                1 if p % 4 == 3 => 10,
                1 => return Err(invalid(format!("branch 1 needs p = 3 mod 4, got p = {p}"))),
                2 if jacobi_symbol(-2, p)? == -1 => 22,
                2 => return Err(invalid(format!("branch 2 needs (-2/p) = -1, got p = {p}"))),
                _ => return Err(invalid(format!("branch must be 1 or 2, got {branch}"))),
            };
            let step = mul(16, pow(p, 2 * alpha + 1)?)?;
            let offset = exact(mul(c, pow(p, 2 * alpha + 2)?)?, 1, 3)?;
            let label = format!("cor1 branch={branch} p={p} alpha={alpha}");
            let spec = ProgressionSpec::new(label, FunctionId::PTt { t: 3 }, step, offset, 2)?;
            Ok(vec![spec.excluding_multiples_of(p)])
        }
        Family::Thm12 { alpha, row } => {
            let rows: Vec<u8> = match row {
                Some(r @ 1..=4) => vec![r],
                Some(r) => return Err(invalid(format!("row must be 1..=4, got {r}"))),
                None => vec![1, 2, 3, 4],
            };
            rows.into_iter()
                .map(|r| {
                    let (c, e) = match r {
                        1 => (31, 2 * alpha),
                        2 => (79, 2 * alpha),
                        3 => (83, 2 * alpha + 1),
                        _ => (107, 2 * alpha + 1),
                    };
                    let step = mul(2, pow(5, e + 1)?)?;
                    let offset = exact(mul(c, pow(5, e)?)?, 7, 12)?;
                    let label = format!("thm12 alpha={alpha} row={r}");
                    ProgressionSpec::new(label, FunctionId::PTt { t: 5 }, step, offset, 2)
                })
                .collect()
        }
        Family::Thm13 { p, alpha, j } => {
            require_prime_at_least_5(p)?;
            if jacobi_symbol(-10, p)? != -1 {
                return Err(invalid(format!("need (-10/p) = -1, got p = {p}")));
            }
            let inner = mul(2, pow(p, 2 * alpha + 1)?)?;
            let base = mul(7, exact(pow(p, 2 * alpha + 2)?, 1, 12)?)?;
            js(j, p)?
                .into_iter()
                .map(|j| {
                    let offset = add(mul(inner, j)?, base)?;
                    let label = format!("thm13 p={p} alpha={alpha} j={j}");
                    ProgressionSpec::new(label, FunctionId::PTt { t: 5 }, mul(inner, p)?, offset, 2)
                })
                .collect()
        }
        Family::Thm14 { alpha, branch } => {
            if branch == Some(FinalBranch::Third) {
                return Err(invalid("the third family needs a prime p"));
            }
            seven_families(alpha, 1, branch, "thm14")
        }
        Family::Final { p, alpha, beta, branch } => {
            require_prime_at_least_5(p)?;
            if jacobi_symbol(-21, p)? != -1 {
                return Err(invalid(format!("need (-21/p) = -1, got p = {p}")));
            }
            let twist = pow(p, 2 * beta)?;
            let mut specs = seven_families(alpha, twist, branch, &format!("final p={p} beta={beta}"))?;
            if matches!(branch, None | Some(FinalBranch::Third)) {
                let step = mul(mul(2, pow(49, alpha)?)?, pow(p, 2 * beta + 1)?)?;
                let offset = exact(mul(mul(11, pow(49, alpha)?)?, pow(p, 2 * beta + 2)?)?, 5, 6)?;
                let label = format!("final p={p} beta={beta} alpha={alpha} third");
                let spec = ProgressionSpec::new(label, FunctionId::PTt { t: 7 }, step, offset, 2)?;
                specs.push(spec.excluding_multiples_of(p));
            }
            Ok(specs)
        }
    }
}

/// The `r` and `s` families for `p_{7,7}`, with every step and offset
/// numerator multiplied by `twist`.
fn seven_families(
    alpha: u32,
    twist: u64,
    branch: Option<FinalBranch>,
    prefix: &str,
) -> Result<Vec<ProgressionSpec>> {
    let all = [3, 4, 6]
        .map(FinalBranch::R)
        .into_iter()
        .chain([2, 4, 5].map(FinalBranch::S));
    let branches: Vec<FinalBranch> = match branch {
        None => all.collect(),
        Some(b @ (FinalBranch::R(3 | 4 | 6) | FinalBranch::S(2 | 4 | 5))) => vec![b],
        Some(FinalBranch::Third) => Vec::new(),
        Some(b) => return Err(invalid(format!("{b:?}: r must be in {{3, 4, 6}} and s in {{2, 4, 5}}"))),
    };
    branches
        .into_iter()
        .map(|b| {
            let (step, numerator, tag) = match b {
                FinalBranch::R(r) => (
                    mul(2, pow(7, 2 * alpha + 1)?)?,
                    mul(11 + 12 * r as u64, pow(49, alpha)?)?,
                    format!("r={r}"),
                ),
                FinalBranch::S(s) => (
                    mul(2, pow(49, alpha + 1)?)?,
                    mul(12 * s as u64 + 5, pow(7, 2 * alpha + 1)?)?,
                    format!("s={s}"),
                ),
                FinalBranch::Third => unreachable!("handled by the caller"),
            };
            let offset = exact(mul(numerator, twist)?, 5, 6)?;
            let label = format!("{prefix} alpha={alpha} {tag}");
            ProgressionSpec::new(label, FunctionId::PTt { t: 7 }, mul(step, twist)?, offset, 2)
        })
        .collect()
}
