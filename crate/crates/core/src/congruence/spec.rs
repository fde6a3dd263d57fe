use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mex::{genfun_p_2tt, genfun_p_tt};
use crate::overpartition::{genfun_singular, SingularParams};
use crate::partition::partition_series;
use crate::qseries::TruncatedSeries;

/// A counting function that has a generating-function evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "function")]
pub enum FunctionId {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "p_tt")]
    PTt { t: u32 },
    #[serde(rename = "p_2tt")]
    P2Tt { t: u32 },
    #[serde(rename = "singular")]
    Singular { k: u32, i: u32 },
}

impl FunctionId {
    pub fn p_tt(t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        Ok(FunctionId::PTt { t })
    }

    pub fn p_2tt(t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidArgument("t must be positive".into()));
        }
        Ok(FunctionId::P2Tt { t })
    }

    pub fn singular(params: SingularParams) -> Self {
        FunctionId::Singular {
            k: params.k(),
            i: params.i(),
        }
    }

    /// Generating function truncated at `order`.
    pub fn series(self, order: usize) -> Result<TruncatedSeries> {
        Ok(match self {
            FunctionId::P => partition_series(order),
            FunctionId::PTt { t } => genfun_p_tt(t as usize, order),
            FunctionId::P2Tt { t } => genfun_p_2tt(t as usize, order),
            FunctionId::Singular { k, i } => genfun_singular(SingularParams::new(k, i)?, order),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::P => "p",
            FunctionId::PTt { .. } => "p_tt",
            FunctionId::P2Tt { .. } => "p_2tt",
            FunctionId::Singular { .. } => "singular",
        }
    }

    /// Parameters as `key=value` pairs joined by `;`.
    pub fn params(self) -> String {
        match self {
            FunctionId::P => String::new(),
            FunctionId::PTt { t } | FunctionId::P2Tt { t } => format!("t={t}"),
            FunctionId::Singular { k, i } => format!("k={k};i={i}"),
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionId::P => write!(f, "p"),
            FunctionId::PTt { t } => write!(f, "p_{{{t},{t}}}"),
            FunctionId::P2Tt { t } => write!(f, "p_{{{},{t}}}", 2 * t),
            FunctionId::Singular { k, i } => write!(f, "C_{{{k},{i}}}"),
        }
    }
}

/// The claim `f(step * n + offset) ≡ 0 (mod modulus)` for every `n >= 0`,
/// except indices `n` divisible by `exclude_multiples_of` when set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionSpec {
    pub label: String,
    #[serde(flatten)]
    pub function: FunctionId,
    pub step: u64,
    pub offset: u64,
    pub modulus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exclude_multiples_of: Option<u64>,
}

impl ProgressionSpec {
    pub fn new(label: impl Into<String>, function: FunctionId, step: u64, offset: u64, modulus: u64) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidArgument("progression step must be positive".into()));
        }
        if modulus < 2 {
            return Err(Error::InvalidArgument("congruence modulus must be at least 2".into()));
        }
        Ok(Self {
            label: label.into(),
            function,
            step,
            offset,
            modulus,
            exclude_multiples_of: None,
        })
    }

    /// Excludes sweep indices `n` with `prime | n`.
    pub fn excluding_multiples_of(mut self, prime: u64) -> Self {
        self.exclude_multiples_of = Some(prime);
        self
    }

    pub fn is_excluded(&self, n: u64) -> bool {
        self.exclude_multiples_of.is_some_and(|p| n.is_multiple_of(p))
    }

    pub fn argument(&self, n: u64) -> Option<u64> {
        self.step.checked_mul(n)?.checked_add(self.offset)
    }

    /// Largest `n <= n_limit` with `argument(n) <= cap`, or `None` if even
    /// `n = 0` exceeds the cap.
    pub fn sweep_limit(&self, n_limit: u64, cap: u64) -> Option<u64> {
        if self.offset > cap {
            return None;
        }
        Some(n_limit.min((cap - self.offset) / self.step))
    }
}

impl fmt::Display for ProgressionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}({}n + {}) ≡ 0 (mod {})",
            self.label, self.function, self.step, self.offset, self.modulus
        )?;
        if let Some(p) = self.exclude_multiples_of {
            write!(f, " for {p} ∤ n")?;
        }
        Ok(())
    }
}
