//! Named verification suites with their default sweep sizes.

use std::fmt;
use std::str::FromStr;

use crate::congruence::arith::{delta, smallest_nonresidue_prime};
use crate::congruence::check::clip_to_order;
use crate::congruence::{
    calibrate_pentagonal_convention, check_conditional, check_eta_form, check_mex_identity,
    check_parity_bridge, check_parity_characterization, check_progression_capped, family_catalog,
    ConditionalFamily, Evaluator, Family, FunctionId, ParityCharacterization, PentagonalConvention,
    ProgressionSpec,
};
use crate::error::{Error, Result};
use crate::mex::MexFamily;
use crate::report::{Failure, ReportBuilder, Subject, VerificationReport};
use crate::stats::{verify_classical_identities, IDENTITY_SWEEP_BOUND};

/// Progression sweeps never look past this argument unless asked to.
pub const ARGUMENT_CAP: u64 = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Thm1,
    Thm2,
    Ramanujan,
    Thm3,
    Parity,
    Section1,
    Thm5,
    Thm11,
    Thm6,
    Cor1,
    Thm12,
    Thm13,
    Thm14,
    Final,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::All,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Ramanujan,
        Suite::Thm3,
        Suite::Parity,
        Suite::Section1,
        Suite::Thm5,
        Suite::Thm11,
        Suite::Thm6,
        Suite::Cor1,
        Suite::Thm12,
        Suite::Thm13,
        Suite::Thm14,
        Suite::Final,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Ramanujan => "ramanujan",
            Suite::Thm3 => "thm3",
            Suite::Parity => "parity",
            Suite::Section1 => "section1",
            Suite::Thm5 => "thm5",
            Suite::Thm11 => "thm11",
            Suite::Thm6 => "thm6",
            Suite::Cor1 => "cor1",
            Suite::Thm12 => "thm12",
            Suite::Thm13 => "thm13",
            Suite::Thm14 => "thm14",
            Suite::Final => "final",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Sweep sizes and family parameters; `None` selects the suite default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: Option<u64>,
    pub t_max: Option<u32>,
    pub k_max: Option<u32>,
    pub alpha_max: Option<u32>,
    pub beta_max: Option<u32>,
    pub prime: Option<u64>,
    pub argument_cap: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            n_max: None,
            t_max: None,
            k_max: None,
            alpha_max: None,
            beta_max: None,
            prime: None,
            argument_cap: ARGUMENT_CAP,
        }
    }
}

impl Bounds {
    fn n(&self, default: u64) -> u64 {
        self.n_max.unwrap_or(default)
    }
}

/// Runs `suite`, returning one report per family or check in a fixed order.
pub fn run_suite(suite: Suite, bounds: &Bounds, eval: &Evaluator) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    match suite {
        Suite::All => {
            for s in &Suite::ALL[1..] {
                out.extend(run_suite(*s, bounds, eval)?);
            }
        }
        Suite::Thm1 => {
            let (n, note) = clip(bounds.n(500), 1, 0, eval)?;
            for t in 1..=bounds.t_max.unwrap_or(7) {
                for family in [MexFamily::Diagonal, MexFamily::Doubled] {
                    let mut r = check_mex_identity(eval, family, t, n, 40)?;
                    r.notes.extend(note.clone());
                    out.push(r);
                }
            }
        }
        Suite::Thm2 => {
            let n = bounds.n(100);
            for (a, b, m) in [(5, 4, 5), (7, 5, 7), (11, 6, 11), (25, 24, 25)] {
                let hypothesis = ProgressionSpec::new(format!("hypothesis p({a}n+{b}) mod {m}"), FunctionId::P, a, b, m)?;
                out.push(check_progression_capped(eval, &hypothesis, 3 * n, bounds.argument_cap)?);
                for t in 1..=bounds.t_max.unwrap_or(3) {
                    let family = Family::Transfer { a, b, m, t, variant: None };
                    sweep(&mut out, eval, family, n, bounds.argument_cap)?;
                }
            }
        }
        Suite::Ramanujan => {
            let n = bounds.n(200);
            let mut deltas = ReportBuilder::new(Subject::check("delta_inverse"));
            for p in [5u64, 7, 11] {
                for k in 1..=bounds.k_max.unwrap_or(2) {
                    let d = delta(p, k)?;
                    let pk = p.pow(k);
                    let product = 24 * d as u128 % pk as u128;
                    deltas.record(product == 1, || Failure {
                        n: k as u64,
                        argument: d,
                        value: product.to_string(),
                        expected: "1".into(),
                        label: Some(format!("p={p}")),
                    });
                    for t in 1..=bounds.t_max.unwrap_or(2) {
                        let family = Family::Ramanujan { p, k, t, variant: None };
                        sweep(&mut out, eval, family, n, bounds.argument_cap)?;
                    }
                }
            }
            out.insert(0, deltas.finish());
        }
        Suite::Thm3 => {
            let ts: Vec<u32> = match bounds.t_max {
                Some(t) => (1..=t).collect(),
                None => vec![1, 2, 3, 5, 7],
            };
            let (n, note) = clip(bounds.n(500), 1, 0, eval)?;
            for &t in &ts {
                let mut r = check_parity_bridge(eval, t, n)?;
                r.notes.extend(note.clone());
                out.push(r);
            }
            for t in ts.into_iter().filter(|t| [1, 3].contains(t)) {
                let mut r = check_eta_form(eval, t, n.min(300))?;
                r.notes.extend(note.clone());
                out.push(r);
            }
        }
        Suite::Parity => {
            let (n, note) = clip(bounds.n(1000), 1, 0, eval)?;
            for which in ParityCharacterization::ALL {
                let mut r = check_parity_characterization(eval, which, n)?;
                r.notes.extend(note.clone());
                out.push(r);
            }
        }
        Suite::Section1 => {
            let n = bounds.n(35);
            if n == 0 || n > IDENTITY_SWEEP_BOUND as u64 {
                return Err(Error::InvalidArgument(format!(
                    "identity sweeps need 1 <= n-max <= {IDENTITY_SWEEP_BOUND}, got {n}"
                )));
            }
            out.push(verify_classical_identities(n as usize)?);
        }
        Suite::Thm5 => {
            let primes = bounds.prime.map_or(vec![5, 7, 11], |p| vec![p]);
            for p in primes {
                for k in 0..=bounds.k_max.unwrap_or(1) {
                    sweep(&mut out, eval, Family::Thm5 { p, k }, bounds.n(100), bounds.argument_cap)?;
                }
            }
        }
        Suite::Thm11 => {
            let p = bounds.prime.unwrap_or(7);
            for alpha in 0..=bounds.alpha_max.unwrap_or(1) {
                let family = Family::Thm11 { p, alpha, j: None };
                sweep(&mut out, eval, family, bounds.n(100), bounds.argument_cap)?;
            }
        }
        Suite::Thm6 => thm6(&mut out, bounds, eval)?,
        Suite::Cor1 => {
            let p1 = bounds.prime.unwrap_or(7);
            let p2 = bounds.prime.unwrap_or_else(|| smallest_nonresidue_prime(-2));
            for alpha in 0..=bounds.alpha_max.unwrap_or(0) {
                for (p, branch) in [(p1, 1), (p2, 2)] {
                    let family = Family::Cor1 { p, alpha, branch };
                    sweep(&mut out, eval, family, bounds.n(100), bounds.argument_cap)?;
                }
            }
        }
        Suite::Thm12 => {
            for alpha in 0..=bounds.alpha_max.unwrap_or(1) {
                sweep(&mut out, eval, Family::Thm12 { alpha, row: None }, bounds.n(100), bounds.argument_cap)?;
            }
        }
        Suite::Thm13 => {
            let p = bounds.prime.unwrap_or_else(|| smallest_nonresidue_prime(-10));
            for alpha in 0..=bounds.alpha_max.unwrap_or(1) {
                let family = Family::Thm13 { p, alpha, j: None };
                sweep(&mut out, eval, family, bounds.n(100), bounds.argument_cap)?;
            }
        }
        Suite::Thm14 => {
            for alpha in 0..=bounds.alpha_max.unwrap_or(1) {
                let family = Family::Thm14 { alpha, branch: None };
                sweep(&mut out, eval, family, bounds.n(100), bounds.argument_cap)?;
            }
        }
        Suite::Final => {
            let p = bounds.prime.unwrap_or_else(|| smallest_nonresidue_prime(-21));
            for alpha in 0..=bounds.alpha_max.unwrap_or(1) {
                for beta in 0..=bounds.beta_max.unwrap_or(1) {
                    let family = Family::Final { p, alpha, beta, branch: None };
                    sweep(&mut out, eval, family, bounds.n(100), bounds.argument_cap)?;
                }
            }
        }
    }
    Ok(out)
}

fn sweep(out: &mut Vec<VerificationReport>, eval: &Evaluator, family: Family, n: u64, cap: u64) -> Result<()> {
    for spec in family_catalog(family)? {
        out.push(check_progression_capped(eval, &spec, n, cap)?);
    }
    Ok(())
}

/// Largest index within the evaluator's order, or an error if even `n = 0`
/// is out of reach.
fn clip(n: u64, step: u64, offset: u64, eval: &Evaluator) -> Result<(u64, Option<String>)> {
    clip_to_order(n, step, offset, eval.order()).ok_or(Error::TruncationTooSmall {
        needed: offset,
        order: eval.order(),
    })
}

fn thm6(out: &mut Vec<VerificationReport>, bounds: &Bounds, eval: &Evaluator) -> Result<()> {
    sweep(out, eval, Family::Thm6, bounds.n(120), bounds.argument_cap)?;

    let (n, note) = clip(bounds.n(60), 16, 7, eval)?;
    for which in ConditionalFamily::ALL {
        let mut r = check_conditional(eval, which, FunctionId::PTt { t: 3 }, 2, n, PentagonalConvention::Generalized)?;
        for (convention, failed) in calibrate_pentagonal_convention(eval, which, n)? {
            r.notes.push(format!(
                "calibration: {} gives {failed} counterexample(s)",
                convention.name()
            ));
        }
        r.notes.extend(note.clone());
        out.push(r);
    }

    // the mod-8 statements for C_{12,3} behind the parity results
    let c123 = FunctionId::Singular { k: 12, i: 3 };
    for b in [11, 15] {
        let spec = ProgressionSpec::new(format!("C_12_3(16n+{b}) mod 8"), c123, 16, b, 8)?;
        out.push(check_progression_capped(eval, &spec, bounds.n(500), bounds.argument_cap)?);
    }
    let (n, note) = clip(bounds.n(500), 16, 7, eval)?;
    for which in ConditionalFamily::ALL {
        let mut r = check_conditional(eval, which, c123, 8, n, PentagonalConvention::Generalized)?;
        r.notes.extend(note.clone());
        out.push(r);
    }
    Ok(())
}
