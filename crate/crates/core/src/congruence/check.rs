//! Sweeps that turn claims into [`VerificationReport`]s.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::evaluator::Evaluator;
use super::predicates::{
    is_3n_plus_1_square, is_k_times_3k_minus_1, is_pentagonal_plus_four_pentagonal,
    is_twice_pentagonal_plus_thrice_triangular, PentagonalConvention,
};
use super::spec::{FunctionId, ProgressionSpec};
use crate::error::{Error, Result};
use crate::mex::{mex_count_oracle, MexFamily, MexParams};
use crate::overpartition::{singular_overpartition_oracle, SingularParams, SINGULAR_ORACLE_BOUND};
use crate::partition::ENUMERATION_BOUND;
use crate::qseries::eta_cube_quotient;
use crate::report::{Failure, ReportBuilder, Subject, VerificationReport};

fn residue(value: &BigInt, m: u64) -> BigInt {
    value.mod_floor(&BigInt::from(m))
}

/// Checks `f(a n + b) ≡ 0 (mod m)` for every non-excluded `n` in `0..=n_max`.
pub fn check_progression(eval: &Evaluator, spec: &ProgressionSpec, n_max: u64) -> Result<VerificationReport> {
    let last = spec.argument(n_max).ok_or(Error::Overflow("progression argument"))?;
    eval.ensure_within(last)?;
    let series = eval.series(spec.function)?;
    let mut report = ReportBuilder::new(Subject::Progression(spec.clone()));
    for n in 0..=n_max {
        if spec.is_excluded(n) {
            report.skip();
            continue;
        }
        let arg = spec.step * n + spec.offset;
        let r = residue(series.coeff(arg as usize), spec.modulus);
        report.record(r.is_zero(), || Failure {
            n,
            argument: arg,
            value: r.to_string(),
            expected: "0".into(),
            label: None,
        });
    }
    Ok(report.finish())
}

/// Like [`check_progression`], but sweeps only the indices whose argument
/// stays within `cap` and the evaluator's order. Clipping is recorded in the
/// report notes; a spec whose offset already exceeds the cap checks nothing.
pub fn check_progression_capped(
    eval: &Evaluator,
    spec: &ProgressionSpec,
    n_max: u64,
    cap: u64,
) -> Result<VerificationReport> {
    let cap = cap.min(eval.order() as u64);
    match spec.sweep_limit(n_max, cap) {
        None => {
            let mut report = ReportBuilder::new(Subject::Progression(spec.clone()));
            report.note(format!(
                "offset {} exceeds the argument cap {cap}; no index checked",
                spec.offset
            ));
            Ok(report.finish())
        }
        Some(n) => {
            let mut report = check_progression(eval, spec, n)?;
            if n < n_max {
                report
                    .notes
                    .push(format!("sweep clipped to n <= {n} by the argument cap {cap}"));
            }
            Ok(report)
        }
    }
}

/// Largest `n <= n_max` with `step * n + offset <= order`, and a note when
/// that is smaller than `n_max`.
pub fn clip_to_order(n_max: u64, step: u64, offset: u64, order: usize) -> Option<(u64, Option<String>)> {
    let order = order as u64;
    if offset > order {
        return None;
    }
    let n = n_max.min((order - offset) / step);
    let note = (n < n_max).then(|| format!("sweep clipped to n <= {n} by truncation order {order}"));
    Some((n, note))
}

/// The two parity characterizations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityCharacterization {
    /// `p_{1,1}(n)` and `C_{4,1}(n)` are odd iff `n = k(3k-1)`, `k` in Z.
    P11,
    /// `p_{3,3}(n)` and `C_{12,3}(n)` are odd iff `3n+1` is a square.
    P33,
}

impl ParityCharacterization {
    pub const ALL: [ParityCharacterization; 2] = [ParityCharacterization::P11, ParityCharacterization::P33];

    pub fn id(self) -> &'static str {
        match self {
            ParityCharacterization::P11 => "parity_p11_k3km1",
            ParityCharacterization::P33 => "parity_p33_3np1_square",
        }
    }

    pub fn functions(self) -> [FunctionId; 2] {
        match self {
            ParityCharacterization::P11 => [FunctionId::PTt { t: 1 }, FunctionId::Singular { k: 4, i: 1 }],
            ParityCharacterization::P33 => [FunctionId::PTt { t: 3 }, FunctionId::Singular { k: 12, i: 3 }],
        }
    }

    pub fn predicts_odd(self, n: u64) -> bool {
        match self {
            ParityCharacterization::P11 => is_k_times_3k_minus_1(n),
            ParityCharacterization::P33 => is_3n_plus_1_square(n),
        }
    }
}

/// For `1 <= n <= n_max`, compares the parity of both functions with the
/// predicate. Failures are labelled by function.
pub fn check_parity_characterization(
    eval: &Evaluator,
    which: ParityCharacterization,
    n_max: u64,
) -> Result<VerificationReport> {
    eval.ensure_within(n_max)?;
    let mut report = ReportBuilder::new(Subject::check(which.id()));
    for f in which.functions() {
        let series = eval.series(f)?;
        for n in 1..=n_max {
            let odd = series.coeff(n as usize).is_odd();
            let expected = which.predicts_odd(n);
            report.record(odd == expected, || Failure {
                n,
                argument: n,
                value: (odd as u8).to_string(),
                expected: (expected as u8).to_string(),
                label: Some(f.to_string()),
            });
        }
    }
    Ok(report.finish())
}

/// The two one-directional congruences for `p_{3,3}` guarded by a
/// representation predicate on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConditionalFamily {
    /// `16n + 3`, unless `n` is a pentagonal number plus four times one.
    Plus3,
    /// `16n + 7`, unless `n` is twice a pentagonal number plus thrice a triangular one.
    Plus7,
}

impl ConditionalFamily {
    pub const ALL: [ConditionalFamily; 2] = [ConditionalFamily::Plus3, ConditionalFamily::Plus7];

    pub fn offset(self) -> u64 {
        match self {
            ConditionalFamily::Plus3 => 3,
            ConditionalFamily::Plus7 => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConditionalFamily::Plus3 => "16n+3_unless_pent_plus_4pent",
            ConditionalFamily::Plus7 => "16n+7_unless_2pent_plus_3tri",
        }
    }

    /// Whether `n` is represented, so the claim says nothing about it.
    pub fn is_represented(self, n: u64, convention: PentagonalConvention) -> bool {
        match self {
            ConditionalFamily::Plus3 => is_pentagonal_plus_four_pentagonal(n, convention),
            ConditionalFamily::Plus7 => is_twice_pentagonal_plus_thrice_triangular(n, convention),
        }
    }
}

/// Checks `f(16n + r) ≡ 0 (mod m)` for every `n <= n_max` that is not
/// represented; represented indices count as skipped.
pub fn check_conditional(
    eval: &Evaluator,
    which: ConditionalFamily,
    function: FunctionId,
    modulus: u64,
    n_max: u64,
    convention: PentagonalConvention,
) -> Result<VerificationReport> {
    let last = 16 * n_max + which.offset();
    eval.ensure_within(last)?;
    let series = eval.series(function)?;
    let id = format!("{}({}) mod {modulus}", function, which.name());
    let mut report = ReportBuilder::new(Subject::check(id));
    report.note(format!("pentagonal convention: {}", convention.name()));
    for n in 0..=n_max {
        if which.is_represented(n, convention) {
            report.skip();
            continue;
        }
        let arg = 16 * n + which.offset();
        let r = residue(series.coeff(arg as usize), modulus);
        report.record(r.is_zero(), || Failure {
            n,
            argument: arg,
            value: r.to_string(),
            expected: "0".into(),
            label: None,
        });
    }
    Ok(report.finish())
}

/// The `p_{3,3}` parity form of [`check_conditional`].
pub fn check_conditional_parity(
    eval: &Evaluator,
    which: ConditionalFamily,
    n_max: u64,
    convention: PentagonalConvention,
) -> Result<VerificationReport> {
    check_conditional(eval, which, FunctionId::PTt { t: 3 }, 2, n_max, convention)
}

/// Number of counterexamples each pentagonal convention produces for `which`.
pub fn calibrate_pentagonal_convention(
    eval: &Evaluator,
    which: ConditionalFamily,
    n_max: u64,
) -> Result<Vec<(PentagonalConvention, u64)>> {
    PentagonalConvention::ALL
        .into_iter()
        .map(|c| Ok((c, check_conditional_parity(eval, which, n_max, c)?.failed)))
        .collect()
}

/// `p_{t,t}(n) ≡ C_{4t,t}(n) (mod 2)` coefficient-wise for `n <= n_max`; for
/// `n` within the enumeration bounds the two oracles are compared as well.
pub fn check_parity_bridge(eval: &Evaluator, t: u32, n_max: u64) -> Result<VerificationReport> {
    eval.ensure_within(n_max)?;
    let sparams = SingularParams::new(4 * t, t)?;
    let mparams = MexParams::new(t, t)?;
    let lhs = eval.series(FunctionId::PTt { t })?;
    let rhs = eval.series(FunctionId::singular(sparams))?;
    let mut report = ReportBuilder::new(Subject::check(format!("parity_bridge_t{t}")));
    for n in 0..=n_max {
        let (a, b) = (lhs.coeff(n as usize), rhs.coeff(n as usize));
        report.record(a.is_odd() == b.is_odd(), || Failure {
            n,
            argument: n,
            value: a.to_string(),
            expected: b.to_string(),
            label: Some("series".into()),
        });
    }
    let oracle_max = n_max.min(30).min(ENUMERATION_BOUND.min(SINGULAR_ORACLE_BOUND) as u64);
    for n in 0..=oracle_max {
        let a = mex_count_oracle(n as usize, mparams)?;
        let b = singular_overpartition_oracle(n as usize, sparams)?;
        report.record(a % 2 == b % 2, || Failure {
            n,
            argument: n,
            value: a.to_string(),
            expected: b.to_string(),
            label: Some("oracle".into()),
        });
    }
    report.note(format!("oracles compared for n <= {oracle_max}"));
    Ok(report.finish())
}

/// Both `p_{t,t}` and `C_{4t,t}` reduce mod 2 to `(q^t;q^t)^3 / (q;q)`.
pub fn check_eta_form(eval: &Evaluator, t: u32, n_max: u64) -> Result<VerificationReport> {
    eval.ensure_within(n_max)?;
    let target = eta_cube_quotient(t as usize, n_max as usize);
    let mut report = ReportBuilder::new(Subject::check(format!("eta_form_mod2_t{t}")));
    for f in [FunctionId::PTt { t }, FunctionId::Singular { k: 4 * t, i: t }] {
        let series = eval.series(f)?;
        for n in 0..=n_max {
            let (a, b) = (series.coeff(n as usize), target.coeff(n as usize));
            report.record(a.is_odd() == b.is_odd(), || Failure {
                n,
                argument: n,
                value: a.to_string(),
                expected: b.to_string(),
                label: Some(f.to_string()),
            });
        }
    }
    Ok(report.finish())
}

/// Closed sum over `p(n)` against the generating function for `n <= n_max`,
/// and against the enumeration oracle for `n <= oracle_max`.
pub fn check_mex_identity(
    eval: &Evaluator,
    family: MexFamily,
    t: u32,
    n_max: u64,
    oracle_max: u64,
) -> Result<VerificationReport> {
    eval.ensure_within(n_max)?;
    let params = family.params(t)?;
    let function = match family {
        MexFamily::Diagonal => FunctionId::PTt { t },
        MexFamily::Doubled => FunctionId::P2Tt { t },
    };
    let series = eval.series(function)?;
    let oracle_max = oracle_max.min(n_max);
    let mut report = ReportBuilder::new(Subject::check(format!("identity_{}_t{t}", function.name())));
    for n in 0..=n_max {
        let identity = family.identity(t as usize, n as usize);
        let coeff = series.coeff(n as usize);
        report.record(&identity == coeff, || Failure {
            n,
            argument: n,
            value: identity.to_string(),
            expected: coeff.to_string(),
            label: Some("identity_vs_series".into()),
        });
        if n <= oracle_max {
            let oracle = BigInt::from(mex_count_oracle(n as usize, params)?);
            report.record(oracle == identity, || Failure {
                n,
                argument: n,
                value: oracle.to_string(),
                expected: identity.to_string(),
                label: Some("oracle_vs_identity".into()),
            });
        }
    }
    report.note(format!("oracle compared for n <= {oracle_max}"));
    Ok(report.finish())
}
