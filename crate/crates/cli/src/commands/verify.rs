use std::sync::OnceLock;

use hbfiber_core::multiplicity::{elementary_symmetric, multiplicity_from_m, MuVector};
use hbfiber_core::oracles::{
    fiber_image_inequality, generic_fiber_degree, image_ideal, j_mult_sample, map_degree_report,
    saturated_fiber_sample, SaturatedFiberSample,
};
use hbfiber_core::resolution::{GCondReport, HilbertBurchData};
use hbfiber_core::{AlgebraError, Field, FieldKind, Ideal};
use num_bigint::BigInt;
use serde_json::{json, Value};

use super::shared::{mu_u64, resolve_with_g};
use super::{over_field, require, Command};
use crate::error::{algebra_code, algebra_exit_code, exit, CliError};
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{big, Outcome, Provenance};

/// Shared inputs for the checks, with the expensive pieces computed once.
pub struct VerifyContext<'a, F: Field> {
    pub ideal: &'a Ideal<F>,
    pub hb: &'a HilbertBurchData<F>,
    pub g: &'a GCondReport,
    pub e_r: BigInt,
    pub n_max: usize,
    pub seed: u64,
    pub trials: usize,
    fiber: OnceLock<Result<SaturatedFiberSample, AlgebraError>>,
    kernel: OnceLock<Result<Ideal<F>, AlgebraError>>,
}

impl<'a, F: Field> VerifyContext<'a, F> {
    pub fn new(ideal: &'a Ideal<F>, hb: &'a HilbertBurchData<F>, g: &'a GCondReport, opts: &Options) -> Result<Self, CliError> {
        Ok(VerifyContext {
            e_r: elementary_symmetric(hb.r, &mu_u64(hb))?,
            ideal,
            hb,
            g,
            n_max: opts.n_max,
            seed: opts.seed,
            trials: opts.trials,
            fiber: OnceLock::new(),
            kernel: OnceLock::new(),
        })
    }

    pub fn fiber(&self) -> Result<&SaturatedFiberSample, AlgebraError> {
        self.fiber
            .get_or_init(|| saturated_fiber_sample(self.ideal, self.n_max))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn kernel(&self) -> Result<&Ideal<F>, AlgebraError> {
        self.kernel.get_or_init(|| image_ideal(self.ideal.gens())).as_ref().map_err(Clone::clone)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Agree,
    Disagree,
    /// The oracle did not settle within the sweep.
    Inconclusive,
    Skipped,
    Error { code: &'static str, exit_code: i32 },
}

impl CheckStatus {
    fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Agree => "agree",
            CheckStatus::Disagree => "disagree",
            CheckStatus::Inconclusive => "inconclusive",
            CheckStatus::Skipped => "skipped",
            CheckStatus::Error { .. } => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub status: CheckStatus,
    pub expected: Value,
    pub observed: Value,
    pub detail: String,
}

impl CheckOutcome {
    fn compare(expected: Value, observed: Value, detail: String) -> Self {
        let status = if observed.is_null() {
            CheckStatus::Inconclusive
        } else if expected == observed {
            CheckStatus::Agree
        } else {
            CheckStatus::Disagree
        };
        CheckOutcome { status, expected, observed, detail }
    }

    fn from_error(e: AlgebraError) -> Self {
        CheckOutcome {
            status: CheckStatus::Error { code: algebra_code(&e), exit_code: algebra_exit_code(&e) },
            expected: Value::Null,
            observed: Value::Null,
            detail: e.to_string(),
        }
    }
}

/// One formula-against-oracle comparison.
pub trait Check<F: Field>: Sync {
    fn name(&self) -> &'static str;
    /// Provenance of the observed side.
    fn provenance(&self) -> Provenance {
        Provenance::Oracle
    }
    /// Whether a mismatch fails the run. Heuristic checks only inform.
    fn decisive(&self) -> bool {
        true
    }
    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError>;
}

struct AlternatingSum;
struct SaturatedFiber;
struct JMultiplicity;
struct MapDegree;
struct KernelVanishes;
struct FiberDominatesImage;
struct RandomFiber;

impl<F: Field> Check<F> for AlternatingSum {
    fn name(&self) -> &'static str {
        "alternating-sum"
    }

    fn provenance(&self) -> Provenance {
        Provenance::Formula
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let alt = multiplicity_from_m(&MuVector::new(cx.hb.r, mu_u64(cx.hb))?);
        Ok(CheckOutcome::compare(big(&cx.e_r), big(&alt), "e_r(mu) against the m_i sum".into()))
    }
}

impl<F: Field> Check<F> for SaturatedFiber {
    fn name(&self) -> &'static str {
        "saturated-fiber"
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let sample = cx.fiber()?;
        Ok(CheckOutcome::compare(
            big(&cx.e_r),
            json!(sample.inferred_multiplicity.value()),
            format!("dim [(I^n : m^inf)]_(nd) for n = 0..{}: {:?}", cx.n_max, sample.dims()),
        ))
    }
}

impl<F: Field> Check<F> for JMultiplicity {
    fn name(&self) -> &'static str {
        "j-multiplicity"
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let sample = j_mult_sample(cx.ideal, cx.n_max)?;
        let lengths: Vec<i64> = sample.samples.iter().map(|&(_, l)| l).collect();
        Ok(CheckOutcome::compare(
            big(&(&cx.e_r * cx.hb.d)),
            json!(sample.inferred_j.value()),
            format!("lengths of H^0_m(I^n/I^(n+1)): {lengths:?}"),
        ))
    }
}

impl<F: Field> Check<F> for MapDegree {
    fn name(&self) -> &'static str {
        "map-degree"
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let rep = map_degree_report(cx.hb, cx.g)?;
        Ok(CheckOutcome::compare(
            big(&cx.e_r),
            json!(rep.deg_f * rep.deg_y),
            format!("dim Y = {}, deg Y = {}, deg F = {}", rep.dim_y, rep.deg_y, rep.deg_f),
        ))
    }
}

impl<F: Field> Check<F> for KernelVanishes {
    fn name(&self) -> &'static str {
        "image-kernel"
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let kernel = cx.kernel()?;
        let mut bad = 0;
        for g in kernel.gens() {
            if !g.compose(cx.ideal.gens())?.is_zero() {
                bad += 1;
            }
        }
        Ok(CheckOutcome::compare(
            json!(0),
            json!(bad),
            format!("{} kernel generators substituted into the map", kernel.gens().len()),
        ))
    }
}

impl<F: Field> Check<F> for FiberDominatesImage {
    fn name(&self) -> &'static str {
        "fiber-dominates-image"
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        let rows = fiber_image_inequality(cx.fiber()?, cx.kernel()?)?;
        let pairs: Vec<(i64, i64)> = rows.iter().map(|r| (r.fiber_dim, r.image_dim)).collect();
        Ok(CheckOutcome::compare(
            json!(true),
            json!(rows.iter().all(|r| r.holds)),
            format!("(saturated, image) dims for n = 0..{}: {pairs:?}", cx.n_max),
        ))
    }
}

impl<F: Field> Check<F> for RandomFiber {
    fn name(&self) -> &'static str {
        "random-fiber"
    }

    fn provenance(&self) -> Provenance {
        Provenance::Heuristic
    }

    fn decisive(&self) -> bool {
        false
    }

    fn run(&self, cx: &VerifyContext<'_, F>) -> Result<CheckOutcome, AlgebraError> {
        if !matches!(cx.ideal.ring().field().kind(), FieldKind::Prime(_)) {
            return Ok(CheckOutcome {
                status: CheckStatus::Skipped,
                expected: Value::Null,
                observed: Value::Null,
                detail: "needs a prime field".into(),
            });
        }
        let rep = map_degree_report(cx.hb, cx.g)?;
        let est = generic_fiber_degree(cx.ideal.gens(), cx.trials, cx.seed)?;
        Ok(CheckOutcome::compare(
            json!(rep.deg_f),
            json!(est.degree),
            format!("fiber degrees per trial: {:?}", est.trials),
        ))
    }
}

/// Every check, in report order.
pub fn checks<F: Field>() -> Vec<Box<dyn Check<F>>> {
    vec![
        Box::new(AlternatingSum),
        Box::new(SaturatedFiber),
        Box::new(JMultiplicity),
        Box::new(MapDegree),
        Box::new(KernelVanishes),
        Box::new(FiberDominatesImage),
        Box::new(RandomFiber),
    ]
}

pub struct Verify;

impl Command for Verify {
    fn name(&self) -> &'static str {
        "verify"
    }

    fn summary(&self) -> &'static str {
        "compare every formula with its oracle"
    }

    fn run(&self, input: Option<&AnyIdeal>, opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => run_in(ideal, opts))
    }
}

fn run_in<F: Field>(ideal: &Ideal<F>, opts: &Options) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    let (hb, g) = resolve_with_g(ideal, &mut out, true)?;
    let cx = VerifyContext::new(ideal, &hb, &g, opts)?;
    let mut table = Vec::new();
    let mut all_agree = true;
    for check in checks::<F>() {
        let outcome = check.run(&cx).unwrap_or_else(CheckOutcome::from_error);
        let status = outcome.status.as_str();
        out.line(format!(
            "{:<22} expected {}, observed {} [{}] -> {}{}",
            check.name(),
            outcome.expected,
            outcome.observed,
            check.provenance().as_str(),
            status,
            if check.decisive() { "" } else { " (informational)" }
        ));
        out.line(format!("{:<22} {}", "", outcome.detail));
        match &outcome.status {
            CheckStatus::Agree | CheckStatus::Skipped => {}
            CheckStatus::Error { code, exit_code } => {
                if check.decisive() {
                    all_agree = false;
                    out.fail(*exit_code, code, format!("{}: {}", check.name(), outcome.detail));
                } else {
                    out.warn(format!("{}: {}", check.name(), outcome.detail));
                }
            }
            CheckStatus::Disagree | CheckStatus::Inconclusive => {
                if check.decisive() {
                    all_agree = false;
                } else {
                    out.warn(format!("{} does not match (heuristic only)", check.name()));
                }
            }
        }
        table.push(json!({
            "name": check.name(),
            "status": status,
            "decisive": check.decisive(),
            "expected": { "value": outcome.expected, "provenance": "formula" },
            "observed": { "value": outcome.observed, "provenance": check.provenance().as_str() },
            "detail": outcome.detail,
        }));
    }
    out.result("checks", Value::Array(table));
    out.result("agree", json!(all_agree));
    out.result("hypothesis_violated", json!(!g.pass));
    if all_agree {
        out.line("all checks agree");
    } else if out.failure.is_none() {
        out.fail(exit::DISAGREEMENT, "Disagreement", "formula and oracle disagree");
    }
    Ok(out)
}
