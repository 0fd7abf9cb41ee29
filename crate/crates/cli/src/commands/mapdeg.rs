use hbfiber_core::oracles::{generic_fiber_degree, map_degree_report};
use hbfiber_core::{AlgebraError, FieldKind, Ideal};
use serde_json::json;

use super::shared::{fail_with, resolve_with_g};
use super::{over_field, require, Command};
use crate::error::CliError;
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{big, claim, Outcome, Provenance};

pub struct MapDeg;

impl Command for MapDeg {
    fn name(&self) -> &'static str {
        "mapdeg"
    }

    fn summary(&self) -> &'static str {
        "degree of the image and of the rational map, birationality"
    }

    fn run(&self, input: Option<&AnyIdeal>, opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => run_in(ideal, opts))
    }
}

fn run_in<F: hbfiber_core::Field>(ideal: &Ideal<F>, opts: &Options) -> Result<Outcome, CliError> {
    let mut out = Outcome::default();
    let (hb, g) = resolve_with_g(ideal, &mut out, true)?;
    let rep = match map_degree_report(&hb, &g) {
        Ok(rep) => rep,
        Err(e) => {
            fail_with(&mut out, e);
            return Ok(out);
        }
    };
    let kernel: Vec<String> = rep.kernel_gens.iter().map(|p| p.to_string()).collect();
    out.result("dim_y", claim(json!(rep.dim_y), Provenance::Oracle));
    out.result("deg_y", claim(json!(rep.deg_y), Provenance::Oracle));
    out.result("e_r", claim(big(&rep.e_r), Provenance::Formula));
    out.result("deg_f", claim(json!(rep.deg_f), Provenance::Formula));
    out.result("birational", claim(json!(rep.birational), Provenance::Formula));
    out.result("kernel", claim(json!(kernel), Provenance::Oracle));
    out.result("hypothesis_violated", json!(rep.hypothesis_violated));
    out.line(format!("image: dim {}, degree {}  [oracle]", rep.dim_y, rep.deg_y));
    out.line(format!("e_r(mu) = {}  [formula]", rep.e_r));
    out.line(format!(
        "deg F = e_r / deg Y = {}; {}  [formula]",
        rep.deg_f,
        if rep.birational { "birational onto the image" } else { "not birational" }
    ));
    if matches!(ideal.ring().field().kind(), FieldKind::Prime(_)) {
        match generic_fiber_degree(ideal.gens(), opts.trials, opts.seed) {
            Ok(est) => {
                out.result("generic_fiber", claim(json!(est.degree), Provenance::Heuristic));
                out.result("generic_fiber_trials", claim(json!(est.trials), Provenance::Heuristic));
                let counts: Vec<String> =
                    est.trials.iter().map(|t| t.map_or("-".to_string(), |n| n.to_string())).collect();
                out.line(format!("random fibers: [{}] -> {}  [heuristic]", counts.join(", "), est.degree));
                if est.degree != rep.deg_f as i64 {
                    out.warn("random-fiber count differs from deg F");
                }
            }
            Err(AlgebraError::AllTrialsDegenerate) => out.warn("no random fiber was finite"),
            Err(e) => fail_with(&mut out, e),
        }
    } else {
        out.warn("random-fiber count needs a prime field; skipped");
    }
    Ok(out)
}
