use hbfiber_core::multiplicity::{j_multiplicity_formula, MuVector};
use hbfiber_core::oracles::j_mult_sample;
use num_bigint::BigInt;
use serde_json::json;

use super::shared::{fail_with, mu_u64, resolve_with_g};
use super::{over_field, require, Command};
use crate::error::CliError;
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{big, claim, Outcome, Provenance};

pub struct JMult;

impl Command for JMult {
    fn name(&self) -> &'static str {
        "jmult"
    }

    fn summary(&self) -> &'static str {
        "j-multiplicity from the formula, optionally sampled (--oracle)"
    }

    fn run(&self, input: Option<&AnyIdeal>, opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => {
            let mut out = Outcome::default();
            let (hb, g) = resolve_with_g(ideal, &mut out, true)?;
            let mv = MuVector::new(hb.r, mu_u64(&hb))?;
            let j = j_multiplicity_formula(hb.d as u64, &mv)?;
            out.result("j", claim(big(&j), Provenance::Formula));
            out.result("hypothesis_violated", json!(!g.pass));
            out.line(format!("j = {j}  [formula]"));
            if opts.oracle {
                let sample = match j_mult_sample(ideal, opts.n_max) {
                    Ok(s) => s,
                    Err(e) => {
                        fail_with(&mut out, e);
                        return Ok(out);
                    }
                };
                let lengths: Vec<i64> = sample.samples.iter().map(|&(_, l)| l).collect();
                let inferred = sample.inferred_j.value();
                let agree = inferred.map(BigInt::from) == Some(j.clone());
                out.result("j_oracle", claim(json!(inferred), Provenance::Oracle));
                out.result("lengths", claim(json!(lengths), Provenance::Oracle));
                out.result("agree", json!(agree));
                out.line(format!("lengths of H^0_m(I^n/I^(n+1)), n = 0..{}: {:?}  [oracle]", opts.n_max, lengths));
                out.line(format!("j = {}  [oracle]", sample.inferred_j));
                if inferred.is_none() {
                    out.warn("oracle did not stabilize; raise --n-max");
                } else if !agree {
                    out.warn("oracle and formula disagree");
                }
            }
            Ok(out)
        })
    }
}
