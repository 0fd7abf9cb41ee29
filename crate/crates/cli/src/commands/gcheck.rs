use serde_json::json;

use super::shared::resolve_with_g;
use super::{over_field, require, Command};
use crate::error::{exit, CliError};
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{claim, Outcome, Provenance};

pub struct GCheck;

impl Command for GCheck {
    fn name(&self) -> &'static str {
        "gcheck"
    }

    fn summary(&self) -> &'static str {
        "Fitting-ideal heights against G_{r+1}"
    }

    fn run(&self, input: Option<&AnyIdeal>, _opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => {
            let mut out = Outcome::default();
            let (hb, g) = resolve_with_g(ideal, &mut out, false)?;
            out.result("g_condition", claim(json!(g.pass), Provenance::Computed));
            if let Some(bad) = g.first_failure() {
                let h = bad.height.map_or("inf".to_string(), |h| h.to_string());
                out.fail(
                    exit::HYPOTHESIS,
                    "GConditionFailed",
                    format!(
                        "G_{} fails at i = {}: ht I_{}(phi) = {} is not > {}",
                        hb.r + 1,
                        bad.i,
                        bad.t,
                        h,
                        bad.threshold
                    ),
                );
            }
            Ok(out)
        })
    }
}
