use hbfiber_core::resolution::hilbert_burch;
use serde_json::json;

use super::shared::{hypotheses_json, hypotheses_text};
use super::{over_field, require, Command};
use crate::error::CliError;
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{claim, Outcome, Provenance};

pub struct Resolve;

impl Command for Resolve {
    fn name(&self) -> &'static str {
        "resolve"
    }

    fn summary(&self) -> &'static str {
        "Hilbert-Burch matrix and syzygy degrees"
    }

    fn run(&self, input: Option<&AnyIdeal>, _opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => {
            let hb = hilbert_burch(ideal)?;
            let mut out = Outcome { hypotheses: hypotheses_json(&hb, None), ..Outcome::default() };
            hypotheses_text(&hb, None, &mut out);
            out.result("mu", claim(json!(hb.mu), Provenance::Computed));
            out.result("s", claim(json!(hb.s), Provenance::Computed));
            for (i, row) in hb.phi.matrix().rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
                out.line(format!("  phi[{i}] = [{}]", cells.join(", ")));
            }
            Ok(out)
        })
    }
}
