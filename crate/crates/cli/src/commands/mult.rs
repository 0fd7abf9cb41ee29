use hbfiber_core::multiplicity::{multiplicity_report, MuVector};
use serde_json::{json, Value};

use super::shared::{mu_u64, resolve_with_g};
use super::{over_field, require, Command};
use crate::error::CliError;
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{big, claim, Outcome, Provenance};

pub struct Mult;

impl Command for Mult {
    fn name(&self) -> &'static str {
        "mult"
    }

    fn summary(&self) -> &'static str {
        "e_r(mu), the m_i, the alternating sum and j = d e_r(mu)"
    }

    fn run(&self, input: Option<&AnyIdeal>, _opts: &Options) -> Result<Outcome, CliError> {
        over_field!(require(input, self.name())?, ideal => {
            let mut out = Outcome::default();
            let (hb, g) = resolve_with_g(ideal, &mut out, true)?;
            let mv = MuVector::new(hb.r, mu_u64(&hb))?;
            let rep = multiplicity_report(hb.d as u64, &mv)?;
            out.result("mu", claim(json!(hb.mu), Provenance::Computed));
            out.result("e_r", claim(big(&rep.e_r), Provenance::Formula));
            out.result("m", claim(Value::Array(rep.m.iter().map(big).collect()), Provenance::Formula));
            out.result("alt_sum", claim(big(&rep.alt_sum), Provenance::Formula));
            out.result("j", claim(big(&rep.j), Provenance::Formula));
            out.result("consistent", json!(rep.consistent));
            out.result("hypothesis_violated", json!(!g.pass));
            out.line(format!("e_{}(mu) = {}  [formula]", hb.r, rep.e_r));
            let m: Vec<String> = rep.m.iter().map(|v| v.to_string()).collect();
            out.line(format!("m = ({})  [formula]", m.join(", ")));
            out.line(format!("alternating sum = {}  [formula]", rep.alt_sum));
            out.line(format!("j = d * e_r = {}  [formula]", rep.j));
            if !rep.consistent {
                out.warn("alternating sum differs from e_r(mu)");
            }
            Ok(out)
        })
    }
}
