use hbfiber_core::multiplicity::{lemma_grid, random_lemma_instances};
use serde_json::json;

use super::Command;
use crate::error::{exit, CliError};
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::{claim, Outcome, Provenance};

pub struct Identities;

const RANDOM_S_MAX: usize = 8;
const RANDOM_MU_MAX: u64 = 9;

impl Command for Identities {
    fn name(&self) -> &'static str {
        "identities"
    }

    fn summary(&self) -> &'static str {
        "exhaustive check of the binomial identities behind the formulas"
    }

    fn needs_file(&self) -> bool {
        false
    }

    fn run(&self, _input: Option<&AnyIdeal>, opts: &Options) -> Result<Outcome, CliError> {
        let mut out = Outcome::default();
        let grid = lemma_grid(opts.r_max, opts.s_max, opts.mu_max)?;
        let random = random_lemma_instances(opts.random, RANDOM_S_MAX, RANDOM_MU_MAX, opts.seed)?;
        let failures: Vec<String> = grid.failures.iter().chain(&random.failures).map(|f| f.to_string()).collect();
        out.result("grid_checked", claim(json!(grid.checked), Provenance::Formula));
        out.result("random_checked", claim(json!(random.checked), Provenance::Formula));
        out.result("failures", json!(failures));
        out.result("all_hold", json!(failures.is_empty()));
        out.line(format!(
            "grid r <= {}, s <= {}, mu <= {}: {} identities checked",
            opts.r_max, opts.s_max, opts.mu_max, grid.checked
        ));
        if opts.random > 0 {
            out.line(format!("{} random instances: {} identities checked", opts.random, random.checked));
        }
        for f in &failures {
            out.line(format!("  {f}"));
        }
        if failures.is_empty() {
            out.line("all identities hold");
        } else {
            out.fail(exit::DISAGREEMENT, "IdentityFailed", format!("{} identities fail", failures.len()));
        }
        Ok(out)
    }
}
