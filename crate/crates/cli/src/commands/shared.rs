use hbfiber_core::resolution::{g_condition, hilbert_burch, GCondReport, HilbertBurchData};
use hbfiber_core::{Field, Ideal};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::Outcome;

pub fn mu_u64<F: Field>(hb: &HilbertBurchData<F>) -> Vec<u64> {
    hb.mu.iter().map(|&m| m as u64).collect()
}

fn g_json(g: &GCondReport) -> Value {
    let rows: Vec<Value> = g
        .rows
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "t": r.t,
                "height": r.height,
                "threshold": r.threshold,
                "pass": r.pass,
            })
        })
        .collect();
    json!({ "pass": g.pass, "rows": rows })
}

pub fn hypotheses_json<F: Field>(hb: &HilbertBurchData<F>, g: Option<&GCondReport>) -> Value {
    let field = hb.phi.ring().field();
    let phi: Vec<Vec<String>> = hb
        .phi
        .matrix()
        .rows()
        .iter()
        .map(|row| row.iter().map(|p| p.to_string()).collect())
        .collect();
    json!({
        "height": 2,
        "perfect": true,
        "r": hb.r,
        "s": hb.s,
        "d": hb.d,
        "mu": hb.mu,
        "phi": phi,
        "lambda": field.display(&hb.lambda).to_string(),
        "g_condition": g.map(g_json),
    })
}

pub fn hypotheses_text<F: Field>(hb: &HilbertBurchData<F>, g: Option<&GCondReport>, out: &mut Outcome) {
    out.line(format!(
        "perfect of height 2: r = {}, s = {}, d = {}, mu = {:?}",
        hb.r, hb.s, hb.d, hb.mu
    ));
    if let Some(g) = g {
        out.line(format!("G_{}: {}", hb.r + 1, if g.pass { "holds" } else { "fails" }));
        for row in &g.rows {
            let h = row.height.map_or("inf".to_string(), |h| h.to_string());
            out.line(format!(
                "  i = {}: ht I_{}(phi) = {} > {} {}",
                row.i,
                row.t,
                h,
                row.threshold,
                if row.pass { "ok" } else { "FAILS" }
            ));
        }
    }
}

/// Hilbert-Burch data plus the `G_{r+1}` table. With `warn`, a failing `G`
/// is reported as a warning.
pub fn resolve_with_g<F: Field>(
    ideal: &Ideal<F>,
    out: &mut Outcome,
    warn: bool,
) -> Result<(HilbertBurchData<F>, GCondReport), CliError> {
    let hb = hilbert_burch(ideal)?;
    let g = g_condition(&hb)?;
    out.hypotheses = hypotheses_json(&hb, Some(&g));
    hypotheses_text(&hb, Some(&g), out);
    if warn && !g.pass {
        out.warn(format!(
            "G_{} fails; the formulas are not known to apply (hypothesis_violated)",
            hb.r + 1
        ));
    }
    Ok((hb, g))
}

/// Records a late failure on an outcome that already carries diagnostics.
pub fn fail_with(out: &mut Outcome, e: impl Into<CliError>) {
    let e = e.into();
    out.fail(e.exit_code(), e.code(), e.to_string());
}
