//! Library side of the `hb-fiber` command-line tool: the ideal file parser,
//! the command registry and report assembly.

pub mod commands;
pub mod error;
pub mod options;
pub mod parse;
pub mod report;

use std::fs;

use hbfiber_core::Field;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub use error::{exit, CliError};
pub use options::Options;
pub use parse::{parse_ideal_file, AnyIdeal, IdealFile, ParseError};
pub use report::{Outcome, Provenance, SCHEMA};

/// A finished run: the JSON report, its text rendering and the exit code.
#[derive(Clone, Debug)]
pub struct Execution {
    pub report: Value,
    pub text: String,
    pub exit_code: i32,
}

struct Loaded {
    summary: Value,
    ideal: AnyIdeal,
}

fn load(opts: &Options) -> Result<Loaded, CliError> {
    let path = opts.file.as_ref().expect("checked by caller");
    let bytes = fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Io(format!("{}: not valid UTF-8", path.display())))?;
    let file = parse_ideal_file(&text)?;
    let ideal = file.ideal()?;
    let generators: Vec<String> = commands::over_field!(&ideal, i => i.gens().iter().map(|p| p.to_string()).collect());
    Ok(Loaded {
        summary: json!({
            "sha256": hex::encode(Sha256::digest(&bytes)),
            "field": file.field.to_string(),
            "variables": file.names,
            "generators": generators,
        }),
        ideal,
    })
}

/// Primes at or below `d^(r+1)` can collapse fibers and degrees.
fn small_characteristic(ideal: &AnyIdeal) -> Option<String> {
    let AnyIdeal::Prime(i) = ideal else { return None };
    let p = i.ring().field().characteristic();
    let d = i.gens().first()?.total_degree()? as u64;
    let bound = d.max(2).checked_pow(i.ring().nvars() as u32).unwrap_or(u64::MAX);
    (p <= bound).then(|| format!("characteristic {p} is small for degree {d}; oracle and fiber values may differ from characteristic zero"))
}

fn options_json(opts: &Options) -> Value {
    json!({
        "n_max": opts.n_max,
        "seed": opts.seed,
        "trials": opts.trials,
        "r_max": opts.r_max,
        "s_max": opts.s_max,
        "mu_max": opts.mu_max,
        "random": opts.random,
        "oracle": opts.oracle,
    })
}

fn run(opts: &Options, input: &mut Value) -> Result<Outcome, CliError> {
    let command = commands::lookup(&opts.command)
        .ok_or_else(|| CliError::Usage(format!("unknown command `{}`", opts.command)))?;
    match (command.needs_file(), &opts.file) {
        (true, None) => return Err(CliError::Usage(format!("`{}` needs an ideal file", command.name()))),
        (false, Some(_)) => return Err(CliError::Usage(format!("`{}` takes no ideal file", command.name()))),
        _ => {}
    }
    if command.needs_file() {
        let loaded = load(opts)?;
        *input = loaded.summary;
        let mut out = command.run(Some(&loaded.ideal), opts)?;
        if let Some(note) = small_characteristic(&loaded.ideal) {
            out.warn(note);
        }
        Ok(out)
    } else {
        command.run(None, opts)
    }
}

/// Runs one command and assembles its report.
pub fn execute(opts: &Options) -> Execution {
    let mut input = Value::Null;
    let outcome = run(opts, &mut input).unwrap_or_else(|e| {
        let mut out = Outcome::default();
        out.fail(e.exit_code(), e.code(), e.to_string());
        out
    });
    let error = outcome
        .failure
        .as_ref()
        .map(|(code, message)| json!({ "code": code, "message": message }));
    let report = json!({
        "schema": SCHEMA,
        "command": opts.command,
        "input": input,
        "options": options_json(opts),
        "hypotheses": outcome.hypotheses,
        "results": Value::Object(outcome.results),
        "warnings": outcome.warnings,
        "status": report::status(outcome.exit_code),
        "exit_code": outcome.exit_code,
        "error": error,
    });
    let mut text = format!("hb-fiber {}", opts.command);
    if let Some(digest) = report["input"]["sha256"].as_str() {
        text.push_str(&format!(" (input sha256 {})", &digest[..12]));
    }
    text.push('\n');
    for line in &outcome.text {
        text.push_str(line);
        text.push('\n');
    }
    text.push_str(&format!("status: {} (exit {})\n", report::status(outcome.exit_code), outcome.exit_code));
    Execution { report, text, exit_code: outcome.exit_code }
}
