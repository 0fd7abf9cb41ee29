use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hb_fiber::{execute, Options};

fn main() -> ExitCode {
    let opts = Options::parse();
    let run = execute(&opts);
    let json = serde_json::to_string_pretty(&run.report).expect("reports serialize");
    // a closed pipe on the reader side is not our failure
    let mut out = std::io::stdout().lock();
    let _ = match (opts.json, opts.text) {
        (true, _) => writeln!(out, "{json}"),
        (_, true) => write!(out, "{}", run.text),
        _ => writeln!(out, "{json}").and_then(|_| write!(std::io::stderr(), "{}", run.text)),
    };
    ExitCode::from(run.exit_code as u8)
}
