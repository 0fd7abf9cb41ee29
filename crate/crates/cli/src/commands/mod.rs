//! Subcommands, looked up by name in a static registry.

mod gcheck;
mod identities;
mod jmult;
mod mapdeg;
mod mult;
mod resolve;
mod shared;
mod verify;

use crate::error::CliError;
use crate::options::Options;
use crate::parse::AnyIdeal;
use crate::report::Outcome;

pub use verify::{checks, Check, CheckOutcome, CheckStatus, VerifyContext};

pub trait Command: Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn needs_file(&self) -> bool {
        true
    }
    fn run(&self, input: Option<&AnyIdeal>, opts: &Options) -> Result<Outcome, CliError>;
}

static REGISTRY: &[&dyn Command] = &[
    &resolve::Resolve,
    &gcheck::GCheck,
    &mult::Mult,
    &jmult::JMult,
    &mapdeg::MapDeg,
    &verify::Verify,
    &identities::Identities,
];

pub fn registry() -> &'static [&'static dyn Command] {
    REGISTRY
}

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name()).collect()
}

pub fn lookup(name: &str) -> Option<&'static dyn Command> {
    REGISTRY.iter().copied().find(|c| c.name() == name)
}

/// Runs `$body` with `$i` bound to the ideal over its concrete field.
macro_rules! over_field {
    ($input:expr, $i:ident => $body:expr) => {
        match $input {
            $crate::parse::AnyIdeal::Prime($i) => $body,
            $crate::parse::AnyIdeal::Rational($i) => $body,
        }
    };
}
pub(crate) use over_field;

/// The ideal, or a usage error for commands that need one.
fn require<'a>(input: Option<&'a AnyIdeal>, name: &str) -> Result<&'a AnyIdeal, CliError> {
    input.ok_or_else(|| CliError::Usage(format!("`{name}` needs an ideal file")))
}
