use std::path::PathBuf;

use clap::builder::PossibleValuesParser;
use clap::Parser;

use crate::commands;

#[derive(Clone, Debug, Parser)]
#[command(
    name = "hb-fiber",
    version,
    about = "Multiplicities and map degrees for perfect height-two ideals",
    after_help = "Exit codes: 0 ok, 1 I/O error, 2 parse or usage error, 3 hypothesis failure, \
                  4 verification disagreement, 5 internal anomaly."
)]
pub struct Options {
    /// Command to run.
    #[arg(value_parser = PossibleValuesParser::new(commands::names()))]
    pub command: String,

    /// Ideal file (not used by `identities`).
    pub file: Option<PathBuf>,

    /// Largest power sampled by the oracles.
    #[arg(long, default_value_t = 6)]
    pub n_max: usize,

    /// Seed for the random-fiber heuristic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of random fibers to count.
    #[arg(long, default_value_t = 5)]
    pub trials: usize,

    /// Print only the JSON report on stdout.
    #[arg(long, conflicts_with = "text")]
    pub json: bool,

    /// Print only the text report on stdout.
    #[arg(long)]
    pub text: bool,

    /// Largest r for `identities`.
    #[arg(long, default_value_t = 3)]
    pub r_max: usize,

    /// Largest s for `identities`.
    #[arg(long, default_value_t = 5)]
    pub s_max: usize,

    /// Largest syzygy degree for `identities`.
    #[arg(long, default_value_t = 4)]
    pub mu_max: u64,

    /// Extra random instances for `identities` (s <= 8, mu <= 9).
    #[arg(long, default_value_t = 0)]
    pub random: usize,

    /// Also run the sampling oracle for `jmult`.
    #[arg(long)]
    pub oracle: bool,
}

impl Options {
    /// Options for `command` with every flag at its default.
    pub fn for_command(command: &str, file: Option<PathBuf>) -> Self {
        let mut args = vec!["hb-fiber".to_string(), command.to_string()];
        if let Some(f) = &file {
            args.push(f.display().to_string());
        }
        Options::parse_from(args)
    }
}
