//! Command-line arguments.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use super::{
    cmd_classes, cmd_conjecture, cmd_count, cmd_oeis, cmd_sequence, cmd_verify, Cache, Conjecture,
    Context, CountMethod, Format, Outcome,
};
use crate::equivalence::Counter;
use crate::error::{Error, Result};
use crate::oracle::{Oracle, OracleBudget};
use crate::perms::Signature;
use crate::verify::Target;

#[derive(Debug, Parser)]
#[command(
    name = "gridcycles",
    version,
    about = "Cyclic permutations in k x 1 grid classes"
)]
pub struct Cli {
    /// Output encoding: json, csv or plain.
    #[arg(long, global = true, default_value = "json")]
    pub format: Format,

    /// Largest n the oracle may enumerate.
    #[arg(long, global = true)]
    pub budget_max_n: Option<usize>,

    /// Number of disjoint shards for enumeration.
    #[arg(long, global = true)]
    pub shards: Option<usize>,

    /// Result cache directory (also GRIDCYCLES_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Allow the oeis command to query the network.
    #[arg(long, global = true)]
    pub enable_network: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of n-cycles in one class.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        sigma: Signature,
        #[arg(long)]
        n: usize,
        /// formula, oracle or both.
        #[arg(long)]
        method: Option<CountMethod>,
    },
    /// Class counts for n = 3..=n_max.
    Sequence {
        #[arg(long, allow_hyphen_values = true)]
        sigma: Signature,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        method: Option<CountMethod>,
    },
    /// Run a verification suite: bijection, refined, lemmas, c3..c8, c12_report or all.
    Verify {
        target: Target,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Group signatures by equal cycle counts.
    Classes {
        /// Signatures to classify; the eight length-3 ones by default.
        #[arg(long = "sigma", allow_hyphen_values = true)]
        sigmas: Vec<Signature>,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// formula or oracle.
        #[arg(long, default_value = "oracle")]
        method: String,
    },
    /// Probe the complement or alternating conjecture.
    Conjecture {
        which: Conjecture,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 9)]
        n_max: usize,
    },
    /// Look terms up in the OEIS (needs --enable-network).
    Oeis {
        /// Terms to search for; at least four.
        terms: Vec<String>,
        /// Take the terms from this signature's sequence instead.
        #[arg(
            long,
            conflicts_with = "terms",
            requires = "n_max",
            allow_hyphen_values = true
        )]
        sigma: Option<Signature>,
        #[arg(long)]
        n_max: Option<usize>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Sequence { .. } => "sequence",
            Command::Verify { .. } => "verify",
            Command::Classes { .. } => "classes",
            Command::Conjecture { .. } => "conjecture",
            Command::Oeis { .. } => "oeis",
        }
    }

    pub fn execute(&self, ctx: &Context) -> Result<Outcome> {
        match self {
            Command::Count { sigma, n, method } => cmd_count(
                ctx,
                sigma,
                *n,
                method.unwrap_or_else(|| CountMethod::default_for(sigma)),
            ),
            Command::Sequence {
                sigma,
                n_max,
                method,
            } => cmd_sequence(
                ctx,
                sigma,
                *n_max,
                method.unwrap_or_else(|| CountMethod::default_for(sigma)),
            ),
            Command::Verify { target, n_max } => cmd_verify(ctx, *target, *n_max),
            Command::Classes {
                sigmas,
                n_max,
                method,
            } => {
                let counter = match method.as_str() {
                    "formula" => Counter::Formula,
                    "oracle" => Counter::Oracle,
                    other => {
                        return Err(Error::Parse(format!(
                            "unknown counter {other:?}; expected formula or oracle"
                        )))
                    }
                };
                let sigmas = if sigmas.is_empty() {
                    Signature::table_all()
                } else {
                    sigmas.clone()
                };
                cmd_classes(ctx, &sigmas, *n_max, counter)
            }
            Command::Conjecture {
                which,
                k_max,
                n_max,
            } => cmd_conjecture(ctx, *which, *k_max, *n_max),
            Command::Oeis {
                terms,
                sigma,
                n_max,
            } => {
                let terms = match (sigma, n_max) {
                    (Some(sigma), Some(n_max)) => {
                        let method = CountMethod::default_for(sigma);
                        cmd_sequence(ctx, sigma, *n_max, method)?
                            .document
                            .payload
                            .rows
                            .iter()
                            .map(|r| r["value"].to_string())
                            .collect()
                    }
                    _ => terms.clone(),
                };
                cmd_oeis(ctx, &terms)
            }
        }
    }
}

impl Cli {
    /// Oracle budget, cache and network settings from the flags and environment.
    /// Verification never reads the cache, so none is opened for it.
    pub fn context(&self) -> Result<Context> {
        let mut budget = OracleBudget::default();
        if let Some(max_n) = self.budget_max_n {
            budget = budget.with_max_n(max_n);
        }
        if let Some(shards) = self.shards {
            budget = budget.with_shards(shards);
        }
        let cache = match self.command {
            Command::Verify { .. } | Command::Oeis { .. } => None,
            _ => Cache::from_flag_or_env(self.cache_dir.as_deref())?,
        };
        Ok(Context {
            oracle: Oracle::new(budget),
            cache,
            network: self.enable_network,
            oeis_url: None,
        })
    }
}
