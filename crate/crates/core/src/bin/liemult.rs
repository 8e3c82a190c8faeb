use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;

use liemult::hall::{witt, HallBasis};
use liemult::homology::invariants;
use liemult::lie::AlgebraJson;
use liemult::notation::parse_algebra;
use liemult::verify::{all_pass, render_table, run_suite, SuiteOptions};
use liemult::Error;

/// Schur multipliers and related invariants of nilpotent Lie algebras.
#[derive(Parser)]
#[command(name = "liemult", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its structure constants as JSON.
    Construct {
        /// e.g. `GH(3)`, `H(2)+A(1)`, `F(2,3)`, `GH(3)/[1,0,0]`
        spec: String,
    },
    /// Multiplier, exterior square, capability and cover of an algebra.
    Invariants { spec: String },
    /// Witt's count of Hall basic commutators of length n on d generators.
    Witt { d: u64, n: u64 },
    /// Recompute every catalogued dimension claim.
    VerifyPaper {
        /// Extend the generalized Heisenberg families to d = 6.
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
        /// Also run seeded randomized probes.
        #[arg(long, value_name = "SEED")]
        fuzz: Option<u64>,
    },
}

#[derive(Serialize)]
struct Constructed {
    #[serde(flatten)]
    algebra: AlgebraJson,
    class: usize,
    center_dim: usize,
    derived_dim: usize,
}

enum Outcome {
    Pass,
    Fail,
}

fn is_usage(err: &anyhow::Error) -> bool {
    matches!(
        err.downcast_ref::<Error>(),
        Some(Error::Parse { .. } | Error::InvalidArgument(_))
    )
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Construct { spec } => {
            let l = parse_algebra(&spec)?;
            let out = Constructed {
                algebra: l.to_json(),
                class: l.nilpotency_class()?,
                center_dim: l.center().dim(),
                derived_dim: l.derived().dim(),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(Outcome::Pass)
        }
        Command::Invariants { spec } => {
            let l = parse_algebra(&spec)?;
            let inv = invariants(&spec, &l).with_context(|| format!("computing invariants of {spec}"))?;
            println!("{}", serde_json::to_string_pretty(&inv)?);
            Ok(Outcome::Pass)
        }
        Command::Witt { d, n } => {
            if d == 0 || n == 0 {
                return Err(Error::InvalidArgument("d and n must be positive".into()).into());
            }
            let count = witt(d, n)?;
            println!("l_{d}({n}) = {count}");
            if count <= 10_000 {
                let hall = HallBasis::new(d as usize, n as usize)?.degree(n as usize).len() as u64;
                let agree = hall == count;
                println!("hall basis: {hall} ({})", if agree { "agrees" } else { "DISAGREES" });
                if !agree {
                    return Ok(Outcome::Fail);
                }
            } else {
                println!("hall basis: not enumerated (count above 10000)");
            }
            Ok(Outcome::Pass)
        }
        Command::VerifyPaper { deep, json, fuzz } => {
            let mut opts = if deep { SuiteOptions::deep() } else { SuiteOptions::default() };
            opts.fuzz_seed = fuzz;
            let records = run_suite(&opts);
            if json {
                println!("{}", serde_json::to_string_pretty(&records)?);
            } else {
                print!("{}", render_table(&records));
            }
            Ok(if all_pass(&records) { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
