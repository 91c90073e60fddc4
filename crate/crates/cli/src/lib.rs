//! The `mbtd` command line: solve and classify graphs read as edge lists,
//! emit construction families, and run the theorem and property harnesses.
//!
//! Exit codes: 0 success, 1 verification or property failure, 2 usage or
//! parse error, 3 resource cap (order or time budget) exceeded.

pub mod props;
pub mod verify;

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbtd_core::{
    outcome_with, solve_with, Error, Family, FamilySpec, GameValue, GameVariant, Graph, Role,
    SolveOptions, SolveSpec, VertexSet,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "mbtd",
    version,
    about = "Exact Maker-Breaker (total) domination game solver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub limits: Limits,
}

#[derive(Args, Debug, Clone)]
pub struct Limits {
    /// Wall-clock budget per solve, in seconds.
    #[arg(long, global = true, env = "MBTD_BUDGET_SECS", default_value_t = 120)]
    pub budget_secs: u64,

    /// Worker threads for root-level move splitting.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub threads: u32,

    /// Largest graph order the solver will accept.
    #[arg(long, global = true, default_value_t = 16)]
    pub max_order: usize,

    /// Machine-readable output for `verify` and `props`.
    #[arg(long, global = true)]
    pub json: bool,
}

impl Limits {
    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            threads: self.threads as usize,
            budget: Some(Duration::from_secs(self.budget_secs)),
            ..SolveOptions::default()
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Optimal-play value for one (game, scored player, starter) triple.
    Solve {
        #[arg(long, value_enum, default_value_t = GameArg::Mbtd)]
        game: GameArg,
        #[arg(long, value_enum, default_value_t = RoleArg::Dominator)]
        scored: RoleArg,
        #[arg(long, value_enum, default_value_t = RoleArg::Dominator)]
        start: RoleArg,
        /// Edge-list file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Outcome class D, S or N.
    Outcome {
        #[arg(long, value_enum, default_value_t = GameArg::Mbtd)]
        game: GameArg,
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Print a construction family member as an annotated edge list.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Reproduce a theorem's values over its parameter grid.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        max_l: Option<usize>,
        /// Include the larger optional instances.
        #[arg(long)]
        stretch: bool,
    },
    /// Property suite over exhaustive small graphs and seeded random graphs.
    Props {
        /// Exhaustive enumeration up to this order; random samples use the
        /// next two orders.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=7))]
        cap: u64,
        #[arg(long, default_value_t = 200)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GameArg {
    Mbd,
    Mbtd,
}

impl From<GameArg> for GameVariant {
    fn from(g: GameArg) -> Self {
        match g {
            GameArg::Mbd => GameVariant::Mbd,
            GameArg::Mbtd => GameVariant::Mbtd,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoleArg {
    Dominator,
    Staller,
}

impl From<RoleArg> for Role {
    fn from(r: RoleArg) -> Self {
        match r {
            RoleArg::Dominator => Role::Dominator,
            RoleArg::Staller => Role::Staller,
        }
    }
}

/// A failed command: exit code plus message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. }
            | Error::OrderTooLarge { .. }
            | Error::OracleCap { .. } => EXIT_CAP,
            Error::InconsistentOutcome => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(EXIT_FAILURE, e.to_string())
    }
}

/// JSON printed by `solve`.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct SolveOutput {
    pub game: GameVariant,
    pub scored: Role,
    pub start: Role,
    pub value: GameValue,
    pub optimal_first_moves: VertexSet,
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Serialize, Debug)]
struct OutcomeOutput {
    outcome: mbtd_core::Outcome,
}

/// Parses arguments and runs one command. Never panics on bad input.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "mbtd: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    let limits = &cli.limits;
    match &cli.command {
        Command::Solve {
            game,
            scored,
            start,
            input,
        } => {
            let g = read_graph(input, stdin, limits.max_order)?;
            let spec = SolveSpec::new((*game).into(), (*scored).into(), (*start).into());
            let r = cmd_solve(&g, spec, limits)?;
            serde_json::to_writer(&mut *out, &r)?;
            writeln!(out)?;
            Ok(EXIT_OK)
        }
        Command::Outcome { game, input } => {
            let g = read_graph(input, stdin, limits.max_order)?;
            let o = outcome_with(&g, (*game).into(), &limits.solve_options())?;
            serde_json::to_writer(&mut *out, &OutcomeOutput { outcome: o })?;
            writeln!(out)?;
            Ok(EXIT_OK)
        }
        Command::Construct { family, k, l, n } => {
            let family: Family = family.parse()?;
            let c = FamilySpec::new(family, *k, *l, *n).generate()?;
            out.write_all(c.to_annotated_edge_list().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            max_k,
            max_l,
            stretch,
        } => {
            let grid = verify::Grid {
                max_k: *max_k,
                max_l: *max_l,
                stretch: *stretch,
            };
            let report = verify::run_theorem(theorem, &grid, limits)?;
            if limits.json {
                serde_json::to_writer_pretty(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                out.write_all(report.summary().as_bytes())?;
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Props {
            cap,
            samples,
            seed,
            mutate,
        } => {
            let cfg = props::PropsConfig {
                cap: *cap as usize,
                samples: *samples,
                seed: *seed,
                mutate: *mutate,
            };
            let report = props::run_props(&cfg);
            if limits.json {
                serde_json::to_writer_pretty(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                out.write_all(report.summary().as_bytes())?;
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

pub fn cmd_solve(g: &Graph, spec: SolveSpec, limits: &Limits) -> Result<SolveOutput, Failure> {
    check_order(g, limits.max_order)?;
    let r = solve_with(g, spec, &limits.solve_options())?;
    Ok(SolveOutput {
        game: spec.variant,
        scored: spec.scored,
        start: spec.starter,
        value: r.value,
        optimal_first_moves: r.optimal_first_moves,
        nodes: r.stats.nodes,
        millis: r.stats.elapsed.as_millis() as u64,
    })
}

fn check_order(g: &Graph, max_order: usize) -> Result<(), Failure> {
    if g.order() > max_order {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            max: max_order,
        }
        .into());
    }
    Ok(())
}

fn read_graph(input: &str, stdin: &mut dyn BufRead, max_order: usize) -> Result<Graph, Failure> {
    let mut text = String::new();
    if input == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(input)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{input}: {e}")))?;
    }
    let g = Graph::from_edge_list(&text)?;
    check_order(&g, max_order)?;
    Ok(g)
}
