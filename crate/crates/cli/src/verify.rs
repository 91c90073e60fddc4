//! Parameter grids behind `verify --theorem`. Expected values are closed
//! forms evaluated per instance.

use std::fmt::Write as _;
use std::time::Instant;

use mbtd_core::{
    domination_number, find_pairing_total_dominating_set, outcome_with, solve_with,
    total_domination_number, Family, FamilySpec, GameVariant, Graph, Outcome, Params, SolveSpec,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Failure, Limits, EXIT_CAP, EXIT_USAGE};

pub const THEOREMS: [&str; 5] = ["2.1", "2.2", "3.1", "3.2", "3.3"];

/// Parameter bounds from the command line; `None` means the default grid.
#[derive(Clone, Copy, Debug, Default)]
pub struct Grid {
    pub max_k: Option<usize>,
    pub max_l: Option<usize>,
    pub stretch: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Solve(SolveSpec),
    Gamma,
    GammaT,
    Outcome(GameVariant),
    /// A pairing total dominating set with this many pairs exists.
    Pairing(usize),
}

impl Check {
    pub fn name(&self) -> String {
        match self {
            Check::Solve(s) => s.invariant_name().unwrap_or("unnamed").to_string(),
            Check::Gamma => "gamma".into(),
            Check::GammaT => "gamma_t".into(),
            Check::Outcome(v) => format!("outcome_{v}"),
            Check::Pairing(k) => format!("pairing_{k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub family: FamilySpec,
    pub checks: Vec<(Check, Value)>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckReport {
    pub family: Family,
    pub params: Params,
    pub order: usize,
    pub invariant: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub nodes: u64,
    pub millis: u64,
    pub replay: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_list: Option<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct VerificationReport {
    pub theorem: String,
    pub grid: Vec<String>,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let mut s = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "theorem {}: {verdict} ({passed}/{} checks)",
            self.theorem,
            self.checks.len()
        );
        for c in &self.checks {
            let _ = writeln!(
                s,
                "  {} {}({}) {} expected {} computed {} [{} nodes, {} ms]",
                if c.pass { "ok  " } else { "FAIL" },
                c.family,
                c.params,
                c.invariant,
                c.expected,
                c.computed,
                c.nodes,
                c.millis
            );
            if !c.pass {
                let _ = writeln!(s, "       replay: {}", c.replay);
            }
        }
        s
    }
}

fn spec(family: Family, k: Option<usize>, l: Option<usize>, n: Option<usize>) -> FamilySpec {
    FamilySpec::new(family, k, l, n)
}

fn v(m: usize) -> Value {
    json!(m)
}

/// The instances and expected values for one theorem.
pub fn instances(theorem: &str, grid: &Grid) -> Result<Vec<Instance>, Failure> {
    let mut out = Vec::new();
    let mut push = |family, checks| out.push(Instance { family, checks });
    match theorem {
        "2.1" => {
            for l in 1..=grid.max_l.unwrap_or(3) {
                let n = 4 * l;
                push(
                    spec(Family::Gl, None, Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MBT), v(n.div_ceil(2))),
                        (Check::Solve(SolveSpec::MBT_PRIME), v(n / 2)),
                        (Check::GammaT, v(2 * l)),
                        (Check::Outcome(GameVariant::Mbtd), json!(Outcome::D)),
                    ],
                );
            }
            for l in 1..=grid.max_l.unwrap_or(2) {
                let n = 4 * l + 2;
                push(
                    spec(Family::GlPrime, None, Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MBT), v(n.div_ceil(2))),
                        (Check::GammaT, v(2 * l + 1)),
                    ],
                );
            }
            for l in 1..=grid.max_l.unwrap_or(2) {
                let n = 4 * l + 3;
                push(
                    spec(Family::GlDoublePrime, None, Some(l), None),
                    vec![(Check::Solve(SolveSpec::MBT_PRIME), v(n / 2))],
                );
            }
        }
        "2.2" => {
            for k in 2..=grid.max_k.unwrap_or(3) {
                push(
                    spec(Family::Gkn, Some(k), None, Some(4)),
                    vec![
                        (Check::Gamma, v(k)),
                        (Check::GammaT, v(k)),
                        (Check::Solve(SolveSpec::MB), v(k)),
                        (Check::Solve(SolveSpec::MBT), v(k)),
                    ],
                );
            }
            let hk_max = grid.max_k.unwrap_or(if grid.stretch { 3 } else { 2 });
            for k in 2..=hk_max {
                push(
                    spec(Family::Hkn, Some(k), None, Some(4)),
                    vec![
                        (Check::Gamma, v(k)),
                        (Check::GammaT, v(k)),
                        (Check::Solve(SolveSpec::MB_PRIME), v(k)),
                        (Check::Solve(SolveSpec::MBT_PRIME), v(k)),
                        (Check::Pairing(k), json!(true)),
                    ],
                );
            }
        }
        "3.1" => {
            for l in 3..=grid.max_l.unwrap_or(4) {
                push(
                    spec(Family::G2l, None, Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MB), v(2)),
                        (Check::Solve(SolveSpec::MBT), v(l)),
                    ],
                );
            }
            for (k, l) in k_le_l(3, grid.max_k.unwrap_or(3), grid.max_l.unwrap_or(3)) {
                push(
                    spec(Family::Gkl, Some(k), Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MB), v(k)),
                        (Check::Solve(SolveSpec::MBT), v(l)),
                    ],
                );
            }
        }
        "3.2" => {
            for l in 3..=grid.max_l.unwrap_or(4) {
                push(
                    spec(Family::H2l, None, Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MB_PRIME), v(2)),
                        (Check::Solve(SolveSpec::MBT_PRIME), v(l)),
                    ],
                );
            }
            if grid.stretch || grid.max_k.is_some() {
                for (k, l) in k_le_l(3, grid.max_k.unwrap_or(3), grid.max_l.unwrap_or(3)) {
                    push(
                        spec(Family::Hkl, Some(k), Some(l), None),
                        vec![
                            (Check::Solve(SolveSpec::MB_PRIME), v(k)),
                            (Check::Solve(SolveSpec::MBT_PRIME), v(l)),
                        ],
                    );
                }
            }
        }
        "3.3" => {
            let max_l = grid.max_l.unwrap_or(3);
            for (k, l) in k_le_l(2, grid.max_k.unwrap_or(max_l), max_l) {
                push(
                    spec(Family::Fkl, Some(k), Some(l), None),
                    vec![
                        (Check::Solve(SolveSpec::MBT), v(k)),
                        (Check::Solve(SolveSpec::MBT_PRIME), v(l)),
                    ],
                );
            }
        }
        other => {
            return Err(Failure::new(
                EXIT_USAGE,
                format!(
                    "unknown theorem {other:?} (expected one of {})",
                    THEOREMS.join(", ")
                ),
            ))
        }
    }
    Ok(out)
}

fn k_le_l(min_k: usize, max_k: usize, max_l: usize) -> Vec<(usize, usize)> {
    (min_k..=max_k)
        .flat_map(|k| (k..=max_l).map(move |l| (k, l)))
        .collect()
}

pub fn run_theorem(
    theorem: &str,
    grid: &Grid,
    limits: &Limits,
) -> Result<VerificationReport, Failure> {
    let insts = instances(theorem, grid)?;
    let mut checks = Vec::new();
    for inst in &insts {
        let c = inst.family.generate()?;
        if c.graph.order() > limits.max_order {
            return Err(Failure::new(
                EXIT_CAP,
                format!(
                    "{} has order {} above --max-order {}",
                    inst.family,
                    c.graph.order(),
                    limits.max_order
                ),
            ));
        }
        for (check, expected) in &inst.checks {
            let started = Instant::now();
            let (computed, nodes) = evaluate(&c.graph, *check, limits).map_err(|f| {
                Failure::new(
                    f.code,
                    format!("{} {}: {}", inst.family, check.name(), f.message),
                )
            })?;
            let pass = &computed == expected;
            checks.push(CheckReport {
                family: inst.family.family,
                params: inst.family.params,
                order: c.graph.order(),
                invariant: check.name(),
                expected: expected.clone(),
                computed,
                pass,
                nodes,
                millis: started.elapsed().as_millis() as u64,
                replay: replay(&inst.family, *check),
                edge_list: (!pass).then(|| c.graph.to_edge_list()),
            });
        }
    }
    Ok(VerificationReport {
        theorem: theorem.to_string(),
        grid: insts.iter().map(|i| i.family.to_string()).collect(),
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

fn evaluate(g: &Graph, check: Check, limits: &Limits) -> Result<(Value, u64), Failure> {
    let opts = limits.solve_options();
    Ok(match check {
        Check::Solve(s) => {
            let r = solve_with(g, s, &opts)?;
            (json!(r.value), r.stats.nodes)
        }
        Check::Gamma => (json!(domination_number(g)), 0),
        Check::GammaT => (json!(total_domination_number(g)), 0),
        Check::Outcome(variant) => (json!(outcome_with(g, variant, &opts)?), 0),
        Check::Pairing(k) => (json!(find_pairing_total_dominating_set(g, k).is_some()), 0),
    })
}

fn replay(fs: &FamilySpec, check: Check) -> String {
    let mut cmd = format!("mbtd construct --family {}", fs.family);
    for (flag, val) in [("k", fs.params.k), ("l", fs.params.l), ("n", fs.params.n)] {
        if let Some(x) = val {
            let _ = write!(cmd, " --{flag} {x}");
        }
    }
    match check {
        Check::Solve(s) => {
            let _ = write!(
                cmd,
                " | mbtd solve --game {} --scored {} --start {} --input -",
                s.variant, s.scored, s.starter
            );
        }
        Check::Outcome(v) => {
            let _ = write!(cmd, " | mbtd outcome --game {v} --input -");
        }
        Check::Gamma | Check::GammaT | Check::Pairing(_) => {}
    }
    cmd
}
