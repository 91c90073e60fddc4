//! Structural properties every solver answer must satisfy, checked one graph
//! at a time against a caller-supplied value function.

use serde::Serialize;

use crate::domination::{
    domination_number, find_pairing_total_dominating_set, total_domination_number,
};
use crate::graph::Graph;
use crate::solver::{classify, naive_value_capped, solve_value, SolveSpec};
use crate::value::GameValue;

/// Names of the checked properties, in report order.
pub const PROPERTIES: [&str; 10] = [
    "chain_mbtd",
    "chain_mbd",
    "staller_start_advantage",
    "winner_complementarity",
    "ceiling_bound",
    "floor_bound",
    "outcome_consistency",
    "oracle_equivalence",
    "edge_monotonicity",
    "pairing_bound",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: &'static str,
    pub detail: String,
}

/// Value function under test, e.g. [`solve_value`].
pub type ValueFn<'a> = dyn Fn(&Graph, SolveSpec) -> GameValue + 'a;

pub fn exact_values(g: &Graph, spec: SolveSpec) -> GameValue {
    solve_value(g, spec).value
}

/// Runs every property on `g`. The reference oracle is consulted when
/// `g.order() <= oracle_cap`.
pub fn check_graph(g: &Graph, solve: &ValueFn<'_>, oracle_cap: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut fail =
        |property: &'static str, detail: String| out.push(Violation { property, detail });

    let vals: Vec<GameValue> = SolveSpec::ALL_NAMED.iter().map(|&s| solve(g, s)).collect();
    let [mb, mb_p, smb, smb_p, mbt, mbt_p] = vals[..] else {
        unreachable!()
    };
    let gamma = domination_number(g);
    let gamma_t = total_domination_number(g);
    let n = g.order() as u32;

    if !(gamma_t.max(mb) <= mbt && mbt <= mbt_p) {
        fail(
            "chain_mbtd",
            format!("gamma_t={gamma_t} gamma_MB={mb} gamma_MBT={mbt} gamma_MBT'={mbt_p}"),
        );
    }
    if !(gamma <= mb && mb <= mb_p) {
        fail(
            "chain_mbd",
            format!("gamma={gamma} gamma_MB={mb} gamma_MB'={mb_p}"),
        );
    }
    if smb_p > smb {
        fail(
            "staller_start_advantage",
            format!("gamma_SMB={smb} gamma_SMB'={smb_p}"),
        );
    }
    if mb.is_finite() == smb.is_finite() || mb_p.is_finite() == smb_p.is_finite() {
        fail(
            "winner_complementarity",
            format!("gamma_MB={mb} gamma_SMB={smb} gamma_MB'={mb_p} gamma_SMB'={smb_p}"),
        );
    }
    if mbt.finite().is_some_and(|m| m > n.div_ceil(2)) {
        fail("ceiling_bound", format!("gamma_MBT={mbt} > ceil({n}/2)"));
    }
    if mbt_p.finite().is_some_and(|m| m > n / 2) {
        fail("floor_bound", format!("gamma_MBT'={mbt_p} > floor({n}/2)"));
    }
    if classify(mbt, mbt_p).is_err() || classify(mb, mb_p).is_err() {
        fail(
            "outcome_consistency",
            format!("mbtd pair ({mbt}, {mbt_p}), mbd pair ({mb}, {mb_p})"),
        );
    }
    if g.order() <= oracle_cap {
        for (&spec, &got) in SolveSpec::ALL_NAMED.iter().zip(&vals) {
            let want = naive_value_capped(g, spec, oracle_cap).expect("order within cap");
            if want != got {
                fail(
                    "oracle_equivalence",
                    format!("{spec}: solver {got}, oracle {want}"),
                );
            }
        }
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if g.has_edge(u, v) {
                continue;
            }
            let plus = g.with_edge(u, v).expect("non-edge");
            let after = solve(&plus, SolveSpec::MBT);
            if after > mbt {
                fail(
                    "edge_monotonicity",
                    format!("adding {u}-{v}: gamma_MBT {mbt} -> {after}"),
                );
            }
        }
    }
    if let Some(p) = (1..=g.order() / 2).find_map(|k| find_pairing_total_dominating_set(g, k)) {
        let k = p.len() as u32;
        if mbt_p > GameValue::Finite(k) {
            fail(
                "pairing_bound",
                format!("{k}-pairing {:?} but gamma_MBT'={mbt_p}", p.pairs()),
            );
        }
    }
    out
}
