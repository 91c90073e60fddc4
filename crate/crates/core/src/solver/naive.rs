//! Reference oracle: the game recursion written out with no memoization,
//! pruning or move ordering.
//!
//! Win conditions are evaluated through the domination predicates rather
//! than the search engine's bitmask tests; Staller's win is phrased as
//! "Dominator's set plus all unclaimed vertices is no longer a winning set".

use crate::domination::{is_dominating_set, is_total_dominating_set};
use crate::error::{Error, Result};
use crate::game::{GameState, GameVariant, Role};
use crate::graph::Graph;
use crate::value::GameValue;

use super::SolveSpec;

pub const DEFAULT_ORACLE_CAP: usize = 8;

pub fn naive_value(g: &Graph, spec: SolveSpec) -> Result<GameValue> {
    naive_value_capped(g, spec, DEFAULT_ORACLE_CAP)
}

pub fn naive_value_capped(g: &Graph, spec: SolveSpec, cap: usize) -> Result<GameValue> {
    if g.order() > cap {
        return Err(Error::OracleCap {
            order: g.order(),
            cap,
        });
    }
    Ok(recurse(g, spec, GameState::new(spec.starter)))
}

fn winning(g: &Graph, variant: GameVariant, set: crate::vertex_set::VertexSet) -> bool {
    match variant {
        GameVariant::Mbd => is_dominating_set(g, set),
        GameVariant::Mbtd => is_total_dominating_set(g, set),
    }
}

fn has_won(g: &Graph, spec: SolveSpec, st: &GameState, who: Role) -> bool {
    match who {
        Role::Dominator => winning(g, spec.variant, st.claimed_d),
        Role::Staller => !winning(g, spec.variant, st.claimed_s.complement(g.order())),
    }
}

/// Value of an arbitrary position; no order cap.
pub(crate) fn recurse(g: &Graph, spec: SolveSpec, st: GameState) -> GameValue {
    if has_won(g, spec, &st, spec.scored) {
        return GameValue::ZERO;
    }
    if has_won(g, spec, &st, spec.scored.other()) {
        return GameValue::Infinite;
    }
    let children = st
        .claimed()
        .complement(g.order())
        .iter()
        .map(|v| recurse(g, spec, st.apply_move(g, v).expect("unclaimed vertex")));
    if st.to_move == spec.scored {
        children.map(|c| c + 1).min()
    } else {
        children.max()
    }
    .expect("a position with no unclaimed vertex is always decided")
}
