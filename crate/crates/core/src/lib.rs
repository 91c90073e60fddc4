//! Exact solver for Maker-Breaker domination and total domination games on
//! small graphs.
//!
//! Dominator (the maker) and Staller (the breaker) alternately claim
//! vertices. In the domination game Dominator wins once his vertices form a
//! dominating set; in the total domination game, a total dominating set.
//! [`solve_value`] computes the minimum number of moves the scored player
//! needs against an optimal opponent, or [`GameValue::Infinite`].
//!
//! ```
//! use mbtd_core::{basic, solve_value, BasicFamily, GameValue, SolveSpec};
//!
//! let c4 = basic(BasicFamily::Cycle, 4).unwrap();
//! assert_eq!(solve_value(&c4, SolveSpec::MBT).value, GameValue::Finite(2));
//! ```

pub mod constructions;
pub mod domination;
mod error;
pub mod game;
pub mod graph;
pub mod properties;
pub mod small_graphs;
pub mod solver;
mod value;
mod vertex_set;

#[cfg(test)]
mod testutil;

pub use constructions::{basic, BasicFamily, Construction, Family, FamilySpec, Params};
pub use domination::{
    domination_number, find_pairing_total_dominating_set, is_dominating_set,
    is_pairing_total_dominating_set, is_total_dominating_set, total_domination_number, Pairing,
};
pub use error::{Error, Result};
pub use game::{GameState, GameVariant, Role};
pub use graph::Graph;
pub use solver::{
    best_line, classify, naive_value, outcome, outcome_with, solve_value, solve_with, Outcome,
    SearchStats, SolveOptions, SolveResult, SolveSpec,
};
pub use value::GameValue;
pub use vertex_set::{VertexSet, MAX_ORDER};
