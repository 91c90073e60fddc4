//! Rules of the Maker-Breaker domination (MBD) and total domination (MBTD)
//! games: players alternately claim unclaimed vertices; Dominator wants a
//! (total) dominating set, Staller wants to stop him.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::domination::{is_dominating_set, is_total_dominating_set};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GameVariant {
    /// Dominator's winning sets are the dominating sets.
    Mbd,
    /// Dominator's winning sets are the total dominating sets.
    Mbtd,
}

impl GameVariant {
    /// The neighbourhood Dominator must hit for vertex `v`, and that
    /// Staller wins by occupying completely.
    #[inline]
    pub fn target(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            GameVariant::Mbd => g.closed_nbrs(v),
            GameVariant::Mbtd => g.nbrs(v),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GameVariant::Mbd => "mbd",
            GameVariant::Mbtd => "mbtd",
        }
    }
}

impl fmt::Display for GameVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GameVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mbd" => Ok(GameVariant::Mbd),
            "mbtd" => Ok(GameVariant::Mbtd),
            _ => Err(Error::Parameter(format!(
                "unknown game {s:?} (expected mbd or mbtd)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Dominator,
    Staller,
}

impl Role {
    #[inline]
    pub fn other(self) -> Role {
        match self {
            Role::Dominator => Role::Staller,
            Role::Staller => Role::Dominator,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Role::Dominator => "dominator",
            Role::Staller => "staller",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dominator" | "d" => Ok(Role::Dominator),
            "staller" | "s" => Ok(Role::Staller),
            _ => Err(Error::Parameter(format!(
                "unknown player {s:?} (expected dominator or staller)"
            ))),
        }
    }
}

/// A position: the vertices claimed by each player and who moves next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub claimed_d: VertexSet,
    pub claimed_s: VertexSet,
    pub to_move: Role,
}

impl GameState {
    pub fn new(starter: Role) -> Self {
        GameState {
            claimed_d: VertexSet::EMPTY,
            claimed_s: VertexSet::EMPTY,
            to_move: starter,
        }
    }

    /// Disjointness and the alternation invariant: the move counts differ
    /// by at most one, consistent with whose turn it is.
    pub fn is_consistent(&self) -> bool {
        if self.claimed_d.intersects(self.claimed_s) {
            return false;
        }
        let d = self.claimed_d.len() as isize;
        let s = self.claimed_s.len() as isize;
        match (d - s, self.to_move) {
            // Even number of moves so far: the starter is to move.
            (0, _) => true,
            // Dominator is one ahead, so he started and Staller moves.
            (1, Role::Staller) => true,
            (-1, Role::Dominator) => true,
            _ => false,
        }
    }

    pub fn claimed(&self) -> VertexSet {
        self.claimed_d.union(self.claimed_s)
    }

    /// Claims `v` for the player to move.
    pub fn apply_move(&self, g: &Graph, v: usize) -> Result<GameState> {
        if v >= g.order() {
            return Err(Error::IllegalMove(format!(
                "vertex {v} out of range for order {}",
                g.order()
            )));
        }
        if self.claimed().contains(v) {
            return Err(Error::IllegalMove(format!("vertex {v} is already claimed")));
        }
        let mut next = *self;
        match self.to_move {
            Role::Dominator => next.claimed_d = next.claimed_d.with(v),
            Role::Staller => next.claimed_s = next.claimed_s.with(v),
        }
        next.to_move = self.to_move.other();
        Ok(next)
    }
}

pub fn new_game(starter: Role) -> GameState {
    GameState::new(starter)
}

/// Unclaimed vertices.
pub fn legal_moves(g: &Graph, st: &GameState) -> VertexSet {
    st.claimed().complement(g.order())
}

pub fn apply_move(g: &Graph, st: &GameState, v: usize) -> Result<GameState> {
    st.apply_move(g, v)
}

pub fn dominator_has_won(g: &Graph, variant: GameVariant, st: &GameState) -> bool {
    match variant {
        GameVariant::Mbd => is_dominating_set(g, st.claimed_d),
        GameVariant::Mbtd => is_total_dominating_set(g, st.claimed_d),
    }
}

/// Staller has occupied a whole target neighbourhood, so no completion of
/// Dominator's set can ever win.
pub fn staller_has_won(g: &Graph, variant: GameVariant, st: &GameState) -> bool {
    (0..g.order()).any(|v| variant.target(g, v).is_subset(st.claimed_s))
}

pub fn has_won(g: &Graph, variant: GameVariant, st: &GameState, who: Role) -> bool {
    match who {
        Role::Dominator => dominator_has_won(g, variant, st),
        Role::Staller => staller_has_won(g, variant, st),
    }
}
