//! Memoized minimax over positions `(claimed_d, claimed_s)`.
//!
//! Values are bytes with [`INF`] for "the scored player cannot win". The
//! scored player minimizes its own remaining move count, the other player
//! maximizes it. Only cutoffs that keep every returned value exact are
//! used, so every table entry is the true value of its position.

use std::time::Instant;

use crate::game::{GameVariant, Role};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::table::{key, Table};

pub(crate) const INF: u8 = u8::MAX;

/// Raised when the wall-clock deadline passes mid-search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Timeout;

const DEADLINE_POLL: u64 = 1 << 14;

pub(crate) struct Engine<'g, T> {
    /// `targets[v]`: the vertices that (totally) dominate `v`. Because
    /// adjacency is symmetric this is also the set `v` dominates.
    targets: Vec<u64>,
    full: u64,
    scored: Role,
    starter: Role,
    pub(crate) table: T,
    pub(crate) nodes: u64,
    pub(crate) hits: u64,
    deadline: Option<Instant>,
    _graph: std::marker::PhantomData<&'g Graph>,
}

impl<'g, T: Table> Engine<'g, T> {
    pub(crate) fn new(
        g: &'g Graph,
        variant: GameVariant,
        scored: Role,
        starter: Role,
        table: T,
        deadline: Option<Instant>,
    ) -> Self {
        Engine {
            targets: (0..g.order())
                .map(|v| variant.target(g, v).bits())
                .collect(),
            full: g.vertices().bits(),
            scored,
            starter,
            table,
            nodes: 0,
            hits: 0,
            deadline,
            _graph: std::marker::PhantomData,
        }
    }

    #[inline]
    pub(crate) fn to_move(&self, d: u64, s: u64) -> Role {
        if (d | s).count_ones().is_multiple_of(2) {
            self.starter
        } else {
            self.starter.other()
        }
    }

    #[inline]
    fn undominated(&self, d: u64) -> u64 {
        let mut out = 0u64;
        for (v, &t) in self.targets.iter().enumerate() {
            if t & d == 0 {
                out |= 1 << v;
            }
        }
        out
    }

    #[inline]
    fn dominator_won(&self, d: u64) -> bool {
        self.targets.iter().all(|&t| t & d != 0)
    }

    #[inline]
    fn staller_won(&self, s: u64) -> bool {
        self.targets.iter().any(|&t| t & !s == 0)
    }

    #[inline]
    fn won(&self, who: Role, d: u64, s: u64) -> bool {
        match who {
            Role::Dominator => self.dominator_won(d),
            Role::Staller => self.staller_won(s),
        }
    }

    /// Terminal value if either player has already won.
    #[inline]
    pub(crate) fn terminal(&self, d: u64, s: u64) -> Option<u8> {
        if self.won(self.scored, d, s) {
            Some(0)
        } else if self.won(self.scored.other(), d, s) {
            Some(INF)
        } else {
            None
        }
    }

    #[inline]
    fn play(&self, who: Role, d: u64, s: u64, x: usize) -> (u64, u64) {
        match who {
            Role::Dominator => (d | 1 << x, s),
            Role::Staller => (d, s | 1 << x),
        }
    }

    /// Exact value of the position.
    pub(crate) fn value(&mut self, d: u64, s: u64) -> Result<u8, Timeout> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(DEADLINE_POLL) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Timeout);
                }
            }
        }
        if let Some(v) = self.terminal(d, s) {
            return Ok(v);
        }
        let k = key(d, s);
        if let Some(v) = self.table.get(k) {
            self.hits += 1;
            return Ok(v);
        }
        let mover = self.to_move(d, s);
        let free = self.full & !(d | s);
        let v = if mover == self.scored {
            self.scored_node(mover, d, s, free)?
        } else {
            self.opponent_node(mover, d, s, free)?
        };
        self.table.put(k, v);
        Ok(v)
    }

    fn scored_node(&mut self, mover: Role, d: u64, s: u64, free: u64) -> Result<u8, Timeout> {
        let mut moves = MoveList::new();
        self.order_moves(mover, d, s, free, &mut moves);
        // Immediate win: nothing beats one move.
        for &x in moves.as_slice() {
            let (d2, s2) = self.play(mover, d, s, x);
            if self.won(mover, d2, s2) {
                return Ok(1);
            }
        }
        let floor = self.lower_bound(mover, d, s, free).max(2);
        let mut best = INF;
        for &x in moves.as_slice() {
            let (d2, s2) = self.play(mover, d, s, x);
            let c = self.value(d2, s2)?;
            if c != INF && c + 1 < best {
                best = c + 1;
                if best <= floor {
                    break;
                }
            }
        }
        Ok(best)
    }

    fn opponent_node(&mut self, mover: Role, d: u64, s: u64, free: u64) -> Result<u8, Timeout> {
        let mut moves = MoveList::new();
        self.order_moves(mover, d, s, free, &mut moves);
        for &x in moves.as_slice() {
            let (d2, s2) = self.play(mover, d, s, x);
            if self.won(mover, d2, s2) {
                return Ok(INF);
            }
        }
        let mut best = 0;
        for &x in moves.as_slice() {
            let (d2, s2) = self.play(mover, d, s, x);
            let c = self.value(d2, s2)?;
            best = best.max(c);
            if best == INF {
                break;
            }
        }
        Ok(best)
    }

    /// Moves the scored player still needs, at least.
    fn lower_bound(&self, mover: Role, d: u64, s: u64, free: u64) -> u8 {
        match mover {
            Role::Dominator => {
                let open = self.undominated(d);
                let best = VertexSet::from_bits(free)
                    .iter()
                    .map(|x| (self.targets[x] & open).count_ones())
                    .max()
                    .unwrap_or(0);
                if best == 0 {
                    return INF;
                }
                open.count_ones().div_ceil(best) as u8
            }
            Role::Staller => self
                .targets
                .iter()
                .filter(|&&t| t & d == 0)
                .map(|&t| (t & !s).count_ones() as u8)
                .min()
                .unwrap_or(INF),
        }
    }

    /// Heuristic move order; ties broken by vertex index so runs are reproducible.
    fn order_moves(&self, mover: Role, d: u64, s: u64, free: u64, out: &mut MoveList) {
        match mover {
            Role::Dominator => {
                // most newly dominated vertices first
                let open = self.undominated(d);
                for x in VertexSet::from_bits(free) {
                    let gain = (self.targets[x] & open).count_ones();
                    out.push((64 - gain) << 8 | x as u32);
                }
            }
            Role::Staller => {
                // closest to completing a live neighbourhood first
                let mut need = [u32::MAX; 64];
                for &t in &self.targets {
                    if t & d != 0 {
                        continue;
                    }
                    let missing = (t & !s).count_ones();
                    for x in VertexSet::from_bits(t & free) {
                        need[x] = need[x].min(missing);
                    }
                }
                for x in VertexSet::from_bits(free) {
                    out.push(need[x].min(0xFF_FFFF) << 8 | x as u32);
                }
            }
        }
        out.sort();
    }
}

/// Fixed-capacity move buffer; entries are `priority << 8 | vertex`.
pub(crate) struct MoveList {
    buf: [u32; 64],
    len: usize,
    verts: [usize; 64],
}

impl MoveList {
    pub(crate) fn new() -> Self {
        MoveList {
            buf: [0; 64],
            len: 0,
            verts: [0; 64],
        }
    }

    fn push(&mut self, packed: u32) {
        self.buf[self.len] = packed;
        self.len += 1;
    }

    fn sort(&mut self) {
        self.buf[..self.len].sort_unstable();
        for i in 0..self.len {
            self.verts[i] = (self.buf[i] & 0xFF) as usize;
        }
    }

    fn as_slice(&self) -> &[usize] {
        &self.verts[..self.len]
    }
}
