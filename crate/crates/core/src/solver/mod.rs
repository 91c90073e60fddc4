//! Exact optimal-play values for the Maker-Breaker (total) domination games.
//!
//! A [`SolveSpec`] picks the game, the player whose move count is measured
//! and the player who starts:
//!
//! | spec                            | invariant |
//! |---------------------------------|-----------|
//! | `(Mbtd, Dominator, Dominator)`  | `γ_MBT`   |
//! | `(Mbtd, Dominator, Staller)`    | `γ_MBT'`  |
//! | `(Mbd,  Dominator, Dominator)`  | `γ_MB`    |
//! | `(Mbd,  Dominator, Staller)`    | `γ_MB'`   |
//! | `(Mbd,  Staller,   Dominator)`  | `γ_SMB`   |
//! | `(Mbd,  Staller,   Staller)`    | `γ_SMB'`  |
//!
//! The recursion: a position where the scored player has won is worth 0, one
//! where the other player has won is worth ∞; otherwise the scored player
//! takes `1 + min` over its moves and the other player takes `max`.

mod naive;
mod search;
mod table;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{GameState, GameVariant, Role};
use crate::graph::Graph;
use crate::value::GameValue;
use crate::vertex_set::VertexSet;

pub use naive::{naive_value, naive_value_capped, DEFAULT_ORACLE_CAP};

use search::{Engine, Timeout, INF};
use table::{LocalTable, SharedHandle, SharedTable, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SolveSpec {
    pub variant: GameVariant,
    pub scored: Role,
    pub starter: Role,
}

impl SolveSpec {
    pub const fn new(variant: GameVariant, scored: Role, starter: Role) -> Self {
        SolveSpec {
            variant,
            scored,
            starter,
        }
    }

    pub const MBT: SolveSpec = SolveSpec::new(GameVariant::Mbtd, Role::Dominator, Role::Dominator);
    pub const MBT_PRIME: SolveSpec =
        SolveSpec::new(GameVariant::Mbtd, Role::Dominator, Role::Staller);
    pub const MB: SolveSpec = SolveSpec::new(GameVariant::Mbd, Role::Dominator, Role::Dominator);
    pub const MB_PRIME: SolveSpec =
        SolveSpec::new(GameVariant::Mbd, Role::Dominator, Role::Staller);
    pub const SMB: SolveSpec = SolveSpec::new(GameVariant::Mbd, Role::Staller, Role::Dominator);
    pub const SMB_PRIME: SolveSpec = SolveSpec::new(GameVariant::Mbd, Role::Staller, Role::Staller);

    /// The four Maker-Breaker domination specs followed by the two total ones.
    pub const ALL_NAMED: [SolveSpec; 6] = [
        SolveSpec::MB,
        SolveSpec::MB_PRIME,
        SolveSpec::SMB,
        SolveSpec::SMB_PRIME,
        SolveSpec::MBT,
        SolveSpec::MBT_PRIME,
    ];

    /// Conventional name of the invariant, if it has one.
    pub fn invariant_name(&self) -> Option<&'static str> {
        use GameVariant::*;
        use Role::*;
        Some(match (self.variant, self.scored, self.starter) {
            (Mbtd, Dominator, Dominator) => "gamma_MBT",
            (Mbtd, Dominator, Staller) => "gamma_MBT'",
            (Mbd, Dominator, Dominator) => "gamma_MB",
            (Mbd, Dominator, Staller) => "gamma_MB'",
            (Mbd, Staller, Dominator) => "gamma_SMB",
            (Mbd, Staller, Staller) => "gamma_SMB'",
            (Mbtd, Staller, _) => return None,
        })
    }
}

impl fmt::Display for SolveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}/scored={}/start={}",
            self.variant, self.scored, self.starter
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Root-splitting worker count; 1 runs single-threaded.
    pub threads: usize,
    /// Transposition table entry cap.
    pub table_cap: usize,
    /// Wall-clock budget for one solve.
    pub budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            threads: 1,
            table_cap: 1 << 26,
            budget: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub table_hits: u64,
    pub table_flushes: u64,
    #[serde(serialize_with = "ser_millis")]
    pub elapsed: Duration,
}

fn ser_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: GameValue,
    /// The starter's first moves that realize `value`. Empty when the
    /// position is already decided, or when the scored player starts and
    /// cannot win.
    pub optimal_first_moves: VertexSet,
    pub stats: SearchStats,
}

/// Solves with default options (single thread, no time budget).
pub fn solve_value(g: &Graph, spec: SolveSpec) -> SolveResult {
    solve_with(g, spec, &SolveOptions::default()).expect("no budget configured")
}

pub fn solve_with(g: &Graph, spec: SolveSpec, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let timeout = |_: Timeout| Error::BudgetExceeded {
        secs: opts.budget.map_or(0, |b| b.as_secs()),
    };

    let mut stats = SearchStats::default();
    let probe = Engine::new(
        g,
        spec.variant,
        spec.scored,
        spec.starter,
        LocalTable::new(1),
        None,
    );
    if let Some(v) = probe.terminal(0, 0) {
        stats.elapsed = start.elapsed();
        return Ok(SolveResult {
            value: GameValue::from_byte(v),
            optimal_first_moves: VertexSet::EMPTY,
            stats,
        });
    }
    drop(probe);

    let moves: Vec<usize> = g.vertices().to_vec();
    let children: Vec<u8> = if opts.threads <= 1 || moves.len() < 2 {
        let table = LocalTable::new(opts.table_cap);
        let mut engine = Engine::new(g, spec.variant, spec.scored, spec.starter, table, deadline);
        let mut out = Vec::with_capacity(moves.len());
        for &x in &moves {
            let (d, s) = first_move(spec.starter, x);
            out.push(engine.value(d, s).map_err(timeout)?);
        }
        stats.nodes = engine.nodes;
        stats.table_hits = engine.hits;
        stats.table_flushes = engine.table.flushes();
        out
    } else {
        let shared = SharedTable::new(opts.table_cap);
        let next = AtomicUsize::new(0);
        let workers = opts.threads.min(moves.len());
        let results: Vec<Result<WorkerOutput>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut engine = Engine::new(
                            g,
                            spec.variant,
                            spec.scored,
                            spec.starter,
                            SharedHandle::new(&shared),
                            deadline,
                        );
                        let mut done = Vec::new();
                        loop {
                            let i = next.fetch_add(1, Ordering::Relaxed);
                            let Some(&x) = moves.get(i) else { break };
                            let (d, s) = first_move(spec.starter, x);
                            done.push((i, engine.value(d, s).map_err(timeout)?));
                        }
                        Ok(WorkerOutput {
                            done,
                            nodes: engine.nodes,
                            hits: engine.hits,
                            flushes: engine.table.flushes(),
                        })
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("solver worker panicked"))
                .collect()
        });
        let mut out = vec![0u8; moves.len()];
        for r in results {
            let w = r?;
            stats.nodes += w.nodes;
            stats.table_hits += w.hits;
            stats.table_flushes += w.flushes;
            for (i, v) in w.done {
                out[i] = v;
            }
        }
        out
    };
    // the root itself
    stats.nodes += 1;

    let (value, optimal) = if spec.starter == spec.scored {
        let best = children
            .iter()
            .filter(|&&c| c != INF)
            .map(|&c| c + 1)
            .min()
            .unwrap_or(INF);
        let optimal: VertexSet = if best == INF {
            VertexSet::EMPTY
        } else {
            moves
                .iter()
                .zip(&children)
                .filter(|(_, &c)| c != INF && c + 1 == best)
                .map(|(&x, _)| x)
                .collect()
        };
        (best, optimal)
    } else {
        let best = children.iter().copied().max().unwrap_or(INF);
        let optimal = moves
            .iter()
            .zip(&children)
            .filter(|(_, &c)| c == best)
            .map(|(&x, _)| x);
        (best, optimal.collect())
    };
    stats.elapsed = start.elapsed();
    Ok(SolveResult {
        value: GameValue::from_byte(value),
        optimal_first_moves: optimal,
        stats,
    })
}

/// Root children evaluated by one worker, as `(move index, value)`.
struct WorkerOutput {
    done: Vec<(usize, u8)>,
    nodes: u64,
    hits: u64,
    flushes: u64,
}

fn first_move(starter: Role, x: usize) -> (u64, u64) {
    match starter {
        Role::Dominator => (1 << x, 0),
        Role::Staller => (0, 1 << x),
    }
}

/// Game outcome: who wins under optimal play, depending on who starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    /// Dominator wins whoever starts.
    D,
    /// Staller wins whoever starts.
    S,
    /// The first player wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::D => "D",
            Outcome::S => "S",
            Outcome::N => "N",
        })
    }
}

/// Classifies a pair of Dominator-scored values (D-game, S-game).
pub fn classify(d_game: GameValue, s_game: GameValue) -> Result<Outcome> {
    match (d_game.is_finite(), s_game.is_finite()) {
        (true, true) => Ok(Outcome::D),
        (false, false) => Ok(Outcome::S),
        (true, false) => Ok(Outcome::N),
        (false, true) => Err(Error::InconsistentOutcome),
    }
}

pub fn outcome(g: &Graph, variant: GameVariant) -> Result<Outcome> {
    outcome_with(g, variant, &SolveOptions::default())
}

pub fn outcome_with(g: &Graph, variant: GameVariant, opts: &SolveOptions) -> Result<Outcome> {
    let d = solve_with(
        g,
        SolveSpec::new(variant, Role::Dominator, Role::Dominator),
        opts,
    )?;
    let s = solve_with(
        g,
        SolveSpec::new(variant, Role::Dominator, Role::Staller),
        opts,
    )?;
    classify(d.value, s.value)
}

/// One optimal play from the start position until the scored player wins.
///
/// The scored player always picks the lowest-indexed move achieving the
/// value; the other player the lowest-indexed move that keeps it.
pub fn best_line(g: &Graph, spec: SolveSpec) -> Result<Vec<(Role, usize)>> {
    let table = LocalTable::new(SolveOptions::default().table_cap);
    let mut engine = Engine::new(g, spec.variant, spec.scored, spec.starter, table, None);
    let unreachable = |_: Timeout| unreachable!("no deadline");
    let mut st = GameState::new(spec.starter);
    let mut value = engine.value(0, 0).map_err(unreachable)?;
    if value == INF {
        return Err(Error::NoLine);
    }
    let mut line = Vec::new();
    while value > 0 {
        let mover = st.to_move;
        let want = if mover == spec.scored {
            value - 1
        } else {
            value
        };
        let mut chosen = None;
        for x in st.claimed().complement(g.order()) {
            let next = st.apply_move(g, x)?;
            let c = engine
                .value(next.claimed_d.bits(), next.claimed_s.bits())
                .map_err(unreachable)?;
            if c == want {
                chosen = Some((x, next));
                break;
            }
        }
        let (x, next) = chosen.expect("some move realizes the exact value");
        line.push((mover, x));
        st = next;
        value = want;
    }
    Ok(line)
}

impl FromStr for SolveSpec {
    type Err = Error;

    /// Parses invariant names such as `mbt`, `mbt'`, `smb'`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .to_ascii_lowercase()
            .replace("gamma_", "")
            .replace("prime", "'");
        Ok(match t.as_str() {
            "mbt" => SolveSpec::MBT,
            "mbt'" => SolveSpec::MBT_PRIME,
            "mb" => SolveSpec::MB,
            "mb'" => SolveSpec::MB_PRIME,
            "smb" => SolveSpec::SMB,
            "smb'" => SolveSpec::SMB_PRIME,
            _ => return Err(Error::Parameter(format!("unknown invariant {s:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{basic, gen_fkl, gen_g2l, BasicFamily};
    use crate::game::{dominator_has_won, staller_has_won};
    use crate::testutil::random_connected_graph;

    fn c4() -> Graph {
        basic(BasicFamily::Cycle, 4).unwrap()
    }

    fn v(m: u32) -> GameValue {
        GameValue::Finite(m)
    }

    #[test]
    fn c4_values() {
        let g = c4();
        assert_eq!(solve_value(&g, SolveSpec::MBT).value, v(2));
        assert_eq!(solve_value(&g, SolveSpec::MBT_PRIME).value, v(2));
        assert_eq!(solve_value(&g, SolveSpec::MB).value, v(2));
        assert_eq!(solve_value(&g, SolveSpec::MB_PRIME).value, v(2));
        assert_eq!(outcome(&g, GameVariant::Mbtd).unwrap(), Outcome::D);
        for spec in SolveSpec::ALL_NAMED {
            assert_eq!(
                solve_value(&g, spec).value,
                naive_value(&g, spec).unwrap(),
                "{spec}"
            );
        }
    }

    #[test]
    fn k2_and_isolated_vertices() {
        let k2 = basic(BasicFamily::Path, 2).unwrap();
        assert_eq!(solve_value(&k2, SolveSpec::MBT).value, GameValue::Infinite);
        assert_eq!(outcome(&k2, GameVariant::Mbtd).unwrap(), Outcome::S);
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        let r = solve_value(&iso, SolveSpec::MBT);
        assert_eq!(r.value, GameValue::Infinite);
        assert!(r.optimal_first_moves.is_empty());
    }

    #[test]
    fn small_oracle_values() {
        // P_3: centre, then either leaf.
        let p3 = basic(BasicFamily::Path, 3).unwrap();
        assert_eq!(naive_value(&p3, SolveSpec::MBT).unwrap(), v(2));
        assert_eq!(solve_value(&p3, SolveSpec::MBT).value, v(2));
        assert_eq!(
            solve_value(&p3, SolveSpec::MBT)
                .optimal_first_moves
                .to_vec(),
            vec![1]
        );

        let c5 = basic(BasicFamily::Cycle, 5).unwrap();
        assert_eq!(
            naive_value(&c5, SolveSpec::MBT).unwrap(),
            GameValue::Infinite
        );
        assert_eq!(outcome(&c5, GameVariant::Mbtd).unwrap(), Outcome::S);

        let c3 = basic(BasicFamily::Cycle, 3).unwrap();
        assert_eq!(outcome(&c3, GameVariant::Mbtd).unwrap(), Outcome::N);

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(naive_value(&star, SolveSpec::SMB_PRIME).unwrap(), v(2));
        assert_eq!(solve_value(&star, SolveSpec::SMB_PRIME).value, v(2));
    }

    #[test]
    fn oracle_refuses_large_graphs() {
        let g = basic(BasicFamily::Cycle, 9).unwrap();
        assert_eq!(
            naive_value(&g, SolveSpec::MBT),
            Err(Error::OracleCap {
                order: 9,
                cap: DEFAULT_ORACLE_CAP
            })
        );
    }

    #[test]
    fn realization_examples() {
        let g23 = gen_g2l(3).unwrap().graph;
        assert_eq!(solve_value(&g23, SolveSpec::MBT).value, v(3));
        assert_eq!(solve_value(&g23, SolveSpec::MB).value, v(2));
        let f23 = gen_fkl(2, 3).unwrap().graph;
        assert_eq!(solve_value(&f23, SolveSpec::MBT_PRIME).value, v(3));
    }

    #[test]
    fn classify_rejects_forbidden_pattern() {
        assert_eq!(
            classify(GameValue::Infinite, v(3)),
            Err(Error::InconsistentOutcome)
        );
        assert_eq!(classify(v(1), GameValue::Infinite), Ok(Outcome::N));
    }

    fn replay(g: &Graph, spec: SolveSpec, line: &[(Role, usize)]) -> GameState {
        let mut st = GameState::new(spec.starter);
        for &(who, x) in line {
            assert_eq!(st.to_move, who);
            st = st.apply_move(g, x).unwrap();
        }
        st
    }

    #[test]
    fn best_lines_replay() {
        let g = c4();
        let line = best_line(&g, SolveSpec::MBT).unwrap();
        assert_eq!(line.len(), 3);
        let end = replay(&g, SolveSpec::MBT, &line);
        assert!(dominator_has_won(&g, GameVariant::Mbtd, &end));
        let d = end.claimed_d.to_vec();
        assert_eq!(d.len(), 2);
        assert!(g.has_edge(d[0], d[1]));

        let k2 = basic(BasicFamily::Path, 2).unwrap();
        assert_eq!(best_line(&k2, SolveSpec::MBT), Err(Error::NoLine));

        let g23 = gen_g2l(3).unwrap().graph;
        let line = best_line(&g23, SolveSpec::MBT).unwrap();
        assert_eq!(line.len(), 5);
        let end = replay(&g23, SolveSpec::MBT, &line);
        assert!(dominator_has_won(&g23, GameVariant::Mbtd, &end));
        assert_eq!(end.claimed_d.len(), 3);

        // Staller-scored lines end in a Staller win.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let line = best_line(&star, SolveSpec::SMB_PRIME).unwrap();
        let end = replay(&star, SolveSpec::SMB_PRIME, &line);
        assert!(staller_has_won(&star, GameVariant::Mbd, &end));
        assert_eq!(end.claimed_s.len(), 2);
    }

    #[test]
    fn optimal_first_moves_are_optimal() {
        for seed in 0..30 {
            let g = random_connected_graph(seed, 6);
            for spec in SolveSpec::ALL_NAMED {
                let r = solve_value(&g, spec);
                if spec.starter == spec.scored && r.value.is_finite() {
                    assert!(!r.optimal_first_moves.is_empty());
                }
                for x in r.optimal_first_moves {
                    let child = GameState::new(spec.starter).apply_move(&g, x).unwrap();
                    let mut naive_child = naive_from(&g, spec, child);
                    if spec.starter == spec.scored {
                        naive_child = naive_child + 1;
                    }
                    assert_eq!(naive_child, r.value, "{spec} move {x}");
                }
            }
        }
    }

    fn naive_from(g: &Graph, spec: SolveSpec, st: GameState) -> GameValue {
        naive::recurse(g, spec, st)
    }

    #[test]
    fn parallel_matches_serial() {
        let g = gen_fkl(2, 3).unwrap().graph;
        for spec in [SolveSpec::MBT, SolveSpec::MBT_PRIME, SolveSpec::MB_PRIME] {
            let serial = solve_value(&g, spec);
            let par = solve_with(
                &g,
                spec,
                &SolveOptions {
                    threads: 4,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(serial.value, par.value);
            assert_eq!(serial.optimal_first_moves, par.optimal_first_moves);
        }
    }

    #[test]
    fn tiny_table_and_budget() {
        let g = gen_fkl(2, 3).unwrap().graph;
        let opts = SolveOptions {
            table_cap: 16,
            ..Default::default()
        };
        let r = solve_with(&g, SolveSpec::MBT_PRIME, &opts).unwrap();
        assert_eq!(r.value, v(3));
        assert!(r.stats.table_flushes > 0);

        let g = crate::constructions::gen_gkl(3, 3).unwrap().graph;
        let opts = SolveOptions {
            budget: Some(Duration::ZERO),
            ..Default::default()
        };
        assert!(matches!(
            solve_with(&g, SolveSpec::MBT, &opts),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn spec_names() {
        assert_eq!("mbt'".parse::<SolveSpec>().unwrap(), SolveSpec::MBT_PRIME);
        assert_eq!("gamma_SMB".parse::<SolveSpec>().unwrap(), SolveSpec::SMB);
        assert!("xyz".parse::<SolveSpec>().is_err());
        for s in SolveSpec::ALL_NAMED {
            let name = s.invariant_name().unwrap();
            assert_eq!(name.parse::<SolveSpec>().unwrap(), s);
        }
    }
}
