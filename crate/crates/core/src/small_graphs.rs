//! Small-graph sources for property checks: seeded random graphs and an
//! exhaustive list of connected graphs up to isomorphism.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use crate::graph::Graph;

/// Largest order [`connected_graphs`] accepts. 8 vertices already give
/// 11117 classes and 8! relabelings per candidate.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// `G(n, p)` from a ChaCha8 stream seeded by `seed`.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).expect("order within range");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Random connected graph: a random recursive tree plus each remaining
/// pair independently with probability 1/2.
pub fn random_connected_graph(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n).expect("order within range");
    for v in 1..n {
        let parent = rng.random_range(0..v);
        g.add_edge(parent, v).expect("fresh edge");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(0.5) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// One representative of every isomorphism class of connected graphs on
/// `n` vertices, in canonical form, sorted by edge mask.
///
/// Counts for `n = 1..=7`: 1, 1, 2, 6, 21, 112, 853.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_EXHAUSTIVE_ORDER).contains(&n),
        "exhaustive enumeration supports 1..={MAX_EXHAUSTIVE_ORDER} vertices"
    );
    let mut layer: Vec<u64> = vec![0];
    for m in 2..=n {
        let perms = permutations(m);
        let mut next = FxHashSet::default();
        for &mask in &layer {
            // every connected graph has a vertex whose removal keeps it connected
            for nbrs in 1u64..(1 << (m - 1)) {
                let mut grown = mask;
                for u in 0..m - 1 {
                    if nbrs >> u & 1 == 1 {
                        grown |= 1 << pair_index(u, m - 1);
                    }
                }
                next.insert(canonical(grown, m, &perms));
            }
        }
        layer = next.into_iter().collect();
        layer.sort_unstable();
    }
    layer.into_iter().map(|mask| from_mask(mask, n)).collect()
}

/// Bit position of the pair `u < v` in an edge mask.
fn pair_index(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn from_mask(mask: u64, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("order within range");
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(u, v) & 1 == 1 {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

fn canonical(mask: u64, n: usize, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| mask >> pair_index(u, v) & 1 == 1)
        .collect();
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << pair_index(a, b)
            })
        })
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                extend(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
