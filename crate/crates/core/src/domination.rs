//! Domination predicates, exact (total) domination numbers and pairing
//! total dominating sets.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::GameValue;
use crate::vertex_set::VertexSet;

/// Which neighbourhood a vertex must be hit in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Cover {
    /// `N[v]`: ordinary domination.
    Closed,
    /// `N(v)`: total domination.
    Open,
}

/// For every vertex `v`, the set of vertices that dominate it.
pub(crate) fn targets(g: &Graph, cover: Cover) -> Vec<VertexSet> {
    (0..g.order())
        .map(|v| match cover {
            Cover::Closed => g.closed_nbrs(v),
            Cover::Open => g.nbrs(v),
        })
        .collect()
}

/// Vertices not yet dominated by `d`.
#[inline]
pub(crate) fn undominated(targets: &[VertexSet], d: VertexSet) -> VertexSet {
    targets
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.intersects(d))
        .map(|(v, _)| v)
        .collect()
}

pub fn is_dominating_set(g: &Graph, d: VertexSet) -> bool {
    (0..g.order()).all(|v| g.closed_nbrs(v).intersects(d))
}

pub fn is_total_dominating_set(g: &Graph, d: VertexSet) -> bool {
    (0..g.order()).all(|v| g.nbrs(v).intersects(d))
}

/// `γ(G)`. Always finite for `n >= 1`.
pub fn domination_number(g: &Graph) -> GameValue {
    min_cover(&targets(g, Cover::Closed))
}

/// `γ_t(G)`, `Infinite` exactly when `G` has an isolated vertex.
pub fn total_domination_number(g: &Graph) -> GameValue {
    min_cover(&targets(g, Cover::Open))
}

/// Smallest set hitting every target, by iterative deepening over the
/// cardinality with a greedy upper bound.
fn min_cover(targets: &[VertexSet]) -> GameValue {
    if targets.iter().any(|t| t.is_empty()) {
        return GameValue::Infinite;
    }
    let all: VertexSet = (0..targets.len()).collect();
    let greedy = greedy_cover(targets, all);
    let lower = cover_lower_bound(targets, VertexSet::EMPTY, all) as usize;
    for k in lower..greedy {
        if cover_within(targets, VertexSet::EMPTY, k) {
            return GameValue::Finite(k as u32);
        }
    }
    GameValue::Finite(greedy as u32)
}

fn greedy_cover(targets: &[VertexSet], all: VertexSet) -> usize {
    let mut chosen = VertexSet::EMPTY;
    loop {
        let open = undominated(targets, chosen);
        if open.is_empty() {
            return chosen.len();
        }
        let best = all
            .difference(chosen)
            .iter()
            .max_by_key(|&c| (coverage(targets, open, c), std::cmp::Reverse(c)))
            .expect("every target is non-empty");
        chosen = chosen.with(best);
    }
}

/// Number of vertices in `open` that choosing `c` would dominate.
#[inline]
fn coverage(targets: &[VertexSet], open: VertexSet, c: usize) -> usize {
    open.iter().filter(|&v| targets[v].contains(c)).count()
}

/// `⌈|open| / best single-vertex coverage⌉`.
fn cover_lower_bound(targets: &[VertexSet], chosen: VertexSet, all: VertexSet) -> u32 {
    let open = undominated(targets, chosen);
    if open.is_empty() {
        return 0;
    }
    let best = all
        .difference(chosen)
        .iter()
        .map(|c| coverage(targets, open, c))
        .max()
        .unwrap_or(0);
    if best == 0 {
        return u32::MAX;
    }
    open.len().div_ceil(best) as u32
}

fn cover_within(targets: &[VertexSet], chosen: VertexSet, budget: usize) -> bool {
    let open = undominated(targets, chosen);
    let Some(pivot) = open.iter().min_by_key(|&v| targets[v].len()) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let all = VertexSet::full(targets.len());
    if cover_lower_bound(targets, chosen, all) as usize > budget {
        return false;
    }
    targets[pivot]
        .iter()
        .any(|c| cover_within(targets, chosen.with(c), budget - 1))
}

/// Disjoint vertex pairs `(u_i, v_i)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Pairing {
    pairs: Vec<(usize, usize)>,
}

impl Pairing {
    /// Rejects pairs that share a vertex or repeat a vertex within a pair.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &(a, b) in &pairs {
            for v in [a, b] {
                if v >= crate::vertex_set::MAX_ORDER {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: crate::vertex_set::MAX_ORDER,
                    });
                }
                if seen.contains(v) {
                    return Err(Error::OverlappingPairs(v));
                }
                seen = seen.with(v);
            }
        }
        Ok(Pairing { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs
            .iter()
            .fold(VertexSet::EMPTY, |acc, &(a, b)| acc.with(a).with(b))
    }

    /// The selection taking `v_i` where bit `i` of `mask` is set, `u_i` otherwise.
    pub fn selection(&self, mask: u64) -> VertexSet {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { b } else { a })
            .collect()
    }
}

/// Checks all `2^k` selections of the pairing.
pub fn is_pairing_total_dominating_set(g: &Graph, p: &Pairing) -> Result<bool> {
    // Re-validate: the pairing may have been built for another graph.
    let p = Pairing::new(p.pairs.clone())?;
    if let Some(v) = p.vertices().iter().find(|&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if p.len() >= 64 {
        return Err(Error::Parameter(
            "pairing too large for exhaustive check".into(),
        ));
    }
    Ok((0..1u64 << p.len()).all(|mask| is_total_dominating_set(g, p.selection(mask))))
}

/// Searches for a pairing total dominating set with exactly `k` pairs.
///
/// Every selection totally dominates `w` iff some pair lies inside `N(w)`,
/// so the search branches on the pairs inside the neighbourhood of the
/// most constrained vertex not yet covered this way.
pub fn find_pairing_total_dominating_set(g: &Graph, k: usize) -> Option<Pairing> {
    if 2 * k > g.order() {
        return None;
    }
    let mut pairs = Vec::with_capacity(k);
    if !pair_search(g, k, VertexSet::EMPTY, &mut pairs) {
        return None;
    }
    // Pad with arbitrary unused pairs: extra pairs only enlarge selections.
    let mut free = g.vertices().difference(
        pairs
            .iter()
            .fold(VertexSet::EMPTY, |acc, &(a, b)| acc.with(a).with(b)),
    );
    while pairs.len() < k {
        let a = free.first()?;
        free = free.without(a);
        let b = free.first()?;
        free = free.without(b);
        pairs.push((a, b));
    }
    pairs.sort_unstable();
    Some(Pairing::new(pairs).expect("search keeps pairs disjoint"))
}

fn pair_covered(g: &Graph, w: usize, pairs: &[(usize, usize)]) -> bool {
    let nb = g.nbrs(w);
    pairs.iter().any(|&(a, b)| nb.contains(a) && nb.contains(b))
}

fn pair_search(g: &Graph, budget: usize, used: VertexSet, pairs: &mut Vec<(usize, usize)>) -> bool {
    let mut pivot = None;
    let mut fewest = usize::MAX;
    for w in 0..g.order() {
        if pair_covered(g, w, pairs) {
            continue;
        }
        let avail = g.nbrs(w).difference(used).len();
        if avail < 2 {
            return false;
        }
        if avail < fewest {
            fewest = avail;
            pivot = Some(w);
        }
    }
    let Some(w) = pivot else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let avail = g.nbrs(w).difference(used);
    for a in avail {
        for b in avail.iter().filter(|&b| b > a) {
            pairs.push((a, b));
            if pair_search(g, budget - 1, used.with(a).with(b), pairs) {
                return true;
            }
            pairs.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{basic, BasicFamily};
    use crate::testutil::{random_graph, set};

    /// Test-only oracle: try every subset.
    fn brute_min(g: &Graph, pred: fn(&Graph, VertexSet) -> bool) -> GameValue {
        (0u64..1 << g.order())
            .map(VertexSet::from_bits)
            .filter(|&d| pred(g, d))
            .map(|d| GameValue::Finite(d.len() as u32))
            .min()
            .unwrap_or(GameValue::Infinite)
    }

    fn c4() -> Graph {
        basic(BasicFamily::Cycle, 4).unwrap()
    }

    #[test]
    fn predicates_on_c4() {
        let g = c4();
        assert!(is_dominating_set(&g, set(&[0, 2])));
        assert!(!is_dominating_set(&g, set(&[0])));
        assert!(is_total_dominating_set(&g, set(&[0, 1])));
        assert!(!is_total_dominating_set(&g, set(&[0, 2])));
    }

    #[test]
    fn numbers_on_small_graphs() {
        assert_eq!(
            domination_number(&basic(BasicFamily::Complete, 4).unwrap()),
            1.into()
        );
        assert_eq!(
            total_domination_number(&Graph::empty(1).unwrap()),
            GameValue::Infinite
        );
        assert_eq!(domination_number(&Graph::empty(1).unwrap()), 1.into());
        assert_eq!(total_domination_number(&c4()), 2.into());
    }

    #[test]
    fn numbers_match_brute_force() {
        for seed in 0..300 {
            let g = random_graph(seed, 1 + (seed as usize % 10), 0.35);
            assert_eq!(
                domination_number(&g),
                brute_min(&g, is_dominating_set),
                "{g:?}"
            );
            assert_eq!(
                total_domination_number(&g),
                brute_min(&g, is_total_dominating_set),
                "{g:?}"
            );
        }
    }

    #[test]
    fn domination_at_most_total_domination() {
        for seed in 0..200 {
            let g = random_graph(seed, 1 + (seed as usize % 8), 0.5);
            if g.isolated_vertices().is_empty() {
                assert!(domination_number(&g) <= total_domination_number(&g));
            }
        }
    }

    #[test]
    fn total_domination_is_superset_closed() {
        for seed in 0..200 {
            let g = random_graph(seed, 2 + (seed as usize % 9), 0.5);
            let all = g.vertices();
            for bits in [seed * 7919 % (1 << g.order()), seed] {
                let d = VertexSet::from_bits(bits).intersection(all);
                if is_total_dominating_set(&g, d) {
                    for extra in all.difference(d) {
                        assert!(is_total_dominating_set(&g, d.with(extra)));
                    }
                }
            }
        }
    }

    #[test]
    fn pairings_on_c4() {
        let g = c4();
        let good = Pairing::new(vec![(0, 2), (1, 3)]).unwrap();
        assert!(is_pairing_total_dominating_set(&g, &good).unwrap());
        let bad = Pairing::new(vec![(0, 1), (2, 3)]).unwrap();
        assert!(!is_pairing_total_dominating_set(&g, &bad).unwrap());
        // selection {0, 2} is the culprit
        assert_eq!(bad.selection(0b00), set(&[0, 2]));
        assert!(!is_total_dominating_set(&g, bad.selection(0b00)));

        let found = find_pairing_total_dominating_set(&g, 2).unwrap();
        assert_eq!(found.pairs(), &[(0, 2), (1, 3)]);
    }

    #[test]
    fn pairing_errors_and_absence() {
        assert_eq!(
            Pairing::new(vec![(0, 1), (1, 2)]),
            Err(Error::OverlappingPairs(1))
        );
        assert_eq!(Pairing::new(vec![(3, 3)]), Err(Error::OverlappingPairs(3)));
        let k2 = basic(BasicFamily::Path, 2).unwrap();
        assert!(find_pairing_total_dominating_set(&k2, 1).is_none());
        let p = Pairing::new(vec![(0, 5)]).unwrap();
        assert!(is_pairing_total_dominating_set(&k2, &p).is_err());
    }

    #[test]
    fn found_pairings_verify() {
        for seed in 0..300 {
            let g = random_graph(seed, 2 + (seed as usize % 9), 0.6);
            for k in 1..=g.order() / 2 {
                let found = find_pairing_total_dominating_set(&g, k);
                // Brute force over all k-pairings on tiny graphs.
                if g.order() <= 6 {
                    assert_eq!(found.is_some(), brute_pairing_exists(&g, k), "{g:?} k={k}");
                }
                if let Some(p) = found {
                    assert_eq!(p.len(), k);
                    assert!(is_pairing_total_dominating_set(&g, &p).unwrap());
                }
            }
        }
    }

    fn brute_pairing_exists(g: &Graph, k: usize) -> bool {
        fn rec(g: &Graph, k: usize, used: VertexSet, pairs: &mut Vec<(usize, usize)>) -> bool {
            if pairs.len() == k {
                let p = Pairing::new(pairs.clone()).unwrap();
                return is_pairing_total_dominating_set(g, &p).unwrap();
            }
            let start = pairs.last().map_or(0, |&(a, _)| a + 1);
            for a in start..g.order() {
                if used.contains(a) {
                    continue;
                }
                for b in a + 1..g.order() {
                    if used.contains(b) {
                        continue;
                    }
                    pairs.push((a, b));
                    if rec(g, k, used.with(a).with(b), pairs) {
                        return true;
                    }
                    pairs.pop();
                }
            }
            false
        }
        rec(g, k, VertexSet::EMPTY, &mut Vec::new())
    }
}
