//! Property suite driver: exhaustive connected graphs up to a cap, then
//! seeded random connected graphs one and two vertices larger.

use std::fmt::Write as _;

use mbtd_core::properties::{check_graph, exact_values, PROPERTIES};
use mbtd_core::small_graphs::{connected_graphs, random_connected_graph};
use mbtd_core::{GameValue, Graph, SolveSpec};
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct PropsConfig {
    pub cap: usize,
    pub samples: u64,
    pub seed: u64,
    /// Check a deliberately wrong solver, to exercise the failure path.
    pub mutate: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct Counterexample {
    pub source: String,
    pub property: &'static str,
    pub detail: String,
    pub edge_list: String,
    pub replay: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct PropsReport {
    pub cap: usize,
    pub samples: u64,
    pub seed: u64,
    pub properties: Vec<&'static str>,
    pub exhaustive_graphs: usize,
    pub random_graphs: usize,
    pub counterexamples: Vec<Counterexample>,
    pub pass: bool,
}

impl PropsReport {
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "props: {verdict} ({} exhaustive graphs n <= {}, {} random graphs, seed {}, {} counterexamples)",
            self.exhaustive_graphs,
            self.cap,
            self.random_graphs,
            self.seed,
            self.counterexamples.len()
        );
        for c in &self.counterexamples {
            let _ = writeln!(s, "  {} [{}]: {}", c.property, c.source, c.detail);
            let _ = writeln!(s, "    replay: {}", c.replay);
            for line in c.edge_list.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
        s
    }
}

fn mutated(g: &Graph, spec: SolveSpec) -> GameValue {
    let v = exact_values(g, spec);
    if spec == SolveSpec::MBT_PRIME && v.is_finite() {
        v + 1
    } else {
        v
    }
}

pub fn run_props(cfg: &PropsConfig) -> PropsReport {
    let solve: &dyn Fn(&Graph, SolveSpec) -> GameValue =
        if cfg.mutate { &mutated } else { &exact_values };
    let replay = format!(
        "mbtd props --cap {} --samples {} --seed {}{}",
        cfg.cap,
        cfg.samples,
        cfg.seed,
        if cfg.mutate { " --mutate" } else { "" }
    );
    let mut counterexamples = Vec::new();
    let mut record = |source: String, g: &Graph| {
        for v in check_graph(g, solve, cfg.cap) {
            counterexamples.push(Counterexample {
                source: source.clone(),
                property: v.property,
                detail: v.detail,
                edge_list: g.to_edge_list(),
                replay: replay.clone(),
            });
        }
    };

    let mut exhaustive = 0;
    for n in 1..=cfg.cap {
        for (i, g) in connected_graphs(n).iter().enumerate() {
            record(format!("exhaustive n={n} #{i}"), g);
            exhaustive += 1;
        }
    }
    for i in 0..cfg.samples {
        let n = cfg.cap + 1 + (i % 2) as usize;
        let seed = cfg.seed.wrapping_add(i);
        record(
            format!("random n={n} seed={seed}"),
            &random_connected_graph(seed, n),
        );
    }

    PropsReport {
        cap: cfg.cap,
        samples: cfg.samples,
        seed: cfg.seed,
        properties: PROPERTIES.to_vec(),
        exhaustive_graphs: exhaustive,
        random_graphs: cfg.samples as usize,
        pass: counterexamples.is_empty(),
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_mutation_fails() {
        let cfg = PropsConfig {
            cap: 4,
            samples: 6,
            seed: 1,
            mutate: false,
        };
        let r = run_props(&cfg);
        assert!(r.pass, "{}", r.summary());
        assert_eq!(r.exhaustive_graphs, 1 + 1 + 2 + 6);

        let r = run_props(&PropsConfig {
            mutate: true,
            ..cfg
        });
        assert!(!r.pass);
        assert!(r
            .counterexamples
            .iter()
            .any(|c| c.property == "oracle_equivalence"));
        assert!(r.summary().contains("--mutate"));
    }
}
