//! Generators for the graph families used as extremal examples, plus a few
//! standard building blocks.
//!
//! Labeling conventions (all blocks contiguous, named special vertices last):
//!
//! * `G_ℓ`: copy `i ∈ 1..=ℓ` of `C_4` occupies `4(i-1)..4i`; local vertex `j`
//!   is labelled `v_{i,j+1}`. The cycle is `v_{i,1} v_{i,2} v_{i,4} v_{i,3}`
//!   and the base path runs through the `v_{i,2}`.
//! * `G_ℓ'`, `G_ℓ''`: copies `2..=ℓ` first (copy `i` at `4(i-2)`), then the
//!   6-vertex gadget `v_{1,1}..v_{1,6}` (alias `x = v_{1,4}`) or the
//!   7-vertex gadget `x_1..x_6, y`. The path attaches at `v_{1,2}` resp. `x_5`.
//! * `G_{k,n}`, `H_{k,n}`: the `K_n` block, then the `k-1` copies of
//!   `K_n - e` whose missing edge joins the first two vertices of the copy
//!   (`u_c`, `v_c`), then `u` (and `v`).
//! * Triangle families: triangle `i` holds `v_{i,1}, v_{i,2}, v_{i,3}` at
//!   `3(i-1)..3i`, followed by `u`, `v` (and `w`).

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Gl,
    GlPrime,
    GlDoublePrime,
    Gkn,
    Hkn,
    G2l,
    Gkl,
    H2l,
    Hkl,
    Fkl,
    Path,
    Cycle,
    Complete,
    CompleteMinusEdge,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Gl,
        Family::GlPrime,
        Family::GlDoublePrime,
        Family::Gkn,
        Family::Hkn,
        Family::G2l,
        Family::Gkl,
        Family::H2l,
        Family::Hkl,
        Family::Fkl,
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteMinusEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gl => "Gl",
            Family::GlPrime => "GlPrime",
            Family::GlDoublePrime => "GlDoublePrime",
            Family::Gkn => "Gkn",
            Family::Hkn => "Hkn",
            Family::G2l => "G2l",
            Family::Gkl => "Gkl",
            Family::H2l => "H2l",
            Family::Hkl => "Hkl",
            Family::Fkl => "Fkl",
            Family::Path => "Path",
            Family::Cycle => "Cycle",
            Family::Complete => "Complete",
            Family::CompleteMinusEdge => "CompleteMinusEdge",
        }
    }

    /// Human-readable parameter ranges, used in error messages.
    pub fn param_ranges(self) -> &'static str {
        match self {
            Family::Gl | Family::GlPrime | Family::GlDoublePrime => "l >= 1",
            Family::Gkn | Family::Hkn => "k >= 2, n >= 4",
            Family::G2l | Family::H2l => "l >= 3",
            Family::Gkl | Family::Hkl => "3 <= k <= l",
            Family::Fkl => "2 <= k <= l",
            Family::Path | Family::Complete => "n >= 1",
            Family::Cycle => "n >= 3",
            Family::CompleteMinusEdge => "n >= 2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let want = s.to_ascii_lowercase().replace(['_', '-', ' '], "");
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == want)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parameter(format!("unknown family {s:?}; known: {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(l) = self.l {
            parts.push(format!("l={l}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Params,
}

impl FamilySpec {
    pub fn new(family: Family, k: Option<usize>, l: Option<usize>, n: Option<usize>) -> Self {
        FamilySpec {
            family,
            params: Params { k, l, n },
        }
    }

    pub fn generate(&self) -> Result<Construction> {
        let need = |name: &str, v: Option<usize>| {
            v.ok_or_else(|| {
                Error::Parameter(format!(
                    "{} requires parameter {name} ({})",
                    self.family,
                    self.family.param_ranges()
                ))
            })
        };
        let p = self.params;
        match self.family {
            Family::Gl => gen_gl(need("l", p.l)?),
            Family::GlPrime => gen_gl_prime(need("l", p.l)?),
            Family::GlDoublePrime => gen_gl_double_prime(need("l", p.l)?),
            Family::Gkn => gen_gkn(need("k", p.k)?, need("n", p.n)?),
            Family::Hkn => gen_hkn(need("k", p.k)?, need("n", p.n)?),
            Family::G2l => gen_g2l(need("l", p.l)?),
            Family::Gkl => gen_gkl(need("k", p.k)?, need("l", p.l)?),
            Family::H2l => gen_h2l(need("l", p.l)?),
            Family::Hkl => gen_hkl(need("k", p.k)?, need("l", p.l)?),
            Family::Fkl => gen_fkl(need("k", p.k)?, need("l", p.l)?),
            Family::Path | Family::Cycle | Family::Complete | Family::CompleteMinusEdge => {
                let n = need("n", p.n)?;
                let basic_family = match self.family {
                    Family::Path => BasicFamily::Path,
                    Family::Cycle => BasicFamily::Cycle,
                    Family::Complete => BasicFamily::Complete,
                    _ => BasicFamily::CompleteMinusEdge,
                };
                Ok(Construction {
                    spec: *self,
                    graph: basic(basic_family, n)?,
                    labels: Vec::new(),
                })
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.params)
    }
}

/// A generated graph with the names of its labelled vertices.
#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: FamilySpec,
    pub graph: Graph,
    /// `(label, vertex)` in ascending vertex order.
    pub labels: Vec<(String, usize)>,
}

impl Construction {
    /// Index of a labelled vertex; panics on an unknown label.
    pub fn special(&self, label: &str) -> usize {
        self.lookup(label)
            .unwrap_or_else(|| panic!("{} has no vertex labelled {label}", self.spec))
    }

    pub fn lookup(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, v)| v)
    }

    /// Edge list preceded by comment lines recording the family, its
    /// parameters and the vertex labels.
    pub fn to_annotated_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# family: {}", self.spec.family);
        let _ = writeln!(out, "# params: {}", self.spec.params);
        if !self.labels.is_empty() {
            let map: Vec<String> = self
                .labels
                .iter()
                .map(|(l, v)| format!("{l}={v}"))
                .collect();
            let _ = writeln!(out, "# labels: {}", map.join(" "));
        }
        out.push_str(&self.graph.to_edge_list());
        out
    }
}

struct Builder {
    edges: Vec<(usize, usize)>,
    labels: Vec<(String, usize)>,
    order: usize,
}

impl Builder {
    fn new() -> Self {
        Builder {
            edges: Vec::new(),
            labels: Vec::new(),
            order: 0,
        }
    }

    fn vertex(&mut self, label: impl Into<String>) -> usize {
        let v = self.order;
        self.order += 1;
        self.labels.push((label.into(), v));
        v
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    fn finish(self, spec: FamilySpec) -> Result<Construction> {
        let mut labels = self.labels;
        labels.sort_by_key(|&(_, v)| v);
        let name = spec.to_string();
        Ok(Construction {
            spec,
            graph: Graph::from_edges(self.order, self.edges)?.with_name(name),
            labels,
        })
    }

    /// `C_4` copy `i`, returning its four vertices in label order.
    fn c4_copy(&mut self, i: usize) -> [usize; 4] {
        let c = [1, 2, 3, 4].map(|j| self.vertex(format!("v_{{{i},{j}}}")));
        self.edge(c[0], c[1]);
        self.edge(c[1], c[3]);
        self.edge(c[3], c[2]);
        self.edge(c[2], c[0]);
        c
    }

    /// `count` disjoint triangles; returns `t[i][j]` for 0-based `i`, `j`.
    fn triangles(&mut self, count: usize) -> Vec<[usize; 3]> {
        (1..=count)
            .map(|i| {
                let t = [1, 2, 3].map(|j| self.vertex(format!("v_{{{i},{j}}}")));
                self.edge(t[0], t[1]);
                self.edge(t[0], t[2]);
                self.edge(t[1], t[2]);
                t
            })
            .collect()
    }
}

fn check(ok: bool, family: Family) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "{family} requires {}",
            family.param_ranges()
        )))
    }
}

/// `C_4` copies hung on a path.
pub fn gen_gl(l: usize) -> Result<Construction> {
    check(l >= 1, Family::Gl)?;
    let mut b = Builder::new();
    let copies: Vec<_> = (1..=l).map(|i| b.c4_copy(i)).collect();
    for w in copies.windows(2) {
        b.edge(w[0][1], w[1][1]);
    }
    b.finish(FamilySpec::new(Family::Gl, None, Some(l), None))
}

/// Copies `2..=l` of `C_4` on a path, returning the spine vertex of copy 2.
fn c4_tail(b: &mut Builder, l: usize) -> Option<usize> {
    let copies: Vec<_> = (2..=l).map(|i| b.c4_copy(i)).collect();
    for w in copies.windows(2) {
        b.edge(w[0][1], w[1][1]);
    }
    copies.first().map(|c| c[1])
}

/// `G_ℓ` with the first `C_4` replaced by two 4-cycles sharing the edge-free
/// diagonal pair `v_{1,1}`, `v_{1,4}`.
pub fn gen_gl_prime(l: usize) -> Result<Construction> {
    check(l >= 1, Family::GlPrime)?;
    let mut b = Builder::new();
    let head = c4_tail(&mut b, l);
    let [a, bb, c, d, e, f] = [1, 2, 3, 4, 5, 6].map(|j| b.vertex(format!("v_{{1,{j}}}")));
    b.labels.push(("x".into(), d));
    for (p, q) in [(a, bb), (a, c), (bb, d), (c, d), (a, e), (d, f), (e, f)] {
        b.edge(p, q);
    }
    if let Some(h) = head {
        b.edge(bb, h);
    }
    b.finish(FamilySpec::new(Family::GlPrime, None, Some(l), None))
}

/// `G_ℓ` with the first `C_4` replaced by the 7-vertex gadget on
/// `x_1..x_6, y`, attached at `x_5`.
pub fn gen_gl_double_prime(l: usize) -> Result<Construction> {
    check(l >= 1, Family::GlDoublePrime)?;
    let mut b = Builder::new();
    let head = c4_tail(&mut b, l);
    let x = [1, 2, 3, 4, 5, 6].map(|j| b.vertex(format!("x_{j}")));
    let y = b.vertex("y");
    let [x1, x2, x3, x4, x5, x6] = x;
    for (p, q) in [
        (x2, x5),
        (x2, x3),
        (x2, x6),
        (x5, x1),
        (x3, x1),
        (x6, x1),
        (x2, x4),
        (x1, y),
        (x4, y),
        (x3, y),
        (x3, x4),
    ] {
        b.edge(p, q);
    }
    if let Some(h) = head {
        b.edge(x5, h);
    }
    b.finish(FamilySpec::new(Family::GlDoublePrime, None, Some(l), None))
}

/// `K_n` plus `k-1` copies of `K_n - e`, returning the hub neighbours.
fn clique_blocks(b: &mut Builder, k: usize, n: usize) -> Vec<usize> {
    let mut hub = Vec::new();
    let kn: Vec<_> = (1..=n).map(|j| b.vertex(format!("y_{j}"))).collect();
    for (i, &p) in kn.iter().enumerate() {
        for &q in &kn[i + 1..] {
            b.edge(p, q);
        }
    }
    hub.extend(&kn);
    for c in 1..k {
        let mut block = vec![b.vertex(format!("u_{c}")), b.vertex(format!("v_{c}"))];
        block.extend((3..=n).map(|j| b.vertex(format!("x_{{{c},{j}}}"))));
        for i in 0..n {
            for j in i + 1..n {
                if (i, j) != (0, 1) {
                    b.edge(block[i], block[j]);
                }
            }
        }
        hub.extend([block[0], block[1]]);
    }
    hub
}

pub fn gen_gkn(k: usize, n: usize) -> Result<Construction> {
    check(k >= 2 && n >= 4, Family::Gkn)?;
    let mut b = Builder::new();
    let hub = clique_blocks(&mut b, k, n);
    let u = b.vertex("u");
    for h in hub {
        b.edge(u, h);
    }
    b.finish(FamilySpec::new(Family::Gkn, Some(k), None, Some(n)))
}

/// As `G_{k,n}` with two non-adjacent hub vertices `u`, `v` sharing a neighbourhood.
pub fn gen_hkn(k: usize, n: usize) -> Result<Construction> {
    check(k >= 2 && n >= 4, Family::Hkn)?;
    let mut b = Builder::new();
    let hub = clique_blocks(&mut b, k, n);
    let u = b.vertex("u");
    let v = b.vertex("v");
    for h in hub {
        b.edge(u, h);
        b.edge(v, h);
    }
    b.finish(FamilySpec::new(Family::Hkn, Some(k), None, Some(n)))
}

pub fn gen_g2l(l: usize) -> Result<Construction> {
    check(l >= 3, Family::G2l)?;
    let mut b = Builder::new();
    let t = b.triangles(l - 1);
    let u = b.vertex("u");
    let v = b.vertex("v");
    b.edge(u, v);
    b.edge(u, t[0][0]);
    b.edge(v, t[0][0]);
    for tri in &t[1..] {
        for &x in tri {
            b.edge(u, x);
        }
        b.edge(v, tri[0]);
        b.edge(v, tri[1]);
    }
    b.finish(FamilySpec::new(Family::G2l, Some(2), Some(l), None))
}

pub fn gen_gkl(k: usize, l: usize) -> Result<Construction> {
    check(3 <= k && k <= l, Family::Gkl)?;
    let mut b = Builder::new();
    let t = b.triangles(k + l - 2);
    let u = b.vertex("u");
    let v = b.vertex("v");
    for (i, tri) in t.iter().enumerate() {
        if i + 1 < k {
            b.edge(u, tri[0]);
            for &x in tri {
                b.edge(v, x);
            }
        } else {
            for &x in tri {
                b.edge(u, x);
            }
            b.edge(v, tri[0]);
            b.edge(v, tri[1]);
        }
    }
    b.finish(FamilySpec::new(Family::Gkl, Some(k), Some(l), None))
}

pub fn gen_h2l(l: usize) -> Result<Construction> {
    check(l >= 3, Family::H2l)?;
    let mut b = Builder::new();
    let t = b.triangles(l - 1);
    let u = b.vertex("u");
    let v = b.vertex("v");
    let w = b.vertex("w");
    // v: everything but w
    for x in t.iter().flatten() {
        b.edge(v, *x);
    }
    b.edge(v, u);
    // u: everything but v_{1,2}, v_{1,3} (v already joined)
    b.edge(u, t[0][0]);
    for tri in &t[1..] {
        for &x in tri {
            b.edge(u, x);
        }
    }
    b.edge(u, w);
    b.edge(w, t[0][0]);
    for tri in &t[1..] {
        b.edge(w, tri[0]);
        b.edge(w, tri[1]);
    }
    b.finish(FamilySpec::new(Family::H2l, Some(2), Some(l), None))
}

pub fn gen_hkl(k: usize, l: usize) -> Result<Construction> {
    check(3 <= k && k <= l, Family::Hkl)?;
    let mut b = Builder::new();
    let t = b.triangles(k + l - 2);
    let u = b.vertex("u");
    let v = b.vertex("v");
    let w = b.vertex("w");
    b.edge(u, v);
    for (i, tri) in t.iter().enumerate() {
        let early = i + 1 < k;
        b.edge(u, tri[0]);
        b.edge(v, tri[0]);
        b.edge(v, tri[1]);
        b.edge(w, tri[0]);
        b.edge(w, tri[1]);
        if early {
            b.edge(w, tri[2]);
        } else {
            b.edge(u, tri[1]);
            b.edge(u, tri[2]);
            b.edge(v, tri[2]);
        }
    }
    b.finish(FamilySpec::new(Family::Hkl, Some(k), Some(l), None))
}

pub fn gen_fkl(k: usize, l: usize) -> Result<Construction> {
    check(2 <= k && k <= l, Family::Fkl)?;
    let mut b = Builder::new();
    let t = b.triangles(k + l - 2);
    let u = b.vertex("u");
    let v = b.vertex("v");
    for (i, tri) in t.iter().enumerate() {
        for hub in [u, v] {
            b.edge(hub, tri[0]);
            b.edge(hub, tri[1]);
        }
        if i + 1 < k {
            b.edge(v, tri[2]);
        } else {
            b.edge(u, tri[2]);
        }
    }
    b.finish(FamilySpec::new(Family::Fkl, Some(k), Some(l), None))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicFamily {
    Path,
    Cycle,
    Complete,
    /// `K_n` without the edge `{0, 1}`.
    CompleteMinusEdge,
}

pub fn basic(family: BasicFamily, n: usize) -> Result<Graph> {
    let (ok, name) = match family {
        BasicFamily::Path => (n >= 1, Family::Path),
        BasicFamily::Cycle => (n >= 3, Family::Cycle),
        BasicFamily::Complete => (n >= 1, Family::Complete),
        BasicFamily::CompleteMinusEdge => (n >= 2, Family::CompleteMinusEdge),
    };
    check(ok, name)?;
    let edges: Vec<(usize, usize)> = match family {
        BasicFamily::Path => (1..n).map(|i| (i - 1, i)).collect(),
        BasicFamily::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        BasicFamily::Complete | BasicFamily::CompleteMinusEdge => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&e| family == BasicFamily::Complete || e != (0, 1))
            .collect(),
    };
    Ok(Graph::from_edges(n, edges)?.with_name(format!("{name}({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{
        domination_number, find_pairing_total_dominating_set, is_dominating_set,
        is_total_dominating_set, total_domination_number,
    };
    use crate::vertex_set::VertexSet;

    fn labelled(c: &Construction, names: &[&str]) -> VertexSet {
        names.iter().map(|n| c.special(n)).collect()
    }

    #[test]
    fn gl_small_cases() {
        let g1 = gen_gl(1).unwrap().graph;
        let c4 = basic(BasicFamily::Cycle, 4).unwrap();
        // same cycle up to relabelling: every vertex degree 2, connected, 4 edges
        assert_eq!(g1.order(), 4);
        assert_eq!(g1.size(), 4);
        assert!((0..4).all(|v| g1.degree(v) == 2) && g1.is_connected());
        assert_eq!(c4.size(), 4);

        let g2 = gen_gl(2).unwrap().graph;
        assert_eq!((g2.order(), g2.size()), (8, 9));
        assert!(g2.is_connected());
        assert_eq!(total_domination_number(&gen_gl(3).unwrap().graph), 6.into());
    }

    #[test]
    fn gadget_counts() {
        let p1 = gen_gl_prime(1).unwrap().graph;
        assert_eq!((p1.order(), p1.size()), (6, 7));
        let p2 = gen_gl_prime(2).unwrap();
        assert_eq!(p2.graph.order(), 10);
        assert_eq!(total_domination_number(&p2.graph), 5.into());
        assert_eq!(p2.special("x"), p2.special("v_{1,4}"));

        let d1 = gen_gl_double_prime(1).unwrap().graph;
        assert_eq!((d1.order(), d1.size()), (7, 11));
        assert_eq!(gen_gl_double_prime(2).unwrap().graph.order(), 11);
    }

    #[test]
    fn clique_families() {
        let g = gen_gkn(2, 4).unwrap();
        assert_eq!(g.graph.order(), 9);
        let g34 = gen_gkn(3, 4).unwrap();
        assert_eq!(domination_number(&g34.graph), 3.into());
        assert_eq!(total_domination_number(&g34.graph), 3.into());
        // u with one u-neighbour per K_n - e copy dominates
        let d = labelled(&g34, &["u", "u_1", "u_2"]);
        assert!(is_dominating_set(&g34.graph, d));
        assert!(is_total_dominating_set(&g34.graph, d));

        let h = gen_hkn(2, 4).unwrap();
        assert_eq!(h.graph.order(), 10);
        assert!(!h.graph.has_edge(h.special("u"), h.special("v")));
        assert_eq!(h.graph.nbrs(h.special("u")), h.graph.nbrs(h.special("v")));
        let p = find_pairing_total_dominating_set(&h.graph, 2).unwrap();
        assert_eq!(p.len(), 2);
        let expected = crate::domination::Pairing::new(vec![
            (h.special("u"), h.special("v")),
            (h.special("u_1"), h.special("v_1")),
        ])
        .unwrap();
        assert!(crate::domination::is_pairing_total_dominating_set(&h.graph, &expected).unwrap());
    }

    #[test]
    fn triangle_families() {
        let g = gen_g2l(3).unwrap();
        assert_eq!(g.graph.order(), 8);
        assert!(is_dominating_set(&g.graph, labelled(&g, &["u", "v_{1,1}"])));
        assert!(is_dominating_set(&g.graph, labelled(&g, &["u", "v_{1,2}"])));
        assert_eq!(gen_g2l(4).unwrap().graph.order(), 11);

        let gkl = gen_gkl(3, 3).unwrap();
        assert_eq!(gkl.graph.order(), 14);
        assert!(!gkl.graph.has_edge(gkl.special("u"), gkl.special("v")));
        assert!(is_dominating_set(&gkl.graph, labelled(&gkl, &["u", "v"])));
        assert_eq!(gen_gkl(3, 4).unwrap().graph.order(), 17);

        let h = gen_h2l(3).unwrap();
        assert_eq!(h.graph.order(), 9);
        assert_eq!(h.graph.degree(h.special("v")), h.graph.order() - 2);
        assert!(!h.graph.has_edge(h.special("v"), h.special("w")));
        assert_eq!(gen_h2l(4).unwrap().graph.order(), 12);

        let hk = gen_hkl(3, 3).unwrap();
        assert_eq!(hk.graph.order(), 15);
        assert!(hk.graph.has_edge(hk.special("u"), hk.special("v")));

        for (k, l, n) in [(2, 2, 8), (2, 3, 11), (3, 3, 14)] {
            let f = gen_fkl(k, l).unwrap();
            assert_eq!(f.graph.order(), n);
            assert!(!f.graph.has_edge(f.special("u"), f.special("v")));
        }
    }

    #[test]
    fn strategy_anchor_sets_totally_dominate() {
        for (k, l) in [(3, 3), (3, 4), (4, 5)] {
            let g = gen_gkl(k, l).unwrap();
            let mut d = labelled(&g, &["u", "v"]);
            for i in k..=k + l - 2 {
                d = d.with(g.special(&format!("v_{{{i},{}}}", 1 + i % 2)));
            }
            assert!(is_total_dominating_set(&g.graph, d), "G_{{{k},{l}}}");
        }
        for (k, l) in [(2, 2), (2, 3), (3, 3), (3, 5)] {
            let g = gen_fkl(k, l).unwrap();
            let mut d = labelled(&g, &["u", "v"]);
            for i in 1..k {
                d = d.with(g.special(&format!("v_{{{i},{}}}", 1 + i % 2)));
            }
            assert!(is_total_dominating_set(&g.graph, d), "F_{{{k},{l}}}");
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(gen_gl(0).is_err());
        assert!(gen_gl_prime(0).is_err());
        assert!(gen_gl_double_prime(0).is_err());
        assert!(gen_gkn(1, 4).is_err());
        assert!(gen_gkn(2, 3).is_err());
        assert!(gen_hkn(2, 3).is_err());
        assert!(gen_g2l(2).is_err());
        assert!(gen_gkl(2, 3).is_err());
        assert!(gen_gkl(4, 3).is_err());
        assert!(gen_h2l(2).is_err());
        assert!(gen_hkl(2, 2).is_err());
        assert!(gen_fkl(1, 2).is_err());
        assert!(gen_fkl(3, 2).is_err());
        assert!(basic(BasicFamily::Cycle, 2).is_err());
        assert!(basic(BasicFamily::Path, 0).is_err());
        assert!(basic(BasicFamily::CompleteMinusEdge, 1).is_err());
        let e = FamilySpec::new(Family::Gkl, Some(2), Some(3), None)
            .generate()
            .unwrap_err();
        assert!(e.to_string().contains("3 <= k <= l"), "{e}");
        assert!(FamilySpec::new(Family::Gl, None, None, None)
            .generate()
            .is_err());
    }

    #[test]
    fn basic_graphs() {
        let c4 = basic(BasicFamily::Cycle, 4).unwrap();
        assert_eq!(c4.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(basic(BasicFamily::Complete, 4).unwrap().size(), 6);
        let kme = basic(BasicFamily::CompleteMinusEdge, 4).unwrap();
        assert_eq!(kme.size(), 5);
        assert!(!kme.has_edge(0, 1));
    }

    fn all_small_specs() -> Vec<FamilySpec> {
        let mut specs = Vec::new();
        for l in 1..=4 {
            for f in [Family::Gl, Family::GlPrime, Family::GlDoublePrime] {
                specs.push(FamilySpec::new(f, None, Some(l), None));
            }
        }
        for k in 2..=4 {
            for n in 4..=6 {
                specs.push(FamilySpec::new(Family::Gkn, Some(k), None, Some(n)));
                specs.push(FamilySpec::new(Family::Hkn, Some(k), None, Some(n)));
            }
        }
        for l in 3..=6 {
            specs.push(FamilySpec::new(Family::G2l, None, Some(l), None));
            specs.push(FamilySpec::new(Family::H2l, None, Some(l), None));
        }
        for l in 2..=6 {
            for k in 2..=l {
                if k >= 3 {
                    specs.push(FamilySpec::new(Family::Gkl, Some(k), Some(l), None));
                    specs.push(FamilySpec::new(Family::Hkl, Some(k), Some(l), None));
                }
                specs.push(FamilySpec::new(Family::Fkl, Some(k), Some(l), None));
            }
        }
        specs
    }

    #[test]
    fn orders_match_closed_forms_and_are_connected() {
        for spec in all_small_specs() {
            let c = spec.generate().unwrap();
            let p = spec.params;
            let (k, l, n) = (p.k.unwrap_or(2), p.l.unwrap_or(0), p.n.unwrap_or(0));
            let expected = match spec.family {
                Family::Gl => 4 * l,
                Family::GlPrime => 4 * l + 2,
                Family::GlDoublePrime => 4 * l + 3,
                Family::Gkn => k * n + 1,
                Family::Hkn => k * n + 2,
                Family::G2l => 3 * l - 1,
                Family::Gkl | Family::Fkl => 3 * (k + l - 2) + 2,
                Family::H2l => 3 * l,
                Family::Hkl => 3 * (k + l - 2) + 3,
                _ => unreachable!(),
            };
            assert_eq!(c.graph.order(), expected, "{spec}");
            assert!(c.graph.is_connected(), "{spec}");
            // labels are unique per vertex except documented aliases
            assert!(c.labels.iter().all(|(_, v)| *v < c.graph.order()));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for spec in all_small_specs() {
            let a = spec.generate().unwrap().to_annotated_edge_list();
            let b = spec.generate().unwrap().to_annotated_edge_list();
            assert_eq!(a, b);
            let parsed = Graph::from_edge_list(&a).unwrap();
            assert_eq!(parsed.edges(), spec.generate().unwrap().graph.edges());
        }
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("fkl".parse::<Family>().unwrap(), Family::Fkl);
        assert!("G9".parse::<Family>().is_err());
    }
}
