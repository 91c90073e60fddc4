//! Simple undirected graphs on `{0, .., n-1}` and the edge-list text format.
//!
//! The edge-list format is line based: `#` lines are comments, the first
//! remaining line holds the order `n`, and every further line is an edge
//! `u v` with a single ASCII space. Each unordered edge appears once.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    /// Builds a graph from an edge iterator; self-loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::Parameter(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::Parameter(format!("duplicate edge {u} {v}")));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    /// Returns a copy with the extra edge `u v`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    #[must_use]
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// Unchecked `N(v)` for hot loops; panics if `v` is out of range.
    #[inline]
    pub fn nbrs(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Unchecked `N[v]`.
    #[inline]
    pub fn closed_nbrs(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.adj[v].is_empty())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == self.vertices()
    }

    /// Parses the edge-list format. Line numbers in errors are 1-based.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut graph: Option<Graph> = None;
        for (idx, raw) in text.split('\n').enumerate() {
            let line_no = idx + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.starts_with('#') || line.trim().is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match graph.as_mut() {
                None => {
                    let n: usize = line
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("expected vertex count, found {line:?}")))?;
                    if n == 0 {
                        return Err(err("a graph needs at least one vertex".into()));
                    }
                    graph = Some(Graph::empty(n)?);
                }
                Some(g) => {
                    let mut parts = line.split(' ');
                    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next())
                    else {
                        return Err(err(format!("expected \"u v\", found {line:?}")));
                    };
                    let parse = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| err(format!("invalid vertex {s:?}")))
                    };
                    let (u, v) = (parse(a)?, parse(b)?);
                    g.add_edge(u, v).map_err(|e| err(e.to_string()))?;
                }
            }
        }
        graph.ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing vertex count".into(),
        })
    }

    /// Serializes to the edge-list format without comment lines.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}
