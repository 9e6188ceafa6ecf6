//! Simple undirected graphs on vertices `1..=n`.
//!
//! A [`Graph`] is an immutable value. Single-link edits go through
//! [`Graph::mutate_copy`], which returns a fresh graph and leaves the
//! original untouched.

mod distance;
mod family;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use distance::{all_pairs_distances, bfs_distances, DistanceMatrix};
pub use family::{generate, FamilySpec};
pub use parse::parse_graph;

/// 1-based vertex label.
pub type Vertex = usize;

/// Unordered vertex pair, stored with the smaller endpoint first.
///
/// Ordering is lexicographic on `(low, high)`, which is the order used for
/// payoff table rows and columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", try_from = "[Vertex; 2]")]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Builds the pair `{u, v}`. Fails on a self-loop.
    pub fn new(u: Vertex, v: Vertex) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(Self {
            lo: u.min(v),
            hi: u.max(v),
        })
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn touches(self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = Error;

    fn try_from([u, v]: [Vertex; 2]) -> Result<Self> {
        Edge::new(u, v)
    }
}

/// Simple undirected graph: vertex count plus a set of unordered pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.into_iter().collect(),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a graph needs at least one vertex"));
        }
        Ok(Self {
            n,
            edges: BTreeSet::new(),
        })
    }

    /// Builds a graph from `(u, v)` pairs. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in pairs {
            let e = Edge::new(u, v)?;
            g.check_pair(e)?;
            g.edges.insert(e);
        }
        Ok(g)
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::new(n, edges.into_iter().map(Edge::endpoints))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }

    /// Vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                let e = Edge { lo: u, hi: v };
                if !self.edges.contains(&e) {
                    out.push(e);
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// Adjacency lists indexed by `v - 1`, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.lo - 1].push(e.hi);
            adj[e.hi - 1].push(e.lo);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Copy of the graph with `delete` removed and `add` inserted.
    ///
    /// Either edit may be absent. `delete` must be an edge and `add` must
    /// not be one.
    pub fn mutate_copy(&self, delete: Option<Edge>, add: Option<Edge>) -> Result<Self> {
        let mut out = self.clone();
        if let Some(e) = delete {
            if !out.edges.remove(&e) {
                return Err(Error::NotAnEdge(e));
            }
        }
        if let Some(e) = add {
            self.check_pair(e)?;
            if self.edges.contains(&e) {
                return Err(Error::AlreadyAnEdge(e));
            }
            out.edges.insert(e);
        }
        Ok(out)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            lo: e.lo + shift,
            hi: e.hi + shift,
        }));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Renames vertex `v` to `perm[v - 1]`. `perm` must be a permutation of
    /// `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(Error::domain(format!(
                "permutation has {} entries, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        for &v in perm {
            if !self.contains_vertex(v) || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::domain("relabeling is not a permutation of 1..=n"));
            }
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.lo - 1], perm[e.hi - 1])),
        )
    }

    fn check_pair(&self, e: Edge) -> Result<()> {
        for v in [e.lo, e.hi] {
            if !self.contains_vertex(v) {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Graph {
    /// Edge-list document accepted by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for e in &self.edges {
            writeln!(f, "{} {}", e.lo, e.hi)?;
        }
        Ok(())
    }
}
