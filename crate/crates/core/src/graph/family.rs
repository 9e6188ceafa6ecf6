use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Parameterized graph family.
///
/// Spec strings: `path:n`, `cycle:n`, `complete:n`, `cliques:k,m`,
/// `lollipop:n,m`, `cycletails:n,p,q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    /// Path on `n >= 1` vertices.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices.
    Cycle { n: usize },
    /// Complete graph on `n >= 1` vertices.
    Complete { n: usize },
    /// `K_k` on `1..=k` and `K_m` on `k+1..=k+m`, bridged by `{1, k+m}`.
    Cliques { k: usize, m: usize },
    /// `K_n` on `1..=n` plus a path `n+1..=n+m` hanging off vertex `n`.
    Lollipop { n: usize, m: usize },
    /// Cycle on `1..=n`, a `p`-vertex tail rooted at 1 and a `q`-vertex tail
    /// rooted at 2.
    #[serde(rename = "cycletails")]
    CycleTails { n: usize, p: usize, q: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } => n >= 1,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::Cliques { k, m } => k >= 2 && m >= 2,
            FamilySpec::Lollipop { n, m } => n >= 3 && m >= 1,
            FamilySpec::CycleTails { n, .. } => n >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("`{self}` is outside the family's parameter range")))
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::Cliques { k, m } => k + m,
            FamilySpec::Lollipop { n, m } => n + m,
            FamilySpec::CycleTails { n, p, q } => n + p + q,
        }
    }

    pub fn edge_count(&self) -> usize {
        let pairs = |x: usize| x * (x - 1) / 2;
        match *self {
            FamilySpec::Path { n } => n - 1,
            FamilySpec::Cycle { n } => n,
            FamilySpec::Complete { n } => pairs(n),
            FamilySpec::Cliques { k, m } => pairs(k) + pairs(m) + 1,
            FamilySpec::Lollipop { n, m } => pairs(n) + m,
            FamilySpec::CycleTails { n, p, q } => n + p + q,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Cliques { k, m } => write!(f, "cliques:{k},{m}"),
            FamilySpec::Lollipop { n, m } => write!(f, "lollipop:{n},{m}"),
            FamilySpec::CycleTails { n, p, q } => write!(f, "cycletails:{n},{p},{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("invalid generator spec `{s}`"));
        let (name, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let params = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let spec = match (name.trim(), params.as_slice()) {
            ("path", &[n]) => FamilySpec::Path { n },
            ("cycle", &[n]) => FamilySpec::Cycle { n },
            ("complete", &[n]) => FamilySpec::Complete { n },
            ("cliques", &[k, m]) => FamilySpec::Cliques { k, m },
            ("lollipop", &[n, m]) => FamilySpec::Lollipop { n, m },
            ("cycletails", &[n, p, q]) => FamilySpec::CycleTails { n, p, q },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(spec.edge_count());
    match *spec {
        FamilySpec::Path { n } => edges.extend(path_edges(1, n)),
        FamilySpec::Cycle { n } => {
            edges.extend(path_edges(1, n));
            edges.push((n, 1));
        }
        FamilySpec::Complete { n } => edges.extend(clique_edges(1, n)),
        FamilySpec::Cliques { k, m } => {
            edges.extend(clique_edges(1, k));
            edges.extend(clique_edges(k + 1, k + m));
            edges.push((1, k + m));
        }
        FamilySpec::Lollipop { n, m } => {
            edges.extend(clique_edges(1, n));
            edges.extend(path_edges(n, n + m));
        }
        FamilySpec::CycleTails { n, p, q } => {
            edges.extend(path_edges(1, n));
            edges.push((n, 1));
            edges.extend(tail_edges(1, n + 1, p));
            edges.extend(tail_edges(2, n + p + 1, q));
        }
    }
    Graph::new(spec.vertex_count(), edges)
}

/// Consecutive pairs `first..=last`.
fn path_edges(first: Vertex, last: Vertex) -> impl Iterator<Item = (Vertex, Vertex)> {
    (first..last).map(|v| (v, v + 1))
}

fn clique_edges(first: Vertex, last: Vertex) -> impl Iterator<Item = (Vertex, Vertex)> {
    (first..=last).flat_map(move |u| (u + 1..=last).map(move |v| (u, v)))
}

/// A path of `len` new vertices starting at `start`, hung off `root`.
fn tail_edges(root: Vertex, start: Vertex, len: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..len).map(move |i| if i == 0 { (root, start) } else { (start + i - 1, start + i) })
}
