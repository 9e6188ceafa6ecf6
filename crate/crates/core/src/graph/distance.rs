use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Graph, Vertex};

/// All-pairs hop counts. `None` marks an unreachable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v` (1-based), `None` if unreachable.
    ///
    /// Panics if either vertex is out of range.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        self.d[(u - 1) * self.n + (v - 1)]
    }

    /// Row of `u`, indexed by `v - 1`.
    pub fn row(&self, u: Vertex) -> &[Option<u32>] {
        let start = (u - 1) * self.n;
        &self.d[start..start + self.n]
    }
}

/// BFS hop counts from `source`, indexed by `v - 1`.
pub fn bfs_distances(adj: &[Vec<Vertex>], source: Vertex) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    let mut queue = VecDeque::with_capacity(adj.len());
    dist[source - 1] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u - 1].map(|d| d + 1);
        for &w in &adj[u - 1] {
            if dist[w - 1].is_none() {
                dist[w - 1] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let adj = g.adjacency();
    let rows: Vec<Vec<Option<u32>>> = (1..=g.vertex_count())
        .into_par_iter()
        .map(|s| bfs_distances(&adj, s))
        .collect();
    DistanceMatrix {
        n: g.vertex_count(),
        d: rows.into_iter().flatten().collect(),
    }
}
