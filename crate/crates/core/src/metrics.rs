//! Closeness `C(G) = Σ_i Σ_{j≠i} 2^-d(i,j)` and the single-link measures
//! built on it.
//!
//! Unreachable pairs contribute 0, so every function here accepts
//! disconnected graphs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dyadic::pow2;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Edge, Graph, Vertex};
use crate::TOLERANCE;

/// Best value of a search together with every argument that attains it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extremum {
    pub value: f64,
    /// All optimal edges, lexicographic.
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub closeness: f64,
    /// Absent for edgeless graphs.
    pub residual: Option<Extremum>,
    /// Absent for complete graphs.
    pub additional: Option<Extremum>,
    /// `R / C`; absent when `R` is absent or `C` is zero.
    pub nr: Option<f64>,
    /// `A / C`; absent when `A` is absent or `C` is zero.
    pub na: Option<f64>,
}

fn row_sum(row: &[Option<u32>]) -> f64 {
    row.iter()
        .filter_map(|d| match *d {
            Some(0) | None => None,
            Some(d) => Some(pow2(-(d as i32))),
        })
        .sum()
}

pub fn closeness(g: &Graph) -> f64 {
    let adj = g.adjacency();
    g.vertices().map(|s| row_sum(&bfs_distances(&adj, s))).sum()
}

/// Closeness contribution of a single vertex, `Σ_{j≠v} 2^-d(v,j)`.
pub fn vertex_closeness(g: &Graph, v: Vertex) -> Result<f64> {
    if !g.contains_vertex(v) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(row_sum(&bfs_distances(&g.adjacency(), v)))
}

/// `R(G)`: smallest closeness after deleting one link.
pub fn residual_closeness(g: &Graph) -> Result<Extremum> {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::NoDeletableLinks);
    }
    let scored = score_edits(&edges, |e| g.mutate_copy(Some(e), None));
    Ok(select(scored, |a, b| a < b))
}

/// `A(G)`: largest closeness after adding one link.
pub fn additional_closeness(g: &Graph) -> Result<Extremum> {
    let pairs = g.non_edges();
    if pairs.is_empty() {
        return Err(Error::NoAddableLinks);
    }
    let scored = score_edits(&pairs, |e| g.mutate_copy(None, Some(e)));
    Ok(select(scored, |a, b| a > b))
}

pub fn metric_report(g: &Graph) -> MetricReport {
    let c = closeness(g);
    let residual = residual_closeness(g).ok();
    let additional = additional_closeness(g).ok();
    let ratio = |x: &Option<Extremum>| x.as_ref().filter(|_| c > 0.0).map(|x| x.value / c);
    MetricReport {
        closeness: c,
        nr: ratio(&residual),
        na: ratio(&additional),
        residual,
        additional,
    }
}

fn score_edits<F>(edits: &[Edge], apply: F) -> Vec<(Edge, f64)>
where
    F: Fn(Edge) -> Result<Graph> + Sync,
{
    edits
        .par_iter()
        .map(|&e| {
            let h = apply(e).expect("edit drawn from the graph's own edge sets");
            (e, closeness(&h))
        })
        .collect()
}

/// Picks the best value under `better` and keeps every edge within
/// [`TOLERANCE`] of it. Input order is preserved, so lexicographic input
/// gives lexicographic output.
fn select(scored: Vec<(Edge, f64)>, better: impl Fn(f64, f64) -> bool) -> Extremum {
    let best = scored
        .iter()
        .map(|&(_, v)| v)
        .reduce(|a, b| if better(b, a) { b } else { a })
        .expect("non-empty");
    Extremum {
        value: best,
        edges: scored
            .into_iter()
            .filter(|&(_, v)| (v - best).abs() <= TOLERANCE)
            .map(|(e, _)| e)
            .collect(),
    }
}
