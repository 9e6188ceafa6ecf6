use closeness_core::decision::{build_payoff_table, decide, score_action, Criterion, PayoffTable};
use closeness_core::graph::all_pairs_distances;
use closeness_core::metrics::{additional_closeness, closeness, residual_closeness};
use closeness_core::verify::{sweep, ParamRange, Target};
use closeness_core::{pow2, Graph};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

/// Graphs with at least one edge and one non-edge, so a payoff table exists.
fn playable(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("needs an edge and a non-edge", |g| g.edge_count() > 0 && !g.is_complete())
}

/// Closeness from Floyd-Warshall distances, independent of the BFS path.
fn floyd_closeness(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let mut d = vec![vec![u32::MAX; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        d[u - 1][v - 1] = 1;
        d[v - 1][u - 1] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != u32::MAX && d[k][j] != u32::MAX {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
    }
    d.iter()
        .flatten()
        .filter(|&&x| x != 0 && x != u32::MAX)
        .map(|&x| 0.5f64.powi(x as i32))
        .sum()
}

fn column_stats(t: &PayoffTable, j: usize) -> (f64, f64, f64) {
    let col: Vec<f64> = t.column(j).collect();
    let min = col.iter().copied().fold(f64::INFINITY, f64::min);
    let max = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, col.iter().sum::<f64>() / col.len() as f64, max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_are_symmetric(g in graph(10)) {
        let d = all_pairs_distances(&g);
        for u in g.vertices() {
            prop_assert_eq!(d.get(u, u), Some(0));
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
            }
        }
    }

    #[test]
    fn bfs_matches_floyd_warshall(g in graph(10)) {
        prop_assert!((closeness(&g) - floyd_closeness(&g)).abs() <= TOL);
    }

    #[test]
    fn mutation_is_undone_by_its_inverse(g in playable(9), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        let non_edges = g.non_edges();
        let del = *i.get(&edges);
        let add = *j.get(&non_edges);
        let h = g.mutate_copy(Some(del), Some(add)).unwrap();
        prop_assert!(h.has_edge(add) && !h.has_edge(del));
        prop_assert_eq!(h.mutate_copy(Some(add), Some(del)).unwrap(), g);
    }

    #[test]
    fn residual_below_closeness_below_additional(g in playable(9)) {
        let c = closeness(&g);
        prop_assert!(residual_closeness(&g).unwrap().value < c);
        prop_assert!(c < additional_closeness(&g).unwrap().value);
    }

    #[test]
    fn column_mean_between_min_and_max(g in playable(8)) {
        let t = build_payoff_table(&g).unwrap();
        for j in 0..t.cols.len() {
            let (min, mean, max) = column_stats(&t, j);
            prop_assert!(min <= mean + TOL && mean <= max + TOL);
        }
    }

    #[test]
    fn pessimistic_below_optimistic_below_additional(g in playable(8)) {
        let t = build_payoff_table(&g).unwrap();
        let mn = decide(&t, &Criterion::Pessimistic).unwrap().optimum;
        let mx = decide(&t, &Criterion::Optimistic).unwrap().optimum;
        prop_assert!(mn <= mx);
        // Deleting a link never helps, so the best cell is below A.
        prop_assert!(mx <= additional_closeness(&g).unwrap().value + TOL);
    }

    #[test]
    fn dropping_a_row_relaxes_extremes(g in playable(8), i in any::<prop::sample::Index>()) {
        let t = build_payoff_table(&g).unwrap();
        prop_assume!(t.rows.len() > 1);
        let r = i.index(t.rows.len());
        let smaller = t.without_row(r);
        for &a in &t.cols {
            let lo = |t: &PayoffTable| score_action(t, a, &Criterion::Pessimistic).unwrap();
            let hi = |t: &PayoffTable| score_action(t, a, &Criterion::Optimistic).unwrap();
            prop_assert!(lo(&smaller) >= lo(&t));
            prop_assert!(hi(&smaller) <= hi(&t));
        }
    }

    #[test]
    fn equal_likelihood_picks_largest_column_sum(g in playable(8)) {
        let t = build_payoff_table(&g).unwrap();
        let sums: Vec<f64> = (0..t.cols.len()).map(|j| t.column(j).sum()).collect();
        let best = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let expected: Vec<_> = t.cols.iter().zip(&sums)
            .filter(|(_, s)| best - **s <= TOL * t.rows.len() as f64)
            .map(|(a, _)| *a)
            .collect();
        prop_assert_eq!(decide(&t, &Criterion::EqualLikelihood).unwrap().best, expected);
    }

    #[test]
    fn pow2_is_exact(e in -60i32..=60) {
        prop_assert_eq!(pow2(e), 2f64.powi(e));
    }
}

#[test]
fn sweeps_are_reproducible() {
    let ranges: Vec<ParamRange> = vec!["trial=1..30".parse().unwrap()];
    let a = sweep(Target::Join, &ranges, TOL).unwrap();
    let b = sweep(Target::Join, &ranges, TOL).unwrap();
    assert_eq!(a, b);
    assert!(a.pass);
}
