//! Acceptance gate. Prints one line per criterion and exits non-zero if
//! any criterion fails. Run with `cargo test -p closeness-core --test acceptance`.

use closeness_core::closed_form::{cycle_tails_closeness, even_cycle_tail_min, odd_cycle_tail_min};
use closeness_core::decision::{build_payoff_table, decide, find_saddle_points, score_action, Criterion};
use closeness_core::graph::{generate, FamilySpec};
use closeness_core::metrics::{additional_closeness, closeness, metric_report, residual_closeness};
use closeness_core::verify::{figure_graphs, sweep, ParamRange, SweepReport, Target};
use closeness_core::{Edge, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Closed forms and theorem sweeps against brute force.
const SWEEP_TOL: f64 = 1e-9;
/// Figure ratios, compared after rounding to two decimals of a percent.
const PERCENT_TOL: f64 = 1e-4;
/// The C6 short-chord mean, quoted to five decimals.
const MEAN_TOL: f64 = 1e-5;
const SEED: u64 = 0xACCE_0001;

type Check = fn() -> Result<String, String>;

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(id: &'static str, title: &'static str, result: Result<String, String>) -> Outcome {
    match result {
        Ok(detail) => Outcome { id, title, pass: true, detail },
        Err(detail) => Outcome { id, title, pass: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(u: usize, v: usize) -> Edge {
    Edge::new(u, v).unwrap()
}

fn family(s: &str) -> Graph {
    generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
}

fn range(s: &str) -> ParamRange {
    s.parse().unwrap()
}

fn run_sweep(target: Target, ranges: &[&str]) -> Result<SweepReport, String> {
    let ranges: Vec<ParamRange> = ranges.iter().map(|r| range(r)).collect();
    sweep(target, &ranges, SWEEP_TOL).map_err(|e| format!("{target}: {e}"))
}

/// Runs several sweeps; on failure lists the failing instances.
fn sweeps(parts: &[(Target, &[&str])]) -> Result<String, String> {
    let mut count = 0;
    let mut max = 0.0f64;
    let mut failed = Vec::new();
    for (target, ranges) in parts {
        let report = run_sweep(*target, ranges)?;
        count += report.instances.len();
        max = max.max(report.max_diff);
        failed.extend(
            report
                .failures()
                .map(|i| format!("{target} {} (analytic {}, oracle {})", i.label, i.analytic, i.oracle)),
        );
    }
    if failed.is_empty() {
        Ok(format!("{count} instances, max diff {max:.1e}"))
    } else {
        Err(format!("{} of {count} instances off: {}", failed.len(), failed.join("; ")))
    }
}

fn table_one() -> Result<String, String> {
    let t = build_payoff_table(&family("path:4")).map_err(|e| e.to_string())?;
    let expected = [[4.5, 4.25, 3.0], [4.25, 4.25, 4.25], [3.0, 4.25, 4.5]];
    ensure(t.cells == expected, || format!("table {:?}", t.cells))?;
    let saddles = find_saddle_points(&t);
    ensure(
        saddles.len() == 1
            && saddles[0].delete == e(2, 3)
            && saddles[0].add == e(1, 4)
            && saddles[0].value == 4.25,
        || format!("saddle points {saddles:?}"),
    )?;
    Ok("3x3 table exact, saddle at delete (2,3) add (1,4) = 4.25".into())
}

fn figures() -> Result<String, String> {
    let expected = [
        (8.0, 7.0, 8.5, 87.5, 106.25),
        (10.0, 6.0, 11.25, 60.0, 112.5),
        (6.0, 5.5, 10.0, 91.67, 166.67),
    ];
    for ((name, g), (c, r, a, nr, na)) in figure_graphs().iter().zip(expected) {
        let m = metric_report(g);
        let got_r = m.residual.as_ref().map(|x| x.value);
        let got_a = m.additional.as_ref().map(|x| x.value);
        ensure(
            m.closeness == c && got_r == Some(r) && got_a == Some(a),
            || format!("{name}: C={} R={got_r:?} A={got_a:?}", m.closeness),
        )?;
        let pct = |x: Option<f64>| (x.unwrap() * 10000.0).round() / 100.0;
        ensure(
            (pct(m.nr) - nr).abs() <= PERCENT_TOL && (pct(m.na) - na).abs() <= PERCENT_TOL,
            || format!("{name}: NR={}% NA={}%", pct(m.nr), pct(m.na)),
        )?;
    }
    Ok("three figures, C/R/A exact, NR/NA to 0.01%".into())
}

fn c6() -> Result<String, String> {
    let t = build_payoff_table(&family("cycle:6")).map_err(|e| e.to_string())?;
    let scores = |a: Edge| -> Vec<f64> {
        [
            Criterion::Optimistic,
            Criterion::Pessimistic,
            Criterion::hurwicz(0.5).unwrap(),
            Criterion::EqualLikelihood,
            Criterion::PaperRegret,
        ]
        .iter()
        .map(|c| score_action(&t, a, c).unwrap())
        .collect()
    };
    let opp = scores(e(1, 4));
    let short = scores(e(1, 3));
    // Hurwicz(0.5) is half of Mx+Mn.
    let check = |s: &[f64], want: [f64; 5], label: &str| {
        let got = [s[0], s[1], 2.0 * s[2], s[3], -s[4]];
        let ok = got.iter().zip(want).enumerate().all(|(i, (g, w))| {
            let tol = if i == 3 { MEAN_TOL } else { SWEEP_TOL };
            (g - w).abs() <= tol
        });
        ensure(ok, || format!("{label} chord: {got:?}"))
    };
    check(&opp, [9.75, 9.375, 19.125, 9.5, 0.375], "opposite")?;
    check(&short, [10.0, 9.0, 19.0, 9.45833, 1.0], "short")?;
    let opposite = [e(1, 4), e(2, 5), e(3, 6)];
    for c in Criterion::all_unweighted(0.5).unwrap() {
        let r = decide(&t, &c).map_err(|e| e.to_string())?;
        let opposite_wins = r.best == opposite;
        let short_wins = !r.best.is_empty() && r.best.iter().all(|b| !opposite.contains(b));
        let want_short = matches!(c, Criterion::Optimistic);
        ensure(if want_short { short_wins } else { opposite_wins }, || {
            format!("{c}: best {:?}", r.best)
        })?;
    }
    Ok("chord scores match, short chords win only the optimistic criterion".into())
}

fn closed_forms() -> Result<String, String> {
    sweeps(&[
        (Target::Path, &["n=1..20"]),
        (Target::Cycle, &["n=3..20"]),
        (Target::Join, &["trial=1..100"]),
        (Target::Cliques, &["k=3..10", "m=3..10"]),
        (Target::CycleTails, &["n=3..10", "p=0..6", "q=0..6"]),
        (Target::SingleTail, &["n=3..16", "p=0..8"]),
        (Target::EvenTail, &["k=2..8", "p=0..8"]),
        (Target::OddTail, &["k=1..7", "p=0..8"]),
    ])
}

fn main_theorems() -> Result<String, String> {
    let grid: &[&str] = &["k=3..8", "m=3..8"];
    sweeps(&[
        (Target::CliquesMaximax, grid),
        (Target::CliquesMaximin, grid),
        (Target::CliquesAverage, grid),
        (Target::CliquesHurwicz, grid),
    ])
}

fn regret_theorem() -> Result<String, String> {
    let mut parts: Vec<(Target, &[&str])> = vec![(Target::CliquesRegret, &["k=3..8", "m=3..8"])];
    parts.push((Target::CliquesRegret, &["k=9", "m=4"]));
    sweeps(&parts)
}

fn cycle_maximin() -> Result<String, String> {
    sweeps(&[(Target::CycleMaximin, &["m=8..24"])])
}

fn lollipop() -> Result<String, String> {
    sweeps(&[(Target::LollipopMaximax, &["n=3..6", "m=1..4"])])
}

fn cliques_additional() -> Result<String, String> {
    sweeps(&[(Target::CliquesAdditional, &["k=3..8", "m=3..8"])])
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=10);
    let p = rng.gen_range(0.2..0.8);
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, pairs).unwrap()
}

fn monotone_edges() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0;
    for i in 0..200 {
        let g = random_graph(&mut rng);
        let c = closeness(&g);
        for a in g.non_edges() {
            let up = closeness(&g.mutate_copy(None, Some(a)).unwrap());
            ensure(up > c, || format!("graph {i}: adding {a} gives {up} <= {c}"))?;
            checks += 1;
        }
        for d in g.edges() {
            let down = closeness(&g.mutate_copy(Some(d), None).unwrap());
            ensure(down < c, || format!("graph {i}: deleting {d} gives {down} >= {c}"))?;
            checks += 1;
        }
    }
    Ok(format!("200 graphs, {checks} single-link changes"))
}

fn isomorphism() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for i in 0..50 {
        let g = loop {
            let g = random_graph(&mut rng);
            if g.edge_count() > 0 && !g.is_complete() {
                break g;
            }
        };
        let mut perm: Vec<usize> = (1..=g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        let pairs = [
            (closeness(&g), closeness(&h)),
            (residual_closeness(&g).unwrap().value, residual_closeness(&h).unwrap().value),
            (additional_closeness(&g).unwrap().value, additional_closeness(&h).unwrap().value),
        ];
        ensure(pairs.iter().all(|(a, b)| (a - b).abs() <= SWEEP_TOL), || {
            format!("relabeling {i}: {pairs:?}")
        })?;
    }
    Ok("50 relabelings, C/R/A invariant".into())
}

fn hurwicz_monotone() -> Result<String, String> {
    let alphas = [0.0, 0.25, 0.5, 0.75, 1.0];
    let graphs = ["path:5", "cycle:6", "cycle:7", "lollipop:4,3", "cliques:4,3", "cycletails:5,2,1"];
    for name in graphs {
        let t = build_payoff_table(&family(name)).unwrap();
        let mut prev = f64::NEG_INFINITY;
        for a in alphas {
            let r = decide(&t, &Criterion::hurwicz(a).unwrap()).unwrap();
            ensure(r.optimum >= prev - SWEEP_TOL, || format!("{name}: optimum drops at alpha {a}"))?;
            for &(link, score) in &r.scores {
                let lo = score_action(&t, link, &Criterion::Pessimistic).unwrap();
                let hi = score_action(&t, link, &Criterion::Optimistic).unwrap();
                ensure(lo - SWEEP_TOL <= score && score <= hi + SWEEP_TOL, || {
                    format!("{name}: {link} outside [min, max] at alpha {a}")
                })?;
            }
            prev = r.optimum;
        }
    }
    Ok(format!("{} graphs, alpha in {alphas:?}", graphs.len()))
}

fn tail_split() -> Result<String, String> {
    let mut count = 0;
    for n in 4..=8 {
        for total in 2..=8 {
            let whole = closeness(&family(&format!("cycletails:{n},{total},0")));
            let mirrored = closeness(&family(&format!("cycletails:{n},0,{total}")));
            ensure(whole == mirrored, || format!("n={n}: mirrored tail gives {mirrored}, not {whole}"))?;
            for q in 1..total {
                let split = closeness(&family(&format!("cycletails:{n},{},{q}", total - q)));
                ensure(whole < split, || {
                    format!("n={n}: tails ({total},0) give {whole}, ({},{q}) give {split}", total - q)
                })?;
                let formula = cycle_tails_closeness(n, total - q, q).unwrap();
                ensure((formula - split).abs() <= SWEEP_TOL, || {
                    format!("n={n} p={} q={q}: formula {formula} vs {split}", total - q)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} splits, one tail strictly smallest"))
}

fn tail_min_monotone() -> Result<String, String> {
    for p in 0..=4 {
        for k in 2..12 {
            let (a, b) = (even_cycle_tail_min(k, p).unwrap(), even_cycle_tail_min(k + 1, p).unwrap());
            ensure(a < b, || format!("even form not increasing at k={k}, p={p}: {a} -> {b}"))?;
            let (a, b) = (odd_cycle_tail_min(k, p).unwrap(), odd_cycle_tail_min(k + 1, p).unwrap());
            ensure(a < b, || format!("odd form not increasing at k={k}, p={p}: {a} -> {b}"))?;
        }
    }
    Ok("both forms strictly increasing in k".into())
}

fn main() {
    let checks: Vec<(&str, &str, Check)> = vec![
        ("1", "P4 payoff table and saddle point", table_one),
        ("2", "figure fixtures: C, R, A, NR, NA", figures),
        ("3", "C6 chord scores and criterion winners", c6),
        ("4", "closed forms vs brute force", closed_forms),
        ("5a", "linked cliques: maximax, maximin, average, Hurwicz", main_theorems),
        ("5b", "linked cliques: minimal regret", regret_theorem),
        ("5c", "cycle maximin and its chord", cycle_maximin),
        ("6a", "lollipop maximax = A - 1/2", lollipop),
        ("6b", "linked cliques additional closeness", cliques_additional),
        ("7a", "single-link changes move closeness strictly", monotone_edges),
        ("7b", "isomorphism invariance", isomorphism),
        ("7c", "Hurwicz monotone in alpha", hurwicz_monotone),
        ("7d", "tail split: one tail minimizes closeness", tail_split),
        ("7e", "tail minima increase with cycle size", tail_min_monotone),
    ];
    let outcomes: Vec<Outcome> = checks
        .into_iter()
        .map(|(id, title, f)| outcome(id, title, f()))
        .collect();
    for o in &outcomes {
        let mark = if o.pass { "PASS" } else { "FAIL" };
        println!("{mark} {:<3} {:<52} {}", o.id, o.title, o.detail);
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!(
        "acceptance: {} passed, {} failed",
        outcomes.len() - failed.len(),
        failed.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
