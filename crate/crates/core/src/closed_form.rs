//! Analytic closeness formulas for path, cycle, linked-clique, lollipop and
//! cycle-with-tails graphs, and the decision values derived from them.
//!
//! Every function here has a brute-force counterpart in [`crate::verify`].

use serde::{Deserialize, Serialize};

use crate::dyadic::pow2;
use crate::error::{Error, Result};
use crate::graph::{generate, Edge, FamilySpec, Vertex};
use crate::metrics::additional_closeness;

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(what()))
    }
}

fn exp(x: usize) -> i32 {
    i32::try_from(x).expect("exponent fits in i32")
}

/// `C(P_n) = 2n - 4 + 2^(2-n)`.
pub fn path_closeness(n: usize) -> Result<f64> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(2.0 * n as f64 - 4.0 + pow2(2 - exp(n)))
}

/// `C(C_n)`: `4k(1 - 3*2^(-k-1))` for `n = 2k`, `2(2k+1)(1 - 2^-k)` for
/// `n = 2k+1`.
pub fn cycle_closeness(n: usize) -> Result<f64> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let k = n / 2;
    let kf = k as f64;
    Ok(if n.is_multiple_of(2) {
        4.0 * kf * (1.0 - 3.0 * pow2(-exp(k) - 1))
    } else {
        2.0 * (2.0 * kf + 1.0) * (1.0 - pow2(-exp(k)))
    })
}

/// Closeness of `G1 + G2` joined by one link `(p, q)`, from `C(G1)`,
/// `C(G2)` and the vertex closenesses `C(p)`, `C(q)`.
pub fn join_closeness(c1: f64, c2: f64, cp: f64, cq: f64) -> f64 {
    c1 + c2 + (1.0 + cp) * (1.0 + cq)
}

/// `C(K_k + K_m) = (2k² + 2m² + km - k - m + 1) / 4`.
pub fn linked_cliques_closeness(k: usize, m: usize) -> Result<f64> {
    require(k >= 2 && m >= 2, || format!("cliques need k, m >= 2, got ({k}, {m})"))?;
    let (k, m) = (k as f64, m as f64);
    Ok((2.0 * k * k + 2.0 * m * m + k * m - k - m + 1.0) / 4.0)
}

/// Which link we add to `K_k + K_m` (bridge `(1, k+m)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Two vertices that are not bridge endpoints, e.g. `(k, k+1)`.
    FarFar,
    /// The bridge endpoint of the larger clique to a non-bridge vertex of
    /// the smaller one, e.g. `(1, k+1)`.
    BridgeEndpoint,
}

impl Strategy {
    /// Representative added link on `cliques:k,m`.
    pub fn representative(self, k: usize) -> Edge {
        let (u, v) = match self {
            Strategy::FarFar => (k, k + 1),
            Strategy::BridgeEndpoint => (1, k + 1),
        };
        Edge::new(u, v).expect("distinct endpoints")
    }
}

/// Deleted-link classes for the two strategies on `K_k + K_m`.
///
/// A, B, C, D pair with [`Strategy::FarFar`]; A, E, F with
/// [`Strategy::BridgeEndpoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// The bridge `(1, k+m)` is deleted.
    A,
    /// Far-far add; the deleted link avoids `1, k, k+1, k+m`.
    B,
    /// Far-far add; the deleted link has exactly one of `1, k, k+1, k+m`.
    C,
    /// Far-far add; the deleted link is `(1, k)` or `(k+1, k+m)`.
    D,
    /// Bridge-endpoint add; the deleted link avoids vertex 1.
    E,
    /// Bridge-endpoint add; the deleted link is `(1, j)` inside `K_k`.
    F,
}

impl CaseTag {
    pub const ALL: [CaseTag; 6] = [
        CaseTag::A,
        CaseTag::B,
        CaseTag::C,
        CaseTag::D,
        CaseTag::E,
        CaseTag::F,
    ];

    /// Number of deleted links falling in this case.
    pub fn multiplicity(self, k: usize, m: usize) -> usize {
        let pairs = |x: usize| x * x.saturating_sub(1) / 2;
        match self {
            CaseTag::A => 1,
            CaseTag::B => pairs(k.saturating_sub(2)) + pairs(m.saturating_sub(2)),
            CaseTag::C => (2 * k + 2 * m).saturating_sub(8),
            CaseTag::D => 2,
            CaseTag::E => pairs(k - 1) + pairs(m),
            CaseTag::F => k - 1,
        }
    }

    pub fn strategy(self) -> Option<Strategy> {
        match self {
            CaseTag::A => None,
            CaseTag::B | CaseTag::C | CaseTag::D => Some(Strategy::FarFar),
            CaseTag::E | CaseTag::F => Some(Strategy::BridgeEndpoint),
        }
    }

    /// Classifies deleting `delete` from `cliques:k,m` when `strategy`'s
    /// representative link is added.
    pub fn classify(strategy: Strategy, delete: Edge, k: usize, m: usize) -> CaseTag {
        let bridge = (1, k + m);
        if delete.endpoints() == bridge {
            return CaseTag::A;
        }
        match strategy {
            Strategy::FarFar => {
                if delete.endpoints() == (1, k) || delete.endpoints() == (k + 1, k + m) {
                    CaseTag::D
                } else if [1, k, k + 1, k + m].iter().any(|&v| delete.touches(v)) {
                    CaseTag::C
                } else {
                    CaseTag::B
                }
            }
            Strategy::BridgeEndpoint => {
                if delete.touches(1) {
                    CaseTag::F
                } else {
                    CaseTag::E
                }
            }
        }
    }

    /// A deleted link in this case, if one exists for `(k, m)`.
    pub fn representative(self, k: usize, m: usize) -> Option<Edge> {
        let pair = |u: Vertex, v: Vertex| Edge::new(u, v).ok();
        match self {
            CaseTag::A => pair(1, k + m),
            CaseTag::B if k >= 4 => pair(2, 3),
            CaseTag::B if m >= 4 => pair(k + 2, k + 3),
            CaseTag::B => None,
            CaseTag::C => pair(1, 2),
            CaseTag::D => pair(1, k),
            CaseTag::E => pair(2, 3),
            CaseTag::F => pair(1, 2),
        }
    }
}

/// Closeness change of `K_k + K_m` for one (add, delete) case.
pub fn linked_cliques_delta(case: CaseTag, k: usize, m: usize) -> Result<f64> {
    require(k >= 3 && m >= 3, || format!("cases need k, m >= 3, got ({k}, {m})"))?;
    if case == CaseTag::B {
        require(k >= 4 || m >= 4, || "case B needs a clique with at least 4 vertices".into())?;
    }
    let (kf, mf) = (k as f64, m as f64);
    Ok(match case {
        CaseTag::A => 0.0,
        CaseTag::B | CaseTag::D => (kf + mf - 3.0) / 4.0,
        CaseTag::C => (kf + mf - 4.0) / 4.0,
        CaseTag::E => (kf - 1.0) / 4.0,
        CaseTag::F => (2.0 * kf - mf - 4.0) / 8.0,
    })
}

/// Decision values for `K_k + K_m` under each criterion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliquesCriteria {
    /// Normalized so that `k >= m`.
    pub k: usize,
    pub m: usize,
    pub closeness: f64,
    /// Maximax.
    pub mx: f64,
    /// Maximin.
    pub mn: f64,
    /// Best `max + min`, twice the Hurwicz(1/2) optimum.
    pub mx_plus_mn: f64,
    /// Minimal within-column regret, as given by the three-branch formula.
    pub reg: f64,
    /// Best column mean.
    pub av: f64,
    /// Strategy attaining `mx`, `mn`, `mx_plus_mn` and `av`.
    pub strategy: Strategy,
    /// Strategy the formula names for `reg`.
    pub regret_strategy: Strategy,
}

/// Branch of the regret formula chosen for `k >= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegretBranch {
    /// `2k >= 2m >= k + 4`: `(k - 1) / 4`.
    LargeSmallerClique,
    /// `k + 8 <= 4m <= 2k + 8`: `(3k + 2 - 2m) / 8`.
    Middle,
    /// `k + 8 > 4m`: `(k + m - 3) / 4`.
    SmallSmallerClique,
}

impl RegretBranch {
    pub fn select(k: usize, m: usize) -> RegretBranch {
        let (k, m) = if k >= m { (k, m) } else { (m, k) };
        if 2 * m >= k + 4 {
            RegretBranch::LargeSmallerClique
        } else if k + 8 <= 4 * m && 4 * m <= 2 * k + 8 {
            RegretBranch::Middle
        } else {
            debug_assert!(k + 8 > 4 * m);
            RegretBranch::SmallSmallerClique
        }
    }

    pub fn value(self, k: usize, m: usize) -> f64 {
        let (k, m) = if k >= m { (k, m) } else { (m, k) };
        let (kf, mf) = (k as f64, m as f64);
        match self {
            RegretBranch::LargeSmallerClique => (kf - 1.0) / 4.0,
            RegretBranch::Middle => (3.0 * kf + 2.0 - 2.0 * mf) / 8.0,
            RegretBranch::SmallSmallerClique => (kf + mf - 3.0) / 4.0,
        }
    }
}

pub fn linked_cliques_decision(k: usize, m: usize) -> Result<CliquesCriteria> {
    require(k >= 3 && m >= 3, || format!("need k, m >= 3, got ({k}, {m})"))?;
    let (k, m) = if k >= m { (k, m) } else { (m, k) };
    let c = linked_cliques_closeness(k, m)?;
    let (kf, mf) = (k as f64, m as f64);
    let gain = (kf + mf - 3.0) / 4.0;
    let denom = kf * kf - kf + mf * mf - mf + 2.0;
    let branch = RegretBranch::select(k, m);
    Ok(CliquesCriteria {
        k,
        m,
        closeness: c,
        mx: c + gain,
        mn: c,
        mx_plus_mn: 2.0 * c + gain,
        reg: branch.value(k, m),
        av: c + gain + (11.0 - 3.0 * kf - 3.0 * mf) / (2.0 * denom),
        strategy: Strategy::FarFar,
        regret_strategy: match branch {
            RegretBranch::SmallSmallerClique => Strategy::FarFar,
            _ => Strategy::BridgeEndpoint,
        },
    })
}

/// Within-column regret (max - min over deletions) of each link class on
/// `K_k + K_m`, from the case deltas.
///
/// Unlike the three-branch formula in [`linked_cliques_decision`], this
/// keeps the two bridge-endpoint classes apart: joining the bridge end of
/// `K_k` to `K_m` and joining the bridge end of `K_m` to `K_k` are
/// mirror images with different minima.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegretByClass {
    pub far_far: f64,
    /// Bridge end of the larger clique, e.g. `(1, k+1)`.
    pub larger_bridge_end: f64,
    /// Bridge end of the smaller clique, e.g. `(2, k+m)`.
    pub smaller_bridge_end: f64,
}

impl RegretByClass {
    pub fn min(&self) -> f64 {
        self.far_far
            .min(self.larger_bridge_end)
            .min(self.smaller_bridge_end)
    }
}

pub fn linked_cliques_regret_by_class(k: usize, m: usize) -> Result<RegretByClass> {
    require(k >= 3 && m >= 3, || format!("need k, m >= 3, got ({k}, {m})"))?;
    let (k, m) = if k >= m { (k, m) } else { (m, k) };
    // Bridge-endpoint class of the clique with `own` vertices: best case E,
    // worst of case A (0) and case F.
    let endpoint = |own: usize, other: usize| -> Result<f64> {
        let e = linked_cliques_delta(CaseTag::E, own, other)?;
        let f = linked_cliques_delta(CaseTag::F, own, other)?;
        Ok(e - f.min(0.0))
    };
    Ok(RegretByClass {
        far_far: linked_cliques_delta(CaseTag::D, k, m)?,
        larger_bridge_end: endpoint(k, m)?,
        smaller_bridge_end: endpoint(m, k)?,
    })
}

/// `A(K_k + K_m) = C(K_k + K_m) + (k + m - 1) / 4`.
pub fn linked_cliques_additional(k: usize, m: usize) -> Result<f64> {
    require(k >= 3 && m >= 3, || format!("need k, m >= 3, got ({k}, {m})"))?;
    Ok(linked_cliques_closeness(k, m)? + (k + m - 1) as f64 / 4.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LollipopMaximax {
    /// `A(L) - 1/2`.
    pub value: f64,
    /// `A(L)`, by enumeration.
    pub additional: f64,
    /// Links attaining `A(L)`.
    pub links: Vec<Edge>,
}

/// Maximax of the lollipop `L_{n,m}`: the additional closeness less the
/// `1/2` lost by deleting a clique link away from the path.
///
/// `A(L)` itself is found by enumerating every addable link.
pub fn lollipop_maximax(n: usize, m: usize) -> Result<LollipopMaximax> {
    let g = generate(&FamilySpec::Lollipop { n, m })?;
    let a = additional_closeness(&g)?;
    Ok(LollipopMaximax {
        value: a.value - 0.5,
        additional: a.value,
        links: a.edges,
    })
}

/// Closeness of `C_n` with a `p`-vertex tail and a `q`-vertex tail rooted
/// at adjacent cycle vertices.
pub fn cycle_tails_closeness(n: usize, p: usize, q: usize) -> Result<f64> {
    let c = cycle_closeness(n)?;
    let (p, q) = (exp(p), exp(q));
    Ok(c * (1.0 + (4.0 - pow2(1 - p) - pow2(1 - q)) / n as f64) + 2.0 * f64::from(p + q) - 3.0
        + pow2(-p)
        + pow2(-q)
        + pow2(-p - q))
}

/// Closeness of `C_n` with one `p`-vertex tail:
/// `C(C_n)(1 + (2 - 2^(1-p))/n) + 2p - 2 + 2^(1-p)`.
pub fn cycle_single_tail_closeness(n: usize, p: usize) -> Result<f64> {
    let c = cycle_closeness(n)?;
    let p = exp(p);
    Ok(c * (1.0 + (2.0 - pow2(1 - p)) / n as f64) + 2.0 * f64::from(p) - 2.0 + pow2(1 - p))
}

/// Single-tail closeness for an even cycle `n = 2k`:
/// `4k + 2p + 2 - 6(k+1)2^-k - 2^(1-p) + 3*2^(1-k-p)`.
pub fn even_cycle_tail_min(k: usize, p: usize) -> Result<f64> {
    require(k >= 2, || format!("even cycle needs k >= 2, got {k}"))?;
    let (k, p) = (exp(k), exp(p));
    let (kf, pf) = (f64::from(k), f64::from(p));
    Ok(4.0 * kf + 2.0 * pf + 2.0 - 6.0 * (kf + 1.0) * pow2(-k) - pow2(1 - p)
        + 3.0 * pow2(1 - k - p))
}

/// Single-tail closeness for an odd cycle `n = 2k+1`:
/// `4k + 2p + 4 - (2k+3)2^(1-k) - 2^(1-p) + 2^(2-k-p)`.
pub fn odd_cycle_tail_min(k: usize, p: usize) -> Result<f64> {
    require(k >= 1, || format!("odd cycle needs k >= 1, got {k}"))?;
    let (k, p) = (exp(k), exp(p));
    let (kf, pf) = (f64::from(k), f64::from(p));
    Ok(4.0 * kf + 2.0 * pf + 4.0 - (2.0 * kf + 3.0) * pow2(1 - k) - pow2(1 - p)
        + pow2(2 - k - p))
}

/// Smallest closeness over splits of `p` tail vertices between two adjacent
/// roots of `C_n`, attained with every vertex on one tail.
pub fn cycle_tail_min(n: usize, p: usize) -> Result<f64> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    if n.is_multiple_of(2) {
        even_cycle_tail_min(n / 2, p)
    } else {
        odd_cycle_tail_min(n / 2, p)
    }
}

/// Maximin of the cycle `C_m` and the chord attaining it.
pub fn cycle_maximin(m: usize) -> Result<(f64, Edge)> {
    require(m >= 4, || format!("cycle needs m >= 4 to have a chord, got {m}"))?;
    let q = m / 4;
    let qi = exp(q);
    let qf = q as f64;
    let (value, far) = match m % 4 {
        0 => (
            8.0 * qf + 2.0 - (2.0 * qf + 3.0) * pow2(1 - qi) - pow2(2 - 2 * qi) + pow2(3 - 3 * qi),
            2 * q + 1,
        ),
        1 => (
            8.0 * qf + 4.0 - (2.0 * qf + 3.0) * pow2(1 - qi) - pow2(1 - 2 * qi) + pow2(2 - 3 * qi),
            2 * q + 1,
        ),
        2 => (
            8.0 * qf + 6.0 - 3.0 * (qf + 2.0) * pow2(-qi) - pow2(1 - 2 * qi)
                + 3.0 * pow2(-3 * qi),
            2 * q + 2,
        ),
        _ => (
            8.0 * qf + 8.0 - 3.0 * (qf + 2.0) * pow2(-qi) - pow2(-2 * qi)
                + 3.0 * pow2(-1 - 3 * qi),
            2 * q + 2,
        ),
    };
    Ok((value, Edge::new(1, far).expect("distinct endpoints")))
}
