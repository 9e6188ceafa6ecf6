//! The one-link-lost, one-link-built game.
//!
//! Nature deletes an edge of `G` (a row), we add a non-edge (a column), and
//! the payoff is the closeness of the resulting graph. Every criterion
//! produces a score per column that is then maximized; the regret criteria
//! return negated regrets so that "larger is better" holds throughout.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::metrics::closeness;
use crate::TOLERANCE;

/// Weight sums may drift this far from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PayoffTable {
    /// Deletable links, lexicographic.
    pub rows: Vec<Edge>,
    /// Addable links, lexicographic.
    pub cols: Vec<Edge>,
    /// `cells[i][j]` is the closeness after deleting `rows[i]` and adding
    /// `cols[j]`.
    pub cells: Vec<Vec<f64>>,
}

pub fn build_payoff_table(g: &Graph) -> Result<PayoffTable> {
    let rows: Vec<Edge> = g.edges().collect();
    if rows.is_empty() {
        return Err(Error::NoDeletableLinks);
    }
    let cols = g.non_edges();
    if cols.is_empty() {
        return Err(Error::NoAddableLinks);
    }
    let cells = rows
        .par_iter()
        .map(|&del| {
            let damaged = g.mutate_copy(Some(del), None)?;
            cols.iter()
                .map(|&add| Ok(closeness(&damaged.mutate_copy(None, Some(add))?)))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PayoffTable { rows, cols, cells })
}

impl PayoffTable {
    /// Table from explicit parts. `cells` must be `rows.len() x cols.len()`.
    pub fn from_parts(rows: Vec<Edge>, cols: Vec<Edge>, cells: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::NoDeletableLinks);
        }
        if cols.is_empty() {
            return Err(Error::NoAddableLinks);
        }
        if cells.len() != rows.len() || cells.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::domain("payoff cells do not match the row and column labels"));
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn col_index(&self, action: Edge) -> Result<usize> {
        self.cols
            .iter()
            .position(|&c| c == action)
            .ok_or(Error::UnknownAction(action))
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.cells.iter().map(move |row| row[j])
    }

    fn column_min(&self, j: usize) -> f64 {
        self.column(j).fold(f64::INFINITY, f64::min)
    }

    fn column_max(&self, j: usize) -> f64 {
        self.column(j).fold(f64::NEG_INFINITY, f64::max)
    }

    fn row_max(&self, i: usize) -> f64 {
        self.cells[i].iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Copy without row `i`. Panics if that would leave the table empty.
    pub fn without_row(&self, i: usize) -> PayoffTable {
        assert!(self.rows.len() > 1, "cannot remove the last row");
        let mut t = self.clone();
        t.rows.remove(i);
        t.cells.remove(i);
        t
    }
}

/// Probability per deletable link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeWeights(Vec<(Edge, f64)>);

impl EdgeWeights {
    /// Weights must be finite, nonnegative, unique per edge and sum to 1.
    pub fn new(weights: impl IntoIterator<Item = (Edge, f64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, w) in weights {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Weights(format!("weight {w} for {e} is not a probability")));
            }
            if map.insert(e, w).is_some() {
                return Err(Error::Weights(format!("{e} is listed twice")));
            }
        }
        let total: f64 = map.values().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::Weights(format!("weights sum to {total}, not 1")));
        }
        Ok(Self(map.into_iter().collect()))
    }

    /// Uniform weights over `edges`.
    pub fn uniform(edges: &[Edge]) -> Result<Self> {
        let w = 1.0 / edges.len() as f64;
        Self::new(edges.iter().map(|&e| (e, w)))
    }

    pub fn get(&self, e: Edge) -> Option<f64> {
        self.0
            .binary_search_by_key(&e, |&(k, _)| k)
            .ok()
            .map(|i| self.0[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.0.iter().copied()
    }

    /// Weights aligned with `rows`. Every row needs a weight and every
    /// weight needs a row.
    fn aligned(&self, rows: &[Edge]) -> Result<Vec<f64>> {
        if let Some((e, _)) = self.iter().find(|(e, _)| !rows.contains(e)) {
            return Err(Error::Weights(format!("{e} is not a deletable link")));
        }
        rows.iter()
            .map(|&r| {
                self.get(r)
                    .ok_or_else(|| Error::Weights(format!("missing weight for {r}")))
            })
            .collect()
    }
}

/// Parses `u v p` lines (`#` comments and blank lines allowed).
pub fn parse_weights(text: &str) -> Result<EdgeWeights> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let [u, v, p] = trimmed.split_whitespace().collect::<Vec<_>>()[..] else {
            return Err(err(format!("expected `u v p`, got `{trimmed}`")));
        };
        let u = u.parse().map_err(|_| err(format!("invalid vertex `{u}`")))?;
        let v = v.parse().map_err(|_| err(format!("invalid vertex `{v}`")))?;
        let p: f64 = p.parse().map_err(|_| err(format!("invalid probability `{p}`")))?;
        let e = Edge::new(u, v).map_err(|e| err(e.to_string()))?;
        out.push((e, p));
    }
    EdgeWeights::new(out)
}

/// Scoring rule applied to each column of a payoff table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Criterion {
    /// Column mean.
    EqualLikelihood,
    /// Probability-weighted column sum.
    Weighted { weights: EdgeWeights },
    /// Column minimum (maximin).
    Pessimistic,
    /// Column maximum (maximax).
    Optimistic,
    /// `alpha * max + (1 - alpha) * min`.
    Hurwicz { alpha: f64 },
    /// Negated within-column spread, `-(max - min)`.
    ///
    /// This is the regret that reproduces the published worked values
    /// (e.g. 0.375 and 1 for the two chord classes of `C6`).
    PaperRegret,
    /// Negated textbook Savage regret: for each row, the gap to the best
    /// cell of that row; the score is minus the largest gap in the column.
    ClassicalSavage,
}

impl Criterion {
    pub fn hurwicz(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::domain(format!("Hurwicz alpha {alpha} is outside [0, 1]")));
        }
        Ok(Criterion::Hurwicz { alpha })
    }

    /// Every criterion that needs no weights, with the given Hurwicz alpha.
    pub fn all_unweighted(alpha: f64) -> Result<Vec<Self>> {
        Ok(vec![
            Criterion::EqualLikelihood,
            Criterion::Pessimistic,
            Criterion::Optimistic,
            Criterion::hurwicz(alpha)?,
            Criterion::PaperRegret,
            Criterion::ClassicalSavage,
        ])
    }

    pub fn name(&self) -> &'static str {
        match self {
            Criterion::EqualLikelihood => "equal-likelihood",
            Criterion::Weighted { .. } => "weighted",
            Criterion::Pessimistic => "pessimistic",
            Criterion::Optimistic => "optimistic",
            Criterion::Hurwicz { .. } => "hurwicz",
            Criterion::PaperRegret => "paper-regret",
            Criterion::ClassicalSavage => "classical-savage",
        }
    }

    /// Scores of the regret criteria are negated regrets.
    pub fn is_regret(&self) -> bool {
        matches!(self, Criterion::PaperRegret | Criterion::ClassicalSavage)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Criterion::Hurwicz { alpha } => write!(f, "hurwicz({alpha})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Name of a criterion without its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriterionKind {
    EqualLikelihood,
    Weighted,
    Pessimistic,
    Optimistic,
    Hurwicz,
    PaperRegret,
    ClassicalSavage,
}

impl FromStr for CriterionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "equal-likelihood" | "equal" | "average" | "laplace" => CriterionKind::EqualLikelihood,
            "weighted" | "probability" => CriterionKind::Weighted,
            "pessimistic" | "maximin" => CriterionKind::Pessimistic,
            "optimistic" | "maximax" => CriterionKind::Optimistic,
            "hurwicz" => CriterionKind::Hurwicz,
            "paper-regret" | "regret" | "savage" => CriterionKind::PaperRegret,
            "classical-savage" => CriterionKind::ClassicalSavage,
            _ => return Err(Error::UnknownCriterion(s.to_string())),
        })
    }
}

/// Score of adding `action` under `criterion`.
pub fn score_action(t: &PayoffTable, action: Edge, criterion: &Criterion) -> Result<f64> {
    let j = t.col_index(action)?;
    let weights = match criterion {
        Criterion::Weighted { weights } => Some(weights.aligned(&t.rows)?),
        _ => None,
    };
    Ok(score_column(t, j, criterion, weights.as_deref()))
}

fn score_column(t: &PayoffTable, j: usize, criterion: &Criterion, weights: Option<&[f64]>) -> f64 {
    match criterion {
        Criterion::EqualLikelihood => t.column(j).sum::<f64>() / t.rows.len() as f64,
        Criterion::Weighted { .. } => {
            let w = weights.expect("weights aligned by caller");
            t.column(j).zip(w).map(|(c, w)| c * w).sum()
        }
        Criterion::Pessimistic => t.column_min(j),
        Criterion::Optimistic => t.column_max(j),
        Criterion::Hurwicz { alpha } => alpha * t.column_max(j) + (1.0 - alpha) * t.column_min(j),
        Criterion::PaperRegret => -(t.column_max(j) - t.column_min(j)),
        Criterion::ClassicalSavage => -(0..t.rows.len())
            .map(|i| t.row_max(i) - t.cells[i][j])
            .fold(f64::NEG_INFINITY, f64::max),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub criterion: Criterion,
    /// Score of every addable link, in column order.
    pub scores: Vec<(Edge, f64)>,
    /// Largest score.
    pub optimum: f64,
    /// Every link whose score is within tolerance of the optimum.
    pub best: Vec<Edge>,
}

impl DecisionReport {
    /// The optimum as a user reads it: regrets are reported positive.
    pub fn display_value(&self) -> f64 {
        if self.criterion.is_regret() {
            -self.optimum
        } else {
            self.optimum
        }
    }
}

pub fn decide(t: &PayoffTable, criterion: &Criterion) -> Result<DecisionReport> {
    let weights = match criterion {
        Criterion::Weighted { weights } => Some(weights.aligned(&t.rows)?),
        _ => None,
    };
    let scores: Vec<(Edge, f64)> = t
        .cols
        .iter()
        .enumerate()
        .map(|(j, &c)| (c, score_column(t, j, criterion, weights.as_deref())))
        .collect();
    let optimum = scores
        .iter()
        .map(|&(_, s)| s)
        .fold(f64::NEG_INFINITY, f64::max);
    let best = scores
        .iter()
        .filter(|&&(_, s)| optimum - s <= TOLERANCE)
        .map(|&(c, _)| c)
        .collect();
    Ok(DecisionReport {
        criterion: criterion.clone(),
        scores,
        optimum,
        best,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaddlePoint {
    pub delete: Edge,
    pub add: Edge,
    pub value: f64,
}

/// Cells that are both the minimum of their column and the maximum of
/// their row, in row-major order.
pub fn find_saddle_points(t: &PayoffTable) -> Vec<SaddlePoint> {
    let col_mins: Vec<f64> = (0..t.cols.len()).map(|j| t.column_min(j)).collect();
    let mut out = Vec::new();
    for (i, row) in t.cells.iter().enumerate() {
        let row_max = t.row_max(i);
        for (j, &v) in row.iter().enumerate() {
            if row_max - v <= TOLERANCE && v - col_mins[j] <= TOLERANCE {
                out.push(SaddlePoint {
                    delete: t.rows[i],
                    add: t.cols[j],
                    value: v,
                });
            }
        }
    }
    out
}
