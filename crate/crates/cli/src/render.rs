use std::error::Error;
use std::fmt::Write as _;

use closeness_core::decision::{DecisionReport, PayoffTable, SaddlePoint};
use closeness_core::metrics::{Extremum, MetricReport};
use closeness_core::number::format_number;
use closeness_core::verify::SweepReport;
use closeness_core::{Edge, Graph};
use serde::{Deserialize, Serialize};

use crate::Format;

type Rendered = Result<String, Box<dyn Error>>;

#[derive(Debug, Serialize, Deserialize)]
pub struct MetricsOutput {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    #[serde(flatten)]
    pub report: MetricReport,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PayoffOutput {
    #[serde(flatten)]
    pub table: PayoffTable,
    pub saddle_points: Vec<SaddlePoint>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DecisionOutput {
    #[serde(flatten)]
    pub report: DecisionReport,
    /// Optimum as read by a user; regrets are positive.
    pub value: f64,
}

fn links(edges: &[Edge]) -> String {
    edges.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn json(value: &impl Serialize) -> Rendered {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn csv_string(rows: Vec<Vec<String>>) -> Rendered {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Shortest round-trip representation, so CSV and JSON carry the same
/// values.
fn exact(x: f64) -> String {
    x.to_string()
}

pub fn metrics(arg: &str, g: &Graph, report: &MetricReport, format: Format) -> Rendered {
    match format {
        Format::Json => json(&MetricsOutput {
            graph: arg.to_string(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            report: report.clone(),
        }),
        Format::Csv => {
            let ext = |x: &Option<Extremum>| match x {
                Some(x) => vec![exact(x.value), links(&x.edges)],
                None => vec![String::new(), String::new()],
            };
            let ratio = |x: Option<f64>| vec![x.map(exact).unwrap_or_default(), String::new()];
            let mut rows = vec![vec!["metric".into(), "value".into(), "links".into()]];
            for (name, cells) in [
                ("closeness", vec![exact(report.closeness), String::new()]),
                ("residual", ext(&report.residual)),
                ("additional", ext(&report.additional)),
                ("nr", ratio(report.nr)),
                ("na", ratio(report.na)),
            ] {
                let mut row = vec![name.to_string()];
                row.extend(cells);
                rows.push(row);
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "graph       {arg} ({} vertices, {} edges)", g.vertex_count(), g.edge_count())?;
            writeln!(s, "closeness   {}", format_number(report.closeness))?;
            let ext = |x: &Option<Extremum>, what: &str| match x {
                Some(x) => format!("{}  {what} {}", format_number(x.value), links(&x.edges)),
                None => "undefined".into(),
            };
            writeln!(s, "residual    {}", ext(&report.residual, "by deleting"))?;
            writeln!(s, "additional  {}", ext(&report.additional, "by adding"))?;
            let pct = |x: Option<f64>| x.map_or("undefined".into(), |x| format!("{}%", format_number(x * 100.0)));
            writeln!(s, "NR          {}", pct(report.nr))?;
            writeln!(s, "NA          {}", pct(report.na))?;
            Ok(s)
        }
    }
}

pub fn payoff(table: &PayoffTable, saddles: &[SaddlePoint], format: Format) -> Rendered {
    match format {
        Format::Json => json(&PayoffOutput {
            table: table.clone(),
            saddle_points: saddles.to_vec(),
        }),
        Format::Csv => {
            let mut header = vec!["del\\add".to_string()];
            header.extend(table.cols.iter().map(ToString::to_string));
            let mut rows = vec![header];
            for (del, cells) in table.rows.iter().zip(&table.cells) {
                let mut row = vec![del.to_string()];
                row.extend(cells.iter().map(|&c| exact(c)));
                rows.push(row);
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut grid = vec![std::iter::once("Del - Add".to_string())
                .chain(table.cols.iter().map(ToString::to_string))
                .collect::<Vec<_>>()];
            for (del, cells) in table.rows.iter().zip(&table.cells) {
                grid.push(
                    std::iter::once(del.to_string())
                        .chain(cells.iter().map(|&c| format_number(c)))
                        .collect(),
                );
            }
            let width = grid.iter().flatten().map(String::len).max().unwrap_or(0);
            let mut s = String::new();
            for row in &grid {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                writeln!(s, "{}", line.join("  "))?;
            }
            if saddles.is_empty() {
                writeln!(s, "no saddle point")?;
            }
            for p in saddles {
                writeln!(s, "saddle point: delete {} add {} = {}", p.delete, p.add, format_number(p.value))?;
            }
            Ok(s)
        }
    }
}

/// Per-link value as a user reads it: regrets positive.
fn shown(report: &DecisionReport, score: f64) -> f64 {
    if report.criterion.is_regret() {
        -score
    } else {
        score
    }
}

pub fn decisions(reports: &[DecisionReport], format: Format) -> Rendered {
    match format {
        Format::Json => json(
            &reports
                .iter()
                .map(|r| DecisionOutput {
                    report: r.clone(),
                    value: r.display_value(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut rows = vec![vec!["criterion".into(), "link".into(), "value".into(), "best".into()]];
            for r in reports {
                for &(link, score) in &r.scores {
                    rows.push(vec![
                        r.criterion.to_string(),
                        link.to_string(),
                        exact(shown(r, score)),
                        r.best.contains(&link).to_string(),
                    ]);
                }
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let label = if r.criterion.is_regret() { "min regret" } else { "optimum" };
                writeln!(
                    s,
                    "{:<18} {label:<10} {:<12} best {}",
                    r.criterion.to_string(),
                    format_number(r.display_value()),
                    links(&r.best)
                )?;
            }
            Ok(s)
        }
    }
}

pub fn sweeps(reports: &[SweepReport], format: Format) -> Rendered {
    match format {
        Format::Json => match reports {
            [one] => json(one),
            many => json(&many),
        },
        Format::Csv => {
            let mut rows = vec![["target", "label", "analytic", "oracle", "diff", "pass"]
                .map(String::from)
                .to_vec()];
            for r in reports {
                for i in &r.instances {
                    rows.push(vec![
                        r.target.clone(),
                        i.label.clone(),
                        exact(i.analytic),
                        exact(i.oracle),
                        exact(i.diff),
                        (i.diff <= r.tolerance).to_string(),
                    ]);
                }
            }
            csv_string(rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(s, "{r}")?;
            }
            Ok(s)
        }
    }
}
