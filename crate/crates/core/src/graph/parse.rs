use super::{Edge, Graph, Vertex};
use crate::error::{Error, Result};

/// Parses an edge-list document.
///
/// ```text
/// # comment
/// n 4
/// 1 2
/// 2 3
/// ```
///
/// Blank lines and lines starting with `#` are skipped. The `n <count>`
/// header must come before the first edge. Repeated edges collapse.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();

        match (&mut graph, fields.as_slice()) {
            (None, ["n", count]) => {
                let n: usize = count
                    .parse()
                    .map_err(|_| err(format!("invalid vertex count `{count}`")))?;
                graph = Some(Graph::empty(n).map_err(|e| err(e.to_string()))?);
            }
            (None, _) => return Err(err("expected header `n <count>`".into())),
            (Some(_), ["n", _]) => return Err(err("duplicate header".into())),
            (Some(g), [u, v]) => {
                let u = parse_vertex(u).map_err(err)?;
                let v = parse_vertex(v).map_err(err)?;
                let e = Edge::new(u, v).map_err(|e| err(e.to_string()))?;
                g.check_pair(e).map_err(|e| err(e.to_string()))?;
                g.edges.insert(e);
            }
            (Some(_), _) => return Err(err(format!("expected `u v`, got `{trimmed}`"))),
        }
    }

    graph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing header `n <count>`".into(),
    })
}

fn parse_vertex(s: &str) -> std::result::Result<Vertex, String> {
    s.parse().map_err(|_| format!("invalid vertex `{s}`"))
}
