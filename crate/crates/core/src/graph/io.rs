use std::fmt::Write as _;

use super::{MultiGraph, VertexId};
use crate::error::{Error, Result};

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    let value: i64 = tok.parse().map_err(|_| Error::Parse { line, msg: format!("{what} `{tok}` is not an integer") })?;
    usize::try_from(value).map_err(|_| Error::Parse { line, msg: format!("{what} must be non-negative, got {value}") })
}

/// Reads the edge-list format: a header line `n m`, then `m` lines `u v`.
/// `#` starts a comment; blank lines are ignored.
pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut graph: Option<(MultiGraph, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected two integers, found `{content}`") });
        }
        match graph.as_mut() {
            None => {
                let n = parse_count(toks[0], line, "vertex count")?;
                let m = parse_count(toks[1], line, "edge count")?;
                graph = Some((MultiGraph::new(n), m));
            }
            Some((g, m)) => {
                if g.edge_count() == *m {
                    return Err(Error::Parse { line, msg: format!("more than the declared {m} edges") });
                }
                let u = parse_count(toks[0], line, "endpoint")?;
                let v = parse_count(toks[1], line, "endpoint")?;
                let n = g.vertex_count();
                if u >= n || v >= n {
                    return Err(Error::Parse { line, msg: format!("endpoint out of range for n={n}") });
                }
                g.add_edge(VertexId(u), VertexId(v));
            }
        }
    }
    let (g, m) = graph.ok_or(Error::Parse { line: 0, msg: "missing `n m` header".into() })?;
    if g.edge_count() != m {
        return Err(Error::Parse { line: text.lines().count(), msg: format!("declared {m} edges but found {}", g.edge_count()) });
    }
    Ok(g)
}

/// Writes `g` in the edge-list format, preceded by `# `-prefixed comment lines.
pub fn write_graph(g: &MultiGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        writeln!(out, "{} {}", a.0, b.0).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    #[test]
    fn triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.endpoints(EdgeId(2)), (VertexId(2), VertexId(0)));
    }

    #[test]
    fn parallel_and_loop() {
        let g = parse_graph("2 2\n0 1\n0 1").unwrap();
        assert_eq!(g.incident(VertexId(0)).len(), 2);
        let g = parse_graph("1 1\n0 0").unwrap();
        assert_eq!(g.degree(VertexId(0)), 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\n2 1 # counts\n0 1 # edge\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_graph("2 1\n0 5").unwrap_err(), Error::Parse { line: 2, msg: "endpoint out of range for n=2".into() });
        assert!(matches!(parse_graph("-1 0"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("2 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n0 1 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 1\n1 0"), Err(Error::Parse { line: 3, .. })));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn round_trip() {
        let g = parse_graph("4 5\n0 1\n1 2\n2 2\n3 0\n0 1").unwrap();
        let text = write_graph(&g, &["sample".into()]);
        assert!(text.starts_with("# sample\n4 5\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
