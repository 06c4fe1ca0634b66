//! Plain-text edge lists: one `u v` pair of decimal ids per line, `#` starts
//! a comment line, blank lines are ignored.

use std::fmt::Write as _;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Parses an edge list; the vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut id = || -> Result<VertexId> {
            fields
                .next()
                .ok_or_else(|| Error::Parse(format!("line {}: expected two ids", lineno + 1)))?
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
        };
        let (u, v) = (id()?, id()?);
        if fields.next().is_some() {
            return Err(Error::Parse(format!(
                "line {}: trailing fields",
                lineno + 1
            )));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {} edges {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::grid_graph;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n0 1\n\n1 2\n  2 0  \n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_edge_list("0 x\n").is_err());
        assert!(parse_edge_list("0\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert_eq!(parse_edge_list("4 4\n"), Err(Error::SelfLoop(4)));
    }

    #[test]
    fn round_trip() {
        let g = grid_graph(3, 3);
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_edge_list(&back), text);
    }
}
