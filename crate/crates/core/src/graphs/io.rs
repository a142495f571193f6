//! Edge-list text format: one `u v` pair of 0-based ids per line, `#`
//! comment lines, blank lines ignored.

use std::collections::HashSet;

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| GraphError::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!("expected `u v`, got `{line}`")));
        }
        let id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(format!("`{s}` is not a vertex id")))
        };
        let (u, v) = (id(fields[0])?, id(fields[1])?);
        if u == v {
            return Err(parse_err(format!("loop edge at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(format!("duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(&edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n0 1\n\n1 2\n  2 0  \n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_edge_list("0 1\n1 x\n"),
            Err(GraphError::Parse { line: 2, message: "`x` is not a vertex id".into() })
        );
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n0 0\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\n# x\n1 0\n"), Err(GraphError::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("0 1\n2 3\n"), Err(GraphError::Disconnected { .. })));
    }
}
