use super::{Graph, GraphBuilder, GraphError};

/// Parses one `u v` pair per line (0-indexed). Blank lines and lines
/// starting with `#` are ignored. The vertex count is one more than the
/// largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| GraphError::EdgeList {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!(
                "expected two vertex indices, found {:?}",
                line
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("{:?} is not a vertex index", s)))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    let mut b = GraphBuilder::new(n);
    for (u, v) in edges {
        b.add_edge_unchecked(u, v);
    }
    Ok(b.build())
}

pub fn emit_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n0 1\n\n1 2\n 2 0 \n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_edge_list("0 1\n1 x\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("3 3\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
    }
}
