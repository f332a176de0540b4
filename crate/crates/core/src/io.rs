//! Graph file formats.
//!
//! Edge list: a header line `n m`, then one line `u v` per edge with 1-based
//! endpoints, `u < v`, sorted lexicographically.
//!
//! DIMACS: a header `p edge n m`, then `e u v` lines in the same order.
//! Lines starting with `c` are comments and are skipped when parsing.

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::host_tree::HostTree;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::invalid(format!("unknown graph format `{other}`"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Dimacs => "dimacs",
        })
    }
}

pub fn write_graph<W: Write>(graph: &Graph, format: GraphFormat, out: &mut W) -> std::io::Result<()> {
    match format {
        GraphFormat::EdgeList => writeln!(out, "{} {}", graph.n(), graph.m())?,
        GraphFormat::Dimacs => writeln!(out, "p edge {} {}", graph.n(), graph.m())?,
    }
    let prefix = match format {
        GraphFormat::EdgeList => "",
        GraphFormat::Dimacs => "e ",
    };
    for (u, v) in graph.edges() {
        writeln!(out, "{prefix}{} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn emit_graph(graph: &Graph, format: GraphFormat, path: &Path) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_graph(graph, format, &mut out)?;
    out.flush()?;
    Ok(())
}

/// Writes a host tree as an edge-list file (edges sorted, 1-based).
pub fn emit_tree(tree: &HostTree, format: GraphFormat, path: &Path) -> Result<()> {
    let graph = Graph::from_edges(tree.n(), tree.edges())?;
    emit_graph(&graph, format, path)
}

pub fn parse_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let file = File::open(path)?;
    read_graph(BufReader::new(file), format)
}

pub fn parse_graph_str(text: &str, format: GraphFormat) -> Result<Graph> {
    read_graph(text.as_bytes(), format)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>> {
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>()
                .map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))
        })
        .collect()
}

pub fn read_graph<R: BufRead>(reader: R, format: GraphFormat) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut last_line = 0;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if format == GraphFormat::Dimacs && fields[0] == "c" {
            continue;
        }
        let values = match (format, header.is_some()) {
            (GraphFormat::EdgeList, _) => numbers(lineno, &fields)?,
            (GraphFormat::Dimacs, false) => {
                if fields.len() != 4 || fields[0] != "p" || fields[1] != "edge" {
                    return Err(parse_err(lineno, "expected `p edge <n> <m>`"));
                }
                numbers(lineno, &fields[2..])?
            }
            (GraphFormat::Dimacs, true) => {
                if fields[0] != "e" {
                    return Err(parse_err(lineno, "expected `e <u> <v>`"));
                }
                numbers(lineno, &fields[1..])?
            }
        };
        if values.len() != 2 {
            return Err(parse_err(lineno, format!("expected 2 numbers, found {}", values.len())));
        }
        let (a, b) = (values[0], values[1]);
        let Some((n, m)) = header else {
            header = Some((a, b));
            edges.reserve(b.min(1 << 24));
            continue;
        };
        if a == 0 || b == 0 || a > n || b > n {
            return Err(parse_err(lineno, format!("endpoint out of range 1..={n}")));
        }
        if a == b {
            return Err(parse_err(lineno, format!("self-loop at vertex {a}")));
        }
        let key = (a.min(b) - 1, a.max(b) - 1);
        if !seen.insert(key) {
            return Err(parse_err(lineno, format!("repeated edge {{{a}, {b}}}")));
        }
        if edges.len() == m {
            return Err(parse_err(lineno, format!("more than the {m} edges declared in the header")));
        }
        edges.push(key);
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing header"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(graph: &Graph, format: GraphFormat) -> String {
        let mut buf = Vec::new();
        write_graph(graph, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn triangle_edge_list() {
        assert_eq!(render(&Graph::complete(3), GraphFormat::EdgeList), "3 3\n1 2\n1 3\n2 3\n");
        assert_eq!(render(&Graph::empty(2), GraphFormat::EdgeList), "2 0\n");
        assert_eq!(render(&Graph::path(2), GraphFormat::Dimacs), "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn rejects_malformed_input() {
        let err = parse_graph_str("2 1\n1 1\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_graph_str("4 5\n1 2\n2 3\n3 4\n1 4\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");
        let err = parse_graph_str("3 2\n1 2\n2 1\n", GraphFormat::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        assert!(parse_graph_str("3 1\n1 4\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph_str("3 1\n1 x\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph_str("", GraphFormat::EdgeList).is_err());
        assert!(parse_graph_str("p edge 2 1\n1 2\n", GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn dimacs_comments_are_skipped() {
        let g = parse_graph_str("c hello\np edge 3 2\nc mid\ne 2 3\ne 1 2\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn format_names() {
        assert_eq!("dimacs".parse::<GraphFormat>().unwrap(), GraphFormat::Dimacs);
        assert_eq!(GraphFormat::EdgeList.to_string(), "edgelist");
        assert!("gml".parse::<GraphFormat>().is_err());
    }
}
