//! Plain edge lists: one `u v` pair per line, `#` starts a comment, blank
//! lines are ignored. Endpoints are 0-based ids; if any endpoint is not an
//! integer, every endpoint is read as a vertex name and ids are assigned in
//! order of first appearance.

use std::collections::HashMap;
use std::fmt::Write;

use super::{Graph, Neighborhood, ParseError, Tree};

/// A parsed edge list, with vertex names when the input used them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

pub fn parse(text: &str) -> Result<EdgeList, ParseError> {
    let mut pairs: Vec<(usize, &str, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => pairs.push((i + 1, u, v)),
            _ => {
                return Err(ParseError::EdgeList {
                    line: i + 1,
                    message: format!("expected two endpoints, got {line:?}"),
                })
            }
        }
    }
    if pairs.is_empty() {
        return Err(ParseError::EdgeList { line: 0, message: "no edges".into() });
    }

    let numeric = pairs.iter().all(|(_, u, v)| u.parse::<usize>().is_ok() && v.parse::<usize>().is_ok());
    let mut edges = Vec::with_capacity(pairs.len());
    let labels = if numeric {
        for &(_, u, v) in &pairs {
            edges.push((u.parse::<usize>().unwrap(), v.parse::<usize>().unwrap()));
        }
        None
    } else {
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let mut names = Vec::new();
        for &(_, u, v) in &pairs {
            let mut endpoints = [0; 2];
            for (slot, name) in endpoints.iter_mut().zip([u, v]) {
                *slot = *ids.entry(name).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                });
            }
            edges.push((endpoints[0], endpoints[1]));
        }
        Some(names)
    };
    let order = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let graph = Graph::from_edges(order, edges.iter().copied()).map_err(|e| {
        // point at the first line touching the offending edge
        let line = match &e {
            super::GraphError::SelfLoop(x) => pairs.iter().zip(&edges).find(|(_, &(u, v))| u == *x && v == *x),
            super::GraphError::DuplicateEdge(a, b) => pairs
                .iter()
                .zip(&edges)
                .filter(|(_, &(u, v))| (u.min(v), u.max(v)) == (*a, *b))
                .nth(1),
            _ => None,
        }
        .map(|(p, _)| p.0);
        match line {
            Some(line) => ParseError::EdgeList { line, message: e.to_string() },
            None => ParseError::Graph(e),
        }
    })?;
    Ok(EdgeList { graph, labels })
}

/// Parses an edge list that must describe a tree.
pub fn parse_tree(text: &str) -> Result<Tree, ParseError> {
    let EdgeList { graph, labels } = parse(text)?;
    let tree = Tree::try_from(graph)?;
    Ok(match labels {
        Some(labels) => tree.with_labels(labels)?,
        None => tree,
    })
}

pub fn write<G: Neighborhood>(g: &G) -> String {
    let mut out = String::new();
    for u in 0..g.order() {
        for &v in g.neighbors(u) {
            if u < v {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
    }
    out
}
