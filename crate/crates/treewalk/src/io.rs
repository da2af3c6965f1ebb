//! Tree text files: line 1 holds the vertex count, then one `u v` edge
//! per line, space separated, each line ending in a single line feed.

use std::fs;
use std::path::Path;

use treewalk_core::Tree;

use crate::CliError;

pub fn read_tree(path: &Path) -> Result<Tree, CliError> {
    let name = path.display();
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::computation(format!("{name}: {e}")))?;
    let mut lines = text.lines().enumerate();
    let (_, first) = lines
        .next()
        .ok_or_else(|| CliError::computation(format!("{name}: empty file")))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| CliError::computation(format!("{name}:1: expected a vertex count")))?;
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let edge = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => u.parse().ok().zip(v.parse().ok()),
            _ => None,
        };
        let (u, v) = edge.ok_or_else(|| {
            CliError::computation(format!("{name}:{}: expected an edge \"u v\"", idx + 1))
        })?;
        edges.push((u, v));
    }
    Tree::build(n, &edges).map_err(|e| CliError::computation(format!("{name}: {e}")))
}

pub fn render_tree(t: &Tree) -> String {
    let mut out = format!("{}\n", t.n());
    for &(u, v) in t.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
