//! DIMACS `edge` format: `c` comments, one `p edge N M` line, then `e u v`
//! lines with 1-based vertices.

use std::fmt::Write;

use anyhow::{anyhow, bail, Context, Result};
use stabctx_core::graph::Graph;

/// Writes `g`, with `comments` and one `c label` line per vertex.
pub fn write_dimacs(g: &Graph, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        writeln!(s, "c {c}").unwrap();
    }
    for v in 0..g.n() {
        writeln!(s, "c label {} {}", v + 1, g.label(v)).unwrap();
    }
    writeln!(s, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (a, b) in g.edges() {
        writeln!(s, "e {} {}", a + 1, b + 1).unwrap();
    }
    s
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut declared = 0usize;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        let mut it = line.split_whitespace();
        let ctx = || format!("line {}", lineno + 1);
        match it.next() {
            None => {}
            Some("c") => {
                if it.next() == Some("label") {
                    let v: usize = it.next().ok_or_else(|| anyhow!("missing vertex")).with_context(ctx)?.parse().with_context(ctx)?;
                    labels.push((v, it.collect::<Vec<_>>().join(" ")));
                }
            }
            Some("p") => {
                if n.is_some() {
                    bail!("{}: second problem line", ctx());
                }
                let kind = it.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    bail!("{}: unknown problem type '{kind}'", ctx());
                }
                n = Some(it.next().ok_or_else(|| anyhow!("{}: missing vertex count", ctx()))?.parse::<usize>().with_context(ctx)?);
                declared = it.next().ok_or_else(|| anyhow!("{}: missing edge count", ctx()))?.parse().with_context(ctx)?;
            }
            Some("e") => {
                let n = n.ok_or_else(|| anyhow!("{}: edge before problem line", ctx()))?;
                let mut vertex = || -> Result<usize> {
                    let v: usize = it.next().ok_or_else(|| anyhow!("missing endpoint"))?.parse()?;
                    if v == 0 || v > n {
                        bail!("vertex {v} out of range 1..={n}");
                    }
                    Ok(v - 1)
                };
                let a = vertex().with_context(ctx)?;
                let b = vertex().with_context(ctx)?;
                if a == b {
                    bail!("{}: self-loop on {}", ctx(), a + 1);
                }
                edges.push((a, b));
            }
            Some(other) => bail!("{}: unknown line type '{other}'", ctx()),
        }
    }
    let n = n.ok_or_else(|| anyhow!("no problem line"))?;
    let mut g = Graph::from_edges(n, &edges);
    if g.edge_count() != declared && edges.len() != declared {
        bail!("problem line declares {declared} edges, found {}", g.edge_count());
    }
    if !labels.is_empty() {
        let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for (v, l) in labels {
            if v == 0 || v > n {
                bail!("label for vertex {v} out of range");
            }
            names[v - 1] = l;
        }
        g = g.with_labels(names);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::pan(5).with_labels((0..6).map(|i| format!("v{i}")).collect());
        let text = write_dimacs(&g, &["pan".to_string()]);
        let h = parse_dimacs(&text).unwrap();
        assert!(g.same_edges(&h));
        assert_eq!(h.label(3), "v3");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(parse_dimacs("p edge 3 5\ne 1 2\n").is_err());
        assert!(parse_dimacs("x\n").is_err());
    }
}
