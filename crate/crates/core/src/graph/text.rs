//! Adjacency-list text format: one `id: neighbor neighbor ...` line per vertex.
//! Neighbors may be separated by spaces or commas; `#` starts a comment. Edges
//! only need to be listed on one side.

use std::fmt::Write;

use super::{Graph, GraphError};

pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let ns: Vec<String> = g.neighbors(v).iter().map(usize::to_string).collect();
        writeln!(out, "{v}: {}", ns.join(" ")).unwrap();
    }
    out
}

pub fn parse_adjacency_list(text: &str) -> Result<Graph, GraphError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GraphError::Parse { line: i + 1, msg };
        let (id, rest) = line
            .split_once(':')
            .ok_or_else(|| err("missing ':'".into()))?;
        let id: usize = id
            .trim()
            .parse()
            .map_err(|e| err(format!("bad vertex id: {e}")))?;
        let ns = rest
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| err(format!("bad neighbor {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        n = ns.iter().fold(n.max(id + 1), |m, &u| m.max(u + 1));
        rows.push((id, ns));
    }
    let mut g = Graph::new(n);
    for (v, ns) in rows {
        for u in ns {
            g.add_edge(v, u)?;
        }
    }
    Ok(g)
}
