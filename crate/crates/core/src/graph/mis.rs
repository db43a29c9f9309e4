use rayon::prelude::*;
use serde::Serialize;

use super::{induced_subgraph, Graph, GraphError, HARD_VERTEX_LIMIT};

pub const DEFAULT_MIS_CAP: usize = 40;

/// Independent kissing number together with the neighborhood that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KissingReport {
    pub zeta: usize,
    /// `None` only for the empty graph.
    pub witness_vertex: Option<usize>,
    pub witness_independent_set: Vec<usize>,
}

fn lowest(m: u64) -> usize {
    m.trailing_zeros() as usize
}

/// Number of cliques in a greedy clique cover of `p`; bounds the MIS of `G[p]`.
fn clique_cover_bound(adj: &[u64], mut p: u64) -> u32 {
    let mut cliques = 0;
    while p != 0 {
        let v = lowest(p);
        p &= !(1 << v);
        let mut cand = p & adj[v];
        while cand != 0 {
            let u = lowest(cand);
            p &= !(1 << u);
            cand &= adj[u] & !(1 << u);
        }
        cliques += 1;
    }
    cliques
}

struct Search<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u32,
}

impl Search<'_> {
    // Include-first in index order: among maximum sets the first one reached is
    // the lexicographically smallest, and pruning only discards branches that
    // cannot beat it strictly.
    fn run(&mut self, cur: u64, p: u64) {
        let size = cur.count_ones();
        if p == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = cur;
            }
            return;
        }
        if size + p.count_ones() <= self.best_size
            || size + clique_cover_bound(self.adj, p) <= self.best_size
        {
            return;
        }
        let v = lowest(p);
        self.run(cur | (1 << v), p & !(1 << v) & !self.adj[v]);
        self.run(cur, p & !(1 << v));
    }
}

/// Maximum independent set, lexicographically smallest among the maximum ones,
/// with the default cap.
pub fn max_independent_set(g: &Graph) -> Result<Vec<usize>, GraphError> {
    max_independent_set_with_cap(g, DEFAULT_MIS_CAP)
}

pub fn max_independent_set_with_cap(g: &Graph, cap: usize) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    let cap = cap.min(HARD_VERTEX_LIMIT);
    if n > cap {
        return Err(GraphError::CapExceeded { n, cap });
    }
    let adj = g.masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Search {
        adj: &adj,
        best: 0,
        best_size: 0,
    };
    s.run(0, all);
    Ok((0..n).filter(|&v| s.best >> v & 1 == 1).collect())
}

pub fn independent_kissing_number(g: &Graph) -> Result<KissingReport, GraphError> {
    independent_kissing_number_with_cap(g, DEFAULT_MIS_CAP)
}

/// `max_v MIS(G[N(v)])`; every neighborhood must fit under `cap`. Ties go to
/// the smallest witness vertex.
pub fn independent_kissing_number_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<KissingReport, GraphError> {
    let per_vertex: Vec<Vec<usize>> = (0..g.n())
        .into_par_iter()
        .map(|v| {
            let nbhd = g.neighbors(v);
            let h = induced_subgraph(g, nbhd)?;
            let local = max_independent_set_with_cap(&h, cap)?;
            Ok(local.into_iter().map(|k| nbhd[k]).collect())
        })
        .collect::<Result<_, GraphError>>()?;
    let mut report = KissingReport {
        zeta: 0,
        witness_vertex: None,
        witness_independent_set: vec![],
    };
    for (v, set) in per_vertex.into_iter().enumerate() {
        if report.witness_vertex.is_none() || set.len() > report.zeta {
            report = KissingReport {
                zeta: set.len(),
                witness_vertex: Some(v),
                witness_independent_set: set,
            };
        }
    }
    Ok(report)
}
