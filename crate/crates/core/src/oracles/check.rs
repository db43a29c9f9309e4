//! Witness validators, written independently of the search code.

use super::{OracleResult, Problem, Witness};
use crate::graph::{induced_subgraph, is_connected, Graph};

pub fn is_dominating_set(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| v < g.n()) && g.dominates(set)
}

pub fn is_independent_set(g: &Graph, set: &[usize]) -> bool {
    set.iter().all(|&v| v < g.n()) && g.is_independent(set)
}

/// Dominating in every component and connected inside each component.
pub fn is_connected_dominating_set(g: &Graph, set: &[usize]) -> bool {
    if !is_dominating_set(g, set) {
        return false;
    }
    crate::graph::components(g).iter().all(|comp| {
        let part: Vec<usize> = set.iter().copied().filter(|v| comp.contains(v)).collect();
        induced_subgraph(g, &part)
            .map(|h| h.n() > 0 && is_connected(&h))
            .unwrap_or(false)
    })
}

pub fn is_proper_coloring(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c >= 1)
        && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Checks that the witness certifies the reported value.
pub fn validate(problem: Problem, g: &Graph, r: &OracleResult) -> Result<(), String> {
    match (problem, &r.witness) {
        (Problem::Chi, Witness::Coloring(c)) => {
            if !is_proper_coloring(g, c) {
                return Err("coloring is not proper".into());
            }
            let mut distinct = c.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() != r.value {
                return Err(format!(
                    "coloring uses {} colors, value is {}",
                    distinct.len(),
                    r.value
                ));
            }
            Ok(())
        }
        (Problem::Chi, Witness::Set(_)) => Err("chromatic number needs a coloring witness".into()),
        (_, Witness::Coloring(_)) => Err("set problem needs a vertex-set witness".into()),
        (p, Witness::Set(s)) => {
            if s.len() != r.value {
                return Err(format!(
                    "witness has {} vertices, value is {}",
                    s.len(),
                    r.value
                ));
            }
            if !s.windows(2).all(|w| w[0] < w[1]) {
                return Err("witness is not a sorted set".into());
            }
            if !is_dominating_set(g, s) {
                return Err("witness does not dominate".into());
            }
            if p == Problem::Mids && !is_independent_set(g, s) {
                return Err("witness is not independent".into());
            }
            if p == Problem::Mcds && !is_connected_dominating_set(g, s) {
                return Err("witness is not connected".into());
            }
            Ok(())
        }
    }
}
