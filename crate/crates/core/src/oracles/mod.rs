//! Exact offline optima used as ground truth: minimum (independent, connected)
//! dominating sets and the chromatic number.
//!
//! All searches run on 64-bit vertex masks and refuse graphs above a cap
//! (default 24, overridable through `GEOKISS_ORACLE_CAP`). Witnesses are the
//! lexicographically smallest optimal ones.

pub mod check;
mod coloring;
mod domination;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, HARD_VERTEX_LIMIT};

pub use coloring::{chromatic_number, chromatic_number_with_cap};
pub use domination::{
    min_connected_dominating_set, min_connected_dominating_set_with_cap, min_dominating_set,
    min_dominating_set_with_cap, min_independent_dominating_set,
    min_independent_dominating_set_with_cap,
};

pub const DEFAULT_ORACLE_CAP: usize = 24;
pub const ORACLE_CAP_ENV: &str = "GEOKISS_ORACLE_CAP";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("oracle cap exceeded: {n} vertices > cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Cap from the environment, falling back to the default; never above 64.
pub fn oracle_cap() -> usize {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
        .min(HARD_VERTEX_LIMIT)
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    let cap = cap.min(HARD_VERTEX_LIMIT);
    if g.n() > cap {
        Err(OracleError::CapExceeded { n: g.n(), cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Mds,
    Mids,
    Mcds,
    Chi,
}

impl Problem {
    pub const ALL: [Problem; 4] = [Problem::Mds, Problem::Mids, Problem::Mcds, Problem::Chi];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Mds => "mds",
            Problem::Mids => "mids",
            Problem::Mcds => "mcds",
            Problem::Chi => "chi",
        }
    }

    pub fn parse(s: &str) -> Option<Problem> {
        Problem::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn solve(self, g: &Graph) -> Result<OracleResult, OracleError> {
        self.solve_with_cap(g, oracle_cap())
    }

    pub fn solve_with_cap(self, g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
        match self {
            Problem::Mds => min_dominating_set_with_cap(g, cap),
            Problem::Mids => min_independent_dominating_set_with_cap(g, cap),
            Problem::Mcds => min_connected_dominating_set_with_cap(g, cap),
            Problem::Chi => chromatic_number_with_cap(g, cap),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// Sorted vertex set.
    Set(Vec<usize>),
    /// Color of each vertex, starting at 1.
    Coloring(Vec<u32>),
}

impl Witness {
    /// Space-separated rendering used in CSV output.
    pub fn render(&self) -> String {
        let parts: Vec<String> = match self {
            Witness::Set(s) => s.iter().map(ToString::to_string).collect(),
            Witness::Coloring(c) => c.iter().map(ToString::to_string).collect(),
        };
        parts.join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
}

impl OracleResult {
    pub fn set(&self) -> &[usize] {
        match &self.witness {
            Witness::Set(s) => s,
            Witness::Coloring(_) => &[],
        }
    }
}

fn mask_to_vec(m: u64) -> Vec<usize> {
    (0..64).filter(|&v| m >> v & 1 == 1).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
