//! Online algorithms under vertex arrival.
//!
//! Each arrival reveals a vertex together with its edges to earlier vertices.
//! Algorithms see nothing else: no vertex count, no kissing number, no width
//! bound.

mod coloring;
mod dominating;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use coloring::{layer_index, FirstFit, Layer, RelaxedFirstFit};
pub use dominating::{CdsDecision, DsDecision, GreedyCds, GreedyDs};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OnlineError {
    #[error("arrival {position}: vertex {vertex} is not a fresh id below {n}")]
    BadVertex {
        position: usize,
        vertex: usize,
        n: usize,
    },
    #[error("vertex {vertex} lists {neighbor}, which has not arrived")]
    NotArrived { vertex: usize, neighbor: usize },
    #[error("vertex {0} arrived without a neighbor; the revealed graph is disconnected")]
    Disconnected(usize),
    #[error("vertex {0} has no width")]
    MissingWidth(usize),
    #[error("vertex {vertex} has width {width} < 1")]
    WidthBelowOne { vertex: usize, width: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// Irrevocable accept/reject of the arriving vertex only.
    Classical,
    /// Earlier vertices may be added late; the revealed graph stays connected.
    RelaxedConnected,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Classical => "classical",
            Model::RelaxedConnected => "relaxed_connected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Arrival {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
}

/// Arrivals whose vertex ids are exactly `0..len` in some order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrivalSequence {
    pub model: Model,
    pub arrivals: Vec<Arrival>,
}

impl ArrivalSequence {
    /// Reveals `g` in `order`; `widths[v]`, when given, is attached to `v`.
    pub fn from_graph(
        g: &Graph,
        order: &[usize],
        model: Model,
        widths: Option<&[f64]>,
    ) -> Result<Self, OnlineError> {
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.n() || pos[v] != usize::MAX {
                return Err(OnlineError::BadVertex {
                    position: i,
                    vertex: v,
                    n: g.n(),
                });
            }
            pos[v] = i;
        }
        let arrivals = order
            .iter()
            .enumerate()
            .map(|(i, &v)| Arrival {
                vertex: v,
                neighbors: g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| pos[u] < i)
                    .collect(),
                width: widths.map(|w| w[v]),
            })
            .collect();
        let seq = ArrivalSequence { model, arrivals };
        seq.validate()?;
        Ok(seq)
    }

    pub fn len(&self) -> usize {
        self.arrivals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrivals.is_empty()
    }

    pub fn order(&self) -> Vec<usize> {
        self.arrivals.iter().map(|a| a.vertex).collect()
    }

    pub fn validate(&self) -> Result<(), OnlineError> {
        let n = self.arrivals.len();
        let mut seen = vec![false; n];
        for (i, a) in self.arrivals.iter().enumerate() {
            if a.vertex >= n || seen[a.vertex] {
                return Err(OnlineError::BadVertex {
                    position: i,
                    vertex: a.vertex,
                    n,
                });
            }
            for &u in &a.neighbors {
                if u >= n || !seen[u] {
                    return Err(OnlineError::NotArrived {
                        vertex: a.vertex,
                        neighbor: u,
                    });
                }
            }
            if self.model == Model::RelaxedConnected && i > 0 && a.neighbors.is_empty() {
                return Err(OnlineError::Disconnected(a.vertex));
            }
            seen[a.vertex] = true;
        }
        Ok(())
    }

    /// The fully revealed graph, indexed by vertex id.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(self.arrivals.len());
        for a in &self.arrivals {
            for &u in &a.neighbors {
                g.add_edge(a.vertex, u).expect("validated arrival");
            }
        }
        g
    }
}

fn grow<T: Clone>(v: &mut Vec<T>, idx: usize, fill: T) {
    if v.len() <= idx {
        v.resize(idx + 1, fill);
    }
}
