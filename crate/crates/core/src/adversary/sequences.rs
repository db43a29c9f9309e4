use serde::Serialize;

use super::{verify_config, AdversaryError, KissingConfig, Verdict};
use crate::geometry::DEFAULT_TOLERANCE;
use crate::graph::Graph;
use crate::online::{ArrivalSequence, Model};

/// The independents one by one, then the core.
pub fn star_sequence(cfg: &KissingConfig) -> Result<ArrivalSequence, AdversaryError> {
    if let Verdict::Invalid(reason) = verify_config(cfg, false) {
        return Err(AdversaryError::InvalidConfig(reason));
    }
    let g = cfg.intersection_graph(DEFAULT_TOLERANCE)?;
    let order: Vec<usize> = (0..g.n()).collect();
    Ok(ArrivalSequence::from_graph(
        &g,
        &order,
        Model::Classical,
        None,
    )?)
}

/// `W_k`: rim cycle `0..k` and core `k` adjacent to every rim vertex.
pub fn wheel_graph(k: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|v| (v, (v + 1) % k)).collect();
    edges.extend((0..k).map(|v| (v, k)));
    Graph::from_edges(k + 1, &edges).expect("valid wheel")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycloneOrder {
    pub k: usize,
    pub t: usize,
    pub sequence: Vec<usize>,
}

/// `v_0..v_t`, then `v_{k-1}` down to `v_{t+1}`, then the core `v_k`.
pub fn cyclone_sequence(k: usize, t: usize) -> Result<CycloneOrder, AdversaryError> {
    if k < 4 {
        return Err(AdversaryError::OutOfRange(format!(
            "wheel size k = {k} < 4"
        )));
    }
    if t == 0 || t >= k - 1 {
        return Err(AdversaryError::OutOfRange(format!(
            "split t = {t} outside 0 < t < {}",
            k - 1
        )));
    }
    let mut sequence: Vec<usize> = (0..=t).collect();
    sequence.extend((t + 1..k).rev());
    sequence.push(k);
    Ok(CycloneOrder { k, t, sequence })
}

impl CycloneOrder {
    /// Relaxed-connected arrivals revealing the abstract wheel `W_k`.
    pub fn arrival_sequence(&self) -> ArrivalSequence {
        self.arrivals_on(&wheel_graph(self.k))
            .expect("cyclone order keeps W_k connected")
    }

    /// The same order over any graph whose vertex `v_i` is index `i`.
    pub fn arrivals_on(&self, g: &Graph) -> Result<ArrivalSequence, AdversaryError> {
        Ok(ArrivalSequence::from_graph(
            g,
            &self.sequence,
            Model::RelaxedConnected,
            None,
        )?)
    }
}
