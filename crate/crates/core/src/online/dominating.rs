use serde::Serialize;

use super::{grow, Arrival, OnlineError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DsDecision {
    Accepted,
    Rejected,
}

/// Accepts an arriving vertex iff no accepted vertex dominates it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GreedyDs {
    in_a: Vec<bool>,
    a: Vec<usize>,
}

impl GreedyDs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, arrival: &Arrival) -> DsDecision {
        grow(&mut self.in_a, arrival.vertex, false);
        if arrival
            .neighbors
            .iter()
            .any(|&u| self.in_a.get(u).copied().unwrap_or(false))
        {
            return DsDecision::Rejected;
        }
        self.in_a[arrival.vertex] = true;
        self.a.push(arrival.vertex);
        DsDecision::Accepted
    }

    /// Accepted vertices in arrival order.
    pub fn solution(&self) -> &[usize] {
        &self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CdsDecision {
    NoChange,
    AddedSelf,
    AddedSelfAndNeighbor(usize),
}

/// Connected dominating set in the relaxed model: an undominated arrival joins
/// `A1` and pulls its earliest-arrived neighbor into `A2`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GreedyCds {
    in_a: Vec<bool>,
    arrival_index: Vec<usize>,
    arrived: usize,
    a1: Vec<usize>,
    a2: Vec<usize>,
}

impl GreedyCds {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, arrival: &Arrival) -> Result<CdsDecision, OnlineError> {
        let v = arrival.vertex;
        if self.arrived > 0 && arrival.neighbors.is_empty() {
            return Err(OnlineError::Disconnected(v));
        }
        grow(&mut self.in_a, v, false);
        grow(&mut self.arrival_index, v, usize::MAX);
        self.arrival_index[v] = self.arrived;
        self.arrived += 1;
        if arrival.neighbors.iter().any(|&u| self.in_a[u]) {
            return Ok(CdsDecision::NoChange);
        }
        self.in_a[v] = true;
        self.a1.push(v);
        match arrival
            .neighbors
            .iter()
            .copied()
            .min_by_key(|&u| self.arrival_index[u])
        {
            None => Ok(CdsDecision::AddedSelf),
            Some(u) => {
                self.in_a[u] = true;
                self.a2.push(u);
                Ok(CdsDecision::AddedSelfAndNeighbor(u))
            }
        }
    }

    pub fn a1(&self) -> &[usize] {
        &self.a1
    }

    pub fn a2(&self) -> &[usize] {
        &self.a2
    }

    pub fn solution_size(&self) -> usize {
        self.a1.len() + self.a2.len()
    }

    /// `A1` followed by `A2`, each in insertion order.
    pub fn solution(&self) -> Vec<usize> {
        self.a1.iter().chain(&self.a2).copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, is_connected, Graph};
    use crate::online::{ArrivalSequence, Model};
    use proptest::prelude::*;

    fn arr(vertex: usize, neighbors: &[usize]) -> Arrival {
        Arrival {
            vertex,
            neighbors: neighbors.to_vec(),
            width: None,
        }
    }

    #[test]
    fn greedy_ds_examples() {
        let mut ds = GreedyDs::new();
        assert_eq!(ds.step(&arr(0, &[])), DsDecision::Accepted);

        // five independent vertices, then a core adjacent to all
        let mut ds = GreedyDs::new();
        for v in 0..5 {
            assert_eq!(ds.step(&arr(v, &[])), DsDecision::Accepted);
        }
        assert_eq!(ds.step(&arr(5, &[0, 1, 2, 3, 4])), DsDecision::Rejected);
        assert_eq!(ds.solution().len(), 5);

        let mut ds = GreedyDs::new();
        ds.step(&arr(1, &[]));
        assert_eq!(ds.step(&arr(0, &[1])), DsDecision::Rejected);
        assert_eq!(ds.step(&arr(2, &[1])), DsDecision::Rejected);
        assert_eq!(ds.solution(), &[1]);
    }

    #[test]
    fn greedy_cds_examples() {
        let mut cds = GreedyCds::new();
        assert_eq!(cds.step(&arr(0, &[])), Ok(CdsDecision::AddedSelf));
        assert_eq!(cds.step(&arr(1, &[0])), Ok(CdsDecision::NoChange));
        assert_eq!(cds.step(&arr(2, &[])), Err(OnlineError::Disconnected(2)));

        // path 0-1-2 arriving 0, 1, then 2 attached to 1: 2 is undominated
        let mut cds = GreedyCds::new();
        cds.step(&arr(0, &[])).unwrap();
        cds.step(&arr(1, &[0])).unwrap();
        assert_eq!(
            cds.step(&arr(2, &[1])),
            Ok(CdsDecision::AddedSelfAndNeighbor(1))
        );
        assert_eq!((cds.a1(), cds.a2()), (&[0, 2][..], &[1][..]));
    }

    #[test]
    fn neighbor_choice_is_earliest_arrival() {
        let mut cds = GreedyCds::new();
        cds.step(&arr(0, &[])).unwrap();
        cds.step(&arr(2, &[0])).unwrap();
        cds.step(&arr(1, &[0])).unwrap();
        // 2 arrived before 1, so it wins despite the larger id
        assert_eq!(
            cds.step(&arr(3, &[1, 2])),
            Ok(CdsDecision::AddedSelfAndNeighbor(2))
        );
    }

    fn arb_connected_sequence() -> impl Strategy<Value = ArrivalSequence> {
        (1usize..14, prop::collection::vec(any::<u32>(), 40)).prop_map(|(n, r)| {
            // vertex i attaches to a random earlier vertex, plus a few extra edges
            let mut g = Graph::new(n);
            for i in 1..n {
                g.add_edge(i, r[i] as usize % i).unwrap();
                let extra = r[i + 13] as usize % (i + 1);
                if extra < i {
                    g.add_edge(i, extra).unwrap();
                }
            }
            let order: Vec<usize> = (0..n).collect();
            ArrivalSequence::from_graph(&g, &order, Model::RelaxedConnected, None).unwrap()
        })
    }

    proptest! {
        #[test]
        fn ds_stays_independent_and_dominating(seq in arb_connected_sequence()) {
            let g = seq.graph();
            let mut ds = GreedyDs::new();
            for (i, a) in seq.arrivals.iter().enumerate() {
                ds.step(a);
                let prefix = induced_subgraph(&g, &seq.order()[..=i]).unwrap();
                let local: Vec<usize> = ds
                    .solution()
                    .iter()
                    .map(|v| prefix.labels().iter().position(|x| x == v).unwrap())
                    .collect();
                prop_assert!(prefix.is_independent(&local));
                prop_assert!(prefix.dominates(&local));
            }
        }

        #[test]
        fn cds_invariants_after_every_arrival(seq in arb_connected_sequence()) {
            let g = seq.graph();
            let mut cds = GreedyCds::new();
            for (i, a) in seq.arrivals.iter().enumerate() {
                cds.step(a).unwrap();
                prop_assert!(g.is_independent(cds.a1()));
                prop_assert!(cds.a1().len() >= cds.a2().len());
                prop_assert!(cds.a1().iter().all(|v| !cds.a2().contains(v)));
                let prefix = induced_subgraph(&g, &seq.order()[..=i]).unwrap();
                let local: Vec<usize> = cds
                    .solution()
                    .iter()
                    .map(|v| prefix.labels().iter().position(|x| x == v).unwrap())
                    .collect();
                prop_assert!(prefix.dominates(&local));
                prop_assert!(is_connected(&induced_subgraph(&prefix, &local).unwrap()));
            }
        }

        #[test]
        fn runs_are_deterministic(seq in arb_connected_sequence()) {
            let run = || {
                let mut cds = GreedyCds::new();
                let mut ds = GreedyDs::new();
                for a in &seq.arrivals {
                    cds.step(a).unwrap();
                    ds.step(a);
                }
                (cds, ds)
            };
            prop_assert_eq!(run(), run());
        }
    }
}
