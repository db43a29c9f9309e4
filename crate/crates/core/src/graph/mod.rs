//! Simple undirected graphs, intersection-graph construction and the
//! independent kissing number.

mod mis;
mod text;

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{contact_with, GeometryError, Shape, DEFAULT_TOLERANCE};

pub use mis::{
    independent_kissing_number, independent_kissing_number_with_cap, max_independent_set,
    max_independent_set_with_cap, KissingReport, DEFAULT_MIS_CAP,
};
pub use text::{parse_adjacency_list, to_adjacency_list};

/// Largest vertex count any bitset-based exact solver accepts.
pub const HARD_VERTEX_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("exact solver cap exceeded: {n} vertices > cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("adjacency list line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Undirected simple graph with sorted adjacency lists.
///
/// `labels[i]` records where vertex `i` came from: the shape index for
/// intersection graphs, the parent vertex for induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Vec<usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: (0..n).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// `K_{1,k}` with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("valid star")
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange(x, n));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Neighborhood bitmasks; requires `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= HARD_VERTEX_LIMIT);
        self.adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn dominates(&self, vs: &[usize]) -> bool {
        let mut seen = vec![false; self.n()];
        for &v in vs {
            seen[v] = true;
            for &u in &self.adj[v] {
                seen[u] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }
}

/// Intersection graph under the default touching tolerance.
pub fn build_intersection_graph(shapes: &[Shape]) -> Result<Graph, GraphError> {
    build_intersection_graph_with(shapes, DEFAULT_TOLERANCE)
}

/// Vertex `i` is adjacent to `j` iff `shapes[i]` and `shapes[j]` intersect.
pub fn build_intersection_graph_with(shapes: &[Shape], tol: f64) -> Result<Graph, GraphError> {
    let n = shapes.len();
    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = Vec::new();
            for j in i + 1..n {
                if contact_with(&shapes[i], &shapes[j], tol)?.intersects() {
                    row.push(j);
                }
            }
            Ok(row)
        })
        .collect::<Result<_, GeometryError>>()?;
    let mut g = Graph::new(n);
    for (i, row) in rows.into_iter().enumerate() {
        for j in row {
            g.add_edge(i, j)?;
        }
    }
    Ok(g)
}

/// `G[vs]`; vertex `k` of the result is `vs[k]` of `g` (recorded in its labels).
pub fn induced_subgraph(g: &Graph, vs: &[usize]) -> Result<Graph, GraphError> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    for (k, &v) in vs.iter().enumerate() {
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v, n));
        }
        index[v] = k;
    }
    let mut h = Graph::new(vs.len());
    for (k, &v) in vs.iter().enumerate() {
        for &u in g.neighbors(v) {
            if index[u] != usize::MAX && index[u] > k {
                h.add_edge(k, index[u])?;
            }
        }
    }
    h.labels = vs.to_vec();
    Ok(h)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    members.push(u);
                    queue.push_back(u);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn disks(centers: &[(f64, f64)]) -> Vec<Shape> {
        centers
            .iter()
            .map(|&(x, y)| Shape::ball([x, y], 1.0).unwrap())
            .collect()
    }

    #[test]
    fn tangent_chain_is_a_path() {
        let g = build_intersection_graph(&disks(&[(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)])).unwrap();
        assert_eq!(g, Graph::path(3));
        let g = build_intersection_graph(&disks(&[(0.0, 0.0), (5.0, 0.0)])).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = Graph::path(4);
        assert_eq!(induced_subgraph(&p4, &[]).unwrap().n(), 0);
        assert_eq!(induced_subgraph(&p4, &[0, 1, 2, 3]).unwrap(), p4);
        let ends = induced_subgraph(&p4, &[0, 3]).unwrap();
        assert_eq!((ends.n(), ends.edge_count()), (2, 0));
        assert_eq!(ends.labels(), &[0, 3]);
        assert_eq!(
            induced_subgraph(&p4, &[4]),
            Err(GraphError::VertexOutOfRange(4, 4))
        );
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::new(1)));
        assert!(!is_connected(&Graph::new(2)));
        assert!(is_connected(&Graph::path(3)));
        let g = Graph::from_edges(5, &[(0, 3), (1, 4)]).unwrap();
        assert_eq!(components(&g), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }

    #[test]
    fn edge_errors() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(GraphError::VertexOutOfRange(3, 3)));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    proptest! {
        #[test]
        fn relabeling_commutes_with_construction(
            pts in prop::collection::vec((-4.0..4.0f64, -4.0..4.0f64), 1..12),
            seed in any::<u64>(),
        ) {
            let shapes = disks(&pts);
            let n = shapes.len();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let permuted: Vec<Shape> = perm.iter().map(|&i| shapes[i].clone()).collect();
            let g = build_intersection_graph(&shapes).unwrap();
            let h = build_intersection_graph(&permuted).unwrap();
            for a in 0..n {
                for b in 0..n {
                    prop_assert_eq!(h.has_edge(a, b), g.has_edge(perm[a], perm[b]));
                }
            }
        }
    }
}
