use super::{check_cap, full_mask, mask_to_vec, oracle_cap, OracleError, OracleResult, Witness};
use crate::graph::{components, induced_subgraph, Graph};

#[derive(Clone, Copy, PartialEq)]
enum Variant {
    Plain,
    Independent,
    Connected,
}

struct Search {
    n: usize,
    closed: Vec<u64>,
    open: Vec<u64>,
    // largest closed neighborhood among vertices i..n
    max_cover_from: Vec<u32>,
    variant: Variant,
    budget: u32,
    nodes: u64,
}

fn is_connected_mask(open: &[u64], m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let mut seen = m & m.wrapping_neg();
    loop {
        let grown = mask_to_vec(seen)
            .iter()
            .fold(seen, |s, &v| s | (open[v] & m));
        if grown == seen {
            return seen == m;
        }
        seen = grown;
    }
}

impl Search {
    fn new(g: &Graph, variant: Variant) -> Self {
        let n = g.n();
        let open = g.masks();
        let closed: Vec<u64> = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        let mut max_cover_from = vec![0; n + 1];
        for i in (0..n).rev() {
            max_cover_from[i] = max_cover_from[i + 1].max(closed[i].count_ones());
        }
        Search {
            n,
            closed,
            open,
            max_cover_from,
            variant,
            budget: 0,
            nodes: 0,
        }
    }

    /// Include-first over vertices in index order, so the first hit at the
    /// optimal size is the lexicographically smallest optimal set.
    fn dfs(&mut self, i: usize, chosen: u64, dominated: u64) -> Option<u64> {
        self.nodes += 1;
        let all = full_mask(self.n);
        let undominated = all & !dominated;
        let used = chosen.count_ones();
        if undominated == 0
            && (self.variant != Variant::Connected || is_connected_mask(&self.open, chosen))
        {
            return Some(chosen);
        }
        if used == self.budget || i == self.n {
            return None;
        }
        let left = self.budget - used;
        if (left * self.max_cover_from[i]) < undominated.count_ones() {
            return None;
        }
        let mut available = all & !((1u64 << i) - 1);
        if self.variant == Variant::Independent {
            let blocked = mask_to_vec(chosen)
                .iter()
                .fold(chosen, |b, &v| b | self.open[v]);
            available &= !blocked;
        }
        for u in mask_to_vec(undominated) {
            if self.closed[u] & available == 0 {
                return None;
            }
        }
        if available >> i & 1 == 1 {
            if let Some(s) = self.dfs(i + 1, chosen | 1 << i, dominated | self.closed[i]) {
                return Some(s);
            }
        }
        self.dfs(i + 1, chosen, dominated)
    }

    fn solve(&mut self) -> u64 {
        for k in 0..=self.n as u32 {
            self.budget = k;
            if let Some(s) = self.dfs(0, 0, 0) {
                return s;
            }
        }
        unreachable!("the whole vertex set dominates")
    }
}

fn solve(g: &Graph, variant: Variant, cap: usize) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    let mut s = Search::new(g, variant);
    let best = s.solve();
    let set = mask_to_vec(best);
    Ok(OracleResult {
        value: set.len(),
        witness: Witness::Set(set),
        nodes_explored: s.nodes,
    })
}

pub fn min_dominating_set(g: &Graph) -> Result<OracleResult, OracleError> {
    min_dominating_set_with_cap(g, oracle_cap())
}

pub fn min_dominating_set_with_cap(g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
    solve(g, Variant::Plain, cap)
}

pub fn min_independent_dominating_set(g: &Graph) -> Result<OracleResult, OracleError> {
    min_independent_dominating_set_with_cap(g, oracle_cap())
}

pub fn min_independent_dominating_set_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    solve(g, Variant::Independent, cap)
}

pub fn min_connected_dominating_set(g: &Graph) -> Result<OracleResult, OracleError> {
    min_connected_dominating_set_with_cap(g, oracle_cap())
}

/// On a disconnected graph this is the sum over components, and the witness is
/// the union of the per-component witnesses.
pub fn min_connected_dominating_set_with_cap(
    g: &Graph,
    cap: usize,
) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    let mut set = Vec::new();
    let mut nodes = 0;
    for comp in components(g) {
        let h = induced_subgraph(g, &comp)?;
        let r = solve(&h, Variant::Connected, cap)?;
        nodes += r.nodes_explored;
        set.extend(r.set().iter().map(|&k| comp[k]));
    }
    set.sort_unstable();
    Ok(OracleResult {
        value: set.len(),
        witness: Witness::Set(set),
        nodes_explored: nodes,
    })
}
