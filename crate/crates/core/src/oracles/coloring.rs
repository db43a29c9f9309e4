use super::{check_cap, full_mask, mask_to_vec, oracle_cap, OracleError, OracleResult, Witness};
use crate::graph::Graph;

/// Greedy clique, used as the initial lower bound.
fn greedy_clique(adj: &[u64], n: usize) -> u32 {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut best = 0;
    for &start in &order {
        let mut clique = 1u32;
        let mut cand = adj[start];
        while cand != 0 {
            let v = mask_to_vec(cand)
                .into_iter()
                .max_by_key(|&v| (adj[v] & cand).count_ones())
                .unwrap();
            clique += 1;
            cand &= adj[v];
        }
        best = best.max(clique);
    }
    best
}

struct Dsatur<'a> {
    adj: &'a [u64],
    n: usize,
    best: u32,
    lower: u32,
    nodes: u64,
}

impl Dsatur<'_> {
    // colors[v] == 0 means uncolored; `used` is the number of colors in play
    fn run(&mut self, colors: &mut [u32], colored: usize, used: u32) {
        self.nodes += 1;
        if used >= self.best || self.best == self.lower {
            return;
        }
        if colored == self.n {
            self.best = used;
            return;
        }
        // most saturated uncolored vertex, ties by degree then index
        let mut pick = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in 0..self.n {
            if colors[v] != 0 {
                continue;
            }
            let sat = saturation(self.adj[v], colors);
            let k = (sat.count_ones(), self.adj[v].count_ones());
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let sat = saturation(self.adj[pick], colors);
        for c in 1..=(used + 1) {
            if sat >> c & 1 == 1 {
                continue;
            }
            colors[pick] = c;
            self.run(colors, colored + 1, used.max(c));
            colors[pick] = 0;
        }
    }
}

fn saturation(nbrs: u64, colors: &[u32]) -> u64 {
    mask_to_vec(nbrs).iter().fold(
        0u64,
        |s, &u| if colors[u] > 0 { s | 1 << colors[u] } else { s },
    )
}

/// Lexicographically smallest proper `k`-coloring, colors assigned in vertex
/// order with forward checking on the remaining palettes.
fn lex_smallest_coloring(adj: &[u64], n: usize, k: u32, nodes: &mut u64) -> Option<Vec<u32>> {
    fn go(
        adj: &[u64],
        v: usize,
        k: u32,
        palettes: &mut Vec<u64>,
        colors: &mut Vec<u32>,
        max_used: u32,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if v == colors.len() {
            return true;
        }
        for c in 1..=k.min(max_used + 1) {
            if palettes[v] >> c & 1 == 0 {
                continue;
            }
            let later = adj[v] & !((2u64 << v).wrapping_sub(1));
            let saved: Vec<(usize, u64)> = mask_to_vec(later)
                .into_iter()
                .map(|u| (u, palettes[u]))
                .collect();
            let mut ok = true;
            for &(u, _) in &saved {
                palettes[u] &= !(1 << c);
                if palettes[u] == 0 {
                    ok = false;
                }
            }
            colors[v] = c;
            if ok && go(adj, v + 1, k, palettes, colors, max_used.max(c), nodes) {
                return true;
            }
            for (u, p) in saved {
                palettes[u] = p;
            }
        }
        colors[v] = 0;
        false
    }
    let full = ((1u64 << (k + 1)) - 1) & !1;
    let mut palettes = vec![full; n];
    let mut colors = vec![0; n];
    go(adj, 0, k, &mut palettes, &mut colors, 0, nodes).then_some(colors)
}

pub fn chromatic_number(g: &Graph) -> Result<OracleResult, OracleError> {
    chromatic_number_with_cap(g, oracle_cap())
}

pub fn chromatic_number_with_cap(g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    let n = g.n();
    if n == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: Witness::Coloring(vec![]),
            nodes_explored: 0,
        });
    }
    let adj = g.masks();
    debug_assert!(adj.iter().all(|m| m & !full_mask(n) == 0));
    let lower = greedy_clique(&adj, n);
    let mut d = Dsatur {
        adj: &adj,
        n,
        best: n as u32 + 1,
        lower,
        nodes: 0,
    };
    d.run(&mut vec![0; n], 0, 0);
    let chi = d.best;
    let mut nodes = d.nodes;
    let coloring = lex_smallest_coloring(&adj, n, chi, &mut nodes).expect("chi colors suffice");
    Ok(OracleResult {
        value: chi as usize,
        witness: Witness::Coloring(coloring),
        nodes_explored: nodes,
    })
}
