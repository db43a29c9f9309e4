use std::collections::BTreeSet;

use super::{grow, Arrival, OnlineError};

fn smallest_free(forbidden: &BTreeSet<u32>) -> u32 {
    (1..).find(|c| !forbidden.contains(c)).unwrap()
}

/// Smallest color not used by an earlier neighbor.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FirstFit {
    colors: Vec<u32>,
}

impl FirstFit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, arrival: &Arrival) -> u32 {
        let forbidden: BTreeSet<u32> = arrival.neighbors.iter().map(|&u| self.colors[u]).collect();
        let c = smallest_free(&forbidden);
        grow(&mut self.colors, arrival.vertex, 0);
        self.colors[arrival.vertex] = c;
        c
    }

    /// Color per vertex id; 0 for vertices that have not arrived.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        distinct(&self.colors)
    }
}

fn distinct(colors: &[u32]) -> usize {
    colors
        .iter()
        .filter(|&&c| c > 0)
        .collect::<BTreeSet<_>>()
        .len()
}

/// `floor(log2 w)` for `w >= 1`, exact at powers of two.
pub fn layer_index(w: f64) -> u32 {
    let mut j = w.log2().floor().max(0.0) as i32;
    while j > 0 && 2f64.powi(j) > w {
        j -= 1;
    }
    while 2f64.powi(j + 1) <= w {
        j += 1;
    }
    j as u32
}

/// First-fit inside width layers `[2^j, 2^{j+1})`, where a color used in one
/// layer is never reused in another.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Layer {
    colors: Vec<u32>,
    layer_of: Vec<u32>,
    // the layer that owns each color
    owner: std::collections::BTreeMap<u32, u32>,
}

impl Layer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, arrival: &Arrival) -> Result<u32, OnlineError> {
        let v = arrival.vertex;
        let w = arrival.width.ok_or(OnlineError::MissingWidth(v))?;
        if w.is_nan() || w < 1.0 {
            return Err(OnlineError::WidthBelowOne {
                vertex: v,
                width: w,
            });
        }
        let j = layer_index(w);
        let mut forbidden: BTreeSet<u32> = self
            .owner
            .iter()
            .filter(|&(_, &l)| l != j)
            .map(|(&c, _)| c)
            .collect();
        forbidden.extend(
            arrival
                .neighbors
                .iter()
                .filter(|&&u| self.layer_of[u] == j)
                .map(|&u| self.colors[u]),
        );
        let c = smallest_free(&forbidden);
        self.owner.insert(c, j);
        grow(&mut self.colors, v, 0);
        grow(&mut self.layer_of, v, u32::MAX);
        self.colors[v] = c;
        self.layer_of[v] = j;
        Ok(c)
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Layer per vertex id; `u32::MAX` for vertices that have not arrived.
    pub fn layers(&self) -> &[u32] {
        &self.layer_of
    }

    pub fn color_count(&self) -> usize {
        distinct(&self.colors)
    }

    pub fn color_owner(&self) -> &std::collections::BTreeMap<u32, u32> {
        &self.owner
    }
}

/// First-fit where a color class may induce degree up to `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelaxedFirstFit {
    t: usize,
    colors: Vec<u32>,
    class_degree: Vec<usize>,
}

impl RelaxedFirstFit {
    pub fn new(t: usize) -> Self {
        RelaxedFirstFit {
            t,
            colors: Vec::new(),
            class_degree: Vec::new(),
        }
    }

    pub fn step(&mut self, arrival: &Arrival) -> u32 {
        let t = self.t;
        let c = (1..)
            .find(|&c| {
                let same: Vec<usize> = arrival
                    .neighbors
                    .iter()
                    .copied()
                    .filter(|&u| self.colors[u] == c)
                    .collect();
                same.len() <= t && same.iter().all(|&u| self.class_degree[u] < t)
            })
            .unwrap();
        let v = arrival.vertex;
        grow(&mut self.colors, v, 0);
        grow(&mut self.class_degree, v, 0);
        self.colors[v] = c;
        for &u in &arrival.neighbors {
            if self.colors[u] == c {
                self.class_degree[u] += 1;
                self.class_degree[v] += 1;
            }
        }
        c
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn class_degrees(&self) -> &[usize] {
        &self.class_degree
    }

    pub fn color_count(&self) -> usize {
        distinct(&self.colors)
    }
}
