//! Online dominating-set and coloring algorithms on geometric intersection
//! graphs, with exact offline oracles and kissing-configuration generators.

pub mod adversary;
pub mod geometry;
pub mod graph;
pub mod harness;
pub mod online;
pub mod oracles;
