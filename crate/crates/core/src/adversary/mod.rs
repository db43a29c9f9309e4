//! Lower-bound constructions: independent kissing configurations, the star
//! and cyclone arrival sequences, and wheel realizations by translates.

mod configs;
mod frozen;
pub mod search;
mod sequences;
mod wheel;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    contact_with, signed_gap, Contact, GeometryError, Point, Shape, DEFAULT_TOLERANCE,
};
use crate::graph::{build_intersection_graph_with, Graph, GraphError};
use crate::online::OnlineError;

pub use configs::{
    config_balls_icosahedron, config_congruent_hypercubes, config_disks_radii_1_2,
    config_hypercube_translates, config_regular_kgon, config_unit_disks, fat_bound_formulas,
    FatBounds,
};
pub use sequences::{cyclone_sequence, star_sequence, wheel_graph, CycloneOrder};
pub use wheel::{wheel_from_translates, TranslateFamily, DEFAULT_DELTA};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdversaryError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Online(#[from] OnlineError),
}

/// A core object meeting every member of a pairwise non-touching set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KissingConfig {
    pub core: Shape,
    pub independents: Vec<Shape>,
    pub claimed_zeta: usize,
    pub family_tag: String,
}

impl KissingConfig {
    /// Independents followed by the core, so the core is vertex `claimed_zeta`.
    pub fn shapes(&self) -> Vec<Shape> {
        let mut s = self.independents.clone();
        s.push(self.core.clone());
        s
    }

    pub fn core_index(&self) -> usize {
        self.independents.len()
    }

    pub fn intersection_graph(&self, tol: f64) -> Result<Graph, GraphError> {
        build_intersection_graph_with(&self.shapes(), tol)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        *self == Verdict::Valid
    }
}

pub fn verify_config(cfg: &KissingConfig, standard: bool) -> Verdict {
    verify_config_with(cfg, standard, DEFAULT_TOLERANCE)
}

/// Checks the count, that the core meets every independent, and that the
/// independents are pairwise non-touching. A standard configuration must also
/// keep every independent out of the core's interior.
pub fn verify_config_with(cfg: &KissingConfig, standard: bool, tol: f64) -> Verdict {
    match check(cfg, standard, tol) {
        Ok(()) => Verdict::Valid,
        Err(reason) => Verdict::Invalid(reason),
    }
}

fn check(cfg: &KissingConfig, standard: bool, tol: f64) -> Result<(), String> {
    let pred =
        |a: &Shape, b: &Shape| contact_with(a, b, tol).map_err(|e| format!("predicate error: {e}"));
    if cfg.independents.len() != cfg.claimed_zeta {
        return Err(format!(
            "count mismatch: claimed {} but {} independents",
            cfg.claimed_zeta,
            cfg.independents.len()
        ));
    }
    for (i, s) in cfg.independents.iter().enumerate() {
        match pred(&cfg.core, s)? {
            Contact::Disjoint => return Err(format!("core misses independent {i}")),
            Contact::Overlapping if standard => {
                return Err(format!("independent {i} overlaps the core interior"))
            }
            _ => {}
        }
    }
    for i in 0..cfg.independents.len() {
        for j in i + 1..cfg.independents.len() {
            if pred(&cfg.independents[i], &cfg.independents[j])?.intersects() {
                return Err(format!("touching pair {i}-{j}"));
            }
        }
    }
    Ok(())
}

/// Moves each independent along the ray from the core center until it just
/// touches the core (gap within `tol / 2`). Independents already outside the
/// core interior stay put.
pub fn standardize(cfg: &KissingConfig, tol: f64) -> Result<KissingConfig, AdversaryError> {
    let origin = cfg.core.center();
    let mut out = cfg.clone();
    for (i, s) in cfg.independents.iter().enumerate() {
        if contact_with(&cfg.core, s, tol)? != Contact::Overlapping {
            continue;
        }
        let dir: Vec<f64> = s
            .center()
            .coords()
            .iter()
            .zip(origin.coords())
            .map(|(a, b)| a - b)
            .collect();
        if dir.iter().all(|&v| v == 0.0) {
            return Err(AdversaryError::Construction(format!(
                "independent {i} is centered on the core; no outward ray"
            )));
        }
        let at = |t: f64| s.moved_to(&origin.offset(&dir, t));
        let gap = |t: f64| signed_gap(&cfg.core, &at(t));
        let (mut lo, mut hi) = (1.0, 2.0);
        while gap(hi)? < 0.0 {
            hi *= 2.0;
        }
        let mut t = hi;
        for _ in 0..200 {
            t = 0.5 * (lo + hi);
            let g = gap(t)?;
            if g.abs() <= tol / 2.0 {
                break;
            }
            if g < 0.0 {
                lo = t;
            } else {
                hi = t;
            }
        }
        out.independents[i] = at(t);
    }
    Ok(out)
}

fn point(coords: Vec<f64>) -> Point {
    Point::from(coords)
}
