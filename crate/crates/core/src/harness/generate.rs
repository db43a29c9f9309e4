use std::collections::VecDeque;
use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Family, HarnessError, Instance};
use crate::geometry::{Point, Shape, DEFAULT_TOLERANCE};
use crate::graph::{build_intersection_graph_with, is_connected, Graph};
use crate::online::Model;

pub const DEFAULT_RETRIES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    /// Centers are uniform in `[0, box_size]^d`.
    pub box_size: f64,
    /// Radius range for mixed disks; ignored by unit families.
    pub width_range: (f64, f64),
    pub log_uniform: bool,
    pub model: Model,
    pub seed: u64,
    pub retries: usize,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, box_size: f64, model: Model, seed: u64) -> Self {
        GenSpec {
            family,
            n,
            box_size,
            width_range: (1.0, 1.0),
            log_uniform: false,
            model,
            seed,
            retries: DEFAULT_RETRIES,
        }
    }
}

fn sample_shape(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Shape {
    let d = spec.family.dimension();
    let c = Point::from(
        (0..d)
            .map(|_| rng.gen_range(0.0..=spec.box_size))
            .collect::<Vec<_>>(),
    );
    match spec.family {
        Family::UnitDisks | Family::UnitBalls => Shape::Ball {
            center: c,
            radius: 1.0,
        },
        Family::MixedDisks => {
            let (lo, hi) = spec.width_range;
            let u: f64 = rng.gen();
            let radius = if spec.log_uniform {
                lo * (hi / lo).powf(u)
            } else {
                lo + (hi - lo) * u
            };
            Shape::Ball {
                center: c,
                radius: radius.clamp(lo, hi),
            }
        }
        Family::UnitSquares => Shape::AxisHypercube {
            center: c,
            side: 1.0,
        },
        Family::CongruentSquares => Shape::RotatedHypercube {
            center: c,
            side: 1.0,
            rotation: rng.gen_range(0.0..FRAC_PI_2),
        },
        Family::RegularKGon(k) => Shape::RegularKGon {
            center: c,
            k,
            circumradius: 1.0,
            rotation: 0.0,
        },
    }
}

/// Breadth-first order from vertex 0, visiting neighbors in index order.
pub fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = VecDeque::new();
    if g.n() > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order
}

/// Samples `n` shapes from `spec.family`. For the relaxed model the sample is
/// redrawn until its intersection graph is connected, and shapes arrive in
/// breadth-first order; otherwise they arrive in sampling order.
pub fn generate_random_instance(spec: &GenSpec) -> Result<Instance, HarnessError> {
    if spec.n == 0 {
        return Err(HarnessError::Invalid("n must be at least 1".into()));
    }
    if !(spec.box_size >= 0.0 && spec.box_size.is_finite()) {
        return Err(HarnessError::Invalid(format!(
            "box size {} is not a finite size",
            spec.box_size
        )));
    }
    let (lo, hi) = spec.width_range;
    let m = match spec.family {
        Family::MixedDisks => {
            if !(lo >= 1.0 && hi >= lo && hi.is_finite()) {
                return Err(HarnessError::Invalid(format!(
                    "width range [{lo}, {hi}] not within [1, m]"
                )));
            }
            Some(hi)
        }
        Family::UnitDisks | Family::UnitBalls => Some(1.0),
        _ => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.retries.max(1) {
        let shapes: Vec<Shape> = (0..spec.n).map(|_| sample_shape(spec, &mut rng)).collect();
        let arrival_order = match spec.model {
            Model::Classical => (0..spec.n).collect(),
            Model::RelaxedConnected => {
                let g = build_intersection_graph_with(&shapes, DEFAULT_TOLERANCE)?;
                if !is_connected(&g) {
                    continue;
                }
                bfs_order(&g)
            }
        };
        return Ok(Instance {
            dimension: spec.family.dimension(),
            model: spec.model,
            family: spec.family.to_string(),
            m,
            alpha: None,
            seed: Some(spec.seed),
            shapes,
            arrival_order,
        });
    }
    Err(HarnessError::NoConnectedInstance {
        retries: spec.retries,
    })
}
