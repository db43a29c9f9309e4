//! Penalty-minimization search that produced the frozen figure-only
//! configurations. Not used at runtime; kept so the literals can be rebuilt.
//!
//! A candidate is a list of items (one parameter vector per independent). The
//! penalty is a sum of per-item terms (against the core) and pairwise terms;
//! annealing perturbs one coordinate at a time and only re-evaluates the terms
//! that involve the moved item.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::Shape;

pub trait PairPenalty {
    fn unary(&self, x: &[f64]) -> f64;
    fn pair(&self, a: &[f64], b: &[f64]) -> f64;
}

#[derive(Debug, Clone, Copy)]
pub struct AnnealOptions {
    pub iterations: usize,
    pub trials: usize,
    pub seed: u64,
    pub initial_step: f64,
    /// Step is multiplied by 0.6 this many times over a trial.
    pub step_decays: usize,
    pub temperature: f64,
}

impl Default for AnnealOptions {
    fn default() -> Self {
        AnnealOptions {
            iterations: 200_000,
            trials: 500,
            seed: 3,
            initial_step: 0.3,
            step_decays: 10,
            temperature: 1e-3,
        }
    }
}

fn item_cost<P: PairPenalty>(p: &P, xs: &[Vec<f64>], i: usize) -> f64 {
    let mut c = p.unary(&xs[i]);
    for (j, y) in xs.iter().enumerate() {
        if j != i {
            c += p.pair(&xs[i], y);
        }
    }
    c
}

fn total<P: PairPenalty>(p: &P, xs: &[Vec<f64>]) -> f64 {
    let mut t: f64 = xs.iter().map(|x| p.unary(x)).sum();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            t += p.pair(&xs[i], &xs[j]);
        }
    }
    t
}

/// Returns the first candidate whose penalty drops to zero (below 1e-12),
/// together with the trial index, or `None` when every trial fails.
pub fn anneal<P, I>(p: &P, mut init: I, opts: AnnealOptions) -> Option<(usize, Vec<Vec<f64>>)>
where
    P: PairPenalty,
    I: FnMut(&mut ChaCha8Rng) -> Vec<Vec<f64>>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let decay_every = (opts.iterations / opts.step_decays.max(1)).max(1);
    for trial in 0..opts.trials {
        let mut xs = init(&mut rng);
        let mut f = total(p, &xs);
        let mut step = opts.initial_step;
        for it in 0..opts.iterations {
            if f < 1e-12 {
                break;
            }
            let i = rng.gen_range(0..xs.len());
            let k = rng.gen_range(0..xs[i].len());
            let before = item_cost(p, &xs, i);
            let old = xs[i][k];
            xs[i][k] += step * rng.gen_range(-1.0..1.0);
            let nf = f - before + item_cost(p, &xs, i);
            let temp = (opts.temperature * (1.0 - it as f64 / opts.iterations as f64)).max(1e-12);
            if nf < f || rng.gen::<f64>() < ((f - nf) / temp).exp() {
                f = nf;
            } else {
                xs[i][k] = old;
            }
            if it % decay_every == decay_every - 1 {
                step *= 0.6;
            }
        }
        if total(p, &xs) < 1e-12 {
            return Some((trial, xs));
        }
    }
    None
}

/// Unit squares `(x, y, rotation)` around an axis-parallel unit core at the
/// origin: each must overlap the core by `margin`, pairs must be `margin` apart.
pub struct CongruentSquares {
    pub margin: f64,
}

fn unit_square(x: &[f64]) -> Shape {
    Shape::RotatedHypercube {
        center: [x[0], x[1]].into(),
        side: 1.0,
        rotation: x[2],
    }
}

impl PairPenalty for CongruentSquares {
    fn unary(&self, x: &[f64]) -> f64 {
        let core = Shape::RotatedHypercube {
            center: [0.0, 0.0].into(),
            side: 1.0,
            rotation: 0.0,
        };
        let g = crate::geometry::signed_gap(&core, &unit_square(x)).unwrap();
        (g + self.margin).max(0.0).powi(2)
    }

    fn pair(&self, a: &[f64], b: &[f64]) -> f64 {
        let g = crate::geometry::signed_gap(&unit_square(a), &unit_square(b)).unwrap();
        (self.margin - g).max(0.0).powi(2)
    }
}

/// Points `(x, y)` inside radius `reach` with pairwise distance at least `min_dist`.
pub struct SpreadPoints {
    pub reach: f64,
    pub min_dist: f64,
}

impl PairPenalty for SpreadPoints {
    fn unary(&self, x: &[f64]) -> f64 {
        (x[0].hypot(x[1]) - self.reach).max(0.0).powi(2)
    }

    fn pair(&self, a: &[f64], b: &[f64]) -> f64 {
        (self.min_dist - (a[0] - b[0]).hypot(a[1] - b[1]))
            .max(0.0)
            .powi(2)
    }
}

/// `n` squares on the unit circle with random rotations.
pub fn ring_start(n: usize) -> impl FnMut(&mut ChaCha8Rng) -> Vec<Vec<f64>> {
    move |rng| {
        (0..n)
            .map(|i| {
                let a = i as f64 * std::f64::consts::TAU / n as f64;
                vec![
                    a.cos(),
                    a.sin(),
                    rng.gen_range(0.0..std::f64::consts::FRAC_PI_2),
                ]
            })
            .collect()
    }
}

/// `n` points uniform in the disk of radius `r`.
pub fn disk_start(n: usize, r: f64) -> impl FnMut(&mut ChaCha8Rng) -> Vec<Vec<f64>> {
    move |rng| {
        (0..n)
            .map(|_| {
                let (a, s): (f64, f64) = (rng.gen_range(0.0..std::f64::consts::TAU), rng.gen());
                vec![r * s.sqrt() * a.cos(), r * s.sqrt() * a.sin()]
            })
            .collect()
    }
}
