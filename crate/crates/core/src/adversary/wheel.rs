use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{cyclone_sequence, wheel_graph, AdversaryError, CycloneOrder};
use crate::geometry::{signed_gap, Shape, DEFAULT_TOLERANCE};
use crate::graph::build_intersection_graph_with;

/// Overlap slack used in place of exact tangency.
pub const DEFAULT_DELTA: f64 = 1e-3;

const WINDOW_SAMPLES: usize = 720;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranslateFamily {
    UnitDisks,
    UnitSquares,
    /// Regular `k`-gon with circumradius 1, `k = 3` or `k >= 5`.
    RegularKGon(u32),
}

impl TranslateFamily {
    pub fn zeta(self) -> usize {
        match self {
            TranslateFamily::UnitSquares => 4,
            _ => 5,
        }
    }

    fn unit_at(self, x: f64, y: f64) -> Shape {
        match self {
            TranslateFamily::UnitDisks => Shape::Ball {
                center: [x, y].into(),
                radius: 1.0,
            },
            TranslateFamily::UnitSquares => Shape::AxisHypercube {
                center: [x, y].into(),
                side: 1.0,
            },
            TranslateFamily::RegularKGon(k) => Shape::RegularKGon {
                center: [x, y].into(),
                k,
                circumradius: 1.0,
                rotation: 0.0,
            },
        }
    }

    /// Directions of an optimal configuration's independents, counter-clockwise.
    fn directions(self) -> Vec<f64> {
        match self {
            TranslateFamily::UnitDisks => (0..5).map(|i| 2.0 * PI * i as f64 / 5.0).collect(),
            TranslateFamily::UnitSquares => [(1.0, -0.5), (0.5, 1.0), (-1.0, 0.5), (-0.5, -1.0)]
                .iter()
                .map(|&(x, y): &(f64, f64)| y.atan2(x))
                .collect(),
            TranslateFamily::RegularKGon(_) => (0..5)
                .map(|i| PI / 2.0 + 2.0 * PI * i as f64 / 5.0)
                .collect(),
        }
    }
}

/// Distance along direction `theta` at which a translate stops meeting the core.
fn touching_radius(
    family: TranslateFamily,
    core: &Shape,
    theta: f64,
) -> Result<f64, AdversaryError> {
    let (mut lo, mut hi) = (0.0, 4.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if signed_gap(core, &family.unit_at(mid * theta.cos(), mid * theta.sin()))? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Realizes the wheel `W_{2 zeta}` by translates, with the rim in cyclic order
/// as vertices `0..2 zeta` and the core last, plus a cyclone order on it.
///
/// The independents of an optimal configuration sit on the locus of centers
/// whose translate touches the core, pulled inward by the factor `1 - delta`.
/// Between consecutive independents another translate is placed on the same
/// locus, at the middle of the arc where it overlaps both neighbors by at
/// least `delta`. The result is checked against `W_{2 zeta}` edge by edge.
pub fn wheel_from_translates(
    family: TranslateFamily,
    delta: f64,
) -> Result<(Vec<Shape>, CycloneOrder), AdversaryError> {
    if let TranslateFamily::RegularKGon(k) = family {
        if k < 3 || k == 4 {
            return Err(AdversaryError::OutOfRange(format!(
                "k = {k}: need k = 3 or k >= 5"
            )));
        }
    }
    if !(delta > 0.0 && delta < 0.1) {
        return Err(AdversaryError::OutOfRange(format!(
            "delta = {delta} not in (0, 0.1)"
        )));
    }
    let core = family.unit_at(0.0, 0.0);
    let on_locus = |theta: f64| -> Result<Shape, AdversaryError> {
        let r = (1.0 - delta) * touching_radius(family, &core, theta)?;
        Ok(family.unit_at(r * theta.cos(), r * theta.sin()))
    };
    let dirs = family.directions();
    let zeta = dirs.len();
    let anchors: Vec<Shape> = dirs
        .iter()
        .map(|&t| on_locus(t))
        .collect::<Result<_, _>>()?;
    let mut rim = Vec::with_capacity(2 * zeta);
    for i in 0..zeta {
        let (a, b) = (dirs[i], dirs[(i + 1) % zeta]);
        let b = if b <= a { b + 2.0 * PI } else { b };
        let next = &anchors[(i + 1) % zeta];
        let mut hits = Vec::new();
        for s in 1..WINDOW_SAMPLES {
            let phi = a + (b - a) * s as f64 / WINDOW_SAMPLES as f64;
            let cand = on_locus(phi)?;
            if signed_gap(&cand, &anchors[i])? <= -delta && signed_gap(&cand, next)? <= -delta {
                hits.push(phi);
            }
        }
        let (Some(&first), Some(&last)) = (hits.first(), hits.last()) else {
            return Err(AdversaryError::Construction(format!(
                "no placement between independents {i} and {}",
                (i + 1) % zeta
            )));
        };
        rim.push(anchors[i].clone());
        rim.push(on_locus(0.5 * (first + last))?);
    }
    let k = 2 * zeta;
    let mut shapes = rim;
    shapes.push(core);
    let g = build_intersection_graph_with(&shapes, DEFAULT_TOLERANCE)?;
    if g != wheel_graph(k) {
        return Err(AdversaryError::Construction(format!(
            "intersection graph is not W_{k} (edges: {:?})",
            g.edges().collect::<Vec<_>>()
        )));
    }
    Ok((shapes, cyclone_sequence(k, zeta - 1)?))
}
