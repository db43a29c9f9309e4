//! Geometric objects and the intersection/touching predicates used to build
//! intersection graphs.
//!
//! Every object is a compact convex set. Two objects *intersect* when their
//! closed sets share a point (tangency counts), they are *non-touching* when
//! the intersection is empty, and their *interiors overlap* when the open sets
//! meet. The three outcomes are reported together as a [`Contact`].
//!
//! Ball-ball and axis-box pairs are evaluated in exact rational arithmetic on
//! the (dyadic) `f64` inputs; everything involving polygons uses floating point.
//! In both cases a gap whose magnitude is at most the tolerance is classified as
//! touching. A tolerance of zero makes the exact pairs fully exact.

mod distance;
mod polygon;
mod predicates;

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use distance::{convex_distance, convex_distance_to_set, gauge};
pub use predicates::{
    contact, contact_with, interiors_overlap, intersects, non_touching, signed_gap, Contact,
};

/// Default absolute tolerance used to classify near-zero gaps as touching.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported shape pair: {0} vs {1} in dimension {2}")]
    UnsupportedPair(&'static str, &'static str, usize),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("origin is not interior to the distance-inducing object")]
    OriginNotInterior,
    #[error("{0} is not supported for {1}")]
    Unsupported(&'static str, &'static str),
}

/// A point in `R^d` with finite coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self, GeometryError> {
        let p = Point(coords);
        p.validate()?;
        Ok(p)
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Point(vec![x, y])
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// `self + scale * v`
    pub fn offset(&self, v: &[f64], scale: f64) -> Point {
        Point(self.0.iter().zip(v).map(|(a, b)| a + scale * b).collect())
    }

    pub fn scaled(&self, s: f64) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }

    fn validate(&self) -> Result<(), GeometryError> {
        if self.0.is_empty() {
            return Err(GeometryError::InvalidShape(
                "point has no coordinates".into(),
            ));
        }
        if self.0.iter().any(|c| !c.is_finite()) {
            return Err(GeometryError::InvalidShape(format!(
                "non-finite coordinate in {:?}",
                self.0
            )));
        }
        Ok(())
    }

    fn xy_pair(&self) -> [f64; 2] {
        [self.0[0], self.0[1]]
    }
}

impl<const N: usize> From<[f64; N]> for Point {
    fn from(p: [f64; N]) -> Self {
        Point(p.to_vec())
    }
}

impl From<Vec<f64>> for Point {
    fn from(p: Vec<f64>) -> Self {
        Point(p)
    }
}

/// A compact convex object.
///
/// `RotatedHypercube` is a hypercube rotated in the plane of the first two
/// coordinates and axis-parallel in every other coordinate; it is what the
/// congruent-hypercube constructions need.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Ball {
        center: Point,
        radius: f64,
    },
    AxisHypercube {
        center: Point,
        side: f64,
    },
    RotatedHypercube {
        center: Point,
        side: f64,
        rotation: f64,
    },
    #[serde(rename = "regular_kgon")]
    RegularKGon {
        center: Point,
        k: u32,
        circumradius: f64,
        rotation: f64,
    },
    ConvexPolygon {
        vertices: Vec<Point>,
    },
}

/// Aspect ratio, width and height of an object measured from its aspect point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FatMeta {
    pub alpha: f64,
    pub width: f64,
    pub height: f64,
}

impl Shape {
    pub fn ball(center: impl Into<Point>, radius: f64) -> Result<Shape, GeometryError> {
        let s = Shape::Ball {
            center: center.into(),
            radius,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn hypercube(center: impl Into<Point>, side: f64) -> Result<Shape, GeometryError> {
        let s = Shape::AxisHypercube {
            center: center.into(),
            side,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn rotated_hypercube(
        center: impl Into<Point>,
        side: f64,
        rotation: f64,
    ) -> Result<Shape, GeometryError> {
        let s = Shape::RotatedHypercube {
            center: center.into(),
            side,
            rotation,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn kgon(
        center: impl Into<Point>,
        k: u32,
        circumradius: f64,
        rotation: f64,
    ) -> Result<Shape, GeometryError> {
        let s = Shape::RegularKGon {
            center: center.into(),
            k,
            circumradius,
            rotation,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn polygon(vertices: Vec<Point>) -> Result<Shape, GeometryError> {
        let s = Shape::ConvexPolygon { vertices };
        s.validate()?;
        Ok(s)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Shape::Ball { .. } => "ball",
            Shape::AxisHypercube { .. } => "axis_hypercube",
            Shape::RotatedHypercube { .. } => "rotated_hypercube",
            Shape::RegularKGon { .. } => "regular_kgon",
            Shape::ConvexPolygon { .. } => "convex_polygon",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Shape::Ball { center, .. }
            | Shape::AxisHypercube { center, .. }
            | Shape::RotatedHypercube { center, .. }
            | Shape::RegularKGon { center, .. } => center.dim(),
            Shape::ConvexPolygon { .. } => 2,
        }
    }

    /// Center of the object; the vertex average for general polygons.
    pub fn center(&self) -> Point {
        match self {
            Shape::Ball { center, .. }
            | Shape::AxisHypercube { center, .. }
            | Shape::RotatedHypercube { center, .. }
            | Shape::RegularKGon { center, .. } => center.clone(),
            Shape::ConvexPolygon { vertices } => {
                let n = vertices.len() as f64;
                let (sx, sy) = vertices
                    .iter()
                    .fold((0.0, 0.0), |(x, y), p| (x + p.0[0], y + p.0[1]));
                Point::xy(sx / n, sy / n)
            }
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(GeometryError::InvalidShape(format!(
                    "{name} must be positive, got {v}"
                )))
            }
        };
        match self {
            Shape::Ball { center, radius } => {
                center.validate()?;
                positive("radius", *radius)
            }
            Shape::AxisHypercube { center, side } => {
                center.validate()?;
                positive("side", *side)
            }
            Shape::RotatedHypercube {
                center,
                side,
                rotation,
            } => {
                center.validate()?;
                if center.dim() < 2 {
                    return Err(GeometryError::InvalidShape(
                        "rotated hypercube needs dimension >= 2".into(),
                    ));
                }
                if !rotation.is_finite() {
                    return Err(GeometryError::InvalidShape("non-finite rotation".into()));
                }
                positive("side", *side)
            }
            Shape::RegularKGon {
                center,
                k,
                circumradius,
                rotation,
            } => {
                center.validate()?;
                if center.dim() != 2 {
                    return Err(GeometryError::InvalidShape(
                        "k-gon must be 2-dimensional".into(),
                    ));
                }
                if *k < 3 {
                    return Err(GeometryError::InvalidShape(format!(
                        "k-gon needs k >= 3, got {k}"
                    )));
                }
                if !rotation.is_finite() {
                    return Err(GeometryError::InvalidShape("non-finite rotation".into()));
                }
                positive("circumradius", *circumradius)
            }
            Shape::ConvexPolygon { vertices } => {
                if vertices.len() < 3 {
                    return Err(GeometryError::InvalidShape(
                        "polygon needs >= 3 vertices".into(),
                    ));
                }
                for v in vertices {
                    v.validate()?;
                    if v.dim() != 2 {
                        return Err(GeometryError::InvalidShape(
                            "polygon vertices must be 2-D".into(),
                        ));
                    }
                }
                let pts: Vec<[f64; 2]> = vertices.iter().map(Point::xy_pair).collect();
                if !polygon::is_strictly_convex_ccw(&pts) {
                    return Err(GeometryError::InvalidShape(
                        "polygon must be strictly convex and counter-clockwise".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    /// The image of the object under `p -> offset + scale * p` (`scale > 0`).
    pub fn homothety(&self, scale: f64, offset: &Point) -> Shape {
        let map = |c: &Point| offset.offset(c.coords(), scale);
        match self {
            Shape::Ball { center, radius } => Shape::Ball {
                center: map(center),
                radius: radius * scale,
            },
            Shape::AxisHypercube { center, side } => Shape::AxisHypercube {
                center: map(center),
                side: side * scale,
            },
            Shape::RotatedHypercube {
                center,
                side,
                rotation,
            } => Shape::RotatedHypercube {
                center: map(center),
                side: side * scale,
                rotation: *rotation,
            },
            Shape::RegularKGon {
                center,
                k,
                circumradius,
                rotation,
            } => Shape::RegularKGon {
                center: map(center),
                k: *k,
                circumradius: circumradius * scale,
                rotation: *rotation,
            },
            Shape::ConvexPolygon { vertices } => Shape::ConvexPolygon {
                vertices: vertices.iter().map(map).collect(),
            },
        }
    }

    /// Same object with its center moved to `to` (polygons are shifted by
    /// the vertex-average center).
    pub fn moved_to(&self, to: &Point) -> Shape {
        let shift: Vec<f64> = to
            .coords()
            .iter()
            .zip(self.center().coords())
            .map(|(a, b)| a - b)
            .collect();
        self.homothety(1.0, &Point(shift))
    }

    /// Vertices (counter-clockwise) of the planar part of the object, if it is
    /// polygonal. For hypercubes in `d > 2` this is the projection on the first
    /// two coordinates.
    pub(crate) fn polygon_2d(&self) -> Option<Vec<[f64; 2]>> {
        match self {
            Shape::Ball { .. } => None,
            Shape::AxisHypercube { center, side } if center.dim() >= 2 => {
                Some(polygon::square(center.xy_pair(), *side, 0.0))
            }
            Shape::AxisHypercube { .. } => None,
            Shape::RotatedHypercube {
                center,
                side,
                rotation,
            } => Some(polygon::square(center.xy_pair(), *side, *rotation)),
            Shape::RegularKGon {
                center,
                k,
                circumradius,
                rotation,
            } => Some(polygon::regular(
                center.xy_pair(),
                *k,
                *circumradius,
                *rotation,
            )),
            Shape::ConvexPolygon { vertices } => {
                Some(vertices.iter().map(Point::xy_pair).collect())
            }
        }
    }

    /// Closed-form fatness for balls, hypercubes and regular polygons.
    pub fn fat_meta(&self) -> Result<FatMeta, GeometryError> {
        match self {
            Shape::Ball { radius, .. } => Ok(FatMeta {
                alpha: 1.0,
                width: *radius,
                height: *radius,
            }),
            Shape::AxisHypercube { center, side }
            | Shape::RotatedHypercube { center, side, .. } => {
                let d = center.dim() as f64;
                Ok(FatMeta {
                    alpha: 1.0 / d.sqrt(),
                    width: side / 2.0,
                    height: side * d.sqrt() / 2.0,
                })
            }
            Shape::RegularKGon {
                k, circumradius, ..
            } => {
                let alpha = (PI / *k as f64).cos();
                Ok(FatMeta {
                    alpha,
                    width: circumradius * alpha,
                    height: *circumradius,
                })
            }
            Shape::ConvexPolygon { .. } => {
                Err(GeometryError::Unsupported("fatness", "convex_polygon"))
            }
        }
    }

    /// Closed-set membership test (boundary included, up to `tol`).
    pub fn contains_point(&self, p: &Point, tol: f64) -> Result<bool, GeometryError> {
        if p.dim() != self.dim() {
            return Err(GeometryError::DimensionMismatch(self.dim(), p.dim()));
        }
        Ok(match self {
            Shape::Ball { center, radius } => center.distance(p) <= radius + tol,
            Shape::AxisHypercube { center, side } => center
                .coords()
                .iter()
                .zip(p.coords())
                .all(|(c, x)| (c - x).abs() <= side / 2.0 + tol),
            Shape::RotatedHypercube { center, side, .. } => {
                let rest_ok = center.coords()[2..]
                    .iter()
                    .zip(&p.coords()[2..])
                    .all(|(c, x)| (c - x).abs() <= side / 2.0 + tol);
                let poly = self.polygon_2d().expect("rotated hypercube is polygonal");
                rest_ok && polygon::signed_point_distance(&poly, p.xy_pair()) <= tol
            }
            Shape::RegularKGon { .. } | Shape::ConvexPolygon { .. } => {
                let poly = self.polygon_2d().expect("polygonal shape");
                polygon::signed_point_distance(&poly, p.xy_pair()) <= tol
            }
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Ball { center, radius } => {
                write!(f, "ball(c={:?}, r={radius})", center.coords())
            }
            Shape::AxisHypercube { center, side } => {
                write!(f, "cube(c={:?}, s={side})", center.coords())
            }
            Shape::RotatedHypercube {
                center,
                side,
                rotation,
            } => {
                write!(f, "cube(c={:?}, s={side}, rot={rotation})", center.coords())
            }
            Shape::RegularKGon {
                center,
                k,
                circumradius,
                rotation,
            } => write!(
                f,
                "{k}-gon(c={:?}, R={circumradius}, rot={rotation})",
                center.coords()
            ),
            Shape::ConvexPolygon { vertices } => write!(f, "polygon({} vertices)", vertices.len()),
        }
    }
}
