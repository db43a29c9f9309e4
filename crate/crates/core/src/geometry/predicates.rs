use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::polygon::{self, P2};
use super::{GeometryError, Point, Shape, DEFAULT_TOLERANCE};

/// How two closed objects meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Contact {
    /// Empty intersection.
    Disjoint,
    /// Boundaries meet, interiors do not.
    Touching,
    /// Interiors share a point.
    Overlapping,
}

impl Contact {
    pub fn intersects(self) -> bool {
        self != Contact::Disjoint
    }
}

/// A signed gap: positive when apart, negative when the interiors overlap.
enum Gap<'a> {
    Float(f64),
    /// Float estimate within `err` of the exact value, which is computed only
    /// when the estimate cannot settle the classification.
    Filtered {
        approx: f64,
        err: f64,
        exact: Exact<'a>,
    },
}

enum Exact<'a> {
    Balls(&'a Point, f64, &'a Point, f64),
    Boxes(&'a Point, f64, &'a Point, f64),
}

fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coordinate")
}

fn band(g: f64, tol: f64) -> Contact {
    if g > tol {
        Contact::Disjoint
    } else if g < -tol {
        Contact::Overlapping
    } else {
        Contact::Touching
    }
}

impl Gap<'_> {
    fn classify(&self, tol: f64) -> Contact {
        let tol = tol.abs();
        match self {
            Gap::Float(g) => band(*g, tol),
            Gap::Filtered { approx, err, exact } => {
                let (lo, hi) = (approx - err, approx + err);
                let (a, b) = (band(lo, tol), band(hi, tol));
                if a == b {
                    return a;
                }
                let g = exact.eval();
                let t = rat(tol);
                if g > t {
                    Contact::Disjoint
                } else if g < -t {
                    Contact::Overlapping
                } else {
                    Contact::Touching
                }
            }
        }
    }

    fn value(&self) -> f64 {
        match self {
            Gap::Float(g) | Gap::Filtered { approx: g, .. } => *g,
        }
    }
}

impl Exact<'_> {
    fn eval(&self) -> BigRational {
        match *self {
            Exact::Balls(c1, r1, c2, r2) => exact_ball_gap(c1, r1, c2, r2),
            Exact::Boxes(c1, s1, c2, s2) => exact_box_gap(c1, s1, c2, s2),
        }
    }
}

/// Generous multiple of the unit roundoff for the few operations below.
const ROUNDOFF: f64 = 16.0 * f64::EPSILON;

/// `(D^2 - R^2) / (2R)`: same sign as `D - R` and equal to it to first order.
fn ball_gap<'a>(c1: &'a Point, r1: f64, c2: &'a Point, r2: f64) -> Gap<'a> {
    let d2: f64 = c1
        .coords()
        .iter()
        .zip(c2.coords())
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    let r = r1 + r2;
    let approx = (d2 - r * r) / (2.0 * r);
    let err = ROUNDOFF * (d2 + r * r) / (2.0 * r) + f64::MIN_POSITIVE;
    Gap::Filtered {
        approx,
        err,
        exact: Exact::Balls(c1, r1, c2, r2),
    }
}

fn exact_ball_gap(c1: &Point, r1: f64, c2: &Point, r2: f64) -> BigRational {
    let d2 = c1
        .coords()
        .iter()
        .zip(c2.coords())
        .map(|(a, b)| {
            let d = rat(*a) - rat(*b);
            &d * &d
        })
        .fold(BigRational::zero(), |acc, x| acc + x);
    let r = rat(r1) + rat(r2);
    let two_r = &r + &r;
    (d2 - &r * &r) / two_r
}

fn box_gap<'a>(c1: &'a Point, s1: f64, c2: &'a Point, s2: f64) -> Gap<'a> {
    let (mut approx, mut err) = (f64::NEG_INFINITY, 0.0f64);
    for (a, b) in c1.coords().iter().zip(c2.coords()) {
        let d = (a - b).abs();
        let h = (s1 + s2) / 2.0;
        approx = approx.max(d - h);
        err = err.max(ROUNDOFF * (d + h + a.abs() + b.abs()));
    }
    Gap::Filtered {
        approx,
        err: err + f64::MIN_POSITIVE,
        exact: Exact::Boxes(c1, s1, c2, s2),
    }
}

fn exact_box_gap(c1: &Point, s1: f64, c2: &Point, s2: f64) -> BigRational {
    let two = BigRational::from_integer(2.into());
    c1.coords()
        .iter()
        .zip(c2.coords())
        .map(|(a, b)| (rat(*a) - rat(*b)).abs() - (rat(s1) + rat(s2)) / &two)
        .max()
        .expect("dimension >= 1")
}

fn is_hypercube(s: &Shape) -> bool {
    matches!(
        s,
        Shape::AxisHypercube { .. } | Shape::RotatedHypercube { .. }
    )
}

fn hypercube_parts(s: &Shape) -> (&Point, f64) {
    match s {
        Shape::AxisHypercube { center, side } | Shape::RotatedHypercube { center, side, .. } => {
            (center, *side)
        }
        _ => unreachable!("not a hypercube"),
    }
}

fn disk_polygon_gap(center: &Point, radius: f64, poly: &[P2]) -> f64 {
    polygon::signed_point_distance(poly, [center.coords()[0], center.coords()[1]]) - radius
}

fn gap<'a>(a: &'a Shape, b: &'a Shape) -> Result<Gap<'a>, GeometryError> {
    let d = a.dim();
    if d != b.dim() {
        return Err(GeometryError::DimensionMismatch(d, b.dim()));
    }
    match (a, b) {
        (
            Shape::Ball {
                center: c1,
                radius: r1,
            },
            Shape::Ball {
                center: c2,
                radius: r2,
            },
        ) => {
            return Ok(ball_gap(c1, *r1, c2, *r2));
        }
        (
            Shape::AxisHypercube {
                center: c1,
                side: s1,
            },
            Shape::AxisHypercube {
                center: c2,
                side: s2,
            },
        ) => return Ok(box_gap(c1, *s1, c2, *s2)),
        _ => {}
    }
    if is_hypercube(a) && is_hypercube(b) && d >= 2 {
        // product of a planar polygon and an axis box in the remaining coordinates
        let (c1, s1) = hypercube_parts(a);
        let (c2, s2) = hypercube_parts(b);
        let planar = polygon::polygon_gap(&a.polygon_2d().unwrap(), &b.polygon_2d().unwrap());
        let rest = c1.coords()[2..]
            .iter()
            .zip(&c2.coords()[2..])
            .map(|(x, y)| (x - y).abs() - (s1 + s2) / 2.0)
            .fold(f64::NEG_INFINITY, f64::max);
        return Ok(Gap::Float(planar.max(rest)));
    }
    if d != 2 {
        return Err(GeometryError::UnsupportedPair(
            a.kind_name(),
            b.kind_name(),
            d,
        ));
    }
    let g = match (a, b) {
        (Shape::Ball { center, radius }, other) | (other, Shape::Ball { center, radius }) => {
            disk_polygon_gap(center, *radius, &other.polygon_2d().expect("polygonal"))
        }
        _ => polygon::polygon_gap(&a.polygon_2d().unwrap(), &b.polygon_2d().unwrap()),
    };
    Ok(Gap::Float(g))
}

/// Signed gap between two objects: positive when disjoint, negative when the
/// interiors overlap. Its magnitude is a separation measure whose sign is what
/// the predicates rely on (Euclidean distance for disjoint balls and polygons).
pub fn signed_gap(a: &Shape, b: &Shape) -> Result<f64, GeometryError> {
    Ok(gap(a, b)?.value())
}

pub fn contact_with(a: &Shape, b: &Shape, tol: f64) -> Result<Contact, GeometryError> {
    Ok(gap(a, b)?.classify(tol))
}

pub fn contact(a: &Shape, b: &Shape) -> Result<Contact, GeometryError> {
    contact_with(a, b, DEFAULT_TOLERANCE)
}

/// Closed sets share a point; tangency counts.
pub fn intersects(a: &Shape, b: &Shape) -> Result<bool, GeometryError> {
    Ok(contact(a, b)?.intersects())
}

pub fn non_touching(a: &Shape, b: &Shape) -> Result<bool, GeometryError> {
    Ok(contact(a, b)? == Contact::Disjoint)
}

pub fn interiors_overlap(a: &Shape, b: &Shape) -> Result<bool, GeometryError> {
    Ok(contact(a, b)? == Contact::Overlapping)
}
