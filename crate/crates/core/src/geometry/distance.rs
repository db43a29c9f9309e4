//! Convex distance functions induced by an object containing the origin.

use super::polygon;
use super::predicates::contact_with;
use super::{GeometryError, Point, Shape};

/// Minkowski gauge of `c` at `z`: the smallest `t >= 0` with `z` in `t * c`.
pub fn gauge(c: &Shape, z: &Point) -> Result<f64, GeometryError> {
    if c.dim() != z.dim() {
        return Err(GeometryError::DimensionMismatch(c.dim(), z.dim()));
    }
    if z.coords().iter().all(|&v| v == 0.0) {
        check_origin_interior(c)?;
        return Ok(0.0);
    }
    match c {
        Shape::Ball { center, radius } => {
            let cc: f64 = center.coords().iter().map(|v| v * v).sum();
            if cc.sqrt() >= *radius {
                return Err(GeometryError::OriginNotInterior);
            }
            // z / t lies on the sphere: solve |s z - center| = r for s = 1/t > 0
            let ww: f64 = z.coords().iter().map(|v| v * v).sum();
            let wc: f64 = z
                .coords()
                .iter()
                .zip(center.coords())
                .map(|(a, b)| a * b)
                .sum();
            let s = (wc + (wc * wc - ww * (cc - radius * radius)).sqrt()) / ww;
            Ok(1.0 / s)
        }
        Shape::AxisHypercube { center, side } => {
            let h = side / 2.0;
            let mut t = 0.0f64;
            for (&zi, &ci) in z.coords().iter().zip(center.coords()) {
                if ci + h <= 0.0 || h - ci <= 0.0 {
                    return Err(GeometryError::OriginNotInterior);
                }
                t = t.max(zi / (ci + h)).max(-zi / (h - ci));
            }
            Ok(t)
        }
        Shape::RotatedHypercube { center, side, .. } => {
            let h = side / 2.0;
            let mut t = planar_gauge(&c.polygon_2d().unwrap(), z)?;
            for (&zi, &ci) in z.coords()[2..].iter().zip(&center.coords()[2..]) {
                if ci + h <= 0.0 || h - ci <= 0.0 {
                    return Err(GeometryError::OriginNotInterior);
                }
                t = t.max(zi / (ci + h)).max(-zi / (h - ci));
            }
            Ok(t)
        }
        Shape::RegularKGon { .. } | Shape::ConvexPolygon { .. } => {
            planar_gauge(&c.polygon_2d().unwrap(), z)
        }
    }
}

fn planar_gauge(poly: &[polygon::P2], z: &Point) -> Result<f64, GeometryError> {
    let mut t = 0.0f64;
    for (n, h) in polygon::facets(poly) {
        if h <= 0.0 {
            return Err(GeometryError::OriginNotInterior);
        }
        t = t.max((n[0] * z.coords()[0] + n[1] * z.coords()[1]) / h);
    }
    Ok(t)
}

fn check_origin_interior(c: &Shape) -> Result<(), GeometryError> {
    let probe = Point::origin(c.dim());
    let mut unit = vec![0.0; c.dim()];
    unit[0] = 1.0;
    // evaluating the gauge away from the origin runs the interior checks
    gauge(c, &probe.offset(&unit, 1.0)).map(|_| ())
}

/// `d_C(x, y)`: the factor by which `C`, translated to `x`, must be scaled so
/// that `y` lies on its boundary.
pub fn convex_distance(c: &Shape, x: &Point, y: &Point) -> Result<f64, GeometryError> {
    if x.dim() != y.dim() {
        return Err(GeometryError::DimensionMismatch(x.dim(), y.dim()));
    }
    let z = Point(
        y.coords()
            .iter()
            .zip(x.coords())
            .map(|(a, b)| a - b)
            .collect(),
    );
    gauge(c, &z)
}

fn euclidean_distance_to(s: &Shape, x: &Point) -> Option<f64> {
    match s {
        Shape::Ball { center, radius } => Some((center.distance(x) - radius).max(0.0)),
        Shape::AxisHypercube { center, side } => Some(
            center
                .coords()
                .iter()
                .zip(x.coords())
                .map(|(c, v)| ((c - v).abs() - side / 2.0).max(0.0).powi(2))
                .sum::<f64>()
                .sqrt(),
        ),
        Shape::RegularKGon { .. } | Shape::ConvexPolygon { .. } => {
            let d =
                polygon::signed_point_distance(&s.polygon_2d()?, [x.coords()[0], x.coords()[1]]);
            Some(d.max(0.0))
        }
        Shape::RotatedHypercube { center, .. } if center.dim() == 2 => {
            let d =
                polygon::signed_point_distance(&s.polygon_2d()?, [x.coords()[0], x.coords()[1]]);
            Some(d.max(0.0))
        }
        Shape::RotatedHypercube { .. } => None,
    }
}

fn is_centered(p: &Point) -> bool {
    p.coords().iter().all(|&v| v == 0.0)
}

/// `inf_{y in S} d_C(x, y)`: the smallest `t` for which `x + t * C` meets `S`.
///
/// Closed form when `C` is a centered ball (Euclidean distance over radius) or a
/// centered axis cube with an axis-box `S` (Chebyshev distance over half-side);
/// bisection on the homothety otherwise.
pub fn convex_distance_to_set(c: &Shape, x: &Point, s: &Shape) -> Result<f64, GeometryError> {
    if c.dim() != x.dim() {
        return Err(GeometryError::DimensionMismatch(c.dim(), x.dim()));
    }
    if s.dim() != x.dim() {
        return Err(GeometryError::DimensionMismatch(s.dim(), x.dim()));
    }
    check_origin_interior(c)?;
    if s.contains_point(x, 0.0)? {
        return Ok(0.0);
    }
    match (c, s) {
        (Shape::Ball { center, radius }, _) if is_centered(center) => {
            if let Some(d) = euclidean_distance_to(s, x) {
                return Ok(d / radius);
            }
        }
        (
            Shape::AxisHypercube { center, side },
            Shape::AxisHypercube {
                center: sc,
                side: ss,
            },
        ) if is_centered(center) => {
            let linf = sc
                .coords()
                .iter()
                .zip(x.coords())
                .map(|(a, b)| ((a - b).abs() - ss / 2.0).max(0.0))
                .fold(0.0, f64::max);
            return Ok(linf / (side / 2.0));
        }
        _ => {}
    }
    let meets = |t: f64| -> Result<bool, GeometryError> {
        Ok(contact_with(&c.homothety(t, x), s, 0.0)?.intersects())
    };
    let mut hi = 1.0;
    while !meets(hi)? {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(GeometryError::InvalidShape(
                "distance search diverged".into(),
            ));
        }
    }
    let mut lo = 0.0;
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if meets(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
