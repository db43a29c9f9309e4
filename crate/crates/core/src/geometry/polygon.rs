//! Planar convex polygon helpers. Polygons are counter-clockwise vertex lists.

use std::f64::consts::PI;

pub(crate) type P2 = [f64; 2];

pub(crate) fn regular(center: P2, k: u32, circumradius: f64, rotation: f64) -> Vec<P2> {
    (0..k)
        .map(|i| {
            let a = rotation + 2.0 * PI * i as f64 / k as f64;
            [
                center[0] + circumradius * a.cos(),
                center[1] + circumradius * a.sin(),
            ]
        })
        .collect()
}

pub(crate) fn square(center: P2, side: f64, rotation: f64) -> Vec<P2> {
    let h = side / 2.0;
    let (s, c) = rotation.sin_cos();
    [[h, -h], [h, h], [-h, h], [-h, -h]]
        .iter()
        .map(|[x, y]| [center[0] + c * x - s * y, center[1] + s * x + c * y])
        .collect()
}

fn cross(o: P2, a: P2, b: P2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

pub(crate) fn is_strictly_convex_ccw(poly: &[P2]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    for i in 0..n {
        if cross(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) <= 0.0 {
            return false;
        }
    }
    // a self-intersecting star also turns left at every vertex
    total_turning(poly) < 2.0 * PI + 1e-9
}

fn total_turning(poly: &[P2]) -> f64 {
    let n = poly.len();
    let mut t = 0.0;
    for i in 0..n {
        let (a, b, c) = (poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
        let d1 = [b[0] - a[0], b[1] - a[1]];
        let d2 = [c[0] - b[0], c[1] - b[1]];
        t += (d1[0] * d2[1] - d1[1] * d2[0]).atan2(d1[0] * d2[0] + d1[1] * d2[1]);
    }
    t
}

/// Outward unit normals and their support offsets `n . v` for each edge.
pub(crate) fn facets(poly: &[P2]) -> Vec<(P2, f64)> {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            let (ex, ey) = (b[0] - a[0], b[1] - a[1]);
            let len = ex.hypot(ey);
            let nrm = [ey / len, -ex / len];
            (nrm, nrm[0] * a[0] + nrm[1] * a[1])
        })
        .collect()
}

fn point_segment_distance(p: P2, a: P2, b: P2) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    };
    (p[0] - a[0] - t * dx).hypot(p[1] - a[1] - t * dy)
}

fn boundary_distance(poly: &[P2], p: P2) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| point_segment_distance(p, poly[i], poly[(i + 1) % n]))
        .fold(f64::INFINITY, f64::min)
}

/// Euclidean distance to the polygon when `p` is outside, minus the distance
/// to the nearest edge line when inside.
pub(crate) fn signed_point_distance(poly: &[P2], p: P2) -> f64 {
    let fs = facets(poly);
    let sep = fs
        .iter()
        .map(|(n, h)| n[0] * p[0] + n[1] * p[1] - h)
        .fold(f64::NEG_INFINITY, f64::max);
    if sep <= 0.0 {
        sep
    } else {
        boundary_distance(poly, p)
    }
}

fn project(poly: &[P2], n: P2) -> (f64, f64) {
    poly.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            let t = n[0] * v[0] + n[1] * v[1];
            (lo.min(t), hi.max(t))
        })
}

/// Signed separation of two convex polygons: the Euclidean distance when they
/// are disjoint, otherwise minus the smallest penetration over edge normals.
pub(crate) fn polygon_gap(a: &[P2], b: &[P2]) -> f64 {
    let sat = facets(a)
        .iter()
        .chain(facets(b).iter())
        .map(|(n, _)| {
            let (alo, ahi) = project(a, *n);
            let (blo, bhi) = project(b, *n);
            (blo - ahi).max(alo - bhi)
        })
        .fold(f64::NEG_INFINITY, f64::max);
    if sat <= 0.0 {
        return sat;
    }
    let d1 = a
        .iter()
        .map(|&p| boundary_distance(b, p))
        .fold(f64::INFINITY, f64::min);
    let d2 = b
        .iter()
        .map(|&p| boundary_distance(a, p))
        .fold(f64::INFINITY, f64::min);
    d1.min(d2)
}
