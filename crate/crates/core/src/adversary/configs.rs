use std::f64::consts::PI;

use serde::Serialize;

use super::{frozen, point, AdversaryError, KissingConfig};
use crate::geometry::Shape;

fn config(core: Shape, independents: Vec<Shape>, tag: impl Into<String>) -> KissingConfig {
    KissingConfig {
        core,
        claimed_zeta: independents.len(),
        independents,
        family_tag: tag.into(),
    }
}

/// 12 unit balls on the vertices of an icosahedron with edge `2 + epsilon`,
/// core unit ball at its center.
///
/// The circumradius is `(2 + epsilon) sin(2 pi / 5)`, below 2 only for small
/// `epsilon` (about `epsilon < 0.1029`); larger values produce a configuration
/// whose core misses the independents, which the verifier reports.
pub fn config_balls_icosahedron(epsilon: f64) -> Result<KissingConfig, AdversaryError> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(AdversaryError::OutOfRange(format!(
            "epsilon = {epsilon} not in (0, 1)"
        )));
    }
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    // (0, +-1, +-phi) and cyclic shifts have edge length 2
    let mut verts = Vec::new();
    for a in [-1.0, 1.0] {
        for b in [-phi, phi] {
            verts.push([0.0, a, b]);
            verts.push([a, b, 0.0]);
            verts.push([b, 0.0, a]);
        }
    }
    let scale = (2.0 + epsilon) / 2.0;
    let independents = verts
        .iter()
        .map(|v| Shape::ball(point(v.iter().map(|c| c * scale).collect()), 1.0))
        .collect::<Result<_, _>>()?;
    Ok(config(
        Shape::ball([0.0, 0.0, 0.0], 1.0)?,
        independents,
        "balls",
    ))
}

/// Five unit disks at distance `2 - epsilon` from a unit core disk, spaced by
/// 72 degrees.
pub fn config_unit_disks(epsilon: f64) -> Result<KissingConfig, AdversaryError> {
    if !(epsilon > 0.0 && epsilon < 0.25) {
        return Err(AdversaryError::OutOfRange(format!(
            "epsilon = {epsilon} not in (0, 0.25)"
        )));
    }
    let r = 2.0 - epsilon;
    let independents = (0..5)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / 5.0;
            Shape::ball([r * a.cos(), r * a.sin()], 1.0)
        })
        .collect::<Result<_, _>>()?;
    Ok(config(
        Shape::ball([0.0, 0.0], 1.0)?,
        independents,
        "unit_disks",
    ))
}

/// Unit hypercubes just beyond each corner of a unit core centered at
/// `(1/2, ..., 1/2)`: coordinate `-epsilon` for a 0 bit, `1 + epsilon` for a 1.
pub fn config_hypercube_translates(
    d: usize,
    epsilon: f64,
) -> Result<KissingConfig, AdversaryError> {
    if d == 0 || d > 16 {
        return Err(AdversaryError::OutOfRange(format!(
            "dimension d = {d} not in 1..=16"
        )));
    }
    let limit = 1.0 / (2.0 * (d as f64).sqrt());
    if !(epsilon > 0.0 && epsilon < limit) {
        return Err(AdversaryError::OutOfRange(format!(
            "epsilon = {epsilon} not in (0, {limit})"
        )));
    }
    let independents = (0..1usize << d)
        .map(|bits| {
            let c = (0..d)
                .map(|j| {
                    if bits >> j & 1 == 1 {
                        1.0 + epsilon
                    } else {
                        -epsilon
                    }
                })
                .collect();
            Shape::hypercube(point(c), 1.0)
        })
        .collect::<Result<_, _>>()?;
    Ok(config(
        Shape::hypercube(point(vec![0.5; d]), 1.0)?,
        independents,
        "hypercube_translates",
    ))
}

/// `2^{d+1}` congruent unit hypercubes. The planar base case is eight rotated
/// unit squares around an axis-parallel core; each extra dimension doubles the
/// set by appending `+-(1/2 + epsilon)` and appends 0 to the core.
pub fn config_congruent_hypercubes(
    d: usize,
    epsilon: f64,
) -> Result<KissingConfig, AdversaryError> {
    if !(2..=16).contains(&d) {
        return Err(AdversaryError::OutOfRange(format!(
            "dimension d = {d} not in 2..=16"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(AdversaryError::OutOfRange(format!(
            "epsilon = {epsilon} not in (0, 1/2)"
        )));
    }
    let mut centers: Vec<(Vec<f64>, f64)> = frozen::CONGRUENT_SQUARES
        .iter()
        .map(|&[x, y, r]| (vec![x, y], r))
        .collect();
    let core = vec![0.0; d];
    for _ in 2..d {
        let up = centers
            .iter()
            .map(|(c, r)| ([c.as_slice(), &[0.5 + epsilon]].concat(), *r));
        let down = centers
            .iter()
            .map(|(c, r)| ([c.as_slice(), &[-(0.5 + epsilon)]].concat(), *r));
        centers = up.chain(down).collect();
    }
    let independents = centers
        .into_iter()
        .map(|(c, r)| Shape::rotated_hypercube(point(c), 1.0, r))
        .collect::<Result<_, _>>()?;
    Ok(config(
        Shape::hypercube(point(core), 1.0)?,
        independents,
        "congruent_hypercubes",
    ))
}

/// Ring radius for five translated unit `k`-gons around a core at the origin.
///
/// Two translates meet iff the center difference lies in `K - K`, whose radial
/// function ranges over `[r_min, r_max]`. A ring of radius `R` works in every
/// orientation when `R < r_min` and the chord `2 R sin(pi/5) > r_max`:
/// triangle `[1.5, 1.732]`, pentagon `[1.809, 1.902]`, hexagon `[1.732, 2]`,
/// `k >= 7` within `[2 cos(pi/7), 2]`.
fn kgon_ring_radius(k: u32) -> f64 {
    match k {
        3 => 1.49,
        6 => 1.72,
        _ => 1.78,
    }
}

/// Five translated unit `k`-gons (circumradius 1) on a ring, plus the core.
pub fn config_regular_kgon(k: u32) -> Result<KissingConfig, AdversaryError> {
    if k < 3 || k == 4 {
        return Err(AdversaryError::OutOfRange(format!(
            "k = {k}: need k = 3 or k >= 5 (squares are hypercubes)"
        )));
    }
    let r = kgon_ring_radius(k);
    let independents = (0..5)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / 5.0 + PI / 2.0;
            Shape::kgon([r * a.cos(), r * a.sin()], k, 1.0, 0.0)
        })
        .collect::<Result<_, _>>()?;
    Ok(config(
        Shape::kgon([0.0, 0.0], k, 1.0, 0.0)?,
        independents,
        format!("regular_{k}gon"),
    ))
}

/// Radius-2 core disk and 11 unit disks whose centers are within distance 3
/// of the origin and more than 2 apart.
pub fn config_disks_radii_1_2() -> KissingConfig {
    let independents = frozen::ELEVEN_DISKS
        .iter()
        .map(|&[x, y]| Shape::ball([x, y], 1.0).expect("frozen literal"))
        .collect();
    config(
        Shape::ball([0.0, 0.0], 2.0).expect("valid core"),
        independents,
        "disks_radii_1_2",
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FatBounds {
    pub lower: f64,
    pub upper: f64,
    pub zeta_prime_upper: f64,
}

/// Closed-form bounds on the independent kissing number of `alpha`-fat objects
/// with widths in `[1, m]` in dimension `d`.
pub fn fat_bound_formulas(
    alpha: f64,
    m: f64,
    d: u32,
    epsilon: f64,
) -> Result<FatBounds, AdversaryError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(AdversaryError::OutOfRange(format!(
            "alpha = {alpha} not in (0, 1]"
        )));
    }
    if !(m >= 1.0 && m.is_finite()) {
        return Err(AdversaryError::OutOfRange(format!("m = {m} < 1")));
    }
    if d == 0 {
        return Err(AdversaryError::OutOfRange("dimension d = 0".into()));
    }
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(AdversaryError::OutOfRange(format!(
            "epsilon = {epsilon} <= 0"
        )));
    }
    let d = d as i32;
    Ok(FatBounds {
        lower: (alpha / 2.0 * (m + 2.0) / (1.0 + epsilon)).powi(d),
        upper: (m / alpha + 2.0).powi(d),
        zeta_prime_upper: (2.0 / alpha + 2.0).powi(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{verify_config, Verdict};
    use crate::graph::independent_kissing_number_with_cap;
    use proptest::prelude::*;

    fn zeta(cfg: &KissingConfig) -> usize {
        let g = cfg
            .intersection_graph(crate::geometry::DEFAULT_TOLERANCE)
            .unwrap();
        independent_kissing_number_with_cap(&g, 64).unwrap().zeta
    }

    #[test]
    fn unit_disk_pentagon() {
        let cfg = config_unit_disks(0.01).unwrap();
        assert_eq!(verify_config(&cfg, false), Verdict::Valid);
        assert_eq!(zeta(&cfg), 5);
        assert!(config_unit_disks(0.3).is_err());
    }

    #[test]
    fn icosahedron() {
        let cfg = config_balls_icosahedron(0.001).unwrap();
        assert_eq!(verify_config(&cfg, false), Verdict::Valid);
        assert_eq!(cfg.claimed_zeta, 12);
        assert_eq!(zeta(&cfg), 12);
        let r = cfg.independents[0].center().norm();
        assert!((r - 2.001 * (2.0 * PI / 5.0).sin()).abs() < 1e-12);
        let wide = config_balls_icosahedron(0.9).unwrap();
        assert!((wide.independents[0].center().norm() - 2.758).abs() < 1e-3);
        assert!(
            matches!(verify_config(&wide, false), Verdict::Invalid(r) if r.starts_with("core misses"))
        );
        assert!(config_balls_icosahedron(0.0).is_err());
    }

    #[test]
    fn hypercube_translates() {
        let cfg = config_hypercube_translates(2, 0.1).unwrap();
        assert_eq!(verify_config(&cfg, false), Verdict::Valid);
        let c: Vec<Vec<f64>> = cfg
            .independents
            .iter()
            .map(|s| s.center().coords().to_vec())
            .collect();
        assert_eq!(
            c,
            vec![
                vec![-0.1, -0.1],
                vec![1.1, -0.1],
                vec![-0.1, 1.1],
                vec![1.1, 1.1]
            ]
        );
        for d in 1..=6 {
            let cfg = config_hypercube_translates(d, 0.1 / (d as f64).sqrt()).unwrap();
            assert_eq!(cfg.independents.len(), 1 << d);
            assert_eq!(verify_config(&cfg, false), Verdict::Valid);
        }
        assert!(config_hypercube_translates(4, 0.25).is_err());
    }

    #[test]
    fn congruent_hypercubes() {
        for d in 2..=4 {
            let cfg = config_congruent_hypercubes(d, 0.01).unwrap();
            assert_eq!(cfg.independents.len(), 1 << (d + 1));
            assert_eq!(verify_config(&cfg, false), Verdict::Valid, "d = {d}");
            assert_eq!(zeta(&cfg), 1 << (d + 1));
        }
        let lo = config_congruent_hypercubes(2, 0.01).unwrap();
        let hi = config_congruent_hypercubes(3, 0.01).unwrap();
        assert_eq!(hi.independents.len(), 2 * lo.independents.len());
    }

    #[test]
    fn kgons() {
        for k in [3, 5, 6, 7, 8, 9, 12, 40] {
            let cfg = config_regular_kgon(k).unwrap();
            assert_eq!(verify_config(&cfg, false), Verdict::Valid, "k = {k}");
            assert_eq!(zeta(&cfg), 5, "k = {k}");
        }
        assert!(config_regular_kgon(4).is_err());
        let c = config_regular_kgon(7).unwrap();
        let d = c.independents[0]
            .center()
            .distance(&c.independents[1].center());
        assert!((d - 3.56 * (PI / 5.0).sin()).abs() < 1e-12 && d > 2.09);
    }

    #[test]
    fn kgon_rings_survive_rotation() {
        for k in [3, 5, 6, 7, 9] {
            for step in 0..24 {
                let rot = step as f64 * 2.0 * PI / 24.0 / k as f64;
                let mut cfg = config_regular_kgon(k).unwrap();
                let turn = |s: &Shape| match s {
                    Shape::RegularKGon {
                        center,
                        k,
                        circumradius,
                        ..
                    } => Shape::kgon(center.clone(), *k, *circumradius, rot).unwrap(),
                    _ => unreachable!(),
                };
                cfg.core = turn(&cfg.core);
                cfg.independents = cfg.independents.iter().map(turn).collect();
                assert_eq!(
                    verify_config(&cfg, false),
                    Verdict::Valid,
                    "k = {k}, rotation {rot}"
                );
            }
        }
    }

    #[test]
    fn eleven_disks() {
        let cfg = config_disks_radii_1_2();
        assert_eq!(verify_config(&cfg, false), Verdict::Valid);
        assert_eq!(zeta(&cfg), 11);
        for s in &cfg.independents {
            assert!(s.center().norm() < 3.0);
        }
    }

    #[test]
    fn fat_formulas() {
        let b = fat_bound_formulas(1.0, 1.0, 2, 0.01).unwrap();
        assert_eq!(b.upper, 9.0);
        assert_eq!(b.zeta_prime_upper, 16.0);
        let b = fat_bound_formulas(1.0, 2.0, 1, 1e-12).unwrap();
        assert!((b.lower - 2.0).abs() < 1e-9);
        let b = fat_bound_formulas(1.0 / 2f64.sqrt(), 4.0, 2, 0.1).unwrap();
        assert!((b.upper - (4.0 * 2f64.sqrt() + 2.0).powi(2)).abs() < 1e-9);
        assert!(fat_bound_formulas(0.0, 1.0, 2, 0.1).is_err());
        assert!(fat_bound_formulas(1.0, 0.5, 2, 0.1).is_err());
        assert!(fat_bound_formulas(1.0, 1.0, 0, 0.1).is_err());
        assert!(fat_bound_formulas(1.0, 1.0, 2, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn fat_lower_below_upper(alpha in 0.01..=1.0f64, m in 1.0..100.0f64, d in 1u32..8, eps in 1e-6..0.5f64) {
            let b = fat_bound_formulas(alpha, m, d, eps).unwrap();
            prop_assert!(b.lower <= b.upper);
        }
    }
}
