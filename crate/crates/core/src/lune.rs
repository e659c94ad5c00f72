//! Chains in the crescent between a circle of radius `b` and the circle of
//! radius `R` that touches it from outside.
//!
//! The outer circle is centered at the origin and the reference circle `b` at
//! `(-(R - b), 0)`, so the crescent pinches to a cusp at `(-R, 0)` and is
//! widest on the positive x-axis. The initial circle `a` sits in the upper
//! half of the crescent and splits it into a minor region (the upper arm up
//! to the cusp) and a major region (around the widest point and back along
//! the lower arm).
//!
//! Each circle of either chain touches `b`, the outer circle and its
//! predecessor. A circle tangent to `b`, the outer circle and `r_i` has two
//! possible radii: the smaller fills the minor pocket, the larger the major
//! one. The minor chain always takes the smaller. The major chain starts with
//! the larger and from then on takes whichever radius is not its
//! predecessor's, so it climbs towards the widest point and then shrinks
//! along the lower arm without ever oscillating.

use alloc::vec::Vec;

use crate::error::{positive, Error, Result};
use crate::geometry::{
    inside_violation, outside_violation, place_tangent_circle, tangency_residual, Branch,
    PlacedCircle, Point, Tangency,
};
use crate::sequence::{PackedCircle, PackingSequence};
use crate::verify::VerificationReport;

/// Ascent threshold for radii at `R = 1`; scaled with `R`.
pub const ASCENT_EPSILON: f64 = 1e-17;

/// Relative tolerance for hitting the largest major radius.
pub const MAX_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LuneSpec {
    /// Radius of the outer circle.
    pub outer: f64,
    /// Radius of the initial circle.
    pub a: f64,
    /// Radius of the reference circle.
    pub b: f64,
    pub minor_count: usize,
    pub major_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resonance {
    Resonant,
    NonResonant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MajorPhase {
    Ascending,
    AtMax,
    Descending,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LunePacking {
    pub initial: PackedCircle,
    pub minor: PackingSequence,
    pub major: PackingSequence,
    /// One entry per major circle.
    pub major_phases: Vec<MajorPhase>,
    pub r_max: f64,
    pub resonance: Resonance,
    /// `a + b = R`: both regions are congruent.
    pub degenerate: bool,
}

fn check_pair(r: f64, b: f64, big_r: f64) -> Result<(f64, f64, f64)> {
    let r = positive("r", r)?;
    let b = positive("b", b)?;
    let big_r = positive("R", big_r)?;
    if b >= big_r {
        return Err(Error::input("b", "must be smaller than R"));
    }
    if r + b - big_r > 1e-12 * big_r {
        return Err(Error::input("r", "r + b must not exceed R"));
    }
    Ok((r, b, big_r))
}

fn step(r: f64, b: f64, big_r: f64, sign: f64) -> Result<f64> {
    let (r, b, big_r) = check_pair(r, b, big_r)?;
    let root = libm::sqrt((b * big_r * r * (big_r - b - r)).max(0.0));
    let p = (big_r + b) * r + b * big_r;
    let den = p * p - 4.0 * r * b * big_r * big_r;
    Ok(r * b * big_r * ((big_r - b) * r + b * big_r + sign * 2.0 * root) / den)
}

/// Smaller neighbour of `r`:
/// `r b R ((R - b) r + bR - 2 sqrt(bRr(R - b - r))) / (((R + b) r + bR)^2 - 4 r b R^2)`.
pub fn minor_step(r: f64, b: f64, big_r: f64) -> Result<f64> {
    step(r, b, big_r, -1.0)
}

/// Larger neighbour of `r`, the same expression with `+ 2 sqrt(..)`.
pub fn major_step(r: f64, b: f64, big_r: f64) -> Result<f64> {
    step(r, b, big_r, 1.0)
}

/// `4bR(R - b) / (R + b)^2`, the radius of the two equal circles that touch
/// each other on the x-axis. It is the fixed point of [`major_step`].
pub fn max_major_radius(b: f64, big_r: f64) -> Result<f64> {
    let b = positive("b", b)?;
    let big_r = positive("R", big_r)?;
    if b >= big_r {
        return Err(Error::input("b", "must be smaller than R"));
    }
    let s = big_r + b;
    Ok(4.0 * b * big_r * (big_r - b) / (s * s))
}

pub fn classify_resonance(r: f64, b: f64, big_r: f64) -> Result<Resonance> {
    let r = positive("r", r)?;
    let r_max = max_major_radius(b, big_r)?;
    Ok(if libm::fabs(r - r_max) <= MAX_TOLERANCE * big_r {
        Resonance::NonResonant
    } else {
        Resonance::Resonant
    })
}

fn boundary(spec: &LuneSpec) -> (PlacedCircle, PlacedCircle) {
    let outer = PlacedCircle {
        center: Point::ORIGIN,
        radius: spec.outer,
    };
    let reference = PlacedCircle {
        center: Point::new(-(spec.outer - spec.b), 0.0),
        radius: spec.b,
    };
    (outer, reference)
}

fn place(
    reference: &PlacedCircle,
    outer: &PlacedCircle,
    r: f64,
    branch: Branch,
) -> Result<PlacedCircle> {
    place_tangent_circle(
        reference,
        outer,
        r,
        Tangency::External,
        Tangency::Internal,
        branch,
    )
}

/// Places a circle of radius `r` on whichever half of the crescent makes it
/// touch `prev`; the lower half wins ties.
fn place_after(
    reference: &PlacedCircle,
    outer: &PlacedCircle,
    prev: &PlacedCircle,
    r: f64,
) -> Result<PlacedCircle> {
    let up = place(reference, outer, r, Branch::Upper)?;
    let down = place(reference, outer, r, Branch::Lower)?;
    let res_up = tangency_residual(&up, prev, Tangency::External);
    let res_down = tangency_residual(&down, prev, Tangency::External);
    Ok(if res_up < res_down - 1e-12 * outer.radius {
        up
    } else {
        down
    })
}

pub fn pack_lune(spec: &LuneSpec) -> Result<LunePacking> {
    let big_r = positive("R", spec.outer)?;
    let a = positive("a", spec.a)?;
    let b = positive("b", spec.b)?;
    if b >= big_r {
        return Err(Error::input("b", "must be smaller than R"));
    }
    if a >= big_r {
        return Err(Error::input("a", "must be smaller than R"));
    }
    if a + b - big_r > 1e-12 * big_r {
        return Err(Error::input("a", "a + b must not exceed R"));
    }
    let degenerate = libm::fabs(big_r - a - b) <= 1e-12 * big_r;
    let r_max = max_major_radius(b, big_r)?;
    let (outer, reference) = boundary(spec);

    let first = place(&reference, &outer, a, Branch::Upper)?;
    let initial = PackedCircle {
        index: 0,
        radius: a,
        center: first.center,
        center_known: true,
        angle: None,
    };

    let mut minor = PackingSequence::default();
    let mut r = a;
    for _ in 0..spec.minor_count {
        r = minor_step(r, b, big_r)?;
        minor.push(place(&reference, &outer, r, Branch::Upper)?, None);
    }

    let mut major = PackingSequence::default();
    let mut phases = Vec::with_capacity(spec.major_count);
    let eps = ASCENT_EPSILON * big_r;
    let mut prev_r = minor_step(a, b, big_r)?;
    let mut cur = first;
    for i in 0..spec.major_count {
        let next = if i == 0 {
            major_step(cur.radius, b, big_r)?
        } else {
            let lo = minor_step(cur.radius, b, big_r)?;
            let hi = major_step(cur.radius, b, big_r)?;
            if libm::fabs(lo - prev_r) > libm::fabs(hi - prev_r) {
                lo
            } else {
                hi
            }
        };
        let placed = place_after(&reference, &outer, &cur, next)?;
        phases.push(if libm::fabs(next - r_max) <= MAX_TOLERANCE * big_r {
            MajorPhase::AtMax
        } else if next > cur.radius + eps {
            MajorPhase::Ascending
        } else {
            MajorPhase::Descending
        });
        major.push(placed, None);
        prev_r = cur.radius;
        cur = placed;
    }

    Ok(LunePacking {
        initial,
        minor,
        major,
        major_phases: phases,
        r_max,
        resonance: classify_resonance(a, b, big_r)?,
        degenerate,
    })
}

/// Every circle against the reference circle, the outer circle and its
/// predecessor (the initial circle for the first of each chain), plus
/// containment in the crescent. `tolerance` is relative to `R`.
pub fn verify(spec: &LuneSpec, packing: &LunePacking, tolerance: f64) -> VerificationReport {
    let mut report = VerificationReport::new(tolerance * spec.outer);
    let (outer, reference) = boundary(spec);
    let first = packing.initial.placed();
    let mut check = |i: usize, c: &PlacedCircle, prev: Option<&PlacedCircle>| {
        report.record(
            i,
            "tangent to reference circle",
            tangency_residual(c, &reference, Tangency::External),
        );
        report.record(
            i,
            "tangent to outer circle",
            tangency_residual(c, &outer, Tangency::Internal),
        );
        report.record(
            i,
            "outside reference circle",
            outside_violation(c, &reference),
        );
        report.record(i, "inside outer circle", inside_violation(c, &outer));
        if let Some(p) = prev {
            report.record(
                i,
                "tangent to predecessor",
                tangency_residual(c, p, Tangency::External),
            );
            report.record(i, "disjoint from predecessor", outside_violation(c, p));
        }
    };
    check(0, &first, None);
    for chain in [&packing.minor, &packing.major] {
        let mut prev = first;
        for pc in &chain.circles {
            let c = pc.placed();
            check(pc.index, &c, Some(&prev));
            prev = c;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::soddy::third_inscribed_radii;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        libm::fabs(a - b) <= rel * libm::fabs(b)
    }

    fn spec(a: f64, minor: usize, major: usize) -> LuneSpec {
        LuneSpec {
            outer: 1.0,
            a,
            b: 0.5,
            minor_count: minor,
            major_count: major,
        }
    }

    #[test]
    fn steps_match_the_quadratic_roots() {
        assert!(close(
            minor_step(0.25, 0.5, 1.0).unwrap(),
            0.12773958089728293,
            1e-15
        ));
        assert!(close(
            minor_step(4.0 / 33.0, 0.5, 1.0).unwrap(),
            4.0 / 57.0,
            1e-15
        ));
        for &(r, b, big_r) in &[(0.1, 0.3, 1.0), (0.2, 0.7, 1.0), (1e-4, 2.0, 3.0)] {
            let p = third_inscribed_radii(r, b, big_r).unwrap();
            assert!(close(minor_step(r, b, big_r).unwrap(), p.c_min, 1e-12));
            assert!(close(major_step(r, b, big_r).unwrap(), p.c_max, 1e-12));
        }
        assert!(minor_step(0.6, 0.5, 1.0).is_err());
    }

    #[test]
    fn largest_major_radius() {
        assert!(close(max_major_radius(0.5, 1.0).unwrap(), 4.0 / 9.0, 1e-15));
        assert!(close(max_major_radius(1.0 / 3.0, 1.0).unwrap(), 0.5, 1e-15));
        assert!(max_major_radius(1.0, 1.0).is_err());
        let m = max_major_radius(0.5, 1.0).unwrap();
        assert!(close(major_step(m, 0.5, 1.0).unwrap(), m, 1e-12));
        let r = major_step(0.25, 0.5, 1.0).unwrap();
        assert!(r > 0.25 && r <= 0.5);
    }

    #[test]
    fn resonance() {
        let m = 4.0 / 9.0;
        assert_eq!(
            classify_resonance(m, 0.5, 1.0).unwrap(),
            Resonance::NonResonant
        );
        assert_eq!(
            classify_resonance(0.25, 0.5, 1.0).unwrap(),
            Resonance::Resonant
        );
        assert_eq!(
            classify_resonance(m * (1.0 + 1e-15), 0.5, 1.0).unwrap(),
            Resonance::NonResonant
        );
    }

    #[test]
    fn minor_chain_examples() {
        let p = pack_lune(&spec(0.25, 3, 0)).unwrap();
        let r = p.minor.radii();
        for (got, want) in r.iter().zip([0.1277, 0.0732, 0.0465]) {
            assert!(libm::fabs(got - want) < 5e-5);
        }
    }

    #[test]
    fn major_chain_climbs_then_falls() {
        let s = spec(4.0 / 9.0 - 1e-3, 5, 30);
        let p = pack_lune(&s).unwrap();
        let r = p.major.radii();
        let top = r
            .iter()
            .enumerate()
            .fold(0, |best, (i, v)| if *v > r[best] { i } else { best });
        assert!(r[..=top].windows(2).all(|w| w[1] > w[0]));
        assert!(r[top..].windows(2).all(|w| w[1] < w[0]));
        assert!(libm::fabs(r[top] - 4.0 / 9.0) < 1e-3 || r[top] > 4.0 / 9.0);
        let report = verify(&s, &p, 1e-9);
        assert!(report.pass, "{:?}", report.worst());
    }

    #[test]
    fn fixed_point_start_gives_a_mirror_twin() {
        let m = max_major_radius(0.5, 1.0).unwrap();
        let s = spec(m, 2, 4);
        let p = pack_lune(&s).unwrap();
        assert_eq!(p.resonance, Resonance::NonResonant);
        assert!(close(p.major.circles[0].radius, m, 1e-12));
        assert_eq!(p.major_phases[0], MajorPhase::AtMax);
        assert!(p.major.circles[0].center.y < 0.0);
        assert!(p.major.circles[1].radius < m);
        assert!(verify(&s, &p, 1e-9).pass);
    }

    #[test]
    fn degenerate_regions_mirror_each_other() {
        let s = spec(0.5, 6, 6);
        let p = pack_lune(&s).unwrap();
        assert!(p.degenerate);
        for (u, l) in p.minor.circles.iter().zip(&p.major.circles) {
            assert!(close(u.radius, l.radius, 1e-12));
            assert!(libm::fabs(u.center.y + l.center.y) < 1e-12);
        }
        assert!(verify(&s, &p, 1e-9).pass);
    }

    #[test]
    fn too_large_initial_circle() {
        assert!(matches!(
            pack_lune(&spec(0.6, 1, 1)),
            Err(Error::InvalidInput { param: "a", .. })
        ));
    }
}
