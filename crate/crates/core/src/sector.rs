//! Chains in a circular sector of radius `R` and central angle `theta1`.
//!
//! The apex `O` sits at the origin with side `OB` on the positive x-axis and
//! side `OA` at angle `theta1`. Circle 1 touches both sides and the arc. Each
//! later circle touches `OB`, the arc and its predecessor; it subtends angle
//! `theta_i` at `O`, so its center sits at distance `R - r_i` from `O` on the
//! ray at angle `theta_i / 2`, and `sin(theta_i / 2) = r_i / (R - r_i)`.

use core::f64::consts::{PI, SQRT_2};

use crate::error::{positive, Error, Result};
use crate::geometry::{
    inside_violation, left_of_violation, line_tangency_residual, outside_violation,
    tangency_residual, Line, PlacedCircle, Point, Tangency,
};
use crate::sequence::PackingSequence;
use crate::verify::VerificationReport;

/// Radii below this stop the chain and mark it truncated.
pub const MIN_RADIUS: f64 = 1e-300;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectorSpec {
    pub radius: f64,
    /// Radians, strictly between 0 and pi.
    pub central_angle: f64,
    pub count: usize,
}

fn check_angle(theta: f64) -> Result<f64> {
    if theta > 0.0 && theta < PI {
        Ok(theta)
    } else {
        Err(Error::InvalidAngle(theta))
    }
}

/// `R sin(theta1/2) / (1 + sin(theta1/2))`
pub fn first_radius(spec: &SectorSpec) -> Result<f64> {
    let r = positive("radius", spec.radius)?;
    let s = libm::sin(0.5 * check_angle(spec.central_angle)?);
    Ok(r * s / (1.0 + s))
}

/// Radius and subtended angle of the circle after one subtending `theta`.
///
/// With `s = sin(theta/2)`:
/// `r' = R (s^2 + 3s - sqrt2 sin(theta)) / (1 + 3s)^2` and
/// `theta' = 2 asin((s^2 + 3s - sqrt2 sin(theta)) / (sqrt2 sin(theta) + 8s^2 + 3s + 1))`.
pub fn step(theta: f64, radius: f64) -> Result<(f64, f64)> {
    let big_r = positive("radius", radius)?;
    let theta = check_angle(theta)?;
    let s = libm::sin(0.5 * theta);
    let q = SQRT_2 * libm::sin(theta);
    let num = s * s + 3.0 * s - q;
    let lead = 1.0 + 3.0 * s;
    let r = big_r * num / (lead * lead);
    let next = 2.0 * libm::asin(num / (q + 8.0 * s * s + 3.0 * s + 1.0));
    let check = 2.0 * libm::asin(r / (big_r - r));
    if !(r > 0.0) || libm::fabs(next - check) > 1e-12 {
        return Err(Error::InternalCheckFailed("sector step angle mismatch"));
    }
    Ok((r, next))
}

pub fn pack(spec: &SectorSpec) -> Result<PackingSequence> {
    let big_r = positive("radius", spec.radius)?;
    let theta1 = check_angle(spec.central_angle)?;
    if spec.count < 1 {
        return Err(Error::input("count", "must be at least 1"));
    }
    let mut seq = PackingSequence::default();
    let (mut r, mut theta) = (first_radius(spec)?, theta1);
    loop {
        let center = Point::polar(big_r - r, 0.5 * theta);
        seq.push(PlacedCircle { center, radius: r }, Some(theta));
        if seq.len() == spec.count {
            break;
        }
        (r, theta) = step(theta, big_r)?;
        if r < MIN_RADIUS * big_r {
            seq.truncated = true;
            break;
        }
    }
    Ok(seq)
}

/// Tangency to `OB`, the arc and the predecessor (and `OA` for circle 1),
/// containment in the sector and the angle identity. `tolerance` is relative
/// to `R`.
pub fn verify(spec: &SectorSpec, seq: &PackingSequence, tolerance: f64) -> VerificationReport {
    let big_r = spec.radius;
    let theta1 = spec.central_angle;
    let mut report = VerificationReport::new(tolerance * big_r);
    let arc = PlacedCircle {
        center: Point::ORIGIN,
        radius: big_r,
    };
    let ob = Line::new(Point::ORIGIN, Point::new(1.0, 0.0)).expect("unit direction");
    // reversed so that the sector lies on its left
    let oa = Line::new(
        Point::ORIGIN,
        Point::new(-libm::cos(theta1), -libm::sin(theta1)),
    )
    .expect("unit direction");
    let mut prev: Option<PlacedCircle> = None;
    for pc in &seq.circles {
        let c = pc.placed();
        let i = pc.index;
        report.record(i, "tangent to OB", line_tangency_residual(&c, &ob));
        report.record(
            i,
            "tangent to arc",
            tangency_residual(&c, &arc, Tangency::Internal),
        );
        if i == 1 {
            report.record(i, "tangent to OA", line_tangency_residual(&c, &oa));
        }
        if let Some(p) = prev {
            report.record(
                i,
                "tangent to predecessor",
                tangency_residual(&c, &p, Tangency::External),
            );
            report.record(i, "disjoint from predecessor", outside_violation(&c, &p));
        }
        report.record(i, "inside arc", inside_violation(&c, &arc));
        report.record(i, "above OB", left_of_violation(&c, &ob));
        report.record(i, "below OA", left_of_violation(&c, &oa));
        if let Some(theta) = pc.angle {
            let ident = libm::sin(0.5 * theta) * (big_r - c.radius) - c.radius;
            report.record(i, "subtended angle", libm::fabs(ident));
        }
        prev = Some(c);
    }
    report
}
