//! Chain between two touching circles of radius `R` and their common tangent
//! line.
//!
//! The line is the x-axis and the big circles sit at `(-R, R)` and `(R, R)`,
//! touching at `(0, R)`. Circle 1 rests on the line; every later circle
//! nestles between the two big circles and its predecessor, climbing towards
//! the contact point.

use crate::error::{positive, Error, Result};
use crate::geometry::{
    left_of_violation, line_tangency_residual, outside_violation, place_tangent_circle,
    tangency_residual, Branch, Line, PlacedCircle, Point, Tangency,
};
use crate::sequence::PackingSequence;
use crate::soddy::{inner_tangent_radius, inner_tangent_radius_with_line, TangentTriple};
use crate::verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LensSpec {
    pub radius: f64,
    pub count: usize,
}

pub fn big_circles(radius: f64) -> [PlacedCircle; 2] {
    [
        PlacedCircle {
            center: Point::new(-radius, radius),
            radius,
        },
        PlacedCircle {
            center: Point::new(radius, radius),
            radius,
        },
    ]
}

/// `2n(n + 1)`, or `None` on overflow.
pub fn closed_form_denominator(n: u64) -> Option<u64> {
    n.checked_add(1)?.checked_mul(n)?.checked_mul(2)
}

/// `R / (2n(n + 1))`
pub fn closed_form(n: u64, radius: f64) -> Result<f64> {
    let radius = positive("radius", radius)?;
    if n < 1 {
        return Err(Error::input("n", "must be at least 1"));
    }
    let n = n as f64;
    Ok(radius / (2.0 * n * (n + 1.0)))
}

pub fn pack(spec: &LensSpec) -> Result<PackingSequence> {
    let big_r = positive("radius", spec.radius)?;
    if spec.count < 1 {
        return Err(Error::input("count", "must be at least 1"));
    }
    let [left, right] = big_circles(big_r);
    let mut seq = PackingSequence::default();
    let mut r = inner_tangent_radius_with_line(big_r, big_r)?;
    for i in 0..spec.count {
        if i > 0 {
            r = inner_tangent_radius(&TangentTriple::new(big_r, big_r, r)?)?;
        }
        let placed = place_tangent_circle(
            &left,
            &right,
            r,
            Tangency::External,
            Tangency::External,
            Branch::Lower,
        )?;
        seq.push(placed, None);
    }
    Ok(seq)
}

/// Tangency to both big circles, to the line (circle 1) and to the
/// predecessor, plus distance from the symmetry axis. `tolerance` is relative
/// to `R`.
pub fn verify(spec: &LensSpec, seq: &PackingSequence, tolerance: f64) -> VerificationReport {
    let big_r = spec.radius;
    let mut report = VerificationReport::new(tolerance * big_r);
    let [left, right] = big_circles(big_r);
    let axis = Line::new(Point::ORIGIN, Point::new(1.0, 0.0)).expect("unit direction");
    let mut prev: Option<PlacedCircle> = None;
    for pc in &seq.circles {
        let c = pc.placed();
        let i = pc.index;
        report.record(
            i,
            "tangent to left circle",
            tangency_residual(&c, &left, Tangency::External),
        );
        report.record(
            i,
            "tangent to right circle",
            tangency_residual(&c, &right, Tangency::External),
        );
        if i == 1 {
            report.record(i, "tangent to line", line_tangency_residual(&c, &axis));
        }
        if let Some(p) = prev {
            report.record(
                i,
                "tangent to predecessor",
                tangency_residual(&c, &p, Tangency::External),
            );
            report.record(i, "disjoint from predecessor", outside_violation(&c, &p));
        }
        report.record(i, "above line", left_of_violation(&c, &axis));
        report.record(i, "outside left circle", outside_violation(&c, &left));
        report.record(i, "outside right circle", outside_violation(&c, &right));
        report.record(i, "on symmetry axis", libm::fabs(c.center.x));
        prev = Some(c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(1, 1.0).unwrap(), 0.25);
        assert_eq!(closed_form(6, 1.0).unwrap(), 1.0 / 84.0);
        assert_eq!(closed_form(8, 1.0).unwrap(), 1.0 / 144.0);
        assert_eq!(closed_form_denominator(3), Some(24));
        assert!(closed_form(0, 1.0).is_err());
        assert!(closed_form(1, -1.0).is_err());
    }

    #[test]
    fn chain_matches_closed_form_and_verifies() {
        let spec = LensSpec {
            radius: 2.5,
            count: 200,
        };
        let seq = pack(&spec).unwrap();
        for c in &seq.circles {
            let exact = closed_form(c.index as u64, 2.5).unwrap();
            assert!(libm::fabs(c.radius - exact) <= 1e-12 * exact, "{}", c.index);
            assert!(libm::fabs(c.center.x) <= 1e-12 * 2.5);
        }
        let report = verify(&spec, &seq, 1e-9);
        assert!(report.pass, "{:?}", report.worst());
    }

    #[test]
    fn centers_climb_towards_the_contact_point() {
        let seq = pack(&LensSpec {
            radius: 1.0,
            count: 3,
        })
        .unwrap();
        let y: alloc::vec::Vec<f64> = seq.circles.iter().map(|c| c.center.y).collect();
        assert!(libm::fabs(y[0] - 0.25) < 1e-15);
        assert!(libm::fabs(y[1] - 7.0 / 12.0) < 1e-15);
        assert!(y[2] > y[1] && y[2] < 1.0);
    }
}
