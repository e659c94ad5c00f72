//! Chains in a square of side `x` with vertices `A = (0, 0)`, `B = (x, 0)`,
//! `C = (x, x)`, `D = (0, x)`.
//!
//! The square holds a semicircle on `AB` (the E-circle, center `(x/2, 0)`) and
//! a quarter circle of radius `x` centered at `B`. Between the two arcs lies a
//! crescent with a cusp at `A`. Mode A starts the chain with the largest
//! circle in that crescent; mode B adds a second semicircle on `AD` (the
//! G-circle, center `(0, x/2)`) and starts with the circle that also touches
//! it from inside. Every later circle touches the two arcs and its
//! predecessor, so the chain runs into the cusp.

use crate::error::{positive, Error, Result};
use crate::geometry::{
    inside_violation, outside_violation, place_tangent_circle, tangency_residual, Branch,
    PlacedCircle, Point, Tangency,
};
use crate::sequence::PackingSequence;
use crate::soddy::third_inscribed_radii;
use crate::verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SquareMode {
    /// Semicircle on `AB` and quarter circle at `B`.
    A,
    /// Semicircles on `AB` and `AD` and quarter circle at `B`.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareSpec {
    pub side: f64,
    pub mode: SquareMode,
    pub count: usize,
}

pub fn e_circle(x: f64) -> PlacedCircle {
    PlacedCircle {
        center: Point::new(0.5 * x, 0.0),
        radius: 0.5 * x,
    }
}

pub fn b_circle(x: f64) -> PlacedCircle {
    PlacedCircle {
        center: Point::new(x, 0.0),
        radius: x,
    }
}

pub fn g_circle(x: f64) -> PlacedCircle {
    PlacedCircle {
        center: Point::new(0.0, 0.5 * x),
        radius: 0.5 * x,
    }
}

pub fn first_radius_mode_a(x: f64) -> Result<f64> {
    Ok(positive("side", x)? / 4.0)
}

pub fn first_center_mode_a(x: f64) -> Result<Point> {
    let x = positive("side", x)?;
    Ok(Point::new(0.75 * x, x * core::f64::consts::FRAC_1_SQRT_2))
}

/// Next radius of the chain against the two arcs.
///
/// `r' = x (r^2 + x r - 2 r sqrt(x r - 2 r^2)) / (9 r^2 - 2 x r + x^2)`
pub fn recurrence_step(r: f64, x: f64) -> Result<f64> {
    let x = positive("side", x)?;
    let r = positive("radius", r)?;
    if r > 0.5 * x {
        return Err(Error::input("radius", "must not exceed half the side"));
    }
    let root = libm::sqrt((x * r - 2.0 * r * r).max(0.0));
    Ok(x * (r * r + x * r - 2.0 * r * root) / (9.0 * r * r - 2.0 * x * r + x * x))
}

/// `297 t^3 - 234 t^2 + 57 t - 4` with `t = r1 / x`; its roots are `4/33` and
/// the double root `1/3`.
pub fn mode_b_cubic(t: f64) -> f64 {
    ((297.0 * t - 234.0) * t + 57.0) * t - 4.0
}

fn mode_b_cubic_derivative(t: f64) -> f64 {
    (891.0 * t - 468.0) * t + 57.0
}

/// The admissible root of [`mode_b_cubic`], found numerically below `1/4`.
pub fn solve_mode_b_cubic() -> Result<f64> {
    let (mut lo, mut hi) = (1e-9, 0.25 - 1e-9);
    let f_lo = mode_b_cubic(lo);
    if (f_lo < 0.0) == (mode_b_cubic(hi) < 0.0) {
        return Err(Error::InternalCheckFailed(
            "cubic bracket has no sign change",
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (mode_b_cubic(mid) < 0.0) == (f_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = mode_b_cubic_derivative(t);
        if d == 0.0 {
            break;
        }
        t -= mode_b_cubic(t) / d;
    }
    Ok(t)
}

pub fn first_radius_mode_b(x: f64) -> Result<f64> {
    let x = positive("side", x)?;
    let t = solve_mode_b_cubic()?;
    if libm::fabs(t - 4.0 / 33.0) > 1e-12 {
        return Err(Error::InternalCheckFailed("cubic root differs from 4/33"));
    }
    Ok(4.0 * x / 33.0)
}

/// Height of a circle of radius `r` touching the E-circle from outside and
/// the G-circle from inside: `(9 x r - 13 r^2) / (x + 4 r)`.
pub fn mode_b_center_height(x: f64, r: f64) -> f64 {
    (9.0 * x * r - 13.0 * r * r) / (x + 4.0 * r)
}

pub fn first_center_mode_b(x: f64) -> Result<Point> {
    let x = positive("side", x)?;
    let center = Point::new(4.0 * x / 11.0, 20.0 * x / 33.0);
    let y = mode_b_center_height(x, 4.0 * x / 33.0);
    if libm::fabs(y - center.y) > 1e-12 * center.y {
        return Err(Error::InternalCheckFailed("first center height"));
    }
    Ok(center)
}

/// Exact denominator `4n^2 + 12n + 17` of the mode B closed form, or `None`
/// on overflow.
pub fn closed_form_mode_b_denominator(n: u64) -> Option<u64> {
    let n2 = n.checked_mul(n)?;
    n2.checked_mul(4)?
        .checked_add(n.checked_mul(12)?)?
        .checked_add(17)
}

/// `4x / (4n^2 + 12n + 17)`
pub fn closed_form_mode_b(n: u64, x: f64) -> Result<f64> {
    let x = positive("side", x)?;
    if n < 1 {
        return Err(Error::input("n", "must be at least 1"));
    }
    let n = n as f64;
    Ok(4.0 * x / (4.0 * n * n + 12.0 * n + 17.0))
}

/// Radii and centers of the first `count` circles.
pub fn pack(spec: &SquareSpec) -> Result<PackingSequence> {
    let x = positive("side", spec.side)?;
    if spec.count < 1 {
        return Err(Error::input("count", "must be at least 1"));
    }
    let e = e_circle(x);
    let b = b_circle(x);
    let mut r = match spec.mode {
        SquareMode::A => first_radius_mode_a(x)?,
        SquareMode::B => first_radius_mode_b(x)?,
    };
    let mut seq = PackingSequence::default();
    for i in 0..spec.count {
        if i > 0 {
            r = recurrence_step(r, x)?;
        }
        // every center lies above AB, so the upper solution is the one in the square
        let placed = place_tangent_circle(
            &e,
            &b,
            r,
            Tangency::External,
            Tangency::Internal,
            Branch::Upper,
        )?;
        seq.push(placed, None);
    }
    Ok(seq)
}

/// Residuals against both arcs, the predecessor, the G-circle (mode B, first
/// circle) and the square's sides. `tolerance` is relative to the side.
pub fn verify(spec: &SquareSpec, seq: &PackingSequence, tolerance: f64) -> VerificationReport {
    let x = spec.side;
    let mut report = VerificationReport::new(tolerance * x);
    let (e, b, g) = (e_circle(x), b_circle(x), g_circle(x));
    let mut prev: Option<PlacedCircle> = None;
    for pc in &seq.circles {
        let c = pc.placed();
        let i = pc.index;
        report.record(
            i,
            "tangent to E-circle",
            tangency_residual(&c, &e, Tangency::External),
        );
        report.record(
            i,
            "tangent to B-circle",
            tangency_residual(&c, &b, Tangency::Internal),
        );
        if let Some(p) = prev {
            report.record(
                i,
                "tangent to predecessor",
                tangency_residual(&c, &p, Tangency::External),
            );
            report.record(i, "disjoint from predecessor", outside_violation(&c, &p));
        }
        if i == 1 && spec.mode == SquareMode::B {
            report.record(
                i,
                "tangent to G-circle",
                tangency_residual(&c, &g, Tangency::Internal),
            );
        }
        report.record(i, "outside E-circle", outside_violation(&c, &e));
        report.record(i, "inside B-circle", inside_violation(&c, &b));
        let p = c.center;
        let r = c.radius;
        let side = (r - p.x).max(p.x + r - x).max(r - p.y).max(p.y + r - x);
        report.record(i, "inside square", side.max(0.0));
        prev = Some(c);
    }
    report
}

/// Same as [`third_inscribed_radii`] on `(r, x/2, x)`; used to cross-check
/// [`recurrence_step`].
pub fn soddy_step(r: f64, x: f64) -> Result<f64> {
    Ok(third_inscribed_radii(r, 0.5 * x, x)?.c_min)
}
