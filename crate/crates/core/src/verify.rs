//! Residual bookkeeping and a closed-form-free tangent radius solver.

use alloc::vec::Vec;

use crate::error::{positive, Error, Result};
use crate::geometry::{
    line_tangency_residual, place_tangent_circle, place_tangent_to_line, tangency_residual, Branch,
    Line, PlacedCircle, Tangency,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    /// 1-based index of the checked circle.
    pub circle: usize,
    pub constraint: &'static str,
    pub value: f64,
}

/// Tangency residuals and containment violations for one packing.
///
/// `pass` is kept equal to `max_residual <= tolerance`. A NaN residual counts
/// as infinite.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub residuals: Vec<Residual>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(tolerance: f64) -> Self {
        VerificationReport {
            residuals: Vec::new(),
            max_residual: 0.0,
            tolerance,
            pass: 0.0 <= tolerance,
        }
    }

    pub fn record(&mut self, circle: usize, constraint: &'static str, value: f64) {
        let value = if value.is_nan() { f64::INFINITY } else { value };
        self.residuals.push(Residual {
            circle,
            constraint,
            value,
        });
        if value > self.max_residual {
            self.max_residual = value;
        }
        self.pass = self.max_residual <= self.tolerance;
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for r in other.residuals {
            self.record(r.circle, r.constraint, r.value);
        }
    }

    pub fn worst(&self) -> Option<&Residual> {
        self.residuals
            .iter()
            .fold(None, |best: Option<&Residual>, r| match best {
                Some(b) if b.value >= r.value => Some(b),
                _ => Some(r),
            })
    }
}

const SCAN_SAMPLES: usize = 256;
const MAX_ITERATIONS: usize = 200;

/// Finds a radius `r` for which a circle tangent to every fixed circle (and
/// the line, if given) exists.
///
/// The candidate of radius `r` is placed against the first two constraints
/// (the first circle and the line when a line is present, the first two
/// circles otherwise) on `branch`; the remaining constraint supplies a signed
/// residual. The bracket is scanned on a log grid for the first sign change,
/// which is then bisected. The default bracket is
/// `(1e-9 * scale, smallest fixed radius)` where `scale` is the largest fixed
/// radius.
pub fn bisect_tangent_radius(
    fixed: &[(PlacedCircle, Tangency)],
    line: Option<&Line>,
    bracket: Option<(f64, f64)>,
    branch: Branch,
) -> Result<f64> {
    let needed = if line.is_some() { 2 } else { 3 };
    if fixed.len() != needed {
        return Err(Error::input(
            "fixed",
            "need three circles, or two circles and a line",
        ));
    }
    let scale = fixed.iter().map(|(c, _)| c.radius).fold(0.0, f64::max);
    let smallest = fixed
        .iter()
        .map(|(c, _)| c.radius)
        .fold(f64::INFINITY, f64::min);
    let (lo, hi) = bracket.unwrap_or((1e-9 * scale, smallest));
    positive("bracket", lo)?;
    positive("bracket", hi)?;
    if lo >= hi {
        return Err(Error::input("bracket", "lower end must be below upper end"));
    }

    let eval = |r: f64| -> Option<f64> {
        let placed = place(fixed, line, r, branch).ok()?;
        let (other, kind) = fixed[needed - 1];
        let d = placed.center.distance(other.center);
        let s = d - kind.center_distance(other.radius, r);
        s.is_finite().then_some(s)
    };

    let ratio = libm::pow(hi / lo, 1.0 / (SCAN_SAMPLES - 1) as f64);
    let mut prev: Option<(f64, f64)> = None;
    let mut found = None;
    for i in 0..SCAN_SAMPLES {
        let r = if i == SCAN_SAMPLES - 1 {
            hi
        } else {
            lo * libm::pow(ratio, i as f64)
        };
        let Some(f) = eval(r) else {
            prev = None;
            continue;
        };
        if f == 0.0 {
            found = Some((r, r));
            break;
        }
        if let Some((pr, pf)) = prev {
            if (pf < 0.0) != (f < 0.0) {
                found = Some((pr, r));
                break;
            }
        }
        prev = Some((r, f));
    }
    let (mut a, mut b) = found.ok_or(Error::NoRoot)?;

    if a != b {
        let mut fa = eval(a).ok_or(Error::NoRoot)?;
        let abs_tol = 1e-13 * scale;
        for _ in 0..MAX_ITERATIONS {
            if b - a <= abs_tol.min(1e-14 * b) {
                break;
            }
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            let fm = eval(m).ok_or(Error::NoRoot)?;
            if fm == 0.0 {
                a = m;
                b = m;
                break;
            }
            if (fm < 0.0) == (fa < 0.0) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
    }
    let root = 0.5 * (a + b);

    let placed = place(fixed, line, root, branch)?;
    let mut worst: f64 = 0.0;
    for (c, kind) in fixed {
        worst = worst.max(tangency_residual(&placed, c, *kind));
    }
    if let Some(l) = line {
        worst = worst.max(line_tangency_residual(&placed, l));
    }
    if worst <= 1e-11 * scale {
        Ok(root)
    } else {
        Err(Error::NoRoot)
    }
}

fn place(
    fixed: &[(PlacedCircle, Tangency)],
    line: Option<&Line>,
    r: f64,
    branch: Branch,
) -> Result<PlacedCircle> {
    match line {
        Some(l) => place_tangent_to_line(&fixed[0].0, fixed[0].1, l, r, branch),
        None => place_tangent_circle(&fixed[0].0, &fixed[1].0, r, fixed[0].1, fixed[1].1, branch),
    }
}
