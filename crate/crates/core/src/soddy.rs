//! Closed forms for circles in mutual tangency.
//!
//! Three mutually externally tangent circles `a`, `b`, `c` have one circle
//! touching all of them from outside (the circumscribing circle) and one
//! nestled in the void between them (the inner tangent circle). Conversely,
//! two tangent circles inside a circumscribing circle of radius `R` leave two
//! pockets, and each pocket admits exactly one circle tangent to all three.

use crate::error::{positive, Error, Result};

/// Radii of three mutually externally tangent circles, in any order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangentTriple {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TangentTriple {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        Ok(TangentTriple {
            a: positive("a", a)?,
            b: positive("b", b)?,
            c: positive("c", c)?,
        })
    }

    fn validated(&self) -> Result<Self> {
        TangentTriple::new(self.a, self.b, self.c)
    }

    /// The radii sorted largest first.
    pub fn descending(&self) -> [f64; 3] {
        let mut r = [self.a, self.b, self.c];
        r.sort_by(|x, y| y.total_cmp(x));
        r
    }
}

/// Both radii of a third circle inscribed with `a` and `b` in a circle of
/// radius `R`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InscribedPair {
    pub c_min: f64,
    pub c_max: f64,
    /// `a + b = R`: both pockets are congruent and the two radii coincide.
    pub degenerate: bool,
}

/// Relative tolerance for detecting `a + b = R`.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

/// Radius of the circle internally tangent to three mutually externally
/// tangent circles.
///
/// `R = abc / (2 sqrt(abc(a+b+c)) - (ab+bc+ca))`
///
/// Fails with [`Error::InvalidTriple`] when the smallest circle is too small
/// for any circle to enclose all three, i.e. when
/// `c <= ab / (sqrt(a) + sqrt(b))^2` for the sorted triple `a >= b >= c`.
pub fn circumscribing_radius(t: &TangentTriple) -> Result<f64> {
    let t = t.validated()?;
    let [p, q, s] = t.descending();
    let root = libm::sqrt(p) + libm::sqrt(q);
    if s <= p * q / (root * root) {
        return Err(Error::InvalidTriple);
    }
    let (a, b, c) = (t.a, t.b, t.c);
    let abc = a * b * c;
    let den = 2.0 * libm::sqrt(abc * (a + b + c)) - (a * b + b * c + c * a);
    if !(den > 0.0) {
        return Err(Error::InvalidTriple);
    }
    Ok(abc / den)
}

/// Both radii of a circle tangent to `a` and `b` (externally) and to the
/// circumscribing circle of radius `R` (internally).
///
/// With `N = aR + bR - ab` and `s = 2 sqrt(abR(R - a - b))` the radii are the
/// roots `abR (N -+ s) / D` with `D = (aR + bR + ab)^2 - 4abR^2`. Since
/// `N^2 - s^2 = D`, the smaller root is evaluated as `abR / (N + s)`, which
/// avoids cancellation.
pub fn third_inscribed_radii(a: f64, b: f64, r: f64) -> Result<InscribedPair> {
    let a = positive("a", a)?;
    let b = positive("b", b)?;
    let r = positive("R", r)?;
    if a >= r {
        return Err(Error::input("a", "must be smaller than R"));
    }
    if b >= r {
        return Err(Error::input("b", "must be smaller than R"));
    }
    // fixed operand order keeps the result bit-symmetric in a and b
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    let gap = r - a - b;
    let degenerate = libm::fabs(gap) <= DEGENERACY_TOLERANCE * r;
    if gap < 0.0 && !degenerate {
        return Err(Error::NoRealSolution);
    }
    let abr = a * b * r;
    let n = a * r + b * r - a * b;
    if degenerate {
        let c = abr / n;
        return Ok(InscribedPair {
            c_min: c,
            c_max: c,
            degenerate,
        });
    }
    let s = 2.0 * libm::sqrt(abr * gap);
    let (sa, sb) = (libm::sqrt(a), libm::sqrt(b));
    let d = (r * (sa - sb) * (sa - sb) + a * b) * (r * (sa + sb) * (sa + sb) + a * b);
    if !(d > 0.0) {
        return Err(Error::input(
            "R",
            "quadratic has a vanishing leading coefficient",
        ));
    }
    Ok(InscribedPair {
        c_min: abr / (n + s),
        c_max: abr * (n + s) / d,
        degenerate,
    })
}

/// Radius of the circle in the void between three mutually externally
/// tangent circles.
///
/// `r = abc / (2 sqrt(abc(a+b+c)) + (ab+bc+ca))`
pub fn inner_tangent_radius(t: &TangentTriple) -> Result<f64> {
    let t = t.validated()?;
    let (a, b, c) = (t.a, t.b, t.c);
    let abc = a * b * c;
    Ok(abc / (2.0 * libm::sqrt(abc * (a + b + c)) + (a * b + b * c + c * a)))
}

/// The inner tangent radius when the third circle is replaced by a line
/// tangent to `a` and `b`: `ab / (sqrt(a) + sqrt(b))^2`.
pub fn inner_tangent_radius_with_line(a: f64, b: f64) -> Result<f64> {
    let a = positive("a", a)?;
    let b = positive("b", b)?;
    let root = libm::sqrt(a) + libm::sqrt(b);
    Ok(a * b / (root * root))
}
