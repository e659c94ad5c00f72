//! Plane primitives, trilateration and tangency residuals.
//!
//! Nothing in here knows about packing formulas. Centers are found purely
//! from distance constraints: a circle of radius `r` externally tangent to a
//! circle `(c, R)` has its center at distance `R + r` from `c`, and at
//! `|R - r|` when the tangency is internal.

use crate::error::{positive, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn polar(radius: f64, angle: f64) -> Self {
        Point::new(radius * libm::cos(angle), radius * libm::sin(angle))
    }

    pub fn distance(self, other: Point) -> f64 {
        libm::hypot(other.x - self.x, other.y - self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlacedCircle {
    pub center: Point,
    pub radius: f64,
}

impl PlacedCircle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        positive("radius", radius)?;
        if !center.is_finite() {
            return Err(Error::input("center", "coordinates must be finite"));
        }
        Ok(PlacedCircle { center, radius })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tangency {
    /// The circles touch from outside: center distance is `r1 + r2`.
    External,
    /// One circle touches the other from inside: center distance is `|r1 - r2|`.
    Internal,
}

impl Tangency {
    pub fn center_distance(self, r1: f64, r2: f64) -> f64 {
        match self {
            Tangency::External => r1 + r2,
            Tangency::Internal => libm::fabs(r1 - r2),
        }
    }
}

/// Which of the two trilateration solutions to keep.
///
/// `Upper`/`Lower` compare `y` (ties go to the larger/smaller `x`).
/// `Left`/`Right` are taken relative to the directed segment from the first
/// constraint's center to the second's. For a circle placed against a line,
/// `Left` means backwards along the line direction and `Right` forwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Upper,
    Lower,
    Left,
    Right,
}

/// A directed line. Circles placed against it sit on its left side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Line {
    pub point: Point,
    dir: Point,
}

impl Line {
    pub fn new(point: Point, direction: Point) -> Result<Self> {
        let len = libm::hypot(direction.x, direction.y);
        if !(len > 0.0 && len.is_finite()) || !point.is_finite() {
            return Err(Error::input("direction", "must be nonzero and finite"));
        }
        Ok(Line {
            point,
            dir: Point::new(direction.x / len, direction.y / len),
        })
    }

    pub fn through(a: Point, b: Point) -> Result<Self> {
        Line::new(a, Point::new(b.x - a.x, b.y - a.y))
    }

    /// Unit direction.
    pub fn direction(&self) -> Point {
        self.dir
    }

    /// Positive on the left of the direction.
    pub fn signed_distance(&self, p: Point) -> f64 {
        let dx = p.x - self.point.x;
        let dy = p.y - self.point.y;
        self.dir.x * dy - self.dir.y * dx
    }
}

fn pick(first: Point, second: Point, branch: Branch) -> Point {
    // `first` is always the left-hand solution.
    match branch {
        Branch::Left => first,
        Branch::Right => second,
        Branch::Upper => {
            if first.y > second.y || (first.y == second.y && first.x >= second.x) {
                first
            } else {
                second
            }
        }
        Branch::Lower => {
            if first.y < second.y || (first.y == second.y && first.x <= second.x) {
                first
            } else {
                second
            }
        }
    }
}

/// Both points at distance `d1` from `c1` and `d2` from `c2`, left-hand
/// solution first.
pub fn intersect_distances(c1: Point, d1: f64, c2: Point, d2: f64) -> Result<(Point, Point)> {
    let dx = c2.x - c1.x;
    let dy = c2.y - c1.y;
    let d = libm::hypot(dx, dy);
    if !(d > 0.0) || !d.is_finite() {
        return Err(Error::NoIntersection);
    }
    let along = (d * d + d1 * d1 - d2 * d2) / (2.0 * d);
    let h2 = (d1 - along) * (d1 + along);
    let h = if h2 >= 0.0 {
        libm::sqrt(h2)
    } else if h2 >= {
        let m = d1.max(d2).max(d);
        -1e-12 * m * m
    } {
        0.0
    } else {
        return Err(Error::NoIntersection);
    };
    let (ux, uy) = (dx / d, dy / d);
    let base = Point::new(c1.x + along * ux, c1.y + along * uy);
    Ok((
        Point::new(base.x - h * uy, base.y + h * ux),
        Point::new(base.x + h * uy, base.y - h * ux),
    ))
}

/// Places a circle of radius `r_new` tangent to `c1` and `c2`.
pub fn place_tangent_circle(
    c1: &PlacedCircle,
    c2: &PlacedCircle,
    r_new: f64,
    tangency1: Tangency,
    tangency2: Tangency,
    branch: Branch,
) -> Result<PlacedCircle> {
    positive("r_new", r_new)?;
    let d1 = tangency1.center_distance(c1.radius, r_new);
    let d2 = tangency2.center_distance(c2.radius, r_new);
    let (left, right) = intersect_distances(c1.center, d1, c2.center, d2)?;
    Ok(PlacedCircle {
        center: pick(left, right, branch),
        radius: r_new,
    })
}

/// Places a circle of radius `r_new` tangent to `circle` and to `line`, on the
/// left side of the line.
pub fn place_tangent_to_line(
    circle: &PlacedCircle,
    tangency: Tangency,
    line: &Line,
    r_new: f64,
    branch: Branch,
) -> Result<PlacedCircle> {
    positive("r_new", r_new)?;
    let dist = tangency.center_distance(circle.radius, r_new);
    let u = line.direction();
    // foot of the circle center on the offset line
    let off = line.signed_distance(circle.center) - r_new;
    let foot = Point::new(circle.center.x + off * u.y, circle.center.y - off * u.x);
    let h2 = (dist - off) * (dist + off);
    let h = if h2 >= 0.0 {
        libm::sqrt(h2)
    } else if h2 >= -1e-12 * dist * dist {
        0.0
    } else {
        return Err(Error::NoIntersection);
    };
    let back = Point::new(foot.x - h * u.x, foot.y - h * u.y);
    let fwd = Point::new(foot.x + h * u.x, foot.y + h * u.y);
    Ok(PlacedCircle {
        center: pick(back, fwd, branch),
        radius: r_new,
    })
}

/// `|dist - (r1 + r2)|` for external, `|dist - |r1 - r2||` for internal.
pub fn tangency_residual(c1: &PlacedCircle, c2: &PlacedCircle, kind: Tangency) -> f64 {
    let d = c1.center.distance(c2.center);
    libm::fabs(d - kind.center_distance(c1.radius, c2.radius))
}

pub fn line_tangency_residual(c: &PlacedCircle, line: &Line) -> f64 {
    libm::fabs(libm::fabs(line.signed_distance(c.center)) - c.radius)
}

/// How far `c` pokes out of `container`; zero when contained.
pub fn inside_violation(c: &PlacedCircle, container: &PlacedCircle) -> f64 {
    (c.center.distance(container.center) + c.radius - container.radius).max(0.0)
}

/// Overlap depth between two circles that must stay disjoint.
pub fn outside_violation(c: &PlacedCircle, other: &PlacedCircle) -> f64 {
    (c.radius + other.radius - c.center.distance(other.center)).max(0.0)
}

/// How far `c` crosses to the right of `line`.
pub fn left_of_violation(c: &PlacedCircle, line: &Line) -> f64 {
    (c.radius - line.signed_distance(c.center)).max(0.0)
}
