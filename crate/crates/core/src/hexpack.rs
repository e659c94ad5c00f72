//! Identical circles packed hexagonally inside a regular hexagon, `n` circles
//! along each side.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{positive, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HexPackSpec {
    pub n: u64,
    pub r: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HexPackMetrics {
    /// Number of circles, `3n^2 - 3n + 1`.
    pub count: u64,
    /// Number of voids, `6(n^2 - n + 1)`.
    pub voids: u64,
    /// Hexagon side, `2r(n + 1/sqrt3 - 1)`.
    pub side: f64,
    /// Radius of the circle around the packing, `(2n - 1) r`.
    pub circumradius: f64,
    /// Taut string around the packing, `2(6n + pi - 6) r`.
    pub string_length: f64,
    pub density: f64,
}

fn check_n(n: u64) -> Result<u64> {
    if n < 2 {
        Err(Error::input("n", "must be at least 2"))
    } else {
        Ok(n)
    }
}

const OVERFLOW: Error = Error::InvalidInput {
    param: "n",
    reason: "too large",
};

pub fn circle_count(n: u64) -> Result<u64> {
    let n = check_n(n)?;
    // 3n(n - 1) + 1
    n.checked_mul(n - 1)
        .and_then(|v| v.checked_mul(3))
        .and_then(|v| v.checked_add(1))
        .ok_or(OVERFLOW)
}

pub fn void_count(n: u64) -> Result<u64> {
    let n = check_n(n)?;
    n.checked_mul(n - 1)
        .and_then(|v| v.checked_add(1))
        .and_then(|v| v.checked_mul(6))
        .ok_or(OVERFLOW)
}

/// `(pi sqrt3 / 6) (3n^2 - 3n + 1) / (sqrt3 (n - 1) + 1)^2`, independent of
/// the radius.
pub fn density(n: u64) -> Result<f64> {
    let count = circle_count(n)? as f64;
    let s3 = libm::sqrt(3.0);
    let w = s3 * (n - 1) as f64 + 1.0;
    Ok(density_limit() * count / (w * w))
}

/// `pi sqrt3 / 6`, the supremum of [`density`].
pub fn density_limit() -> f64 {
    PI * libm::sqrt(3.0) / 6.0
}

pub fn metrics(spec: &HexPackSpec) -> Result<HexPackMetrics> {
    let r = positive("r", spec.r)?;
    let n = check_n(spec.n)?;
    let nf = n as f64;
    Ok(HexPackMetrics {
        count: circle_count(n)?,
        voids: void_count(n)?,
        side: 2.0 * r * (nf + 1.0 / libm::sqrt(3.0) - 1.0),
        circumradius: (2.0 * nf - 1.0) * r,
        string_length: 2.0 * (6.0 * nf + PI - 6.0) * r,
        density: density(n)?,
    })
}

/// `(n, density(n))` for every `n` in `n_min..=n_max`.
pub fn density_curve(n_min: u64, n_max: u64) -> Result<Vec<(u64, f64)>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidRange {
            min: n_min,
            max: n_max,
        });
    }
    (n_min..=n_max).map(|n| Ok((n, density(n)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let m = metrics(&HexPackSpec { n: 2, r: 1.0 }).unwrap();
        assert_eq!((m.count, m.voids), (7, 18));
        assert_eq!(m.circumradius, 3.0);
        assert!(libm::fabs(m.string_length - 2.0 * (6.0 + PI)) < 1e-14);
        assert!(libm::fabs(m.density - 0.8505106310376239) <= 1e-15);
        let m = metrics(&HexPackSpec { n: 4, r: 1.0 }).unwrap();
        assert_eq!((m.count, m.voids, m.circumradius), (37, 78, 7.0));
        let m = metrics(&HexPackSpec { n: 6, r: 2.0 }).unwrap();
        let expected = 5.0 * 4.0 + 4.0 / libm::sqrt(3.0);
        assert!(libm::fabs(m.side - expected) < 1e-13);
    }

    #[test]
    fn density_bounds() {
        assert_eq!(density_limit(), 0.9068996821171088);
        assert!(libm::fabs(density_limit() - PI / (2.0 * libm::sqrt(3.0))) <= 2e-16);
        let d = density(100).unwrap();
        assert!(d > density(99).unwrap() && d < density(101).unwrap());
        assert!(d > 0.85051 && d < 0.90690);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(metrics(&HexPackSpec { n: 1, r: 1.0 }).is_err());
        assert!(metrics(&HexPackSpec { n: 2, r: 0.0 }).is_err());
        assert!(circle_count(u64::MAX).is_err());
        assert_eq!(
            density_curve(5, 4),
            Err(Error::InvalidRange { min: 5, max: 4 })
        );
        assert!(density_curve(1, 4).is_err());
    }

    #[test]
    fn curve() {
        let one = density_curve(2, 2).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].0, 2);
        assert!(libm::fabs(one[0].1 - 0.8505106310376239) <= 1e-15);
        let c = density_curve(2, 100).unwrap();
        assert_eq!(c.len(), 99);
        assert!(c.windows(2).all(|w| w[1].1 > w[0].1));
        assert!(c[98].1 < density_limit());
    }
}
