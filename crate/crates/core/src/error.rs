use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Error {
    /// A parameter is out of its domain. `param` names the offending argument.
    InvalidInput {
        param: &'static str,
        reason: &'static str,
    },
    /// Three radii admit no circumscribing circle that holds all of them.
    InvalidTriple,
    /// `a + b > R`: no circle fits between the two given circles and the
    /// circumscribing one.
    NoRealSolution,
    /// Central angle outside the open interval (0, pi), in radians.
    InvalidAngle(f64),
    InvalidRange {
        min: u64,
        max: u64,
    },
    /// Two distance constraints have no common point.
    NoIntersection,
    /// The oracle bracket holds no sign change of the tangency residual.
    NoRoot,
    InternalCheckFailed(&'static str),
}

impl Error {
    pub(crate) const fn input(param: &'static str, reason: &'static str) -> Self {
        Error::InvalidInput { param, reason }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput { param, reason } => write!(f, "invalid {param}: {reason}"),
            Error::InvalidTriple => {
                f.write_str("invalid triple: no circumscribing circle holds all three circles")
            }
            Error::NoRealSolution => {
                f.write_str("no real solution: a + b exceeds the circumscribing radius")
            }
            Error::InvalidAngle(angle) => {
                write!(f, "invalid angle: {angle} rad is outside (0, pi)")
            }
            Error::InvalidRange { min, max } => write!(f, "invalid range: {min}..={max}"),
            Error::NoIntersection => f.write_str("distance constraints do not intersect"),
            Error::NoRoot => f.write_str("no tangent radius inside the bracket"),
            Error::InternalCheckFailed(what) => write!(f, "internal check failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn positive(param: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::input(param, "must be positive and finite"))
    }
}
