//! Deterministic circle packings in plane regions bounded by circular arcs
//! and straight lines.
//!
//! Every region is reduced to the same tangent-circle algebra ([`soddy`]):
//! given two circles inside a circumscribing circle, the third circle tangent
//! to all of them has a closed form, and iterating that closed form yields a
//! chain of ever smaller circles. The region modules ([`square`], [`sector`],
//! [`lens`], [`lune`]) build those chains and place every center, and
//! [`hexpack`] covers identical circles densely packed in a regular hexagon.
//!
//! [`geometry`] and [`verify`] form an independent oracle. Placement is plain
//! two-circle trilateration, and the bisection solver in [`verify`] finds
//! tangent radii without touching any closed form, so the region modules can
//! be checked against it.
//!
//! The crate is `#![no_std]` and only needs `alloc`.

#![no_std]
// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod hexpack;
pub mod lens;
pub mod lune;
pub mod sector;
pub mod sequence;
pub mod soddy;
pub mod square;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{Branch, Line, PlacedCircle, Point, Tangency};
pub use sequence::{PackedCircle, PackingSequence};
pub use verify::VerificationReport;
