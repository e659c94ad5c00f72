use alloc::vec::Vec;

use crate::geometry::{PlacedCircle, Point};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PackedCircle {
    /// 1-based position in the chain.
    pub index: usize,
    pub radius: f64,
    pub center: Point,
    pub center_known: bool,
    /// Angle subtended at the sector apex, radians. Sector chains only.
    pub angle: Option<f64>,
}

impl PackedCircle {
    pub fn placed(&self) -> PlacedCircle {
        PlacedCircle {
            center: self.center,
            radius: self.radius,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PackingSequence {
    pub circles: Vec<PackedCircle>,
    /// Set when the chain stopped early because radii fell below the
    /// representable range.
    pub truncated: bool,
}

impl PackingSequence {
    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn radii(&self) -> Vec<f64> {
        self.circles.iter().map(|c| c.radius).collect()
    }

    pub(crate) fn push(&mut self, circle: PlacedCircle, angle: Option<f64>) {
        self.circles.push(PackedCircle {
            index: self.circles.len() + 1,
            radius: circle.radius,
            center: circle.center,
            center_known: true,
            angle,
        });
    }
}
