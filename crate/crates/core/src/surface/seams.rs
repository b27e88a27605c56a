use alloc::vec::Vec;

use crate::graph::Slot;

use super::{half, FnSurface, Rational};

/// Lengths of the three seams of a pants with the given boundary lengths.
///
/// Entry `k` is the seam between the two boundaries other than slot `k`:
/// `cosh s_k = (cosh(L_k/2) + cosh(L_i/2)·cosh(L_j/2)) / (sinh(L_i/2)·sinh(L_j/2))`.
/// Evaluated through `cosh s − 1` so that short seams keep their precision.
pub fn seam_lengths(boundary: [f64; 3]) -> [f64; 3] {
    let half_len = boundary.map(|l| 0.5 * l);
    core::array::from_fn(|k| {
        let (i, j) = ((k + 1) % 3, (k + 2) % 3);
        let cosh_minus_one = (libm::cosh(half_len[k]) + libm::cosh(half_len[i] - half_len[j]))
            / (libm::sinh(half_len[i]) * libm::sinh(half_len[j]));
        2.0 * libm::asinh(libm::sqrt(0.5 * cosh_minus_one))
    })
}

/// Where a foot sits on its boundary circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FootPosition {
    /// `x = 0`
    Zero,
    /// `x = L/2`
    Half,
}

impl FootPosition {
    /// Coordinate as a fraction of the boundary length.
    pub fn fraction(self) -> Rational {
        match self {
            FootPosition::Zero => Rational::from_integer(0),
            FootPosition::Half => half(),
        }
    }

    /// Inverse of [`FootPosition::fraction`] for normalised fractions.
    pub fn from_fraction(x: Rational) -> Option<Self> {
        if x == Rational::from_integer(0) {
            Some(FootPosition::Zero)
        } else if x == half() {
            Some(FootPosition::Half)
        } else {
            None
        }
    }

    pub fn coordinate(self, length: f64) -> f64 {
        match self {
            FootPosition::Zero => 0.0,
            FootPosition::Half => 0.5 * length,
        }
    }
}

/// The endpoint of a seam on a boundary circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Foot {
    pub vertex: usize,
    pub slot: Slot,
    pub position: FootPosition,
}

/// The seam whose foot sits at `position` on boundary `slot`.
pub(crate) fn seam_at(slot: Slot, position: FootPosition) -> Slot {
    match position {
        FootPosition::Zero => slot.next(),
        FootPosition::Half => slot.prev(),
    }
}

/// The two feet of seam `seam`, lower coordinate first.
pub(crate) fn seam_feet(seam: Slot) -> [(Slot, FootPosition); 2] {
    [(seam.prev(), FootPosition::Zero), (seam.next(), FootPosition::Half)]
}

/// Seam lengths and feet for every pants of a surface.
#[derive(Clone, Debug, PartialEq)]
pub struct SeamSet {
    boundaries: Vec<[f64; 3]>,
    seams: Vec<[f64; 3]>,
}

impl SeamSet {
    pub(crate) fn new(surface: &FnSurface) -> Self {
        let boundaries: Vec<[f64; 3]> =
            (0..surface.graph().vertex_count()).map(|v| surface.boundary_lengths(v)).collect();
        let seams = boundaries.iter().map(|&b| seam_lengths(b)).collect();
        Self { boundaries, seams }
    }

    pub fn vertex_count(&self) -> usize {
        self.seams.len()
    }

    /// Length of seam `seam` (the one avoiding that slot) in pants `vertex`.
    pub fn seam(&self, vertex: usize, seam: Slot) -> f64 {
        self.seams[vertex][seam.index()]
    }

    pub fn seams(&self, vertex: usize) -> [f64; 3] {
        self.seams[vertex]
    }

    pub fn boundary_lengths(&self, vertex: usize) -> [f64; 3] {
        self.boundaries[vertex]
    }

    /// The two feet on boundary `slot` of `vertex` as `(seam, x)`.
    pub fn feet(&self, vertex: usize, slot: Slot) -> [(Slot, f64); 2] {
        let length = self.boundaries[vertex][slot.index()];
        [FootPosition::Zero, FootPosition::Half].map(|p| (seam_at(slot, p), p.coordinate(length)))
    }

    /// Sum of all seam lengths.
    pub fn total_length(&self) -> f64 {
        self.seams.iter().flatten().sum()
    }
}
