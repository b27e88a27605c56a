use alloc::vec::Vec;

use thiserror::Error;

use crate::h2::{angle_at, distance, HexagonError, Isometry, PantsDevelopment};

use super::seams::FootPosition;
use super::{trace, FnSurface, Rational, TraceError};

/// How well two seams meet across one matched pair of feet.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosureResidual {
    pub edge: usize,
    /// The foot on the side-zero boundary.
    pub foot: FootPosition,
    /// Distance between the two developed feet.
    pub position_gap: f64,
    /// Deviation of the angle between the two seams from `π`.
    pub angle_error: f64,
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum ClosureError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("pants {vertex}: {source}")]
    Hexagon { vertex: usize, source: HexagonError },
}

fn half_steps(x: Rational) -> i8 {
    (x * Rational::from_integer(2)).to_integer() as i8
}

/// Develops both pants of every edge into the upper half-plane, glues them
/// along the partition curve, and measures whether the seam arriving at each
/// foot continues straight through the seam on the other side.
pub fn closure_residuals(surface: &FnSurface) -> Result<Vec<ClosureResidual>, ClosureError> {
    surface.require_real()?;
    let graph = surface.graph();
    let developments = (0..graph.vertex_count())
        .map(|v| PantsDevelopment::new(surface.boundary_lengths(v)).map_err(|source| ClosureError::Hexagon { vertex: v, source }))
        .collect::<Result<Vec<_>, _>>()?;

    let mut out = Vec::with_capacity(2 * graph.edge_count());
    for (edge, e) in graph.edges().iter().enumerate() {
        let [near, far] = e.sides;
        let (dev0, dev1) = (&developments[near.vertex], &developments[far.vertex]);
        let (k0, k1) = (near.slot.index(), far.slot.index());
        let length = surface.length(edge);
        let c = surface.gluing_offset(edge);
        let c_len = length * (*c.numer() as f64) / (*c.denom() as f64);

        // x₁ ↦ c·L − x₁ carries the side-one boundary line onto the side-zero one
        let to_near = Isometry::frame(dev0.boundary_point(k0, c_len), dev0.boundary_point(k0, c_len - 0.5 * length));
        let from_far = Isometry::frame(dev1.boundary_point(k1, 0.0), dev1.boundary_point(k1, 0.5 * length));
        let j = to_near.inverse().after(&from_far);

        for foot in [FootPosition::Zero, FootPosition::Half] {
            let x1 = trace::glue(surface, edge, foot)?.fraction();
            let (x0, far0) = dev0.foot(k0, half_steps(c - x1));
            let (y1, far1) = dev1.foot(k1, half_steps(x1));
            let (y1, far1) = (j.apply(y1), j.apply(far1));
            out.push(ClosureResidual {
                edge,
                foot,
                position_gap: distance(x0, y1),
                angle_error: (core::f64::consts::PI - angle_at(x0, far0, far1)).abs(),
            });
        }
    }
    Ok(out)
}
