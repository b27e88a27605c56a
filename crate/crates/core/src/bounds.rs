//! Certified lower bounds on `max_p d(p, Fix σ)`.
//!
//! Two bounds, both attained by explicit points:
//!
//! * a disk inside one hexagon of the pants decomposition that stays clear of
//!   all six side lines cannot meet the fixed set, since every path leaving
//!   the hexagon crosses one of those lines;
//! * a point on the boundary of the collar around a fixed curve is outside
//!   every other collar, so it is at least the smallest collar half-width
//!   away from the fixed set.
//!
//! Nothing here produces an upper bound.

use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{GraphError, PantsGraph};
use crate::h2::{build_right_hexagon, hexagon_inradius, H2Point, SideSelection};
use crate::optimize::bisect;
use crate::surface::{FnSurface, Rational, SurfaceError, TraceError, MAX_LENGTH};

/// `ln 3 / 2`
pub const LN3_HALF: f64 = 0.549_306_144_334_054_9;

/// Half-width `asinh(1 / sinh(l/2))` of the standard collar around a simple
/// closed geodesic of length `l`.
pub fn collar_halfwidth(l: f64) -> f64 {
    libm::asinh(1.0 / libm::sinh(0.5 * l))
}

/// Where the hexagon bound is attained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HexagonWitness {
    pub vertex: usize,
    /// Centre of the disk in the development of the positive hexagon.
    pub center: H2Point,
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistanceBoundReport {
    /// Largest inscribed radius over the hexagons.
    pub hexagon_bound: f64,
    /// Smallest collar half-width over the fixed curves.
    pub collar_bound: f64,
    pub certified_lower_bound: f64,
    pub clears_ln3_half: bool,
    pub hexagon_witness: Option<HexagonWitness>,
    /// Pants whose hexagon could not be measured; they contribute nothing.
    pub skipped_pants: Vec<usize>,
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("target distance must be positive and finite, got {0}")]
    InvalidTarget(f64),
    #[error("no partition length up to {MAX_LENGTH} pushes the bound past {0}")]
    Infeasible(f64),
}

pub fn distance_lower_bound(surface: &FnSurface) -> Result<DistanceBoundReport, BoundsError> {
    let curves = surface.trace_fixed_curves()?;
    let collar_bound = curves.lengths().into_iter().map(collar_halfwidth).fold(f64::INFINITY, f64::min);

    // the two hexagons of a pants are mirror images, so one suffices
    let mut hexagon_witness: Option<HexagonWitness> = None;
    let mut skipped_pants = Vec::new();
    for vertex in 0..surface.graph().vertex_count() {
        let [a, b, c] = surface.boundary_lengths(vertex).map(|l| 0.5 * l);
        let measured = build_right_hexagon(a, b, c)
            .ok()
            .and_then(|h| hexagon_inradius(&h, SideSelection::All).ok());
        match measured {
            Some(r) if hexagon_witness.is_none_or(|w| r.radius > w.radius) => {
                hexagon_witness = Some(HexagonWitness { vertex, center: r.center, radius: r.radius })
            }
            Some(_) => {}
            None => skipped_pants.push(vertex),
        }
    }
    let hexagon_bound = hexagon_witness.map_or(0.0, |w| w.radius.max(0.0));
    let certified_lower_bound = hexagon_bound.max(collar_bound);
    Ok(DistanceBoundReport {
        hexagon_bound,
        collar_bound,
        certified_lower_bound,
        clears_ln3_half: certified_lower_bound > LN3_HALF,
        hexagon_witness,
        skipped_pants,
    })
}

/// A real chain surface of genus `g` whose certified bound exceeds `c`.
///
/// All twists are `0` and all partition curves share one length, found by
/// bisection so that every fixed curve is short enough for its collar to be
/// wider than `c` (with a small margin).
pub fn unbounded_example(c: f64, genus: usize) -> Result<FnSurface, BoundsError> {
    if !(c.is_finite() && c > 0.0) {
        return Err(BoundsError::InvalidTarget(c));
    }
    let graph = PantsGraph::chain(genus)?;
    let edges = graph.edge_count();
    let target = 2.0 * libm::asinh(1.0 / libm::sinh(c + 2e-3));
    let surface = |l: f64| FnSurface::new(graph.clone(), alloc::vec![l; edges], alloc::vec![Rational::from_integer(0); edges]);
    let short_enough = |l: f64| {
        surface(l)
            .ok()
            .and_then(|s| s.trace_fixed_curves().ok())
            .is_some_and(|m| m.lengths().iter().all(|&x| x <= target))
    };
    if !short_enough(MAX_LENGTH) {
        return Err(BoundsError::Infeasible(c));
    }
    let l = bisect(short_enough, 0.1, MAX_LENGTH, 1e-6, 200);
    Ok(surface(l)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collar_values() {
        assert!((collar_halfwidth(2.0 * libm::asinh(1.0)) - libm::asinh(1.0)).abs() < 1e-12);
        assert!((collar_halfwidth(0.1) - 3.689).abs() < 1e-3);
        assert!(collar_halfwidth(20.0) < 1e-4);
    }

    #[test]
    fn collar_is_strictly_decreasing() {
        let grid: Vec<f64> = (0..1000).map(|i| 0.01 + (20.0 - 0.01) * i as f64 / 999.0).collect();
        for w in grid.windows(2) {
            assert!(collar_halfwidth(w[1]) < collar_halfwidth(w[0]));
        }
    }

    #[test]
    fn unbounded_examples_clear_their_target() {
        for c in [1.0, 2.0, 3.0] {
            let s = unbounded_example(c, 2).unwrap();
            let r = distance_lower_bound(&s).unwrap();
            assert!(r.certified_lower_bound > c + 1e-3, "{c}: {r:?}");
        }
    }

    #[test]
    fn report_is_consistent() {
        let s = FnSurface::new(PantsGraph::theta(), alloc::vec![2.0, 3.0, 1.5], [Rational::new(1, 2); 3]).unwrap();
        let r = distance_lower_bound(&s).unwrap();
        assert!(r.hexagon_bound > 0.0 && r.collar_bound > 0.0);
        assert!(r.certified_lower_bound >= r.hexagon_bound && r.certified_lower_bound >= r.collar_bound);
        assert!(r.skipped_pants.is_empty());
    }
}
