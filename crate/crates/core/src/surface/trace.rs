use alloc::vec::Vec;

use crate::graph::{HalfEdge, Side, Slot};

use super::seams::{seam_at, seam_feet, FootPosition};
use super::{normalize_twist, FnSurface, TraceError};

/// One seam of one pants, named by the slot it avoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeamArc {
    pub vertex: usize,
    pub seam: Slot,
}

/// A point where a fixed curve crosses a partition curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub edge: usize,
    /// Foot coordinate on the side-zero boundary.
    pub side0: FootPosition,
    /// Foot coordinate on the side-one boundary.
    pub side1: FootPosition,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedCurve {
    /// Seam arcs in traversal order.
    pub arcs: Vec<SeamArc>,
    /// `crossings[i]` joins `arcs[i]` to `arcs[i + 1]` (cyclically).
    pub crossings: Vec<Crossing>,
    pub length: f64,
}

/// The fixed set of the real structure: disjoint closed geodesics made of seams.
#[derive(Clone, Debug, PartialEq)]
pub struct Multicurve {
    curves: Vec<FixedCurve>,
    edge_count: usize,
}

impl Multicurve {
    pub fn curves(&self) -> &[FixedCurve] {
        &self.curves
    }

    /// Number of curves.
    pub fn n(&self) -> usize {
        self.curves.len()
    }

    pub fn lengths(&self) -> Vec<f64> {
        self.curves.iter().map(|c| c.length).collect()
    }

    pub fn total_length(&self) -> f64 {
        self.curves.iter().map(|c| c.length).sum()
    }

    pub fn arc_count(&self) -> usize {
        self.curves.iter().map(|c| c.arcs.len()).sum()
    }

    /// How many times each partition curve is crossed.
    pub fn crossing_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.edge_count];
        for c in self.curves.iter().flat_map(|c| &c.crossings) {
            counts[c.edge] += 1;
        }
        counts
    }
}

/// Foot position on the far side of `edge` matched to `position` on the near side.
pub(crate) fn glue(surface: &FnSurface, edge: usize, position: FootPosition) -> Result<FootPosition, TraceError> {
    let x = normalize_twist(surface.gluing_offset(edge) - position.fraction());
    FootPosition::from_fraction(x).ok_or(TraceError::FeetMismatch { edge })
}

pub(crate) fn trace(surface: &FnSurface) -> Result<Multicurve, TraceError> {
    surface.require_real()?;
    let graph = surface.graph();
    let seams = surface.seam_set();
    let mut visited = alloc::vec![[false; 3]; graph.vertex_count()];
    let mut curves = Vec::new();

    for vertex in 0..graph.vertex_count() {
        for seam in Slot::ALL {
            if visited[vertex][seam.index()] {
                continue;
            }
            let start = SeamArc { vertex, seam };
            let [mut exit, start_entry] = seam_feet(seam);
            let mut current = start;
            let mut curve = FixedCurve { arcs: Vec::new(), crossings: Vec::new(), length: 0.0 };
            loop {
                let seen = &mut visited[current.vertex][current.seam.index()];
                if *seen {
                    let edge = curve.crossings.last().map_or(0, |c| c.edge);
                    return Err(TraceError::FeetMismatch { edge });
                }
                *seen = true;
                curve.arcs.push(current);
                curve.length += seams.seam(current.vertex, current.seam);

                let (slot, position) = exit;
                let here = HalfEdge::new(current.vertex, slot);
                let (edge, side) = graph.attachment(here).ok_or(TraceError::FeetMismatch { edge: 0 })?;
                let there = graph.edge(edge).side(side.other());
                let far = glue(surface, edge, position)?;
                let (side0, side1) = match side {
                    Side::Zero => (position, far),
                    Side::One => (far, position),
                };
                curve.crossings.push(Crossing { edge, side0, side1 });

                let next = SeamArc { vertex: there.vertex, seam: seam_at(there.slot, far) };
                let entry = (there.slot, far);
                let [a, b] = seam_feet(next.seam);
                exit = if a == entry { b } else { a };
                if next == start {
                    if entry != start_entry {
                        return Err(TraceError::FeetMismatch { edge });
                    }
                    break;
                }
                current = next;
            }
            curves.push(curve);
        }
    }

    let multicurve = Multicurve { curves, edge_count: graph.edge_count() };
    if let Some(edge) = multicurve.crossing_counts().iter().position(|&c| c != 2) {
        return Err(TraceError::FeetMismatch { edge });
    }
    Ok(multicurve)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PantsGraph;
    use crate::surface::Rational;

    fn chain(genus: usize, twist: Rational) -> FnSurface {
        let g = PantsGraph::chain(genus).unwrap();
        let e = g.edge_count();
        FnSurface::new(g, alloc::vec![1.5; e], alloc::vec![twist; e]).unwrap()
    }

    #[test]
    fn chain_genus_two() {
        let zero = chain(2, Rational::from_integer(0)).trace_fixed_curves().unwrap();
        assert_eq!(zero.n(), 3);
        let half = chain(2, Rational::new(1, 2)).trace_fixed_curves().unwrap();
        assert_eq!(half.n(), 1);
    }

    #[test]
    fn quarter_twist_is_refused() {
        let s = chain(2, Rational::from_integer(0)).with_twist(1, Rational::new(1, 4));
        assert_eq!(
            s.trace_fixed_curves(),
            Err(TraceError::NotReal { edge: 1, twist: Rational::new(1, 4) })
        );
    }

    #[test]
    fn curves_cover_every_seam_once() {
        let s = chain(4, Rational::new(1, 2)).with_twist(3, Rational::from_integer(0));
        let m = s.trace_fixed_curves().unwrap();
        let mut arcs: Vec<SeamArc> = m.curves().iter().flat_map(|c| c.arcs.iter().copied()).collect();
        arcs.sort();
        arcs.dedup();
        assert_eq!(arcs.len(), 3 * s.graph().vertex_count());
        assert_eq!(m.arc_count(), arcs.len());
        assert!(m.crossing_counts().iter().all(|&c| c == 2));
        assert!((m.total_length() - s.seam_set().total_length()).abs() < 1e-12);
    }

    #[test]
    fn deterministic_start_and_direction() {
        let m = chain(3, Rational::from_integer(0)).trace_fixed_curves().unwrap();
        let first = &m.curves()[0];
        assert_eq!(first.arcs[0], SeamArc { vertex: 0, seam: Slot::ALL[0] });
        // leaves through the x = 0 foot first
        let exit = seam_feet(Slot::ALL[0])[0];
        assert_eq!(exit.1, FootPosition::Zero);
        let (edge, side) = chain(3, Rational::from_integer(0))
            .graph()
            .attachment(HalfEdge::new(0, exit.0))
            .unwrap();
        assert_eq!(first.crossings[0].edge, edge);
        let near = if side == Side::Zero { first.crossings[0].side0 } else { first.crossings[0].side1 };
        assert_eq!(near, FootPosition::Zero);
    }
}
