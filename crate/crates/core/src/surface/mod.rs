//! Fenchel–Nielsen surfaces and their real structure.
//!
//! # Conventions
//!
//! Boundary slot `k` of a pants is parameterised by arc length
//! `x ∈ [0, L)`, running with the orientation induced by a fixed orientation
//! of the pants. Seam `s_k` joins the two boundaries other than slot `k`. On
//! slot `k` the foot of `s_{k+1}` sits at `x = 0` and the foot of `s_{k+2}` at
//! `x = L/2`, so the two feet on every boundary are antipodal.
//!
//! Across an edge with twist `t`, a point at `x₀` on side zero is identified
//! with `x₁ = ((t + ½)·L − x₀) mod L` on side one. The identification reverses
//! orientation and is symmetric in the two sides. Feet line up exactly when
//! `t ∈ {0, ½}`.

mod classify;
mod closure;
mod involution;
mod seams;
mod trace;

use alloc::vec::Vec;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{GraphError, PantsGraph};

pub use classify::RealFormClass;
pub use closure::{closure_residuals, ClosureError, ClosureResidual};
pub use involution::{Chirality, CircleMap, Hexagon, Involution};
pub use seams::{seam_lengths, Foot, FootPosition, SeamSet};
pub use trace::{Crossing, FixedCurve, Multicurve, SeamArc};

/// Exact twist values.
pub type Rational = Ratio<i64>;

/// Shortest partition length accepted.
pub const MIN_LENGTH: f64 = 1e-8;
/// Longest partition length accepted.
pub const MAX_LENGTH: f64 = 50.0;

/// Reduces `t` modulo 1 into `[0, 1)`.
pub fn normalize_twist(t: Rational) -> Rational {
    t - t.floor()
}

pub(crate) fn half() -> Rational {
    Rational::new(1, 2)
}

/// `true` iff `t` is `0` or `½` modulo 1.
pub fn is_real_twist(t: Rational) -> bool {
    let t = normalize_twist(t);
    t == Rational::from_integer(0) || t == half()
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum SurfaceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected {expected} lengths, found {found}")]
    LengthCount { expected: usize, found: usize },
    #[error("expected {expected} twists, found {found}")]
    TwistCount { expected: usize, found: usize },
    #[error("edge {edge}: length {length} outside [{MIN_LENGTH:e}, {MAX_LENGTH}]")]
    LengthOutOfRange { edge: usize, length: f64 },
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum TraceError {
    #[error("surface is not real: edge {edge} has twist {twist}")]
    NotReal { edge: usize, twist: Rational },
    #[error("feet do not match up on edge {edge}")]
    FeetMismatch { edge: usize },
    #[error("boundary maps disagree across edge {edge}")]
    BoundaryMismatch { edge: usize },
}

/// A closed hyperbolic surface in Fenchel–Nielsen coordinates relative to a
/// pants graph.
#[derive(Clone, Debug, PartialEq)]
pub struct FnSurface {
    graph: PantsGraph,
    genus: usize,
    lengths: Vec<f64>,
    twists: Vec<Rational>,
}

impl FnSurface {
    /// Validates the graph and the coordinates. Twists are normalised into `[0, 1)`.
    pub fn new(
        graph: PantsGraph,
        lengths: Vec<f64>,
        twists: impl IntoIterator<Item = Rational>,
    ) -> Result<Self, SurfaceError> {
        let genus = graph.genus()?;
        let twists: Vec<Rational> = twists.into_iter().map(normalize_twist).collect();
        let expected = graph.edge_count();
        if lengths.len() != expected {
            return Err(SurfaceError::LengthCount { expected, found: lengths.len() });
        }
        if twists.len() != expected {
            return Err(SurfaceError::TwistCount { expected, found: twists.len() });
        }
        if let Some((edge, &length)) = lengths
            .iter()
            .enumerate()
            .find(|(_, l)| !(l.is_finite() && **l >= MIN_LENGTH && **l <= MAX_LENGTH))
        {
            return Err(SurfaceError::LengthOutOfRange { edge, length });
        }
        Ok(Self { graph, genus, lengths, twists })
    }

    pub fn graph(&self) -> &PantsGraph {
        &self.graph
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }

    pub fn twists(&self) -> &[Rational] {
        &self.twists
    }

    pub fn length(&self, edge: usize) -> f64 {
        self.lengths[edge]
    }

    pub fn twist(&self, edge: usize) -> Rational {
        self.twists[edge]
    }

    /// Boundary lengths of a pants, by slot.
    pub fn boundary_lengths(&self, vertex: usize) -> [f64; 3] {
        self.graph.incident_edges(vertex).map(|e| self.lengths[e])
    }

    /// Whether every twist is exactly `0` or `½`.
    pub fn is_real(&self) -> bool {
        self.twists.iter().all(|&t| is_real_twist(t))
    }

    /// The first edge whose twist is not `0` or `½`.
    pub fn first_non_real_edge(&self) -> Option<usize> {
        self.twists.iter().position(|&t| !is_real_twist(t))
    }

    pub(crate) fn require_real(&self) -> Result<(), TraceError> {
        match self.first_non_real_edge() {
            Some(edge) => Err(TraceError::NotReal { edge, twist: self.twists[edge] }),
            None => Ok(()),
        }
    }

    /// Offset `c` of the gluing `x₁ = c − x₀`, as a fraction of the length.
    pub(crate) fn gluing_offset(&self, edge: usize) -> Rational {
        normalize_twist(self.twists[edge] + half())
    }

    /// Same surface with one twist replaced.
    pub fn with_twist(&self, edge: usize, twist: Rational) -> Self {
        let mut out = self.clone();
        out.twists[edge] = normalize_twist(twist);
        out
    }

    pub fn seam_set(&self) -> SeamSet {
        SeamSet::new(self)
    }

    pub fn trace_fixed_curves(&self) -> Result<Multicurve, TraceError> {
        trace::trace(self)
    }

    pub fn build_involution(&self) -> Result<Involution, TraceError> {
        involution::build(self)
    }

    pub fn classify_real_form(&self) -> Result<RealFormClass, TraceError> {
        classify::classify(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PantsGraph;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_twist(r(3, 2)), r(1, 2));
        assert_eq!(normalize_twist(r(-1, 2)), r(1, 2));
        assert_eq!(normalize_twist(r(0, 1)), r(0, 1));
        assert_eq!(normalize_twist(r(-7, 3)), r(2, 3));
        assert_eq!(normalize_twist(r(5, 1)), r(0, 1));
    }

    proptest! {
        #[test]
        fn normalize_lands_in_unit_interval(p in -10_000i64..10_000, q in 1i64..500) {
            let t = normalize_twist(r(p, q));
            prop_assert!(t >= r(0, 1) && t < r(1, 1));
            prop_assert!((r(p, q) - t).is_integer());
            prop_assert_eq!(normalize_twist(t), t);
        }
    }

    fn theta(twists: [Rational; 3]) -> FnSurface {
        FnSurface::new(PantsGraph::theta(), alloc::vec![1.0, 2.0, 3.0], twists).unwrap()
    }

    #[test]
    fn is_real_examples() {
        assert!(theta([r(0, 1); 3]).is_real());
        assert!(theta([r(0, 1), r(1, 2), r(1, 2)]).is_real());
        assert!(!theta([r(0, 1), r(1, 3), r(1, 2)]).is_real());
        assert_eq!(theta([r(0, 1), r(1, 3), r(1, 2)]).first_non_real_edge(), Some(1));
        // 3/2 normalises to 1/2
        assert!(theta([r(3, 2), r(-1, 2), r(2, 1)]).is_real());
    }

    #[test]
    fn rejects_bad_coordinates() {
        let g = PantsGraph::theta();
        let twists = [r(0, 1); 3];
        assert_eq!(
            FnSurface::new(g.clone(), alloc::vec![1.0, 2.0], twists),
            Err(SurfaceError::LengthCount { expected: 3, found: 2 })
        );
        assert_eq!(
            FnSurface::new(g.clone(), alloc::vec![1.0; 3], [r(0, 1)]),
            Err(SurfaceError::TwistCount { expected: 3, found: 1 })
        );
        for bad in [0.0, -1.0, 1e-9, 50.5, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                FnSurface::new(g.clone(), alloc::vec![1.0, bad, 1.0], twists),
                Err(SurfaceError::LengthOutOfRange { edge: 1, .. })
            ));
        }
        assert!(FnSurface::new(g.clone(), alloc::vec![MIN_LENGTH, MAX_LENGTH, 1.0], twists).is_ok());
        let broken = PantsGraph::new(2, g.edges()[..2].to_vec());
        assert!(matches!(
            FnSurface::new(broken, alloc::vec![1.0; 2], [r(0, 1); 2]),
            Err(SurfaceError::Graph(_))
        ));
    }
}
