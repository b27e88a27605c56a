//! Hyperbolic surfaces in Fenchel–Nielsen coordinates and their real structures.
//!
//! A closed surface of genus `g` is described by a trivalent [`PantsGraph`]
//! with `2g − 2` pants and `3g − 3` gluing curves, together with a length and
//! an exact rational twist for every curve ([`FnSurface`]). When every twist is
//! `0` or `½` the seams of the pants close up into a multicurve that is the
//! fixed set of an orientation-reversing isometric involution; this crate
//! decides that criterion exactly, traces the fixed curves, builds the
//! involution on the hexagon complex and classifies the resulting real form.
//!
//! The [`h2`] module is an independent upper half-plane model used to
//! cross-check the closed-form trigonometry, and [`bounds`] turns hexagon
//! inradii and collar widths into certified lower bounds on the distance from
//! the fixed set.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod graph;
pub mod h2;
pub mod optimize;
pub mod surface;
mod union_find;

pub use bounds::{collar_halfwidth, distance_lower_bound, unbounded_example, BoundsError, DistanceBoundReport, LN3_HALF};
pub use graph::{Edge, GraphError, HalfEdge, PantsGraph, Side, Slot, ValidationReport, Violation};
pub use surface::{
    normalize_twist, Chirality, FnSurface, Hexagon, Involution, Multicurve, RealFormClass, Rational,
    SeamSet, SurfaceError, TraceError,
};
