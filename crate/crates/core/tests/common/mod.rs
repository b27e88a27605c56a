#![allow(dead_code)]

use fenchel_core::{Edge, FnSurface, HalfEdge, PantsGraph, Rational, Slot};
use rand::seq::SliceRandom;
use rand::Rng;

/// A uniformly random pairing of half-edges, redrawn until connected.
pub fn random_graph(genus: usize, rng: &mut impl Rng) -> PantsGraph {
    let vertices = 2 * genus - 2;
    loop {
        let mut halves: Vec<HalfEdge> =
            (0..vertices).flat_map(|v| Slot::ALL.map(|s| HalfEdge::new(v, s))).collect();
        halves.shuffle(rng);
        let graph = PantsGraph::new(vertices, halves.chunks(2).map(|p| Edge::new(p[0], p[1])));
        if graph.is_valid() {
            return graph;
        }
    }
}

pub fn random_lengths(edges: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> Vec<f64> {
    (0..edges).map(|_| rng.random_range(lo..hi)).collect()
}

pub fn random_real_twists(edges: usize, rng: &mut impl Rng) -> Vec<Rational> {
    (0..edges).map(|_| if rng.random_bool(0.5) { Rational::new(1, 2) } else { Rational::from_integer(0) }).collect()
}

/// Real surface on a random graph, or on the chain graph every fourth draw.
pub fn random_real_surface(genus: usize, lo: f64, hi: f64, rng: &mut impl Rng) -> FnSurface {
    let graph = if rng.random_ratio(1, 4) { PantsGraph::chain(genus).unwrap() } else { random_graph(genus, rng) };
    let edges = graph.edge_count();
    FnSurface::new(graph, random_lengths(edges, lo, hi, rng), random_real_twists(edges, rng)).unwrap()
}
