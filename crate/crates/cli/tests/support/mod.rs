#![allow(dead_code)]

use fenchel_core::{Edge, FnSurface, HalfEdge, PantsGraph, Rational, Slot};
use rand::seq::SliceRandom;
use rand::Rng;

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

pub fn random_surface(genus: usize, lo: f64, hi: f64, twists: impl Fn(&mut dyn rand::RngCore) -> Rational, rng: &mut impl Rng) -> FnSurface {
    let graph = if rng.random_ratio(1, 4) { PantsGraph::chain(genus).unwrap() } else { random_graph(genus, rng) };
    let e = graph.edge_count();
    let lengths = (0..e).map(|_| rng.random_range(lo..hi)).collect();
    let twists: Vec<Rational> = (0..e).map(|_| twists(rng)).collect();
    FnSurface::new(graph, lengths, twists).unwrap()
}

pub fn real_twist(rng: &mut dyn rand::RngCore) -> Rational {
    if rng.random_bool(0.5) { Rational::new(1, 2) } else { Rational::from_integer(0) }
}

pub fn any_twist(rng: &mut dyn rand::RngCore) -> Rational {
    let q = rng.random_range(1..50);
    Rational::new(rng.random_range(-100..100), q)
}

/// Runs the command line with `input` on stdin.
pub fn cli(args: &[&str], input: &str) -> (i32, String, String) {
    let mut stdin = input.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fenchel").chain(args.iter().copied());
    let code = fenchel::run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
