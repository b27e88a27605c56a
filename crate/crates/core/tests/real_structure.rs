mod common;

use std::f64::consts::PI;

use common::{random_graph, random_real_surface};
use fenchel_core::surface::{closure_residuals, is_real_twist};
use fenchel_core::{Chirality, FnSurface, Hexagon, PantsGraph, Rational, TraceError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

#[test]
fn real_twists_give_fixed_multicurves() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for genus in 2..=5 {
        for _ in 0..200 {
            let s = random_real_surface(genus, 0.5, 6.0, &mut rng);
            let m = s.trace_fixed_curves().unwrap();
            assert!(m.crossing_counts().iter().all(|&c| c == 2));
            assert!(1 <= m.n() && m.n() <= genus + 1, "n = {} at genus {genus}", m.n());
            assert_eq!(m.arc_count(), 6 * genus - 6);
            let seams = s.seam_set().total_length();
            assert!((m.total_length() - seams).abs() < 1e-9 * seams);
        }
    }
}

#[test]
fn one_bad_twist_breaks_the_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for genus in 2..=5 {
        for _ in 0..50 {
            let s = random_real_surface(genus, 0.5, 6.0, &mut rng);
            let edge = rng.random_range(0..s.graph().edge_count());
            let q = rng.random_range(3..40);
            let p = rng.random_range(1..q);
            let t = r(p, q);
            if t == r(1, 2) {
                continue;
            }
            let bad = s.with_twist(edge, t);
            assert!(!bad.is_real());
            assert!(matches!(bad.trace_fixed_curves(), Err(TraceError::NotReal { edge: e, .. }) if e == edge));
            assert!(bad.build_involution().is_err() && bad.classify_real_form().is_err());
        }
    }
}

#[test]
fn chain_example_counts() {
    for genus in 2..=6 {
        let g = PantsGraph::chain(genus).unwrap();
        let e = g.edge_count();
        let zero = FnSurface::new(g.clone(), vec![1.0; e], vec![r(0, 1); e]).unwrap();
        assert_eq!(zero.trace_fixed_curves().unwrap().n(), genus + 1);
        let half = FnSurface::new(g, vec![1.0; e], vec![r(1, 2); e]).unwrap();
        assert_eq!(half.trace_fixed_curves().unwrap().n(), 1);
    }
}

#[test]
fn harnack_and_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for genus in 2..=5 {
        for _ in 0..200 {
            let c = random_real_surface(genus, 0.5, 6.0, &mut rng).classify_real_form().unwrap();
            assert!(c.within_harnack_bound());
            assert!(c.parity_ok, "{c:?}");
            if c.separating {
                assert_ne!(genus % 2, c.n % 2);
            }
        }
    }
}

#[test]
fn involution_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for genus in 2..=5 {
        for _ in 0..100 {
            let s = random_real_surface(genus, 0.5, 6.0, &mut rng);
            let inv = s.build_involution().unwrap();
            assert!(inv.is_involution() && inv.is_orientation_reversing());
            assert_eq!(inv.fixed_set(), &s.trace_fixed_curves().unwrap());
            assert_eq!(inv.invariant_edges().len(), s.graph().edge_count());
            assert_eq!(inv.hexagon_count(), 2 * (2 * genus - 2));
            assert!((inv.total_area() - 2.0 * PI * (2 * genus - 2) as f64).abs() < 1e-9);
            for v in 0..s.graph().vertex_count() {
                let h = Hexagon { vertex: v, chirality: Chirality::Positive };
                assert_eq!(inv.apply(h).chirality, Chirality::Negative);
            }
            if inv.component_count() == 2 {
                assert_eq!(inv.boundary_arcs_per_component(), [3 * genus - 3; 2]);
            } else {
                assert_eq!(inv.component_count(), 1);
            }
        }
    }
}

#[test]
fn reality_does_not_depend_on_side_choices() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let graphs = [PantsGraph::theta(), PantsGraph::chain(3).unwrap(), random_graph(3, &mut rng)];
    for graph in graphs {
        let e = graph.edge_count();
        for _ in 0..4 {
            let lengths: Vec<f64> = (0..e).map(|_| rng.random_range(0.5..4.0)).collect();
            let twists: Vec<Rational> = (0..e).map(|_| [r(0, 1), r(1, 2), r(1, 4), r(2, 3)][rng.random_range(0..4)]).collect();
            let base = FnSurface::new(graph.clone(), lengths.clone(), twists.clone()).unwrap();
            let base_class = base.classify_real_form().ok();
            for mask in 0u32..(1 << e) {
                let edges = graph.edges().iter().enumerate().map(|(i, ed)| if mask >> i & 1 == 1 { ed.flipped() } else { *ed });
                let flipped = PantsGraph::new(graph.vertex_count(), edges);
                let s = FnSurface::new(flipped, lengths.clone(), twists.clone()).unwrap();
                assert_eq!(s.is_real(), base.is_real());
                assert_eq!(s.classify_real_form().ok(), base_class);
            }
        }
    }
}

#[test]
fn reference_changes_preserve_membership() {
    for q in 1..24 {
        for p in -2 * q..2 * q {
            let t = r(p, q);
            for k in 0..4 {
                let shift = r(k, 2);
                assert_eq!(is_real_twist(fenchel_core::normalize_twist(t + shift)), is_real_twist(fenchel_core::normalize_twist(t)));
                assert_eq!(is_real_twist(fenchel_core::normalize_twist(-t + shift)), is_real_twist(fenchel_core::normalize_twist(t)));
            }
        }
    }
}

#[test]
fn seams_continue_straight_across_feet() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..10 {
        let s = random_real_surface(2, 0.5, 6.0, &mut rng);
        for x in closure_residuals(&s).unwrap() {
            assert!(x.position_gap < 1e-6 && x.angle_error < 1e-6, "{x:?}");
        }
    }
    let theta = FnSurface::new(PantsGraph::theta(), vec![2.0, 0.7, 3.1], vec![r(1, 2), r(0, 1), r(1, 2)]).unwrap();
    assert_eq!(closure_residuals(&theta).unwrap().len(), 6);
}
