//! The `oracle-verify` suite: closed-form trigonometry against explicit
//! half-plane constructions on a fixed grid of pants.

use std::f64::consts::PI;
use std::fmt::Write as _;

use fenchel_core::h2::{build_right_hexagon, distance, hexagon_inradius, PantsDevelopment, SideSelection};
use fenchel_core::surface::{closure_residuals, seam_lengths};
use fenchel_core::{FnSurface, PantsGraph, Rational};

const GRID: [f64; 5] = [0.5, 1.0, 2.0, 3.5, 6.0];

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.max_residual < self.tolerance
    }
}

fn triples() -> impl Iterator<Item = [f64; 3]> {
    GRID.into_iter().flat_map(|a| GRID.into_iter().flat_map(move |b| GRID.into_iter().map(move |c| [a, b, c])))
}

pub fn run_checks() -> Vec<Check> {
    let mut seam = 0.0f64;
    let mut area = 0.0f64;
    let mut angle = 0.0f64;
    let mut feet = 0.0f64;
    let mut failures = 0.0f64;
    for boundary in triples() {
        let predicted = seam_lengths(boundary);
        match build_right_hexagon(boundary[0] / 2.0, boundary[1] / 2.0, boundary[2] / 2.0) {
            Ok(h) => {
                let s = h.side_lengths();
                for (side, k) in [(1, 2), (3, 0), (5, 1)] {
                    seam = seam.max((s[side] - predicted[k]).abs());
                }
                area = area.max((h.area() - PI).abs());
                angle = angle.max(h.max_angle_error());
            }
            Err(_) => failures += 1.0,
        }
        if let Ok(d) = PantsDevelopment::new(boundary) {
            for (slot, l) in boundary.iter().enumerate() {
                let pts = [-1, 0, 1, 2].map(|k| d.foot(slot, k).0);
                for w in pts.windows(2) {
                    feet = feet.max((distance(w[0], w[1]) - l / 2.0).abs());
                }
            }
        }
    }

    let mut gap = 0.0f64;
    let mut bend = 0.0f64;
    let halves = [Rational::from_integer(0), Rational::new(1, 2)];
    for graph in [PantsGraph::theta(), PantsGraph::chain(2).expect("genus 2")] {
        for lengths in triples() {
            for pattern in 0..8 {
                let twists = (0..3).map(|i| halves[pattern >> i & 1]);
                let s = FnSurface::new(graph.clone(), lengths.to_vec(), twists).expect("valid coordinates");
                match closure_residuals(&s) {
                    Ok(rs) => {
                        for r in rs {
                            gap = gap.max(r.position_gap);
                            bend = bend.max(r.angle_error);
                        }
                    }
                    Err(_) => failures += 1.0,
                }
            }
        }
    }

    let a = 2f64.acosh();
    let golden = 2f64.sqrt().acosh();
    let inradius = build_right_hexagon(a, a, a)
        .ok()
        .and_then(|h| hexagon_inradius(&h, SideSelection::Seams).ok())
        .map_or(f64::INFINITY, |r| (r.radius - golden).abs());

    vec![
        Check { name: "seam_identity", max_residual: seam, tolerance: 1e-9 },
        Check { name: "hexagon_area", max_residual: area, tolerance: 1e-6 },
        Check { name: "hexagon_right_angles", max_residual: angle, tolerance: 1e-6 },
        Check { name: "feet_antipodal", max_residual: feet, tolerance: 1e-8 },
        Check { name: "closure_gap", max_residual: gap, tolerance: 1e-6 },
        Check { name: "closure_angle", max_residual: bend, tolerance: 1e-6 },
        Check { name: "regular_inradius", max_residual: inradius, tolerance: 1e-7 },
        Check { name: "construction_failures", max_residual: failures, tolerance: 0.5 },
    ]
}

pub fn report(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let verdict = if c.passed() { "ok" } else { "FAIL" };
        writeln!(out, "{}: max_residual {:.3e} tolerance {:.0e} {verdict}", c.name, c.max_residual, c.tolerance).unwrap();
    }
    out
}
