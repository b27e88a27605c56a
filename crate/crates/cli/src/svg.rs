//! Schematic SVG of a pants graph: pants on a circle, gluing curves as arcs
//! labelled `(length, twist)`, and one closed polygon per fixed curve.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use fenchel_core::FnSurface;

const SIZE: f64 = 640.0;
const RADIUS: f64 = 220.0;
const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#e377c2", "#8c564b"];

type Point = (f64, f64);

fn vertex_position(v: usize, count: usize) -> Point {
    let angle = TAU * v as f64 / count as f64 - TAU / 4.0;
    (SIZE / 2.0 + RADIUS * angle.cos(), SIZE / 2.0 + RADIUS * angle.sin())
}

/// Control point of edge `index`. Parallel edges and loops fan out so they
/// stay apart.
fn control_point(a: Point, b: Point, rank: usize, total: usize) -> Point {
    let centre = (SIZE / 2.0, SIZE / 2.0);
    if (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9 {
        // loop: push outwards from the centre
        let (dx, dy) = (a.0 - centre.0, a.1 - centre.1);
        let norm = dx.hypot(dy).max(1e-9);
        let reach = 90.0 + 30.0 * rank as f64;
        return (a.0 + dx / norm * reach, a.1 + dy / norm * reach);
    }
    let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let norm = dx.hypot(dy);
    let offset = 60.0 * (rank as f64 - (total as f64 - 1.0) / 2.0);
    (mid.0 - dy / norm * offset, mid.1 + dx / norm * offset)
}

/// Point on the quadratic Bézier `a → c → b` at `t`.
fn bezier(a: Point, c: Point, b: Point, t: f64) -> Point {
    let s = 1.0 - t;
    (s * s * a.0 + 2.0 * s * t * c.0 + t * t * b.0, s * s * a.1 + 2.0 * s * t * c.1 + t * t * b.1)
}

pub fn render(surface: &FnSurface) -> String {
    let graph = surface.graph();
    let count = graph.vertex_count();
    let positions: Vec<Point> = (0..count).map(|v| vertex_position(v, count)).collect();

    // rank each edge among those joining the same unordered pair
    let key = |e: usize| {
        let [a, b] = graph.edge(e).sides;
        (a.vertex.min(b.vertex), a.vertex.max(b.vertex))
    };
    let controls: Vec<Point> = (0..graph.edge_count())
        .map(|e| {
            let rank = (0..e).filter(|&f| key(f) == key(e)).count();
            let total = (0..graph.edge_count()).filter(|&f| key(f) == key(e)).count();
            let [a, b] = graph.edge(e).sides;
            control_point(positions[a.vertex], positions[b.vertex], rank, total)
        })
        .collect();
    let edge_point = |e: usize, t: f64| {
        let [a, b] = graph.edge(e).sides;
        let (pa, pb) = (positions[a.vertex], positions[b.vertex]);
        if a.vertex == b.vertex {
            controls[e]
        } else {
            bezier(pa, controls[e], pb, t)
        }
    };

    let mut out = String::new();
    writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##).unwrap();
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"##
    )
    .unwrap();
    writeln!(out, r##"<title>genus {} surface, {} pants</title>"##, surface.genus(), count).unwrap();
    writeln!(out, r##"<rect width="100%" height="100%" fill="white"/>"##).unwrap();

    writeln!(out, r##"<g class="edges" fill="none" stroke="#555" stroke-width="2">"##).unwrap();
    for (e, &c) in controls.iter().enumerate() {
        let [a, b] = graph.edge(e).sides;
        let (pa, pb) = (positions[a.vertex], positions[b.vertex]);
        let path = if a.vertex == b.vertex {
            // a loop is two curves through one far point
            let (dx, dy) = (c.0 - pa.0, c.1 - pa.1);
            let (l, r) = ((c.0 - dy * 0.5, c.1 + dx * 0.5), (c.0 + dy * 0.5, c.1 - dx * 0.5));
            format!("M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}", pa.0, pa.1, l.0, l.1, c.0, c.1, r.0, r.1, pa.0, pa.1)
        } else {
            format!("M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}", pa.0, pa.1, c.0, c.1, pb.0, pb.1)
        };
        writeln!(out, r##"<path id="edge-{e}" d="{path}"/>"##).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    writeln!(out, r##"<g class="labels" font-family="monospace" font-size="11" fill="#222">"##).unwrap();
    for e in 0..graph.edge_count() {
        let p = edge_point(e, 0.5);
        let t = surface.twist(e);
        writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" text-anchor="middle">e{e} ({:.3}, {}/{})</text>"##,
            p.0,
            p.1 - 4.0,
            surface.length(e),
            t.numer(),
            t.denom()
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();

    if let Ok(m) = surface.trace_fixed_curves() {
        writeln!(out, r##"<g class="fixed-curves" fill="none" stroke-width="3" stroke-opacity="0.8">"##).unwrap();
        for (i, curve) in m.curves().iter().enumerate() {
            // each seam arc sits near its pants, nudged towards the edge it leaves through
            let nudge = 6.0 * (i as f64 + 1.0);
            let points: Vec<String> = curve
                .arcs
                .iter()
                .zip(&curve.crossings)
                .flat_map(|(arc, crossing)| {
                    let p = positions[arc.vertex];
                    let q = edge_point(crossing.edge, 0.5);
                    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
                    let norm = dx.hypot(dy).max(1e-9);
                    [
                        (p.0 + dx / norm * nudge, p.1 + dy / norm * nudge),
                        (q.0 + (i as f64) * 3.0, q.1 + (i as f64) * 3.0),
                    ]
                })
                .map(|(x, y)| format!("{x:.2},{y:.2}"))
                .collect();
            writeln!(
                out,
                r##"<polygon class="fixed-curve" data-length="{:.9}" stroke="{}" points="{}"/>"##,
                curve.length,
                PALETTE[i % PALETTE.len()],
                points.join(" ")
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }

    writeln!(out, r##"<g class="pants" font-family="sans-serif" font-size="14" text-anchor="middle">"##).unwrap();
    for (v, p) in positions.iter().enumerate() {
        writeln!(out, r##"<circle cx="{:.2}" cy="{:.2}" r="14" fill="#eee" stroke="#000"/>"##, p.0, p.1).unwrap();
        writeln!(out, r##"<text x="{:.2}" y="{:.2}">{v}</text>"##, p.0, p.1 + 5.0).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
