//! Plain-text reports. Field order and number formatting are fixed so equal
//! inputs give byte-identical output.

use std::fmt::Write as _;

use fenchel_core::bounds::{BoundsError, DistanceBoundReport, LN3_HALF};
use fenchel_core::{FnSurface, Multicurve, RealFormClass, TraceError};

fn header(out: &mut String, surface: &FnSurface) {
    writeln!(out, "genus: {}", surface.genus()).unwrap();
    writeln!(out, "pants: {}", surface.graph().vertex_count()).unwrap();
    writeln!(out, "is_real: {}", surface.is_real()).unwrap();
}

fn curves(out: &mut String, m: &Multicurve) {
    writeln!(out, "n: {}", m.n()).unwrap();
    for (i, c) in m.curves().iter().enumerate() {
        let path: Vec<String> = c.arcs.iter().map(|a| format!("{}.s{}", a.vertex, a.seam)).collect();
        writeln!(out, "curve {i}: length {:.9} arcs {} path {}", c.length, c.arcs.len(), path.join(" ")).unwrap();
    }
    writeln!(out, "total_length: {:.9}", m.total_length()).unwrap();
}

fn not_real(out: &mut String, surface: &FnSurface) {
    if let Some(e) = surface.first_non_real_edge() {
        let t = surface.twist(e);
        writeln!(out, "first_non_real_edge: {e} (twist {}/{})", t.numer(), t.denom()).unwrap();
    }
}

/// Output of `check`.
pub fn check(surface: &FnSurface) -> String {
    let mut out = String::new();
    header(&mut out, surface);
    not_real(&mut out, surface);
    out
}

/// Output of `trace`.
pub fn trace(surface: &FnSurface) -> Result<String, TraceError> {
    let m = surface.trace_fixed_curves()?;
    let mut out = String::new();
    header(&mut out, surface);
    curves(&mut out, &m);
    Ok(out)
}

fn class_fields(out: &mut String, c: &RealFormClass) {
    writeln!(out, "separating: {}", c.separating).unwrap();
    writeln!(out, "harnack_ok: {}", c.within_harnack_bound()).unwrap();
    writeln!(out, "parity_ok: {}", c.parity_ok).unwrap();
}

/// Output of `classify`.
pub fn classify(surface: &FnSurface) -> Result<String, TraceError> {
    let m = surface.trace_fixed_curves()?;
    let c = surface.classify_real_form()?;
    let mut out = String::new();
    header(&mut out, surface);
    curves(&mut out, &m);
    class_fields(&mut out, &c);
    Ok(out)
}

fn bound_fields(out: &mut String, r: &DistanceBoundReport) {
    writeln!(out, "ln3_half: {LN3_HALF:.9}").unwrap();
    writeln!(out, "hexagon_bound: {:.9}", r.hexagon_bound).unwrap();
    writeln!(out, "collar_bound: {:.9}", r.collar_bound).unwrap();
    writeln!(out, "certified_lower_bound: {:.9}", r.certified_lower_bound).unwrap();
    writeln!(out, "clears_ln3_half: {}", r.clears_ln3_half).unwrap();
    let verdict = if r.clears_ln3_half { "witness" } else { "bound inconclusive" };
    writeln!(out, "benchmark: {verdict}").unwrap();
    match r.hexagon_witness {
        Some(w) => writeln!(out, "hexagon_witness: pants {}", w.vertex).unwrap(),
        None => writeln!(out, "hexagon_witness: none").unwrap(),
    }
    let skipped: Vec<String> = r.skipped_pants.iter().map(|v| v.to_string()).collect();
    let skipped = if skipped.is_empty() { "none".to_string() } else { skipped.join(" ") };
    writeln!(out, "skipped_pants: {skipped}").unwrap();
}

/// Output of `bounds`.
pub fn bounds(surface: &FnSurface) -> Result<String, BoundsError> {
    let m = surface.trace_fixed_curves()?;
    let c = surface.classify_real_form()?;
    let r = fenchel_core::distance_lower_bound(surface)?;
    let mut out = String::new();
    header(&mut out, surface);
    curves(&mut out, &m);
    class_fields(&mut out, &c);
    bound_fields(&mut out, &r);
    Ok(out)
}
