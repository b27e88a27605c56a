use thiserror::Error;

use super::{distance, point_along, H2Point, HexagonH2, Isometry};
use crate::optimize::{GoldenSection, OptimizeError};

/// Which side lines of a hexagon the inscribed disk must avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SideSelection {
    /// Sides `1, 3, 5`.
    Seams,
    /// Sides `0, 2, 4`.
    Boundaries,
    All,
}

impl SideSelection {
    fn sides(self) -> &'static [usize] {
        match self {
            SideSelection::Seams => &[1, 3, 5],
            SideSelection::Boundaries => &[0, 2, 4],
            SideSelection::All => &[0, 1, 2, 3, 4, 5],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Inradius {
    /// Smallest distance from `center` to the selected side lines.
    pub radius: f64,
    pub center: H2Point,
    pub evaluations: usize,
}

#[derive(Clone, Copy, Debug, Error, PartialEq)]
pub enum InradiusError {
    #[error("inradius search did not converge: {0}")]
    NoConvergence(OptimizeError),
    #[error("inradius search exceeded {0} evaluations")]
    Budget(usize),
}

const BUDGET: usize = 100_000;

/// Klein-model chart centred at a point of the hexagon. Geodesics are chords,
/// so the hexagon is a Euclidean convex polygon in these coordinates.
struct KleinChart {
    back: Isometry,
    polygon: [(f64, f64); 6],
}

impl KleinChart {
    fn new(hexagon: &HexagonH2) -> Self {
        let v = &hexagon.vertices;
        let mid = point_along(v[0], v[3], 0.5 * distance(v[0], v[3]));
        let to = Isometry::center_at(mid);
        let polygon = v.map(|p| Self::to_klein(to.apply(p)));
        Self { back: to.inverse(), polygon }
    }

    fn to_klein(p: H2Point) -> (f64, f64) {
        // w = (z − i)/(z + i), k = 2w/(1 + |w|²)
        let den = p.x * p.x + (p.y + 1.0) * (p.y + 1.0);
        let wx = (p.x * p.x + p.y * p.y - 1.0) / den;
        let wy = -2.0 * p.x / den;
        let s = 2.0 / (1.0 + wx * wx + wy * wy);
        (s * wx, s * wy)
    }

    fn to_h2(&self, (kx, ky): (f64, f64)) -> H2Point {
        let r2 = (kx * kx + ky * ky).min(1.0 - 1e-16);
        let s = 1.0 / (1.0 + libm::sqrt(1.0 - r2));
        let (wx, wy) = (s * kx, s * ky);
        // z = i(1 + w)/(1 − w)
        let den = (1.0 - wx) * (1.0 - wx) + wy * wy;
        let x = -2.0 * wy / den;
        let y = (1.0 - wx * wx - wy * wy) / den;
        self.back.apply(H2Point { x, y: y.max(f64::MIN_POSITIVE) })
    }

    fn x_range(&self) -> (f64, f64) {
        self.polygon.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)))
    }

    /// The vertical chord of the polygon at abscissa `u`.
    fn chord(&self, u: f64) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for k in 0..6 {
            let (a, b) = (self.polygon[k], self.polygon[(k + 1) % 6]);
            let (x0, x1) = if a.0 <= b.0 { (a, b) } else { (b, a) };
            if u < x0.0 || u > x1.0 || x1.0 <= x0.0 {
                continue;
            }
            let y = x0.1 + (u - x0.0) / (x1.0 - x0.0) * (x1.1 - x0.1);
            lo = lo.min(y);
            hi = hi.max(y);
        }
        if lo > hi {
            // only at a vertex-extreme abscissa
            let p = self.polygon.iter().min_by(|a, b| (a.0 - u).abs().total_cmp(&(b.0 - u).abs())).unwrap();
            return (p.1, p.1);
        }
        (lo, hi)
    }
}

/// Largest disk inside the hexagon avoiding the selected side lines.
///
/// Nested golden-section search: the outer variable sweeps the polygon in a
/// Klein chart, the inner one runs along the vertical chord. The reported
/// radius is the objective at the returned centre, so it is attained.
pub fn hexagon_inradius(hexagon: &HexagonH2, selection: SideSelection) -> Result<Inradius, InradiusError> {
    let chart = KleinChart::new(hexagon);
    let lines: alloc::vec::Vec<Isometry> =
        selection.sides().iter().map(|&k| Isometry::to_axis(&hexagon.side_geodesic(k))).collect();
    let objective = |p: H2Point| {
        lines.iter().map(|t| {
            let w = t.apply(p);
            libm::asinh(w.x.abs() / w.y)
        })
        .fold(f64::INFINITY, f64::min)
    };

    let (x_lo, x_hi) = chart.x_range();
    let point = |u: f64, v: f64| {
        let x = x_lo + u * (x_hi - x_lo);
        let (lo, hi) = chart.chord(x);
        chart.to_h2((x, lo + v * (hi - lo)))
    };

    let search = GoldenSection::default();
    let mut evaluations = 0;
    let mut failure = None;
    let outer = search.maximize(
        |u| {
            if failure.is_some() || evaluations > BUDGET {
                return f64::NEG_INFINITY;
            }
            match search.maximize(|v| objective(point(u, v)), 0.0, 1.0) {
                Ok(m) => {
                    evaluations += m.evaluations;
                    m.value
                }
                Err(e) => {
                    failure = Some(e);
                    f64::NEG_INFINITY
                }
            }
        },
        0.0,
        1.0,
    );
    if let Some(e) = failure {
        return Err(InradiusError::NoConvergence(e));
    }
    if evaluations > BUDGET {
        return Err(InradiusError::Budget(BUDGET));
    }
    let outer = outer.map_err(InradiusError::NoConvergence)?;
    let inner = search.maximize(|v| objective(point(outer.x, v)), 0.0, 1.0).map_err(InradiusError::NoConvergence)?;
    let center = point(outer.x, inner.x);
    Ok(Inradius { radius: objective(center), center, evaluations: evaluations + inner.evaluations })
}
