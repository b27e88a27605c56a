use core::f64::consts::PI;

use thiserror::Error;

use super::{
    angle_at, common_perpendicular, distance, perpendicular_through, walk_towards, H2Geodesic, H2Point, Ideal,
    Isometry,
};
use crate::optimize::bisect;

#[derive(Clone, Copy, Debug, Error, PartialEq)]
pub enum HexagonError {
    #[error("side lengths must be positive and finite, got ({0}, {1}, {2})")]
    NonPositive(f64, f64, f64),
    #[error("no seam length closes the hexagon")]
    NoBracket,
    #[error("hexagon does not close: residual {0:e}")]
    Closure(f64),
}

/// A right-angled hexagon drawn in the upper half-plane.
///
/// Vertices `P0 … P5` in cyclic order; side `k` runs from `P_k` to `P_{k+1}`.
/// Sides `0, 2, 4` are the prescribed alternating sides `a, b, c`, and sides
/// `1, 3, 5` are the ones between them (`a|b`, `b|c`, `c|a`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HexagonH2 {
    pub vertices: [H2Point; 6],
}

impl HexagonH2 {
    pub fn side_lengths(&self) -> [f64; 6] {
        core::array::from_fn(|k| distance(self.vertices[k], self.vertices[(k + 1) % 6]))
    }

    /// Interior angles, vertex by vertex.
    pub fn angles(&self) -> [f64; 6] {
        let v = &self.vertices;
        core::array::from_fn(|k| angle_at(v[k], v[(k + 5) % 6], v[(k + 1) % 6]))
    }

    /// Area from Gauss–Bonnet: `4π − Σ angles`.
    pub fn area(&self) -> f64 {
        4.0 * PI - self.angles().iter().sum::<f64>()
    }

    pub fn max_angle_error(&self) -> f64 {
        self.angles().iter().map(|a| (a - PI / 2.0).abs()).fold(0.0, f64::max)
    }

    /// Complete geodesic carrying side `k`.
    pub fn side_geodesic(&self, k: usize) -> H2Geodesic {
        H2Geodesic::through(self.vertices[k % 6], self.vertices[(k + 1) % 6])
    }

    /// Every side has the four non-adjacent vertices strictly on one side of it.
    pub fn is_convex(&self) -> bool {
        (0..6).all(|k| {
            let t = Isometry::to_axis(&self.side_geodesic(k));
            let signs = (2..6).map(|j| t.apply(self.vertices[(k + j) % 6]).x);
            let mut positive = 0;
            let mut negative = 0;
            for x in signs {
                if x > 0.0 {
                    positive += 1;
                } else if x < 0.0 {
                    negative += 1;
                }
            }
            positive == 4 || negative == 4
        })
    }

    pub fn map(&self, f: impl Fn(H2Point) -> H2Point) -> Self {
        Self { vertices: self.vertices.map(f) }
    }
}

/// Places side `a` on the imaginary axis from `i` to `i·e^a` and closes the
/// hexagon by a one-dimensional search on the side between `a` and `b`.
struct Construction {
    a: f64,
    b: f64,
}

/// Outcome of trying one value of the `a|b` side.
enum Attempt {
    /// The configuration folds over: `c` has no room yet.
    Folded,
    Closed { vertices: [H2Point; 6], c: f64 },
}

impl Construction {
    fn attempt(&self, s: f64) -> Attempt {
        let p0 = H2Point::I;
        let r = libm::exp(self.a);
        let p1 = H2Point { x: 0.0, y: r };
        // distance s along |z| = r from the top
        let p2 = H2Point { x: r * libm::tanh(s), y: r / libm::cosh(s) };
        let side_a = H2Geodesic::Vertical { x: 0.0 };
        let seam_ab = H2Geodesic::Semicircle { center: 0.0, radius: r };
        if p2.y.is_nan() || p2.y <= 0.0 {
            return Attempt::Folded;
        }
        let Some(side_b) = perpendicular_through(&seam_ab, p2) else {
            return Attempt::Folded;
        };
        // side b heads into the region between |z| = 1 and |z| = r
        let (Ideal::Real(inner), outer) = side_b.endpoints() else {
            return Attempt::Folded;
        };
        let p3 = walk_towards(p2, outer, Ideal::Real(inner), self.b);
        if !(p3.y > 0.0 && p3.x.is_finite() && p3.y.is_finite()) {
            return Attempt::Folded;
        }
        let (Some(seam_bc), Some(seam_ca)) = (perpendicular_through(&side_b, p3), perpendicular_through(&side_a, p0))
        else {
            return Attempt::Folded;
        };
        let Some((p5, p4)) = common_perpendicular(&seam_ca, &seam_bc) else {
            return Attempt::Folded;
        };
        let hexagon = HexagonH2 { vertices: [p0, p1, p2, p3, p4, p5] };
        if !hexagon.is_convex() {
            return Attempt::Folded;
        }
        Attempt::Closed { vertices: hexagon.vertices, c: distance(p4, p5) }
    }
}

/// The right-angled hexagon with alternating sides `a, b, c`.
///
/// Long sides strain the half-plane coordinates, so if the construction
/// starting from `a` fails to close, it is retried from `b` and from `c`.
pub fn build_right_hexagon(a: f64, b: f64, c: f64) -> Result<HexagonH2, HexagonError> {
    if !(a > 0.0 && b > 0.0 && c > 0.0 && a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(HexagonError::NonPositive(a, b, c));
    }
    let first = close(a, b, c);
    if first.is_ok() {
        return first;
    }
    for (shift, (x, y, z)) in [(2, (b, c, a)), (4, (c, a, b))] {
        if let Ok(h) = close(x, y, z) {
            return Ok(HexagonH2 { vertices: core::array::from_fn(|k| h.vertices[(k + shift) % 6]) });
        }
    }
    first
}

fn close(a: f64, b: f64, c: f64) -> Result<HexagonH2, HexagonError> {
    let construction = Construction { a, b };
    let gap = |s: f64| match construction.attempt(s) {
        Attempt::Folded => -1.0,
        Attempt::Closed { c: measured, .. } => measured - c,
    };

    // geometric scan for the first sign change, then bisection
    let mut lo = 1e-12;
    let mut hi = lo;
    let mut found = false;
    while hi < 200.0 {
        hi *= 1.25;
        if gap(hi) > 0.0 {
            found = true;
            break;
        }
        lo = hi;
    }
    if !found {
        return Err(HexagonError::NoBracket);
    }
    let s = bisect(|s| gap(s) > 0.0, lo, hi, 0.0, 400);
    let Attempt::Closed { vertices, .. } = construction.attempt(s) else {
        return Err(HexagonError::NoBracket);
    };
    let hexagon = HexagonH2 { vertices };

    let sides = hexagon.side_lengths();
    let residual = [(sides[0], a), (sides[2], b), (sides[4], c)]
        .iter()
        .map(|&(got, want)| (got - want).abs() / want.max(1.0))
        .fold(hexagon.max_angle_error(), f64::max);
    if residual.is_nan() || residual >= 1e-7 {
        return Err(HexagonError::Closure(residual));
    }
    Ok(hexagon)
}
