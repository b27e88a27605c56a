//! Upper half-plane model of the hyperbolic plane.
//!
//! Everything here is computed from explicit points, geodesics and Möbius
//! maps. None of it uses the pants trigonometry in [`crate::surface`], so it
//! can serve as an independent check of those formulas.

mod develop;
mod hexagon;
mod inradius;

use core::f64::consts::PI;

use num_complex::Complex64;

pub use develop::PantsDevelopment;
pub use hexagon::{build_right_hexagon, HexagonError, HexagonH2};
pub use inradius::{hexagon_inradius, Inradius, InradiusError, SideSelection};

/// A point `x + iy` with `y > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct H2Point {
    pub x: f64,
    pub y: f64,
}

impl H2Point {
    pub const I: H2Point = H2Point { x: 0.0, y: 1.0 };

    pub fn new(x: f64, y: f64) -> Option<Self> {
        (x.is_finite() && y.is_finite() && y > 0.0).then_some(Self { x, y })
    }

    fn z(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    fn from_z(z: Complex64) -> Self {
        Self { x: z.re, y: z.im }
    }
}

/// A point on the boundary `ℝ ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Ideal {
    Real(f64),
    Infinity,
}

/// A complete geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum H2Geodesic {
    Vertical { x: f64 },
    Semicircle { center: f64, radius: f64 },
}

impl H2Geodesic {
    pub fn from_endpoints(a: Ideal, b: Ideal) -> Option<Self> {
        match (a, b) {
            (Ideal::Infinity, Ideal::Infinity) => None,
            (Ideal::Real(x), Ideal::Infinity) | (Ideal::Infinity, Ideal::Real(x)) => Some(Self::Vertical { x }),
            (Ideal::Real(u), Ideal::Real(v)) => {
                let radius = 0.5 * (u - v).abs();
                (radius > 0.0).then_some(Self::Semicircle { center: 0.5 * (u + v), radius })
            }
        }
    }

    /// The geodesic through two distinct points.
    pub fn through(p: H2Point, q: H2Point) -> Self {
        let dx = q.x - p.x;
        if dx.abs() <= 1e-15 * (p.y + q.y) {
            return Self::Vertical { x: 0.5 * (p.x + q.x) };
        }
        // centre equidistant from p and q on the real axis
        let center = ((q.x + p.x) * dx + (q.y - p.y) * (q.y + p.y)) / (2.0 * dx);
        let radius = libm::hypot(p.x - center, p.y);
        Self::Semicircle { center, radius }
    }

    /// Endpoints, the finite or smaller one first.
    pub fn endpoints(&self) -> (Ideal, Ideal) {
        match *self {
            Self::Vertical { x } => (Ideal::Real(x), Ideal::Infinity),
            Self::Semicircle { center, radius } => (Ideal::Real(center - radius), Ideal::Real(center + radius)),
        }
    }
}

/// An isometry `z ↦ M(z)` or `z ↦ M(−z̄)` with `M` a real Möbius map of positive determinant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    m: [f64; 4],
    reflect: bool,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { m: [1.0, 0.0, 0.0, 1.0], reflect: false };

    fn mobius(a: f64, b: f64, c: f64, d: f64) -> Self {
        let scale = 1.0 / libm::sqrt(a * d - b * c);
        Self { m: [a * scale, b * scale, c * scale, d * scale], reflect: false }
    }

    /// `z ↦ −z̄`, the reflection in the imaginary axis.
    pub const REFLECT_AXIS: Isometry = Isometry { m: [1.0, 0.0, 0.0, 1.0], reflect: true };

    pub fn is_orientation_preserving(&self) -> bool {
        !self.reflect
    }

    fn apply_z(&self, z: Complex64) -> Complex64 {
        let z = if self.reflect { -z.conj() } else { z };
        let [a, b, c, d] = self.m;
        (z * a + b) / (z * c + d)
    }

    pub fn apply(&self, p: H2Point) -> H2Point {
        H2Point::from_z(self.apply_z(p.z()))
    }

    pub fn apply_ideal(&self, e: Ideal) -> Ideal {
        let [a, b, c, d] = self.m;
        let (num, den) = match e {
            Ideal::Infinity => (a, c),
            Ideal::Real(x) => {
                let x = if self.reflect { -x } else { x };
                (a * x + b, c * x + d)
            }
        };
        if den == 0.0 {
            Ideal::Infinity
        } else {
            Ideal::Real(num / den)
        }
    }

    pub fn apply_geodesic(&self, g: &H2Geodesic) -> H2Geodesic {
        let (u, v) = g.endpoints();
        H2Geodesic::from_endpoints(self.apply_ideal(u), self.apply_ideal(v)).expect("isometries are injective")
    }

    /// `self ∘ inner`
    pub fn after(&self, inner: &Isometry) -> Isometry {
        let [a, b, c, d] = self.m;
        // moving the reflection of `self` past `inner`: R∘M = M'∘R with M' = [[a, −b], [−c, d]]
        let [p, q, r, s] = if self.reflect {
            let [p, q, r, s] = inner.m;
            [p, -q, -r, s]
        } else {
            inner.m
        };
        let mut out = Isometry::mobius(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s);
        out.reflect = self.reflect != inner.reflect;
        out
    }

    pub fn inverse(&self) -> Isometry {
        let [a, b, c, d] = self.m;
        let inv = Isometry::mobius(d, -b, -c, a);
        if self.reflect {
            // (M∘R)⁻¹ = R∘M⁻¹ = (M⁻¹)'∘R
            let [p, q, r, s] = inv.m;
            Isometry { m: [p, -q, -r, s], reflect: true }
        } else {
            inv
        }
    }

    /// `z ↦ (z − x)/y`, taking `p` to `i`.
    pub fn center_at(p: H2Point) -> Isometry {
        Isometry::mobius(1.0, -p.x, 0.0, p.y)
    }

    /// Orientation-preserving map sending `from ↦ 0` and `to ↦ ∞`.
    pub fn standardize(from: Ideal, to: Ideal) -> Isometry {
        match (from, to) {
            (Ideal::Real(u), Ideal::Infinity) => Isometry::mobius(1.0, -u, 0.0, 1.0),
            (Ideal::Infinity, Ideal::Real(v)) => Isometry::mobius(0.0, -1.0, 1.0, -v),
            (Ideal::Real(u), Ideal::Real(v)) if u > v => Isometry::mobius(1.0, -u, 1.0, -v),
            (Ideal::Real(u), Ideal::Real(v)) => Isometry::mobius(-1.0, u, 1.0, -v),
            (Ideal::Infinity, Ideal::Infinity) => Isometry::IDENTITY,
        }
    }

    /// Orientation-preserving map taking `g` onto the imaginary axis.
    pub fn to_axis(g: &H2Geodesic) -> Isometry {
        let (u, v) = g.endpoints();
        Isometry::standardize(u, v)
    }

    /// Orientation-preserving map with `p ↦ i` and `q ↦ i·e^{d(p,q)}`.
    pub fn frame(p: H2Point, q: H2Point) -> Isometry {
        let t = Isometry::to_axis(&H2Geodesic::through(p, q));
        let (tp, tq) = (t.apply(p), t.apply(q));
        let (yp, yq) = (tp.z().norm(), tq.z().norm());
        let scaled = Isometry::mobius(1.0, 0.0, 0.0, yp).after(&t);
        if yq >= yp {
            scaled
        } else {
            // half-turn about i
            Isometry::mobius(0.0, -1.0, 1.0, 0.0).after(&scaled)
        }
    }

    /// Reflection in a geodesic.
    pub fn reflection_in(g: &H2Geodesic) -> Isometry {
        let t = Isometry::to_axis(g);
        t.inverse().after(&Isometry::REFLECT_AXIS).after(&t)
    }
}

/// Hyperbolic distance, `cosh d = 1 + |p − q|² / (2·p_y·q_y)`.
///
/// Evaluated as `2·asinh(|p − q| / (2·√(p_y q_y)))`, which is the same
/// quantity without the cancellation near zero.
pub fn distance(p: H2Point, q: H2Point) -> f64 {
    let chord = libm::hypot(p.x - q.x, p.y - q.y);
    2.0 * libm::asinh(chord / (2.0 * libm::sqrt(p.y * q.y)))
}

/// Distance from `p` to the complete geodesic `g`.
pub fn distance_to_geodesic(g: &H2Geodesic, p: H2Point) -> f64 {
    let w = Isometry::to_axis(g).apply(p);
    libm::asinh(w.x.abs() / w.y)
}

/// Foot of the perpendicular from `p` to `g`, and the distance.
pub fn perpendicular_foot(g: &H2Geodesic, p: H2Point) -> (H2Point, f64) {
    let t = Isometry::to_axis(g);
    let w = t.apply(p);
    let foot = t.inverse().apply(H2Point { x: 0.0, y: w.z().norm() });
    (foot, libm::asinh(w.x.abs() / w.y))
}

/// The geodesic through `p` perpendicular to `g`. `p` need not lie on `g`.
///
/// `None` only when rounding collapses the two endpoints, which happens for
/// points within about `1e-300` of the boundary.
pub fn perpendicular_through(g: &H2Geodesic, p: H2Point) -> Option<H2Geodesic> {
    let t = Isometry::to_axis(g);
    let r = t.apply(p).z().norm();
    let back = t.inverse();
    H2Geodesic::from_endpoints(back.apply_ideal(Ideal::Real(-r)), back.apply_ideal(Ideal::Real(r)))
}

/// The point at signed distance `d` from `p` along the geodesic towards `q`.
pub fn point_along(p: H2Point, q: H2Point, d: f64) -> H2Point {
    Isometry::frame(p, q).inverse().apply(H2Point { x: 0.0, y: libm::exp(d) })
}

/// Walks distance `d` from `p` (on the geodesic `from → to`) towards `to`.
pub fn walk_towards(p: H2Point, from: Ideal, to: Ideal, d: f64) -> H2Point {
    let t = Isometry::standardize(from, to);
    let w = t.apply(p);
    t.inverse().apply(H2Point { x: 0.0, y: w.z().norm() * libm::exp(d) })
}

/// Common perpendicular of two ultraparallel geodesics as `(foot on g, foot on h)`.
pub fn common_perpendicular(g: &H2Geodesic, h: &H2Geodesic) -> Option<(H2Point, H2Point)> {
    let t = Isometry::to_axis(g);
    let (a, b) = h.endpoints();
    let (Ideal::Real(u), Ideal::Real(v)) = (t.apply_ideal(a), t.apply_ideal(b)) else {
        return None;
    };
    if (u * v).is_nan() || u * v <= 0.0 {
        return None;
    }
    let rho = libm::sqrt(u * v);
    let on_g = H2Point { x: 0.0, y: rho };
    let on_h = H2Point { x: 2.0 * u * v / (u + v), y: rho * (u - v).abs() / (u + v).abs() };
    let back = t.inverse();
    Some((back.apply(on_g), back.apply(on_h)))
}

/// Unit tangent at `i` of the geodesic from `i` to `w`.
fn tangent_at_i(w: H2Point) -> (f64, f64) {
    if w.x.abs() <= 1e-300 {
        return (0.0, if w.y >= 1.0 { 1.0 } else { -1.0 });
    }
    // circle through i and w centred at c on the real axis; tangent ⟂ (−c, 1)
    let c = (w.x * w.x + w.y * w.y - 1.0) / (2.0 * w.x);
    let sign = w.x.signum();
    let norm = libm::hypot(1.0, c);
    (sign / norm, sign * c / norm)
}

/// Angle in `[0, π]` at `p` between the geodesics towards `q` and `r`.
pub fn angle_at(p: H2Point, q: H2Point, r: H2Point) -> f64 {
    let t = Isometry::center_at(p);
    let (a, b) = (tangent_at_i(t.apply(q)), tangent_at_i(t.apply(r)));
    let cross = a.0 * b.1 - a.1 * b.0;
    let dot = a.0 * b.0 + a.1 * b.1;
    libm::atan2(cross.abs(), dot).clamp(0.0, PI)
}
