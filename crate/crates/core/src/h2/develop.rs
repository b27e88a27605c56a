use super::{build_right_hexagon, point_along, H2Geodesic, H2Point, HexagonError, HexagonH2, Isometry};

/// One pants drawn in the upper half-plane as its positive hexagon, with the
/// mirror hexagon reachable by reflecting across seam sides.
///
/// Boundary slot `k` runs from `P_{2k}` (`x = 0`) to `P_{2k+1}` (`x = L/2`).
/// The seam with a foot at `P_{2k}` continues to `P_{2k−1}`, the one at
/// `P_{2k+1}` to `P_{2k+2}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PantsDevelopment {
    hexagon: HexagonH2,
}

impl PantsDevelopment {
    pub fn new(boundary: [f64; 3]) -> Result<Self, HexagonError> {
        let hexagon = build_right_hexagon(0.5 * boundary[0], 0.5 * boundary[1], 0.5 * boundary[2])?;
        Ok(Self { hexagon })
    }

    pub fn hexagon(&self) -> &HexagonH2 {
        &self.hexagon
    }

    fn vertex(&self, i: isize) -> H2Point {
        self.hexagon.vertices[i.rem_euclid(6) as usize]
    }

    /// Point at coordinate `x ∈ [0, L/2]` on boundary `slot`.
    pub fn boundary_point(&self, slot: usize, x: f64) -> H2Point {
        let k = 2 * slot as isize;
        point_along(self.vertex(k), self.vertex(k + 1), x)
    }

    /// The foot at `x = half_steps · L/2` on boundary `slot` together with the
    /// far end of its seam, for `half_steps ∈ {−1, 0, 1, 2}`. Steps outside
    /// `[0, 1]` land in the mirror hexagon, drawn by reflection.
    pub fn foot(&self, slot: usize, half_steps: i8) -> (H2Point, H2Point) {
        let k = 2 * slot as isize;
        let (p0, p1) = (self.vertex(k), self.vertex(k + 1));
        let (before, after) = (self.vertex(k - 1), self.vertex(k + 2));
        match half_steps {
            0 => (p0, before),
            1 => (p1, after),
            -1 => {
                let r = Isometry::reflection_in(&H2Geodesic::through(p0, before));
                (r.apply(p1), r.apply(after))
            }
            2 => {
                let r = Isometry::reflection_in(&H2Geodesic::through(p1, after));
                (r.apply(p0), r.apply(before))
            }
            _ => panic!("half_steps out of range: {half_steps}"),
        }
    }
}
