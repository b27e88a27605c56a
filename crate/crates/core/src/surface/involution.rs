use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::union_find::DisjointSet;

use super::{half, normalize_twist, trace, FnSurface, Multicurve, Rational, TraceError};

/// Which of the two mirror-image hexagons of a pants.
///
/// The positive hexagon contains the arcs `x ∈ [0, L/2]` of all three
/// boundaries, the negative one the arcs `[L/2, L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    Positive,
    Negative,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Positive => Chirality::Negative,
            Chirality::Negative => Chirality::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hexagon {
    pub vertex: usize,
    pub chirality: Chirality,
}

impl Hexagon {
    pub fn index(self) -> usize {
        2 * self.vertex + usize::from(self.chirality == Chirality::Negative)
    }

    pub fn from_index(index: usize) -> Self {
        let chirality = if index.is_multiple_of(2) { Chirality::Positive } else { Chirality::Negative };
        Self { vertex: index / 2, chirality }
    }
}

/// An isometry of a boundary circle in units of its length: `x ↦ ±x + offset (mod 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CircleMap {
    pub reverse: bool,
    pub offset: Rational,
}

impl CircleMap {
    pub fn new(reverse: bool, offset: Rational) -> Self {
        Self { reverse, offset: normalize_twist(offset) }
    }

    /// The reflection fixing both feet.
    pub fn reflection() -> Self {
        Self::new(true, Rational::from_integer(0))
    }

    pub fn apply(&self, x: Rational) -> Rational {
        let x = if self.reverse { -x } else { x };
        normalize_twist(x + self.offset)
    }

    /// `self ∘ inner`
    pub fn after(&self, inner: &CircleMap) -> CircleMap {
        let shifted = if self.reverse { -inner.offset } else { inner.offset };
        CircleMap::new(self.reverse != inner.reverse, shifted + self.offset)
    }
}

/// The orientation-reversing involution of a real surface, acting on the
/// hexagon complex.
#[derive(Clone, Debug, PartialEq)]
pub struct Involution {
    hexagon_map: Vec<usize>,
    fixed_set: Multicurve,
    invariant_edges: Vec<usize>,
    gluings: Vec<CircleMap>,
    components: Vec<usize>,
    component_count: usize,
}

impl Involution {
    /// Image of each hexagon, by [`Hexagon::index`].
    pub fn hexagon_map(&self) -> &[usize] {
        &self.hexagon_map
    }

    pub fn apply(&self, hexagon: Hexagon) -> Hexagon {
        Hexagon::from_index(self.hexagon_map[hexagon.index()])
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagon_map.len()
    }

    /// Each hexagon has area π.
    pub fn total_area(&self) -> f64 {
        self.hexagon_count() as f64 * PI
    }

    pub fn fixed_set(&self) -> &Multicurve {
        &self.fixed_set
    }

    /// Partition curves mapped to themselves.
    pub fn invariant_edges(&self) -> &[usize] {
        &self.invariant_edges
    }

    /// The boundary identification across each edge, side zero to side one.
    pub fn gluings(&self) -> &[CircleMap] {
        &self.gluings
    }

    /// Components of the complement of the fixed set.
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of(&self, hexagon: Hexagon) -> usize {
        self.components[hexagon.index()]
    }

    pub fn is_involution(&self) -> bool {
        (0..self.hexagon_map.len()).all(|h| self.hexagon_map[self.hexagon_map[h]] == h)
    }

    /// Every hexagon goes to the mirror hexagon of the same pants.
    pub fn is_orientation_reversing(&self) -> bool {
        (0..self.hexagon_map.len()).all(|h| {
            let (a, b) = (Hexagon::from_index(h), Hexagon::from_index(self.hexagon_map[h]));
            a.vertex == b.vertex && a.chirality != b.chirality
        })
    }

    /// Glued boundary arcs (half-curves) in each complementary component.
    pub fn boundary_arcs_per_component(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.component_count];
        for h in 0..self.hexagon_map.len() {
            // three boundary arcs per hexagon, each shared by two hexagons
            counts[self.components[h]] += 3;
        }
        counts.iter().map(|c| c / 2).collect()
    }
}

pub(crate) fn build(surface: &FnSurface) -> Result<Involution, TraceError> {
    let fixed_set = trace::trace(surface)?;
    let graph = surface.graph();
    let hexagons = 2 * graph.vertex_count();
    let hexagon_map = (0..hexagons).map(|h| h ^ 1).collect();

    let sigma = CircleMap::reflection();
    let mut invariant_edges = Vec::with_capacity(graph.edge_count());
    let mut gluings = Vec::with_capacity(graph.edge_count());
    let mut components = DisjointSet::new(hexagons);
    for (index, edge) in graph.edges().iter().enumerate() {
        let offset = surface.gluing_offset(index);
        let gluing = CircleMap::new(true, offset);
        if gluing.after(&sigma) != sigma.after(&gluing) {
            return Err(TraceError::BoundaryMismatch { edge: index });
        }
        invariant_edges.push(index);
        gluings.push(gluing);

        // the arc [0, ½] on side zero lands on [offset − ½, offset] on side one
        let same = normalize_twist(offset - half()) == Rational::from_integer(0);
        let [a, b] = edge.sides;
        for chirality in [Chirality::Positive, Chirality::Negative] {
            let far = if same { chirality } else { chirality.flip() };
            components.union(
                Hexagon { vertex: a.vertex, chirality }.index(),
                Hexagon { vertex: b.vertex, chirality: far }.index(),
            );
        }
    }
    let (components, component_count) = components.labels();
    Ok(Involution { hexagon_map, fixed_set, invariant_edges, gluings, components, component_count })
}
