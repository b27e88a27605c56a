//! Trivalent pants graphs.
//!
//! Every vertex is a pair of pants with three boundary slots `0, 1, 2`; every
//! edge pairs two half-edges `(vertex, slot)` and stands for one curve of the
//! pants decomposition. Multi-edges and self-glued pants (both half-edges on
//! the same vertex, different slots) are allowed.
//!
//! A [`PantsGraph`] can hold an invalid configuration; [`PantsGraph::validate`]
//! lists everything that is wrong with it instead of failing on the first
//! problem.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::union_find::DisjointSet;

/// A boundary slot of a pair of pants. Always `0`, `1` or `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot(u8);

impl Slot {
    pub const ALL: [Slot; 3] = [Slot(0), Slot(1), Slot(2)];

    pub const fn new(index: u8) -> Option<Slot> {
        if index < 3 {
            Some(Slot(index))
        } else {
            None
        }
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// The next slot in cyclic order.
    pub const fn next(self) -> Slot {
        Slot((self.0 + 1) % 3)
    }

    /// The previous slot in cyclic order.
    pub const fn prev(self) -> Slot {
        Slot((self.0 + 2) % 3)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub vertex: usize,
    pub slot: Slot,
}

impl HalfEdge {
    pub const fn new(vertex: usize, slot: Slot) -> Self {
        Self { vertex, slot }
    }
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.vertex, self.slot)
    }
}

/// The two sides of an edge. Side zero is the designated reference side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Zero,
    One,
}

impl Side {
    pub const fn other(self) -> Side {
        match self {
            Side::Zero => Side::One,
            Side::One => Side::Zero,
        }
    }

    pub const fn index(self) -> usize {
        match self {
            Side::Zero => 0,
            Side::One => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub sides: [HalfEdge; 2],
}

impl Edge {
    pub const fn new(side0: HalfEdge, side1: HalfEdge) -> Self {
        Self { sides: [side0, side1] }
    }

    pub const fn side(&self, side: Side) -> HalfEdge {
        self.sides[side.index()]
    }

    /// The same edge with the side-zero designation swapped.
    pub const fn flipped(&self) -> Edge {
        Edge::new(self.sides[1], self.sides[0])
    }
}

/// A problem found by [`PantsGraph::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooFewVertices { vertex_count: usize },
    OddVertexCount { vertex_count: usize },
    VertexOutOfRange { edge: usize, half_edge: HalfEdge },
    SelfPaired { edge: usize, half_edge: HalfEdge },
    HalfEdgeReused { half_edge: HalfEdge, first_edge: usize, edge: usize },
    Unpaired { half_edge: HalfEdge },
    CountMismatch { vertex_count: usize, edge_count: usize },
    Disconnected { components: usize },
}

impl Violation {
    /// The edge the violation is attached to, when there is one.
    pub fn edge(&self) -> Option<usize> {
        match *self {
            Violation::VertexOutOfRange { edge, .. }
            | Violation::SelfPaired { edge, .. }
            | Violation::HalfEdgeReused { edge, .. } => Some(edge),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewVertices { vertex_count } => {
                write!(f, "need at least 2 pants, found {vertex_count}")
            }
            Violation::OddVertexCount { vertex_count } => {
                write!(f, "pants count {vertex_count} is odd; a closed surface has 2g-2 pants")
            }
            Violation::VertexOutOfRange { edge, half_edge } => {
                write!(f, "edge {edge}: half-edge {half_edge} names a missing pants")
            }
            Violation::SelfPaired { edge, half_edge } => {
                write!(f, "edge {edge}: half-edge {half_edge} is paired with itself")
            }
            Violation::HalfEdgeReused { half_edge, first_edge, edge } => {
                write!(f, "edge {edge}: half-edge {half_edge} already used by edge {first_edge}")
            }
            Violation::Unpaired { half_edge } => write!(f, "half-edge {half_edge} is not paired"),
            Violation::CountMismatch { vertex_count, edge_count } => write!(
                f,
                "{edge_count} edges for {vertex_count} pants; a trivalent graph needs 3V = 2E"
            ),
            Violation::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid pants graph: {0}")]
    Invalid(ValidationReport),
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(usize),
}

/// Where a half-edge is attached: `(edge index, side)`.
type Attachment = Option<(usize, Side)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PantsGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // first attachment of each (vertex, slot); conflicts are left to validate()
    attachments: Vec<[Attachment; 3]>,
}

impl PantsGraph {
    /// Builds a graph without validating it.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let mut attachments = alloc::vec![[None; 3]; vertex_count];
        for (i, edge) in edges.iter().enumerate() {
            for side in [Side::Zero, Side::One] {
                let he = edge.side(side);
                if let Some(slots) = attachments.get_mut(he.vertex) {
                    let entry = &mut slots[he.slot.index()];
                    if entry.is_none() {
                        *entry = Some((i, side));
                    }
                }
            }
        }
        Self { vertex_count, edges, attachments }
    }

    /// Two pants glued along three parallel edges, slot `k` to slot `k`.
    pub fn theta() -> Self {
        let edges = Slot::ALL.map(|s| Edge::new(HalfEdge::new(0, s), HalfEdge::new(1, s)));
        Self::new(2, edges)
    }

    /// The chain of `genus` handles.
    ///
    /// Each handle is a pants whose slots 1 and 2 are glued to each other.
    /// For `genus ≥ 3` the handles hang off a spine of `genus − 2` junction
    /// pants: a junction's slot 0 goes to its own handle, slot 1 to the left
    /// neighbour and slot 2 to the right neighbour, with one extra handle
    /// closing each end of the spine. Genus 2 is two handles joined by one
    /// edge. Vertices are numbered left to right along the chain.
    ///
    /// This is one reading of the usual "chain of handles" picture; it has the
    /// property that all twists `0` give `g + 1` fixed curves and all twists
    /// `½` give a single one.
    pub fn chain(genus: usize) -> Result<Self, GraphError> {
        if genus < 2 {
            return Err(GraphError::GenusTooSmall(genus));
        }
        let he = |v: usize, s: u8| HalfEdge::new(v, Slot(s));
        let mut edges = Vec::with_capacity(3 * genus - 3);
        let handle = |edges: &mut Vec<Edge>, v: usize| edges.push(Edge::new(he(v, 1), he(v, 2)));
        if genus == 2 {
            handle(&mut edges, 0);
            edges.push(Edge::new(he(0, 0), he(1, 0)));
            handle(&mut edges, 1);
            return Ok(Self::new(2, edges));
        }
        // layout: h0, j1, h1, j2, h2, ..., j_{g-2}, h_{g-2}, h_{g-1}
        let junctions = genus - 2;
        let junction = |i: usize| 1 + 2 * i;
        handle(&mut edges, 0);
        edges.push(Edge::new(he(junction(0), 1), he(0, 0)));
        for i in 0..junctions {
            let j = junction(i);
            edges.push(Edge::new(he(j, 0), he(j + 1, 0)));
            handle(&mut edges, j + 1);
            if i + 1 < junctions {
                edges.push(Edge::new(he(j, 2), he(junction(i + 1), 1)));
            }
        }
        let last = 2 * genus - 3;
        edges.push(Edge::new(he(junction(junctions - 1), 2), he(last, 0)));
        handle(&mut edges, last);
        Ok(Self::new(2 * genus - 2, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// The edge and side a half-edge belongs to.
    pub fn attachment(&self, half_edge: HalfEdge) -> Option<(usize, Side)> {
        self.attachments.get(half_edge.vertex)?[half_edge.slot.index()]
    }

    /// The half-edge glued to `half_edge`.
    pub fn partner(&self, half_edge: HalfEdge) -> Option<HalfEdge> {
        let (edge, side) = self.attachment(half_edge)?;
        Some(self.edges[edge].side(side.other()))
    }

    /// Edge incident to each slot of `vertex`. Only meaningful on valid graphs.
    pub fn incident_edges(&self, vertex: usize) -> [usize; 3] {
        self.attachments[vertex].map(|a| a.map_or(usize::MAX, |(e, _)| e))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let v = self.vertex_count;
        if v < 2 {
            violations.push(Violation::TooFewVertices { vertex_count: v });
        }
        if v % 2 == 1 {
            violations.push(Violation::OddVertexCount { vertex_count: v });
        }

        let mut seen: Vec<[Option<usize>; 3]> = alloc::vec![[None; 3]; v];
        for (i, edge) in self.edges.iter().enumerate() {
            if edge.sides[0] == edge.sides[1] {
                violations.push(Violation::SelfPaired { edge: i, half_edge: edge.sides[0] });
            }
            for he in edge.sides {
                match seen.get_mut(he.vertex) {
                    None => violations.push(Violation::VertexOutOfRange { edge: i, half_edge: he }),
                    Some(slots) => match slots[he.slot.index()] {
                        Some(first_edge) if first_edge != i => {
                            violations.push(Violation::HalfEdgeReused { half_edge: he, first_edge, edge: i })
                        }
                        Some(_) => {}
                        None => slots[he.slot.index()] = Some(i),
                    },
                }
            }
        }
        for (vertex, slots) in seen.iter().enumerate() {
            for slot in Slot::ALL {
                if slots[slot.index()].is_none() {
                    violations.push(Violation::Unpaired { half_edge: HalfEdge::new(vertex, slot) });
                }
            }
        }
        if 3 * v != 2 * self.edges.len() {
            violations.push(Violation::CountMismatch { vertex_count: v, edge_count: self.edges.len() });
        }

        if v > 0 {
            let mut components = DisjointSet::new(v);
            for edge in &self.edges {
                let [a, b] = edge.sides;
                if a.vertex < v && b.vertex < v {
                    components.union(a.vertex, b.vertex);
                }
            }
            let (_, count) = components.labels();
            if count > 1 {
                violations.push(Violation::Disconnected { components: count });
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// `g = E − V + 1`, which equals `V/2 + 1` on a valid graph.
    pub fn genus(&self) -> Result<usize, GraphError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(GraphError::Invalid(report));
        }
        Ok(self.edges.len() + 1 - self.vertex_count)
    }
}
