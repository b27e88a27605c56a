use super::{FnSurface, TraceError};

/// Topological type of a real structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RealFormClass {
    /// Number of fixed curves.
    pub n: usize,
    /// Whether the fixed set cuts the surface in two.
    pub separating: bool,
    pub genus: usize,
    /// `separating ⟹ g ≢ n (mod 2)`
    pub parity_ok: bool,
}

impl RealFormClass {
    /// `n ≤ g + 1`
    pub fn within_harnack_bound(&self) -> bool {
        self.n <= self.genus + 1
    }
}

pub(crate) fn classify(surface: &FnSurface) -> Result<RealFormClass, TraceError> {
    let involution = surface.build_involution()?;
    let n = involution.fixed_set().n();
    let genus = surface.genus();
    let separating = involution.component_count() == 2;
    Ok(RealFormClass { n, separating, genus, parity_ok: !separating || genus % 2 != n % 2 })
}
