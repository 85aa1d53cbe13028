use crate::error::{Error, Result};
use crate::instance::{EdgeWeighting, SteinerInstance, VertexWeighting, Weighting};
use crate::rational::Rational;

/// Swaps the variant of a unit-weight instance. A tree on `k` vertices has
/// `k - 1` edges, so the edge optimum is the vertex optimum minus one.
pub fn unweighted_bridge(inst: &SteinerInstance) -> Result<SteinerInstance> {
    let g = inst.graph().clone();
    let unit = |ws: &[Rational]| ws.iter().all(|&w| w == Rational::ONE);
    let weighting = match inst.weighting() {
        Weighting::Edge(w) if unit(w.as_slice()) => Weighting::Vertex(VertexWeighting::unit(&g)),
        Weighting::Vertex(w) if unit(w.as_slice()) => Weighting::Edge(EdgeWeighting::unit(&g)),
        _ => return Err(Error::NonUniformWeights),
    };
    SteinerInstance::new(g, inst.terminals().iter().copied(), weighting, None)
}
