use serde::Serialize;

use super::{chromatic_number, is_k_colorable};
use crate::connectivity::is_connected;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriticalityFailure {
    NotConnected,
    WrongChromaticNumber,
    RemovableEdge,
}

/// Outcome of a criticality test against a target chromatic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub is_critical: bool,
    pub chi: usize,
    /// An edge whose removal keeps `χ` at the target.
    pub failing_edge: Option<EdgeRef>,
    pub reason: Option<CriticalityFailure>,
}

impl CriticalityReport {
    fn fail(chi: usize, reason: CriticalityFailure, failing_edge: Option<EdgeRef>) -> Self {
        Self { is_critical: false, chi, failing_edge, reason: Some(reason) }
    }
}

/// Tests whether `g` is `target`-critical: connected, `χ(g) = target`, and
/// `χ(g - e) < target` for every edge `e`. Edges are checked in index order
/// and the first one that can be removed is reported.
pub fn is_critical(g: &Hypergraph, target: usize) -> CriticalityReport {
    if !is_connected(g) {
        return CriticalityReport::fail(chromatic_number(g), CriticalityFailure::NotConnected, None);
    }
    if target == 0 {
        return CriticalityReport::fail(chromatic_number(g), CriticalityFailure::WrongChromaticNumber, None);
    }
    let below = target - 1;
    let colorable_below = |h: &Hypergraph| below >= 1 && is_k_colorable(h, below).expect("palette is positive");
    if colorable_below(g) || g.edge_count() == 0 {
        let chi = chromatic_number(g);
        if chi == target {
            return CriticalityReport { is_critical: true, chi, failing_edge: None, reason: None };
        }
        return CriticalityReport::fail(chi, CriticalityFailure::WrongChromaticNumber, None);
    }
    for e in g.edge_refs() {
        let h = g.delete_edge(e).expect("edge ref is in range");
        if !colorable_below(&h) {
            let chi = chromatic_number(g);
            let reason = if chi == target {
                CriticalityFailure::RemovableEdge
            } else {
                CriticalityFailure::WrongChromaticNumber
            };
            return CriticalityReport::fail(chi, reason, (chi == target).then_some(e));
        }
    }
    // each `g - e` uses at most `target - 1` colors, so `χ(g) <= target`
    CriticalityReport { is_critical: true, chi: target, failing_edge: None, reason: None }
}

/// Splits the vertices of a `(k+1)`-critical hypergraph into low vertices
/// (degree exactly `k`) and high vertices.
pub fn low_high_partition(g: &Hypergraph, k: usize) -> Result<(VertexSet, VertexSet)> {
    if !is_critical(g, k + 1).is_critical {
        return Err(Error::NotCritical { expected: k + 1 });
    }
    let degrees = g.degrees();
    if let Some(v) = (0..g.vertex_count()).find(|&v| degrees[v] < k) {
        return Err(Error::Consistency(format!(
            "vertex {v} of a {}-critical hypergraph has degree {}",
            k + 1,
            degrees[v]
        )));
    }
    let low = (0..g.vertex_count()).filter(|&v| degrees[v] == k).collect();
    let high = (0..g.vertex_count()).filter(|&v| degrees[v] > k).collect();
    Ok((low, high))
}
