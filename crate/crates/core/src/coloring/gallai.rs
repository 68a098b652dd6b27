//! Gallai forests and the structure of low vertices in critical hypergraphs.

use serde::Serialize;

use super::low_high_partition;
use crate::connectivity::{blocks, enumerate_separating_sets, is_bridge};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};
use crate::shapes::{has_clique, hyperwheel_apex, is_complete_graph, is_odd_cycle, odd_wheel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockShape {
    /// A single edge of any size; `K2` is reported here.
    SingleEdge,
    Complete,
    OddCycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedBlock {
    pub vertices: VertexSet,
    pub shape: BlockShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiForestReport {
    pub is_gallai_forest: bool,
    pub blocks: Vec<ClassifiedBlock>,
}

fn block_shape(b: &Hypergraph) -> BlockShape {
    if b.edge_count() == 1 {
        BlockShape::SingleEdge
    } else if is_complete_graph(b) {
        BlockShape::Complete
    } else if is_odd_cycle(b) {
        BlockShape::OddCycle
    } else {
        BlockShape::Other
    }
}

/// Classifies every block; `g` is a Gallai forest when none is `Other`.
pub fn is_gallai_forest(g: &Hypergraph) -> GallaiForestReport {
    let blocks: Vec<ClassifiedBlock> = blocks(g)
        .into_iter()
        .map(|b| {
            let shape = block_shape(&g.induced(&b.vertices).expect("block vertices are in range").graph);
            ClassifiedBlock { vertices: b.vertices, shape }
        })
        .collect();
    GallaiForestReport { is_gallai_forest: blocks.iter().all(|b| b.shape != BlockShape::Other), blocks }
}

/// Pass/fail for each part of the low-vertex lemma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiLemmaReport {
    pub low: VertexSet,
    pub high: VertexSet,
    /// Edges with at least two low and at least one high vertex.
    pub f_edges: Vec<EdgeRef>,
    /// `G(L)` is a Gallai forest.
    pub part_a: bool,
    /// Distinct edges of `F` have distinct traces on `L`.
    pub part_b: bool,
    /// Each trace `e ∩ L` with `e ∈ F` is an edge and a bridge of `G(L)`.
    pub part_c: bool,
    /// With no high vertex, `G` is `K_{k+1}` or (`k = 2`) an odd cycle.
    /// `None` when there are high vertices.
    pub part_d_shape: Option<bool>,
    /// If `G(L)` contains `K_{k+1}` then `G = K_{k+1}`.
    pub part_d_clique: bool,
}

impl GallaiLemmaReport {
    pub fn all_hold(&self) -> bool {
        self.part_a && self.part_b && self.part_c && self.part_d_shape.unwrap_or(true) && self.part_d_clique
    }
}

/// Checks the low-vertex lemma on a `(k+1)`-critical `g` with `k >= 2` and
/// at least one low vertex.
pub fn verify_gallai_lemma(g: &Hypergraph, k: usize) -> Result<GallaiLemmaReport> {
    if k < 2 {
        return Err(Error::Precondition("the low-vertex lemma needs k >= 2".into()));
    }
    let (low, high) = low_high_partition(g, k)?;
    if low.is_empty() {
        return Err(Error::Precondition("there are no low vertices".into()));
    }
    let shrunk = g.shrink(&low)?;
    let gl = &shrunk.graph;
    // position of each low vertex inside G(L)
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in shrunk.original_ids.iter().enumerate() {
        pos[v] = i;
    }

    let f_edges: Vec<EdgeRef> = g
        .edge_refs()
        .filter(|&e| {
            let edge = g.edge(e).unwrap();
            edge.iter().filter(|&&v| low.contains(v)).count() >= 2 && edge.iter().any(|&v| high.contains(v))
        })
        .collect();
    let traces: Vec<Vec<usize>> = f_edges
        .iter()
        .map(|&e| g.edge(e).unwrap().iter().filter(|&&v| low.contains(v)).map(|&v| pos[v]).collect())
        .collect();

    let part_a = is_gallai_forest(gl).is_gallai_forest;
    let mut sorted_traces = traces.clone();
    sorted_traces.sort();
    let part_b = sorted_traces.windows(2).all(|w| w[0] != w[1]);
    let part_c = traces.iter().all(|t| match gl.find_edge(t) {
        Some(e) => is_bridge(gl, e).expect("edge ref from find_edge"),
        None => false,
    });
    let is_target_complete = g.vertex_count() == k + 1 && is_complete_graph(g);
    let part_d_shape = high.is_empty().then(|| is_target_complete || (k == 2 && is_odd_cycle(g)));
    let part_d_clique = !has_clique(gl, k + 1) || is_target_complete;
    Ok(GallaiLemmaReport { low, high, f_edges, part_a, part_b, part_c, part_d_shape, part_d_clique })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HighVertexCase {
    SeparatingPair,
    Hyperwheel,
    OddWheel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneHighVertexReport {
    pub high_vertex: usize,
    pub separating_pair: Option<VertexSet>,
    pub is_hyperwheel: bool,
    pub is_odd_wheel: bool,
    /// The single case that holds.
    pub case: HighVertexCase,
}

/// For a `(k+1)`-critical `g` with exactly one high vertex: exactly one of
/// "a separating vertex set of size 2", "`k = 2` and a hyperwheel", "`k = 3`
/// and an odd wheel" holds. Anything else is reported as an error.
pub fn verify_one_high_vertex_lemma(g: &Hypergraph, k: usize) -> Result<OneHighVertexReport> {
    if k < 2 {
        return Err(Error::Precondition("the one-high-vertex lemma needs k >= 2".into()));
    }
    let (_, high) = low_high_partition(g, k)?;
    if high.len() != 1 {
        return Err(Error::Precondition(format!("expected exactly one high vertex, found {}", high.len())));
    }
    let high_vertex = high.as_slice()[0];
    let separating_pair = enumerate_separating_sets(g, 2)?.into_iter().find(|s| s.len() == 2);
    let is_hyperwheel = k == 2 && hyperwheel_apex(g).is_some();
    let is_odd_wheel = k == 3 && odd_wheel(g).is_some();
    let holding: Vec<HighVertexCase> = [
        (separating_pair.is_some(), HighVertexCase::SeparatingPair),
        (is_hyperwheel, HighVertexCase::Hyperwheel),
        (is_odd_wheel, HighVertexCase::OddWheel),
    ]
    .into_iter()
    .filter_map(|(holds, case)| holds.then_some(case))
    .collect();
    match holding.as_slice() {
        [case] => Ok(OneHighVertexReport { high_vertex, separating_pair, is_hyperwheel, is_odd_wheel, case: *case }),
        other => {
            Err(Error::Consistency(format!("expected exactly one case of the one-high-vertex lemma, got {other:?}")))
        }
    }
}
