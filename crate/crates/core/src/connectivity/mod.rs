//! Hyperpaths, components, local edge connectivity, blocks and separating
//! structures.

mod blocks;
mod flow;
mod separators;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

pub use blocks::{blocks, separating_vertices, Block};
pub use flow::{
    edge_connectivity, is_k_edge_connected, local_edge_connectivity, local_edge_connectivity_value,
    max_local_edge_connectivity, max_local_edge_connectivity_witness, LocalConnectivity,
};
pub use separators::{
    bridges, enumerate_separating_sets, is_bridge, is_separating_vertex_set, minimal_separating_edge_sets,
    mixed_separating_sets, EdgeCut, MixedSeparator,
};

/// Alternating vertex/edge sequence `v1 e1 v2 ... e(q-1) vq` with distinct
/// vertices, distinct edges and `{vi, vi+1} ⊆ ei`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperpath {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeRef>,
}

impl Hyperpath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// `[v1, e1, v2, ..., vq]` with edges written as their indices.
    pub fn to_alternating(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.vertices.len() + self.edges.len());
        for (i, &v) in self.vertices.iter().enumerate() {
            out.push(v);
            if let Some(e) = self.edges.get(i) {
                out.push(e.0);
            }
        }
        out
    }

    /// Checks every hyperpath condition against `g`.
    pub fn validate(&self, g: &Hypergraph) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidArgument(format!("not a hyperpath: {why}")));
        if self.vertices.is_empty() || self.vertices.len() != self.edges.len() + 1 {
            return bad("length mismatch");
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated vertex");
        }
        let mut es = self.edges.clone();
        es.sort_unstable();
        if es.windows(2).any(|w| w[0] == w[1]) {
            return bad("repeated edge");
        }
        for (i, &e) in self.edges.iter().enumerate() {
            let edge = g.edge(e)?;
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            if edge.binary_search(&a).is_err() || edge.binary_search(&b).is_err() {
                return bad("consecutive vertices not covered by the edge between them");
            }
        }
        Ok(())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Number of components after removing the vertices flagged in `removed`
/// (edges are shrunk, as in `G ÷ X`) and skipping the edges flagged in
/// `skip_edges`.
pub(crate) fn count_components_masked(g: &Hypergraph, removed: &[bool], skip_edges: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for (i, e) in g.edges().iter().enumerate() {
        if skip_edges.get(i).copied().unwrap_or(false) {
            continue;
        }
        let mut first = None;
        for &v in e {
            if removed.get(v).copied().unwrap_or(false) {
                continue;
            }
            match first {
                None => first = Some(v),
                Some(f) => uf.union(f, v),
            }
        }
    }
    (0..n).filter(|&v| !removed.get(v).copied().unwrap_or(false) && uf.find(v) == v).count()
}

pub(crate) fn component_count(g: &Hypergraph) -> usize {
    count_components_masked(g, &[], &[])
}

/// The components of `g`, each as a vertex set, ordered by smallest vertex.
/// The empty hypergraph has none.
pub fn components(g: &Hypergraph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in g.edges() {
        for w in e.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = uf.find(v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups.into_iter().map(VertexSet::from).collect()
}

/// Exactly one component. The empty hypergraph is not connected.
pub fn is_connected(g: &Hypergraph) -> bool {
    component_count(g) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn component_examples() {
        let two_triangles = hg(6, &[&[0, 1], &[0, 2], &[1, 2], &[3, 4], &[3, 5], &[4, 5]]);
        assert_eq!(components(&two_triangles).len(), 2);
        assert!(!is_connected(&two_triangles));
        assert_eq!(components(&hg(3, &[&[0, 1, 2]])).len(), 1);
        assert!(components(&Hypergraph::empty()).is_empty());
        assert!(!is_connected(&Hypergraph::empty()));
        assert!(is_connected(&Hypergraph::edgeless(1)));
    }

    #[test]
    fn hyperpath_validation() {
        let g = hg(4, &[&[0, 1, 2], &[2, 3]]);
        let p = Hyperpath { vertices: vec![0, 2, 3], edges: vec![EdgeRef(0), EdgeRef(1)] };
        p.validate(&g).unwrap();
        assert_eq!(p.to_alternating(), vec![0, 0, 2, 1, 3]);
        let bad = Hyperpath { vertices: vec![0, 3], edges: vec![EdgeRef(0)] };
        assert!(bad.validate(&g).is_err());
        let repeat = Hyperpath { vertices: vec![0, 1, 2], edges: vec![EdgeRef(0), EdgeRef(0)] };
        assert!(repeat.validate(&g).is_err());
    }
}
