//! The immutable hypergraph value type and the set-level operations on it.
//!
//! Vertices are the dense ids `0..vertex_count`. Every edge is a strictly
//! increasing list of at least two vertex ids, no edge appears twice, and the
//! edge list is kept sorted lexicographically so that two hypergraphs are
//! equal exactly when they have the same vertices and the same edge sets.
//!
//! Operations that drop vertices relabel the survivors to `0..k` (keeping the
//! original relative order) and hand back the map to the original ids.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index into the canonical edge order of a particular hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeRef(pub usize);

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Vertices of `0..n` that are not in the set.
    pub fn complement(&self, n: usize) -> Self {
        Self((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<&[usize]> for VertexSet {
    fn from(v: &[usize]) -> Self {
        Self::from(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        Self::from(v.to_vec())
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(v: VertexSet) -> Self {
        v.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from(iter.into_iter().collect::<Vec<_>>())
    }
}

/// A hypergraph obtained from another one by dropping vertices, together with
/// the original id of every surviving vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relabeled {
    pub graph: Hypergraph,
    /// `original_ids[new] = old`, strictly increasing.
    pub original_ids: Vec<usize>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;

    fn try_from(raw: RawHypergraph) -> Result<Self> {
        if raw.vertex_count > crate::hgr::MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "vertex count {} exceeds limit {}",
                raw.vertex_count,
                crate::hgr::MAX_VERTICES
            )));
        }
        Hypergraph::new(raw.vertex_count, raw.edges)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, edges={:?})", self.vertex_count, self.edges)
    }
}

impl Hypergraph {
    /// Builds a hypergraph from arbitrary edge lists. Each edge is sorted;
    /// repeated vertices inside an edge, edges of size < 2, out-of-range ids
    /// and repeated edges are rejected.
    pub fn new<I, E>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for edge in edges {
            let mut e: Vec<usize> = edge.into_iter().collect();
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge { edge: e, reason: "repeated vertex" });
            }
            if e.len() < 2 {
                return Err(Error::InvalidEdge { edge: e, reason: "fewer than two vertices" });
            }
            out.push(e);
        }
        out.sort();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self { vertex_count, edges: out })
    }

    /// Like [`Hypergraph::new`] but silently merges repeated edges and drops
    /// edges that became too small. Inputs must already be in range.
    pub(crate) fn from_edges_collapsing(vertex_count: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let set: BTreeSet<Vec<usize>> = edges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .filter(|e| e.len() >= 2)
            .collect();
        debug_assert!(set.iter().flatten().all(|&v| v < vertex_count));
        Self { vertex_count, edges: set.into_iter().collect() }
    }

    /// `n` isolated vertices.
    pub fn edgeless(vertex_count: usize) -> Self {
        Self { vertex_count, edges: Vec::new() }
    }

    /// The hypergraph with no vertices.
    pub fn empty() -> Self {
        Self::edgeless(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> {
        (0..self.edges.len()).map(EdgeRef)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    pub fn edge(&self, e: EdgeRef) -> Result<&[usize]> {
        self.edges.get(e.0).map(Vec::as_slice).ok_or(Error::EdgeOutOfRange { index: e.0, edge_count: self.edges.len() })
    }

    /// Looks an edge up by its vertex set (any order).
    pub fn find_edge(&self, vertices: &[usize]) -> Option<EdgeRef> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok().map(EdgeRef)
    }

    pub fn contains_edge(&self, vertices: &[usize]) -> bool {
        self.find_edge(vertices).is_some()
    }

    /// True if every edge has exactly two vertices.
    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// For every vertex, the edges containing it (in edge order).
    pub fn incidence(&self) -> Vec<Vec<EdgeRef>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(EdgeRef(i));
            }
        }
        inc
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Minimum degree; 0 for the empty hypergraph.
    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty hypergraph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// The subhypergraph induced by `set`: vertices relabeled in order, edges
    /// exactly those contained in `set`.
    pub fn induced(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        let index = self.position_map(set);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| index[v].is_some()))
            .map(|e| e.iter().map(|&v| index[v].unwrap()).collect::<Vec<_>>())
            .collect::<Vec<_>>();
        Ok(Relabeled {
            graph: Self { vertex_count: set.len(), edges: sorted(edges) },
            original_ids: set.as_slice().to_vec(),
        })
    }

    /// Shrinks the hypergraph to `set`: every edge is intersected with the
    /// set and kept if at least two vertices remain; coinciding traces merge.
    pub fn shrink(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        let index = self.position_map(set);
        let edges = self.edges.iter().map(|e| e.iter().filter_map(|&v| index[v]).collect::<Vec<_>>());
        Ok(Relabeled { graph: Self::from_edges_collapsing(set.len(), edges), original_ids: set.as_slice().to_vec() })
    }

    /// `G - X`: the subhypergraph induced by the complement of `set`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        self.induced(&set.complement(self.vertex_count))
    }

    /// `G ÷ X`: the hypergraph shrunk to the complement of `set`.
    pub fn div_vertices(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        self.shrink(&set.complement(self.vertex_count))
    }

    /// Same vertices, without the listed edges. Repeated refs are fine.
    pub fn delete_edges(&self, refs: &[EdgeRef]) -> Result<Self> {
        let mut drop = vec![false; self.edges.len()];
        for &r in refs {
            self.edge(r)?;
            drop[r.0] = true;
        }
        Ok(Self {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().zip(drop).filter(|(_, d)| !d).map(|(e, _)| e.clone()).collect(),
        })
    }

    pub fn delete_edge(&self, e: EdgeRef) -> Result<Self> {
        self.delete_edges(&[e])
    }

    /// Adds one edge. Fails if it is malformed or already present.
    pub fn add_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Self::new(self.vertex_count, edges)
    }

    /// Appends `extra` isolated vertices with ids `n..n+extra`.
    pub fn with_extra_vertices(&self, extra: usize) -> Self {
        Self { vertex_count: self.vertex_count + extra, edges: self.edges.clone() }
    }

    /// `∂(X)`: edges with a vertex inside and a vertex outside `set`.
    pub fn boundary(&self, set: &VertexSet) -> Result<Vec<EdgeRef>> {
        self.check_set(set)?;
        if set.is_empty() || set.len() == self.vertex_count {
            return Err(Error::InvalidArgument("boundary needs a non-empty proper vertex subset".into()));
        }
        Ok(self.boundary_unchecked(set))
    }

    pub(crate) fn boundary_unchecked(&self, set: &VertexSet) -> Vec<EdgeRef> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                let inside = e.iter().filter(|&&v| set.contains(v)).count();
                inside > 0 && inside < e.len()
            })
            .map(|(i, _)| EdgeRef(i))
            .collect()
    }

    /// Union over a shared id space; the vertex set is `0..max(n1, n2)`.
    pub fn union(&self, other: &Self) -> Self {
        let edges: BTreeSet<Vec<usize>> = self.edges.iter().chain(&other.edges).cloned().collect();
        Self { vertex_count: self.vertex_count.max(other.vertex_count), edges: edges.into_iter().collect() }
    }

    /// Intersection over a shared id space; the vertex set is `0..min(n1, n2)`.
    pub fn intersection(&self, other: &Self) -> Self {
        let theirs: BTreeSet<&Vec<usize>> = other.edges.iter().collect();
        Self {
            vertex_count: self.vertex_count.min(other.vertex_count),
            edges: self.edges.iter().filter(|e| theirs.contains(e)).cloned().collect(),
        }
    }

    /// No edge is contained in another edge.
    pub fn is_simple(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for (j, b) in self.edges.iter().enumerate() {
                if i != j && a.len() <= b.len() && is_sorted_subset(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// No edge lies entirely inside `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        !self.edges.iter().any(|e| e.iter().all(|&v| set.contains(v)))
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count || !is_permutation(perm) {
            return Err(Error::InvalidArgument("relabeling is not a permutation".into()));
        }
        Ok(Self {
            vertex_count: self.vertex_count,
            edges: sorted(self.edges.iter().map(|e| e.iter().map(|&v| perm[v]).collect()).collect()),
        })
    }

    /// Disjoint union with `other`; the ids of `other` are shifted by `n`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.iter().map(|&v| v + shift).collect()));
        Self { vertex_count: shift + other.vertex_count, edges: sorted(edges) }
    }

    fn position_map(&self, set: &VertexSet) -> Vec<Option<usize>> {
        let mut index = vec![None; self.vertex_count];
        for (i, v) in set.iter().enumerate() {
            index[v] = Some(i);
        }
        index
    }
}

/// Sorts edges whose vertex lists are already sorted.
fn sorted(mut edges: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for e in &mut edges {
        e.sort_unstable();
    }
    edges.sort();
    edges
}

pub(crate) fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Hypergraph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b]));
        Hypergraph::new(n, edges).unwrap()
    }

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(Hypergraph::new(3, [vec![0]]), Err(Error::InvalidEdge { .. })));
        assert!(matches!(Hypergraph::new(3, [vec![0, 0]]), Err(Error::InvalidEdge { .. })));
        assert!(matches!(Hypergraph::new(3, [vec![0, 3]]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(Hypergraph::new(3, [vec![0, 1], vec![1, 0]]), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn edges_are_canonically_ordered() {
        let g = hg(4, &[&[2, 3], &[1, 0, 2], &[0, 1]]);
        assert_eq!(g.edges(), &[vec![0, 1], vec![0, 1, 2], vec![2, 3]]);
        assert_eq!(g, hg(4, &[&[0, 1], &[3, 2], &[2, 0, 1]]));
    }

    #[test]
    fn induced_examples() {
        let r = k(4).induced(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!(r.graph, k(3));
        let r = hg(3, &[&[0, 1, 2]]).induced(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(r.graph.vertex_count(), 2);
        assert_eq!(r.graph.edge_count(), 0);
        assert!(k(3).induced(&VertexSet::from([0, 5])).is_err());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = hg(5, &[&[1, 3], &[3, 4], &[0, 4]]);
        let r = g.induced(&VertexSet::from([1, 3, 4])).unwrap();
        assert_eq!(r.original_ids, vec![1, 3, 4]);
        assert_eq!(r.graph.edges(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn shrink_examples() {
        let r = hg(4, &[&[0, 1, 2, 3]]).shrink(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(r.graph.edges(), &[vec![0, 1]]);
        let r = hg(4, &[&[0, 1, 2], &[0, 1, 3]]).shrink(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(r.graph.edges(), &[vec![0, 1]]);
    }

    #[test]
    fn shrink_keeps_contained_traces() {
        let r = hg(4, &[&[0, 1, 2, 3], &[0, 3]]).shrink(&VertexSet::from([0, 1, 3])).unwrap();
        assert_eq!(r.graph.edges(), &[vec![0, 1, 2], vec![0, 2]]);
        assert!(!r.graph.is_simple());
    }

    #[test]
    fn delete_and_div_vertices() {
        let g = hg(3, &[&[0, 1, 2], &[1, 2]]);
        let x = VertexSet::from([0]);
        assert_eq!(g.delete_vertices(&x).unwrap().graph.edges(), &[vec![0, 1]]);
        assert_eq!(g.div_vertices(&x).unwrap().graph.edges(), &[vec![0, 1]]);
        let x = VertexSet::from([3]);
        assert_eq!(k(4).delete_vertices(&x).unwrap().graph, k(3));
        assert_eq!(k(4).div_vertices(&x).unwrap().graph, k(3));
    }

    #[test]
    fn delete_edges_examples() {
        let g = k(4).delete_edge(EdgeRef(0)).unwrap();
        assert_eq!(g.edge_count(), 5);
        let g = hg(2, &[&[0, 1]]).delete_edge(EdgeRef(0)).unwrap();
        assert_eq!(g, Hypergraph::edgeless(2));
        assert!(k(3).delete_edge(EdgeRef(3)).is_err());
        assert_eq!(k(4).delete_edges(&[]).unwrap(), k(4));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(k(4).boundary(&VertexSet::from([0])).unwrap().len(), 3);
        assert_eq!(hg(4, &[&[0, 1, 2, 3]]).boundary(&VertexSet::from([0, 1])).unwrap(), vec![EdgeRef(0)]);
        assert!(k(3).boundary(&VertexSet::new()).is_err());
        assert!(k(3).boundary(&VertexSet::range(3)).is_err());
    }

    #[test]
    fn degrees() {
        let g = k(4);
        assert_eq!((g.min_degree(), g.max_degree()), (3, 3));
        assert_eq!((Hypergraph::empty().min_degree(), Hypergraph::empty().max_degree()), (0, 0));
        // hyperwheel over a 4-edge: hub 4, rim 2
        let hw = hg(5, &[&[0, 1, 2, 3], &[0, 4], &[1, 4], &[2, 4], &[3, 4]]);
        assert_eq!(hw.degree(4).unwrap(), 4);
        assert_eq!(hw.degree(0).unwrap(), 2);
        assert!(hw.degree(5).is_err());
    }

    #[test]
    fn union_and_intersection() {
        let g = k(4);
        assert_eq!(g.union(&g), g);
        let a = hg(5, &[&[0, 1], &[0, 2], &[1, 2]]);
        let b = hg(5, &[&[2, 3], &[2, 4], &[3, 4]]);
        let u = a.union(&b);
        assert_eq!((u.vertex_count(), u.edge_count()), (5, 6));
        assert_eq!(u.intersection(&a), a);
        assert_eq!(a.intersection(&b).edge_count(), 0);
    }

    #[test]
    fn simplicity() {
        assert!(k(4).is_simple());
        assert!(!hg(3, &[&[0, 1], &[0, 1, 2]]).is_simple());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = hg(3, &[&[0, 1]]);
        assert_eq!(g.relabel(&[2, 0, 1]).unwrap().edges(), &[vec![0, 2]]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
    }

    #[test]
    fn serde_validates() {
        let g: Hypergraph = serde_json::from_str(r#"{"vertex_count":3,"edges":[[2,1],[0,1]]}"#).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1], vec![1, 2]]);
        assert!(serde_json::from_str::<Hypergraph>(r#"{"vertex_count":2,"edges":[[0,2]]}"#).is_err());
        assert!(serde_json::from_str::<Hypergraph>(r#"{"vertex_count":99999999999,"edges":[]}"#).is_err());
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"vertex_count":3,"edges":[[0,1],[1,2]]}"#);
    }
}
