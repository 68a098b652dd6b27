//! Separating vertex sets, bridges, minimal separating edge sets and mixed
//! (vertex, edge) separators.

use serde::{Deserialize, Serialize};

use super::{component_count, count_components_masked, edge_connectivity, is_connected};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

/// An edge cut `(X, Y, F)` with `Y = V \ X` and `F = ∂(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "Y")]
    pub y: VertexSet,
    #[serde(rename = "F")]
    pub f: Vec<EdgeRef>,
    /// Vertices of `X` covered by some edge of `F`.
    #[serde(rename = "X_F")]
    pub x_f: VertexSet,
    #[serde(rename = "Y_F")]
    pub y_f: VertexSet,
}

impl EdgeCut {
    /// The cut determined by one side.
    pub fn from_side(g: &Hypergraph, x: VertexSet) -> Result<Self> {
        let f = g.boundary(&x)?;
        let y = x.complement(g.vertex_count());
        let touched: Vec<usize> = f.iter().flat_map(|&e| g.edges()[e.0].iter().copied()).collect();
        let x_f = touched.iter().copied().filter(|&v| x.contains(v)).collect();
        let y_f = touched.iter().copied().filter(|&v| y.contains(v)).collect();
        Ok(Self { x, y, f, x_f, y_f })
    }

    /// Same cut with the sides exchanged.
    pub fn swapped(&self) -> Self {
        Self { x: self.y.clone(), y: self.x.clone(), f: self.f.clone(), x_f: self.y_f.clone(), y_f: self.x_f.clone() }
    }

    /// Both `|X_F| ≥ 2` and `|Y_F| ≥ 2`.
    pub fn is_nontrivial(&self) -> bool {
        self.x_f.len() >= 2 && self.y_f.len() >= 2
    }
}

/// `{v, e}` such that `v` is a separating vertex of `G - e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MixedSeparator {
    pub vertex: usize,
    pub edge: EdgeRef,
}

fn mask(n: usize, set: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut m = vec![false; n];
    for v in set {
        m[v] = true;
    }
    m
}

/// `G ÷ S` has more components than `G`.
pub fn is_separating_vertex_set(g: &Hypergraph, set: &VertexSet) -> Result<bool> {
    g.check_set(set)?;
    let removed = mask(g.vertex_count(), set.iter());
    Ok(count_components_masked(g, &removed, &[]) > component_count(g))
}

/// All separating sets of size 1 up to `max_size` (at most 2), ordered by
/// size and then lexicographically.
pub fn enumerate_separating_sets(g: &Hypergraph, max_size: usize) -> Result<Vec<VertexSet>> {
    if max_size > 2 {
        return Err(Error::InvalidArgument("separating sets are enumerated up to size 2 only".into()));
    }
    let n = g.vertex_count();
    let base = component_count(g);
    let mut removed = vec![false; n];
    let mut out = Vec::new();
    if max_size >= 1 {
        for v in 0..n {
            removed[v] = true;
            if count_components_masked(g, &removed, &[]) > base {
                out.push(VertexSet::from(vec![v]));
            }
            removed[v] = false;
        }
    }
    if max_size >= 2 {
        for v in 0..n {
            removed[v] = true;
            for w in v + 1..n {
                removed[w] = true;
                if count_components_masked(g, &removed, &[]) > base {
                    out.push(VertexSet::from(vec![v, w]));
                }
                removed[w] = false;
            }
            removed[v] = false;
        }
    }
    Ok(out)
}

/// `G - e` has `|e| - 1` more components than `G`.
pub fn is_bridge(g: &Hypergraph, e: EdgeRef) -> Result<bool> {
    let size = g.edge(e)?.len();
    let skip = mask(g.edge_count(), [e.0]);
    Ok(count_components_masked(g, &[], &skip) == component_count(g) + size - 1)
}

pub fn bridges(g: &Hypergraph) -> Vec<EdgeRef> {
    g.edge_refs().filter(|&e| is_bridge(g, e).unwrap_or(false)).collect()
}

/// Every minimal separating edge set of size at most `max_size`, as an edge
/// cut. Sets are listed by size, then lexicographically; `X` is the first
/// union of components of `G - F` (by smallest vertex, containing vertex 0)
/// whose boundary is exactly `F`.
pub fn minimal_separating_edge_sets(g: &Hypergraph, max_size: usize) -> Result<Vec<EdgeCut>> {
    if max_size == 0 {
        return Err(Error::InvalidArgument("max_size must be at least 1".into()));
    }
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let m = g.edge_count();
    if g.vertex_count() < 2 || edge_connectivity(g)? > max_size {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut skip = vec![false; m];
    for size in 1..=max_size.min(m) {
        enumerate_subsets(m, size, 0, &mut chosen, &mut |subset| {
            for &i in subset {
                skip[i] = true;
            }
            let separating = count_components_masked(g, &[], &skip) > 1;
            let minimal = separating
                && subset.iter().all(|&i| {
                    skip[i] = false;
                    let still = count_components_masked(g, &[], &skip) > 1;
                    skip[i] = true;
                    !still
                });
            if minimal {
                let f: Vec<EdgeRef> = subset.iter().map(|&i| EdgeRef(i)).collect();
                if let Some(cut) = cut_for(g, &f) {
                    out.push(cut);
                }
            }
            for &i in subset {
                skip[i] = false;
            }
        });
    }
    Ok(out)
}

fn enumerate_subsets(m: usize, size: usize, start: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for i in start..m {
        if m - i < size - chosen.len() {
            break;
        }
        chosen.push(i);
        enumerate_subsets(m, size, i + 1, chosen, visit);
        chosen.pop();
    }
}

/// Finds `X` with `∂(X) = F` among unions of components of `G - F`.
fn cut_for(g: &Hypergraph, f: &[EdgeRef]) -> Option<EdgeCut> {
    let rest = g.delete_edges(f).ok()?;
    let comps = super::components(&rest);
    let k = comps.len();
    if k > 20 {
        return None;
    }
    // component 0 contains vertex 0 and always sits in X
    for bits in 0u32..(1 << (k - 1)) {
        let x: VertexSet = comps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i == 0 || bits >> (i - 1) & 1 == 1)
            .flat_map(|(_, c)| c.iter())
            .collect();
        if x.len() == g.vertex_count() {
            continue;
        }
        let cut = EdgeCut::from_side(g, x).ok()?;
        if cut.f == f {
            return Some(cut);
        }
    }
    None
}

/// All `{v, e}` with `v` separating in `G - e`, ordered by edge index and
/// then vertex.
pub fn mixed_separating_sets(g: &Hypergraph) -> Result<Vec<MixedSeparator>> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut skip = vec![false; m];
    let mut removed = vec![false; n];
    for e in 0..m {
        skip[e] = true;
        let base = count_components_masked(g, &[], &skip);
        for v in 0..n {
            removed[v] = true;
            if count_components_masked(g, &removed, &skip) > base {
                out.push(MixedSeparator { vertex: v, edge: EdgeRef(e) });
            }
            removed[v] = false;
        }
        skip[e] = false;
    }
    Ok(out)
}
