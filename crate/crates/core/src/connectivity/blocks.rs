//! Blocks and separating vertices.
//!
//! A vertex separates the hypergraph exactly when its node is an
//! articulation point of the bipartite incidence graph. Hyperedge nodes can
//! be articulation points too (a lone hyperedge is a star in the incidence
//! graph), so the biconnected components of the incidence graph are merged
//! whenever they share a hyperedge; each merged class is one block.

use serde::Serialize;

use super::UnionFind;
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

/// A block given by its vertices (original ids) and its edges. Blocks are
/// induced, so `edges` are exactly the edges of `G` inside `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: Vec<EdgeRef>,
}

/// Edge classes of the incidence graph's biconnected components, merged
/// through shared hyperedges. Returns one representative edge per incidence.
fn edge_classes(g: &Hypergraph) -> UnionFind {
    let n = g.vertex_count();
    let m = g.edge_count();
    let nodes = n + m;
    // incidence arcs: (node, arc id); arc id indexes `incidences`
    let mut incidences: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    for (i, e) in g.edges().iter().enumerate() {
        for &v in e {
            let id = incidences.len();
            incidences.push((v, i));
            adj[v].push((n + i, id));
            adj[n + i].push((v, id));
        }
    }

    let mut classes = UnionFind::new(m);
    let mut disc = vec![usize::MAX; nodes];
    let mut low = vec![0; nodes];
    let mut timer = 0;
    let mut arc_stack: Vec<usize> = Vec::new();
    // (node, arc used to enter, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..nodes {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (x, in_arc, idx) = *frame;
            if idx < adj[x].len() {
                frame.2 += 1;
                let (y, arc) = adj[x][idx];
                if arc == in_arc {
                    continue;
                }
                if disc[y] == usize::MAX {
                    arc_stack.push(arc);
                    disc[y] = timer;
                    low[y] = timer;
                    timer += 1;
                    stack.push((y, arc, 0));
                } else if disc[y] < disc[x] {
                    arc_stack.push(arc);
                    low[x] = low[x].min(disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[x]);
                    if low[x] >= disc[parent] {
                        // pop one biconnected component, ending at in_arc
                        let mut first_edge = None;
                        while let Some(arc) = arc_stack.pop() {
                            let e = incidences[arc].1;
                            match first_edge {
                                None => first_edge = Some(e),
                                Some(f) => classes.union(f, e),
                            }
                            if arc == in_arc {
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    classes
}

/// All blocks, ordered by smallest vertex. Isolated vertices are blocks of
/// their own; the empty hypergraph has no blocks.
pub fn blocks(g: &Hypergraph) -> Vec<Block> {
    let n = g.vertex_count();
    let mut classes = edge_classes(g);
    let mut by_root: Vec<Option<usize>> = vec![None; g.edge_count()];
    let mut groups: Vec<(Vec<usize>, Vec<EdgeRef>)> = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let r = classes.find(i);
        let slot = *by_root[r].get_or_insert_with(|| {
            groups.push((Vec::new(), Vec::new()));
            groups.len() - 1
        });
        groups[slot].0.extend(e.iter().copied());
        groups[slot].1.push(EdgeRef(i));
    }
    let mut touched = vec![false; n];
    for e in g.edges() {
        for &v in e {
            touched[v] = true;
        }
    }
    let mut out: Vec<Block> = groups
        .into_iter()
        .map(|(vs, edges)| Block { vertices: VertexSet::from(vs), edges })
        .chain((0..n).filter(|&v| !touched[v]).map(|v| Block { vertices: VertexSet::from(vec![v]), edges: Vec::new() }))
        .collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

/// Vertices lying in more than one block.
pub fn separating_vertices(g: &Hypergraph) -> VertexSet {
    let mut count = vec![0usize; g.vertex_count()];
    for b in blocks(g) {
        for v in b.vertices.iter() {
            count[v] += 1;
        }
    }
    (0..g.vertex_count()).filter(|&v| count[v] > 1).collect()
}
