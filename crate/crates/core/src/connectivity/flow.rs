//! Local edge connectivity through unit-capacity max flow.
//!
//! Every hyperedge `e` becomes a pair of nodes `e_in -> e_out` joined by an
//! arc of capacity one; each incidence `v ∈ e` contributes the uncapacitated
//! arcs `v -> e_in` and `e_out -> v`. Integral flows from `v` to `w` are then
//! exactly systems of edge-disjoint `(v, w)`-hyperpaths, and the residual
//! reachability set after a maximum flow gives a minimum cut `∂(X)`.

use std::collections::VecDeque;

use serde::Serialize;

use super::Hyperpath;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

/// Value, witness paths and witness cut for one vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalConnectivity {
    pub source: usize,
    pub sink: usize,
    pub value: usize,
    pub paths: Vec<Hyperpath>,
    /// `source ∈ cut`, `sink ∉ cut` and `|∂(cut)| = value`.
    pub cut: VertexSet,
}

struct FlowNetwork {
    vertex_count: usize,
    head: Vec<usize>,
    cap: Vec<u32>,
    original: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(g: &Hypergraph) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let inf = u32::try_from(m + 1).unwrap_or(u32::MAX);
        let mut net = Self {
            vertex_count: n,
            head: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
            adj: vec![Vec::new(); n + 2 * m],
        };
        // Incidence arcs first, in (vertex, edge) order, so that adjacency
        // lists are sorted by target id.
        for (i, e) in g.edges().iter().enumerate() {
            let (ein, eout) = (n + 2 * i, n + 2 * i + 1);
            net.add_arc(ein, eout, 1);
            for &v in e {
                net.add_arc(v, ein, inf);
                net.add_arc(eout, v, inf);
            }
        }
        for list in &mut net.adj {
            list.sort_by_key(|&a| net.head[a]);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn reset(&mut self) {
        if self.original.is_empty() {
            self.original = self.cap.clone();
        } else {
            self.cap.copy_from_slice(&self.original);
        }
    }

    /// One BFS augmentation of a single unit. Returns false if `t` is
    /// unreachable.
    fn augment(&mut self, s: usize, t: usize, pred: &mut [usize], queue: &mut VecDeque<usize>) -> bool {
        pred.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        queue.push_back(s);
        pred[s] = usize::MAX - 1;
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && pred[y] == usize::MAX {
                    pred[y] = a;
                    if y == t {
                        let mut cur = t;
                        while cur != s {
                            let arc = pred[cur];
                            self.cap[arc] -= 1;
                            self.cap[arc ^ 1] += 1;
                            cur = self.head[arc ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.reset();
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        let mut value = 0;
        while value < limit && self.augment(s, t, &mut pred, &mut queue) {
            value += 1;
        }
        value
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Peels `value` paths off the current flow, following the lowest-id
    /// target first and cutting out any loops.
    fn decompose(&mut self, s: usize, t: usize, value: usize) -> Vec<Hyperpath> {
        let n = self.vertex_count;
        let mut flow: Vec<u32> = self.original.iter().zip(&self.cap).map(|(o, c)| o.saturating_sub(*c)).collect();
        let mut paths = Vec::with_capacity(value);
        for _ in 0..value {
            let mut vertices = vec![s];
            let mut edges = Vec::new();
            let mut x = s;
            while x != t {
                let to_edge = self.take_flow_arc(x, &mut flow);
                let ein = self.head[to_edge];
                let through = self.take_flow_arc(ein, &mut flow);
                let eout = self.head[through];
                let back = self.take_flow_arc(eout, &mut flow);
                let y = self.head[back];
                let edge = EdgeRef((ein - n) / 2);
                if let Some(pos) = vertices.iter().position(|&u| u == y) {
                    vertices.truncate(pos + 1);
                    edges.truncate(pos);
                } else {
                    vertices.push(y);
                    edges.push(edge);
                }
                x = y;
            }
            paths.push(Hyperpath { vertices, edges });
        }
        paths
    }

    fn take_flow_arc(&self, x: usize, flow: &mut [u32]) -> usize {
        let a = *self.adj[x].iter().find(|&&a| a % 2 == 0 && flow[a] > 0).expect("flow conservation");
        flow[a] -= 1;
        a
    }
}

fn check_pair(g: &Hypergraph, v: usize, w: usize) -> Result<()> {
    g.check_vertex(v)?;
    g.check_vertex(w)?;
    if v == w {
        return Err(Error::InvalidArgument("local edge connectivity needs two distinct vertices".into()));
    }
    Ok(())
}

/// Maximum number of edge-disjoint `(v, w)`-hyperpaths with explicit paths
/// and a minimum cut.
pub fn local_edge_connectivity(g: &Hypergraph, v: usize, w: usize) -> Result<LocalConnectivity> {
    check_pair(g, v, w)?;
    let mut net = FlowNetwork::new(g);
    let value = net.max_flow(v, w, usize::MAX);
    let reach = net.residual_reachable(v);
    let cut = (0..g.vertex_count()).filter(|&u| reach[u]).collect();
    let paths = net.decompose(v, w, value);
    Ok(LocalConnectivity { source: v, sink: w, value, paths, cut })
}

/// Just the value of `λ_G(v, w)`.
pub fn local_edge_connectivity_value(g: &Hypergraph, v: usize, w: usize) -> Result<usize> {
    check_pair(g, v, w)?;
    Ok(FlowNetwork::new(g).max_flow(v, w, usize::MAX))
}

/// `λ(G)`: the maximum of `λ_G(v, w)` over all pairs, 0 with fewer than
/// two vertices.
pub fn max_local_edge_connectivity(g: &Hypergraph) -> usize {
    best_pair(g).map_or(0, |(_, _, value)| value)
}

/// The lexicographically first pair attaining `λ(G)` with its witnesses.
pub fn max_local_edge_connectivity_witness(g: &Hypergraph) -> Option<LocalConnectivity> {
    let (v, w, _) = best_pair(g)?;
    local_edge_connectivity(g, v, w).ok()
}

fn best_pair(g: &Hypergraph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let degree = g.degrees();
    let mut net = FlowNetwork::new(g);
    let mut best = (0, 1, 0);
    for v in 0..n {
        for w in v + 1..n {
            // λ(v, w) never exceeds either degree.
            if degree[v].min(degree[w]) <= best.2 {
                continue;
            }
            let value = net.max_flow(v, w, usize::MAX);
            if value > best.2 {
                best = (v, w, value);
            }
        }
    }
    Some(best)
}

/// Global edge connectivity: `min_w λ_G(0, w)`. Needs at least two vertices.
pub fn edge_connectivity(g: &Hypergraph) -> Result<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidArgument("edge connectivity needs at least two vertices".into()));
    }
    let mut net = FlowNetwork::new(g);
    let mut best = usize::MAX;
    for w in 1..n {
        best = best.min(net.max_flow(0, w, best));
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// `|G| ≥ 2` and removing fewer than `k` edges never disconnects `G`.
pub fn is_k_edge_connected(g: &Hypergraph, k: usize) -> Result<bool> {
    Ok(edge_connectivity(g)? >= k)
}
