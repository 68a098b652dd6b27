//! Named families: complete graphs, cycles, wheels, hyperwheels, `KC_{n,p}`,
//! Toft's dense 4-critical graphs, trees closed by a leaf hyperedge, and the
//! worked examples.

use serde::{Deserialize, Serialize};

use super::join::{dirac_sum, hajos_join, HajosJoinSpec, JoinStep};
use super::split::{split, split_vertex_into_set, SplitAssignment, SplitSpec};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// `K_n`. `K_0` is the empty hypergraph.
pub fn complete_graph(n: usize) -> Hypergraph {
    Hypergraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v]))).expect("pairs are distinct")
}

/// `C_n` on `0, 1, ..., n-1` in order.
pub fn cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]))
}

/// One edge on `0..size`.
pub fn single_edge(size: usize) -> Result<Hypergraph> {
    if size < 2 {
        return Err(Error::InvalidArgument(format!("an edge has at least 2 vertices, got {size}")));
    }
    Hypergraph::new(size, [(0..size).collect::<Vec<_>>()])
}

/// The odd wheel over `C_rim_len`; the hub is the last vertex.
pub fn odd_wheel(rim_len: usize) -> Result<Hypergraph> {
    if rim_len < 3 || rim_len % 2 == 0 {
        return Err(Error::InvalidArgument(format!("the rim of an odd wheel has odd length >= 3, got {rim_len}")));
    }
    let rim = cycle(rim_len)?;
    Ok(dirac_sum(&rim, &complete_graph(1)))
}

/// The edge `{0, ..., edge_size-1}` plus the apex `edge_size` joined to each
/// of its vertices.
pub fn hyperwheel(edge_size: usize) -> Result<Hypergraph> {
    if edge_size < 3 {
        return Err(Error::InvalidArgument(format!("a hyperwheel needs an edge of size >= 3, got {edge_size}")));
    }
    Ok(dirac_sum(&single_edge(edge_size)?, &complete_graph(1)))
}

/// `KC_{n,p} = K_n ⊠ C_{2p+1}`: the clique is `0..n`, the cycle follows.
pub fn kc(n: usize, p: usize) -> Result<Hypergraph> {
    if n < 1 || p < 1 {
        return Err(Error::InvalidArgument(format!("KC needs n >= 1 and p >= 1, got n = {n}, p = {p}")));
    }
    Ok(dirac_sum(&complete_graph(n), &cycle(2 * p + 1)?))
}

/// Toft's 4-critical graph of order `8p + 4` with `(2p+1)^2 + 8p + 4` edges:
/// the Dirac sum of two single edges of size `2p + 1`, with each of those
/// edges replaced by a copy of `KC_{1,p}` through a simple splitting at the
/// hub.
pub fn toft_graph(p: usize) -> Result<Hypergraph> {
    if p < 1 {
        return Err(Error::InvalidArgument("toft_graph needs p >= 1".into()));
    }
    let q = 2 * p + 1;
    let edge = single_edge(q)?;
    let mut g = dirac_sum(&edge, &edge);
    let wheel = kc(1, p)?;
    // spokes {0, i} are the first q edges of KC_{1,p}
    for start in [0, q] {
        let e_tilde = g.find_edge(&(start..start + q).collect::<Vec<_>>()).expect("the hyperedge is present");
        let s = wheel.incidence()[0]
            .iter()
            .map(|&spoke| {
                let rim_vertex = wheel.edge(spoke).expect("spoke")[1];
                SplitAssignment { edge: spoke, targets: vec![start + rim_vertex - 1] }
            })
            .collect();
        g = split(&SplitSpec { g1: g, e_tilde, g2: wheel.clone(), v_tilde: 0, s })?.graph;
    }
    Ok(g)
}

/// A rooted tree given as a parent array; `parent[root] == root`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSpec {
    pub root: usize,
    pub parent: Vec<usize>,
}

impl TreeSpec {
    /// Depth of every vertex, or an error if the array is not a tree rooted
    /// at `root`.
    pub fn depths(&self) -> Result<Vec<usize>> {
        let n = self.parent.len();
        if self.root >= n || self.parent[self.root] != self.root {
            return Err(Error::InvalidArgument("the root must be its own parent".into()));
        }
        if let Some(&p) = self.parent.iter().find(|&&p| p >= n) {
            return Err(Error::VertexOutOfRange { vertex: p, vertex_count: n });
        }
        let mut depth = vec![usize::MAX; n];
        depth[self.root] = 0;
        for start in 0..n {
            let mut path = Vec::new();
            let mut v = start;
            while depth[v] == usize::MAX {
                if path.len() > n {
                    return Err(Error::InvalidArgument("the parent array has a cycle".into()));
                }
                path.push(v);
                v = self.parent[v];
            }
            for &u in path.iter().rev() {
                depth[u] = depth[self.parent[u]] + 1;
            }
        }
        Ok(depth)
    }

    /// Non-root vertices without children, in increasing order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut has_child = vec![false; self.parent.len()];
        for (v, &p) in self.parent.iter().enumerate() {
            if v != self.root {
                has_child[p] = true;
            }
        }
        (0..self.parent.len()).filter(|&v| v != self.root && !has_child[v]).collect()
    }
}

/// The tree plus one hyperedge on its leaves. The root needs at least two
/// children and all leaves must have depths of equal parity.
pub fn c2_tree(spec: &TreeSpec) -> Result<Hypergraph> {
    let depth = spec.depths()?;
    let n = spec.parent.len();
    let root_degree = (0..n).filter(|&v| v != spec.root && spec.parent[v] == spec.root).count();
    if root_degree < 2 {
        return Err(Error::InvalidArgument(format!("the root has {root_degree} children, at least 2 are needed")));
    }
    let leaves = spec.leaves();
    let parity = depth[leaves[0]] % 2;
    if leaves.iter().any(|&l| depth[l] % 2 != parity) {
        return Err(Error::InvalidArgument("the leaves have depths of different parity".into()));
    }
    let tree_edges = (0..n).filter(|&v| v != spec.root).map(|v| vec![spec.parent[v], v]);
    Hypergraph::new(n, tree_edges.chain([leaves]))
}

/// The two Hajós joins of two `K4` at the edge `{0, 1}`, merging vertex 0.
pub fn figure1(include_vstar: bool) -> Hypergraph {
    let k4 = complete_graph(4);
    let e = k4.find_edge(&[0, 1]).expect("K4 has the edge 01");
    let step = JoinStep { v1: 0, e1: e, v2: 0, e2: e, include_vstar };
    hajos_join(&HajosJoinSpec { g1: k4.clone(), g2: k4, step }).expect("valid join").graph
}

const FIGURE2_SHARED: [[usize; 2]; 10] =
    [[0, 1], [0, 5], [1, 2], [1, 3], [2, 3], [2, 6], [3, 4], [4, 7], [5, 6], [6, 7]];

/// The 4-critical graph on ten vertices built as `(K4 Δ K4) Δ K4`; its
/// vertices 8 and 9 are `x1` and `x2`.
pub fn figure2_g1() -> Hypergraph {
    let extra = [[0, 8], [1, 8], [5, 8], [3, 9], [4, 9], [7, 9]];
    Hypergraph::new(10, FIGURE2_SHARED.iter().chain(&extra).map(|e| e.to_vec())).expect("static edges")
}

/// The 4-critical graph on nine vertices obtained by identifying `x1` and
/// `x2` of [`figure2_g1`] into vertex 8.
pub fn figure2_g2() -> Hypergraph {
    let extra = [[0, 8], [1, 8], [5, 8], [3, 8], [4, 8], [7, 8]];
    Hypergraph::new(9, FIGURE2_SHARED.iter().chain(&extra).map(|e| e.to_vec())).expect("static edges")
}

/// Splits vertex 8 of [`figure2_g2`] into `{x1, x2}`, sending its edges to
/// 0, 1, 5 to `x1` and the rest to `x2`, and renames the result onto the ids
/// of [`figure2_g1`].
pub fn figure2_split() -> Result<Hypergraph> {
    let g2 = figure2_g2();
    let s = g2.incidence()[8]
        .iter()
        .map(|&edge| {
            let other = g2.edge(edge).expect("edge at x")[0];
            SplitAssignment { edge, targets: vec![usize::from(![0, 1, 5].contains(&other))] }
        })
        .collect();
    let result = split_vertex_into_set(&g2, 8, 2, s)?;
    let perm: Vec<usize> = [8, 9].into_iter().chain(0..8).collect();
    result.graph.relabel(&perm)
}

/// A root with three children, each with two leaves, closed by a hyperedge
/// on the six leaves.
pub fn figure3() -> Hypergraph {
    c2_tree(&figure3_tree()).expect("valid tree")
}

pub fn figure3_tree() -> TreeSpec {
    TreeSpec { root: 0, parent: vec![0, 0, 0, 0, 1, 1, 2, 2, 3, 3] }
}
