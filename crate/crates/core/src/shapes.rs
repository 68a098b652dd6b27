//! Recognizers for the named shapes: complete graphs, cycles, odd wheels and
//! hyperwheels.

use serde::{Deserialize, Serialize};

use crate::connectivity::is_connected;
use crate::hypergraph::Hypergraph;

/// Every pair of vertices forms an edge and there are no other edges. `K1`
/// (one vertex, no edges) counts.
pub fn is_complete_graph(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    n >= 1 && g.is_graph() && g.edge_count() == n * (n - 1) / 2
}

/// A connected 2-regular graph on at least three vertices.
pub fn is_cycle(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    n >= 3 && g.is_graph() && g.edge_count() == n && g.degrees().iter().all(|&d| d == 2) && is_connected(g)
}

pub fn is_odd_cycle(g: &Hypergraph) -> bool {
    g.vertex_count() % 2 == 1 && is_cycle(g)
}

/// The rim of a cycle in traversal order: starts at the smallest vertex and
/// steps to its smaller neighbour first.
pub fn cycle_order(g: &Hypergraph) -> Option<Vec<usize>> {
    if !is_cycle(g) {
        return None;
    }
    let n = g.vertex_count();
    let mut nbrs = vec![Vec::with_capacity(2); n];
    for e in g.edges() {
        nbrs[e[0]].push(e[1]);
        nbrs[e[1]].push(e[0]);
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = *nbrs[0].iter().min().unwrap();
    while cur != 0 {
        order.push(cur);
        let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// An odd wheel, with its hub and its rim in cycle order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWheel {
    pub hub: usize,
    pub rim: Vec<usize>,
}

/// Matches an odd cycle plus one vertex joined to every cycle vertex. The
/// smallest vertex that works as a hub is used, so `K4` matches with hub 0.
pub fn odd_wheel(g: &Hypergraph) -> Option<OddWheel> {
    let n = g.vertex_count();
    if n < 4 || n % 2 == 1 || !g.is_graph() || g.edge_count() != 2 * (n - 1) {
        return None;
    }
    let degrees = g.degrees();
    if degrees.iter().filter(|&&d| d != 3).count() > 1 {
        return None;
    }
    let hub = (0..n).find(|&v| degrees[v] == n - 1)?;
    let rest: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    let rim_graph = g.induced(&rest.iter().copied().collect()).ok()?;
    let order = cycle_order(&rim_graph.graph)?;
    Some(OddWheel { hub, rim: order.into_iter().map(|i| rim_graph.original_ids[i]).collect() })
}

/// A hyperwheel: one edge of size `n - 1` plus an apex joined to each of its
/// vertices by an ordinary edge. Returns the smallest vertex that works as
/// the apex, so a triangle matches with apex 0.
pub fn hyperwheel_apex(g: &Hypergraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n {
        return None;
    }
    (0..n).find(|&apex| {
        let rim: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
        g.contains_edge(&rim) && rim.iter().all(|&v| g.contains_edge(&sorted_pair(apex, v)))
    })
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

/// True if the ordinary edges of `g` contain a clique on `size` vertices.
pub fn has_clique(g: &Hypergraph, size: usize) -> bool {
    let n = g.vertex_count();
    if size <= 1 {
        return n >= size;
    }
    let mut adj = vec![0u128; n];
    if n > 128 {
        return has_clique_slow(g, size);
    }
    for e in g.edges().iter().filter(|e| e.len() == 2) {
        adj[e[0]] |= 1 << e[1];
        adj[e[1]] |= 1 << e[0];
    }
    fn grow(adj: &[u128], candidates: u128, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < need {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(adj, rest & adj[v], need - 1) {
                return true;
            }
        }
        false
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    grow(&adj, all, size)
}

fn has_clique_slow(g: &Hypergraph, size: usize) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges().iter().filter(|e| e.len() == 2) {
        adj[e[0]][e[1]] = true;
        adj[e[1]][e[0]] = true;
    }
    fn grow(adj: &[Vec<bool>], clique: &mut Vec<usize>, from: usize, need: usize) -> bool {
        if clique.len() == need {
            return true;
        }
        for v in from..adj.len() {
            if clique.iter().all(|&u| adj[u][v]) {
                clique.push(v);
                if grow(adj, clique, v + 1, need) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    grow(&adj, &mut Vec::new(), 0, size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn recognizes_shapes() {
        let k4 = hg(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
        assert!(is_complete_graph(&k4));
        assert_eq!(odd_wheel(&k4), Some(OddWheel { hub: 0, rim: vec![1, 2, 3] }));
        assert!(is_complete_graph(&Hypergraph::edgeless(1)));
        assert!(!is_complete_graph(&Hypergraph::empty()));

        let c5 = Hypergraph::new(5, (0..5).map(|i| vec![i, (i + 1) % 5])).unwrap();
        assert!(is_odd_cycle(&c5));
        assert_eq!(cycle_order(&c5), Some(vec![0, 1, 2, 3, 4]));
        let w5 = (0..5).fold(c5.with_extra_vertices(1), |g, i| g.add_edge(&[i, 5]).unwrap());
        assert_eq!(odd_wheel(&w5), Some(OddWheel { hub: 5, rim: vec![0, 1, 2, 3, 4] }));

        let c4 = Hypergraph::new(4, (0..4).map(|i| vec![i, (i + 1) % 4])).unwrap();
        assert!(is_cycle(&c4) && !is_odd_cycle(&c4));

        let hw = hg(4, &[&[0, 1, 2], &[0, 3], &[1, 3], &[2, 3]]);
        assert_eq!(hyperwheel_apex(&hw), Some(3));
        assert_eq!(hyperwheel_apex(&hg(3, &[&[0, 1], &[0, 2], &[1, 2]])), Some(0));
        assert_eq!(hyperwheel_apex(&k4), None);

        assert!(has_clique(&k4, 4));
        assert!(!has_clique(&c5, 3));
        assert!(has_clique(&w5, 3));
    }
}
