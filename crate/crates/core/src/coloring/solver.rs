//! Backtracking search for hypergraph colorings.
//!
//! The edge constraint is "not all equal": an edge is violated only when every
//! one of its vertices gets the same color. The search keeps, for each edge,
//! how many of its vertices are colored and how many carry each color. When
//! all but one vertex of an edge are colored alike, that color is removed from
//! the domain of the last vertex (forward checking).
//!
//! Colors are 0-based inside this module.

use std::ops::ControlFlow;

pub(crate) const MAX_PALETTE: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Order {
    /// Smallest remaining domain first, ties by static rank.
    Dynamic,
    /// Vertices `0, 1, 2, ...`; with symmetry breaking off this yields
    /// colorings in lexicographic order.
    Fixed,
}

pub(crate) struct Solver<'a> {
    edges: &'a [Vec<usize>],
    incidence: Vec<Vec<usize>>,
    k: usize,
    color: Vec<usize>,
    domain: Vec<u64>,
    edge_colored: Vec<usize>,
    edge_color_count: Vec<usize>,
    used_count: Vec<usize>,
    trail: Vec<(usize, u64)>,
    rank: Vec<usize>,
    order: Order,
    symmetry: bool,
    nodes: u64,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> Solver<'a> {
    pub(crate) fn new(n: usize, edges: &'a [Vec<usize>], k: usize, order: Order, symmetry: bool) -> Self {
        debug_assert!((1..=MAX_PALETTE).contains(&k));
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        // static rank: most incidences with ranked vertices, then degree,
        // then smallest id
        let mut rank = vec![usize::MAX; n];
        let mut touch = vec![0usize; n];
        for r in 0..n {
            let v = (0..n)
                .filter(|&v| rank[v] == usize::MAX)
                .max_by(|&a, &b| {
                    touch[a].cmp(&touch[b]).then(incidence[a].len().cmp(&incidence[b].len())).then(b.cmp(&a))
                })
                .unwrap();
            rank[v] = r;
            for &e in &incidence[v] {
                for &u in &edges[e] {
                    touch[u] += 1;
                }
            }
        }
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Self {
            edges,
            incidence,
            k,
            color: vec![UNCOLORED; n],
            domain: vec![full; n],
            edge_colored: vec![0; edges.len()],
            edge_color_count: vec![0; edges.len() * k],
            used_count: vec![0; k],
            trail: Vec::new(),
            rank,
            order,
            symmetry,
            nodes: 0,
        }
    }

    #[allow(dead_code)]
    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Colors `v` with `c` and propagates. Returns false on a conflict; the
    /// caller must still call [`Solver::unassign`].
    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        self.used_count[c] += 1;
        let mut ok = true;
        for idx in 0..self.incidence[v].len() {
            let e = self.incidence[v][idx];
            self.edge_colored[e] += 1;
            self.edge_color_count[e * self.k + c] += 1;
            if !ok {
                continue;
            }
            let size = self.edges[e].len();
            let same = self.edge_color_count[e * self.k + c];
            if same == size {
                ok = false;
            } else if same == size - 1 && self.edge_colored[e] == size - 1 {
                let u = *self.edges[e].iter().find(|&&u| self.color[u] == UNCOLORED).unwrap();
                let bit = 1u64 << c;
                if self.domain[u] & bit != 0 {
                    self.trail.push((u, self.domain[u]));
                    self.domain[u] &= !bit;
                    if self.domain[u] == 0 {
                        ok = false;
                    }
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, mark: usize) {
        let c = self.color[v];
        for &e in &self.incidence[v] {
            self.edge_colored[e] -= 1;
            self.edge_color_count[e * self.k + c] -= 1;
        }
        self.used_count[c] -= 1;
        self.color[v] = UNCOLORED;
        while self.trail.len() > mark {
            let (u, d) = self.trail.pop().unwrap();
            self.domain[u] = d;
        }
    }

    /// Fixes colors before the search. Returns false if they already clash.
    pub(crate) fn precolor(&mut self, fixed: &[(usize, usize)]) -> bool {
        for &(v, c) in fixed {
            if self.color[v] != UNCOLORED {
                if self.color[v] != c {
                    return false;
                }
                continue;
            }
            if self.domain[v] & (1 << c) == 0 || !self.assign(v, c) {
                return false;
            }
        }
        // precolored choices are permanent
        self.trail.clear();
        true
    }

    fn allowed(&self, v: usize) -> u64 {
        let mut mask = self.domain[v];
        if self.symmetry {
            // unused colors are interchangeable: keep the used ones and the
            // lowest unused one
            let mut keep = 0u64;
            let mut new_taken = false;
            for c in 0..self.k {
                if self.used_count[c] > 0 {
                    keep |= 1 << c;
                } else if !new_taken {
                    keep |= 1 << c;
                    new_taken = true;
                }
            }
            mask &= keep;
        }
        mask
    }

    fn pick(&self) -> Option<usize> {
        match self.order {
            Order::Fixed => self.color.iter().position(|&c| c == UNCOLORED),
            Order::Dynamic => (0..self.color.len())
                .filter(|&v| self.color[v] == UNCOLORED)
                .min_by_key(|&v| (self.allowed(v).count_ones(), self.rank[v])),
        }
    }

    /// Depth-first search calling `visit` on each complete coloring.
    pub(crate) fn search(&mut self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        self.nodes += 1;
        let Some(v) = self.pick() else {
            return visit(&self.color);
        };
        let mut options = self.allowed(v);
        while options != 0 {
            let c = options.trailing_zeros() as usize;
            options &= options - 1;
            let mark = self.trail.len();
            if self.assign(v, c) {
                if let ControlFlow::Break(()) = self.search(visit) {
                    self.unassign(v, mark);
                    return ControlFlow::Break(());
                }
            }
            self.unassign(v, mark);
        }
        ControlFlow::Continue(())
    }

    pub(crate) fn find_one(&mut self) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.search(&mut |colors| {
            found = Some(colors.to_vec());
            ControlFlow::Break(())
        });
        found
    }
}
