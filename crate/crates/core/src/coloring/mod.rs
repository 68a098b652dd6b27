//! Colorings, the chromatic number, criticality and the low/high vertex
//! structure of critical hypergraphs.

mod critical;
mod gallai;
pub(crate) mod solver;

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::connectivity::blocks;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use solver::{Order, Solver, MAX_PALETTE};

pub use critical::{is_critical, low_high_partition, CriticalityFailure, CriticalityReport};
pub use gallai::{
    is_gallai_forest, verify_gallai_lemma, verify_one_high_vertex_lemma, BlockShape, ClassifiedBlock,
    GallaiForestReport, GallaiLemmaReport, HighVertexCase, OneHighVertexReport,
};

/// Largest `k^n` that [`enumerate_k_colorings`] accepts without a limit.
pub const ENUMERATION_GUARD: f64 = 1e8;

/// A map from vertices to colors `1..=palette_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    fn from_zero_based(colors: &[usize], palette_size: usize) -> Self {
        Self { colors: colors.iter().map(|c| c + 1).collect(), palette_size }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// True if every color lies in the palette and no edge of `g` is
    /// monochromatic.
    pub fn is_valid_for(&self, g: &Hypergraph) -> bool {
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|&c| (1..=self.palette_size).contains(&c))
            && g.edges().iter().all(|e| e.iter().any(|&v| self.colors[v] != self.colors[e[0]]))
    }

    /// The set of colors used on `set`, written `φ(X)`.
    pub fn image(&self, set: &VertexSet) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|v| self.colors[v]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

fn check_palette(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidArgument("palette size must be at least 1".into()));
    }
    Ok(())
}

/// Every palette of at least `n` colors works by giving each vertex its own
/// color; otherwise the palette must fit the solver's bitmasks.
fn effective_palette(g: &Hypergraph, k: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if k >= n {
        return Ok(None);
    }
    if k > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("palettes larger than {MAX_PALETTE} are not supported")));
    }
    Ok(Some(k))
}

/// A `k`-coloring of `g` if one exists. The search order is fixed, so the
/// answer depends only on `g` and `k`.
pub fn find_k_coloring(g: &Hypergraph, k: usize) -> Result<Option<Coloring>> {
    find_k_coloring_extending(g, k, &[])
}

/// A `k`-coloring of `g` agreeing with the given `(vertex, color)` pairs
/// (colors in `1..=k`), if one exists.
pub fn find_k_coloring_extending(g: &Hypergraph, k: usize, fixed: &[(usize, usize)]) -> Result<Option<Coloring>> {
    check_palette(k)?;
    for &(v, c) in fixed {
        g.check_vertex(v)?;
        if !(1..=k).contains(&c) {
            return Err(Error::InvalidArgument(format!("color {c} outside palette 1..={k}")));
        }
    }
    let fixed0: Vec<(usize, usize)> = fixed.iter().map(|&(v, c)| (v, c - 1)).collect();
    let Some(kk) = effective_palette(g, k)? else {
        return Ok(distinct_colors_extending(g, k, &fixed0));
    };
    let mut solver = Solver::new(g.vertex_count(), g.edges(), kk, Order::Dynamic, true);
    if !solver.precolor(&fixed0) {
        return Ok(None);
    }
    Ok(solver.find_one().map(|c| Coloring::from_zero_based(&c, k)))
}

/// With `k >= n`: fixed vertices keep their colors and every other vertex
/// gets a fresh one. An edge can then only be monochromatic if all of its
/// vertices are fixed to one color, and no coloring repairs that.
fn distinct_colors_extending(g: &Hypergraph, k: usize, fixed: &[(usize, usize)]) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    for &(v, c) in fixed {
        if colors[v] != usize::MAX && colors[v] != c {
            return None;
        }
        colors[v] = c;
    }
    let taken: std::collections::BTreeSet<usize> = fixed.iter().map(|&(_, c)| c).collect();
    let mut fresh = (0..k).filter(|c| !taken.contains(c));
    for c in colors.iter_mut().filter(|c| **c == usize::MAX) {
        *c = fresh.next().expect("k >= n leaves a fresh color per vertex");
    }
    let coloring = Coloring::from_zero_based(&colors, k);
    coloring.is_valid_for(g).then_some(coloring)
}

/// True if `g` has a `k`-coloring.
pub fn is_k_colorable(g: &Hypergraph, k: usize) -> Result<bool> {
    Ok(find_k_coloring(g, k)?.is_some())
}

/// A cheap lower bound on `χ`: 2 with any edge, or the size of a greedily
/// grown clique among the ordinary edges.
fn chromatic_lower_bound(g: &Hypergraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges().iter().filter(|e| e.len() == 2) {
        adj[e[0]][e[1]] = true;
        adj[e[1]][e[0]] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].iter().filter(|&&b| b).count()));
    let mut best = 2;
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&u| adj[u][v]) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// The least `k` with a `k`-coloring. The empty hypergraph has `χ = 0`, an
/// edgeless nonempty one `χ = 1`.
pub fn chromatic_number(g: &Hypergraph) -> usize {
    let mut k = chromatic_lower_bound(g);
    if k <= 1 {
        return k;
    }
    loop {
        if find_k_coloring(g, k).expect("palette is within range").is_some() {
            return k;
        }
        k += 1;
    }
}

/// `χ` computed as the maximum over the blocks.
pub fn chromatic_number_by_blocks(g: &Hypergraph) -> usize {
    blocks(g)
        .iter()
        .map(|b| chromatic_number(&g.induced(&b.vertices).expect("block vertices are in range").graph))
        .max()
        .unwrap_or(0)
}

/// All `k`-colorings in lexicographic order of their color vectors, stopping
/// after `limit` if given. Without a limit, `k^n` must not exceed
/// [`ENUMERATION_GUARD`].
pub fn enumerate_k_colorings(g: &Hypergraph, k: usize, limit: Option<usize>) -> Result<Vec<Coloring>> {
    check_palette(k)?;
    let n = g.vertex_count();
    if limit.is_none() && (n as f64) * (k as f64).log10() > ENUMERATION_GUARD.log10() {
        return Err(Error::GuardExceeded(format!("{k}^{n} colorings exceed the enumeration guard")));
    }
    if k > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("palettes larger than {MAX_PALETTE} are not supported")));
    }
    let mut out = Vec::new();
    if limit == Some(0) {
        return Ok(out);
    }
    let mut solver = Solver::new(n, g.edges(), k, Order::Fixed, false);
    let _ = solver.search(&mut |colors| {
        out.push(Coloring::from_zero_based(colors, k));
        if Some(out.len()) == limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(out)
}

/// Calls `visit` once per class of `k`-colorings that differ only by a
/// permutation of the palette. Colors passed to `visit` are 1-based. Vertices
/// in `fixed` keep their colors and only permutations fixing those colors are
/// factored out.
pub fn for_each_coloring_up_to_permutation(
    g: &Hypergraph,
    k: usize,
    fixed: &[(usize, usize)],
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<()> {
    check_palette(k)?;
    if k > MAX_PALETTE {
        return Err(Error::InvalidArgument(format!("palettes larger than {MAX_PALETTE} are not supported")));
    }
    for &(v, c) in fixed {
        g.check_vertex(v)?;
        if !(1..=k).contains(&c) {
            return Err(Error::InvalidArgument(format!("color {c} outside palette 1..={k}")));
        }
    }
    let fixed0: Vec<(usize, usize)> = fixed.iter().map(|&(v, c)| (v, c - 1)).collect();
    let mut solver = Solver::new(g.vertex_count(), g.edges(), k, Order::Fixed, true);
    if !solver.precolor(&fixed0) {
        return Ok(());
    }
    let mut buf = Vec::with_capacity(g.vertex_count());
    let _ = solver.search(&mut |colors| {
        buf.clear();
        buf.extend(colors.iter().map(|c| c + 1));
        visit(&buf)
    });
    Ok(())
}
