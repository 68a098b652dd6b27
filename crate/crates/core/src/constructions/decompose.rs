//! Taking critical hypergraphs apart at a separating pair of vertices or at
//! a separating edge set of size `k`.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::coloring::{for_each_coloring_up_to_permutation, is_critical};
use crate::connectivity::{components, enumerate_separating_sets, EdgeCut};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

fn require_critical(g: &Hypergraph, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Precondition("decompositions need k >= 2".into()));
    }
    if !is_critical(g, k + 1).is_critical {
        return Err(Error::NotCritical { expected: k + 1 });
    }
    Ok(())
}

/// Applies `check` to one representative of every class of `k`-colorings
/// of `g` and returns how many classes were seen, or `None` if `check`
/// failed on one of them.
fn all_colorings(g: &Hypergraph, k: usize, mut check: impl FnMut(&[usize]) -> bool) -> Result<Option<usize>> {
    let mut seen = 0;
    let mut ok = true;
    for_each_coloring_up_to_permutation(g, k, &[], |phi| {
        seen += 1;
        if check(phi) {
            ControlFlow::Continue(())
        } else {
            ok = false;
            ControlFlow::Break(())
        }
    })?;
    Ok(ok.then_some(seen))
}

/// A `(k+1)`-critical hypergraph split at a separating pair `{v, w}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexPairDecomposition {
    pub v: usize,
    pub w: usize,
    /// The component of `G ÷ {v, w}` whose side colors `v` and `w` alike.
    pub h1: VertexSet,
    pub h2: VertexSet,
    /// `G1' = G[V(H1) ∪ {v, w}] + vw`.
    pub g1_prime: Hypergraph,
    /// Original id of every vertex of `g1_prime`.
    pub g1_ids: Vec<usize>,
    /// `G[V(H2) ∪ {v, w}]` with `v` and `w` identified.
    pub g2_prime: Hypergraph,
    /// Original id of every vertex of `g2_prime`; the merged vertex is
    /// listed as `v`.
    pub g2_ids: Vec<usize>,
    /// Coloring classes of `G1` (all with `φ(v) = φ(w)`) and of `G2` (all
    /// with `φ(v) ≠ φ(w)`).
    pub g1_colorings: usize,
    pub g2_colorings: usize,
}

/// Decomposes at the first separating set of size at most 2, or returns
/// `None` when there is none.
pub fn decompose_vertex_pair(g: &Hypergraph, k: usize) -> Result<Option<VertexPairDecomposition>> {
    require_critical(g, k)?;
    match enumerate_separating_sets(g, 2)?.into_iter().next() {
        None => Ok(None),
        Some(s) => decompose_vertex_pair_at(g, k, &s).map(Some),
    }
}

/// Decomposes a `(k+1)`-critical `g` at the separating set `pair` and checks
/// every conclusion: `pair` is an independent pair, `G ÷ pair` has two
/// components, the coloring dichotomy holds for all `k`-colorings, and both
/// derived hypergraphs are `(k+1)`-critical.
pub fn decompose_vertex_pair_at(g: &Hypergraph, k: usize, pair: &VertexSet) -> Result<VertexPairDecomposition> {
    require_critical(g, k)?;
    g.check_set(pair)?;
    if pair.len() != 2 {
        return Err(Error::Consistency(format!("separating set {:?} should have two vertices", pair.as_slice())));
    }
    let (v, w) = (pair.as_slice()[0], pair.as_slice()[1]);
    if g.contains_edge(&[v, w]) {
        return Err(Error::Consistency(format!("separating pair {{{v}, {w}}} is not independent")));
    }
    let rest = g.div_vertices(pair)?;
    let comps: Vec<VertexSet> =
        components(&rest.graph).into_iter().map(|c| c.iter().map(|i| rest.original_ids[i]).collect()).collect();
    if comps.len() != 2 {
        return Err(Error::Consistency(format!("G ÷ {{{v}, {w}}} has {} components instead of 2", comps.len())));
    }
    let side = |c: &VertexSet| -> Result<(Hypergraph, Vec<usize>, usize, usize)> {
        let piece = g.induced(&c.iter().chain([v, w]).collect())?;
        let lv = piece.original_ids.binary_search(&v).expect("v is on every side");
        let lw = piece.original_ids.binary_search(&w).expect("w is on every side");
        Ok((piece.graph, piece.original_ids, lv, lw))
    };
    let same_color_side = |graph: &Hypergraph, lv: usize, lw: usize| -> Result<Option<usize>> {
        all_colorings(graph, k, |phi| phi[lv] == phi[lw])
    };
    let diff_color_side = |graph: &Hypergraph, lv: usize, lw: usize| -> Result<Option<usize>> {
        all_colorings(graph, k, |phi| phi[lv] != phi[lw])
    };

    let a = side(&comps[0])?;
    let b = side(&comps[1])?;
    let oriented = match (same_color_side(&a.0, a.2, a.3)?, diff_color_side(&b.0, b.2, b.3)?) {
        (Some(n1), Some(n2)) => Some((0, a, b, n1, n2)),
        _ => match (same_color_side(&b.0, b.2, b.3)?, diff_color_side(&a.0, a.2, a.3)?) {
            (Some(n1), Some(n2)) => Some((1, b, a, n1, n2)),
            _ => None,
        },
    };
    let Some((first, (g1, g1_ids, v1, w1), (g2, ids2, v2, w2), g1_colorings, g2_colorings)) = oriented else {
        return Err(Error::Consistency(format!("the coloring dichotomy fails at {{{v}, {w}}}")));
    };

    let g1_prime = g1.add_edge(&[v1, w1])?;
    // identify w with v in G2 and drop w
    let shift = |u: usize| if u > w2 { u - 1 } else { u };
    let merged = g2.edges().iter().map(|e| e.iter().map(|&u| shift(if u == w2 { v2 } else { u })).collect());
    let g2_prime = Hypergraph::from_edges_collapsing(g2.vertex_count() - 1, merged);
    let g2_ids: Vec<usize> = ids2.iter().enumerate().filter(|&(i, _)| i != w2).map(|(_, &o)| o).collect();

    for (name, h) in [("G1'", &g1_prime), ("G2'", &g2_prime)] {
        let report = is_critical(h, k + 1);
        if !report.is_critical {
            return Err(Error::Consistency(format!("{name} at {{{v}, {w}}} is not {}-critical: {report:?}", k + 1)));
        }
    }
    Ok(VertexPairDecomposition {
        v,
        w,
        h1: comps[first].clone(),
        h2: comps[1 - first].clone(),
        g1_prime,
        g1_ids,
        g2_prime,
        g2_ids,
        g1_colorings,
        g2_colorings,
    })
}

/// A `(k+1)`-critical hypergraph split along a separating edge set of size
/// `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCutDecomposition {
    /// Oriented so that every `k`-coloring of `G[X]` is constant on `X_F`.
    pub cut: EdgeCut,
    /// `G[X]` plus the hyperedge `X_F`, present when `|X_F| >= 2`.
    pub g1: Option<Hypergraph>,
    /// Original id of every vertex of `g1` (the vertices of `X`).
    pub g1_ids: Vec<usize>,
    /// `G[Y]` plus an apex `v` and the edges `(e - X) ∪ {v}` for `e ∈ F`.
    pub g2: Hypergraph,
    /// Original id of every vertex of `g2` except the apex (the vertices of
    /// `Y`).
    pub g2_ids: Vec<usize>,
    pub apex: usize,
    /// Coloring classes of `G[X]` and `G[Y]` examined for the coloring
    /// property.
    pub x_colorings: usize,
    pub y_colorings: usize,
}

/// Checks the coloring property of a candidate orientation: all
/// `k`-colorings of `G[X]` are constant on `X_F`, and all `k`-colorings of
/// `G[Y]` use `k` colors on `Y_F` with a monochromatic trace `e ∩ Y` of each
/// color. Returns the number of classes seen on each side.
fn coloring_property(g: &Hypergraph, k: usize, cut: &EdgeCut) -> Result<Option<(usize, usize)>> {
    let gx = g.induced(&cut.x)?;
    let gy = g.induced(&cut.y)?;
    let local = |ids: &[usize], v: usize| ids.binary_search(&v).expect("vertex on this side");
    let x_f: Vec<usize> = cut.x_f.iter().map(|v| local(&gx.original_ids, v)).collect();
    let y_f: Vec<usize> = cut.y_f.iter().map(|v| local(&gy.original_ids, v)).collect();
    let traces: Vec<Vec<usize>> = cut
        .f
        .iter()
        .map(|&e| g.edges()[e.0].iter().filter(|&&v| cut.y.contains(v)).map(|&v| local(&gy.original_ids, v)).collect())
        .collect();
    let Some(nx) = all_colorings(&gx.graph, k, |phi| x_f.iter().all(|&v| phi[v] == phi[x_f[0]]))? else {
        return Ok(None);
    };
    let ny = all_colorings(&gy.graph, k, |phi| {
        let mut used = vec![false; k + 1];
        for &v in &y_f {
            used[phi[v]] = true;
        }
        let mut mono = vec![false; k + 1];
        for t in &traces {
            if t.iter().all(|&v| phi[v] == phi[t[0]]) {
                mono[phi[t[0]]] = true;
            }
        }
        used[1..].iter().all(|&u| u) && mono[1..].iter().all(|&m| m)
    })?;
    Ok(ny.map(|ny| (nx, ny)))
}

/// Largest number of components of `G - F` whose bipartitions are searched.
const MAX_CUT_COMPONENTS: usize = 16;

/// Decomposes a `(k+1)`-critical `g` along the separating edge set `f`,
/// checking that `|F| = k`, that some edge cut `(X, Y, F)` has the coloring
/// property (by full enumeration), that every vertex of `Y_F` meets exactly
/// one edge of `F`, and that both parts are `(k+1)`-critical.
pub fn decompose_edge_cut(g: &Hypergraph, k: usize, f: &[EdgeRef]) -> Result<EdgeCutDecomposition> {
    require_critical(g, k)?;
    let mut f = f.to_vec();
    f.sort_unstable();
    f.dedup();
    if f.len() > k {
        return Err(Error::InvalidArgument(format!("|F| = {} exceeds k = {k}", f.len())));
    }
    let without = g.delete_edges(&f)?;
    let comps = components(&without);
    if comps.len() < 2 {
        return Err(Error::InvalidArgument("F is not a separating edge set".into()));
    }
    if f.len() != k {
        return Err(Error::Consistency(format!("a separating edge set of size {} < k = {k}", f.len())));
    }
    if comps.len() > MAX_CUT_COMPONENTS {
        return Err(Error::GuardExceeded(format!("G - F has {} components", comps.len())));
    }
    // bipartitions of the components with the first one always in X
    let mut chosen = None;
    'search: for mask in 0..(1u32 << (comps.len() - 1)) {
        let x: VertexSet = comps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i == 0 || mask >> (i - 1) & 1 == 1)
            .flat_map(|(_, c)| c.iter())
            .collect();
        if x.len() == g.vertex_count() {
            continue;
        }
        let cut = EdgeCut::from_side(g, x)?;
        if cut.f != f {
            continue;
        }
        for cut in [cut.clone(), cut.swapped()] {
            if let Some(counts) = coloring_property(g, k, &cut)? {
                chosen = Some((cut, counts));
                break 'search;
            }
        }
    }
    let Some((cut, (x_colorings, y_colorings))) = chosen else {
        return Err(Error::Consistency(format!("no edge cut along F = {f:?} has the coloring property")));
    };

    for y in cut.y_f.iter() {
        let hits = cut.f.iter().filter(|&&e| g.edges()[e.0].binary_search(&y).is_ok()).count();
        if hits != 1 {
            return Err(Error::Consistency(format!("vertex {y} of Y_F meets {hits} edges of F")));
        }
    }

    let gx = g.induced(&cut.x)?;
    let g1 = if cut.x_f.len() >= 2 {
        let x_f: Vec<usize> = cut.x_f.iter().map(|v| gx.original_ids.binary_search(&v).unwrap()).collect();
        Some(gx.graph.add_edge(&x_f)?)
    } else {
        None
    };
    let gy = g.induced(&cut.y)?;
    let apex = gy.graph.vertex_count();
    let mut edges: Vec<Vec<usize>> = gy.graph.edges().to_vec();
    for &e in &cut.f {
        let mut new: Vec<usize> = g.edges()[e.0]
            .iter()
            .filter(|&&v| cut.y.contains(v))
            .map(|&v| gy.original_ids.binary_search(&v).unwrap())
            .collect();
        new.push(apex);
        edges.push(new);
    }
    let g2 = Hypergraph::new(apex + 1, edges)?;

    for (name, h) in [("G1", g1.as_ref()), ("G2", Some(&g2))] {
        if let Some(h) = h {
            let report = is_critical(h, k + 1);
            if !report.is_critical {
                return Err(Error::Consistency(format!(
                    "{name} along F = {f:?} is not {}-critical: {report:?}",
                    k + 1
                )));
            }
        }
    }
    Ok(EdgeCutDecomposition {
        cut,
        g1,
        g1_ids: gx.original_ids,
        g2,
        g2_ids: gy.original_ids,
        apex,
        x_colorings,
        y_colorings,
    })
}
