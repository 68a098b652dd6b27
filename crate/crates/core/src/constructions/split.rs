use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::join::{second_operand_map, Origin};
use crate::coloring::{chromatic_number, find_k_coloring_extending, is_critical, is_k_colorable};
use crate::connectivity::{components, is_separating_vertex_set};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, VertexSet};

/// Where one edge at the split vertex goes: `(edge - {ṽ}) ∪ targets`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitAssignment {
    /// An edge of `g2` containing `v_tilde`.
    pub edge: EdgeRef,
    /// A non-empty subset of `e_tilde`, in the ids of `g1`.
    pub targets: Vec<usize>,
}

/// `S(G1, ẽ, G2, ṽ, s)`: the vertex `ṽ` of `G2` is replaced by the edge `ẽ`
/// of `G1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub g1: Hypergraph,
    pub e_tilde: EdgeRef,
    pub g2: Hypergraph,
    pub v_tilde: usize,
    pub s: Vec<SplitAssignment>,
}

impl SplitSpec {
    /// Every edge at `ṽ` goes to exactly one vertex of `ẽ`.
    pub fn is_simple(&self) -> bool {
        self.s.iter().all(|a| a.targets.len() == 1)
    }
}

/// The split hypergraph. Vertices of `g1` keep their ids; the vertices of
/// `g2` other than `ṽ` follow in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub graph: Hypergraph,
    pub origin: Vec<Origin>,
}

impl Split {
    /// The ids of the vertices that came from `g1`.
    pub fn first_side(&self) -> VertexSet {
        self.origin.iter().enumerate().filter(|(_, o)| matches!(o, Origin::Left(_))).map(|(i, _)| i).collect()
    }
}

fn validate_assignment(spec: &SplitSpec) -> Result<Vec<usize>> {
    let e_tilde = spec.g1.edge(spec.e_tilde)?.to_vec();
    spec.g2.check_vertex(spec.v_tilde)?;
    let mut at_v: Vec<EdgeRef> = spec.g2.incidence()[spec.v_tilde].clone();
    at_v.sort_unstable();
    let mut given: Vec<EdgeRef> = spec.s.iter().map(|a| a.edge).collect();
    given.sort_unstable();
    if given != at_v {
        return Err(Error::InvalidArgument(format!(
            "the split map must cover exactly the edges at vertex {}",
            spec.v_tilde
        )));
    }
    let mut covered = Vec::new();
    for a in &spec.s {
        let mut t = a.targets.clone();
        t.sort_unstable();
        t.dedup();
        if t.is_empty() || t.len() != a.targets.len() {
            return Err(Error::InvalidArgument(format!("targets of {} must be non-empty and distinct", a.edge)));
        }
        if let Some(v) = t.iter().find(|v| e_tilde.binary_search(v).is_err()) {
            return Err(Error::InvalidArgument(format!("target {v} is not in the split edge")));
        }
        covered.extend(t);
    }
    covered.sort_unstable();
    covered.dedup();
    if covered != e_tilde {
        return Err(Error::InvalidArgument("the targets do not cover the split edge".into()));
    }
    Ok(e_tilde)
}

/// Builds `S(G1, ẽ, G2, ṽ, s)`. Colliding edges are rejected.
pub fn split(spec: &SplitSpec) -> Result<Split> {
    validate_assignment(spec)?;
    let n1 = spec.g1.vertex_count();
    let n2 = spec.g2.vertex_count();
    let map2 = second_operand_map(n1, n2, spec.v_tilde, usize::MAX);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    edges.extend(spec.g1.edges().iter().enumerate().filter(|&(i, _)| i != spec.e_tilde.0).map(|(_, e)| e.clone()));
    edges.extend(
        spec.g2
            .edges()
            .iter()
            .filter(|e| e.binary_search(&spec.v_tilde).is_err())
            .map(|e| e.iter().map(|&v| map2[v]).collect()),
    );
    for a in &spec.s {
        let edge = spec.g2.edge(a.edge)?;
        edges.push(
            edge.iter().filter(|&&v| v != spec.v_tilde).map(|&v| map2[v]).chain(a.targets.iter().copied()).collect(),
        );
    }
    let graph = Hypergraph::new(n1 + n2 - 1, edges)?;
    let mut origin: Vec<Origin> = (0..n1).map(Origin::Left).collect();
    origin.extend((0..n2).filter(|&j| j != spec.v_tilde).map(Origin::Right));
    Ok(Split { graph, origin })
}

/// Splits vertex `v` of `g` into an independent set `X = {0, ..., size-1}`.
/// `s` gives, for each edge at `v`, its targets in `X`. The new vertices come
/// first, followed by the vertices of `g` other than `v`.
pub fn split_vertex_into_set(g: &Hypergraph, v: usize, size: usize, s: Vec<SplitAssignment>) -> Result<Split> {
    if size < 2 {
        return Err(Error::InvalidArgument("a vertex is split into at least two vertices".into()));
    }
    let g1 = Hypergraph::new(size, [(0..size).collect::<Vec<_>>()])?;
    split(&SplitSpec { g1, e_tilde: EdgeRef(0), g2: g.clone(), v_tilde: v, s })
}

/// The common `k` of two `(k+1)`-critical operands.
fn common_k(spec: &SplitSpec) -> Result<usize> {
    let chi = chromatic_number(&spec.g1);
    if chi < 2 {
        return Err(Error::Precondition("the first operand has no edge".into()));
    }
    for (name, g) in [("first", &spec.g1), ("second", &spec.g2)] {
        if !is_critical(g, chi).is_critical {
            return Err(Error::Precondition(format!("the {name} operand is not {chi}-critical")));
        }
    }
    Ok(chi - 1)
}

/// Checks that `F = ∂(V(G1))` is a separating edge set of size `k`.
fn check_cut(result: &Split, k: usize) -> Result<()> {
    let side = result.first_side();
    let f = result.graph.boundary(&side)?;
    let without = result.graph.delete_edges(&f)?;
    if f.len() != k || components(&without).len() < 2 {
        return Err(Error::Consistency(format!(
            "∂(V(G1)) has {} edges and should be a separating set of size {k}",
            f.len()
        )));
    }
    Ok(())
}

/// Splits a low vertex of a `(k+1)`-critical `G2` into an edge of a
/// `(k+1)`-critical `G1`, then confirms the result is `(k+1)`-critical and
/// that `∂(V(G1))` separates it with exactly `k` edges.
pub fn validate_split_low(spec: &SplitSpec) -> Result<Split> {
    let k = common_k(spec)?;
    if spec.g2.degree(spec.v_tilde)? != k {
        return Err(Error::Precondition(format!("vertex {} is not a low vertex of the second operand", spec.v_tilde)));
    }
    let result = split(spec)?;
    let report = is_critical(&result.graph, k + 1);
    if !report.is_critical {
        return Err(Error::Consistency(format!("the split is not {}-critical: {report:?}", k + 1)));
    }
    check_cut(&result, k)?;
    Ok(result)
}

/// The outcome of splitting into an ordinary edge `ẽ = xy`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinarySplitReport {
    pub result: Split,
    /// `χ(G2') <= k` for `G2' = G[(V(G2) - ṽ) ∪ ẽ]`.
    pub precondition_holds: bool,
    pub result_critical: bool,
    /// `ẽ` is a separating vertex set of the result.
    pub e_tilde_separates: bool,
}

/// Splits into an ordinary edge. When `χ(G2') <= k` the result must be
/// `(k+1)`-critical with `ẽ` a separating pair, and a violation is an error.
/// Otherwise the findings are only reported.
pub fn validate_split_ordinary(spec: &SplitSpec) -> Result<OrdinarySplitReport> {
    if spec.g1.edge(spec.e_tilde)?.len() != 2 {
        return Err(Error::Precondition("the split edge is not ordinary".into()));
    }
    let k = common_k(spec)?;
    let result = split(spec)?;
    let e_tilde: VertexSet = spec.g1.edge(spec.e_tilde)?.iter().copied().collect();
    let g2_prime_side: VertexSet = e_tilde.iter().chain(spec.g1.vertex_count()..result.graph.vertex_count()).collect();
    let g2_prime = result.graph.induced(&g2_prime_side)?.graph;
    let precondition_holds = is_k_colorable(&g2_prime, k)?;
    let result_critical = is_critical(&result.graph, k + 1).is_critical;
    let e_tilde_separates = is_separating_vertex_set(&result.graph, &e_tilde)?;
    if precondition_holds && !(result_critical && e_tilde_separates) {
        return Err(Error::Consistency(format!(
            "ordinary split with χ(G2') <= {k}: critical = {result_critical}, ẽ separating = {e_tilde_separates}"
        )));
    }
    Ok(OrdinarySplitReport { result, precondition_holds, result_critical, e_tilde_separates })
}

/// Largest number of colorings of `ẽ` tried by the general precondition.
pub const SPLIT_PRECONDITION_GUARD: f64 = 1e6;

/// Restricted growth strings of length `len` over `k` colors (one per class
/// of colorings modulo palette permutations), 1-based.
fn for_each_pattern(len: usize, k: usize, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) {
    fn go(
        buf: &mut Vec<usize>,
        len: usize,
        k: usize,
        max: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if buf.len() == len {
            return visit(buf);
        }
        for c in 1..=(max + 1).min(k) {
            buf.push(c);
            let flow = go(buf, len, k, max.max(c), visit);
            buf.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    let _ = go(&mut Vec::with_capacity(len), len, k, 0, &mut visit);
}

/// The general splitting condition: every `k`-coloring of `G[ẽ]` using at
/// least two colors extends to `G2' = G[(V(G2) - ṽ) ∪ ẽ]`. When it holds the
/// split is `(k+1)`-critical.
pub fn check_general_split_precondition(spec: &SplitSpec) -> Result<bool> {
    let k = common_k(spec)?;
    let result = split(spec)?;
    let e_tilde: Vec<usize> = spec.g1.edge(spec.e_tilde)?.to_vec();
    if (e_tilde.len() as f64) * (k as f64).log10() > SPLIT_PRECONDITION_GUARD.log10() {
        return Err(Error::GuardExceeded(format!("{k}^{} colorings of the split edge", e_tilde.len())));
    }
    let side: VertexSet = e_tilde.iter().copied().chain(spec.g1.vertex_count()..result.graph.vertex_count()).collect();
    let g2_prime = result.graph.induced(&side)?.graph;
    // the ids of ẽ are the smallest, so ẽ occupies the first positions of G2'
    let on_e = result.graph.induced(&e_tilde.iter().copied().collect())?.graph;
    let mut holds = true;
    let mut failure = None;
    for_each_pattern(e_tilde.len(), k, |pattern| {
        if pattern.iter().all(|&c| c == pattern[0]) {
            return ControlFlow::Continue(());
        }
        let phi = crate::coloring::Coloring { colors: pattern.to_vec(), palette_size: k };
        if !phi.is_valid_for(&on_e) {
            return ControlFlow::Continue(());
        }
        let fixed: Vec<(usize, usize)> = pattern.iter().enumerate().map(|(i, &c)| (i, c)).collect();
        match find_k_coloring_extending(&g2_prime, k, &fixed) {
            Ok(Some(_)) => ControlFlow::Continue(()),
            Ok(None) => {
                holds = false;
                ControlFlow::Break(())
            }
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(holds),
    }
}

/// Largest number of (split map, coloring) pairs examined by
/// [`is_universal_vertex_bounded`].
pub const UNIVERSAL_GUARD: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum UniversalVerdict {
    /// No counterexample among the splittings tried.
    TrueUpToBound { max_set_size: usize, splittings: u64 },
    /// Splitting `v` into `set_size` vertices via `s` leaves the coloring
    /// `coloring` of the new vertices without an extension.
    Counterexample { set_size: usize, s: Vec<SplitAssignment>, coloring: Vec<usize> },
}

/// Searches splittings of `v` into independent sets of size `2..=max_set_size`
/// for a coloring of the new set (with at least two colors) that does not
/// extend to a `k`-coloring of the split hypergraph.
pub fn is_universal_vertex_bounded(
    g: &Hypergraph,
    v: usize,
    k: usize,
    max_set_size: usize,
) -> Result<UniversalVerdict> {
    g.check_vertex(v)?;
    if k < 2 {
        return Err(Error::Precondition("universal vertices are defined for k >= 2".into()));
    }
    if !is_critical(g, k + 1).is_critical {
        return Err(Error::NotCritical { expected: k + 1 });
    }
    let at_v: Vec<EdgeRef> = g.incidence()[v].clone();
    let d = at_v.len() as u32;
    let mut budget: u64 = 0;
    for size in 2..=max_set_size {
        let options = (1u64 << size) - 1;
        let maps = options.checked_pow(d).unwrap_or(u64::MAX);
        budget = budget.saturating_add(maps.saturating_mul(size as u64));
        if budget > UNIVERSAL_GUARD {
            return Err(Error::GuardExceeded(format!("{maps} split maps for a set of size {size}")));
        }
    }
    let mut splittings = 0u64;
    for size in 2..=max_set_size {
        let options = (1usize << size) - 1;
        let full = options;
        let mut choice = vec![0usize; at_v.len()];
        loop {
            // choice[i] + 1 is the target mask of edge i
            let union = choice.iter().fold(0, |acc, &c| acc | (c + 1));
            if union == full {
                let s: Vec<SplitAssignment> = at_v
                    .iter()
                    .zip(&choice)
                    .map(|(&edge, &c)| SplitAssignment {
                        edge,
                        targets: (0..size).filter(|&b| (c + 1) >> b & 1 == 1).collect(),
                    })
                    .collect();
                if let Ok(result) = split_vertex_into_set(g, v, size, s.clone()) {
                    splittings += 1;
                    let mut counterexample = None;
                    let mut failure = None;
                    for_each_pattern(size, k, |pattern| {
                        if pattern.iter().all(|&c| c == pattern[0]) {
                            return ControlFlow::Continue(());
                        }
                        let fixed: Vec<(usize, usize)> = pattern.iter().enumerate().map(|(i, &c)| (i, c)).collect();
                        match find_k_coloring_extending(&result.graph, k, &fixed) {
                            Ok(Some(_)) => ControlFlow::Continue(()),
                            Ok(None) => {
                                counterexample = Some(pattern.to_vec());
                                ControlFlow::Break(())
                            }
                            Err(e) => {
                                failure = Some(e);
                                ControlFlow::Break(())
                            }
                        }
                    });
                    if let Some(e) = failure {
                        return Err(e);
                    }
                    if let Some(coloring) = counterexample {
                        return Ok(UniversalVerdict::Counterexample { set_size: size, s, coloring });
                    }
                }
            }
            // next map in mixed radix
            let mut i = 0;
            while i < choice.len() && choice[i] + 1 == options {
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
            choice[i] += 1;
        }
    }
    Ok(UniversalVerdict::TrueUpToBound { max_set_size, splittings })
}
