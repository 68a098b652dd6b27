//! Membership in `C_k`, certificates for `H_k`, extraction of critical
//! subhypergraphs, and the classification of `χ` against `λ + 1` and
//! `Δ + 1`.

mod certificate;

use serde::{Serialize, Serializer};

pub use certificate::{BaseKind, HkCertificate, MAX_LEAF_ORDER, MAX_REPLAY_VERTICES};

use crate::coloring::{chromatic_number, find_k_coloring, is_critical, is_k_colorable, Coloring};
use crate::connectivity::{blocks, components, is_connected, max_local_edge_connectivity};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, Relabeled, VertexSet};
use crate::shapes::{is_complete_graph, is_odd_cycle};

/// `g` is `(k+1)`-critical with `λ(g) <= k`. Only defined for `k >= 3`.
pub fn is_in_ck(g: &Hypergraph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("membership in C_k is decided for k >= 3 only, got k = {k}")));
    }
    Ok(max_local_edge_connectivity(g) <= k && is_critical(g, k + 1).is_critical)
}

/// A certificate that `g` lies in `H_k`, or `None` when `g` is not in `C_k`.
/// The certificate replays to `g` exactly; a mismatch is an error.
pub fn hk_certificate(g: &Hypergraph, k: usize) -> Result<Option<HkCertificate>> {
    if !is_in_ck(g, k)? {
        return Ok(None);
    }
    let cert = certificate::build_certificate(g, k)?;
    if cert.replay()? != *g {
        return Err(Error::Consistency(format!("certificate does not replay to {g:?}")));
    }
    Ok(Some(cert))
}

/// A `target`-critical subhypergraph of `g`, where `χ(g) = target`.
///
/// The search starts from the first component with `χ = target`. Its edges
/// are deleted in one pass in index order whenever `χ` stays at `target`,
/// vertices left without edges are dropped, and the first remaining
/// component with `χ = target` is returned. For `target = 1` this is the
/// lowest vertex as `K1`.
pub fn extract_critical(g: &Hypergraph, target: usize) -> Result<Relabeled> {
    let chi = chromatic_number(g);
    if chi != target {
        return Err(Error::Precondition(format!("χ = {chi}, not {target}")));
    }
    match target {
        0 => return Ok(Relabeled { graph: Hypergraph::empty(), original_ids: Vec::new() }),
        1 => return Ok(Relabeled { graph: Hypergraph::edgeless(1), original_ids: vec![0] }),
        _ => {}
    }
    let start = first_component_with_chi(g, target)?;
    let mut cur = start.graph;
    let mut i = 0;
    while i < cur.edge_count() {
        let h = cur.delete_edge(EdgeRef(i))?;
        if is_k_colorable(&h, target - 1)? {
            i += 1;
        } else {
            cur = h;
        }
    }
    let covered: VertexSet = cur.edges().iter().flatten().copied().collect();
    let trimmed = cur.induced(&covered)?;
    let piece = first_component_with_chi(&trimmed.graph, target)?;
    let original_ids = piece.original_ids.iter().map(|&i| start.original_ids[trimmed.original_ids[i]]).collect();
    let out = Relabeled { graph: piece.graph, original_ids };
    let report = is_critical(&out.graph, target);
    if !report.is_critical {
        return Err(Error::Consistency(format!("extracted subhypergraph is not critical: {report:?}")));
    }
    Ok(out)
}

fn first_component_with_chi(g: &Hypergraph, target: usize) -> Result<Relabeled> {
    for comp in components(g) {
        let piece = g.induced(&comp)?;
        if chromatic_number(&piece.graph) == target {
            return Ok(piece);
        }
    }
    Err(Error::Consistency(format!("no component has χ = {target}")))
}

fn colors_only<S: Serializer>(c: &Coloring, s: S) -> std::result::Result<S::Ok, S::Error> {
    c.colors.serialize(s)
}

/// How `χ(g)` compares with `λ(g) + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// `λ >= 3` and a `λ`-coloring exists.
    Colorable {
        #[serde(serialize_with = "colors_only")]
        coloring: Coloring,
    },
    /// `λ >= 3` and `χ = λ + 1`: the block `G[block]` lies in `H_λ`, and
    /// the certificate replays to it with vertex `i` standing for the
    /// `i`-th vertex of `block`.
    Tight { block: VertexSet, certificate: HkCertificate },
    /// `λ <= 2`, decided by exact `χ`. For `λ <= 1`, `characterization`
    /// says whether some block is `K1` (`λ = 0`) or a single edge (`λ = 1`);
    /// it is absent for `λ = 2`.
    SmallLambda { chi: usize, tight: bool, characterization: Option<bool> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyOutcome {
    pub lambda: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Decides whether `χ(g) = λ(g) + 1`, with a coloring or a certified block
/// as evidence.
pub fn classify(g: &Hypergraph) -> Result<ClassifyOutcome> {
    let lambda = max_local_edge_connectivity(g);
    let verdict = if lambda >= 3 {
        match find_k_coloring(g, lambda)? {
            Some(coloring) => Verdict::Colorable { coloring },
            None => tight_block(g, lambda)?,
        }
    } else {
        small_lambda(g, lambda)
    };
    if let Verdict::SmallLambda { tight, characterization: Some(c), .. } = verdict {
        if tight != c {
            return Err(Error::Consistency(format!("λ = {lambda}: χ = λ + 1 is {tight} but the block test says {c}")));
        }
    }
    Ok(ClassifyOutcome { lambda, verdict })
}

fn tight_block(g: &Hypergraph, lambda: usize) -> Result<Verdict> {
    let h = extract_critical(g, lambda + 1)?;
    let block = VertexSet::from(h.original_ids.clone());
    let is_block = blocks(g).iter().any(|b| b.vertices == block) && g.induced(&block)?.graph == h.graph;
    if !is_block {
        return Err(Error::Consistency(format!("critical subhypergraph on {:?} is not a block", block.as_slice())));
    }
    let certificate = hk_certificate(&h.graph, lambda)?
        .ok_or_else(|| Error::Consistency(format!("block {:?} is not in C_{lambda}", block.as_slice())))?;
    Ok(Verdict::Tight { block, certificate })
}

fn small_lambda(g: &Hypergraph, lambda: usize) -> Verdict {
    let chi = chromatic_number(g);
    let characterization = match lambda {
        0 => Some(blocks(g).iter().any(|b| b.vertices.len() == 1)),
        1 => Some(blocks(g).iter().any(|b| b.edges.len() == 1)),
        _ => None,
    };
    Verdict::SmallLambda { chi, tight: chi == lambda + 1, characterization }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JonesShape {
    CompleteGraph,
    OddCycle,
    SingleEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JonesVerdict {
    pub chi: usize,
    pub max_degree: usize,
    /// `χ = Δ + 1`.
    pub equality: bool,
    pub shape: Option<JonesShape>,
}

/// For connected `g`: `χ = Δ + 1` exactly when `g` is a complete graph, an
/// odd cycle or a single edge. Reports the shape and fails if the two sides
/// disagree.
pub fn jones_classify(g: &Hypergraph) -> Result<JonesVerdict> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let chi = chromatic_number(g);
    let max_degree = g.max_degree();
    let shape = if is_complete_graph(g) {
        Some(JonesShape::CompleteGraph)
    } else if is_odd_cycle(g) {
        Some(JonesShape::OddCycle)
    } else if g.edge_count() == 1 {
        Some(JonesShape::SingleEdge)
    } else {
        None
    };
    let equality = chi == max_degree + 1;
    if equality != shape.is_some() {
        return Err(Error::Consistency(format!("χ = {chi}, Δ = {max_degree}, shape {shape:?} for {g:?}")));
    }
    Ok(JonesVerdict { chi, max_degree, equality, shape })
}
