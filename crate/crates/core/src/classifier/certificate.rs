use serde::{Deserialize, Serialize};

use crate::connectivity::{enumerate_separating_sets, mixed_separating_sets};
use crate::constructions::{complete_graph, hajos_decompose_mixed, hajos_join, odd_wheel, HajosJoinSpec, JoinStep};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::shapes;

/// Largest base hypergraph a certificate may ask for.
pub const MAX_LEAF_ORDER: usize = 256;
/// Largest hypergraph a certificate may replay to.
pub const MAX_REPLAY_VERTICES: usize = 4096;

/// A base hypergraph of `H_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum BaseKind {
    /// Rim `0..rim_len` in cycle order, hub `rim_len`.
    OddWheel { rim_len: usize },
    /// `K_order` on `0..order`.
    Complete { order: usize },
}

impl BaseKind {
    pub fn order(self) -> usize {
        match self {
            Self::OddWheel { rim_len } => rim_len + 1,
            Self::Complete { order } => order,
        }
    }

    pub fn build(self) -> Result<Hypergraph> {
        if self.order() > MAX_LEAF_ORDER {
            return Err(Error::GuardExceeded(format!(
                "base hypergraph of order {} exceeds {MAX_LEAF_ORDER}",
                self.order()
            )));
        }
        match self {
            Self::OddWheel { rim_len } => odd_wheel(rim_len),
            Self::Complete { order } => Ok(complete_graph(order)),
        }
    }
}

/// A tree of Hajós joins over base hypergraphs. Every node replays to a
/// concrete hypergraph: a leaf builds its base and renames vertex `i` to
/// `vertex_labeling[i]`; a join replays both children, joins them with
/// `step`, and renames the joined hypergraph the same way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "kebab-case")]
pub enum HkCertificate {
    Leaf { kind: BaseKind, vertex_labeling: Vec<usize> },
    Join { left: Box<HkCertificate>, right: Box<HkCertificate>, step: JoinStep, vertex_labeling: Vec<usize> },
}

impl HkCertificate {
    /// Rebuilds the certified hypergraph.
    pub fn replay(&self) -> Result<Hypergraph> {
        match self {
            Self::Leaf { kind, vertex_labeling } => kind.build()?.relabel(vertex_labeling),
            Self::Join { left, right, step, vertex_labeling } => {
                let g1 = left.replay()?;
                let g2 = right.replay()?;
                if g1.vertex_count() + g2.vertex_count() > MAX_REPLAY_VERTICES {
                    return Err(Error::GuardExceeded(format!("replay exceeds {MAX_REPLAY_VERTICES} vertices")));
                }
                hajos_join(&HajosJoinSpec { g1, g2, step: step.clone() })?.graph.relabel(vertex_labeling)
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf { .. } => 1,
            Self::Join { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Self::Leaf { .. } => 0,
            Self::Join { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Replays and compares with `g` vertex for vertex and edge for edge.
    pub fn verify(&self, g: &Hypergraph) -> Result<bool> {
        Ok(self.replay()? == *g)
    }
}

/// Builds a certificate for a member of `C_k` (`k >= 3`) without rechecking
/// membership. Parts without a separating set of size at most 2 must be odd
/// wheels (`k = 3`) or `K_{k+1}` (`k >= 4`); any other part is reported as
/// an inconsistency.
pub(crate) fn build_certificate(g: &Hypergraph, k: usize) -> Result<HkCertificate> {
    if enumerate_separating_sets(g, 2)?.is_empty() {
        return leaf(g, k);
    }
    let mut mixed = mixed_separating_sets(g)?;
    mixed.sort_by_key(|m| (m.edge, m.vertex));
    let Some(first) = mixed.first() else {
        return Err(Error::Consistency(format!(
            "a member of C_{k} with a separating set of size 2 has no mixed separating set: {g:?}"
        )));
    };
    let d = hajos_decompose_mixed(g, first.vertex, first.edge)?;
    let left = build_certificate(&d.left.graph, k)?;
    let right = build_certificate(&d.right.graph, k)?;
    let joined = hajos_join(&d.join_spec())?;
    let vertex_labeling = d.replay_ids(&joined);
    Ok(HkCertificate::Join { left: Box::new(left), right: Box::new(right), step: d.step, vertex_labeling })
}

fn leaf(g: &Hypergraph, k: usize) -> Result<HkCertificate> {
    if k == 3 {
        if let Some(w) = shapes::odd_wheel(g) {
            let mut vertex_labeling = w.rim.clone();
            vertex_labeling.push(w.hub);
            return Ok(HkCertificate::Leaf { kind: BaseKind::OddWheel { rim_len: w.rim.len() }, vertex_labeling });
        }
    } else if g.vertex_count() == k + 1 && shapes::is_complete_graph(g) {
        return Ok(HkCertificate::Leaf {
            kind: BaseKind::Complete { order: k + 1 },
            vertex_labeling: (0..=k).collect(),
        });
    }
    Err(Error::Consistency(format!("a member of C_{k} without small separators is not a base hypergraph: {g:?}")))
}
