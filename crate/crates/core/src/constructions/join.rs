use serde::{Deserialize, Serialize};

use crate::connectivity::{components, is_separating_vertex_set};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph, Relabeled, VertexSet};

/// Where a vertex of a combined hypergraph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    /// Vertex of the first operand.
    Left(usize),
    /// Vertex of the second operand.
    Right(usize),
    /// The vertex `v*` formed by identifying `v1` and `v2`.
    Merged,
}

/// The parameters of a Hajós join apart from the two operands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinStep {
    pub v1: usize,
    pub e1: EdgeRef,
    pub v2: usize,
    pub e2: EdgeRef,
    /// Whether the new edge `e*` contains the merged vertex `v*`.
    pub include_vstar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HajosJoinSpec {
    pub g1: Hypergraph,
    pub g2: Hypergraph,
    #[serde(flatten)]
    pub step: JoinStep,
}

/// The result of a Hajós join. Vertices of `g1` keep their ids (with `v1`
/// becoming `v*`); the vertices of `g2` other than `v2` follow in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Joined {
    pub graph: Hypergraph,
    pub origin: Vec<Origin>,
    pub v_star: usize,
    pub e_star: EdgeRef,
}

fn check_anchor(g: &Hypergraph, v: usize, e: EdgeRef, side: &str) -> Result<()> {
    g.check_vertex(v)?;
    let edge = g.edge(e)?;
    if edge.binary_search(&v).is_err() {
        return Err(Error::InvalidArgument(format!("{side}: vertex {v} is not in edge {e}")));
    }
    Ok(())
}

/// Maps the ids of the second operand into the combined id space, given
/// that `removed` is replaced by `replacement`.
pub(crate) fn second_operand_map(n1: usize, n2: usize, removed: usize, replacement: usize) -> Vec<usize> {
    (0..n2)
        .map(|j| match j.cmp(&removed) {
            std::cmp::Ordering::Less => n1 + j,
            std::cmp::Ordering::Equal => replacement,
            std::cmp::Ordering::Greater => n1 + j - 1,
        })
        .collect()
}

/// `(G1, v1, e1) Δ (G2, v2, e2)`: deletes `e1` and `e2`, identifies `v1`
/// with `v2` into `v*` and adds `e* = (e1 ∪ e2) - {v1, v2}`, plus `v*` when
/// `include_vstar` is set.
pub fn hajos_join(spec: &HajosJoinSpec) -> Result<Joined> {
    let HajosJoinSpec { g1, g2, step } = spec;
    check_anchor(g1, step.v1, step.e1, "first operand")?;
    check_anchor(g2, step.v2, step.e2, "second operand")?;
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let map2 = second_operand_map(n1, n2, step.v2, step.v1);
    let v_star = step.v1;

    let mut e_star: Vec<usize> = g1
        .edge(step.e1)?
        .iter()
        .copied()
        .chain(g2.edge(step.e2)?.iter().map(|&v| map2[v]))
        .filter(|&v| v != v_star)
        .collect();
    if step.include_vstar {
        e_star.push(v_star);
    }
    e_star.sort_unstable();
    if e_star.len() < 2 {
        return Err(Error::InvalidEdge { edge: e_star, reason: "the new edge would have fewer than two vertices" });
    }

    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(g1.edge_count() + g2.edge_count() - 1);
    edges.extend(g1.edges().iter().enumerate().filter(|&(i, _)| i != step.e1.0).map(|(_, e)| e.clone()));
    edges.extend(
        g2.edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != step.e2.0)
            .map(|(_, e)| e.iter().map(|&v| map2[v]).collect()),
    );
    edges.push(e_star.clone());
    let graph = Hypergraph::new(n1 + n2 - 1, edges)?;
    let e_star = graph.find_edge(&e_star).expect("e* was just added");

    let mut origin: Vec<Origin> = (0..n1).map(Origin::Left).collect();
    origin[v_star] = Origin::Merged;
    origin.extend((0..n2).filter(|&j| j != step.v2).map(Origin::Right));
    Ok(Joined { graph, origin, v_star, e_star })
}

/// `G1 ⊠ G2`: the disjoint union plus every ordinary edge between the two
/// sides. The ids of `g2` are shifted by `|G1|`.
pub fn dirac_sum(g1: &Hypergraph, g2: &Hypergraph) -> Hypergraph {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut edges: Vec<Vec<usize>> = g1.disjoint_union(g2).edges().to_vec();
    for u in 0..n1 {
        for v in 0..n2 {
            edges.push(vec![u, n1 + v]);
        }
    }
    Hypergraph::new(n1 + n2, edges).expect("cross edges are new")
}

/// A hypergraph taken apart at a mixed separating set `{v*, e*}`: the two
/// sides with their added edges `e_i = (e* ∩ V(G_i)) ∪ {v*}`, and the join
/// step that puts them back together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedDecomposition {
    pub left: Relabeled,
    pub right: Relabeled,
    pub step: JoinStep,
}

impl MixedDecomposition {
    pub fn join_spec(&self) -> HajosJoinSpec {
        HajosJoinSpec { g1: self.left.graph.clone(), g2: self.right.graph.clone(), step: self.step.clone() }
    }

    /// For each vertex of the replayed join, its id in the decomposed
    /// hypergraph.
    pub fn replay_ids(&self, joined: &Joined) -> Vec<usize> {
        joined
            .origin
            .iter()
            .map(|o| match *o {
                Origin::Left(i) => self.left.original_ids[i],
                Origin::Right(j) => self.right.original_ids[j],
                Origin::Merged => self.left.original_ids[self.step.v1],
            })
            .collect()
    }

    /// Replays the join and relabels it onto the original ids.
    pub fn replay(&self) -> Result<Hypergraph> {
        let joined = hajos_join(&self.join_spec())?;
        let ids = self.replay_ids(&joined);
        joined.graph.relabel(&ids)
    }
}

/// Splits `g` at the mixed separating set `{v_star, e_star}` into the two
/// Hajós operands. The first side is the component of `(G - e*) ÷ v*` that
/// holds the smallest vertex of `e* - {v*}`; every other component goes to
/// the second side.
pub fn hajos_decompose_mixed(g: &Hypergraph, v_star: usize, e_star: EdgeRef) -> Result<MixedDecomposition> {
    g.check_vertex(v_star)?;
    let star: Vec<usize> = g.edge(e_star)?.to_vec();
    let without = g.delete_edge(e_star)?;
    let hub = VertexSet::from([v_star]);
    if !is_separating_vertex_set(&without, &hub)? {
        return Err(Error::InvalidArgument(format!("{{{v_star}, {e_star}}} is not a mixed separating set")));
    }
    let rest = without.div_vertices(&hub)?;
    let comps: Vec<Vec<usize>> =
        components(&rest.graph).into_iter().map(|c| c.iter().map(|i| rest.original_ids[i]).collect()).collect();
    let anchor = *star.iter().find(|&&v| v != v_star).expect("edges have two vertices");
    let first = comps.iter().position(|c| c.contains(&anchor)).expect("anchor lies in some component");
    let mut side1: Vec<usize> = comps[first].clone();
    let mut side2: Vec<usize> =
        comps.iter().enumerate().filter(|&(i, _)| i != first).flat_map(|(_, c)| c.clone()).collect();
    side1.push(v_star);
    side2.push(v_star);
    let side1 = VertexSet::from(side1);
    let side2 = VertexSet::from(side2);

    let part = |side: &VertexSet| -> Result<(Relabeled, usize, EdgeRef)> {
        let mut piece = without.induced(side)?;
        let local = |v: usize| piece.original_ids.binary_search(&v).expect("vertex lies on this side");
        let trace: Vec<usize> = star.iter().copied().filter(|&v| v != v_star && side.contains(v)).collect();
        if trace.is_empty() {
            return Err(Error::Precondition(format!("e* does not reach the side {:?}", side.as_slice())));
        }
        let mut e_i: Vec<usize> = trace.iter().map(|&v| local(v)).collect();
        let v_local = local(v_star);
        e_i.push(v_local);
        e_i.sort_unstable();
        if piece.graph.contains_edge(&e_i) {
            return Err(Error::Precondition(format!(
                "the edge {:?} is already present on one side",
                e_i.iter().map(|&i| piece.original_ids[i]).collect::<Vec<_>>()
            )));
        }
        piece.graph = piece.graph.add_edge(&e_i)?;
        let e_ref = piece.graph.find_edge(&e_i).expect("just added");
        Ok((piece, v_local, e_ref))
    };
    let (left, v1, e1) = part(&side1)?;
    let (right, v2, e2) = part(&side2)?;
    let include_vstar = star.binary_search(&v_star).is_ok();
    Ok(MixedDecomposition { left, right, step: JoinStep { v1, e1, v2, e2, include_vstar } })
}
