//! Reproducible instances: seeded random hypergraphs, the named families,
//! random Hajós trees over base hypergraphs, and random splitting pairs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{chromatic_number, is_critical};
use crate::connectivity::max_local_edge_connectivity;
use crate::constructions::{
    c2_tree, complete_graph, cycle, dirac_sum, figure1, figure2_g1, figure2_g2, figure3, hajos_join, hyperwheel, kc,
    odd_wheel, single_edge, toft_graph, HajosJoinSpec, JoinStep, SplitAssignment, SplitSpec, TreeSpec,
};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, Hypergraph};

/// The generator behind every seeded routine in this module.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` distinct random edges on `n` vertices with sizes drawn from
/// `min_size..=max_size` (capped at `n`). Gives up on an edge after a few
/// collisions, so dense requests may return fewer edges.
pub fn random_hypergraph(rng: &mut impl Rng, n: usize, min_size: usize, max_size: usize, m: usize) -> Hypergraph {
    let max_size = max_size.min(n);
    if n < 2 || min_size > max_size {
        return Hypergraph::edgeless(n);
    }
    let vertices: Vec<usize> = (0..n).collect();
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        for _attempt in 0..8 {
            let size = rng.gen_range(min_size.max(2)..=max_size);
            let mut e: Vec<usize> = vertices.choose_multiple(rng, size).copied().collect();
            e.sort_unstable();
            if edges.insert(e) {
                break;
            }
        }
    }
    Hypergraph::new(n, edges).expect("edges are distinct and in range")
}

/// `n` uniform in `1..=n_max`, edge sizes 2 to 4, up to `2n` edges.
pub fn random_instance(rng: &mut impl Rng, n_max: usize) -> Hypergraph {
    let n = rng.gen_range(1..=n_max.max(1));
    let m = rng.gen_range(0..=2 * n);
    random_hypergraph(rng, n, 2, 4, m)
}

/// A hypergraph of a named family with its known chromatic number; all of
/// them except `c4` and `k4-pendant` are critical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedInstance {
    pub name: String,
    pub graph: Hypergraph,
    pub chi: usize,
    pub critical: bool,
}

fn named(name: &str, graph: Hypergraph, chi: usize, critical: bool) -> NamedInstance {
    NamedInstance { name: name.to_string(), graph, chi, critical }
}

/// Complete graphs, cycles, wheels, hyperwheels, `KC_{n,p}`, Toft's graph,
/// the worked examples and a few tree hypergraphs.
pub fn named_families() -> Vec<NamedInstance> {
    let ok = |r: Result<Hypergraph>| r.expect("valid family parameters");
    let mut out = vec![
        named("k1", complete_graph(1), 1, true),
        named("k2", complete_graph(2), 2, true),
        named("k3", complete_graph(3), 3, true),
        named("k4", complete_graph(4), 4, true),
        named("k5", complete_graph(5), 5, true),
        named("c4", ok(cycle(4)), 2, false),
        named("c5", ok(cycle(5)), 3, true),
        named("c7", ok(cycle(7)), 3, true),
        named("edge-4", ok(single_edge(4)), 2, true),
        named("wheel-5", ok(odd_wheel(5)), 4, true),
        named("wheel-7", ok(odd_wheel(7)), 4, true),
        named("hyperwheel-3", ok(hyperwheel(3)), 3, true),
        named("hyperwheel-4", ok(hyperwheel(4)), 3, true),
        named("kc-2-2", ok(kc(2, 2)), 5, true),
        named("toft-1", ok(toft_graph(1)), 4, true),
        named("fig1-left", figure1(false), 4, true),
        named("fig1-right", figure1(true), 4, true),
        named("fig2-g1", figure2_g1(), 4, true),
        named("fig2-g2", figure2_g2(), 4, true),
        named("fig3", figure3(), 3, true),
        named("c2-tree-path", ok(c2_tree(&TreeSpec { root: 0, parent: vec![0, 0, 0, 1, 2] })), 3, true),
        named("edge-3-sum-k2", dirac_sum(&ok(single_edge(3)), &complete_graph(2)), 4, true),
    ];
    let pendant = complete_graph(4).with_extra_vertices(1).add_edge(&[3, 4]).expect("new edge");
    out.push(named("k4-pendant", pendant, 4, false));
    out
}

/// The base hypergraphs of `H_k`: odd wheels with rims 3, 5 and 7 for
/// `k = 3`, otherwise `K_{k+1}`.
pub fn base_graphs(k: usize) -> Vec<Hypergraph> {
    if k == 3 {
        [3, 5, 7].iter().map(|&r| odd_wheel(r).expect("odd rim")).collect()
    } else {
        vec![complete_graph(k + 1)]
    }
}

/// A random Hajós join of `g1` and `g2`.
pub fn random_join(rng: &mut impl Rng, g1: &Hypergraph, g2: &Hypergraph) -> Result<Hypergraph> {
    let mut anchor = |g: &Hypergraph| -> Result<(usize, EdgeRef)> {
        let v = rng.gen_range(0..g.vertex_count());
        let at = &g.incidence()[v];
        let e = *at.choose(rng).ok_or_else(|| Error::InvalidArgument(format!("vertex {v} has no edge")))?;
        Ok((v, e))
    };
    let (v1, e1) = anchor(g1)?;
    let (v2, e2) = anchor(g2)?;
    let include_vstar = rng.gen_bool(0.5);
    let spec = HajosJoinSpec { g1: g1.clone(), g2: g2.clone(), step: JoinStep { v1, e1, v2, e2, include_vstar } };
    Ok(hajos_join(&spec)?.graph)
}

/// A random tree of Hajós joins over [`base_graphs`] with at least two
/// leaves and at most `max_n` vertices, or `None` if two bases do not fit.
pub fn random_hajos_tree(rng: &mut impl Rng, k: usize, max_n: usize) -> Option<Hypergraph> {
    let bases = base_graphs(k);
    let mut leaves: Vec<Hypergraph> = Vec::new();
    let mut total = 0;
    loop {
        let b = bases.choose(rng).expect("at least one base").clone();
        let next = if leaves.is_empty() { b.vertex_count() } else { total + b.vertex_count() - 1 };
        if next > max_n {
            break;
        }
        total = next;
        leaves.push(b);
        if leaves.len() >= 2 && rng.gen_bool(0.3) {
            break;
        }
    }
    if leaves.len() < 2 {
        return None;
    }
    Some(join_all(rng, leaves))
}

fn join_all(rng: &mut impl Rng, mut parts: Vec<Hypergraph>) -> Hypergraph {
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    let cut = rng.gen_range(1..parts.len());
    let right = parts.split_off(cut);
    let g1 = join_all(rng, parts);
    let g2 = join_all(rng, right);
    random_join(rng, &g1, &g2).expect("critical operands have edges at every vertex")
}

/// Small known `(k+1)`-critical hypergraphs for `k` in `2..=4`.
pub fn critical_family(k: usize) -> Vec<Hypergraph> {
    let ok = |r: Result<Hypergraph>| r.expect("valid family parameters");
    match k {
        2 => vec![
            complete_graph(3),
            ok(cycle(5)),
            ok(cycle(7)),
            ok(hyperwheel(3)),
            ok(hyperwheel(4)),
            figure3(),
            ok(c2_tree(&TreeSpec { root: 0, parent: vec![0, 0, 0, 1, 2] })),
            ok(c2_tree(&TreeSpec { root: 0, parent: vec![0, 0, 0, 0] })),
        ],
        3 => vec![
            complete_graph(4),
            ok(odd_wheel(5)),
            ok(odd_wheel(7)),
            figure1(false),
            figure1(true),
            figure2_g1(),
            figure2_g2(),
            ok(toft_graph(1)),
            dirac_sum(&ok(single_edge(3)), &complete_graph(2)),
            dirac_sum(&ok(single_edge(3)), &ok(single_edge(3))),
            dirac_sum(&complete_graph(1), &ok(hyperwheel(3))),
        ],
        4 => vec![
            complete_graph(5),
            ok(kc(2, 2)),
            dirac_sum(&ok(single_edge(3)), &complete_graph(3)),
            dirac_sum(&ok(single_edge(3)), &ok(cycle(5))),
        ],
        _ => vec![complete_graph(k + 1)],
    }
}

/// A random low-vertex splitting of `g2` at a vertex of degree `k` into an
/// edge of `g1`, or `None` when `g2` has no low vertex.
pub fn random_low_split(rng: &mut impl Rng, g1: &Hypergraph, g2: &Hypergraph, k: usize) -> Option<SplitSpec> {
    let low: Vec<usize> = g2.vertices().filter(|&v| g2.degree(v).ok() == Some(k)).collect();
    let v_tilde = *low.choose(rng)?;
    let e_tilde = EdgeRef(rng.gen_range(0..g1.edge_count()));
    let targets = g1.edge(e_tilde).ok()?.to_vec();
    let at = g2.incidence()[v_tilde].clone();
    let mut s: Vec<Vec<usize>> = vec![Vec::new(); at.len()];
    // cover every vertex of ẽ, then make sure no edge is left without a target
    for &t in &targets {
        s[rng.gen_range(0..at.len())].push(t);
    }
    for slot in s.iter_mut().filter(|slot| slot.is_empty()) {
        slot.push(*targets.choose(rng).expect("edges are non-empty"));
    }
    let s = at
        .into_iter()
        .zip(s)
        .map(|(edge, mut targets)| {
            targets.sort_unstable();
            targets.dedup();
            SplitAssignment { edge, targets }
        })
        .collect();
    Some(SplitSpec { g1: g1.clone(), e_tilde, g2: g2.clone(), v_tilde, s })
}

/// What the manifest records about one corpus file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub family: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub chi: usize,
    pub lambda: usize,
    pub critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub graph: Hypergraph,
    pub manifest: ManifestEntry,
}

/// The named families as corpus entries, with their known chromatic number
/// and criticality.
pub fn named_entries() -> Vec<CorpusEntry> {
    named_families()
        .into_iter()
        .map(|inst| CorpusEntry {
            manifest: ManifestEntry {
                file: format!("{}.hgr", inst.name),
                family: "named".into(),
                vertex_count: inst.graph.vertex_count(),
                edge_count: inst.graph.edge_count(),
                chi: inst.chi,
                lambda: max_local_edge_connectivity(&inst.graph),
                critical: inst.critical,
            },
            graph: inst.graph,
        })
        .collect()
}

/// `count` random instances with at most `n_max` vertices drawn from `seed`.
pub fn random_instances(seed: u64, count: usize, n_max: usize) -> Vec<Hypergraph> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_instance(&mut rng, n_max)).collect()
}

/// The `index`-th random instance with `χ`, `λ` and criticality measured.
pub fn measured_random_entry(index: usize, graph: Hypergraph) -> CorpusEntry {
    let chi = chromatic_number(&graph);
    CorpusEntry {
        manifest: ManifestEntry {
            file: format!("random-{index:04}.hgr"),
            family: "random".into(),
            vertex_count: graph.vertex_count(),
            edge_count: graph.edge_count(),
            chi,
            lambda: max_local_edge_connectivity(&graph),
            critical: is_critical(&graph, chi).is_critical,
        },
        graph,
    }
}

/// [`named_entries`] followed by the measured [`random_instances`].
pub fn generate(seed: u64, count: usize, n_max: usize) -> Vec<CorpusEntry> {
    let mut out = named_entries();
    out.extend(random_instances(seed, count, n_max).into_iter().enumerate().map(|(i, g)| measured_random_entry(i, g)));
    out
}
