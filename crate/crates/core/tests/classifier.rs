use hyperchrome::classifier::{
    classify, extract_critical, hk_certificate, is_in_ck, jones_classify, BaseKind, HkCertificate, JonesShape, Verdict,
};
use hyperchrome::coloring::{chromatic_number, is_critical};
use hyperchrome::connectivity::{blocks, max_local_edge_connectivity};
use hyperchrome::constructions::{
    complete_graph, cycle, figure1, figure2_g1, hajos_join, hyperwheel, kc, odd_wheel, single_edge, toft_graph,
    HajosJoinSpec, JoinStep,
};
use hyperchrome::corpus::{critical_family, random_hajos_tree, rng};
use hyperchrome::{EdgeRef, Hypergraph, VertexSet};

fn join_at_first_edge(g1: &Hypergraph, g2: &Hypergraph) -> Hypergraph {
    let v1 = g1.edges()[0][0];
    let v2 = g2.edges()[0][0];
    let step = JoinStep { v1, e1: EdgeRef(0), v2, e2: EdgeRef(0), include_vstar: false };
    hajos_join(&HajosJoinSpec { g1: g1.clone(), g2: g2.clone(), step }).unwrap().graph
}

#[test]
fn wheel_with_a_pendant_tree_is_tight() {
    let w5 = odd_wheel(5).unwrap();
    let g = w5.with_extra_vertices(3).add_edge(&[0, 6]).unwrap().add_edge(&[6, 7, 8]).unwrap();
    let out = classify(&g).unwrap();
    assert_eq!(out.lambda, 3);
    let Verdict::Tight { block, certificate } = out.verdict else {
        panic!("expected a tight verdict, got {:?}", out.verdict);
    };
    assert_eq!(block, VertexSet::range(6));
    assert!(certificate.verify(&w5).unwrap());
    assert!(matches!(certificate, HkCertificate::Leaf { kind: BaseKind::OddWheel { rim_len: 5 }, .. }));
}

#[test]
fn colorable_and_small_connectivity_verdicts() {
    let out = classify(&toft_graph(1).unwrap()).unwrap();
    assert_eq!(out.lambda, 4);
    assert!(matches!(out.verdict, Verdict::Colorable { .. }));

    let out = classify(&cycle(5).unwrap()).unwrap();
    assert_eq!(out.lambda, 2);
    assert_eq!(out.verdict, Verdict::SmallLambda { chi: 3, tight: true, characterization: None });

    let out = classify(&single_edge(4).unwrap()).unwrap();
    assert_eq!(out.verdict, Verdict::SmallLambda { chi: 2, tight: true, characterization: Some(true) });

    let out = classify(&Hypergraph::edgeless(3)).unwrap();
    assert_eq!(out.verdict, Verdict::SmallLambda { chi: 1, tight: true, characterization: Some(true) });
}

#[test]
fn certificates_for_joins() {
    let k5 = complete_graph(5);
    let g = join_at_first_edge(&k5, &k5);
    let cert = hk_certificate(&g, 4).unwrap().unwrap();
    assert_eq!((cert.leaf_count(), cert.depth()), (2, 1));
    let HkCertificate::Join { left, right, .. } = &cert else { panic!("expected a join") };
    assert!(matches!(**left, HkCertificate::Leaf { kind: BaseKind::Complete { order: 5 }, .. }));
    assert!(matches!(**right, HkCertificate::Leaf { kind: BaseKind::Complete { order: 5 }, .. }));

    let w5 = odd_wheel(5).unwrap();
    let g = join_at_first_edge(&join_at_first_edge(&w5, &w5), &w5);
    let cert = hk_certificate(&g, 3).unwrap().unwrap();
    assert_eq!(cert.leaf_count(), 3);
    assert!(cert.verify(&g).unwrap());
    assert!(!cert.verify(&w5).unwrap());
}

#[test]
fn certificates_round_trip_through_json() {
    let cert = hk_certificate(&figure2_g1(), 3).unwrap().unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    let back: HkCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    assert!(back.verify(&figure2_g1()).unwrap());
}

#[test]
fn non_members_have_no_certificate() {
    assert!(hk_certificate(&toft_graph(1).unwrap(), 3).unwrap().is_none());
    assert!(hk_certificate(&kc(2, 2).unwrap(), 4).unwrap().is_none());
    assert!(!is_in_ck(&cycle(5).unwrap(), 3).unwrap());
    assert!(is_in_ck(&complete_graph(4), 2).is_err());
}

#[test]
fn certificate_agrees_with_membership() {
    let mut r = rng(7);
    let mut pool: Vec<(usize, Hypergraph)> = Vec::new();
    for k in 3..=4 {
        pool.extend(critical_family(k).into_iter().map(|g| (k, g)));
        pool.extend((0..4).filter_map(|_| random_hajos_tree(&mut r, k, 14)).map(|g| (k, g)));
    }
    pool.push((3, hyperwheel(3).unwrap()));
    pool.push((3, cycle(4).unwrap()));
    for (k, g) in pool {
        let direct =
            chromatic_number(&g) == k + 1 && max_local_edge_connectivity(&g) == k && is_critical(&g, k + 1).is_critical;
        let member = is_in_ck(&g, k).unwrap();
        let cert = hk_certificate(&g, k).unwrap();
        assert_eq!(member, direct, "{g:?}");
        assert_eq!(cert.is_some(), member, "{g:?}");
    }
}

#[test]
fn tight_blocks_are_members() {
    let g = figure1(true).with_extra_vertices(1).add_edge(&[6, 7]).unwrap();
    let out = classify(&g).unwrap();
    let Verdict::Tight { block, certificate } = out.verdict else { panic!("expected tight") };
    assert!(blocks(&g).iter().any(|b| b.vertices == block));
    assert!(certificate.verify(&g.induced(&block).unwrap().graph).unwrap());
}

#[test]
fn extracting_critical_parts() {
    let pendant = complete_graph(4).with_extra_vertices(1).add_edge(&[2, 4]).unwrap();
    let h = extract_critical(&pendant, 4).unwrap();
    assert_eq!(h.graph, complete_graph(4));
    assert_eq!(h.original_ids, vec![0, 1, 2, 3]);

    let c4_and_c5 = cycle(4).unwrap().disjoint_union(&cycle(5).unwrap());
    let h = extract_critical(&c4_and_c5, 3).unwrap();
    assert_eq!(h.original_ids, (4..9).collect::<Vec<_>>());

    let h = extract_critical(&kc(2, 2).unwrap(), 5).unwrap();
    assert!(is_critical(&h.graph, 5).is_critical);
    assert!(extract_critical(&cycle(4).unwrap(), 3).is_err());
}

#[test]
fn degree_bound_equality() {
    assert_eq!(jones_classify(&complete_graph(4)).unwrap().shape, Some(JonesShape::CompleteGraph));
    assert_eq!(jones_classify(&cycle(7).unwrap()).unwrap().shape, Some(JonesShape::OddCycle));
    assert_eq!(jones_classify(&single_edge(3).unwrap()).unwrap().shape, Some(JonesShape::SingleEdge));
    let w = jones_classify(&odd_wheel(5).unwrap()).unwrap();
    assert!(!w.equality && w.shape.is_none());
    assert!(jones_classify(&Hypergraph::edgeless(2)).is_err());
}
