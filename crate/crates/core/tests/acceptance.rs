//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any failed.

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use hyperchrome::classifier::{classify, hk_certificate, is_in_ck, jones_classify, Verdict};
use hyperchrome::coloring::{
    chromatic_number, find_k_coloring_extending, for_each_coloring_up_to_permutation, is_critical,
};
use hyperchrome::connectivity::{
    blocks, components, enumerate_separating_sets, is_connected, local_edge_connectivity, max_local_edge_connectivity,
    minimal_separating_edge_sets,
};
use hyperchrome::constructions::{
    c2_tree, decompose_edge_cut, decompose_vertex_pair_at, figure1, figure2_g1, figure2_split, figure3, toft_graph,
    validate_split_low, TreeSpec,
};
use hyperchrome::corpus::{
    self, critical_family, named_families, random_hajos_tree, random_hypergraph, random_low_split,
};
use hyperchrome::{Hypergraph, VertexSet};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn subsets_of_sizes(n: usize, sizes: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| sizes.contains(&(m.count_ones() as usize)))
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

/// One representative per isomorphism class among the given edge masks over
/// `candidates`, restricted to connected hypergraphs.
struct Enumerator {
    n: usize,
    candidates: Vec<Vec<usize>>,
    /// `images[p][i]` is the candidate index of edge `i` under permutation `p`.
    images: Vec<Vec<usize>>,
}

impl Enumerator {
    fn new(n: usize, sizes: &[usize]) -> Self {
        let candidates = subsets_of_sizes(n, sizes);
        let images = permutations(n)
            .into_iter()
            .map(|p| {
                candidates
                    .iter()
                    .map(|e| {
                        let mut img: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                        img.sort_unstable();
                        candidates.iter().position(|c| *c == img).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self { n, candidates, images }
    }

    fn is_canonical(&self, mask: u64) -> bool {
        self.images.iter().all(|img| {
            let mut m = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                m |= 1 << img[i];
            }
            m >= mask
        })
    }

    fn graph(&self, mask: u64) -> Hypergraph {
        let edges = (0..self.candidates.len()).filter(|&i| mask >> i & 1 == 1).map(|i| self.candidates[i].clone());
        Hypergraph::new(self.n, edges).unwrap()
    }

    fn classes(&self, masks: Vec<u64>) -> Vec<Hypergraph> {
        masks.into_par_iter().filter(|&m| self.is_canonical(m)).map(|m| self.graph(m)).filter(is_connected).collect()
    }

    fn all(&self) -> Vec<Hypergraph> {
        self.classes((0..1u64 << self.candidates.len()).collect())
    }

    fn up_to_edges(&self, max_edges: u32) -> Vec<Hypergraph> {
        let m = self.candidates.len();
        let mut masks = vec![0u64];
        let mut frontier = vec![0u64];
        for _ in 0..max_edges {
            let mut next = Vec::new();
            for &mask in &frontier {
                let start = if mask == 0 { 0 } else { 64 - mask.leading_zeros() as usize };
                for i in start..m {
                    next.push(mask | 1 << i);
                }
            }
            masks.extend(&next);
            frontier = next;
        }
        self.classes(masks)
    }
}

/// Sorted edge lists under the lexicographically smallest relabeling.
fn canonical_key(g: &Hypergraph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|p| {
            let mut edges: Vec<Vec<usize>> = g
                .edges()
                .iter()
                .map(|e| {
                    let mut img: Vec<usize> = e.iter().map(|&v| p[v]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            edges.sort();
            edges
        })
        .min()
        .unwrap_or_default()
}

fn sampled_connected(seed: u64, n: usize, samples: usize, max_edges: usize) -> Vec<Hypergraph> {
    let mut rng = corpus::rng(seed);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..samples {
        let m = rng.gen_range(n - 1..=max_edges);
        let g = random_hypergraph(&mut rng, n, 2, 3, m);
        if is_connected(&g) && seen.insert(canonical_key(&g, &perms)) {
            out.push(g);
        }
    }
    out
}

fn four_critical_corpus() -> Vec<Hypergraph> {
    let mut out = critical_family(3);
    out.push(figure2_split().unwrap());
    let mut rng = corpus::rng(8);
    let mut seen: HashSet<Hypergraph> = out.iter().cloned().collect();
    while out.len() < 24 {
        if let Some(g) = random_hajos_tree(&mut rng, 3, 13) {
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = corpus::rng(2024);
    let instances: Vec<Hypergraph> = (0..1000).map(|_| corpus::random_instance(&mut rng, 12)).collect();
    let violations: Vec<String> = instances
        .par_iter()
        .filter_map(|g| {
            let (chi, lambda) = (chromatic_number(g), max_local_edge_connectivity(g));
            (chi > lambda + 1).then(|| format!("χ = {chi}, λ = {lambda} on {g:?}"))
        })
        .collect();
    let elapsed = start.elapsed();
    ensure(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {}", secs(elapsed)))?;
    Ok("1000 instances, 0 violations".to_string())
}

/// `(lhs, rhs)` of the equivalence for one connected hypergraph.
fn equivalence_sides(g: &Hypergraph) -> Result<(bool, bool), String> {
    let lambda = max_local_edge_connectivity(g);
    if lambda < 3 {
        return Ok((false, false));
    }
    let lhs = chromatic_number(g) == lambda + 1;
    let mut rhs = false;
    for b in blocks(g) {
        let block = g.induced(&b.vertices).map_err(|e| e.to_string())?.graph;
        if is_in_ck(&block, lambda).map_err(|e| e.to_string())? {
            rhs = true;
            break;
        }
    }
    Ok((lhs, rhs))
}

fn check_classify(g: &Hypergraph) -> Result<bool, String> {
    let out = classify(g).map_err(|e| format!("{e} on {g:?}"))?;
    match &out.verdict {
        Verdict::Colorable { coloring } => {
            ensure(coloring.is_valid_for(g) && coloring.palette_size == out.lambda, || {
                format!("bad coloring on {g:?}")
            })?;
            Ok(false)
        }
        Verdict::Tight { block, certificate } => {
            let b = g.induced(block).map_err(|e| e.to_string())?.graph;
            ensure(certificate.verify(&b).map_err(|e| e.to_string())?, || {
                format!("certificate does not replay on {g:?}")
            })?;
            Ok(true)
        }
        Verdict::SmallLambda { .. } => Ok(false),
    }
}

fn criterion_2() -> Outcome {
    let mut instances = Vec::new();
    for n in 1..=5 {
        instances.extend(Enumerator::new(n, &[2, 3]).all());
    }
    instances.extend(Enumerator::new(6, &[2]).all());
    let exhaustive = instances.len();
    instances.extend(sampled_connected(61, 6, 20000, 14));
    instances.extend(sampled_connected(71, 7, 12000, 16));
    let sampled = instances.len() - exhaustive;
    instances.extend(named_families().into_iter().map(|i| i.graph).filter(is_connected));
    for k in 2..=4 {
        instances.extend(critical_family(k));
    }
    let mut rng = corpus::rng(22);
    for k in [3, 3, 3, 4, 4, 5] {
        instances.extend(random_hajos_tree(&mut rng, k, 16));
    }
    let results: Vec<Result<(bool, bool, bool), String>> = instances
        .par_iter()
        .map(|g| {
            let (lhs, rhs) = equivalence_sides(g)?;
            let classified_tight = check_classify(g)?;
            Ok((lhs, rhs, classified_tight))
        })
        .collect();
    let mut tight = 0;
    for (g, r) in instances.iter().zip(results) {
        let (lhs, rhs, classified) = r?;
        ensure(lhs == rhs, || format!("χ = λ + 1 is {lhs} but the block test says {rhs} on {g:?}"))?;
        ensure(lhs == classified, || format!("classify disagrees ({classified}) on {g:?}"))?;
        tight += usize::from(lhs);
    }
    Ok(format!(
        "{} hypergraphs ({exhaustive} exhaustive classes for n <= 5 and graphs on 6 vertices, {sampled} sampled classes with n = 6, 7, rest named), {tight} tight",
        instances.len()
    ))
}

fn criterion_3() -> Outcome {
    let mut rng = corpus::rng(3);
    let mut seen = HashSet::new();
    let mut members = Vec::new();
    let mut per_k = [0usize; 6];
    while members.len() < 50 {
        let k = [3, 4, 5][members.len() % 3];
        if let Some(g) = random_hajos_tree(&mut rng, k, 20) {
            if seen.insert(g.clone()) {
                members.push((k, g));
                per_k[k] += 1;
            }
        }
    }
    let failures: Vec<String> = members
        .par_iter()
        .filter_map(|(k, g)| match hk_certificate(g, *k) {
            Ok(Some(cert)) => match cert.replay() {
                Ok(r) if r == *g => None,
                Ok(r) => Some(format!("replay {r:?} differs from {g:?}")),
                Err(e) => Some(format!("replay failed: {e}")),
            },
            Ok(None) => Some(format!("no certificate for k = {k}: {g:?}")),
            Err(e) => Some(format!("{e} for k = {k}: {g:?}")),
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let max_n = members.iter().map(|(_, g)| g.vertex_count()).max().unwrap();
    Ok(format!("50 joins (k=3: {}, k=4: {}, k=5: {}, max n {max_n}) replay exactly", per_k[3], per_k[4], per_k[5]))
}

fn criterion_4() -> Outcome {
    for include in [false, true] {
        let g = figure1(include);
        let shape = (g.vertex_count(), g.edge_count());
        ensure(shape == (7, 11), || format!("variant {include}: (n, m) = {shape:?}"))?;
        ensure(is_critical(&g, 4).is_critical, || format!("variant {include} is not 4-critical"))?;
        let lambda = max_local_edge_connectivity(&g);
        ensure(lambda == 3, || format!("variant {include}: λ = {lambda}"))?;
    }
    Ok("both joins: n = 7, m = 11, 4-critical, λ = 3".into())
}

fn criterion_5() -> Outcome {
    let t1 = toft_graph(1).map_err(|e| e.to_string())?;
    let (n, m) = (t1.vertex_count(), t1.edge_count());
    ensure(n == 12 && m == 21 && m == n * n / 16 + n, || format!("toft(1): n = {n}, m = {m}"))?;
    ensure(is_critical(&t1, 4).is_critical, || "toft(1) is not 4-critical".into())?;
    let t2 = toft_graph(2).map_err(|e| e.to_string())?;
    let (n, m) = (t2.vertex_count(), t2.edge_count());
    ensure(n == 20 && m == 45 && m == n * n / 16 + n, || format!("toft(2): n = {n}, m = {m}"))?;
    ensure(is_critical(&t2, 4).is_critical, || "toft(2) is not 4-critical".into())?;
    Ok("toft(1): 12 vertices, 21 edges; toft(2): 20 vertices, 45 edges; both 4-critical".to_string())
}

fn criterion_6() -> Outcome {
    let g = figure3();
    ensure(is_critical(&g, 3).is_critical, || "not 3-critical".into())?;
    let lambda = max_local_edge_connectivity(&g);
    ensure(lambda == 2, || format!("λ = {lambda}"))?;
    ensure(is_connected(&g), || "not connected".into())?;
    let seps = enumerate_separating_sets(&g, 2).map_err(|e| e.to_string())?;
    ensure(seps.is_empty(), || format!("separating sets {seps:?}"))?;
    Ok(format!(
        "{} vertices, {} edges, 3-critical, λ = 2, no separating set of size <= 2",
        g.vertex_count(),
        g.edge_count()
    ))
}

/// Edge masks of all `(v, w)`-hyperpaths.
fn hyperpath_masks(g: &Hypergraph, v: usize, w: usize) -> Vec<u32> {
    fn walk(g: &Hypergraph, at: usize, w: usize, seen: u32, used: u32, out: &mut Vec<u32>) {
        for (i, e) in g.edges().iter().enumerate() {
            if used >> i & 1 == 1 || !e.contains(&at) {
                continue;
            }
            for &x in e {
                if seen >> x & 1 == 1 {
                    continue;
                }
                if x == w {
                    out.push(used | 1 << i);
                } else {
                    walk(g, x, w, seen | 1 << x, used | 1 << i, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(g, v, w, 1 << v, 0, &mut out);
    out.sort_unstable();
    out.dedup();
    let minimal: Vec<u32> = out.iter().copied().filter(|&m| !out.iter().any(|&o| o != m && o & m == o)).collect();
    minimal
}

fn max_packing(paths: &[u32], used: u32) -> usize {
    let mut best = 0;
    for (i, &p) in paths.iter().enumerate() {
        if p & used == 0 {
            best = best.max(1 + max_packing(&paths[i + 1..], used | p));
        }
    }
    best
}

fn criterion_7() -> Outcome {
    let mut rng = corpus::rng(7);
    let instances: Vec<Hypergraph> = (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=6);
            let m = rng.gen_range(0..=8);
            random_hypergraph(&mut rng, n, 2, 4, m)
        })
        .collect();
    let pairs: usize = instances.iter().map(|g| g.vertex_count() * (g.vertex_count() - 1) / 2).sum();
    let failures: Vec<String> = instances
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.vertex_count();
            (0..n).flat_map(move |v| (v + 1..n).map(move |w| (v, w))).filter_map(move |(v, w)| {
                let flow = local_edge_connectivity(g, v, w).map_err(|e| e.to_string()).ok()?;
                let brute = max_packing(&hyperpath_masks(g, v, w), 0);
                let cut_ok = flow.cut.contains(v)
                    && !flow.cut.contains(w)
                    && g.boundary(&flow.cut).map(|b| b.len()) == Ok(flow.value);
                let paths_ok = flow.paths.len() == flow.value
                    && flow.paths.iter().all(|p| p.validate(g).is_ok() && p.start() == v && p.end() == w);
                (flow.value != brute || !cut_ok || !paths_ok).then(|| {
                    format!("({v}, {w}) flow {} brute {brute} cut {cut_ok} paths {paths_ok} on {g:?}", flow.value)
                })
            })
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("200 hypergraphs, {pairs} vertex pairs agree with brute-force packing"))
}

/// Property (a) by enumeration over coloring classes, and property (b).
fn edge_cut_properties(
    g: &Hypergraph,
    k: usize,
    x: &VertexSet,
    y: &VertexSet,
    x_f: &VertexSet,
    y_f: &VertexSet,
    f: &[hyperchrome::EdgeRef],
) -> Result<(), String> {
    let gx = g.induced(x).map_err(|e| e.to_string())?;
    let local =
        |ids: &[usize], set: &VertexSet| -> Vec<usize> { set.iter().map(|v| ids.binary_search(&v).unwrap()).collect() };
    let xf_local = local(&gx.original_ids, x_f);
    let mut ok = true;
    let mut count = 0;
    for_each_coloring_up_to_permutation(&gx.graph, k, &[], |c| {
        count += 1;
        let colors: BTreeSet<usize> = xf_local.iter().map(|&v| c[v]).collect();
        ok &= colors.len() == 1;
        ControlFlow::Continue(())
    })
    .map_err(|e| e.to_string())?;
    ensure(ok && count > 0, || format!("X side fails (a) ({count} classes)"))?;

    let gy = g.induced(y).map_err(|e| e.to_string())?;
    let yf_local = local(&gy.original_ids, y_f);
    let traces: Vec<Vec<usize>> =
        f.iter().map(|&e| g.edge(e).unwrap().iter().copied().filter(|&v| y.contains(v)).collect()).collect();
    let traces_local: Vec<Vec<usize>> =
        traces.iter().map(|t| t.iter().map(|&v| gy.original_ids.binary_search(&v).unwrap()).collect()).collect();
    let mut count = 0;
    for_each_coloring_up_to_permutation(&gy.graph, k, &[], |c| {
        count += 1;
        let colors: BTreeSet<usize> = yf_local.iter().map(|&v| c[v]).collect();
        ok &= colors.len() == k;
        for color in 1..=k {
            ok &= traces_local.iter().any(|t| t.iter().all(|&v| c[v] == color));
        }
        ControlFlow::Continue(())
    })
    .map_err(|e| e.to_string())?;
    ensure(ok && count > 0, || format!("Y side fails (a) ({count} classes)"))?;

    for v in y_f.iter() {
        let hits = f.iter().filter(|&&e| g.edge(e).unwrap().contains(&v)).count();
        ensure(hits == 1, || format!("vertex {v} of Y_F meets {hits} cut edges"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let corpus = four_critical_corpus();
    let results: Vec<Result<(usize, usize), String>> = corpus
        .par_iter()
        .map(|g| {
            let cuts: Vec<_> = minimal_separating_edge_sets(g, 3)
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|c| c.f.len() == 3)
                .collect();
            let mut with_g1 = 0;
            for cut in &cuts {
                let d = decompose_edge_cut(g, 3, &cut.f).map_err(|e| format!("{e} at {:?} on {g:?}", cut.f))?;
                let c = &d.cut;
                edge_cut_properties(g, 3, &c.x, &c.y, &c.x_f, &c.y_f, &c.f)
                    .map_err(|e| format!("{e} at {:?} on {g:?}", c.f))?;
                if let Some(g1) = &d.g1 {
                    ensure(is_critical(g1, 4).is_critical, || format!("G1 not 4-critical at {:?} on {g:?}", c.f))?;
                    with_g1 += 1;
                }
                ensure(is_critical(&d.g2, 4).is_critical, || format!("G2 not 4-critical at {:?} on {g:?}", c.f))?;
            }
            Ok((cuts.len(), with_g1))
        })
        .collect();
    let (mut cuts, mut both, mut instances) = (0, 0, 0);
    for r in results {
        let (c, b) = r?;
        cuts += c;
        both += b;
        instances += usize::from(c > 0);
    }
    ensure(cuts > 0, || "no 3-edge cut in the corpus".into())?;
    Ok(format!("{cuts} cuts of size 3 on {instances} instances, {both} with |X_F| >= 2; all parts 4-critical, (a) and (b) hold"))
}

fn criterion_9() -> Outcome {
    let corpus = four_critical_corpus();
    let results: Vec<Result<usize, String>> = corpus
        .par_iter()
        .map(|g| {
            let pairs = enumerate_separating_sets(g, 2).map_err(|e| e.to_string())?;
            for pair in &pairs {
                ensure(pair.len() == 2, || format!("separating set {pair:?} of size {} on {g:?}", pair.len()))?;
                let d = decompose_vertex_pair_at(g, 3, pair).map_err(|e| format!("{e} at {pair:?} on {g:?}"))?;
                ensure(is_critical(&d.g1_prime, 4).is_critical, || format!("G1' not 4-critical at {pair:?} on {g:?}"))?;
                ensure(is_critical(&d.g2_prime, 4).is_critical, || format!("G2' not 4-critical at {pair:?} on {g:?}"))?;
                for (side, equal) in [(&d.h1, true), (&d.h2, false)] {
                    let set: VertexSet = side.iter().chain([d.v, d.w]).collect();
                    let part = g.induced(&set).map_err(|e| e.to_string())?;
                    let at = |x: usize| part.original_ids.binary_search(&x).unwrap();
                    let same =
                        find_k_coloring_extending(&part.graph, 3, &[(at(d.v), 1), (at(d.w), 1)]).unwrap().is_some();
                    let differ =
                        find_k_coloring_extending(&part.graph, 3, &[(at(d.v), 1), (at(d.w), 2)]).unwrap().is_some();
                    ensure(same == equal && differ == !equal, || format!("dichotomy fails at {pair:?} on {g:?}"))?;
                }
                ensure(components(&g.div_vertices(pair).unwrap().graph).len() == 2, || "not two components".into())?;
            }
            Ok(pairs.len())
        })
        .collect();
    let (mut total, mut instances) = (0, 0);
    for r in results {
        let c = r?;
        total += c;
        instances += usize::from(c > 0);
    }
    ensure(total > 0, || "no separating pair in the corpus".into())?;
    Ok(format!("{total} separating pairs on {instances} instances; G1', G2' 4-critical and the dichotomy holds"))
}

fn jones_shape_oracle(g: &Hypergraph) -> bool {
    let n = g.vertex_count();
    let graph = g.is_graph();
    let complete = graph && g.edge_count() == n * (n - 1) / 2;
    let odd_cycle = graph && n >= 3 && n % 2 == 1 && g.edge_count() == n && g.degrees().iter().all(|&d| d == 2);
    complete || odd_cycle || g.edge_count() == 1
}

fn criterion_10() -> Outcome {
    let mut instances = Vec::new();
    for n in 1..=5 {
        instances.extend(Enumerator::new(n, &[2, 3]).all());
    }
    let small = instances.len();
    instances.extend(Enumerator::new(6, &[2]).all());
    let graphs6 = instances.len() - small;
    instances.extend(Enumerator::new(6, &[2, 3]).up_to_edges(5).into_iter().filter(|g| !g.is_graph()));
    let hyper6 = instances.len() - small - graphs6;
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|g| {
            let equality = chromatic_number(g) == g.max_degree() + 1;
            let oracle = jones_shape_oracle(g);
            match jones_classify(g) {
                Ok(v) if v.equality == equality && equality == oracle && v.shape.is_some() == oracle => None,
                Ok(v) => Some(format!("{v:?} vs oracle {oracle} on {g:?}")),
                Err(e) => Some(format!("{e} on {g:?}")),
            }
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} failures, first: {}", failures.len(), failures[0]))?;
    Ok(format!(
        "{} connected classes ({small} with n <= 5, {graphs6} graphs and {hyper6} hypergraphs with <= 5 edges on 6 vertices)",
        instances.len()
    ))
}

fn criterion_11() -> Outcome {
    let mut rng = corpus::rng(11);
    let mut specs = Vec::new();
    for k in [2, 3] {
        let pool: Vec<Hypergraph> = critical_family(k).into_iter().filter(|g| g.vertex_count() <= 8).collect();
        let mut made = 0;
        while made < 15 {
            let g1 = &pool[rng.gen_range(0..pool.len())];
            let g2 = &pool[rng.gen_range(0..pool.len())];
            if let Some(spec) = random_low_split(&mut rng, g1, g2, k) {
                specs.push((k, spec));
                made += 1;
            }
        }
    }
    let failures: Vec<String> = specs
        .par_iter()
        .filter_map(|(k, spec)| {
            let s = match validate_split_low(spec) {
                Ok(s) => s,
                Err(e) => return Some(format!("{e} for {spec:?}")),
            };
            let critical = is_critical(&s.graph, k + 1).is_critical;
            let cut = s.graph.boundary(&s.first_side()).unwrap();
            let separating = components(&s.graph.delete_edges(&cut).unwrap()).len() > 1;
            (!critical || cut.len() != *k || !separating)
                .then(|| format!("critical {critical}, cut {cut:?} for {spec:?}"))
        })
        .collect();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let fig2 = figure2_split().map_err(|e| e.to_string())?;
    ensure(fig2 == figure2_g1(), || format!("split gives {fig2:?}"))?;
    ensure(is_critical(&fig2, 4).is_critical, || "split of the second graph is not 4-critical".into())?;
    Ok("30 low-vertex splittings critical with a k-edge cut; the ten-vertex example is rebuilt and 4-critical".into())
}

fn random_tree(rng: &mut impl Rng, n: usize) -> TreeSpec {
    let mut parent = vec![0];
    for v in 1..n {
        parent.push(rng.gen_range(0..v));
    }
    TreeSpec { root: 0, parent }
}

fn criterion_12() -> Outcome {
    let mut rng = corpus::rng(12);
    let mut trees = Vec::new();
    let mut seen = HashSet::new();
    while trees.len() < 10 {
        let n = rng.gen_range(4..=12);
        let spec = random_tree(&mut rng, n);
        if let Ok(g) = c2_tree(&spec) {
            if seen.insert(g.clone()) {
                trees.push((spec, g));
            }
        }
    }
    for (spec, g) in &trees {
        ensure(is_critical(g, 3).is_critical, || format!("{spec:?} is not 3-critical"))?;
        let lambda = max_local_edge_connectivity(g);
        ensure(lambda == 2, || format!("{spec:?} has λ = {lambda}"))?;
    }
    let sizes: Vec<usize> = trees.iter().map(|(_, g)| g.vertex_count()).collect();
    Ok(format!("10 trees with {sizes:?} vertices, all 3-critical with λ = 2"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("toft bound χ <= λ + 1", criterion_1),
        ("χ = λ + 1 iff a block lies in C_λ", criterion_2),
        ("certificate round trip", criterion_3),
        ("two joins of K4", criterion_4),
        ("dense 4-critical graphs", criterion_5),
        ("tree hypergraph example", criterion_6),
        ("flow λ equals path packing", criterion_7),
        ("edge-cut decomposition", criterion_8),
        ("separating-pair decomposition", criterion_9),
        ("χ = Δ + 1 shapes", criterion_10),
        ("splitting", criterion_11),
        ("tree hypergraphs in C_2", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} [{name}]: PASS ({detail}; {})", i + 1, secs(start.elapsed())),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} [{name}]: FAIL ({why})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
