use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use hyperchrome::classifier::{classify, hk_certificate, HkCertificate};
use hyperchrome::coloring::{
    chromatic_number, find_k_coloring, is_critical, verify_gallai_lemma, verify_one_high_vertex_lemma,
};
use hyperchrome::connectivity::{
    blocks, bridges, enumerate_separating_sets, local_edge_connectivity, max_local_edge_connectivity_witness,
    minimal_separating_edge_sets, mixed_separating_sets, separating_vertices,
};
use hyperchrome::constructions::{
    c2_tree, check_general_split_precondition, complete_graph, cycle, decompose_edge_cut, decompose_vertex_pair,
    figure1, figure2_g1, figure2_g2, figure2_split, figure3, hajos_decompose_mixed, hajos_join, hyperwheel, kc,
    odd_wheel, single_edge, split, toft_graph, validate_split_low, validate_split_ordinary, HajosJoinSpec, SplitSpec,
    TreeSpec,
};
use hyperchrome::corpus;
use hyperchrome::{hgr, EdgeRef, Error, Hypergraph};

/// Largest vertex count the exponential commands accept without `--force`.
const DEFAULT_GUARD: usize = 24;

#[derive(Parser)]
#[command(name = "hyperchrome", version, about = "Exact hypergraph coloring, connectivity and Hajós certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// HGR file, or `-` for standard input.
    file: PathBuf,
    /// Run exponential searches on more than 24 vertices.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeMode {
    /// Separating vertex pair.
    Pair,
    /// Edge cut of size k.
    Cut,
    /// Mixed separating set {v, e}, undone as a Hajós join.
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitCheck {
    Low,
    Ordinary,
    General,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number.
    Chi(Input),
    /// A k-coloring, if one exists.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
    },
    /// Whether the hypergraph is critical with chromatic number k.
    Critical {
        #[command(flatten)]
        input: Input,
        /// Target chromatic number.
        #[arg(short)]
        k: usize,
    },
    /// λ(G), or λ(v, w) with --pair, with witness paths and cut.
    Lambda {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["V", "W"])]
        pair: Option<Vec<usize>>,
    },
    /// Blocks, separating vertices and bridges.
    Blocks { file: PathBuf },
    /// Minimal separating edge sets.
    Cuts {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// Separating vertex sets of size at most 2 and mixed separating sets.
    MixedSeps { file: PathBuf },
    /// Writes a named hypergraph in HGR.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Hajós join of a JSON spec, written in HGR.
    Join {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Splitting of a JSON spec, written in HGR; --check validates the split against its criticality conditions.
    Split {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum)]
        check: Option<SplitCheck>,
    },
    /// Decomposes a (k+1)-critical hypergraph.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum)]
        mode: DecomposeMode,
        /// Cut edges for --mode cut (default: first separating set of size k).
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
        /// Vertex and edge for --mode mixed (default: first mixed separating set).
        #[arg(long, num_args = 2, value_names = ["V", "E"])]
        at: Option<Vec<usize>>,
    },
    /// Decides χ = λ + 1 with a coloring or a certified block.
    Classify(Input),
    /// H_k certificate for a member of C_k.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
    },
    /// Replays a certificate and compares it with a hypergraph.
    VerifyCert { cert: PathBuf, file: PathBuf },
    /// Low-vertex structure of a (k+1)-critical hypergraph.
    GallaiCheck {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
    },
    /// Writes named families and seeded random instances with a manifest.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Family {
    /// K_n.
    #[command(name = "complete", alias = "k_n")]
    KN {
        n: usize,
    },
    /// C_n
    Cycle {
        n: usize,
    },
    /// Odd wheel over C_rim.
    Wheel {
        rim: usize,
    },
    /// One hyperedge plus an apex joined to each of its vertices
    Hyperwheel {
        edge_size: usize,
    },
    /// One hyperedge.
    Edge {
        size: usize,
    },
    /// K_n ⊠ C_{2p+1}.
    Kc {
        n: usize,
        p: usize,
    },
    /// Toft's dense 4-critical graph of order 8p + 4
    Toft {
        p: usize,
    },
    /// Tree plus a leaf hyperedge; parents as a comma list, the root is its own parent.
    C2tree {
        #[arg(value_delimiter = ',')]
        parents: Vec<usize>,
    },
    /// Hajós joins of two K4; `right` keeps the merged vertex in the new edge.
    Fig1 {
        #[arg(value_parser = ["left", "right"])]
        variant: String,
    },
    /// The splitting example; `split` rebuilds g1 from g2.
    Fig2 {
        #[arg(value_parser = ["g1", "g2", "split"])]
        variant: String,
    },
    /// Tree of depth two closed by a hyperedge on its six leaves
    Fig3,
}

enum Failure {
    Negative(Value),
    Input(String),
    Guard(String),
    Unmet(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded(_) => Failure::Guard(e.to_string()),
            Error::NotConnected | Error::NotCritical { .. } | Error::Precondition(_) | Error::Consistency(_) => {
                Failure::Unmet(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(format!("invalid JSON: {e}"))
    }
}

type Outcome = Result<Output, Failure>;

enum Output {
    Json(Value),
    Text(String),
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn read_source(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    hgr::parse(&read_source(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_guarded(input: &Input) -> Result<Hypergraph, Failure> {
    let g = load(&input.file)?;
    if !input.force && g.vertex_count() > DEFAULT_GUARD {
        return Err(Failure::Guard(format!(
            "{} vertices exceed the limit of {DEFAULT_GUARD} for exact search; pass --force to run anyway",
            g.vertex_count()
        )));
    }
    Ok(g)
}

fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    Ok(serde_json::from_str(&read_source(path)?)?)
}

fn verdict(ok: bool, body: Value) -> Outcome {
    if ok {
        Ok(Output::Json(body))
    } else {
        Err(Failure::Negative(body))
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Chi(input) => {
            let g = load_guarded(&input)?;
            Ok(Output::Json(json!({ "chi": chromatic_number(&g) })))
        }
        Command::Color { input, k } => {
            let g = load_guarded(&input)?;
            match find_k_coloring(&g, k)? {
                Some(c) => verdict(true, json!({ "k": k, "colorable": true, "coloring": c.colors })),
                None => verdict(false, json!({ "k": k, "colorable": false, "coloring": null })),
            }
        }
        Command::Critical { input, k } => {
            let g = load_guarded(&input)?;
            let r = is_critical(&g, k);
            let failing_edge = r.failing_edge.map(|e| g.edges()[e.0].clone());
            let body = json!({
                "critical": r.is_critical,
                "chi": r.chi,
                "failing_edge": failing_edge,
                "reason": r.reason,
            });
            verdict(r.is_critical, body)
        }
        Command::Lambda { file, pair } => {
            let g = load(&file)?;
            let witness = match pair {
                Some(p) => Some(local_edge_connectivity(&g, p[0], p[1])?),
                None => max_local_edge_connectivity_witness(&g),
            };
            Ok(Output::Json(match witness {
                None => json!({ "lambda": 0, "paths": [], "cut_X": null }),
                Some(w) => json!({
                    "lambda": w.value,
                    "source": w.source,
                    "sink": w.sink,
                    "paths": w.paths.iter().map(|p| p.to_alternating()).collect::<Vec<_>>(),
                    "cut_X": w.cut,
                }),
            }))
        }
        Command::Blocks { file } => {
            let g = load(&file)?;
            Ok(Output::Json(json!({
                "blocks": blocks(&g),
                "separating_vertices": separating_vertices(&g),
                "bridges": bridges(&g),
            })))
        }
        Command::Cuts { file, max_size } => {
            let g = load(&file)?;
            Ok(Output::Json(json!({ "cuts": minimal_separating_edge_sets(&g, max_size)? })))
        }
        Command::MixedSeps { file } => {
            let g = load(&file)?;
            Ok(Output::Json(json!({
                "separating_sets": enumerate_separating_sets(&g, 2)?,
                "mixed_separating_sets": mixed_separating_sets(&g)?,
            })))
        }
        Command::Construct { family } => Ok(Output::Text(hgr::to_string(&construct(family)?))),
        Command::Join { spec } => {
            let spec: HajosJoinSpec = load_json(&spec)?;
            Ok(Output::Text(hgr::to_string(&hajos_join(&spec)?.graph)))
        }
        Command::Split { spec, check } => {
            let spec: SplitSpec = load_json(&spec)?;
            match check {
                None => Ok(Output::Text(hgr::to_string(&split(&spec)?.graph))),
                Some(SplitCheck::Low) => {
                    let s = validate_split_low(&spec)?;
                    Ok(Output::Json(json!({ "critical": true, "graph": s.graph, "first_side": s.first_side() })))
                }
                Some(SplitCheck::Ordinary) => {
                    let r = validate_split_ordinary(&spec)?;
                    let ok = !r.precondition_holds || r.result_critical;
                    verdict(ok, to_value(&r))
                }
                Some(SplitCheck::General) => {
                    let holds = check_general_split_precondition(&spec)?;
                    verdict(holds, json!({ "precondition_holds": holds }))
                }
            }
        }
        Command::Decompose { input, k, mode, edges, at } => {
            let g = load_guarded(&input)?;
            decompose(&g, k, mode, edges, at)
        }
        Command::Classify(input) => {
            let g = load_guarded(&input)?;
            Ok(Output::Json(to_value(classify(&g)?)))
        }
        Command::Certify { input, k } => {
            let g = load_guarded(&input)?;
            match hk_certificate(&g, k)? {
                Some(cert) => Ok(Output::Json(to_value(cert))),
                None => verdict(false, json!({ "in_ck": false, "k": k })),
            }
        }
        Command::VerifyCert { cert, file } => {
            let cert: HkCertificate = load_json(&cert)?;
            let g = load(&file)?;
            let valid = cert.verify(&g)?;
            verdict(valid, json!({ "valid": valid, "leaves": cert.leaf_count(), "depth": cert.depth() }))
        }
        Command::GallaiCheck { input, k } => {
            let g = load_guarded(&input)?;
            let lemma = verify_gallai_lemma(&g, k)?;
            let one_high = (lemma.high.len() == 1).then(|| verify_one_high_vertex_lemma(&g, k)).transpose()?;
            verdict(
                lemma.all_hold(),
                json!({ "all_hold": lemma.all_hold(), "lemma": lemma, "one_high_vertex": one_high }),
            )
        }
        Command::Corpus { seed, count, n_max, out } => write_corpus(seed, count, n_max, &out),
    }
}

fn construct(family: Family) -> Result<Hypergraph, Failure> {
    Ok(match family {
        Family::KN { n } => complete_graph(n),
        Family::Cycle { n } => cycle(n)?,
        Family::Wheel { rim } => odd_wheel(rim)?,
        Family::Hyperwheel { edge_size } => hyperwheel(edge_size)?,
        Family::Edge { size } => single_edge(size)?,
        Family::Kc { n, p } => kc(n, p)?,
        Family::Toft { p } => toft_graph(p)?,
        Family::C2tree { parents } => {
            let root = parents
                .iter()
                .enumerate()
                .find(|&(v, &p)| v == p)
                .map(|(v, _)| v)
                .ok_or_else(|| Failure::Input("no vertex is its own parent".into()))?;
            c2_tree(&TreeSpec { root, parent: parents })?
        }
        Family::Fig1 { variant } => figure1(variant == "right"),
        Family::Fig2 { variant } => match variant.as_str() {
            "g1" => figure2_g1(),
            "g2" => figure2_g2(),
            _ => figure2_split()?,
        },
        Family::Fig3 => figure3(),
    })
}

fn decompose(
    g: &Hypergraph,
    k: usize,
    mode: DecomposeMode,
    edges: Option<Vec<usize>>,
    at: Option<Vec<usize>>,
) -> Outcome {
    match mode {
        DecomposeMode::Pair => match decompose_vertex_pair(g, k)? {
            Some(d) => Ok(Output::Json(to_value(d))),
            None => verdict(false, json!({ "separating_pair": null })),
        },
        DecomposeMode::Cut => {
            let f: Vec<EdgeRef> = match edges {
                Some(es) => es.into_iter().map(EdgeRef).collect(),
                None => match minimal_separating_edge_sets(g, k)?.into_iter().find(|c| c.f.len() == k) {
                    Some(cut) => cut.f,
                    None => return verdict(false, json!({ "cut": null })),
                },
            };
            Ok(Output::Json(to_value(decompose_edge_cut(g, k, &f)?)))
        }
        DecomposeMode::Mixed => {
            let (v, e) = match at {
                Some(a) => (a[0], EdgeRef(a[1])),
                None => match mixed_separating_sets(g)?.into_iter().min_by_key(|m| (m.edge, m.vertex)) {
                    Some(m) => (m.vertex, m.edge),
                    None => return verdict(false, json!({ "mixed_separating_set": null })),
                },
            };
            Ok(Output::Json(to_value(hajos_decompose_mixed(g, v, e)?)))
        }
    }
}

fn write_corpus(seed: u64, count: usize, n_max: usize, out: &Path) -> Outcome {
    fs::create_dir_all(out)?;
    let mut entries = corpus::named_entries();
    let random: Vec<_> = corpus::random_instances(seed, count, n_max)
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| corpus::measured_random_entry(i, g))
        .collect();
    entries.extend(random);
    for e in &entries {
        fs::write(out.join(&e.manifest.file), hgr::to_string(&e.graph))?;
    }
    let manifest: Vec<_> = entries.iter().map(|e| &e.manifest).collect();
    let text =
        serde_json::to_string_pretty(&json!({ "seed": seed, "count": count, "n_max": n_max, "entries": manifest }))?;
    fs::write(out.join("manifest.json"), text + "\n")?;
    Ok(Output::Json(json!({ "files": entries.len(), "out": out })))
}

fn configure_threads() {
    let threads = std::env::var("HYPERCHROME_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()).unwrap_or(0);
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn emit(value: &Value) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{value}");
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Json(v)) => {
            emit(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(v)) => {
            emit(&v);
            ExitCode::from(1)
        }
        Err(Failure::Unmet(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
