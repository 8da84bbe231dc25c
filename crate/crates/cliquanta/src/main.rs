//! Command-line front end: graph generation, counting, weights,
//! decomposition, bounds, isomorph-free enumeration, and certified
//! verification sweeps. All reports are JSON with exact values.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cliquanta::verify::{Certificate, Verdict};
use cliquanta::{bounds, canon, cliques, decompose, enumerate, families, graph, graph6, verify};
use cliquanta::{Edge, Graph};
use num::BigRational;
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 2;
const EXIT_PARTIAL: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<cliquanta::Error> for Failure {
    fn from(e: cliquanta::Error) -> Failure {
        match e {
            cliquanta::Error::Io(inner) => Failure::io(inner.to_string()),
            other => Failure::usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "cliquanta", version, about = "Exact clique analytics and verification")]
struct Cli {
    /// Worker threads for sweeps (default: CLIQUANTA_WORKERS, then all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write the report to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Render vertices 1-based in reports and accept 1-based vertex inputs
    #[arg(long, global = true)]
    one_based: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph family as graph6 or an edge list
    Gen(GenArgs),
    /// Clique profile and totals of a graph
    Count(GraphInput),
    /// Clique profile plus per-vertex clique weights
    Weights(GraphInput),
    /// Number of cliques containing a given edge (or any of several)
    EdgeCount(EdgeCountArgs),
    /// Count cliques by recursive clique-separator decomposition
    Decompose(DecomposeArgs),
    /// Closed-form bounds, optionally compared against a graph
    Bound(BoundArgs),
    /// Enumerate isomorphism classes under a degree bound
    Enum(EnumArgs),
    /// Run a verification sweep and emit a certificate
    Verify(VerifyArgs),
    /// Run a manifest of verification rows (one JSON object per line)
    Batch(BatchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
    Colex,
    Extremal,
    Figure1,
    CompleteMinusMatching,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(short = 'm', long)]
    m: Option<usize>,
    #[arg(short = 'r', long)]
    r: Option<usize>,
    #[arg(short = 'a', long)]
    a: Option<usize>,
    #[arg(short = 'b', long)]
    b: Option<usize>,
    #[arg(short = 't', long)]
    t: Option<usize>,
    /// Emit an "n m" header plus edge lines instead of graph6
    #[arg(long)]
    edges: bool,
}

#[derive(Args)]
struct GraphInput {
    /// Inline graph6 string
    #[arg(long)]
    g6: Option<String>,
    /// File holding one graph6 line or an edge list ("n m" header)
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct EdgeCountArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Edges as "u-v" pairs, comma separated; one edge gives k(e;G),
    /// several give the count of cliques meeting any of them
    #[arg(long, required = true)]
    edges: String,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Count graphs of at most this order directly
    #[arg(long, default_value_t = decompose::LEAF_THRESHOLD)]
    leaf_threshold: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    /// Independent-set bound for regular graphs
    Kz,
    /// Maximum clique count at bounded degree
    Cr,
    /// Colex clique-count bound at fixed order and size
    Kk,
    /// The weight-gap function h
    H,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(value_enum)]
    kind: BoundKind,
    #[command(flatten)]
    graph: GraphInput,
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(short = 'm', long)]
    m: Option<usize>,
    #[arg(short = 'r', long)]
    r: Option<usize>,
    #[arg(short = 's', long)]
    s: Option<usize>,
    #[arg(short = 'p', long)]
    p: Option<usize>,
    #[arg(short = 't', long)]
    t: Option<usize>,
    /// For `h`: sweep the whole admissible region up to r
    #[arg(long)]
    sweep: bool,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(short = 'n', long)]
    n: usize,
    /// Maximum degree bound (default: n-1, i.e. unrestricted)
    #[arg(long)]
    max_deg: Option<usize>,
    /// Keep only d-regular graphs for this d
    #[arg(long)]
    regular: Option<usize>,
    /// Emit only the number of classes
    #[arg(long)]
    count_only: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim selector: thm1.2 (extremal), thm1.1 (kz), lem2.9, lem2.10,
    /// lem3.1, kk, identities, split, edge-del
    #[arg(long)]
    claim: String,
    #[command(flatten)]
    graph: GraphInput,
    #[arg(short = 'n', long)]
    n: Option<usize>,
    #[arg(short = 'r', long)]
    r: Option<usize>,
    #[arg(short = 'd', long)]
    d: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    r_max: Option<usize>,
    #[arg(long)]
    p_max: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    q_max: Option<usize>,
    /// First side of a split, comma-separated vertices
    #[arg(short = 'a', long)]
    a: Option<String>,
    /// Second side of a split, comma-separated vertices
    #[arg(short = 'b', long)]
    b: Option<String>,
    #[arg(short = 'u', long)]
    u: Option<usize>,
    #[arg(short = 'v', long)]
    v: Option<usize>,
}

#[derive(Args)]
struct BatchArgs {
    /// Manifest file, one JSON verification row per line
    #[arg(long)]
    manifest: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_workers(cli.workers);
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn init_workers(flag: Option<usize>) {
    let workers = flag.or_else(|| {
        std::env::var("CLIQUANTA_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(w) = workers {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build_global();
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(cli, args),
        Command::Count(input) => cmd_count(cli, input, false),
        Command::Weights(input) => cmd_count(cli, input, true),
        Command::EdgeCount(args) => cmd_edge_count(cli, args),
        Command::Decompose(args) => cmd_decompose(cli, args),
        Command::Bound(args) => cmd_bound(cli, args),
        Command::Enum(args) => cmd_enum(cli, args),
        Command::Verify(args) => {
            let cert = run_claim(cli, args)?;
            emit(cli, &serde_json::to_string_pretty(&cert).expect("serializable"))?;
            Ok(verdict_code(cert.verdict))
        }
        Command::Batch(args) => cmd_batch(cli, args),
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Verified => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Partial => EXIT_PARTIAL,
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::io(format!("writing {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{text}");
            Ok(())
        }
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, Failure> {
    match (&input.g6, &input.input) {
        (Some(_), Some(_)) => Err(Failure::usage("give either --g6 or --input, not both")),
        (Some(s), None) => Ok(graph6::decode(s.trim())?),
        (None, Some(path)) => {
            let mut text = String::new();
            std::fs::File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(|e| Failure::io(format!("reading {}: {e}", path.display())))?;
            parse_graph_text(&text)
        }
        (None, None) => Err(Failure::usage("a graph is required: --g6 or --input")),
    }
}

/// Edge-list files start with an "n m" integer header; anything else is
/// treated as a graph6 line.
fn parse_graph_text(text: &str) -> Result<Graph, Failure> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| Failure::usage("empty graph input"))?;
    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() == 2 && header.iter().all(|t| t.parse::<usize>().is_ok()) {
        Ok(graph::from_edge_list(text)?)
    } else {
        Ok(graph6::decode(first.trim())?)
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("missing required flag {flag}")))
}

fn cmd_gen(cli: &Cli, args: &GenArgs) -> Result<u8, Failure> {
    let g = match args.family {
        Family::Complete => families::complete(need(args.n, "-n")?),
        Family::Cycle => families::cycle(need(args.n, "-n")?)?,
        Family::Path => families::path(need(args.n, "-n")?),
        Family::CompleteBipartite => {
            families::complete_bipartite(need(args.a, "-a")?, need(args.b, "-b")?)
        }
        Family::Colex => families::colex_graph(&families::ColexSpec::new(
            need(args.n, "-n")?,
            need(args.m, "-m")?,
        )?),
        Family::Extremal => families::extremal_graph(need(args.n, "-n")?, need(args.r, "-r")?)?.0,
        Family::Figure1 => families::figure1_graph(),
        Family::CompleteMinusMatching => {
            families::complete_minus_matching(need(args.r, "-r")?, need(args.t, "-t")?)?
        }
    };
    let text = if args.edges {
        graph::to_edge_list(&g).trim_end().to_string()
    } else {
        graph6::encode(&g)?
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

fn vertex_out(cli: &Cli, v: usize) -> usize {
    v + cli.one_based as usize
}

fn vertex_in(cli: &Cli, v: usize) -> Result<usize, Failure> {
    if cli.one_based {
        v.checked_sub(1)
            .ok_or_else(|| Failure::usage("vertex 0 is invalid with --one-based"))
    } else {
        Ok(v)
    }
}

fn cmd_count(cli: &Cli, input: &GraphInput, with_weights: bool) -> Result<u8, Failure> {
    let g = load_graph(input)?;
    let profile = cliques::clique_profile(&g)?;
    let mut report = json!({
        "n": g.n(),
        "m": g.m(),
        "profile": profile.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "total": profile.total().to_string(),
        "total_nonempty": profile.total_nonempty().to_string(),
    });
    if with_weights {
        let weights: BTreeMap<String, String> = cliques::weight_map(&g)?
            .iter()
            .enumerate()
            .map(|(v, w)| {
                (
                    vertex_out(cli, v).to_string(),
                    cliquanta::report::rational_string(w),
                )
            })
            .collect();
        report["weights"] = json!(weights);
        let sum: BigRational = cliques::weight_map(&g)?.into_iter().sum();
        report["weight_sum"] = json!(cliquanta::report::rational_string(&sum));
    }
    emit(cli, &serde_json::to_string_pretty(&report).expect("serializable"))?;
    Ok(EXIT_OK)
}

fn parse_edges(cli: &Cli, text: &str) -> Result<Vec<Edge>, Failure> {
    text.split(',')
        .map(|tok| {
            let (a, b) = tok
                .trim()
                .split_once('-')
                .ok_or_else(|| Failure::usage(format!("edge {tok:?} is not of the form u-v")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::usage(format!("bad vertex {s:?}")))
            };
            Ok(Edge::new(vertex_in(cli, parse(a)?)?, vertex_in(cli, parse(b)?)?)?)
        })
        .collect()
}

fn cmd_edge_count(cli: &Cli, args: &EdgeCountArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.graph)?;
    let edges = parse_edges(cli, &args.edges)?;
    let count = if edges.len() == 1 {
        cliques::edge_clique_count(&g, edges[0])?
    } else {
        cliques::edges_union_clique_count(&g, &edges)?
    };
    let rendered: Vec<[usize; 2]> = edges
        .iter()
        .map(|e| [vertex_out(cli, e.u()), vertex_out(cli, e.v())])
        .collect();
    let report = json!({ "edges": rendered, "count": count.to_string() });
    emit(cli, &serde_json::to_string_pretty(&report).expect("serializable"))?;
    Ok(EXIT_OK)
}

fn shift_tree(tree: &mut decompose::DecompositionTree, cli: &Cli) {
    if let decompose::DecompositionTree::Split {
        separator, children, ..
    } = tree
    {
        for v in separator.iter_mut() {
            *v = vertex_out(cli, *v);
        }
        for child in children {
            shift_tree(child, cli);
        }
    }
}

fn cmd_decompose(cli: &Cli, args: &DecomposeArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.graph)?;
    let (total, mut tree) = decompose::decompose_count_with(&g, args.leaf_threshold)?;
    shift_tree(&mut tree, cli);
    let report = json!({ "total": total.to_string(), "tree": tree });
    emit(cli, &serde_json::to_string_pretty(&report).expect("serializable"))?;
    Ok(EXIT_OK)
}

fn cmd_bound(cli: &Cli, args: &BoundArgs) -> Result<u8, Failure> {
    let report = match args.kind {
        BoundKind::Kz => {
            let g = load_graph(&args.graph)?;
            serde_json::to_value(bounds::kahn_zhao_check(&g)?).expect("serializable")
        }
        BoundKind::Cr => {
            let n = need(args.n, "-n")?;
            let r = need(args.r, "-r")?;
            let bound = bounds::cutler_radcliffe_bound(n, r)?;
            let mut v = json!({
                "bound_name": "max-clique-count",
                "params": { "n": n, "r": r },
                "bound": bound.to_string(),
            });
            if args.graph.g6.is_some() || args.graph.input.is_some() {
                let g = load_graph(&args.graph)?;
                if g.n() != n || g.max_degree() > r {
                    return Err(Failure::usage(
                        "graph does not match the stated order/degree bound",
                    ));
                }
                let observed = cliques::k_total(&g)?;
                v["observed"] = json!(observed.to_string());
                v["tight"] = json!(observed == bound);
            }
            v
        }
        BoundKind::Kk => {
            let n = need(args.n, "-n")?;
            let m = need(args.m, "-m")?;
            let t = need(args.t, "-t")?;
            let bound = bounds::kruskal_katona_bound(n, m, t)?;
            let mut v = json!({
                "bound_name": "colex-count",
                "params": { "n": n, "m": m, "t": t },
                "bound": bound.to_string(),
            });
            if args.graph.g6.is_some() || args.graph.input.is_some() {
                let g = load_graph(&args.graph)?;
                if g.n() != n || g.m() != m {
                    return Err(Failure::usage("graph does not have the stated order/size"));
                }
                let observed = cliques::clique_profile(&g)?.k(t);
                v["observed"] = json!(observed.to_string());
                v["tight"] = json!(observed == bound);
            }
            v
        }
        BoundKind::H => {
            let r = need(args.r, "-r")?;
            if args.sweep {
                let cert = verify::verify_h_positivity(r)?;
                let code = verdict_code(cert.verdict);
                emit(cli, &serde_json::to_string_pretty(&cert).expect("serializable"))?;
                return Ok(code);
            }
            let s = need(args.s, "-s")?;
            let p = need(args.p, "-p")?;
            let value = bounds::h_function(bounds::HParams { r, s, p })?;
            json!({
                "bound_name": "h",
                "params": { "r": r, "s": s, "p": p },
                "value": cliquanta::report::rational_string(&value),
                "in_region": bounds::lemma31_region(r, s, p),
            })
        }
    };
    emit(cli, &serde_json::to_string_pretty(&report).expect("serializable"))?;
    Ok(EXIT_OK)
}

fn cmd_enum(cli: &Cli, args: &EnumArgs) -> Result<u8, Failure> {
    if args.max_deg.is_some() && args.regular.is_some() {
        return Err(Failure::usage("give either --max-deg or --regular"));
    }
    let graphs = match args.regular {
        Some(d) => enumerate::enumerate_regular(args.n, d)?,
        None => {
            let cap = args.max_deg.unwrap_or(args.n.saturating_sub(1));
            enumerate::enumerate_graphs(args.n, cap)?
        }
    };
    let text = if args.count_only {
        graphs.len().to_string()
    } else {
        graphs
            .iter()
            .map(|g| canon::canonical_g6(g))
            .collect::<cliquanta::Result<Vec<_>>>()?
            .join("\n")
    };
    emit(cli, &text)?;
    Ok(EXIT_OK)
}

fn parse_side(cli: &Cli, text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|tok| {
            let v = tok
                .trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad vertex {tok:?}")))?;
            vertex_in(cli, v)
        })
        .collect()
}

fn run_claim(cli: &Cli, args: &VerifyArgs) -> Result<Certificate, Failure> {
    let cert = match args.claim.as_str() {
        "thm1.2" | "extremal" => verify::verify_extremal(
            need(args.n, "-n")?,
            need(args.r, "-r")?,
        )?,
        "thm1.1" | "kz" => verify::verify_kahn_zhao(
            need(args.n, "-n")?,
            need(args.d.or(args.r), "-d")?,
        )?,
        "lem2.9" | "gadget-cap" => verify::verify_gadget_cap(
            need(args.p_max, "--p-max")?,
            need(args.q_max, "--q-max")?,
        )?,
        "lem2.10" | "matched-gadget-cap" => verify::verify_matched_gadget_cap(
            need(args.p_max, "--p-max")?,
            need(args.t_max, "--t-max")?,
            need(args.q_max, "--q-max")?,
        )?,
        "lem3.1" | "h-positivity" => verify::verify_h_positivity(need(args.r_max, "--r-max")?)?,
        "kk" | "kruskal-katona" => verify::verify_kruskal_katona(need(args.n_max, "--n-max")?)?,
        "identities" => verify::verify_identities(&load_graph(&args.graph)?)?,
        "split" => {
            let g = load_graph(&args.graph)?;
            let a = parse_side(cli, args.a.as_deref().ok_or_else(|| Failure::usage("missing -a"))?)?;
            let b = parse_side(cli, args.b.as_deref().ok_or_else(|| Failure::usage("missing -b"))?)?;
            verify::verify_split(&g, &a, &b)?
        }
        "edge-del" => {
            let g = load_graph(&args.graph)?;
            let u = vertex_in(cli, need(args.u, "-u")?)?;
            let v = vertex_in(cli, need(args.v, "-v")?)?;
            verify::verify_edge_deletion(&g, u, v)?
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown claim {other:?}; known: thm1.2, thm1.1, lem2.9, lem2.10, lem3.1, kk, identities, split, edge-del"
            )))
        }
    };
    Ok(cert)
}

fn cmd_batch(cli: &Cli, args: &BatchArgs) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(&args.manifest)
        .map_err(|e| Failure::io(format!("reading {}: {e}", args.manifest.display())))?;
    let mut certificates = Vec::new();
    let mut summary = Vec::new();
    let mut worst = EXIT_OK;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| Failure::usage(format!("manifest line {}: {e}", lineno + 1)))?;
        let vargs = row_to_args(&row)
            .map_err(|f| Failure::usage(format!("manifest line {}: {}", lineno + 1, f.message)))?;
        let cert = run_claim(cli, &vargs)?;
        let code = verdict_code(cert.verdict);
        summary.push(format!(
            "{:<24} {:?} ({} classes)",
            vargs.claim, cert.verdict, cert.classes_examined
        ));
        worst = match (worst, code) {
            (EXIT_REFUTED, _) | (_, EXIT_REFUTED) => EXIT_REFUTED,
            (EXIT_PARTIAL, _) | (_, EXIT_PARTIAL) => EXIT_PARTIAL,
            _ => EXIT_OK,
        };
        certificates.push(serde_json::to_value(&cert).expect("serializable"));
    }
    for line in &summary {
        eprintln!("{line}");
    }
    emit(
        cli,
        &serde_json::to_string_pretty(&certificates).expect("serializable"),
    )?;
    Ok(worst)
}

fn row_to_args(row: &serde_json::Value) -> Result<VerifyArgs, Failure> {
    let claim = row
        .get("claim")
        .and_then(|v| v.as_str())
        .ok_or_else(|| Failure::usage("row is missing a \"claim\" string"))?
        .to_string();
    let num = |key: &str| row.get(key).and_then(|v| v.as_u64()).map(|v| v as usize);
    let s = |key: &str| row.get(key).and_then(|v| v.as_str()).map(String::from);
    Ok(VerifyArgs {
        claim,
        graph: GraphInput {
            g6: s("g6"),
            input: s("input").map(PathBuf::from),
        },
        n: num("n"),
        r: num("r"),
        d: num("d"),
        n_max: num("n_max"),
        r_max: num("r_max"),
        p_max: num("p_max"),
        t_max: num("t_max"),
        q_max: num("q_max"),
        a: s("a"),
        b: s("b"),
        u: num("u"),
        v: num("v"),
    })
}
