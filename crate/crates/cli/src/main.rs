//! Command-line front end: recognize cographs, solve deletion problems,
//! generate reduction instances, verify solutions, classify excluded
//! subgraphs, and generate test instances.
//!
//! Exit codes: 0 for positive answers, 1 for negative or infinite answers and
//! domain rejections (each printed with a witness), 2 for usage and parse
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use clustervd::cotree::{binarize, build_cotree, parse_cotree, serialize_cotree, BinaryCotree};
use clustervd::dp::{solve_binary, Method, Solution, Variant};
use clustervd::extint::ExtInt;
use clustervd::gen;
use clustervd::graph::Graph;
use clustervd::io::{format_graph, parse_graph};
use clustervd::oracle::{
    branch_cvd, branch_cvd_forced, brute_min, brute_min_forced, verify, TargetPredicate,
    VerifyOutcome,
};
use clustervd::patterns::PatternWitness;
use clustervd::reduction::{
    amplify, cvd_to_ccvd, dichotomy_classify, subdivide3, vc_to_cvd_dense, ComplexitySide,
    ReducedInstance, ReductionError, ReductionKind,
};

const SCHEMA: &str = "clustervd/1";

#[derive(Parser)]
#[command(
    name = "clustervd",
    version,
    about = "Exact cluster vertex deletion: cotree DP, oracles, reductions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Cvd,
    Ccvd,
    Clique,
    Cclique,
    Covc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyVariantArg {
    Cvd,
    Ccvd,
    Clique,
    Cclique,
    Covc,
    Vc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Cotree,
    Brute,
    Branch,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Graph,
    Cotree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKindArg {
    Dense,
    Subdiv3,
    Amplify,
    CcvdGadget,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKindArg {
    Path,
    Cycle,
    Grid,
    Gnp,
    RandomCograph,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the cotree of a cograph, or report an induced P4.
    Recognize {
        /// Graph file.
        input: PathBuf,
        /// Write the cotree here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a deletion problem on a graph or cotree file.
    Solve {
        /// Graph or cotree file.
        input: PathBuf,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// cotree: the linear DP (cograph input); brute: subset oracle;
        /// branch: budgeted P3-branching decision.
        #[arg(long, value_enum, default_value = "cotree")]
        method: MethodArg,
        /// Minimize total vertex weight (cvd and covc only; needs a weighted
        /// graph file).
        #[arg(long)]
        weighted: bool,
        /// Decision budget, required by --method branch.
        #[arg(long)]
        budget: Option<u64>,
        /// Override the oracle size guards.
        #[arg(long)]
        force: bool,
        /// Input format; auto sniffs cotree via a leading '('.
        #[arg(long, value_enum, default_value = "auto")]
        format: FormatArg,
    },
    /// Generate a reduction instance with its JSON sidecar.
    Reduce {
        /// Source graph file.
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: ReduceKindArg,
        /// Source-side budget k.
        #[arg(long)]
        budget: u64,
        /// Subdivision rounds (amplify only).
        #[arg(long)]
        rounds: Option<u32>,
        /// Girth parameter g (ccvd-gadget only; rounded up to odd).
        #[arg(long)]
        girth: Option<u64>,
        /// Output prefix; writes PREFIX.graph and PREFIX.json.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a deletion set against a variant's requirements.
    Verify {
        /// Graph file.
        input: PathBuf,
        /// Comma-separated vertex ids (empty string for the empty set).
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        variant: VerifyVariantArg,
    },
    /// Classify an excluded induced subgraph as polynomial or NP-complete.
    Classify {
        /// Pattern graph file.
        input: PathBuf,
    },
    /// Generate instance files (seed is logged in the header).
    Gen {
        #[arg(long, value_enum)]
        kind: GenKindArg,
        /// Vertex count (path, cycle, gnp) or leaf count (random-cograph).
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for gnp.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
        /// Cotree output path for random-cograph (default: OUTPUT.cotree).
        #[arg(long)]
        cotree_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Recognize { input, output } => cmd_recognize(&input, output.as_deref()),
        Cmd::Solve {
            input,
            variant,
            method,
            weighted,
            budget,
            force,
            format,
        } => cmd_solve(&input, variant, method, weighted, budget, force, format),
        Cmd::Reduce {
            input,
            kind,
            budget,
            rounds,
            girth,
            output,
        } => cmd_reduce(&input, kind, budget, rounds, girth, &output),
        Cmd::Verify {
            input,
            set,
            variant,
        } => cmd_verify(&input, &set, variant),
        Cmd::Classify { input } => cmd_classify(&input),
        Cmd::Gen {
            kind,
            n,
            p,
            rows,
            cols,
            seed,
            output,
            cotree_out,
        } => cmd_gen(kind, n, p, rows, cols, seed, &output, cotree_out.as_deref()),
    };
    ExitCode::from(code)
}

fn usage_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn read_file(path: &Path) -> Result<String, u8> {
    fs::read_to_string(path).map_err(|e| usage_error(format_args!("{}: {e}", path.display())))
}

fn read_graph_file(path: &Path) -> Result<Graph, u8> {
    let text = read_file(path)?;
    parse_graph(&text).map_err(|e| usage_error(format_args!("{}: {e}", path.display())))
}

enum SolveInput {
    Graph(Graph),
    Cotree(BinaryCotree),
}

fn read_solve_input(path: &Path, format: FormatArg) -> Result<SolveInput, u8> {
    let text = read_file(path)?;
    let looks_like_cotree = {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) => l.starts_with('(') || l.split_whitespace().count() == 1,
            None => false,
        }
    };
    let as_cotree = match format {
        FormatArg::Graph => false,
        FormatArg::Cotree => true,
        FormatArg::Auto => looks_like_cotree,
    };
    if as_cotree {
        let t = parse_cotree(&text)
            .map_err(|e| usage_error(format_args!("{}: {e}", path.display())))?;
        Ok(SolveInput::Cotree(binarize(&t)))
    } else {
        let g =
            parse_graph(&text).map_err(|e| usage_error(format_args!("{}: {e}", path.display())))?;
        Ok(SolveInput::Graph(g))
    }
}

fn p4_report(w: &PatternWitness) -> String {
    let ids: Vec<String> = w.vertices.iter().map(usize::to_string).collect();
    format!("induced-p4: {}", ids.join(" "))
}

fn cmd_recognize(input: &Path, output: Option<&Path>) -> u8 {
    let g = match read_graph_file(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if g.n() == 0 {
        return usage_error("the empty graph has no cotree");
    }
    match build_cotree(&g) {
        Ok(t) => {
            let text = serialize_cotree(&t);
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(path, text + "\n") {
                        return usage_error(format_args!("{}: {e}", path.display()));
                    }
                }
                None => println!("{text}"),
            }
            0
        }
        Err(w) => {
            println!("{}", p4_report(&w));
            1
        }
    }
}

fn solution_json(sol: &Solution, decision: Option<(&str, u64)>) -> serde_json::Value {
    let mut v = json!({
        "schema": SCHEMA,
        "variant": sol.variant,
        "value": sol.value,
        "set": sol.set,
        "weighted": sol.weighted,
        "method": sol.method,
    });
    if let Some((d, budget)) = decision {
        v["decision"] = json!(d);
        v["budget"] = json!(budget);
    }
    v
}

fn variant_of(arg: VariantArg) -> Variant {
    match arg {
        VariantArg::Cvd => Variant::Cvd,
        VariantArg::Ccvd => Variant::ConnectedCvd,
        VariantArg::Clique => Variant::CliqueDeletion,
        VariantArg::Cclique => Variant::ConnectedCliqueDeletion,
        VariantArg::Covc => Variant::ComplementVc,
    }
}

fn cmd_solve(
    input: &Path,
    variant: VariantArg,
    method: MethodArg,
    weighted: bool,
    budget: Option<u64>,
    force: bool,
    format: FormatArg,
) -> u8 {
    let variant = variant_of(variant);
    // Flag combinations are checked before any file is touched.
    if weighted && !matches!(variant, Variant::Cvd | Variant::ComplementVc) {
        return usage_error("--weighted is only supported with --variant cvd or covc");
    }
    if method == MethodArg::Branch {
        if variant != Variant::Cvd {
            return usage_error("--method branch only decides --variant cvd");
        }
        if budget.is_none() {
            return usage_error("--method branch requires --budget");
        }
        if weighted {
            return usage_error("--method branch has no weighted mode");
        }
    }
    let parsed = match read_solve_input(input, format) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match method {
        MethodArg::Cotree => {
            let (tree, weights) = match &parsed {
                SolveInput::Cotree(t) => {
                    if weighted {
                        return usage_error(
                            "cotree files carry no weights; use a weighted graph file",
                        );
                    }
                    (t.clone(), None)
                }
                SolveInput::Graph(g) => {
                    if g.n() == 0 {
                        return usage_error("the empty graph has no cotree");
                    }
                    match build_cotree(g) {
                        Ok(t) => {
                            let weights = if weighted {
                                match g.weights() {
                                    Some(w) => Some(w.to_vec()),
                                    None => {
                                        return usage_error(
                                            "--weighted requested but the graph file has no weight line",
                                        )
                                    }
                                }
                            } else {
                                None
                            };
                            (binarize(&t), weights)
                        }
                        Err(w) => {
                            return usage_error(format_args!(
                                "input is not a cograph ({}); use --method brute or branch",
                                p4_report(&w)
                            ))
                        }
                    }
                }
            };
            match solve_binary(&tree, weights.as_deref(), variant) {
                Ok(sol) => emit_solution(&sol, None),
                Err(e) => usage_error(e),
            }
        }
        MethodArg::Brute => {
            let g = match graph_of(parsed) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let weights = if weighted {
                match g.weights() {
                    Some(w) => Some(w.to_vec()),
                    None => {
                        return usage_error(
                            "--weighted requested but the graph file has no weight line",
                        )
                    }
                }
            } else {
                None
            };
            let target = TargetPredicate::for_variant(variant);
            let run = if force { brute_min_forced } else { brute_min };
            match run(&g, target, weights.as_deref()) {
                Ok(mut sol) => {
                    // The oracle tags by target predicate; echo the variant
                    // the caller asked for (covc and clique share a target).
                    sol.variant = variant;
                    emit_solution(&sol, None)
                }
                Err(e) => usage_error(e),
            }
        }
        MethodArg::Branch => {
            let k = budget.expect("validated above");
            let g = match graph_of(parsed) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let answer = if force {
                Ok(branch_cvd_forced(&g, k))
            } else {
                branch_cvd(&g, k)
            };
            match answer {
                Ok(Some(set)) => {
                    let sol = Solution {
                        variant: Variant::Cvd,
                        value: ExtInt::Fin(set.len() as u64),
                        set: Some(set),
                        weighted: false,
                        method: Method::Branch,
                    };
                    println!("{}", solution_json(&sol, Some(("yes", k))));
                    0
                }
                Ok(None) => {
                    println!(
                        "{}",
                        json!({
                            "schema": SCHEMA,
                            "variant": Variant::Cvd,
                            "value": null,
                            "set": null,
                            "weighted": false,
                            "method": Method::Branch,
                            "decision": "no",
                            "budget": k,
                        })
                    );
                    1
                }
                Err(e) => usage_error(e),
            }
        }
    }
}

fn graph_of(parsed: SolveInput) -> Result<Graph, u8> {
    match parsed {
        SolveInput::Graph(g) => Ok(g),
        SolveInput::Cotree(t) => Ok(t.expand()),
    }
}

fn emit_solution(sol: &Solution, decision: Option<(&str, u64)>) -> u8 {
    println!("{}", solution_json(sol, decision));
    u8::from(!sol.value.is_finite())
}

fn cmd_reduce(
    input: &Path,
    kind: ReduceKindArg,
    budget: u64,
    rounds: Option<u32>,
    girth: Option<u64>,
    output: &Path,
) -> u8 {
    // Flag combinations are checked before any file is touched.
    if kind == ReduceKindArg::Amplify && rounds.is_none() {
        return usage_error("--kind amplify requires --rounds");
    }
    if kind == ReduceKindArg::CcvdGadget && girth.is_none() {
        return usage_error("--kind ccvd-gadget requires --girth");
    }
    let g = match read_graph_file(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let result: Result<ReducedInstance, ReductionError> = match kind {
        ReduceKindArg::Dense => Ok(vc_to_cvd_dense(&g, budget)),
        ReduceKindArg::Subdiv3 => subdivide3(&g, budget),
        ReduceKindArg::Amplify => amplify(&g, budget, rounds.expect("validated above")),
        ReduceKindArg::CcvdGadget => cvd_to_ccvd(&g, budget, girth.expect("validated above")),
    };
    let ri = match result {
        Ok(ri) => ri,
        Err(e @ ReductionError::TriangleFound(_)) | Err(e @ ReductionError::NotBipartite) => {
            println!("rejected: {e}");
            return 1;
        }
        Err(e) => return usage_error(e),
    };

    let graph_path = output.with_extension("graph");
    let json_path = output.with_extension("json");
    if let Err(e) = fs::write(&graph_path, format_graph(&ri.produced)) {
        return usage_error(format_args!("{}: {e}", graph_path.display()));
    }
    let (rounds, gadget_girth) = match ri.kind {
        ReductionKind::Amplify { rounds } => (Some(rounds), None),
        ReductionKind::CcvdGadget { gadget_girth } => (None, Some(gadget_girth)),
        _ => (None, None),
    };
    let sidecar = json!({
        "schema": SCHEMA,
        "kind": ri.kind,
        "k": ri.source_budget,
        "k_prime": ri.produced_budget,
        "rounds": rounds,
        "gadget_girth": gadget_girth,
        "counts": {
            "source_n": ri.source.n(),
            "source_m": ri.source.m(),
            "produced_n": ri.produced.n(),
            "produced_m": ri.produced.m(),
        },
        "vertex_origin": ri.vertex_origin,
        "black_set": ri.black_set,
    });
    if let Err(e) = fs::write(&json_path, serde_json::to_string_pretty(&sidecar).unwrap()) {
        return usage_error(format_args!("{}: {e}", json_path.display()));
    }
    println!(
        "wrote {} ({} vertices, {} edges, k'={}) and {}",
        graph_path.display(),
        ri.produced.n(),
        ri.produced.m(),
        ri.produced_budget,
        json_path.display()
    );
    0
}

fn cmd_verify(input: &Path, set: &str, variant: VerifyVariantArg) -> u8 {
    let g = match read_graph_file(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut vertices = Vec::new();
    for tok in set.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match tok.parse::<usize>() {
            Ok(v) => vertices.push(v),
            Err(_) => return usage_error(format_args!("bad vertex {tok:?} in --set")),
        }
    }
    let variant = match variant {
        VerifyVariantArg::Cvd => Variant::Cvd,
        VerifyVariantArg::Ccvd => Variant::ConnectedCvd,
        VerifyVariantArg::Clique => Variant::CliqueDeletion,
        VerifyVariantArg::Cclique => Variant::ConnectedCliqueDeletion,
        VerifyVariantArg::Covc => Variant::ComplementVc,
        VerifyVariantArg::Vc => Variant::VertexCover,
    };
    match verify(&g, &vertices, variant) {
        Ok(VerifyOutcome::Accept) => {
            println!("{}", json!({ "schema": SCHEMA, "verdict": "accept" }));
            0
        }
        Ok(VerifyOutcome::Reject(reason)) => {
            println!(
                "{}",
                json!({ "schema": SCHEMA, "verdict": "reject", "reason": reason.to_string() })
            );
            1
        }
        Err(e) => usage_error(e),
    }
}

fn cmd_classify(input: &Path) -> u8 {
    let g = match read_graph_file(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let verdict = dichotomy_classify(&g);
    let side = match verdict.side {
        ComplexitySide::Polynomial => "polynomial",
        ComplexitySide::NpComplete => "np-complete",
    };
    println!(
        "{}",
        json!({ "schema": SCHEMA, "side": side, "witness": verdict.witness })
    );
    0
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    kind: GenKindArg,
    n: Option<usize>,
    p: Option<f64>,
    rows: Option<usize>,
    cols: Option<usize>,
    seed: u64,
    output: &Path,
    cotree_out: Option<&Path>,
) -> u8 {
    let need_n = || n.ok_or_else(|| usage_error("this kind requires --n"));
    let mut header = format!("# clustervd gen seed={seed}\n");
    let (graph, cotree_text) = match kind {
        GenKindArg::Path => {
            let n = match need_n() {
                Ok(n) => n,
                Err(code) => return code,
            };
            header.push_str(&format!("# kind=path n={n}\n"));
            (Graph::path(n), None)
        }
        GenKindArg::Cycle => {
            let n = match need_n() {
                Ok(n) => n,
                Err(code) => return code,
            };
            if n < 3 {
                return usage_error("--kind cycle requires --n >= 3");
            }
            header.push_str(&format!("# kind=cycle n={n}\n"));
            (Graph::cycle(n), None)
        }
        GenKindArg::Grid => {
            let (Some(rows), Some(cols)) = (rows, cols) else {
                return usage_error("--kind grid requires --rows and --cols");
            };
            header.push_str(&format!("# kind=grid rows={rows} cols={cols}\n"));
            (Graph::grid(rows, cols), None)
        }
        GenKindArg::Gnp => {
            let n = match need_n() {
                Ok(n) => n,
                Err(code) => return code,
            };
            let Some(p) = p else {
                return usage_error("--kind gnp requires --p");
            };
            if !(0.0..=1.0).contains(&p) {
                return usage_error("--p must lie in [0, 1]");
            }
            header.push_str(&format!("# kind=gnp n={n} p={p}\n"));
            (gen::gnp(n, p, seed), None)
        }
        GenKindArg::RandomCograph => {
            let n = match need_n() {
                Ok(n) => n,
                Err(code) => return code,
            };
            if n == 0 {
                return usage_error("--kind random-cograph requires --n >= 1");
            }
            header.push_str(&format!("# kind=random-cograph n={n}\n"));
            let (t, g) = gen::random_cograph(n, seed);
            (g, Some(serialize_cotree(&t)))
        }
    };
    let body = header + &format_graph(&graph);
    if let Err(e) = fs::write(output, body) {
        return usage_error(format_args!("{}: {e}", output.display()));
    }
    if let Some(text) = cotree_text {
        let default_path = output.with_extension("cotree");
        let path = cotree_out.unwrap_or(&default_path);
        // The cotree grammar has no comment lines; the seed note lives in the
        // graph file only.
        if let Err(e) = fs::write(path, text + "\n") {
            return usage_error(format_args!("{}: {e}", path.display()));
        }
        println!("wrote {} and {}", output.display(), path.display());
    } else {
        println!("wrote {}", output.display());
    }
    0
}
